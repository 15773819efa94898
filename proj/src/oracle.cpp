#include "oracle.hpp"

namespace sumsq::oracle {

namespace {

std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    size_t n = a.size();
    std::vector<Integer> r(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < n; ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

}  // namespace

std::vector<Integer> count_representations(CountKind kind, int s, long n_max) {
    if (s < 1) throw Error(ErrorKind::Domain, "summand count must be positive", s);
    size_t n = static_cast<size_t>(n_max + 1);
    std::vector<Integer> base(n, 0);
    if (kind == CountKind::Squares) {
        for (long j = 0; j * j <= n_max; ++j) base[static_cast<size_t>(j * j)] += (j == 0 ? 1 : 2);
    } else {
        for (long j = 0; j * (j + 1) / 2 <= n_max; ++j) base[static_cast<size_t>(j * (j + 1) / 2)] += 1;
    }
    std::vector<Integer> result(n, 0);
    result[0] = 1;
    std::vector<Integer> p = base;
    int e = s;
    while (e) {
        if (e & 1) result = convolve(result, p);
        e >>= 1;
        if (e) p = convolve(p, p);
    }
    return result;
}

std::vector<Integer> tau_oracle(long n_max) {
    // coefficients of prod_{r=1}^{n_max} (1 - q^r)^24 up to q^{n_max-1}
    size_t n = static_cast<size_t>(n_max);
    std::vector<Integer> p(n, 0);
    p[0] = 1;
    for (size_t r = 1; r < n; ++r) {
        for (int k = 0; k < 24; ++k) {
            for (size_t i = n - 1; i >= r; --i) {
                p[i] -= p[i - r];
                if (i == r) break;
            }
        }
    }
    std::vector<Integer> tau(n + 1, 0);
    for (size_t i = 1; i <= n; ++i) tau[i] = p[i - 1];
    return tau;
}

Integer divisor_oracle(DivisorKind kind, unsigned r, long n) {
    if (n < 1) throw Error(ErrorKind::Domain, "divisor sum needs n >= 1", n);
    Integer s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Integer t = ipow(d, r);
        int sign = 1;
        if (kind == DivisorKind::SigmaDagger && d % 2 == 1) sign = -1;
        if (kind == DivisorKind::SigmaTilde && (d + n / d) % 2 == 1) sign = -1;
        s += sign * t;
    }
    return s;
}

}  // namespace sumsq::oracle
