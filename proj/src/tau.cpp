#include <map>
#include <mutex>

#include "lambert_theta.hpp"

namespace sumsq {

TauMethod parse_tau_method(const std::string& s) {
    static const std::map<std::string, TauMethod> names = {
        {"eta", TauMethod::Eta},         {"eq_1_15", TauMethod::Eq1_15}, {"eq_1_29", TauMethod::Eq1_29},
        {"eq_1_30", TauMethod::Eq1_30}, {"eq_1_31", TauMethod::Eq1_31}, {"eq_1_32", TauMethod::Eq1_32},
        {"eq_1_33", TauMethod::Eq1_33}};
    auto it = names.find(s);
    if (it == names.end()) throw Error(ErrorKind::Domain, "unknown tau method: " + s);
    return it->second;
}

std::string tau_method_name(TauMethod m) {
    switch (m) {
        case TauMethod::Eta: return "eta";
        case TauMethod::Eq1_15: return "eq_1_15";
        case TauMethod::Eq1_29: return "eq_1_29";
        case TauMethod::Eq1_30: return "eq_1_30";
        case TauMethod::Eq1_31: return "eq_1_31";
        case TauMethod::Eq1_32: return "eq_1_32";
        case TauMethod::Eq1_33: return "eq_1_33";
    }
    return "?";
}

namespace {

using Table = std::shared_ptr<const std::vector<Integer>>;

Table sig(unsigned r, long n) { return divisor_table(DivisorKind::Sigma, r, n); }
Table dag(unsigned r, long n) { return divisor_table(DivisorKind::SigmaDagger, r, n); }

// sum_{m=1}^{n-1} a(m) b(n-m)
Integer convolve_at(const Table& a, const Table& b, long n) {
    Integer s = 0;
    for (long m = 1; m < n; ++m) s += (*a)[m] * (*b)[n - m];
    return s;
}

Integer eta_tau(long n) {
    static std::mutex mu;
    static std::vector<Integer> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<long>(cache.size()) <= n) {
        long nq = std::max(2 * n, 64L);
        QX e = euler_product({{1, 24}}, 4 * nq);
        cache.assign(static_cast<size_t>(nq + 1), 0);
        for (long k = 1; k <= nq; ++k) cache[k] = e.q_coeff(k - 1).get_num();
    }
    return cache[n];
}

// sum over m1 > m2 >= 1 of w(m1, m2) * #{y1, y2 >= 1 : m1 y1 + m2 y2 = n}
template <class W>
Integer diophantine_sum(long n, W weight) {
    __int128 acc = 0;
    Integer big = 0;
    for (long m1 = 2; m1 < n; ++m1) {
        for (long m2 = 1; m2 < m1 && m1 + m2 <= n; ++m2) {
            long count = 0;
            for (long r = n - m1; r >= m2; r -= m1)
                if (r % m2 == 0) ++count;
            if (count == 0) continue;
            __int128 t = weight(m1, m2) * count;
            acc += t;
            if (acc > (__int128(1) << 120) || acc < -(__int128(1) << 120)) {
                Integer hi = static_cast<long>(acc >> 64);
                Integer lo = static_cast<unsigned long>(acc & 0xffffffffffffffffULL);
                big += (hi << 64) + lo;
                acc = 0;
            }
        }
    }
    Integer hi = static_cast<long>(acc >> 64);
    Integer lo = static_cast<unsigned long>(static_cast<unsigned __int128>(acc) & 0xffffffffffffffffULL);
    return big + (hi << 64) + lo;
}

__int128 vdm_weight(long m1, long m2) {
    __int128 p = static_cast<__int128>(m1) * m2;
    __int128 d = static_cast<__int128>(m1) * m1 - static_cast<__int128>(m2) * m2;
    return p * p * p * d * d;
}

Integer require_integer(const Rational& v, long n, TauMethod m) {
    if (v.get_den() != 1)
        throw Error(ErrorKind::Domain, tau_method_name(m) + " gave a non-integer value", n);
    return v.get_num();
}

}  // namespace

Integer tau(long n, TauMethod method) {
    if (n < 1) throw Error(ErrorKind::Domain, "tau needs n >= 1", n);
    bool odd = n % 2 == 1;
    switch (method) {
        case TauMethod::Eta: return eta_tau(n);
        case TauMethod::Eq1_15: {
            auto s5 = sig(5, n), s11 = sig(11, n);
            Rational v = frac(65, 756) * Rational((*s11)[n]) + frac(691, 756) * Rational((*s5)[n]) -
                         frac(691, 3) * Rational(convolve_at(s5, s5, n));
            return require_integer(v, n, method);
        }
        case TauMethod::Eq1_29: {
            if (!odd) throw Error(ErrorKind::Domain, "eq_1_29 needs odd n", n);
            auto s3 = sig(3, n), s5 = sig(5, n), s7 = sig(7, n), s11 = sig(11, n);
            auto d3 = dag(3, n), d5 = dag(5, n), d7 = dag(7, n);
            Rational v = frac(1, 72) * Rational(17 * 691 * (*s3)[n] + 8 * 691 * (*s5)[n] +
                                                2 * 691 * (*s7)[n] - 9 * (*s11)[n]) -
                         frac(691 * 4, 9) * Rational(convolve_at(d3, d7, n) - convolve_at(d5, d5, n));
            return require_integer(v / 259, n, method);
        }
        case TauMethod::Eq1_30: {
            if (!odd || n < 3) throw Error(ErrorKind::Domain, "eq_1_30 needs odd n >= 3", n);
            Integer dsum = 0;
            for (long d = 1; d <= n; ++d)
                if (n % d == 0) dsum += ipow(d, 3) * (17 + 8 * ipow(d, 2) + 2 * ipow(d, 4));
            Integer dio = diophantine_sum(n, [](long a, long b) {
                __int128 w = vdm_weight(a, b);
                return ((a + b) % 2) ? -w : w;
            });
            Rational v = frac(-1, 8) * Rational((*sig(11, n))[n]) + frac(691, 72) * Rational(dsum) -
                         frac(691 * 4, 9) * Rational(dio);
            return require_integer(v / 259, n, method);
        }
        case TauMethod::Eq1_31: {
            auto s3 = sig(3, n), s7 = sig(7, n), s11 = sig(11, n);
            Rational v = frac(691, 1800) * Rational((*s3)[n]) + frac(691, 900) * Rational((*s7)[n]) -
                         frac(91, 600) * Rational((*s11)[n]) +
                         frac(2764, 15) * Rational(convolve_at(s3, s7, n));
            return require_integer(v, n, method);
        }
        case TauMethod::Eq1_32: {
            auto s3 = sig(3, n), s5 = sig(5, n), s7 = sig(7, n), s11 = sig(11, n);
            Integer lead = 3 * 7 * 691 * (*s3)[n] + 8 * 5 * 691 * (*s5)[n] + 2 * 3 * 7 * 691 * (*s7)[n] -
                           13 * 241 * (*s11)[n];
            Rational v = frac(lead, 8 * 243 * 5 * 7) +
                         frac(691 * 4, 27) * Rational(convolve_at(s3, s7, n) - convolve_at(s5, s5, n));
            return require_integer(v, n, method);
        }
        case TauMethod::Eq1_33: {
            Integer dsum = 0;
            for (long d = 1; d <= n; ++d) {
                if (n % d) continue;
                Integer d2 = ipow(d, 2);
                dsum += ipow(d, 3) * (3 * 7 * 691 + 8 * 5 * 691 * d2 + 2 * 3 * 7 * 691 * d2 * d2 -
                                      13 * 241 * d2 * d2 * d2 * d2);
            }
            Integer dio = diophantine_sum(n, vdm_weight);
            Rational v = frac(dsum, 8 * 243 * 5 * 7) + frac(691 * 4, 27) * Rational(dio);
            return require_integer(v, n, method);
        }
    }
    throw Error(ErrorKind::Domain, "unknown tau method");
}

bool tau_relation_holds(long n) {
    if (n < 1 || n % 2 == 0) throw Error(ErrorKind::Domain, "relation is stated for odd n", n);
    auto s3 = sig(3, n), s5 = sig(5, n), s7 = sig(7, n), s11 = sig(11, n);
    auto d3 = dag(3, n), d5 = dag(5, n), d7 = dag(7, n);
    Integer lhs = 2160 * (convolve_at(d3, d7, n) - convolve_at(d5, d5, n)) +
                  186480 * (convolve_at(s3, s7, n) - convolve_at(s5, s5, n));
    Integer rhs = 759 * (*s3)[n] - 200 * (*s5)[n] - 642 * (*s7)[n] + 83 * (*s11)[n];
    return lhs == rhs;
}

}  // namespace sumsq
