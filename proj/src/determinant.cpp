#include "determinant.hpp"

#include <string>

namespace sumsq {

bool ring_is_zero(const QX& a) {
    for (long e = 0; e < a.order(); ++e)
        if (a[e] != 0) return false;
    return true;
}

namespace detail {

void require_length(size_t have, size_t need) {
    if (have < need)
        throw Error(ErrorKind::Length,
                    "sequence has " + std::to_string(have) + " entries, need " + std::to_string(need),
                    static_cast<long>(need));
}

}  // namespace detail

Rational determinant(Matrix<Rational> m) {
    size_t n = m.size();
    Rational det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

KPoly determinant(Matrix<KPoly> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    KPoly prev = 1;
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return KPoly();
        if (p != k) {
            std::swap(m[p], m[k]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

QX determinant(const Matrix<QX>& m, long order) {
    size_t n = m.size();
    if (n == 0) return QX::constant(1, order);
    if (n > 20) throw Error(ErrorKind::Domain, "q-series determinant too large", static_cast<long>(n));
    // dp[mask]: signed sum over ways to place the first popcount(mask) rows in
    // the columns of mask.
    std::vector<QX> dp(size_t{1} << n);
    std::vector<bool> set(dp.size(), false);
    dp[0] = QX::constant(1, order);
    set[0] = true;
    for (size_t mask = 0; mask < dp.size(); ++mask) {
        if (!set[mask]) continue;
        size_t r = static_cast<size_t>(__builtin_popcountll(mask));
        if (r == n) continue;
        for (size_t j = 0; j < n; ++j) {
            if (mask & (size_t{1} << j)) continue;
            if (ring_is_zero(m[r][j])) continue;
            int above = __builtin_popcountll(mask >> (j + 1));
            QX t = dp[mask] * m[r][j];
            if (above % 2) t = -t;
            size_t next = mask | (size_t{1} << j);
            if (set[next]) {
                dp[next] += t;
            } else {
                dp[next] = std::move(t);
                set[next] = true;
            }
        }
    }
    return set.back() ? dp.back() : QX(order);
}

}  // namespace sumsq
