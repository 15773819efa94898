#pragma once

#include <vector>

#include "kpoly.hpp"
#include "qseries.hpp"

namespace sumsq {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Exact determinants. Rationals use ordinary elimination, polynomials use
// Bareiss fraction-free elimination, q-series use minor expansion (no
// division is available there). The 0x0 determinant is 1.
Rational determinant(Matrix<Rational> m);
KPoly determinant(Matrix<KPoly> m);
QX determinant(const Matrix<QX>& m, long order);

inline Rational one_like(const Rational&) { return 1; }
inline KPoly one_like(const KPoly&) { return 1; }
inline QX one_like(const QX& x) { return QX::constant(1, x.order()); }

inline Rational zero_like(const Rational&) { return 0; }
inline KPoly zero_like(const KPoly&) { return KPoly(); }
inline QX zero_like(const QX& x) { return QX(x.order()); }

// Division that must be exact in the ring; KPoly throws DomainError otherwise.
inline Rational ring_div(const Rational& a, const Rational& b) { return a / b; }
inline KPoly ring_div(const KPoly& a, const KPoly& b) { return exact_div(a, b); }

inline bool ring_is_zero(const Rational& a) { return a == 0; }
inline bool ring_is_zero(const KPoly& a) { return a.is_zero(); }
bool ring_is_zero(const QX& a);

namespace detail {

template <class T>
T det_dispatch(Matrix<T> m, const T& like) {
    if constexpr (std::is_same_v<T, QX>) {
        return determinant(m, like.order());
    } else {
        (void)like;
        return determinant(std::move(m));
    }
}

void require_length(size_t have, size_t need);

}  // namespace detail

// Sequences are coefficient lists of 1 + sum c_j w^j: seq[j] = c_j and
// seq[0] is ignored.

// H_n^{(m)}: det [c_{m+i+j}], 0 <= i,j < n.
template <class T>
T hankel(const std::vector<T>& seq, int n, int m) {
    detail::require_length(seq.size(), static_cast<size_t>(m + 2 * n - 1));
    const T& like = seq.back();
    if (n == 0) return one_like(like);
    Matrix<T> a(n, std::vector<T>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = seq[m + i + j];
    return detail::det_dispatch(std::move(a), like);
}

// chi_n: the H_{n+1}^{(1)} matrix without its next to last column and last row.
template <class T>
T chi(const std::vector<T>& seq, int n) {
    detail::require_length(seq.size(), static_cast<size_t>(2 * n + 1));
    const T& like = seq.back();
    if (n == 0) return zero_like(like);
    Matrix<T> a(n, std::vector<T>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j + 1 < n; ++j) a[i][j] = seq[1 + i + j];
        a[i][n - 1] = seq[1 + i + n];
    }
    return detail::det_dispatch(std::move(a), like);
}

}  // namespace sumsq
