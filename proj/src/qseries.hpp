#pragma once

#include <utility>
#include <vector>

#include "exact_core.hpp"

namespace sumsq {

// Truncated power series in x = q^{1/4}. Coefficient i multiplies q^{i/4};
// exponents >= order() are unknown.
class QX {
public:
    QX() = default;
    explicit QX(long order) : c_(static_cast<size_t>(order > 0 ? order : 0)) {}

    static QX constant(const Rational& v, long order);
    // v * q^{e/4}
    static QX monomial(long e, const Rational& v, long order);

    long order() const { return static_cast<long>(c_.size()); }
    const Rational& operator[](long e) const { return c_[static_cast<size_t>(e)]; }
    Rational& operator[](long e) { return c_[static_cast<size_t>(e)]; }
    Rational coeff(long e) const;
    // Coefficient of q^n (quarter exponent 4n).
    Rational q_coeff(long n) const { return coeff(4 * n); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    // First nonzero exponent, or -1.
    long valuation() const;

    QX truncate(long order) const;
    // Multiply by q^{e/4}; e may be negative, in which case low terms are dropped.
    QX shift(long e) const;

    QX& operator+=(const QX& o);
    QX& operator-=(const QX& o);
    QX& operator*=(const Rational& s);

    bool operator==(const QX& o) const { return c_ == o.c_; }

private:
    std::vector<Rational> c_;
};

QX operator+(QX a, const QX& b);
QX operator-(QX a, const QX& b);
QX operator-(QX a);
QX operator*(const QX& a, const QX& b);
QX operator*(QX a, const Rational& s);
QX operator*(const Rational& s, QX a);

QX qx_pow(const QX& a, unsigned e);
QX qx_invert(const QX& a);
// x -> x^m.
QX qx_dilate(const QX& a, long m);
// q -> -q: coefficient at e gets (-1)^{e/4}; GridError if e is not a multiple of 4.
QX qx_twist(const QX& a);
// q -> q^{1/2}: exponent e -> e/2; GridError on odd e with nonzero coefficient.
QX qx_halve(const QX& a);

// prod (q^s; q^s)_inf^e over the pairs (s, e).
QX euler_product(const std::vector<std::pair<long, long>>& pairs, long order);

struct Mismatch {
    long exponent;
    Rational lhs, rhs;
};

// First exponent below min(order) at which a and b differ.
bool first_mismatch(const QX& a, const QX& b, Mismatch& out);

}  // namespace sumsq
