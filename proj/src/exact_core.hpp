#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "errors.hpp"

namespace sumsq {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical "num/den" text, or "num" when the denominator is 1.
std::string to_string(const Rational& r);
// Canonicalized n/d; mpq_class(n, d) alone does not reduce.
Rational frac(const Integer& n, const Integer& d);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s);

Integer factorial(unsigned n);
Integer binomial(long n, long k);
Rational pow(const Rational& base, long e);
Integer ipow(long base, unsigned long e);

// B_n from t/(e^t - 1); B_1 = -1/2.
Rational bernoulli(unsigned n);
// E_n from 2e^t/(e^{2t}+1); zero for odd n.
Integer euler_number(unsigned n);

// c_i = (-1)^{i-1} (2^{2i}-1)/(4i) |B_{2i}|
Rational c_coeff(unsigned i);
// a_i = (-1)^i (2^{2i+2}-1)/(4(i+1)) |B_{2i+2}|
Rational a_coeff(unsigned i);
// b_i = (-1)^{i-1} |E_{2i-2}| / 4
Rational b_coeff(unsigned i);

// Weakly decreasing nonnegative parts; trailing zeros are ignored by ==.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    bool valid() const;
    int length() const;  // number of nonzero parts
    int size() const;    // sum of parts
    int operator[](size_t i) const { return i < parts.size() ? parts[i] : 0; }
    bool operator==(const Partition& o) const;
    std::string str() const;
};

}  // namespace sumsq
