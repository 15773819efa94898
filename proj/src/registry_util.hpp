#pragma once

#include <string>
#include <vector>

#include "identities.hpp"

// Pieces shared by the identity registries.
namespace sumsq::reg {

long as_long(const Rational& r);
// (-1)^e
Rational sign(long e);

// 1 + 24 sum r q^r/(1+q^r)
QX bracket_plus(long order);
// 1 - 24 sum (2r-1) q^{2r-1}/(1+q^{2r-1})
QX bracket_odd(long order);
// 2 + 24 sum 2r q^{2r}/(1+q^{2r})
QX bracket_even(long order);
// 1 + 24 sum r q^{2r}/(1+q^{2r})
QX bracket_q2(long order);

enum class Prod { None, FactOdd, FactEven, EvenSq, OddSq };

// prod_{r<=2n-1} r!, prod_{r<=2n} r!, prod_{r<n} (2r)!^2, prod_{r<=n} (2r-1)!^2
Integer product(Prod p, int n);

enum class Den { One, N4n2m1, Nn1_2n1, N2nm1, N2np1, TwoN2nm1 };

Integer denominator(Den d, long n);

// Constants of (-1)^{t n(n+1)/2 + s n + s0} 2^{a n^2 + b n + c} num / (den(n) prod(n)).
struct Pre {
    long t = 0, s = 0, s0 = 0, a = 0, b = 0, c = 0;
    long num = 1;
};

void add_pre(std::vector<NamedConstant>& k, const Pre& p, const std::string& pfx = "");
std::vector<NamedConstant> pre(const Pre& p);
Rational prefactor(const IdentityRecord& r, long n, Prod prod, Den den, const std::string& pfx = "");

}  // namespace sumsq::reg
