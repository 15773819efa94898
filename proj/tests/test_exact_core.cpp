#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exact_core.hpp"

using namespace sumsq;

TEST_CASE("bernoulli values") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == frac(-1, 2));
    CHECK(bernoulli(2) == frac(1, 6));
    CHECK(bernoulli(12) == frac(-691, 2730));
    for (unsigned n = 3; n < 40; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("bernoulli recurrence holds") {
    for (unsigned n = 1; n <= 60; ++n) {
        Rational s = 0;
        for (unsigned k = 0; k <= n; ++k) s += Rational(binomial(n + 1, k)) * bernoulli(k);
        CHECK(s == 0);
    }
}

TEST_CASE("euler numbers") {
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(4) == 5);
    CHECK(euler_number(6) == -61);
    CHECK(euler_number(8) == 1385);
    CHECK(euler_number(5) == 0);
    for (unsigned n = 2; n <= 40; n += 2) {
        Integer s = 0;
        for (unsigned k = 0; k <= n; k += 2) s += binomial(n, k) * euler_number(k);
        CHECK(s == 0);
    }
}

TEST_CASE("constant sequences") {
    CHECK(c_coeff(1) == frac(1, 8));
    CHECK(c_coeff(2) == frac(-1, 16));
    CHECK(c_coeff(3) == frac(1, 8));
    CHECK(16 * c_coeff(1) == 2);
    CHECK(16 * c_coeff(2) == -1);
    CHECK(16 * c_coeff(3) == 2);
    CHECK(a_coeff(1) == frac(-1, 16));
    CHECK(a_coeff(2) == frac(1, 8));
    CHECK(a_coeff(3) == frac(-17, 32));
    CHECK(b_coeff(1) == frac(1, 4));
    CHECK(b_coeff(2) == frac(-1, 4));
    CHECK(b_coeff(3) == frac(5, 4));
    CHECK(b_coeff(4) == frac(-61, 4));
}

TEST_CASE("constant sequences alternate") {
    for (unsigned i = 1; i <= 20; ++i) {
        int odd = (i % 2 == 1) ? 1 : -1;
        CHECK(sgn(c_coeff(i)) == odd);
        CHECK(sgn(a_coeff(i)) == -odd);
        CHECK(sgn(b_coeff(i)) == odd);
    }
}

TEST_CASE("index zero is rejected") {
    CHECK_THROWS_AS(c_coeff(0), Error);
    CHECK_THROWS_AS(a_coeff(0), Error);
    CHECK_THROWS_AS(b_coeff(0), Error);
}

TEST_CASE("rational text round trip") {
    CHECK(to_string(frac(-691, 2730)) == "-691/2730");
    CHECK(to_string(frac(4, 2)) == "2");
    CHECK(parse_rational("-6/4") == frac(-3, 2));
    CHECK(parse_rational("17") == 17);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("partitions ignore trailing zeros") {
    Partition a({2, 1});
    Partition b({2, 1, 0, 0});
    CHECK(a == b);
    CHECK(!(a == Partition({2})));
    CHECK(a.length() == 2);
    CHECK(b.size() == 3);
    CHECK(b.valid());
    CHECK(!Partition({1, 2}).valid());
    CHECK(Partition() == Partition({0}));
}
