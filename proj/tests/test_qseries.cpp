#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qseries.hpp"
#include "qx_json.hpp"

using namespace sumsq;

namespace {

QX theta3_local(long order) {
    QX t(order);
    for (long j = -100; j <= 100; ++j)
        if (4 * j * j < order) t[4 * j * j] += 1;
    return t;
}

QX random_qx(std::mt19937& g, long order) {
    std::uniform_int_distribution<int> d(-9, 9);
    QX a(order);
    for (long e = 0; e < order; ++e) a[e] = frac(d(g), 1 + (d(g) + 9) % 5);
    return a;
}

}  // namespace

TEST_CASE("basic ring operations") {
    long N = 40;
    QX one_plus_q = QX::constant(1, N) + QX::monomial(4, 1, N);
    QX one_minus_q = QX::constant(1, N) - QX::monomial(4, 1, N);
    CHECK(one_plus_q * one_minus_q == QX::constant(1, N) - QX::monomial(8, 1, N));
    CHECK((one_plus_q * QX(N)).is_zero());
    CHECK((one_plus_q * QX(10)).order() == 10);
}

TEST_CASE("theta3 squared and powers") {
    QX t = theta3_local(20);
    QX t2 = t * t;
    CHECK(t2.q_coeff(0) == 1);
    CHECK(t2.q_coeff(1) == 4);
    CHECK(t2.q_coeff(2) == 4);
    CHECK(t2.q_coeff(3) == 0);
    CHECK(t2.q_coeff(4) == 4);
    QX t8 = theta3_local(12);
    CHECK(qx_pow(t8, 4).q_coeff(1) == 8);
    CHECK(qx_pow(t8, 8).q_coeff(2) == 112);
    CHECK(qx_pow(t8, 0) == QX::constant(1, 12));
}

TEST_CASE("powers agree with the square-count oracle") {
    long Nq = 120;
    QX t = theta3_local(4 * Nq + 4);
    for (int s : {1, 2, 4, 8, 16, 24}) {
        auto counts = oracle::count_representations(oracle::CountKind::Squares, s, Nq);
        QX p = qx_pow(t, s);
        for (long n = 0; n <= Nq; ++n) CHECK(p.q_coeff(n) == Rational(counts[n]));
    }
}

TEST_CASE("inversion") {
    long N = 40;
    CHECK(qx_invert(QX::constant(1, N)) == QX::constant(1, N));
    QX g = qx_invert(QX::constant(1, N) - QX::monomial(4, 1, N));
    for (long e = 0; e < N; ++e) CHECK(g[e] == (e % 4 == 0 ? 1 : 0));
    CHECK_THROWS_AS(qx_invert(QX::monomial(4, 1, N)), Error);
    std::mt19937 gen(7);
    for (int trial = 0; trial < 5; ++trial) {
        QX a = random_qx(gen, 30);
        a[0] = 3;
        CHECK(a * qx_invert(a) == QX::constant(1, 30));
    }
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 4; ++trial) {
        QX a = random_qx(gen, 64), b = random_qx(gen, 64), c = random_qx(gen, 64);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        // independent double-loop convolution
        for (long n : {0L, 17L, 63L}) {
            Rational s = 0;
            for (long i = 0; i <= n; ++i) s += a[i] * b[n - i];
            CHECK((a * b)[n] == s);
        }
    }
}

TEST_CASE("dilation, twist, halving") {
    long N = 40;
    QX q = QX::monomial(4, 1, N);
    QX d = qx_dilate(q, 2);
    CHECK(d.order() == 80);
    CHECK(d[8] == 1);
    QX t = theta3_local(N);
    CHECK(qx_dilate(t, 1) == t);
    QX t4 = qx_twist(t);
    CHECK(t4.q_coeff(1) == -2);
    CHECK(t4.q_coeff(4) == 2);
    CHECK(qx_twist(t4) == t);
    CHECK_THROWS_AS(qx_twist(QX::monomial(2, 1, N)), Error);
    CHECK(qx_halve(qx_dilate(t, 2)) == t);
    CHECK_THROWS_AS(qx_halve(QX::monomial(1, 1, N)), Error);
}

TEST_CASE("shift and truncate") {
    QX a = QX::monomial(4, 5, 20);
    QX s = a.shift(-4);
    CHECK(s.order() == 16);
    CHECK(s[0] == 5);
    CHECK(a.shift(3)[7] == 5);
    CHECK(a.truncate(4).is_zero());
}

TEST_CASE("euler products") {
    long N = 4 * 30;
    QX e = euler_product({{1, 1}}, N);
    std::vector<int> expect(30, 0);
    for (long k = -10; k <= 10; ++k) {
        long p = k * (3 * k - 1) / 2;
        if (p < 30) expect[p] = (k % 2 == 0) ? 1 : -1;
    }
    for (long n = 0; n < 30; ++n) CHECK(e.q_coeff(n) == expect[n]);
    QX tau = euler_product({{1, 24}}, N).shift(4);
    long want[] = {1, -24, 252, -1472, 4830, -6048, -16744};
    for (int n = 1; n <= 7; ++n) CHECK(tau.q_coeff(n) == want[n - 1]);
    QX inv = euler_product({{2, -1}}, N) * euler_product({{2, 1}}, N);
    CHECK(inv == QX::constant(1, N));
}

TEST_CASE("json round trip") {
    QX a(12);
    a[0] = frac(-3, 7);
    a[5] = 12;
    auto j = qx_to_json(a);
    CHECK(j["order_quarter"] == 12);
    CHECK(j["coeffs"].size() == 2);
    CHECK(j["coeffs"][0]["v"] == "-3/7");
    CHECK(qx_from_json(j) == a);
    CHECK(qx_from_json(nlohmann::json::parse(j.dump())) == a);
}
