#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "lambert_theta.hpp"
#include "oracle.hpp"
#include "schur.hpp"

using namespace sumsq;

namespace {

// Sum over semistandard tableaux of shape lambda with entries 1..p.
Rational ssyt_oracle(const std::vector<int>& lambda, const std::vector<Rational>& xs) {
    int p = static_cast<int>(xs.size());
    std::vector<std::pair<int, int>> cells;
    for (size_t r = 0; r < lambda.size(); ++r)
        for (int c = 0; c < lambda[r]; ++c) cells.push_back({static_cast<int>(r), c});
    std::vector<std::vector<int>> t(lambda.size());
    for (size_t r = 0; r < lambda.size(); ++r) t[r].assign(static_cast<size_t>(lambda[r]), 0);
    Rational total = 0;
    std::function<void(size_t, Rational)> rec = [&](size_t k, Rational w) {
        if (k == cells.size()) {
            total += w;
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= p; ++v) {
            t[r][c] = v;
            rec(k + 1, w * xs[static_cast<size_t>(v - 1)]);
        }
    };
    rec(0, 1);
    return total;
}

void check_pass(const std::string& id, int n, long order) {
    auto r = schur_form_identity(id, n, order);
    CHECK_MESSAGE(r.pass, report_line(r));
}

QX theta_side(Theta w, unsigned p, long order) { return theta_pow(w, Transform::Plain, p, order); }

}  // namespace

TEST_CASE("Schur functions: small values") {
    CHECK(schur_eval(Partition{}, std::vector<Rational>{2, 3}) == 1);
    CHECK(schur_eval(Partition({1}), std::vector<Rational>{2, 3, 7}) == 12);
    CHECK(schur_eval(Partition({2}), std::vector<Rational>{1, 1}) == 3);
    CHECK(schur_eval(Partition({2}), std::vector<Integer>{1, 1}) == 3);
    // more parts than variables
    CHECK(schur_eval(Partition({1, 1, 1}), std::vector<Rational>{1, 2}) == 0);
    CHECK_THROWS_AS(schur_eval(Partition({1, 2}), std::vector<Rational>{1, 2}), Error);
}

TEST_CASE("Schur functions against tableau enumeration") {
    std::mt19937 g(11);
    std::uniform_int_distribution<int> part(0, 3), val(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        int p = 1 + trial % 3;
        std::vector<int> lam;
        for (int i = 0; i < p; ++i) lam.push_back(part(g));
        std::sort(lam.rbegin(), lam.rend());
        std::vector<Rational> xs;
        for (int i = 0; i < p; ++i) xs.push_back(val(g));
        // every third trial forces a repeated argument
        if (trial % 3 == 2 && p > 1) xs[1] = xs[0];
        CHECK(schur_eval(Partition(lam), xs) == ssyt_oracle(lam, xs));
        // symmetric in the arguments
        std::vector<Rational> rev(xs.rbegin(), xs.rend());
        CHECK(schur_eval(Partition(lam), rev) == schur_eval(Partition(lam), xs));
    }
}

TEST_CASE("subsets and expansion partitions") {
    auto s = subsets(4, 2);
    CHECK(s.size() == 6);
    CHECK(s.front() == std::vector<int>{1, 2});
    CHECK(s.back() == std::vector<int>{3, 4});
    CHECK(subsets(3, 0).size() == 1);
    CHECK(complement({2, 4}, 5) == std::vector<int>{1, 3, 5});

    std::vector<long> c = {0, 1, 3, 5, 7};  // c_i = 2i - 1
    CHECK(expansion_partitions({1, 2, 3}, c, 2) == Partition({0, 0, 0}));
    CHECK(expansion_partitions({1, 3}, c, 2) == Partition({1, 0}));
    CHECK(expansion_partitions({4}, c, 2) == Partition({0}));
    // b_i = 2(i - 1) + 2 chi(i = n), n = 3
    std::vector<long> b = {0, 0, 2, 6};
    CHECK(expansion_partitions({1, 3}, b, 2) == Partition({2, 0}));
    CHECK(expansion_partitions({2, 3}, b, 2) == Partition({1, 0}));
    CHECK_THROWS_AS(expansion_partitions({1, 2}, c, 3), Error);
    try {
        expansion_partitions({1, 2}, c, 3);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Divisor);
    }
}

TEST_CASE("expansion engine equals the direct Lambert determinant") {
    struct Params {
        Rational A, B, C, D, E, F, G;
    };
    const std::vector<Params> params = {
        {1, 1, 0, 1, -1, 1, 0},
        {-1, 4, -2, frac(1, 2), 1, 2, -1},
        {1, 2, -1, 1, 1, 1, frac(-1, 2)},
        {1, 2, 0, frac(1, 2), 1, 1, 0},
        {2, 1, 1, 3, -1, 2, 1},
    };
    std::mt19937 g(5);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), gap(1, 2), start(0, 2);
    int checked = 0;
    for (size_t k = 0; k < params.size(); ++k) {
        for (int n = 1; n <= 3; ++n) {
            for (bool chi : {false, true}) {
                const Params& P = params[k];
                ExpansionConfig cfg;
                cfg.n = n;
                cfg.A = P.A, cfg.B = P.B, cfg.C = P.C, cfg.D = P.D, cfg.E = P.E, cfg.F = P.F, cfg.G = P.G;
                cfg.chi = chi;
                cfg.d_b = 1 + static_cast<long>(k % 2);
                cfg.d_c = 2 - static_cast<long>(k % 2);
                cfg.b.assign(1, 0);
                cfg.c.assign(1, 0);
                long bv = start(g), cv = start(g);
                for (int i = 1; i <= n; ++i) {
                    cfg.b.push_back(bv);
                    cfg.c.push_back(cv);
                    bv += cfg.d_b * gap(g);
                    cv += cfg.d_c * gap(g);
                }
                cfg.a.assign(static_cast<size_t>(2 * n + 2), Rational(0));
                for (size_t i = 1; i < cfg.a.size(); ++i) cfg.a[i] = frac(num(g), den(g));
                for (int p = 0; p <= n; ++p) {
                    for (const auto& S : subsets(n, p)) {
                        QX e = expand_lambert_det(cfg, S, 120), d = direct_lambert_det(cfg, S, 120);
                        CHECK_MESSAGE(e == d, "params " << k << " n " << n << " chi " << chi << " p " << p);
                        ++checked;
                    }
                }
            }
        }
    }
    CHECK(checked > 50);
    ExpansionConfig bad;
    bad.n = 2;
    bad.A = bad.B = bad.D = bad.E = bad.F = 1;
    bad.b = {0, 0, 3};
    bad.c = {0, 1, 3};
    bad.d_b = 2;
    bad.a.assign(5, Rational(1));
    CHECK_THROWS_AS(expand_lambert_det(bad, {1}, 40), Error);
    bad.d_b = 3;
    CHECK(expand_lambert_det(bad, {1, 2}, 0).order() == 0);
}

TEST_CASE("Schur forms reproduce the inclusion-exclusion determinant forms") {
    for (auto [s7, s5] : {std::pair{"THM_7_1", "THM_5_4"}, std::pair{"THM_7_2", "THM_5_6"}}) {
        const auto& a = schur_record(s7);
        const auto& b = identity_record(s5);
        for (int n = 1; n <= 3; ++n) CHECK_MESSAGE(a.rhs(a, n, 160) == b.rhs(b, n, 160), s7 << " n " << n);
    }
}

TEST_CASE("m^2-weighted sums are term-by-term multiples") {
    MultiSum base;
    base.y_odd = base.m_odd = true;
    for (int pp : {0, 1, 2, 3}) {
        for (bool half : {false, true}) {
            MultiSum plain = base;
            plain.prod_pow = pp;
            if (half) {
                plain.ysign = YSign::Half;
                plain.kappa = frac(1, 2);
            }
            MultiSum weighted = plain;
            weighted.sq_sum = true;
            for (int n = 1; n <= 3; ++n) {
                auto a = multisum_terms(plain, n, n, 200), b = multisum_terms(weighted, n, n, 200);
                REQUIRE(a.size() == b.size());
                for (size_t i = 0; i < a.size(); ++i) {
                    CHECK(a[i].m == b[i].m);
                    CHECK(a[i].y == b[i].y);
                    CHECK(a[i].exponent == b[i].exponent);
                    Integer sq = 0;
                    for (long m : a[i].m) sq += Integer(m) * m;
                    CHECK(b[i].coeff == a[i].coeff * Rational(sq));
                }
            }
        }
    }
}

TEST_CASE("generated terms add up to the series") {
    MultiSum ms;
    ms.ysign = YSign::Alt;
    ms.msign = MSign::Alt;
    ms.prod_pow = 1;
    ms.inner = Inner::Laplace;
    for (int p = 1; p <= 3; ++p) {
        auto terms = multisum_terms(ms, 3, p, 200);
        QX sum(200);
        for (const auto& t : terms) {
            CHECK(t.m.size() == static_cast<size_t>(p));
            CHECK(t.exponent < 200);
            sum[t.exponent] += t.coeff;
        }
        CHECK(sum == multisum_series(ms, 3, p, 200));
    }
}

TEST_CASE("named Schur form identities") {
    check_pass("COR_7_6_7_54", 1, 200);
    check_pass("COR_8_2", 0, 600);
    check_pass("THM_7_5_7_36", 2, 160);
}

TEST_CASE("Schur form suites") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& r : schur_suite("s7", n, 160, 2)) CHECK_MESSAGE(r.pass, report_line(r));
    CHECK_THROWS_AS(schur_suite("s9", 1, 160), Error);
    CHECK_THROWS_AS(schur_record("THM_5_4"), Error);
}

TEST_CASE("explicit closed forms against theta_4 powers") {
    const std::pair<const char*, unsigned> cases[] = {{"COR_8_1", 16}, {"COR_8_2", 24}, {"COR_8_3", 36}, {"COR_8_4", 48}};
    for (auto [id, s] : cases) {
        const auto& r = schur_record(id);
        QX rhs = r.rhs(r, 0, 604);
        QX lhs = theta_side(Theta::T4, s, 604);
        for (long N = 0; N <= 150; ++N) CHECK_MESSAGE(rhs.q_coeff(N) == lhs.q_coeff(N), id << " N " << N);
    }
    // r_16(2) read off the n = 2 explicit form
    const auto& r = schur_record("COR_8_1");
    auto o = oracle::count_representations(oracle::CountKind::Squares, 16, 2);
    CHECK(r.rhs(r, 0, 12).q_coeff(2) == Rational(o[2]));
}

TEST_CASE("Legendre and the n = 2 cn product") {
    const long o = 240;
    // q triangle(q^2)^4 = sum (2r-1) q^{2r-1} / (1 - q^{2(2r-1)})
    QX a(o), b(o);
    for (long r = 1; 4 * (2 * r - 1) < o; ++r)
        for (long k = 0; 4 * ((2 * r - 1) * (2 * k + 1)) < o; ++k) a[4 * (2 * r - 1) * (2 * k + 1)] += 2 * r - 1;
    // q triangle(q)^8 = sum r^3 q^r / (1 - q^{2r})
    for (long r = 1; 4 * r < o; ++r)
        for (long k = 0; 4 * (r * (2 * k + 1)) < o; ++k) b[4 * r * (2 * k + 1)] += r * r * r;
    const auto& l56 = schur_record("THM_7_7_7_56");
    const auto& l57 = schur_record("THM_7_7_7_57");
    CHECK(a == l56.lhs(l56, 0, o));
    CHECK(b == l57.lhs(l57, 0, o));
    // q^2 triangle(q^2)^4 triangle(q)^8 = (T_0 T_4 - T_2^2) / 64
    QX t0 = named_family(Family::T, 0, o), t2 = named_family(Family::T, 2, o), t4 = named_family(Family::T, 4, o);
    const auto& e66 = schur_record("EQ_7_66");
    CHECK(e66.lhs(e66, 0, o) == frac(1, 64) * (t0 * t4 - t2 * t2));
    CHECK(e66.lhs(e66, 0, o) == (a * b).truncate(o));
}

TEST_CASE("triangular counts (Kac-Wakimoto)") {
    CHECK(t_count(4, 1) == 4);
    CHECK(t_count(8, 0) == 1);
    for (int n = 1; n <= 3; ++n) {
        for (int s : {4 * n * n, 4 * n * (n + 1)}) {
            auto t = t_count_table(s, 200);
            auto o = oracle::count_representations(oracle::CountKind::Triangles, s, 200);
            for (long N = 0; N <= 200; ++N) CHECK_MESSAGE(t[N] == o[N], "s " << s << " N " << N);
        }
    }
    CHECK_THROWS_AS(t_count(12, 3), Error);
    CHECK_THROWS_AS(t_count(4, -1), Error);
}

TEST_CASE("square counts from the Schur forms") {
    for (int s : {4, 8, 16, 24, 36}) {
        auto r = r_count_via_schur_table(s, 80);
        auto o = oracle::count_representations(oracle::CountKind::Squares, s, 80);
        for (long N = 0; N <= 80; ++N) CHECK_MESSAGE(r[N] == o[N], "s " << s << " N " << N);
    }
    CHECK(r_count_via_schur(16, 2) == oracle::count_representations(oracle::CountKind::Squares, 16, 2)[2]);
    CHECK_THROWS_AS(r_count_via_schur(20, 1), Error);
}

TEST_CASE("multiple sum argument checks") {
    MultiSum ms;
    ms.ysign = YSign::Half;
    CHECK_THROWS_AS(multisum_series(ms, 1, 1, 40), Error);
    MultiSum grid;
    grid.kappa = frac(1, 8);
    try {
        multisum_series(grid, 1, 1, 40);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Grid);
    }
    MultiSum lap;
    lap.inner = Inner::Laplace;
    CHECK_THROWS_AS(multisum_series(lap, 2, 3, 40), Error);
    // p = 0 is the empty sum
    CHECK(multisum_series(MultiSum{}, 0, 0, 8) == QX::constant(1, 8));
    CHECK(multisum_weight(MultiSum{}, 1, {3}) == 1);
}

TEST_CASE("perturbing any Schur form constant breaks the identity") {
    for (const auto& rec : schur_records()) {
        long order = rec.group == "s8" ? 240 : 160;
        for (const auto& k : rec.constants) {
            for (int delta : {1, -1}) {
                IdentityRecord bad = rec;
                bad.c(k.name) += delta;
                bool failed = false;
                for (int n = 1; n <= 3 && !failed; ++n) {
                    auto r = verify_record(bad, n, order);
                    failed = !r.pass;
                    if (failed) CHECK(r.first_mismatch.has_value());
                    if (!rec.parametric) break;
                }
                CHECK_MESSAGE(failed, rec.id << " constant " << k.name << " delta " << delta);
            }
        }
    }
}
