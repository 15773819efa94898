#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hankel_cfrac.hpp"

using namespace sumsq;

namespace {

const KPoly K = KPoly::var();

std::vector<Rational> random_seq(std::mt19937& rng, int len) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<Rational> s{1};
    for (int i = 1; i < len; ++i) s.push_back(frac(num(rng), den(rng)));
    return s;
}

bool nondegenerate(const std::vector<Rational>& s, int n) {
    for (int j = 1; j <= n; ++j)
        if (hankel(s, j, 1) == 0 || hankel(s, j, 2) == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(determinant(Matrix<Rational>{}) == 1);
    CHECK(determinant(Matrix<Rational>{{7}}) == 7);
    CHECK(determinant(Matrix<Rational>{{1, 2}, {3, 4}}) == -2);
    CHECK(determinant(Matrix<Rational>{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(Matrix<Rational>{{1, 2}, {2, 4}}) == 0);
    CHECK(determinant(Matrix<KPoly>{{1, 2}, {3, 4}}) == KPoly(-2));
    CHECK(determinant(Matrix<KPoly>{{0, K}, {1, 1 + K}}) == -K);
}

TEST_CASE("Bareiss agrees with elimination at sample points") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + trial % 5;
        Matrix<KPoly> m(n, std::vector<KPoly>(n));
        for (auto& row : m)
            for (auto& e : row) e = KPoly(std::vector<Rational>{d(rng), d(rng), d(rng)});
        KPoly det = determinant(m);
        for (int x = -2; x <= 2; ++x) {
            Matrix<Rational> r(n, std::vector<Rational>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) r[i][j] = m[i][j].eval(x);
            CHECK(det.eval(x) == determinant(r));
        }
    }
}

TEST_CASE("q-series determinant by minor expansion") {
    long N = 12;
    QX a = QX::constant(1, N) + QX::monomial(1, 4, N);
    QX b = QX::monomial(2, 8, N);
    QX c = QX::constant(3, N);
    Matrix<QX> m{{a, b}, {c, a}};
    CHECK(determinant(m, N) == a * a - b * c);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int n = 1; n <= 4; ++n) {
        Matrix<QX> q(n, std::vector<QX>(n, QX(N)));
        for (auto& row : q)
            for (auto& e : row)
                for (long k = 0; k < N; ++k) e[k] = d(rng);
        QX det = determinant(q, N);
        // constant term equals the determinant of the constant terms
        Matrix<Rational> r(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i][j] = q[i][j][0];
        CHECK(det[0] == determinant(r));
    }
    CHECK(determinant(Matrix<QX>{}, N) == QX::constant(1, N));
}

TEST_CASE("Hankel and chi conventions") {
    std::vector<Rational> c{1, 5, 7, 11, 13, 17};
    CHECK(hankel(c, 1, 1) == 5);
    CHECK(hankel(c, 1, 2) == 7);
    CHECK(chi(c, 1) == 7);
    CHECK(hankel(c, 0, 1) == 1);
    CHECK(chi(c, 0) == 0);
    CHECK(hankel(c, 2, 1) == 5 * 11 - 7 * 7);
    CHECK(chi(c, 2) == 5 * 13 - 11 * 7);
    CHECK(hankel(c, 3, 1) == determinant(Matrix<Rational>{{5, 7, 11}, {7, 11, 13}, {11, 13, 17}}));
    CHECK_THROWS_AS(hankel(c, 3, 2), Error);
    CHECK_THROWS_AS(chi(c, 3), Error);
    try {
        hankel(c, 4, 1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Length);
    }
}

TEST_CASE("Hankel determinant of the sn moments") {
    auto m = cf_moments("sn", 4);
    CHECK(hankel(m, 2, 1) == 12 * K);
}

TEST_CASE("degenerate sequences fail fast") {
    std::vector<Rational> ones(9, 1);
    try {
        series_to_assoc(ones, 3);
        FAIL("expected DegenerateError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Degenerate);
        CHECK(e.index() == 2);
    }
    CHECK_THROWS_AS(series_to_reg(ones, 4), Error);
}

TEST_CASE("Heilermann round trips and product formulas on random sequences") {
    std::mt19937 rng(20240611);
    int done = 0;
    while (done < 100) {
        const int n = 6;
        auto s = random_seq(rng, 2 * n + 1);
        if (!nondegenerate(s, n)) continue;
        ++done;
        AssocCF<Rational> a = series_to_assoc(s, n);
        CHECK(assoc_to_series(a, 2 * n + 1) == s);
        RegCF<Rational> g = series_to_reg(s, 2 * n);
        CHECK(reg_to_series(g, 2 * n + 1) == s);

        HankelTable<Rational> direct = hankel_table(s, n);
        HankelTable<Rational> pa = hankel_products(a);
        CHECK(pa.H1 == direct.H1);
        CHECK(pa.Chi == direct.Chi);
        HankelTable<Rational> pg = hankel_products(g);
        CHECK(pg.H1 == direct.H1);
        CHECK(pg.H2 == direct.H2);

        AssocCF<Rational> even = reg_even_part(g);
        CHECK(even.alphas == a.alphas);
        CHECK(even.betas == a.betas);
    }
}

TEST_CASE("first-level product values") {
    AssocCF<Rational> a{{3, 5}, {2, 7}};
    auto t = hankel_products(a);
    CHECK(t.H1[1] == 3);
    CHECK(t.Chi[1] == -6);
    CHECK(t.H1[2] == 3 * 3 * 5);
    CHECK(t.Chi[2] == -(2 + 7) * 45);
}

TEST_CASE("scaling laws for Hankel and chi determinants") {
    std::mt19937 rng(11);
    const KPoly x = K;
    for (int trial = 0; trial < 3; ++trial) {
        auto r = random_seq(rng, 12);
        // c_nu and c_{nu-1} (with r[0] playing c_0)
        std::vector<KPoly> c, cs, xc, xcs;
        for (size_t v = 0; v < r.size(); ++v) {
            c.push_back(KPoly(r[v]));
            xc.push_back(kpow(x, v) * KPoly(r[v]));
            if (v == 0) {
                cs.push_back(KPoly(1));
                xcs.push_back(KPoly(1));
            } else {
                cs.push_back(KPoly(r[v - 1]));
                xcs.push_back(kpow(x, v - 1) * KPoly(r[v - 1]));
            }
        }
        for (unsigned n = 1; n <= 5; ++n) {
            int in = static_cast<int>(n);
            CHECK(hankel(xc, in, 1) == kpow(x, n * n) * hankel(c, in, 1));
            CHECK(hankel(xcs, in, 1) == kpow(x, n * (n - 1)) * hankel(cs, in, 1));
            CHECK(chi(xc, in) == kpow(x, 1 + n * n) * chi(c, in));
            CHECK(chi(xcs, in) == kpow(x, 1 + n * (n - 1)) * chi(cs, in));
            CHECK(hankel(xc, in, 2) == kpow(x, n * (n + 1)) * hankel(c, in, 2));
            CHECK(hankel(xcs, in, 2) == kpow(x, n * n) * hankel(cs, in, 2));
        }
    }
}

TEST_CASE("affine rescaling of the moments rescales the fractions") {
    std::mt19937 rng(5);
    Rational A = frac(-3, 2), B = frac(2, 5);
    int done = 0;
    while (done < 10) {
        auto s = random_seq(rng, 11);
        if (!nondegenerate(s, 5)) continue;
        ++done;
        std::vector<Rational> t{1};
        for (int v = 1; v < 11; ++v) t.push_back(A * pow(B, v) * s[v]);
        auto a = series_to_assoc(s, 5), at = series_to_assoc(t, 5);
        CHECK(at.alphas[0] == A * B * a.alphas[0]);
        for (int n = 1; n < 5; ++n) CHECK(at.alphas[n] == B * B * a.alphas[n]);
        for (int n = 0; n < 5; ++n) CHECK(at.betas[n] == B * a.betas[n]);
        auto g = series_to_reg(s, 10), gt = series_to_reg(t, 10);
        CHECK(gt.gammas[0] == A * B * g.gammas[0]);
        for (int n = 1; n < 10; ++n) CHECK(gt.gammas[n] == B * g.gammas[n]);
    }
}

TEST_CASE("closed-form levels") {
    CHECK(cf_families().size() == 33);
    CFLevel sn2 = cf_closed_form("sn", 2);
    CHECK(sn2.alpha == 12 * K);
    CHECK(sn2.beta == 9 * (1 + K));
    CHECK(cf_level_numerator("sn", 2) == "-12*K*x^4");
    CHECK(cf_level_denominator("sn", 2) == "1 + (9 + 9*K)*x^2");
    CHECK(cf_level_numerator("sn", 1) == "x^2");
    CHECK(cf_level_numerator("cn", 1) == "x");
    CHECK(cf_level_numerator("sn^2", 1) == "2*x^3");
    CFLevel sc2 = cf_closed_form("sc", 2);
    CHECK(sc2.alpha == 36 * K);
    CHECK(sc2.beta == 16 + 9 * K);
    CHECK(cf_closed_form("reg:d/c", 3).alpha == -4);
    CHECK(cf_closed_form("reg:dn", 2).alpha == K);
    CHECK(cf_closed_form("reg:dn", 3).alpha == 4);
    CHECK(cf_closed_form("reg:dn", 4).alpha == 9 * K);
    CHECK_THROWS_AS(cf_closed_form("bogus", 1), Error);
    CHECK_THROWS_AS(cf_closed_form("sn", 0), Error);
}

TEST_CASE("closed forms match Heilermann coefficients of the moments") {
    const int L = 6;
    for (const auto& f : cf_families()) {
        INFO(f.name);
        if (f.shape == CFShape::Assoc) {
            auto m = cf_moments(f.name, 2 * L);
            AssocCF<KPoly> a = series_to_assoc(m, L);
            for (int n = 1; n <= L; ++n) {
                CFLevel l = cf_closed_form(f.name, n);
                CHECK(a.alphas[n - 1] == l.alpha);
                CHECK(a.betas[n - 1] == l.beta);
            }
        } else {
            auto m = cf_moments(f.name, 2 * L);
            RegCF<KPoly> g = series_to_reg(m, 2 * L);
            for (int n = 1; n <= 2 * L; ++n) CHECK(g.gammas[n - 1] == cf_closed_form(f.name, n).alpha);
        }
    }
}

TEST_CASE("closed-form fractions expand to the moments") {
    const int L = 5;
    for (const auto& f : cf_families()) {
        INFO(f.name);
        auto m = cf_moments(f.name, 2 * L);
        if (f.shape == CFShape::Assoc) {
            AssocCF<KPoly> a;
            for (int n = 1; n <= L; ++n) {
                CFLevel l = cf_closed_form(f.name, n);
                a.alphas.push_back(l.alpha);
                a.betas.push_back(l.beta);
            }
            CHECK(assoc_to_series(a, 2 * L + 1) == m);
        } else {
            RegCF<KPoly> g;
            for (int n = 1; n <= 2 * L; ++n) g.gammas.push_back(cf_closed_form(f.name, n).alpha);
            CHECK(reg_to_series(g, 2 * L + 1) == m);
        }
    }
}

TEST_CASE("even part of the regular fractions gives the matching associated fractions") {
    for (const char* t : {"cn", "dn", "c/d", "nd", "d/c", "nc"}) {
        std::string reg = std::string("reg:") + t;
        RegCF<KPoly> g;
        for (int n = 1; n <= 12; ++n) g.gammas.push_back(cf_closed_form(reg, n).alpha);
        AssocCF<KPoly> a = reg_even_part(g);
        for (int n = 1; n <= 6; ++n) {
            CFLevel l = cf_closed_form(t, n);
            CHECK(a.alphas[n - 1] == l.alpha);
            CHECK(a.betas[n - 1] == l.beta);
        }
    }
}

TEST_CASE("integration by parts ties regular fractions to associated ones") {
    // assoc family, regular family, gamma_2 of the regular family
    struct Case {
        const char* assoc;
        const char* reg;
        KPoly g2;
    };
    const std::vector<Case> cases = {{"sc", "reg:dn", K},         {"sd", "reg:cn", 1},
                                     {"sc/d^2", "reg:nd", -K},    {"s/d^2", "reg:c/d", 1 - K},
                                     {"sd/c^2", "reg:nc", -1},    {"s/c^2", "reg:d/c", -(1 - K)}};
    for (const auto& c : cases) {
        INFO(c.assoc);
        std::vector<KPoly> g{KPoly()};
        for (int n = 1; n <= 14; ++n) g.push_back(cf_closed_form(c.reg, n).alpha);
        CHECK(g[2] == c.g2);
        for (int n = 1; n <= 6; ++n) {
            CFLevel l = cf_closed_form(c.assoc, n);
            KPoly alpha = n == 1 ? KPoly(1) : g[2 * n - 1] * g[2 * n];
            CHECK(l.alpha == alpha);
            CHECK(l.beta == g[2 * n] + g[2 * n + 1]);
        }
        // moment form: gamma_2 (assoc)_m = -(reg)_m
        auto ma = cf_moments(c.assoc, 8);
        auto mr = elliptic_coeffs(cf_family(c.reg).series, 8);
        for (int m = 1; m <= 8; ++m) CHECK(c.g2 * ma[m] == -mr[m]);
    }
}
