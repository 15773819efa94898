// End-to-end acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "elliptic_lambert.hpp"
#include "hankel_cfrac.hpp"
#include "hankel_evals.hpp"
#include "identities.hpp"
#include "lambert_theta.hpp"
#include "oracle.hpp"
#include "schur.hpp"

using namespace sumsq;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    // Record a failure with a short description; keeps only the first few.
    void fail(const std::string& what) {
        if (pass || detail.tellp() < 400) detail << (pass ? "" : "; ") << what;
        pass = false;
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
    void report(const VerificationReport& r) {
        if (!r.pass) fail(report_line(r));
    }
};

struct Criterion {
    int number;
    std::string title;
    double limit_s;
    std::function<void(Outcome&)> run;
};

// 1..7 from the eta product.
void golden_tau(Outcome& o) {
    const long want[] = {1, -24, 252, -1472, 4830, -6048, -16744};
    for (long n = 1; n <= 7; ++n)
        o.expect(tau(n, TauMethod::Eta) == want[n - 1], "tau(" + std::to_string(n) + ")");
}

void tau_formulas(Outcome& o) {
    const long N = 500;
    auto eta = oracle::tau_oracle(N);
    for (long n = 1; n <= N; ++n) {
        o.expect(tau(n, TauMethod::Eta) == eta[n], "eta n=" + std::to_string(n));
        for (auto m : {TauMethod::Eq1_15, TauMethod::Eq1_31, TauMethod::Eq1_32, TauMethod::Eq1_33})
            o.expect(tau(n, m) == eta[n], "method " + std::to_string(int(m)) + " n=" + std::to_string(n));
        if (n % 2 == 1) {
            o.expect(tau(n, TauMethod::Eq1_29) == eta[n], "eq_1_29 n=" + std::to_string(n));
            if (n >= 3) o.expect(tau(n, TauMethod::Eq1_30) == eta[n], "eq_1_30 n=" + std::to_string(n));
        }
    }
}

void formula_vs_oracle(Outcome& o, int s, long n_max) {
    auto f = r_formula_table(s, n_max);
    auto r = oracle::count_representations(oracle::CountKind::Squares, s, n_max);
    for (long n = 1; n <= n_max; ++n)
        o.expect(f[n] == r[n], "r_" + std::to_string(s) + "(" + std::to_string(n) + ")");
}

void four_eight(Outcome& o) {
    formula_vs_oracle(o, 4, 10000);
    formula_vs_oracle(o, 8, 10000);
}

void sixteen_twentyfour(Outcome& o) {
    formula_vs_oracle(o, 16, 2000);
    formula_vs_oracle(o, 24, 2000);
    for (long n = 1; n <= 999; n += 2) o.expect(tau_relation_holds(n), "tau relation n=" + std::to_string(n));
}

void elliptic(Outcome& o) {
    const long order = 200;
    NomeBridge b = nome_bridge(order);
    for (int m = 1; m <= 4; ++m)
        for (const auto& id : elliptic_lambert_ids()) o.report(verify_elliptic_lambert(id, m, order, b));
    o.expect(elliptic_lambert_ids().size() == 11, "eleven elliptic ids");
    for (int m = 1; m <= 4; ++m)
        for (const auto& r : verify_eisenstein_combinations(m, 400)) o.report(r);
}

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

void continued_fractions(Outcome& o) {
    const int n = 6;
    std::mt19937 rng(7311);
    for (int done = 0; done < 100;) {
        auto s = random_seq(rng, 2 * n + 1);
        if (!nondegenerate(s, n)) continue;
        ++done;
        auto a = series_to_assoc(s, n);
        auto g = series_to_reg(s, 2 * n);
        auto direct = hankel_table(s, n);
        auto pa = hankel_products(a);
        auto pg = hankel_products(g);
        auto even = reg_even_part(g);
        o.expect(assoc_to_series(a, 2 * n + 1) == s, "associated round trip");
        o.expect(reg_to_series(g, 2 * n + 1) == s, "regular round trip");
        o.expect(pa.H1 == direct.H1 && pa.Chi == direct.Chi, "associated products");
        o.expect(pg.H1 == direct.H1 && pg.H2 == direct.H2, "regular products");
        o.expect(even.alphas == a.alphas && even.betas == a.betas, "even part");
    }
    const int L = 6;
    o.expect(cf_families().size() >= 27, "family count");
    for (const auto& f : cf_families()) {
        auto m = cf_moments(f.name, 2 * L);
        if (f.shape == CFShape::Assoc) {
            auto a = series_to_assoc(m, L);
            for (int k = 1; k <= L; ++k) {
                CFLevel l = cf_closed_form(f.name, k);
                o.expect(a.alphas[k - 1] == l.alpha && a.betas[k - 1] == l.beta,
                         std::string(f.name) + " level " + std::to_string(k));
            }
        } else {
            auto g = series_to_reg(m, 2 * L);
            for (int k = 1; k <= 2 * L; ++k)
                o.expect(g.gammas[k - 1] == cf_closed_form(f.name, k).alpha,
                         std::string(f.name) + " level " + std::to_string(k));
        }
    }
}

void determinants(Outcome& o) {
    int symbolic = 0, rational = 0;
    for (const auto& c : eval_cases()) {
        (c.symbolic ? symbolic : rational)++;
        o.report(verify_eval(c, c.symbolic ? 5 : 8));
    }
    o.expect(symbolic == 48, "48 symbolic evaluations");
    o.expect(rational == 8, "8 rational evaluations");
    o.report(verify_euler_hankel(6));
}

void expansion_suites(Outcome& o) {
    for (const char* g : {"s5_hankel", "s5_chi", "s5_19"})
        for (int n = 1; n <= 3; ++n) {
            auto rs = suite(g, n, 200);
            for (const auto& r : rs) o.report(r);
            if (std::string(g) == "s5_19") o.expect(rs.size() == 24, "s5_19 has 24 identities");
        }
    for (const auto& r : suite("s5_20_21", 1, 200)) o.report(r);
    for (const char* id :
         {"EQ_5_63", "EQ_5_74", "EQ_5_83", "EQ_5_84", "EQ_5_198", "EQ_5_213", "EQ_5_229", "EQ_5_245"})
        o.report(verify_identity(id, 1, 400));
}

void schur_forms(Outcome& o) {
    const long order = 160;
    for (int n = 1; n <= 3; ++n) {
        for (auto [a, b] : {std::pair{"THM_7_1", "THM_5_4"}, std::pair{"THM_7_2", "THM_5_6"}}) {
            const auto& s = schur_record(a);
            const auto& h = identity_record(b);
            o.expect(s.rhs(s, n, order) == h.rhs(h, n, order),
                     std::string(a) + " vs " + b + " n=" + std::to_string(n));
        }
        for (const auto& r : schur_suite("s7", n, order)) o.report(r);
    }
    // N <= 150 needs quarter order 4 * 151
    for (const auto& r : schur_suite("s8", 1, 4 * 151)) o.report(r);
}

Integer legendre_t8(long N) {
    // t_8(N) = sum of d^3 over d | N+1 with (N+1)/d odd
    Integer t = 0;
    long m = N + 1;
    for (long d = 1; d <= m; ++d)
        if (m % d == 0 && (m / d) % 2 == 1) t += Integer(d) * d * d;
    return t;
}

void kac_wakimoto(Outcome& o) {
    const long N = 200;
    for (int n = 1; n <= 3; ++n)
        for (int s : {4 * n * n, 4 * n * (n + 1)}) {
            auto t = t_count_table(s, N);
            auto r = oracle::count_representations(oracle::CountKind::Triangles, s, N);
            for (long k = 0; k <= N; ++k)
                o.expect(t[k] == r[k], "t_" + std::to_string(s) + "(" + std::to_string(k) + ")");
        }
    // n = 1: t_4(N) = sigma(2N+1) and the t_8 divisor sum
    for (long k = 0; k <= N; ++k) {
        o.expect(t_count(4, k) == oracle::divisor_oracle(oracle::DivisorKind::Sigma, 1, 2 * k + 1),
                 "t_4 Legendre N=" + std::to_string(k));
        o.expect(t_count(8, k) == legendre_t8(k), "t_8 Legendre N=" + std::to_string(k));
    }
    for (const char* id : {"THM_7_7_7_56", "THM_7_7_7_57"}) o.report(verify_record(schur_record(id), 1, 4 * (N + 2)));
}

// Each +-1 change of a registry constant must give a FAIL with a first mismatch.
void perturbations(Outcome& o, const std::vector<IdentityRecord>& records) {
    for (const auto& rec : records) {
        long order = rec.group == "s8" ? 240 : 160;
        for (const auto& k : rec.constants)
            for (int delta : {1, -1}) {
                IdentityRecord bad = rec;
                bad.c(k.name) += delta;
                bool caught = false;
                for (int n = 1; n <= 3 && !caught; ++n) {
                    auto r = verify_record(bad, n, order);
                    caught = !r.pass && r.first_mismatch.has_value();
                    if (!rec.parametric) break;
                }
                o.expect(caught, rec.id + " " + k.name + (delta > 0 ? "+1" : "-1"));
            }
    }
}

void negative_controls(Outcome& o) {
    IdentityRecord bad = identity_record("THM_1_7_1_28");
    bad.c("l3") = 16;
    auto r = verify_record(bad, 1, 200);
    o.expect(!r.pass && r.first_mismatch.has_value(), "l3 17 -> 16");
    perturbations(o, identity_records());
    perturbations(o, schur_records());
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "golden tau values", 1, golden_tau},
        {2, "tau formula equivalence to 500", 30, tau_formulas},
        {3, "r_4 and r_8 formulas to 10000", 10, four_eight},
        {4, "r_16 and r_24 formulas to 2000, odd tau relation", 60, sixteen_twentyfour},
        {5, "Lambert-elliptic identities and Eisenstein combinations", 30, elliptic},
        {6, "Heilermann round trips and closed-form fractions", 60, continued_fractions},
        {7, "Hankel and chi determinant evaluations", 120, determinants},
        {8, "inclusion-exclusion suites", 300, expansion_suites},
        {9, "Schur-form suites", 300, schur_forms},
        {10, "Kac-Wakimoto and Legendre counts", 60, kac_wakimoto},
        {11, "negative controls", 600, negative_controls},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt > c.limit_s) o.fail("took " + std::to_string(dt) + " s, limit " + std::to_string(c.limit_s) + " s");
        if (!o.pass) ++failed;
        std::printf("%s  %2d  %-55s %8.2f s%s%s\n", o.pass ? "PASS" : "FAIL", c.number, c.title.c_str(), dt,
                    o.pass ? "" : "  ", o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
