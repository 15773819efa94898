#include "hankel_evals.hpp"

#include <functional>

namespace sumsq {

namespace {

using Rhs = std::function<KPoly(long)>;

const KPoly K = KPoly::var();
const KPoly Kp = 1 - K;

KPoly C(const Rational& v) { return KPoly(v); }
KPoly sg(long e) { return (e % 2 == 0) ? KPoly(1) : KPoly(-1); }
long ch2(long n) { return n * (n - 1) / 2; }
long ch2p(long n) { return n * (n + 1) / 2; }

Rational fact_prod(long from, long to, long step, long power, long offset) {
    // prod_{r=from}^{to} ((step*r + offset)!)^power
    Rational p = 1;
    for (long r = from; r <= to; ++r) p *= pow(Rational(factorial(static_cast<unsigned>(step * r + offset))), power);
    return p;
}

KPoly P1(long n) { return C(fact_prod(1, 2 * n - 1, 1, 1, 0)); }   // prod_{r<=2n-1} r!
KPoly P2(long n) { return C(fact_prod(1, n - 1, 2, 2, 0)); }       // prod_{r<n} (2r)!^2
KPoly P3(long n) { return C(fact_prod(1, n, 2, 2, -1)); }          // prod_{r<=n} (2r-1)!^2
KPoly P4(long n) { return C(fact_prod(1, 2 * n, 1, 1, 0)); }       // prod_{r<=2n} r!

KPoly T1(long n) { return C(frac(n * (4 * n * n - 1), 3)); }
KPoly T2(long n) { return C(frac(n * (2 * n - 1), 3)); }
KPoly T3(long n) { return C(frac(n * (2 * n + 1), 3)); }
KPoly T4(long n) { return C(frac(2 * n * (n + 1) * (2 * n + 1), 3)); }

KPoly kk(long e) { return kpow(K * Kp, static_cast<unsigned>(e)); }
KPoly Ke(long e) { return kpow(K, static_cast<unsigned>(e)); }
KPoly Kpe(long e) { return kpow(Kp, static_cast<unsigned>(e)); }
KPoly two_pow(long e) { return C(pow(Rational(2), e)); }

struct Row {
    EvalCase c;
    Rhs rhs;
};

EvalSide H1(const char* f, int s = 0) { return {EvalKind::H1, f, s}; }
EvalSide H2(const char* f, int s = 0) { return {EvalKind::H2, f, s}; }
EvalSide X(const char* f, int s = 0) { return {EvalKind::Chi, f, s}; }

const std::vector<Row>& rows() {
    static const std::vector<Row> r = [] {
        std::vector<Row> v;
        auto add = [&](const char* id, std::vector<EvalSide> sides, Rhs f, bool symbolic = true) {
            v.push_back({{id, std::move(sides), symbolic}, std::move(f)});
        };
        // Hankel determinants
        add("EQ_4_1", {H1("sn")}, [](long n) { return Ke(ch2(n)) * P1(n); });
        add("EQ_4_2", {H1("cn", -1), H1("dn", -1)}, [](long n) { return Ke(ch2(n)) * P2(n); });
        add("EQ_4_3", {H1("sc"), H1("sd")}, [](long n) { return Ke(ch2(n)) * P3(n); });
        add("EQ_4_4", {H1("s/d")}, [](long n) { return sg(ch2(n)) * kk(ch2(n)) * P1(n); });
        add("EQ_4_5", {H1("c/d", -1), H1("nd", -1)}, [](long n) { return sg(ch2(n)) * kk(ch2(n)) * P2(n); });
        add("EQ_4_6", {H1("sc/d^2"), H1("s/d^2")}, [](long n) { return sg(ch2(n)) * kk(ch2(n)) * P3(n); });
        add("EQ_4_7", {H1("sn^2")}, [](long n) { return Ke(ch2(n)) * P4(n); });
        add("EQ_4_8", {H1("s^2/d^2")}, [](long n) { return sg(ch2(n)) * kk(ch2(n)) * P4(n); });
        add("EQ_4_9", {H1("sc/d")}, [](long n) { return Ke(2 * ch2(n)) * P1(n); });
        add("EQ_4_10", {H1("s^2c^2/d^2")}, [](long n) { return Ke(2 * ch2(n)) * P4(n); });
        add("EQ_4_11", {H1("s/c")}, [](long n) { return Kpe(ch2(n)) * P1(n); });
        add("EQ_4_12", {H1("d/c", -1), H1("nc", -1)}, [](long n) { return Kpe(ch2(n)) * P2(n); });
        add("EQ_4_13", {H1("sd/c^2"), H1("s/c^2")}, [](long n) { return Kpe(ch2(n)) * P3(n); });
        add("EQ_4_14", {H1("s^2/c^2")}, [](long n) { return Kpe(ch2(n)) * P4(n); });
        add("EQ_4_15", {H1("sd/c")}, [](long n) { return P1(n); });
        add("EQ_4_16", {H1("s/cd")}, [](long n) { return Kpe(2 * ch2(n)) * P1(n); });
        add("EQ_4_17", {H1("s^2d^2/c^2")}, [](long n) { return P4(n); });
        add("EQ_4_18", {H1("s^2/c^2d^2")}, [](long n) { return Kpe(2 * ch2(n)) * P4(n); });
        add("EQ_4_19", {H2("cn", -1), H1("cn")}, [](long n) { return sg(n) * Ke(ch2(n)) * P3(n); });
        add("EQ_4_20", {H2("dn", -1), H1("dn")}, [](long n) { return sg(n) * Ke(ch2p(n)) * P3(n); });
        add("EQ_4_21", {H2("c/d", -1), H1("c/d")},
            [](long n) { return sg(ch2p(n)) * Ke(ch2(n)) * Kpe(ch2p(n)) * P3(n); });
        add("EQ_4_22", {H2("nd", -1), H1("nd")},
            [](long n) { return sg(ch2(n)) * Ke(ch2p(n)) * Kpe(ch2(n)) * P3(n); });
        add("EQ_4_23", {H2("d/c", -1), H1("d/c")}, [](long n) { return Kpe(ch2p(n)) * P3(n); });
        add("EQ_4_24", {H2("nc", -1), H1("nc")}, [](long n) { return Kpe(ch2(n)) * P3(n); });

        // chi determinants
        add("EQ_4_32", {X("sn")}, [](long n) { return -T1(n) * Ke(ch2(n)) * (1 + K) * P1(n); });
        add("EQ_4_33", {X("cn", -1)},
            [](long n) { return -T2(n) * Ke(ch2(n)) * (2 * n * (1 + K) + (1 - 2 * K)) * P2(n); });
        add("EQ_4_34", {X("dn", -1)},
            [](long n) { return -T2(n) * Ke(ch2(n)) * (2 * n * (1 + K) - (2 - K)) * P2(n); });
        add("EQ_4_35", {X("sc")},
            [](long n) { return -T3(n) * Ke(ch2(n)) * (2 * n * (1 + K) + (2 - K)) * P3(n); });
        add("EQ_4_36", {X("sd")},
            [](long n) { return -T3(n) * Ke(ch2(n)) * (2 * n * (1 + K) - (1 - 2 * K)) * P3(n); });
        add("EQ_4_37", {X("s/d")},
            [](long n) { return -sg(ch2(n)) * T1(n) * kk(ch2(n)) * (1 - 2 * K) * P1(n); });
        add("EQ_4_38", {X("c/d", -1)}, [](long n) {
            return -sg(ch2(n)) * T2(n) * kk(ch2(n)) * (2 * n * (1 - 2 * K) + (1 + K)) * P2(n);
        });
        add("EQ_4_39", {X("nd", -1)}, [](long n) {
            return -sg(ch2(n)) * T2(n) * kk(ch2(n)) * (2 * n * (1 - 2 * K) - (2 - K)) * P2(n);
        });
        add("EQ_4_40", {X("sc/d^2")}, [](long n) {
            return -sg(ch2(n)) * T3(n) * kk(ch2(n)) * (2 * n * (1 - 2 * K) + (2 - K)) * P3(n);
        });
        add("EQ_4_41", {X("s/d^2")}, [](long n) {
            return -sg(ch2(n)) * T3(n) * kk(ch2(n)) * (2 * n * (1 - 2 * K) - (1 + K)) * P3(n);
        });
        add("EQ_4_42", {X("sn^2")}, [](long n) { return -T4(n) * Ke(ch2(n)) * (1 + K) * P4(n); });
        add("EQ_4_43", {X("s^2/d^2")},
            [](long n) { return -sg(ch2(n)) * T4(n) * kk(ch2(n)) * (1 - 2 * K) * P4(n); });
        add("EQ_4_44", {X("sc/d")}, [](long n) { return -2 * T1(n) * Ke(2 * ch2(n)) * (2 - K) * P1(n); });
        add("EQ_4_45", {X("s^2c^2/d^2")}, [](long n) { return -2 * T4(n) * Ke(2 * ch2(n)) * (2 - K) * P4(n); });
        add("EQ_4_46", {X("s/c")}, [](long n) { return T1(n) * Kpe(ch2(n)) * (2 - K) * P1(n); });
        add("EQ_4_47", {X("d/c", -1)},
            [](long n) { return T2(n) * Kpe(ch2(n)) * (2 * n * (2 - K) - (1 + K)) * P2(n); });
        add("EQ_4_48", {X("nc", -1)},
            [](long n) { return T2(n) * Kpe(ch2(n)) * (2 * n * (2 - K) - (1 - 2 * K)) * P2(n); });
        add("EQ_4_49", {X("sd/c^2")},
            [](long n) { return T3(n) * Kpe(ch2(n)) * (2 * n * (2 - K) + (1 - 2 * K)) * P3(n); });
        add("EQ_4_50", {X("s/c^2")},
            [](long n) { return T3(n) * Kpe(ch2(n)) * (2 * n * (2 - K) + (1 + K)) * P3(n); });
        add("EQ_4_51", {X("s^2/c^2")}, [](long n) { return T4(n) * Kpe(ch2(n)) * (2 - K) * P4(n); });
        add("EQ_4_52", {X("sd/c")}, [](long n) { return 2 * T1(n) * (1 - 2 * K) * P1(n); });
        add("EQ_4_53", {X("s/cd")}, [](long n) { return 2 * T1(n) * Kpe(2 * ch2(n)) * (1 + K) * P1(n); });
        add("EQ_4_54", {X("s^2d^2/c^2")}, [](long n) { return 2 * T4(n) * (1 - 2 * K) * P4(n); });
        add("EQ_4_55", {X("s^2/c^2d^2")}, [](long n) { return 2 * T4(n) * Kpe(2 * ch2(n)) * (1 + K) * P4(n); });

        // Bernoulli and Euler number sequences
        add("EQ_4_56", {H1("tan")}, [](long n) { return two_pow(-(2 * n * n + n)) * P1(n); }, false);
        add("EQ_4_57", {H1("sec2")}, [](long n) { return sg(n) * two_pow(-(2 * n * n + 3 * n)) * P4(n); }, false);
        add("EQ_4_58", {H1("sec")}, [](long n) { return two_pow(-2 * n) * P2(n); }, false);
        add("EQ_4_59", {H2("sec"), H1("sectan")}, [](long n) { return sg(n) * two_pow(-2 * n) * P3(n); },
            false);
        add("EQ_4_60", {X("tan")}, [](long n) { return -T1(n) * two_pow(-(2 * n * n + n + 1)) * P1(n); }, false);
        add("EQ_4_61", {X("sec2")},
            [](long n) { return sg(n - 1) * C(frac(1, 2)) * T4(n) * two_pow(-(2 * n * n + 3 * n)) * P4(n); },
            false);
        add("EQ_4_62", {X("sec")},
            [](long n) { return -C(frac(n * (2 * n - 1) * (4 * n - 1), 3)) * two_pow(-2 * n) * P2(n); }, false);
        add("EQ_4_63", {X("sectan")},
            [](long n) { return -sg(n) * C(frac(n * (2 * n + 1) * (4 * n + 1), 3)) * two_pow(-2 * n) * P3(n); },
            false);
        return v;
    }();
    return r;
}

const Row& row(const std::string& id) {
    for (const auto& r : rows())
        if (r.c.id == id) return r;
    throw Error(ErrorKind::Registry, "unknown evaluation: " + id);
}

Rational constant_term(const std::string& family, long nu) {
    Rational sgn = (nu % 2 == 0) ? 1 : -1;
    if (family == "tan")
        return -sgn * Rational(ipow(2, 2 * nu) - 1) * abs(bernoulli(2 * nu)) / (4 * nu);
    if (family == "sec2")
        return sgn * Rational(ipow(2, 2 * nu + 2) - 1) * abs(bernoulli(2 * nu + 2)) / (4 * (nu + 1));
    if (family == "sec") return -sgn * Rational(abs(euler_number(2 * nu - 2))) / 4;
    if (family == "sectan") return sgn * Rational(abs(euler_number(2 * nu))) / 4;
    throw Error(ErrorKind::Registry, "unknown sequence: " + family);
}

bool is_constant_family(const std::string& f) {
    return f == "tan" || f == "sec2" || f == "sec" || f == "sectan";
}

}  // namespace

const std::vector<EvalCase>& eval_cases() {
    static const std::vector<EvalCase> c = [] {
        std::vector<EvalCase> v;
        for (const auto& r : rows()) v.push_back(r.c);
        return v;
    }();
    return c;
}

const EvalCase& eval_case(const std::string& id) { return row(id).c; }

std::vector<KPoly> eval_sequence(const std::string& family, int shift, int len) {
    std::vector<KPoly> s{KPoly(1)};
    if (is_constant_family(family)) {
        for (long nu = 1; nu <= len; ++nu) s.push_back(KPoly(constant_term(family, nu)));
        return s;
    }
    int first = first_index(family);
    if (1 + shift < first) throw Error(ErrorKind::Domain, "sequence starts below the first coefficient", shift);
    std::vector<KPoly> co = elliptic_coeffs(family, len + shift);
    for (int nu = 1; nu <= len; ++nu) s.push_back(co[nu + shift - first]);
    return s;
}

KPoly eval_determinant(const EvalSide& side, int n) {
    switch (side.kind) {
        case EvalKind::H1: return hankel(eval_sequence(side.family, side.shift, 2 * n - 1), n, 1);
        case EvalKind::H2: return hankel(eval_sequence(side.family, side.shift, 2 * n), n, 2);
        case EvalKind::Chi: return chi(eval_sequence(side.family, side.shift, 2 * n), n);
    }
    return KPoly();
}

KPoly rhs_closed_form(const EvalCase& c, int n) {
    if (n == 0) {
        bool chi_case = !c.sides.empty() && c.sides[0].kind == EvalKind::Chi;
        return chi_case ? KPoly() : KPoly(1);
    }
    if (n < 0) throw Error(ErrorKind::Domain, "determinant size must be >= 0", n);
    return row(c.id).rhs(n);
}

VerificationReport verify_eval(const EvalCase& c, int n_max) {
    VerificationReport r;
    r.id = c.id;
    r.params = {{"n_max", n_max}};
    r.pass = true;
    for (int n = 1; n <= n_max && r.pass; ++n) {
        KPoly want = rhs_closed_form(c, n);
        for (const auto& side : c.sides) {
            KPoly got = eval_determinant(side, n);
            if (got != want) {
                r.pass = false;
                r.first_mismatch = ReportMismatch{n, got.str(), want.str()};
                r.note = "determinant over " + side.family;
                break;
            }
        }
    }
    return r;
}

VerificationReport verify_euler_hankel(int n_max) {
    VerificationReport r;
    r.id = "EQ_4_69";
    r.params = {{"n_max", n_max}};
    r.pass = true;
    Rational want = 1;
    for (int n = 1; n <= n_max; ++n) {
        want *= pow(Rational(factorial(static_cast<unsigned>(n - 1))), 2);
        Matrix<Rational> m(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = Rational(abs(euler_number(static_cast<unsigned>(i + j))));
        Rational got = determinant(m);
        if (got != want) {
            r.pass = false;
            r.first_mismatch = ReportMismatch{n, to_string(got), to_string(want)};
            break;
        }
    }
    return r;
}

}  // namespace sumsq
