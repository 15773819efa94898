#include "hankel_cfrac.hpp"

#include <functional>

namespace sumsq {

namespace {

using LevelFn = std::function<CFLevel(int)>;

const KPoly K = KPoly::var();

KPoly R(long v) { return KPoly(Rational(v)); }

// Associated fraction whose first level is (lead w)/(1 + beta(1) w) and whose
// later levels are (-alpha(n) w^2)/(1 + beta(n) w).
LevelFn assoc(long lead, std::function<KPoly(long)> alpha, std::function<KPoly(long)> beta) {
    return [=](int n) {
        return CFLevel{n == 1 ? R(lead) : alpha(n), beta(n)};
    };
}

// Regular fraction with gamma_1 = 1.
LevelFn regular(std::function<KPoly(long)> even, std::function<KPoly(long)> odd) {
    return [=](int n) {
        if (n == 1) return CFLevel{R(1), KPoly()};
        long m = n / 2;
        return CFLevel{n % 2 == 0 ? even(m) : odd(m), KPoly()};
    };
}

struct Entry {
    CFFamily info;
    LevelFn level;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = [] {
        // a = 2n-1, b = 2n-2, c = 2n-3, d = 2n
        auto a = [](long n) { return 2 * n - 1; };
        auto b = [](long n) { return 2 * n - 2; };
        auto c = [](long n) { return 2 * n - 3; };
        auto d = [](long n) { return 2 * n; };
        KPoly kp = 1 - K;       // k'^2
        KPoly kkp = K * kp;     // (k k')^2
        KPoly k1 = K;           // k, for the three k-families
        KPoly opk2 = (1 + k1) * (1 + k1);
        auto odd_num = [=](long n) { return R(a(n) * b(n) * b(n) * c(n)); };
        auto even_num = [=](long n) { return R(b(n) * b(n) * c(n) * c(n)); };
        auto mixed_num = [=](long n) { return R(b(n) * b(n) * a(n) * a(n)); };
        auto sq_num = [=](long n) { return R(d(n) * a(n) * a(n) * b(n)); };
        auto sq = [](long v) { return R(v * v); };
        std::vector<Entry> v;
        auto add = [&](const char* name, const char* series, CFShape shape, int shift, LevelFn f) {
            v.push_back({{name, series, shape, shift}, std::move(f)});
        };
        const CFShape A = CFShape::Assoc;
        add("sn", "sn", A, 0, assoc(1, [=](long n) { return odd_num(n) * K; },
                                    [=](long n) { return sq(a(n)) * (1 + K); }));
        add("cn", "cn", A, -1, assoc(1, [=](long n) { return even_num(n) * K; },
                                     [=](long n) { return sq(a(n)) + sq(b(n)) * K; }));
        add("dn", "dn", A, -1, assoc(1, [=](long n) { return even_num(n) * K; },
                                     [=](long n) { return sq(a(n)) * K + sq(b(n)); }));
        add("sc", "sc", A, 0, assoc(1, [=](long n) { return mixed_num(n) * K; },
                                    [=](long n) { return sq(d(n)) + sq(a(n)) * K; }));
        add("sd", "sd", A, 0, assoc(1, [=](long n) { return mixed_num(n) * K; },
                                    [=](long n) { return sq(a(n)) + sq(d(n)) * K; }));
        add("s/d", "s/d", A, 0, assoc(1, [=](long n) { return -(odd_num(n) * kkp); },
                                      [=](long n) { return sq(a(n)) * (1 - 2 * K); }));
        add("c/d", "c/d", A, -1, assoc(1, [=](long n) { return -(even_num(n) * kkp); },
                                       [=](long n) { return sq(a(n)) * kp - sq(b(n)) * K; }));
        add("nd", "nd", A, -1, assoc(1, [=](long n) { return -(even_num(n) * kkp); },
                                     [=](long n) { return sq(b(n)) * kp - sq(a(n)) * K; }));
        add("sc/d^2", "sc/d^2", A, 0, assoc(1, [=](long n) { return -(mixed_num(n) * kkp); },
                                            [=](long n) { return sq(d(n)) * kp - sq(a(n)) * K; }));
        add("s/d^2", "s/d^2", A, 0, assoc(1, [=](long n) { return -(mixed_num(n) * kkp); },
                                          [=](long n) { return sq(a(n)) * kp - sq(d(n)) * K; }));
        add("sn^2", "sn^2", A, 0, assoc(2, [=](long n) { return sq_num(n) * K; },
                                        [=](long n) { return sq(d(n)) * (1 + K); }));
        add("s^2/d^2", "s^2/d^2", A, 0, assoc(2, [=](long n) { return -(sq_num(n) * kkp); },
                                              [=](long n) { return sq(d(n)) * (1 - 2 * K); }));
        add("sc/d", "sc/d", A, 0, assoc(1, [=](long n) { return odd_num(n) * K * K; },
                                        [=](long n) { return sq(a(n)) * (4 - 2 * K); }));
        add("s^2c^2/d^2", "s^2c^2/d^2", A, 0, assoc(2, [=](long n) { return sq_num(n) * K * K; },
                                                    [=](long n) { return sq(d(n)) * (4 - 2 * K); }));
        add("(1-ksn^2)/(1+ksn^2)", "(1-ksn^2)/(1+ksn^2)", A, -1,
            assoc(1, [=](long n) { return 4 * even_num(n) * k1 * opk2; },
                  [=](long n) { return 4 * sq(a(n)) * k1 + sq(b(n)) * opk2; }));
        add("sn/(1+ksn^2)", "sn/(1+ksn^2)", A, 0,
            assoc(1, [=](long n) { return 4 * odd_num(n) * k1 * opk2; },
                  [=](long n) { return sq(a(n)) * (1 + 6 * k1 + k1 * k1); }));
        add("cndn/(1+ksn^2)", "cndn/(1+ksn^2)", A, -1,
            assoc(1, [=](long n) { return 4 * even_num(n) * k1 * opk2; },
                  [=](long n) { return sq(a(n)) * opk2 + 4 * sq(b(n)) * k1; }));

        add("s/c", "s/c", A, 0, assoc(1, [=](long n) { return odd_num(n) * kp; },
                                      [=](long n) { return sq(a(n)) * (K - 2); }));
        add("d/c", "d/c", A, -1, assoc(1, [=](long n) { return even_num(n) * kp; },
                                       [=](long n) { return -(sq(a(n)) * kp + sq(b(n))); }));
        add("nc", "nc", A, -1, assoc(1, [=](long n) { return even_num(n) * kp; },
                                     [=](long n) { return -(sq(a(n)) + sq(b(n)) * kp); }));
        add("s^2/c^2", "s^2/c^2", A, 0, assoc(2, [=](long n) { return sq_num(n) * kp; },
                                              [=](long n) { return sq(d(n)) * (K - 2); }));
        add("sd/c^2", "sd/c^2", A, 0, assoc(1, [=](long n) { return mixed_num(n) * kp; },
                                            [=](long n) { return -(sq(a(n)) + sq(d(n)) * kp); }));
        add("s/c^2", "s/c^2", A, 0, assoc(1, [=](long n) { return mixed_num(n) * kp; },
                                          [=](long n) { return -(sq(d(n)) + sq(a(n)) * kp); }));
        add("sd/c", "sd/c", A, 0, assoc(1, [=](long n) { return odd_num(n); },
                                        [=](long n) { return 2 * sq(a(n)) * (2 * K - 1); }));
        add("s/cd", "s/cd", A, 0, assoc(1, [=](long n) { return odd_num(n) * kp * kp; },
                                        [=](long n) { return -(sq(a(n)) * (2 + 2 * K)); }));
        add("s^2d^2/c^2", "s^2d^2/c^2", A, 0, assoc(2, [=](long n) { return sq_num(n); },
                                                    [=](long n) { return 2 * sq(d(n)) * (2 * K - 1); }));
        add("s^2/c^2d^2", "s^2/c^2d^2", A, 0, assoc(2, [=](long n) { return sq_num(n) * kp * kp; },
                                                    [=](long n) { return -(sq(d(n)) * (2 + 2 * K)); }));

        const CFShape G = CFShape::Regular;
        // gamma_{2m} and gamma_{2m+1} for m >= 1
        add("reg:cn", "cn", G, -1, regular([=](long m) { return sq(2 * m - 1); },
                                           [=](long m) { return sq(2 * m) * K; }));
        add("reg:dn", "dn", G, -1, regular([=](long m) { return sq(2 * m - 1) * K; },
                                           [=](long m) { return sq(2 * m); }));
        add("reg:c/d", "c/d", G, -1, regular([=](long m) { return sq(2 * m - 1) * kp; },
                                             [=](long m) { return -(sq(2 * m) * K); }));
        add("reg:nd", "nd", G, -1, regular([=](long m) { return -(sq(2 * m - 1) * K); },
                                           [=](long m) { return sq(2 * m) * kp; }));
        add("reg:d/c", "d/c", G, -1, regular([=](long m) { return -(sq(2 * m - 1) * kp); },
                                             [=](long m) { return -sq(2 * m); }));
        add("reg:nc", "nc", G, -1, regular([=](long m) { return -sq(2 * m - 1); },
                                           [=](long m) { return -(sq(2 * m) * kp); }));
        return v;
    }();
    return e;
}

const Entry& entry(const std::string& name) {
    for (const auto& e : entries())
        if (name == e.info.name) return e;
    throw Error(ErrorKind::Registry, "unknown continued fraction family: " + name);
}

std::string var_of(const CFFamily& f) {
    return elliptic_families()[family_index(f.series)].in_k ? "k" : "K";
}

std::string paren(const KPoly& p, const std::string& var) {
    std::string s = p.str(var);
    if (s.find(' ') == std::string::npos) return s;
    return "(" + s + ")";
}

}  // namespace

const std::vector<CFFamily>& cf_families() {
    static const std::vector<CFFamily> f = [] {
        std::vector<CFFamily> r;
        for (const auto& e : entries()) r.push_back(e.info);
        return r;
    }();
    return f;
}

const CFFamily& cf_family(const std::string& name) { return entry(name).info; }

CFLevel cf_closed_form(const std::string& name, int n) {
    if (n < 1) throw Error(ErrorKind::Domain, "continued fraction level must be >= 1", n);
    return entry(name).level(n);
}

std::vector<KPoly> cf_moments(const std::string& name, int terms) {
    const CFFamily& f = cf_family(name);
    int top = terms + f.shift;
    std::vector<KPoly> co = elliptic_coeffs(f.series, top);
    int first = first_index(f.series);
    std::vector<KPoly> r{KPoly(1)};
    for (int m = 1; m <= terms; ++m) r.push_back(co[m + f.shift - first]);
    return r;
}

std::string cf_level_numerator(const std::string& name, int n) {
    const CFFamily& f = cf_family(name);
    CFLevel l = cf_closed_form(name, n);
    std::string v = var_of(f);
    if (f.shape == CFShape::Regular) return n == 1 ? "x" : paren(l.alpha, v) + "*x^2";
    if (n == 1) {
        int p = f.shift == -1 ? 1 : (l.alpha == KPoly(2) ? 3 : 2);
        return (l.alpha == KPoly(1) ? std::string() : paren(l.alpha, v) + "*") + (p == 1 ? "x" : "x^" + std::to_string(p));
    }
    return paren(-l.alpha, v) + "*x^4";
}

std::string cf_level_denominator(const std::string& name, int n) {
    const CFFamily& f = cf_family(name);
    if (f.shape == CFShape::Regular) return "1";
    CFLevel l = cf_closed_form(name, n);
    return "1 + " + paren(l.beta, var_of(f)) + "*x^2";
}

}  // namespace sumsq
