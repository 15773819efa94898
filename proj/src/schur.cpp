#include "schur.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "lambert_theta.hpp"
#include "registry_util.hpp"

namespace sumsq {

// ---- Schur functions ------------------------------------------------------

namespace {

std::vector<int> padded(const std::vector<int>& lambda, size_t p) {
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw Error(ErrorKind::Domain, "negative partition part", lambda[i]);
        if (i && lambda[i] > lambda[i - 1]) throw Error(ErrorKind::Domain, "partition is not weakly decreasing");
    }
    std::vector<int> l(p, 0);
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (i < p)
            l[i] = lambda[i];
        else if (lambda[i] != 0)
            return {};  // more nonzero parts than variables
    }
    return l;
}

Rational jacobi_trudi(const std::vector<int>& l, const std::vector<Rational>& xs) {
    size_t p = xs.size();
    int top = l.empty() ? 0 : l[0] + static_cast<int>(p);
    // h[k] over the first v variables, updated in place
    std::vector<Rational> h(static_cast<size_t>(top) + 1, Rational(0));
    h[0] = 1;
    for (const auto& x : xs)
        for (int k = 1; k <= top; ++k) h[k] += x * h[k - 1];
    Matrix<Rational> m(p, std::vector<Rational>(p));
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j) {
            long k = l[i] - static_cast<long>(i) + static_cast<long>(j);
            m[i][j] = k < 0 ? Rational(0) : h[static_cast<size_t>(k)];
        }
    return determinant(std::move(m));
}

}  // namespace

Rational schur_eval(const Partition& lambda, const std::vector<Rational>& xs) {
    size_t p = xs.size();
    std::vector<int> l = padded(lambda.parts, p);
    if (l.size() != p) return 0;
    if (std::all_of(l.begin(), l.end(), [](int v) { return v == 0; })) return 1;
    bool distinct = true;
    for (size_t i = 0; i < p && distinct; ++i)
        for (size_t j = i + 1; j < p; ++j)
            if (xs[i] == xs[j]) {
                distinct = false;
                break;
            }
    if (!distinct) return jacobi_trudi(l, xs);
    Matrix<Rational> num(p, std::vector<Rational>(p));
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j) num[i][j] = pow(xs[i], l[j] + static_cast<long>(p - 1 - j));
    Rational vand = 1;
    for (size_t i = 0; i < p; ++i)
        for (size_t j = i + 1; j < p; ++j) vand *= xs[i] - xs[j];
    return determinant(std::move(num)) / vand;
}

Integer schur_eval(const Partition& lambda, const std::vector<Integer>& xs) {
    std::vector<Rational> r(xs.begin(), xs.end());
    Rational v = schur_eval(lambda, r);
    return v.get_num();
}

// ---- subsets and partitions -----------------------------------------------

std::vector<int> complement(const std::vector<int>& set, int n) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (std::find(set.begin(), set.end(), i) == set.end()) out.push_back(i);
    return out;
}

std::vector<std::vector<int>> subsets(int n, int p) {
    std::vector<std::vector<int>> out;
    if (p < 0 || p > n) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == p) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (p - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

Partition expansion_partitions(const std::vector<int>& set, const std::vector<long>& cb, long d) {
    size_t p = set.size();
    if (d <= 0) throw Error(ErrorKind::Divisor, "divisor must be positive", d);
    std::vector<int> lam(p);
    for (size_t i = 1; i <= p; ++i) {
        size_t idx = static_cast<size_t>(set[p - i]);
        if (idx >= cb.size()) throw Error(ErrorKind::Length, "index beyond the b/c sequence", static_cast<long>(idx));
        long diff = cb[idx] - cb[static_cast<size_t>(set[0])];
        if (diff % d != 0) throw Error(ErrorKind::Divisor, "divisor does not divide the differences", d);
        lam[i - 1] = static_cast<int>(diff / d + static_cast<long>(i) - static_cast<long>(p));
    }
    for (size_t i = 0; i < p; ++i)
        if (lam[i] < 0 || (i && lam[i] > lam[i - 1]))
            throw Error(ErrorKind::Domain, "sequence does not give a partition");
    return Partition(lam);
}

// ---- enumeration ----------------------------------------------------------

namespace {

long quarter(const Rational& v, const char* what) {
    Rational q = 4 * v;
    if (q.get_den() != 1) throw Error(ErrorKind::Grid, std::string(what) + " is off the quarter grid");
    return reg::as_long(q);
}

// Strictly decreasing m_1 > ... > m_p from lo, lo + step, ... with
// sum cost(m_r) < budget. cost must increase with m.
void decreasing_tuples(int p, long lo, long step, long budget, const std::function<long(long)>& cost,
                       const std::function<void(const std::vector<long>&, long)>& visit) {
    std::vector<long> asc;
    std::vector<long> m(static_cast<size_t>(p));
    std::function<void(long, long)> rec = [&](long from, long partial) {
        int k = p - static_cast<int>(asc.size());
        if (k == 0) {
            for (int r = 0; r < p; ++r) m[r] = asc[static_cast<size_t>(p - 1 - r)];
            visit(m, partial);
            return;
        }
        for (long v = from;; v += step) {
            long c = cost(v);
            if (partial + k * c >= budget) break;
            asc.push_back(v);
            rec(v + step, partial + c);
            asc.pop_back();
        }
    };
    rec(lo, 0);
}

// y_r = 1, 1 + step, ...: exponent start + sum (y_r - 1) inc_r < budget.
void y_tuples(const std::vector<long>& inc, long step, long start, long budget,
              const std::function<void(long, long)>& visit) {
    size_t p = inc.size();
    std::function<void(size_t, long, long)> rec = [&](size_t r, long e, long ysum) {
        if (r == p) {
            visit(e, ysum);
            return;
        }
        for (long y = 1; e < budget; y += step, e += step * inc[r]) rec(r + 1, e, ysum + y);
    };
    if (start < budget) rec(0, start, 0);
}

Rational vandermonde(const std::vector<Rational>& x) {
    Rational v = 1;
    for (size_t r = 0; r < x.size(); ++r)
        for (size_t s = r + 1; s < x.size(); ++s) v *= x[r] - x[s];
    return v;
}

std::vector<Rational> powers(const std::vector<Rational>& x, long d) {
    std::vector<Rational> out;
    for (const auto& v : x) out.push_back(pow(v, d));
    return out;
}

long set_sum(const std::vector<int>& s) {
    long t = 0;
    for (int v : s) t += v;
    return t;
}

}  // namespace

// ---- Lambert determinant expansion ------------------------------------------

void ExpansionConfig::validate() const {
    if (n < 1) throw Error(ErrorKind::Domain, "n must be >= 1", n);
    size_t need = static_cast<size_t>(n) + 1;
    if (b.size() < need || c.size() < need) throw Error(ErrorKind::Length, "b and c need entries 1..n", n);
    size_t alen = static_cast<size_t>(chi ? 2 * n + 1 : 2 * n);
    if (a.size() < alen) throw Error(ErrorKind::Length, "a needs entries up to a_{2n}", n);
    for (int i = 2; i <= n; ++i)
        if (b[i] <= b[i - 1] || c[i] <= c[i - 1]) throw Error(ErrorKind::Domain, "b and c must increase strictly", i);
    if (d_b <= 0 || d_c <= 0) throw Error(ErrorKind::Divisor, "divisors must be positive");
    for (int i = 2; i <= n; ++i) {
        if ((b[i] - b[1]) % d_b) throw Error(ErrorKind::Divisor, "d_b does not divide b_i - b_1", i);
        if ((c[i] - c[1]) % d_c) throw Error(ErrorKind::Divisor, "d_c does not divide c_i - c_1", i);
    }
    if (A == 0 || D == 0) throw Error(ErrorKind::Domain, "A and D must be nonzero");
    if (B <= 0 || F <= 0 || B + C <= 0) throw Error(ErrorKind::Domain, "need B > 0, F > 0, B + C > 0");
}

namespace {

void check_subset(const std::vector<int>& S, int n) {
    for (size_t i = 0; i < S.size(); ++i)
        if (S[i] < 1 || S[i] > n || (i && S[i] <= S[i - 1]))
            throw Error(ErrorKind::Domain, "S must be an increasing subset of 1..n");
}

// a_{i+j-1}, or a_{i+n} in the last column of the chi variant
const Rational& const_entry(const ExpansionConfig& cfg, int i, int j) {
    int idx = cfg.chi && j == cfg.n ? i + cfg.n : i + j - 1;
    return cfg.a[static_cast<size_t>(idx)];
}

}  // namespace

QX expand_lambert_det(const ExpansionConfig& cfg, const std::vector<int>& S, long order) {
    cfg.validate();
    check_subset(S, cfg.n);
    int n = cfg.n, p = static_cast<int>(S.size());
    if (p == 0) {
        Matrix<Rational> m(n, std::vector<Rational>(n));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = const_entry(cfg, i, j);
        return QX::constant(determinant(std::move(m)), order);
    }
    std::vector<int> Sc = complement(S, n);
    Partition lam = expansion_partitions(S, cfg.c, cfg.d_c);

    struct TTerm {
        Rational coef;
        long pow;
        Partition nu;
    };
    std::vector<TTerm> terms;
    for (const auto& T : subsets(n, p)) {
        std::vector<int> Tc = complement(T, n);
        size_t k = Sc.size();
        Matrix<Rational> d(k, std::vector<Rational>(k));
        for (size_t r = 0; r < k; ++r)
            for (size_t s = 0; s < k; ++s) d[r][s] = const_entry(cfg, Sc[r], Tc[s]);
        Rational coef = reg::sign(set_sum(S) + set_sum(T)) * determinant(std::move(d));
        if (coef == 0) continue;
        terms.push_back({coef, cfg.c[S[0]] + cfg.b[T[0]], expansion_partitions(T, cfg.b, cfg.d_b)});
    }

    // exponent per r: (F - B) m + (B m + C) y, plus p (G - C) overall
    long base = quarter(Rational(p) * (cfg.G - cfg.C), "p(G - C)");
    auto inc_of = [&](long m) { return quarter(cfg.B * m + cfg.C, "B m + C"); };
    auto drift_of = [&](long m) { return quarter((cfg.F - cfg.B) * m, "(F - B) m"); };
    long budget = order - base;
    Rational minus_a = -cfg.A;
    Rational lead = pow(minus_a, -p);

    QX out(order);
    if (budget <= 0) return out;
    std::vector<Rational> acc(static_cast<size_t>(order), Rational(0));
    std::vector<long> touched;
    decreasing_tuples(
        p, 1, 1, budget, [&](long m) { return drift_of(m) + inc_of(m); },
        [&](const std::vector<long>& m, long start) {
            std::vector<Rational> x;
            long msum = 0;
            for (long v : m) {
                x.push_back(cfg.D * (cfg.B * v + cfg.C));
                msum += v;
            }
            auto xc = powers(x, cfg.d_c), xb = powers(x, cfg.d_b);
            Rational w = vandermonde(xc) * vandermonde(xb) * schur_eval(lam, xc);
            if (w == 0) return;
            Rational prod = 1;
            for (const auto& v : x) prod *= v;
            Rational inner = 0;
            for (const auto& t : terms) inner += t.coef * pow(prod, t.pow) * schur_eval(t.nu, xb);
            w *= inner * pow(cfg.E, msum) * lead;
            if (w == 0) return;
            std::vector<long> inc;
            for (long v : m) inc.push_back(inc_of(v));
            y_tuples(inc, 1, start, budget, [&](long e, long ysum) {
                Rational& slot = acc[static_cast<size_t>(e + base)];
                if (slot == 0) touched.push_back(e + base);
                slot += w * pow(minus_a, ysum);
            });
        });
    for (long e : touched) out[e] = acc[static_cast<size_t>(e)];
    return out;
}

QX direct_lambert_det(const ExpansionConfig& cfg, const std::vector<int>& S, long order) {
    cfg.validate();
    check_subset(S, cfg.n);
    int n = cfg.n;
    Matrix<QX> m(n, std::vector<QX>(n));
    for (int i = 1; i <= n; ++i) {
        bool in = std::find(S.begin(), S.end(), i) != S.end();
        for (int j = 1; j <= n; ++j) {
            if (!in) {
                m[i - 1][j - 1] = QX::constant(const_entry(cfg, i, j), order);
                continue;
            }
            long u = cfg.c[i] + cfg.b[j];
            if (u < 0) throw Error(ErrorKind::Domain, "negative Lambert index", u);
            LambertSpec spec{cfg.A, cfg.B, cfg.C, cfg.D, cfg.E, cfg.F, cfg.G, static_cast<unsigned>(u)};
            m[i - 1][j - 1] = lambert(spec, order);
        }
    }
    return determinant(m, order);
}

// ---- printed multiple sums ------------------------------------------------

namespace {

Rational seq_value(ConstSeq s, long i) {
    if (i < 1) throw Error(ErrorKind::Domain, "constant index below 1", i);
    auto u = static_cast<unsigned>(i);
    switch (s) {
        case ConstSeq::C: return c_coeff(u);
        case ConstSeq::A: return a_coeff(u);
        case ConstSeq::B: return b_coeff(u);
    }
    return 0;
}

struct LaplaceTerm {
    Rational coef;
    long pow;
    std::vector<int> lam, nu;
};

std::vector<LaplaceTerm> laplace_terms(const MultiSum& ms, int n, int p) {
    std::vector<LaplaceTerm> out;
    if (ms.inner == Inner::One) return out;
    bool chi = ms.inner == Inner::LaplaceChi;
    auto sets = subsets(n, p);
    for (const auto& S : sets) {
        std::vector<int> Sc = complement(S, n);
        for (const auto& T : sets) {
            std::vector<int> Tc = complement(T, n);
            size_t k = Sc.size();
            Matrix<Rational> d(k, std::vector<Rational>(k));
            for (size_t r = 0; r < k; ++r)
                for (size_t s = 0; s < k; ++s) {
                    long idx = Sc[r] + Tc[s] - 1 + ms.d_offset + (chi && Tc[s] == n ? 1 : 0);
                    d[r][s] = seq_value(ms.seq, idx);
                }
            Rational coef = reg::sign(set_sum(S) + set_sum(T)) * determinant(std::move(d));
            if (coef == 0) continue;
            LaplaceTerm t;
            t.coef = coef;
            t.pow = 2L * S[0] + 2L * T[0] - 4 + (chi && T[0] == n ? 2 : 0);
            for (int i = 1; i <= p; ++i) {
                t.lam.push_back(S[p - i] - S[0] + i - p);
                t.nu.push_back(T[p - i] - T[0] + i - p);
            }
            if (chi && p > 1 && T[p - 1] == n) t.nu[0] += 1;
            out.push_back(std::move(t));
        }
    }
    return out;
}

void check_multisum(const MultiSum& ms, int n, int p) {
    if (p < 0) throw Error(ErrorKind::Domain, "p must be >= 0", p);
    if (ms.inner != Inner::One && (p > n || n < 1)) throw Error(ErrorKind::Domain, "need 1 <= p <= n", p);
    if (ms.ysign == YSign::Half && !ms.y_odd) throw Error(ErrorKind::Domain, "the half y-sign needs odd y");
    if (ms.msign == MSign::Half && !ms.m_odd) throw Error(ErrorKind::Domain, "the half m-sign needs odd m");
    if (ms.kappa <= 0 || ms.kappa + ms.shift <= 0) throw Error(ErrorKind::Domain, "the q-exponent must grow with m");
}

Rational weight_with(const MultiSum& ms, const std::vector<long>& m, const std::vector<LaplaceTerm>& lap) {
    size_t p = m.size();
    long msum = 0;
    Integer prod = 1;
    std::vector<Integer> sq;
    for (long v : m) {
        msum += v;
        prod *= v;
        sq.push_back(Integer(v) * v);
    }
    Rational w = 1;
    if (ms.msign == MSign::Alt) w *= reg::sign(msum);
    if (ms.msign == MSign::Half) w *= reg::sign((static_cast<long>(p) + msum) / 2);
    if (ms.prod_pow) w *= pow(Rational(prod), ms.prod_pow);
    for (size_t r = 0; r < p; ++r)
        for (size_t s = r + 1; s < p; ++s) {
            Integer d = sq[r] - sq[s];
            w *= d * d;
        }
    if (ms.sq_sum) {
        Integer t = 0;
        for (const auto& v : sq) t += v;
        w *= t;
    }
    if (!ms.poly.empty()) {
        Rational t = 0;
        for (const auto& mono : ms.poly) {
            Rational term = mono.coeff;
            for (size_t r = 0; r < mono.exps.size() && r < p; ++r)
                for (int k = 0; k < mono.exps[r]; ++k) term *= sq[r];
            t += term;
        }
        w *= t;
    }
    if (ms.inner != Inner::One) {
        std::vector<Rational> xs(sq.begin(), sq.end());
        std::map<std::vector<int>, Rational> cache;
        auto s = [&](const std::vector<int>& l) -> const Rational& {
            auto it = cache.find(l);
            if (it != cache.end()) return it->second;
            return cache.emplace(l, schur_eval(Partition(l), xs)).first->second;
        };
        Rational inner = 0;
        for (const auto& t : lap) inner += t.coef * pow(Rational(prod), t.pow) * s(t.lam) * s(t.nu);
        w *= inner;
    }
    return w;
}

long y_sign(const MultiSum& ms, long ysum, int p) {
    switch (ms.ysign) {
        case YSign::None: return 1;
        case YSign::Alt: return ysum % 2 ? -1 : 1;
        case YSign::Half: return ((ysum - p) / 2) % 2 ? -1 : 1;
    }
    return 1;
}

// Calls visit(m, W, inc, start) for every m-tuple with nonzero weight.
void for_each_m(const MultiSum& ms, int n, int p, long order,
                const std::function<void(const std::vector<long>&, const Rational&, const std::vector<long>&, long)>& visit) {
    check_multisum(ms, n, p);
    auto lap = laplace_terms(ms, n, p);
    auto inc_of = [&](long m) { return quarter(ms.kappa * m, "kappa m"); };
    auto drift_of = [&](long m) { return quarter(ms.shift * m, "shift m"); };
    if (p == 0) {
        Rational w = weight_with(ms, {}, lap);
        if (w != 0 && order > 0) visit({}, w, {}, 0);
        return;
    }
    decreasing_tuples(
        p, 1, ms.m_odd ? 2 : 1, order, [&](long m) { return inc_of(m) + drift_of(m); },
        [&](const std::vector<long>& m, long start) {
            Rational w = weight_with(ms, m, lap);
            if (w == 0) return;
            std::vector<long> inc;
            for (long v : m) inc.push_back(inc_of(v));
            visit(m, w, inc, start);
        });
}

}  // namespace

Rational multisum_weight(const MultiSum& ms, int n, const std::vector<long>& m) {
    int p = static_cast<int>(m.size());
    check_multisum(ms, n, p);
    return weight_with(ms, m, laplace_terms(ms, n, p));
}

std::vector<MultiSumTerm> multisum_terms(const MultiSum& ms, int n, int p, long order) {
    std::vector<MultiSumTerm> out;
    long ystep = ms.y_odd ? 2 : 1;
    for_each_m(ms, n, p, order,
               [&](const std::vector<long>& m, const Rational& w, const std::vector<long>& inc, long start) {
                   // walk the y-tuples explicitly to record them
                   std::vector<long> y(m.size(), 1);
                   std::function<void(size_t, long)> rec = [&](size_t r, long e) {
                       if (r == m.size()) {
                           long ysum = 0;
                           for (long v : y) ysum += v;
                           out.push_back({m, y, e, w * y_sign(ms, ysum, p)});
                           return;
                       }
                       for (y[r] = 1; e < order; y[r] += ystep, e += ystep * inc[r]) rec(r + 1, e);
                       y[r] = 1;
                   };
                   if (start < order) rec(0, start);
               });
    return out;
}

QX multisum_series(const MultiSum& ms, int n, int p, long order) {
    QX out(order);
    if (order <= 0) return out;
    std::vector<long> buf(static_cast<size_t>(order), 0);
    std::vector<char> mark(static_cast<size_t>(order), 0);
    std::vector<long> touched;
    long ystep = ms.y_odd ? 2 : 1;
    for_each_m(ms, n, p, order,
               [&](const std::vector<long>&, const Rational& w, const std::vector<long>& inc, long start) {
                   y_tuples(inc, ystep, start, order, [&](long e, long ysum) {
                       if (!mark[e]) {
                           mark[e] = 1;
                           touched.push_back(e);
                       }
                       buf[e] += y_sign(ms, ysum, p);
                   });
                   for (long e : touched) {
                       if (buf[e]) out[e] += w * buf[e];
                       buf[e] = 0;
                       mark[e] = 0;
                   }
                   touched.clear();
               });
    return out;
}

// ---- registry -------------------------------------------------------------

namespace {

using namespace reg;

MultiSum with_pow(MultiSum ms, int prod_pow) {
    ms.prod_pow = prod_pow;
    return ms;
}

// lead + sum_{p=1}^n (-1)^{ss_n n + p + ss_0} K MS_p
SeriesBuilder ie_form(MultiSum ms, Prod prod, Den den = Den::One) {
    return [=](const IdentityRecord& r, int n, long o) {
        Rational k = prefactor(r, n, prod, den);
        QX s = QX::constant(r.c("lead_0") + r.c("lead_n") * n, o);
        long ss = as_long(r.c("ss_n")) * n + as_long(r.c("ss_0"));
        for (int p = 1; p <= n; ++p) s += (sign(ss + p) * k) * multisum_series(ms, n, p, o);
        return s;
    };
}

// K MS_n
SeriesBuilder single(MultiSum ms, Prod prod, Den den = Den::One) {
    return [=](const IdentityRecord& r, int n, long o) {
        return prefactor(r, n, prod, den) * multisum_series(ms, n, n, o);
    };
}

// K MS_n + K' MS'_{n-1}, the second sum being 1 when n = 1 unless it carries sum m^2
SeriesBuilder two_term(MultiSum a, MultiSum b, Prod prod, Den den = Den::One) {
    return [=](const IdentityRecord& r, int n, long o) {
        return prefactor(r, n, prod, den) * multisum_series(a, n, n, o) +
               prefactor(r, n, prod, den, "b_") * multisum_series(b, n - 1, n - 1, o);
    };
}

std::vector<NamedConstant> pre_sum(const Pre& p, long ss_n, long ss_0, long lead_0, long lead_n) {
    auto k = pre(p);
    k.push_back({"ss_n", ss_n});
    k.push_back({"ss_0", ss_0});
    k.push_back({"lead_0", lead_0});
    k.push_back({"lead_n", lead_n});
    return k;
}

std::vector<NamedConstant> pre2(const Pre& a, const Pre& b) {
    auto k = pre(a);
    add_pre(k, b, "b_");
    return k;
}

// the theta side of the s5 record with the same left-hand side
SeriesBuilder lhs_from(const std::string& id) { return identity_record(id).lhs; }

QX tri(long p, long o, Transform t = Transform::Plain) {
    return theta_pow(Theta::Triangle, t, static_cast<unsigned>(p), o);
}

struct Builder {
    std::vector<IdentityRecord> out;

    IdentityRecord& add(const std::string& id, const std::string& group, SeriesBuilder lhs, SeriesBuilder rhs,
                        std::vector<NamedConstant> k, bool parametric = true) {
        IdentityRecord r;
        r.id = id;
        r.group = group;
        r.parametric = parametric;
        r.n_min = 1;
        r.n_max = 4;
        r.constants = std::move(k);
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        out.push_back(std::move(r));
        return out.back();
    }
};

MultiSum laplace(ConstSeq seq, int d_offset, bool chi) {
    MultiSum ms;
    ms.inner = chi ? Inner::LaplaceChi : Inner::Laplace;
    ms.seq = seq;
    ms.d_offset = d_offset;
    return ms;
}

void register_s7(Builder& b) {
    const std::string g = "s7";

    // inclusion-exclusion forms of the theta_3(-q) powers
    MultiSum ms1 = laplace(ConstSeq::C, 0, false);
    ms1.ysign = YSign::Alt;
    ms1.msign = MSign::Alt;
    ms1.prod_pow = 1;
    MultiSum ms2 = laplace(ConstSeq::A, 0, false);
    ms2.msign = MSign::Alt;
    ms2.prod_pow = 3;
    MultiSum ms3 = laplace(ConstSeq::B, 0, false);
    ms3.m_odd = true;
    ms3.ysign = YSign::Alt;
    ms3.msign = MSign::Half;
    MultiSum ms4 = ms3;
    ms4.prod_pow = 2;
    ms4.d_offset = 1;

    b.add("THM_7_1", g, lhs_from("THM_5_4"), ie_form(ms1, Prod::FactOdd), pre_sum({0, 0, 0, 2, 1, 0}, 0, 0, 1, 0));
    b.add("THM_7_2", g, lhs_from("THM_5_6"), ie_form(ms2, Prod::FactEven), pre_sum({0, 0, 0, 2, 3, 0}, 1, 0, 1, 0));
    b.add("THM_7_3", g, lhs_from("THM_5_8"), ie_form(ms3, Prod::EvenSq), pre_sum({0, 0, 0, 0, 2, 0}, 0, 0, 1, 0));
    b.add("THM_7_4", g, lhs_from("THM_5_10"), ie_form(ms4, Prod::OddSq), pre_sum({0, 0, 0, 0, 2, 0}, 1, 0, 1, 0));

    auto chi_of = [](MultiSum ms) {
        ms.inner = Inner::LaplaceChi;
        return ms;
    };
    b.add("THM_7_14", g, lhs_from("THM_5_24"), ie_form(chi_of(ms1), Prod::FactOdd, Den::N4n2m1),
          pre_sum({0, 0, 0, 2, 1, 1, 3}, 0, 1, 1, 0));
    b.add("THM_7_15", g, lhs_from("THM_5_26"), ie_form(chi_of(ms2), Prod::FactEven, Den::Nn1_2n1),
          pre_sum({0, 0, 0, 2, 3, 0, 3}, 1, 1, 1, 0));
    b.add("THM_7_16", g, lhs_from("THM_5_28"), ie_form(chi_of(ms3), Prod::EvenSq, Den::N2nm1),
          pre_sum({0, 0, 0, 0, 2, 0, 3}, 0, 1, -1, 4));
    b.add("THM_7_17", g, lhs_from("THM_5_30"), ie_form(chi_of(ms4), Prod::OddSq, Den::N2np1),
          pre_sum({0, 0, 0, 0, 2, 0, 3}, 1, 1, 1, 4));

    // single p = n forms
    MultiSum odd_odd;  // y, m odd
    odd_odd.y_odd = odd_odd.m_odd = true;
    odd_odd.prod_pow = 1;
    MultiSum y_odd3;
    y_odd3.y_odd = true;
    y_odd3.prod_pow = 3;
    MultiSum cn;  // y, m odd, half y-sign, q^{m y / 2}
    cn.y_odd = cn.m_odd = true;
    cn.ysign = YSign::Half;
    cn.kappa = frac(1, 2);
    MultiSum dn;  // y odd, half y-sign
    dn.y_odd = true;
    dn.ysign = YSign::Half;

    b.add("THM_7_5_7_36", g, lhs_from("THM_5_11_5_93"), single(odd_odd, Prod::FactOdd), pre({0, 0, 0, 2, 2, 0}));
    b.add("THM_7_5_7_37", g, lhs_from("THM_5_11_5_94"), single(y_odd3, Prod::FactEven), pre({0, 0, 0, 4, 5, 0}));
    b.add("COR_7_6_7_54", g, lhs_from("COR_5_12_5_107"), single(odd_odd, Prod::FactOdd), pre({0, 0, 0, -2, 2, 0}))
        .degenerate_conventions = "q^{-n^2} on the right is applied as q^{n^2} on the left";
    b.add("COR_7_6_7_55", g, lhs_from("COR_5_12_5_108"), single(y_odd3, Prod::FactEven), pre({0, 0, 0, 0, 1, 0}))
        .degenerate_conventions = "q^{-n(n+1)/2} on the right is applied as q^{n(n+1)/2} on the left";
    b.add("THM_7_8", g, lhs_from("THM_5_13"), single(cn, Prod::EvenSq), pre({0, 0, 0, 0, 2, 0}));
    b.add("EQ_7_65", g, lhs_from("EQ_5_116"), single(cn, Prod::EvenSq), pre({0, 0, 0, 2, 0, 0}));
    b.add("THM_7_9", g, lhs_from("THM_5_14"), single(with_pow(cn, 2), Prod::OddSq), pre({0, 0, 0, 0, 2, 0}));
    b.add("COR_7_10", g,
          [](const IdentityRecord&, int n, long o) {
              return (theta_pow(Theta::T3, Transform::Plain, static_cast<unsigned>(2 * n), o) *
                      tri(4L * n * n, o))
                  .shift(2L * n * n)
                  .truncate(o);
          },
          single(with_pow(cn, 2), Prod::OddSq), pre({0, 0, 0, -2, 2, 0}))
        .degenerate_conventions = "q^{-n^2/2} on the right is applied as q^{n^2/2} on the left";
    b.add("THM_7_11", g, lhs_from("THM_5_16"), two_term(dn, with_pow(dn, 4), Prod::EvenSq),
          pre2({0, 0, 0, 2, 0, 0}, {0, 0, 0, 2, 0, -2}))
        .degenerate_conventions = "the second sum is 1 at n = 1";
    b.add("THM_7_12", g, lhs_from("THM_5_17"), single(with_pow(dn, 2), Prod::OddSq), pre({0, 0, 0, 2, 2, 0}));
    b.add("COR_7_13", g, lhs_from("COR_5_18_5_143"), single(with_pow(dn, 2), Prod::OddSq), pre({0, 0, 0, 0, 0, 0}))
        .degenerate_conventions = "q^{-n(n+1)/2} on the right is applied as q^{n(n+1)/2} on the left";

    // sums weighted by m_1^2 + ... + m_p^2
    auto sq = [](MultiSum ms) {
        ms.sq_sum = true;
        return ms;
    };
    b.add("THM_7_18_7_99", g, lhs_from("THM_5_31"), single(sq(odd_odd), Prod::FactOdd, Den::N4n2m1),
          pre({0, 0, 0, 2, 2, 0, 3}));
    b.add("THM_7_18_7_100", g, lhs_from("THM_5_32"), single(sq(y_odd3), Prod::FactEven, Den::Nn1_2n1),
          pre({0, 0, 0, 4, 5, 0, 6}));
    b.add("THM_7_19", g, lhs_from("THM_5_33"), single(sq(cn), Prod::EvenSq, Den::N2nm1), pre({0, 0, 0, 0, 2, 0, 3}));
    b.add("THM_7_20", g, lhs_from("THM_5_34"), single(sq(with_pow(cn, 2)), Prod::OddSq, Den::N2np1),
          pre({0, 0, 0, 0, 2, 0, 3}));
    b.add("THM_7_21", g, lhs_from("THM_5_35"), two_term(sq(dn), sq(with_pow(dn, 4)), Prod::EvenSq, Den::TwoN2nm1),
          // printed as 4^{n^2} and 4^{n^2-1}; the series agree with 4^{n^2+1}, 4^{n^2}
          pre2({0, 0, 0, 2, 0, 2, 3}, {0, 0, 0, 2, 0, 0, 3}))
        .degenerate_conventions = "the second sum is 0 at n = 1";
    b.add("THM_7_22", g, lhs_from("THM_5_36"), single(sq(with_pow(dn, 2)), Prod::OddSq, Den::N2np1),
          pre({0, 0, 0, 2, 2, 0, 6}));

    // fixed identities; q^{-1} and q q factors are moved to the left
    auto scaled = [](MultiSum ms, int p) {
        return [ms, p](const IdentityRecord& r, int, long o) {
            return r.c("scale") * multisum_series(with_pow(ms, static_cast<int>(as_long(r.c("pow")))), p, p, o);
        };
    };
    MultiSum leg1 = odd_odd, leg2 = y_odd3;
    b.add("THM_7_7_7_56", g, [](const IdentityRecord&, int, long o) { return tri(4, o, Transform::QSquared).shift(4).truncate(o); },
          scaled(leg1, 1), {{"scale", 1}, {"pow", 1}}, false)
        .degenerate_conventions = "q^{-1} on the right is applied as q on the left";
    b.add("THM_7_7_7_57", g, [](const IdentityRecord&, int, long o) { return tri(8, o).shift(4).truncate(o); },
          scaled(leg2, 1), {{"scale", 1}, {"pow", 3}}, false)
        .degenerate_conventions = "q^{-1} on the right is applied as q on the left";
    MultiSum m66;
    m66.m_odd = true;
    m66.ysign = YSign::Alt;
    m66.shift = frac(-1, 2);
    b.add("EQ_7_66", g,
          [](const IdentityRecord&, int, long o) {
              return (tri(4, o, Transform::QSquared) * tri(8, o)).shift(8).truncate(o);
          },
          scaled(m66, 2), {{"scale", frac(1, 64)}, {"pow", 0}}, false);
}

// explicit small cases of the theta_3(-q) powers
MultiSum explicit_sum(bool y_alt, int prod_pow, std::vector<Monomial> poly) {
    MultiSum ms;
    if (y_alt) ms.ysign = YSign::Alt;
    ms.msign = MSign::Alt;
    ms.prod_pow = prod_pow;
    ms.poly = std::move(poly);
    return ms;
}

// poly coefficients named prefix_<exponents>
std::vector<Monomial> read_poly(const IdentityRecord& r, const std::string& prefix,
                                const std::vector<std::vector<int>>& exps) {
    std::vector<Monomial> out;
    for (const auto& e : exps) {
        std::string name = prefix + "_";
        for (int v : e) name += std::to_string(v);
        out.push_back({r.c(name), e});
    }
    return out;
}

void add_poly(std::vector<NamedConstant>& k, const std::string& prefix, const std::vector<std::vector<int>>& exps,
              const std::vector<long>& coeffs) {
    for (size_t i = 0; i < exps.size(); ++i) {
        std::string name = prefix + "_";
        for (int v : exps[i]) name += std::to_string(v);
        k.push_back({name, coeffs[i]});
    }
}

const std::vector<std::vector<int>> one_var = {{0}, {1}, {2}, {3}, {4}};
const std::vector<std::vector<int>> two_var = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2},
                                               {1, 1}, {2, 1}, {1, 2}, {2, 2}};

// lead + c1 S_1(poly p1) + c2 S_2(poly p2) + c3 S_3
SeriesBuilder explicit_rhs(bool y_alt, int prod_pow, size_t p1_len, bool p2_poly, int terms) {
    return [=](const IdentityRecord& r, int, long o) {
        std::vector<std::vector<int>> e1(one_var.begin(), one_var.begin() + static_cast<long>(p1_len));
        QX s = QX::constant(r.c("lead"), o);
        s += r.c("c1") * multisum_series(explicit_sum(y_alt, prod_pow, read_poly(r, "p1", e1)), 1, 1, o);
        std::vector<Monomial> poly2;
        if (p2_poly) poly2 = read_poly(r, "p2", two_var);
        s += r.c("c2") * multisum_series(explicit_sum(y_alt, prod_pow, poly2), 2, 2, o);
        if (terms >= 3) s += r.c("c3") * multisum_series(explicit_sum(y_alt, prod_pow, {}), 3, 3, o);
        return s;
    };
}

void register_s8(Builder& b) {
    const std::string g = "s8";
    auto t4 = [](long p) {
        return [p](const IdentityRecord&, int, long o) {
            return theta_pow(Theta::T4, Transform::Plain, static_cast<unsigned>(p), o);
        };
    };
    {
        std::vector<NamedConstant> k = {{"lead", 1}, {"c1", frac(-32, 3)}, {"c2", frac(256, 3)}};
        add_poly(k, "p1", {{0}, {1}, {2}}, {1, 1, 1});
        b.add("COR_8_1", g, t4(16), explicit_rhs(true, 1, 3, false, 2), k, false);
    }
    {
        std::vector<NamedConstant> k = {{"lead", 1}, {"c1", frac(16, 9)}, {"c2", frac(512, 9)}};
        add_poly(k, "p1", {{0}, {1}, {2}}, {17, 8, 2});
        b.add("COR_8_2", g, t4(24), explicit_rhs(false, 3, 3, false, 2), k, false);
    }
    {
        std::vector<NamedConstant> k = {
            {"lead", 1}, {"c1", frac(-8, 45)}, {"c2", frac(512, 135)}, {"c3", frac(-8192, 135)}};
        add_poly(k, "p1", one_var, {69, 120, 172, 40, 4});
        add_poly(k, "p2", two_var, {62, 17, 17, 2, 2, 8, 2, 2, 2});
        b.add("COR_8_3", g, t4(36), explicit_rhs(true, 1, 5, true, 3), k, false);
    }
    {
        std::vector<NamedConstant> k = {
            {"lead", 1}, {"c1", frac(32, 675)}, {"c2", frac(1024, 6075)}, {"c3", frac(32768, 6075)}};
        add_poly(k, "p1", one_var, {902, 760, 321, 40, 2});
        add_poly(k, "p2", two_var, {1382, 248, 248, 17, 17, 68, 8, 8, 2});
        b.add("COR_8_4", g, t4(48), explicit_rhs(false, 3, 5, true, 3), k, false);
    }
}

}  // namespace

const std::vector<IdentityRecord>& schur_records() {
    static const std::vector<IdentityRecord> recs = [] {
        Builder b;
        register_s7(b);
        register_s8(b);
        std::sort(b.out.begin(), b.out.end(),
                  [](const IdentityRecord& x, const IdentityRecord& y) { return x.id < y.id; });
        return b.out;
    }();
    return recs;
}

const IdentityRecord& schur_record(const std::string& id) {
    for (const auto& r : schur_records())
        if (r.id == id) return r;
    throw Error(ErrorKind::Registry, "unknown Schur form identity: " + id);
}

const std::vector<std::string>& schur_groups() {
    static const std::vector<std::string> g = {"s7", "s8"};
    return g;
}

VerificationReport schur_form_identity(const std::string& id, int n, long order) {
    return verify_record(schur_record(id), n, order);
}

std::vector<VerificationReport> schur_suite(const std::string& group, int n, long order, int jobs) {
    if (std::find(schur_groups().begin(), schur_groups().end(), group) == schur_groups().end())
        throw Error(ErrorKind::Registry, "unknown suite: " + group);
    std::vector<std::pair<const IdentityRecord*, int>> tasks;
    for (const auto& r : schur_records()) {
        if (r.group != group) continue;
        if (!r.parametric)
            tasks.push_back({&r, 0});
        else if (n >= r.n_min && n <= r.n_max)
            tasks.push_back({&r, n});
    }
    std::vector<VerificationReport> out(tasks.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next++; i < tasks.size(); i = next++)
            out[i] = verify_record(*tasks[i].first, tasks[i].second, order);
    };
    int nt = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < nt; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

// ---- counting -------------------------------------------------------------

namespace {

// s = 4n^2 gives +1, s = 4n(n+1) gives -1 (with n), anything else 0
int split_s(int s, int& n) {
    for (n = 1; 4 * n * n <= s; ++n) {
        if (4 * n * n == s) return 1;
        if (4 * n * (n + 1) == s) return -1;
    }
    return 0;
}

std::vector<Integer> to_integers(const std::vector<Rational>& v, const char* what) {
    std::vector<Integer> out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw Error(ErrorKind::Domain, std::string(what) + " is not an integer", static_cast<long>(i));
        out.push_back(v[i].get_num());
    }
    return out;
}

}  // namespace

std::vector<Integer> t_count_table(int s, long n_max) {
    if (n_max < 0) throw Error(ErrorKind::Domain, "n_max must be >= 0", n_max);
    int n = 0;
    int kind = split_s(s, n);
    if (!kind) throw Error(ErrorKind::Domain, "t_count supports s = 4n^2 and s = 4n(n+1)", s);
    const IdentityRecord& rec = schur_record(kind > 0 ? "COR_7_6_7_54" : "COR_7_6_7_55");
    // t_s(N) sits at q^{2N + n^2} (triangles in q^2) or q^{N + n(n+1)/2}
    long step = kind > 0 ? 8 : 4;
    long shift = kind > 0 ? 4L * n * n : 2L * n * (n + 1);
    QX rhs = rec.rhs(rec, n, step * n_max + shift + 1);
    std::vector<Rational> v;
    for (long N = 0; N <= n_max; ++N) v.push_back(rhs[step * N + shift]);
    return to_integers(v, "triangular count");
}

Integer t_count(int s, long N) {
    if (N < 0) throw Error(ErrorKind::Domain, "N must be >= 0", N);
    return t_count_table(s, N)[N];
}

std::vector<Integer> r_count_via_schur_table(int s, long n_max) {
    if (n_max < 0) throw Error(ErrorKind::Domain, "n_max must be >= 0", n_max);
    int n = 0;
    int kind = split_s(s, n);
    if (!kind) throw Error(ErrorKind::Domain, "r_count_via_schur supports s = 4n^2 and s = 4n(n+1)", s);
    const IdentityRecord& rec = schur_record(kind > 0 ? "THM_7_1" : "THM_7_2");
    QX rhs = rec.rhs(rec, n, 4 * n_max + 1);
    std::vector<Rational> v;
    for (long N = 0; N <= n_max; ++N) v.push_back(sign(N) * rhs.q_coeff(N));
    return to_integers(v, "square count");
}

Integer r_count_via_schur(int s, long N) {
    if (N < 0) throw Error(ErrorKind::Domain, "N must be >= 0", N);
    return r_count_via_schur_table(s, N)[N];
}

}  // namespace sumsq
