#include "kpoly.hpp"

#include <map>
#include <mutex>

namespace sumsq {

KPoly::KPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

KPoly::KPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void KPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

KPoly& KPoly::operator+=(const KPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

KPoly& KPoly::operator-=(const KPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

KPoly& KPoly::operator*=(const KPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Rational KPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

KPoly KPoly::square_var() const {
    std::vector<Rational> r(c_.empty() ? 0 : 2 * c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
    return KPoly(std::move(r));
}

std::string KPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational v = c_[i];
        bool neg = v < 0;
        if (neg) v = -v;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (i == 0 || v != 1) s += to_string(v);
        if (i > 0) {
            if (v != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
KPoly operator-(const KPoly& a) { return KPoly() - a; }
KPoly operator*(KPoly a, const KPoly& b) { return a *= b; }

KPoly kpow(const KPoly& a, unsigned e) {
    KPoly r(1), b = a;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

void divmod(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r) {
    if (b.is_zero()) throw Error(ErrorKind::NonUnit, "polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    std::vector<Rational> quo(rem.size() >= static_cast<size_t>(db + 1) ? rem.size() - db : 0);
    Rational lead = b[db];
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        Rational f = rem[i] / lead;
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b[j];
    }
    q = KPoly(std::move(quo));
    r = KPoly(std::move(rem));
}

KPoly exact_div(const KPoly& a, const KPoly& b) {
    KPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw Error(ErrorKind::Domain, "inexact polynomial division");
    return q;
}

QX kpoly_eval_qx(const KPoly& p, const QX& ksq) {
    QX r(ksq.order());
    for (int i = p.degree(); i >= 0; --i) r = r * ksq + QX::constant(p[i], ksq.order());
    return r;
}

UKSeries uk_mul(const UKSeries& a, const UKSeries& b) {
    int n = std::min(a.order(), b.order());
    UKSeries r;
    r.terms.assign(n, KPoly());
    for (int i = 0; i < n; ++i) {
        if (a.terms[i].is_zero()) continue;
        for (int j = 0; i + j < n; ++j)
            if (!b.terms[j].is_zero()) r.terms[i + j] += a.terms[i] * b.terms[j];
    }
    return r;
}

UKSeries uk_invert(const UKSeries& a) {
    int n = a.order();
    if (n == 0) return a;
    if (a.terms[0].degree() != 0) throw Error(ErrorKind::NonUnit, "u-series constant term is not a nonzero constant");
    Rational inv0 = 1 / a.terms[0][0];
    UKSeries b;
    b.terms.assign(n, KPoly());
    b.terms[0] = KPoly(inv0);
    for (int m = 1; m < n; ++m) {
        KPoly s;
        for (int k = 1; k <= m; ++k)
            if (!a.terms[k].is_zero() && !b.terms[m - k].is_zero()) s += a.terms[k] * b.terms[m - k];
        b.terms[m] = s * KPoly(-inv0);
    }
    return b;
}

UKSeries uk_add(const UKSeries& a, const UKSeries& b) {
    int n = std::min(a.order(), b.order());
    UKSeries r;
    for (int i = 0; i < n; ++i) r.terms.push_back(a.terms[i] + b.terms[i]);
    return r;
}

UKSeries uk_scale(const UKSeries& a, const KPoly& s) {
    UKSeries r = a;
    for (auto& t : r.terms) t *= s;
    return r;
}

const std::vector<FamilyInfo>& elliptic_families() {
    static const std::vector<FamilyInfo> f = {
        {"sn", Parity::Odd, false},          {"cn", Parity::Even, false},
        {"dn", Parity::Even, false},         {"s/d", Parity::Odd, false},
        {"c/d", Parity::Even, false},        {"nd", Parity::Even, false},
        {"s/c", Parity::Odd, false},         {"d/c", Parity::Even, false},
        {"nc", Parity::Even, false},         {"sn^2", Parity::Square, false},
        {"s^2/c^2", Parity::Square, false},  {"s^2/d^2", Parity::Square, false},
        {"sc/d", Parity::Odd, false},        {"sd/c", Parity::Odd, false},
        {"s/cd", Parity::Odd, false},        {"s^2c^2/d^2", Parity::Square, false},
        {"s^2d^2/c^2", Parity::Square, false}, {"s^2/c^2d^2", Parity::Square, false},
        {"sd", Parity::Odd, false},          {"sc", Parity::Odd, false},
        {"s/d^2", Parity::Odd, false},       {"sc/d^2", Parity::Odd, false},
        {"s/c^2", Parity::Odd, false},       {"sd/c^2", Parity::Odd, false},
        {"(1-ksn^2)/(1+ksn^2)", Parity::Even, true},
        {"sn/(1+ksn^2)", Parity::Odd, true},
        {"cndn/(1+ksn^2)", Parity::Even, true},
    };
    return f;
}

int family_index(const std::string& tag) {
    const auto& f = elliptic_families();
    for (size_t i = 0; i < f.size(); ++i)
        if (tag == f[i].tag) return static_cast<int>(i);
    throw Error(ErrorKind::Domain, "unknown elliptic family: " + tag);
}

int first_index(const std::string& tag) {
    return elliptic_families()[family_index(tag)].parity == Parity::Even ? 0 : 1;
}

void jacobi_series(int order, UKSeries& sn, UKSeries& cn, UKSeries& dn) {
    sn.terms.assign(order, KPoly());
    cn.terms.assign(order, KPoly());
    dn.terms.assign(order, KPoly());
    if (order == 0) return;
    cn.terms[0] = 1;
    dn.terms[0] = 1;
    KPoly K = KPoly::var();
    for (int j = 0; j + 1 < order; ++j) {
        KPoly cd, sd, sc;
        for (int i = 0; i <= j; ++i) {
            cd += cn.terms[i] * dn.terms[j - i];
            sd += sn.terms[i] * dn.terms[j - i];
            sc += sn.terms[i] * cn.terms[j - i];
        }
        Rational inv = frac(1, j + 1);
        sn.terms[j + 1] = cd * KPoly(inv);
        cn.terms[j + 1] = sd * KPoly(-inv);
        dn.terms[j + 1] = K * sc * KPoly(-inv);
    }
}

namespace {

UKSeries in_k(const UKSeries& a) {
    UKSeries r = a;
    for (auto& t : r.terms) t = t.square_var();
    return r;
}

}  // namespace

UKSeries family_series(const std::string& tag, int order) {
    UKSeries s, c, d;
    jacobi_series(order, s, c, d);
    auto mul = uk_mul;
    auto inv = uk_invert;
    if (tag == "sn") return s;
    if (tag == "cn") return c;
    if (tag == "dn") return d;
    if (tag == "s/d") return mul(s, inv(d));
    if (tag == "c/d") return mul(c, inv(d));
    if (tag == "nd") return inv(d);
    if (tag == "s/c") return mul(s, inv(c));
    if (tag == "d/c") return mul(d, inv(c));
    if (tag == "nc") return inv(c);
    if (tag == "sn^2") return mul(s, s);
    if (tag == "s^2/c^2") return mul(mul(s, s), inv(mul(c, c)));
    if (tag == "s^2/d^2") return mul(mul(s, s), inv(mul(d, d)));
    if (tag == "sc/d") return mul(mul(s, c), inv(d));
    if (tag == "sd/c") return mul(mul(s, d), inv(c));
    if (tag == "s/cd") return mul(s, inv(mul(c, d)));
    if (tag == "s^2c^2/d^2") {
        UKSeries t = mul(mul(s, c), inv(d));
        return mul(t, t);
    }
    if (tag == "s^2d^2/c^2") {
        UKSeries t = mul(mul(s, d), inv(c));
        return mul(t, t);
    }
    if (tag == "s^2/c^2d^2") {
        UKSeries t = mul(s, inv(mul(c, d)));
        return mul(t, t);
    }
    if (tag == "sd") return mul(s, d);
    if (tag == "sc") return mul(s, c);
    if (tag == "s/d^2") return mul(s, inv(mul(d, d)));
    if (tag == "sc/d^2") return mul(mul(s, c), inv(mul(d, d)));
    if (tag == "s/c^2") return mul(s, inv(mul(c, c)));
    if (tag == "sd/c^2") return mul(mul(s, d), inv(mul(c, c)));
    // k-families: substitute K -> k^2 first
    UKSeries sk = in_k(s), ck = in_k(c), dk = in_k(d);
    UKSeries one;
    one.terms.assign(order, KPoly());
    if (order) one.terms[0] = 1;
    UKSeries ks2 = uk_scale(mul(sk, sk), KPoly::var());
    UKSeries den = inv(uk_add(one, ks2));
    if (tag == "(1-ksn^2)/(1+ksn^2)") return mul(uk_add(one, uk_scale(ks2, -1)), den);
    if (tag == "sn/(1+ksn^2)") return mul(sk, den);
    if (tag == "cndn/(1+ksn^2)") return mul(mul(ck, dk), den);
    throw Error(ErrorKind::Domain, "unknown elliptic family: " + tag);
}

namespace {

std::mutex cache_mu;
std::map<std::string, std::vector<KPoly>> cache;  // full normalized list from first_index

}  // namespace

std::vector<KPoly> elliptic_coeffs(const std::string& tag, int m_max) {
    int idx = family_index(tag);
    Parity par = elliptic_families()[idx].parity;
    int m0 = par == Parity::Even ? 0 : 1;
    if (m_max < m0) return {};
    std::lock_guard<std::mutex> lock(cache_mu);
    auto& v = cache[tag];
    if (static_cast<int>(v.size()) < m_max - m0 + 1) {
        int target = std::max(m_max, 8);
        int order = 2 * target + 2;
        UKSeries s = family_series(tag, order);
        v.clear();
        for (int m = m0; m <= target; ++m) {
            int j = par == Parity::Odd ? 2 * m - 1 : 2 * m;
            v.push_back(s.terms[j] * KPoly(Rational(factorial(j))));
        }
    }
    return std::vector<KPoly>(v.begin(), v.begin() + (m_max - m0 + 1));
}

KPoly elliptic_coeff(const std::string& tag, int m) {
    int m0 = first_index(tag);
    if (m < m0) throw Error(ErrorKind::Domain, "index below the family's range", m);
    return elliptic_coeffs(tag, m).back();
}

}  // namespace sumsq
