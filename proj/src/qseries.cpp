#include "qseries.hpp"

#include <algorithm>

namespace sumsq {

QX QX::constant(const Rational& v, long order) {
    QX r(order);
    if (order > 0) r.c_[0] = v;
    return r;
}

QX QX::monomial(long e, const Rational& v, long order) {
    QX r(order);
    if (e >= 0 && e < order) r.c_[static_cast<size_t>(e)] = v;
    return r;
}

Rational QX::coeff(long e) const {
    if (e < 0) return 0;
    if (e >= order()) throw Error(ErrorKind::Length, "coefficient beyond truncation", e);
    return c_[static_cast<size_t>(e)];
}

bool QX::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

long QX::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<long>(i);
    return -1;
}

QX QX::truncate(long order) const {
    QX r(std::min(order, this->order()));
    std::copy(c_.begin(), c_.begin() + r.order(), r.c_.begin());
    return r;
}

QX QX::shift(long e) const {
    if (e >= 0) {
        QX r(order() + e);
        std::copy(c_.begin(), c_.end(), r.c_.begin() + e);
        return r;
    }
    long n = std::max(0L, order() + e);
    QX r(n);
    std::copy(c_.begin() - e, c_.end(), r.c_.begin());
    return r;
}

QX& QX::operator+=(const QX& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        if (o.c_[i] != 0) c_[i] += o.c_[i];
    return *this;
}

QX& QX::operator-=(const QX& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        if (o.c_[i] != 0) c_[i] -= o.c_[i];
    return *this;
}

QX& QX::operator*=(const Rational& s) {
    for (auto& v : c_)
        if (v != 0) v *= s;
    return *this;
}

QX operator+(QX a, const QX& b) { return a += b; }
QX operator-(QX a, const QX& b) { return a -= b; }

QX operator-(QX a) {
    a *= Rational(-1);
    return a;
}

QX operator*(const QX& a, const QX& b) {
    long n = std::min(a.order(), b.order());
    QX r(n);
    std::vector<long> nb;
    for (long j = 0; j < n; ++j)
        if (b[j] != 0) nb.push_back(j);
    Rational t;
    for (long i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (long j : nb) {
            if (i + j >= n) break;
            mpq_mul(t.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
            r[i + j] += t;
        }
    }
    return r;
}

QX operator*(QX a, const Rational& s) { return a *= s; }
QX operator*(const Rational& s, QX a) { return a *= s; }

QX qx_pow(const QX& a, unsigned e) {
    QX result = QX::constant(1, a.order());
    QX base = a;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

QX qx_invert(const QX& a) {
    long n = a.order();
    if (n == 0) return a;
    if (a[0] == 0) throw Error(ErrorKind::NonUnit, "series has zero constant term");
    Rational inv0 = 1 / a[0];
    std::vector<long> na;
    for (long k = 1; k < n; ++k)
        if (a[k] != 0) na.push_back(k);
    QX b(n);
    b[0] = inv0;
    Rational s, t;
    for (long m = 1; m < n; ++m) {
        s = 0;
        for (long k : na) {
            if (k > m) break;
            if (b[m - k] == 0) continue;
            mpq_mul(t.get_mpq_t(), a[k].get_mpq_t(), b[m - k].get_mpq_t());
            s += t;
        }
        if (s != 0) b[m] = -s * inv0;
    }
    return b;
}

QX qx_dilate(const QX& a, long m) {
    if (m <= 0) throw Error(ErrorKind::Domain, "dilation factor must be positive", m);
    QX r(a.order() * m);
    for (long e = 0; e < a.order(); ++e)
        if (a[e] != 0) r[e * m] = a[e];
    return r;
}

QX qx_twist(const QX& a) {
    QX r = a;
    for (long e = 0; e < a.order(); ++e) {
        if (a[e] == 0) continue;
        if (e % 4 != 0) throw Error(ErrorKind::Grid, "q -> -q needs integer q-exponents", e);
        if ((e / 4) % 2 == 1) r[e] = -a[e];
    }
    return r;
}

QX qx_halve(const QX& a) {
    QX r((a.order() + 1) / 2);
    for (long e = 0; e < a.order(); ++e) {
        if (a[e] == 0) continue;
        if (e % 2 != 0) throw Error(ErrorKind::Grid, "q -> q^{1/2} leaves the quarter grid", e);
        r[e / 2] = a[e];
    }
    return r;
}

QX euler_product(const std::vector<std::pair<long, long>>& pairs, long order) {
    QX result = QX::constant(1, order);
    for (auto [s, e] : pairs) {
        if (s <= 0) throw Error(ErrorKind::Domain, "euler_product scale must be positive", s);
        // pentagonal numbers k(3k-1)/2 for k in Z, in quarter units times s
        QX base(order);
        for (long k = 0;; ++k) {
            bool any = false;
            for (long kk : {k, -k - 1}) {
                long ex = 4 * s * (kk * (3 * kk - 1) / 2);
                if (ex < order) {
                    base[ex] = (kk % 2 == 0) ? 1 : -1;
                    any = true;
                }
            }
            if (!any) break;
        }
        if (e >= 0)
            result = result * qx_pow(base, static_cast<unsigned>(e));
        else
            result = result * qx_pow(qx_invert(base), static_cast<unsigned>(-e));
    }
    return result;
}

bool first_mismatch(const QX& a, const QX& b, Mismatch& out) {
    long n = std::min(a.order(), b.order());
    for (long e = 0; e < n; ++e) {
        if (a[e] != b[e]) {
            out = {e, a[e], b[e]};
            return true;
        }
    }
    return false;
}

}  // namespace sumsq
