#include "lambert_theta.hpp"

#include <map>
#include <mutex>

namespace sumsq {

Transform parse_transform(const std::string& s) {
    if (s == "plain") return Transform::Plain;
    if (s == "minus-q") return Transform::MinusQ;
    if (s == "q2" || s == "q^2") return Transform::QSquared;
    if (s == "sqrt-q") return Transform::SqrtQ;
    throw Error(ErrorKind::Domain, "unknown transform: " + s);
}

LambertSpec LambertSpec::apply(Transform t) const {
    LambertSpec r = *this;
    switch (t) {
        case Transform::Plain: break;
        case Transform::MinusQ: r.negate_q = !negate_q; break;
        case Transform::QSquared:
            if (negate_q) throw Error(ErrorKind::Grid, "q^2 after q -> -q is not supported");
            r.B *= 2, r.C *= 2, r.F *= 2, r.G *= 2, r.D /= 2;
            break;
        case Transform::SqrtQ:
            if (negate_q) throw Error(ErrorKind::Grid, "q^{1/2} after q -> -q is not supported");
            r.B /= 2, r.C /= 2, r.F /= 2, r.G /= 2, r.D *= 2;
            break;
    }
    return r;
}

namespace {

long quarter_units(const Rational& qexp) {
    Rational e = qexp * 4;
    if (e.get_den() != 1)
        throw Error(ErrorKind::Grid, "exponent " + to_string(qexp) + " is off the quarter grid");
    return e.get_num().get_si();
}

}  // namespace

QX lambert(const LambertSpec& s, long order) {
    if (s.B <= 0 || s.F <= 0 || s.B + s.C <= 0)
        throw Error(ErrorKind::Domain, "Lambert parameters do not give a convergent expansion");
    QX out(order);
    Rational minus_a = -s.A;
    Rational em = 1;
    for (long m = 1;; ++m) {
        em *= s.E;
        Rational bmc = s.B * m + s.C;
        Rational e0 = s.G - s.C + (s.F - s.B) * m + bmc;  // y = 1
        if (quarter_units(e0) >= order) break;
        Rational base = s.scale * em * pow(s.D * bmc, s.u);
        Rational coeff = base;
        for (long y = 1;; ++y) {
            Rational ex = s.G - s.C + (s.F - s.B) * m + bmc * y;
            long qe = quarter_units(ex);
            if (qe >= order) break;
            if (qe < 0) throw Error(ErrorKind::Domain, "negative exponent in Lambert series", qe);
            Rational term = coeff;
            if (s.negate_q) {
                if (ex.get_den() != 1)
                    throw Error(ErrorKind::Grid, "q -> -q on a fractional exponent", qe);
                if (mpz_odd_p(ex.get_num_mpz_t())) term = -term;
            }
            out[qe] += term;
            coeff *= minus_a;
        }
    }
    return out;
}

Family parse_family(const std::string& n) {
    static const std::map<std::string, Family> names = {
        {"V", Family::V}, {"U", Family::U}, {"G", Family::G}, {"R", Family::R},
        {"C", Family::C}, {"D", Family::D}, {"T", Family::T}, {"N", Family::N},
        {"That", Family::That}, {"Chat", Family::Chat}, {"Ttilde", Family::Ttilde}};
    auto it = names.find(n);
    if (it == names.end()) throw Error(ErrorKind::Domain, "unknown Lambert family: " + n);
    return it->second;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::V: return "V";
        case Family::U: return "U";
        case Family::G: return "G";
        case Family::R: return "R";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::T: return "T";
        case Family::N: return "N";
        case Family::That: return "That";
        case Family::Chat: return "Chat";
        case Family::Ttilde: return "Ttilde";
    }
    return "?";
}

LambertSpec family_spec(Family f, unsigned s) {
    auto mk = [s](long a, long b, long c, Rational d, long e, long f_, Rational g, long scale) {
        LambertSpec r;
        r.A = a, r.B = b, r.C = c, r.D = d, r.E = e, r.F = f_, r.G = g;
        r.u = s;
        r.scale = scale;
        return r;
    };
    const Rational half = frac(1, 2);
    switch (f) {
        case Family::V: return mk(-1, 1, 0, 1, 1, 1, 0, 1);
        case Family::U: return mk(1, 1, 0, 1, -1, 1, 0, -1);
        case Family::G: return mk(-1, 1, 0, 1, -1, 1, 0, 1);
        case Family::R: return mk(1, 2, -1, 1, -1, 2, -1, -1);
        case Family::C: return mk(-1, 4, -2, half, 1, 2, -1, 1);
        case Family::D: return mk(-1, 2, 0, half, 1, 1, 0, 1);
        case Family::T: return mk(1, 2, -1, 1, 1, 1, -half, 1);
        case Family::N: return mk(1, 2, 0, half, 1, 1, 0, 1);
        case Family::That: return mk(-1, 2, -1, 1, -1, 1, -half, 1);
        case Family::Chat: return mk(1, 2, -1, 1, -1, 1, -half, 1);
        case Family::Ttilde: return mk(1, 2, -1, 1, 1, 1, -1, 1);
    }
    throw Error(ErrorKind::Domain, "unknown family");
}

QX named_family(Family f, unsigned s, long order, Transform t) {
    return lambert(family_spec(f, s).apply(t), order);
}

Integer divisor_sum(DivisorKind kind, unsigned r, long n) {
    if (n < 1) throw Error(ErrorKind::Domain, "divisor sum needs n >= 1", n);
    Integer total = 0;
    auto add = [&](long d) {
        Integer t = ipow(d, r);
        bool neg = (kind == DivisorKind::SigmaDagger && (d & 1)) ||
                   (kind == DivisorKind::SigmaTilde && ((d + n / d) & 1));
        if (neg)
            total -= t;
        else
            total += t;
    };
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        add(d);
        if (d != n / d) add(n / d);
    }
    return total;
}

std::shared_ptr<const std::vector<Integer>> divisor_table(DivisorKind kind, unsigned r, long n_max) {
    static std::mutex mu;
    static std::map<std::pair<int, unsigned>, std::shared_ptr<const std::vector<Integer>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(kind), r);
    auto it = cache.find(key);
    if (it != cache.end() && static_cast<long>(it->second->size()) > n_max) return it->second;
    long n = std::max(n_max, 16L) * 2;
    auto t = std::make_shared<std::vector<Integer>>(static_cast<size_t>(n + 1), 0);
    for (long d = 1; d <= n; ++d) {
        Integer p = ipow(d, r);
        for (long k = d, q = 1; k <= n; k += d, ++q) {
            bool neg = (kind == DivisorKind::SigmaDagger && (d & 1)) ||
                       (kind == DivisorKind::SigmaTilde && ((d + q) & 1));
            if (neg)
                (*t)[k] -= p;
            else
                (*t)[k] += p;
        }
    }
    cache[key] = t;
    return t;
}

Theta parse_theta(const std::string& s) {
    if (s == "theta2") return Theta::T2;
    if (s == "theta3") return Theta::T3;
    if (s == "theta4") return Theta::T4;
    if (s == "triangle") return Theta::Triangle;
    throw Error(ErrorKind::Domain, "unknown theta function: " + s);
}

namespace {

QX theta_plain(Theta which, long order) {
    QX t(order);
    switch (which) {
        case Theta::T3:
        case Theta::T4:
            for (long j = 0; 4 * j * j < order; ++j) {
                Rational v = (j == 0) ? 1 : 2;
                if (which == Theta::T4 && (j & 1)) v = -v;
                t[4 * j * j] = v;
            }
            break;
        case Theta::T2:
            for (long j = 0; (2 * j + 1) * (2 * j + 1) < order; ++j) t[(2 * j + 1) * (2 * j + 1)] = 2;
            break;
        case Theta::Triangle:
            for (long j = 0; 2 * j * (j + 1) < order; ++j) t[2 * j * (j + 1)] = 1;
            break;
    }
    return t;
}

}  // namespace

QX theta(Theta which, Transform tr, long order) {
    switch (tr) {
        case Transform::Plain: return theta_plain(which, order);
        case Transform::MinusQ: return qx_twist(theta_plain(which, order));
        case Transform::QSquared: return qx_dilate(theta_plain(which, (order + 1) / 2), 2).truncate(order);
        case Transform::SqrtQ: return qx_halve(theta_plain(which, 2 * order)).truncate(order);
    }
    return QX(order);
}

QX theta_pow(Theta which, Transform t, unsigned p, long order) {
    return qx_pow(theta(which, t, order), p);
}

QX theta2_sqrt_pow(unsigned p, long order) {
    if (p % 2) throw Error(ErrorKind::Grid, "odd power of theta_2(q^{1/2}) is off the quarter grid", p);
    QX d = qx_pow(theta(Theta::Triangle, Transform::Plain, order), p);
    return (d * Rational(ipow(2, p))).shift(p / 2).truncate(order);
}

NomeBridge nome_bridge(long order) {
    QX t2 = theta(Theta::T2, Transform::Plain, order);
    QX t3 = theta(Theta::T3, Transform::Plain, order);
    QX t4 = theta(Theta::T4, Transform::Plain, order);
    QX inv3 = qx_invert(t3);
    QX inv3sq = inv3 * inv3;
    NomeBridge b;
    b.z = t3 * t3;
    b.k = t2 * t2 * inv3sq;
    b.ksq = b.k * b.k;
    b.kprime = t4 * t4 * inv3sq;
    b.kprime_sq = b.kprime * b.kprime;
    b.kprime_half = t4 * inv3;

    LambertSpec l1;
    l1.A = 1, l1.B = 1, l1.C = 0, l1.D = 1, l1.E = 1, l1.F = 1, l1.G = 0, l1.u = 1;
    LambertSpec l3 = l1;
    l3.B = 2, l3.C = -1, l3.F = 2, l3.G = -1;
    QX one = QX::constant(1, order);
    QX z2 = b.z * b.z;
    QX s1 = lambert(l1, order);
    QX s2 = lambert(l1.apply(Transform::QSquared), order);
    QX s3 = lambert(l3, order);
    Mismatch mm;
    if (first_mismatch(z2 * (one + b.ksq), one + s1 * Rational(24), mm) ||
        first_mismatch(z2 * (2 * one - b.ksq), 2 * one + s2 * Rational(48), mm) ||
        first_mismatch(z2 * (one - 2 * b.ksq), one - s3 * Rational(24), mm))
        throw Error(ErrorKind::Bridge, "nome bridge relation fails", mm.exponent);
    return b;
}

EisensteinSeries eisenstein(int weight, long order) {
    if (weight < 2 || weight % 2) throw Error(ErrorKind::Domain, "Eisenstein weight must be even and >= 2", weight);
    unsigned n = static_cast<unsigned>(weight / 2);
    QX v = named_family(Family::V, 2 * n - 1, order);
    Rational c = Rational(4 * n) / bernoulli(2 * n);
    return {weight, QX::constant(1, order) - v * c};
}

std::vector<VerificationReport> verify_eisenstein_combinations(int m, long order) {
    if (m < 1) throw Error(ErrorKind::Domain, "m must be >= 1", m);
    unsigned um = static_cast<unsigned>(m);
    auto dil = [order](const QX& a, long k) { return qx_dilate(a, k).truncate(order); };
    QX one = QX::constant(1, order);
    QX e = eisenstein(2 * m, order).series;
    QX e2 = dil(e, 2), e4 = dil(e, 4);
    QX f = eisenstein(2 * m + 2, order).series;
    QX f2 = dil(f, 2);
    Rational cb = bernoulli(2 * um) / Rational(4 * m);
    Rational cb1 = bernoulli(2 * um + 2) / Rational(4 * (m + 1));
    Rational p2m = Rational(ipow(2, 2 * um));
    Rational p2m1 = Rational(ipow(2, 2 * um - 1));
    nlohmann::json params = {{"m", m}};
    std::vector<VerificationReport> out;

    QX rhs_u = cb * ((p2m - 1) * one - e + 2 * (1 + p2m1) * e2 - 2 * p2m * e4);
    out.push_back(compare_series("EQ_2_93", params, named_family(Family::U, 2 * um - 1, order), rhs_u));
    QX rhs_g = cb1 * ((4 * p2m - 1) * one + f - 4 * p2m * f2);
    out.push_back(compare_series("EQ_2_94", params, named_family(Family::G, 2 * um + 1, order), rhs_g));
    QX rhs_c = cb * (-e + (1 + p2m1) * e2 - p2m1 * e4);
    out.push_back(compare_series("EQ_2_95", params, named_family(Family::C, 2 * um - 1, order), rhs_c));
    QX rhs_d = cb1 * (f2 - f);
    out.push_back(compare_series("EQ_2_96", params, named_family(Family::D, 2 * um + 1, order), rhs_d));
    return out;
}

}  // namespace sumsq
