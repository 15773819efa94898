#include "registry_util.hpp"

namespace sumsq::reg {

long as_long(const Rational& r) {
    if (r.get_den() != 1 || !r.get_num().fits_slong_p())
        throw Error(ErrorKind::Domain, "exponent constant must be a small integer: " + to_string(r));
    return r.get_num().get_si();
}

Rational sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// sum_{r>=1} f(r) x^{E(r)} / (1 + x^{E(r)}) with E(r) = a r + b quarter units.
static QX plus_lambert(long a, long b, Rational (*f)(long), long order) {
    QX s(order);
    for (long r = 1; a * r + b < order; ++r) {
        long e = a * r + b;
        Rational fr = f(r);
        for (long y = 1; e * y < order; ++y) {
            if (y % 2 == 1)
                s[e * y] += fr;
            else
                s[e * y] -= fr;
        }
    }
    return s;
}

static Rational f_r(long r) { return r; }
static Rational f_odd(long r) { return 2 * r - 1; }
static Rational f_even(long r) { return 2 * r; }

QX bracket_plus(long order) { return QX::constant(1, order) + Rational(24) * plus_lambert(4, 0, f_r, order); }
QX bracket_odd(long order) { return QX::constant(1, order) - Rational(24) * plus_lambert(8, -4, f_odd, order); }
QX bracket_even(long order) { return QX::constant(2, order) + Rational(24) * plus_lambert(8, 0, f_even, order); }
QX bracket_q2(long order) { return QX::constant(1, order) + Rational(24) * plus_lambert(8, 0, f_r, order); }

Integer product(Prod p, int n) {
    Integer v = 1;
    switch (p) {
        case Prod::None: break;
        case Prod::FactOdd:
            for (int r = 1; r <= 2 * n - 1; ++r) v *= factorial(r);
            break;
        case Prod::FactEven:
            for (int r = 1; r <= 2 * n; ++r) v *= factorial(r);
            break;
        case Prod::EvenSq:
            for (int r = 1; r < n; ++r) v *= factorial(2 * r) * factorial(2 * r);
            break;
        case Prod::OddSq:
            for (int r = 1; r <= n; ++r) v *= factorial(2 * r - 1) * factorial(2 * r - 1);
            break;
    }
    return v;
}

Integer denominator(Den d, long n) {
    switch (d) {
        case Den::One: return 1;
        case Den::N4n2m1: return Integer(n * (4 * n * n - 1));
        case Den::Nn1_2n1: return Integer(n * (n + 1) * (2 * n + 1));
        case Den::N2nm1: return Integer(n * (2 * n - 1));
        case Den::N2np1: return Integer(n * (2 * n + 1));
        case Den::TwoN2nm1: return Integer(2 * n * (2 * n - 1));
    }
    return 1;
}

void add_pre(std::vector<NamedConstant>& k, const Pre& p, const std::string& pfx) {
    k.push_back({pfx + "sgn_tri", p.t});
    k.push_back({pfx + "sgn_n", p.s});
    k.push_back({pfx + "sgn_0", p.s0});
    k.push_back({pfx + "pow2_nn", p.a});
    k.push_back({pfx + "pow2_n", p.b});
    k.push_back({pfx + "pow2_0", p.c});
    k.push_back({pfx + "num", p.num});
}

Rational prefactor(const IdentityRecord& r, long n, Prod prod, Den den, const std::string& pfx) {
    long e = as_long(r.c(pfx + "sgn_tri")) * (n * (n + 1) / 2) + as_long(r.c(pfx + "sgn_n")) * n +
             as_long(r.c(pfx + "sgn_0"));
    long p2 = as_long(r.c(pfx + "pow2_nn")) * n * n + as_long(r.c(pfx + "pow2_n")) * n + as_long(r.c(pfx + "pow2_0"));
    Rational v = sign(e) * pow(Rational(2), p2) * r.c(pfx + "num");
    return v / Rational(denominator(den, n) * product(prod, static_cast<int>(n)));
}

std::vector<NamedConstant> pre(const Pre& p) {
    std::vector<NamedConstant> k;
    add_pre(k, p);
    return k;
}

}  // namespace sumsq::reg
