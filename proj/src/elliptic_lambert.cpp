#include "elliptic_lambert.hpp"

#include "kpoly.hpp"

namespace sumsq {

const std::vector<std::string>& elliptic_lambert_ids() {
    static const std::vector<std::string> ids = {"EQ_2_80", "EQ_2_81", "EQ_2_82", "EQ_2_83",
                                                 "EQ_2_84", "EQ_2_85", "EQ_2_86", "EQ_2_87",
                                                 "EQ_2_88", "EQ_2_89", "EQ_2_90"};
    return ids;
}

namespace {

Rational sgn_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

QX zpow(const NomeBridge& b, unsigned e) { return qx_pow(b.z, e); }

}  // namespace

VerificationReport verify_elliptic_lambert(const std::string& id, int m, long order, const NomeBridge& b) {
    if (m < 1 && id != "EQ_2_87") throw Error(ErrorKind::Domain, "m must be >= 1", m);
    unsigned um = static_cast<unsigned>(m);
    auto ev = [&](const std::string& fam, int idx) { return kpoly_eval_qx(elliptic_coeff(fam, idx), b.ksq); };
    auto cst = [&](const Rational& v) { return QX::constant(v, order); };
    Rational two = 2;
    QX lhs, rhs;
    if (id == "EQ_2_80") {
        lhs = named_family(Family::U, 2 * um - 1, order, Transform::MinusQ);
        rhs = cst(sgn_pow(m - 1) * Rational(ipow(2, 2 * um) - 1) * abs(bernoulli(2 * um)) / (4 * m)) +
              sgn_pow(m) / pow(two, 2 * m + 1) * zpow(b, 2 * um) * ev("sd/c", m);
    } else if (id == "EQ_2_81") {
        lhs = named_family(Family::G, 2 * um + 1, order, Transform::MinusQ);
        rhs = cst(sgn_pow(m) * Rational(ipow(2, 2 * um + 2) - 1) * abs(bernoulli(2 * um + 2)) / (4 * (m + 1))) +
              sgn_pow(m - 1) / pow(two, 2 * m + 3) * zpow(b, 2 * um + 2) * ev("s^2d^2/c^2", m);
    } else if (id == "EQ_2_82") {
        lhs = named_family(Family::R, 2 * um - 2, order);
        rhs = cst(sgn_pow(m - 1) * Rational(abs(euler_number(2 * um - 2))) / 4) +
              sgn_pow(m) / Rational(4) * zpow(b, 2 * um - 1) * b.kprime * ev("nc", m - 1);
    } else if (id == "EQ_2_83") {
        lhs = named_family(Family::C, 2 * um - 1, order);
        rhs = sgn_pow(m - 1) / pow(two, 2 * m + 2) * zpow(b, 2 * um) * b.ksq * ev("sc/d", m);
    } else if (id == "EQ_2_84") {
        lhs = named_family(Family::D, 2 * um + 1, order);
        rhs = sgn_pow(m - 1) / pow(two, 2 * m + 3) * zpow(b, 2 * um + 2) * b.ksq * ev("sn^2", m);
    } else if (id == "EQ_2_85") {
        lhs = named_family(Family::T, 2 * um - 2, order);
        rhs = sgn_pow(m - 1) / Rational(4) * zpow(b, 2 * um - 1) * b.k * ev("cn", m - 1);
    } else if (id == "EQ_2_86") {
        lhs = named_family(Family::N, 2 * um, order);
        rhs = sgn_pow(m) / pow(two, 2 * m + 2) * zpow(b, 2 * um + 1) * ev("dn", m);
    } else if (id == "EQ_2_87") {
        lhs = named_family(Family::N, 0, order);
        rhs = cst(frac(-1, 4)) + frac(1, 4) * b.z * ev("dn", 0);
    } else if (id == "EQ_2_88") {
        lhs = named_family(Family::T, 2 * um, order);
        rhs = sgn_pow(m + 1) / Rational(4) * zpow(b, 2 * um + 1) * b.k * ev("sd", m);
    } else if (id == "EQ_2_89") {
        lhs = named_family(Family::N, 2 * um, order);
        rhs = sgn_pow(m + 1) / pow(two, 2 * m + 2) * zpow(b, 2 * um + 1) * b.ksq * ev("sc", m);
    } else if (id == "EQ_2_90") {
        lhs = named_family(Family::R, 2 * um, order);
        rhs = cst(sgn_pow(m) * Rational(abs(euler_number(2 * um))) / 4) +
              sgn_pow(m + 1) / Rational(4) * zpow(b, 2 * um + 1) * b.kprime * ev("sd/c^2", m);
    } else {
        throw Error(ErrorKind::Registry, "unknown identity: " + id);
    }
    return compare_series(id, {{"m", m}}, lhs, rhs);
}

VerificationReport verify_elliptic_lambert(const std::string& id, int m, long order) {
    return verify_elliptic_lambert(id, m, order, nome_bridge(order));
}

}  // namespace sumsq
