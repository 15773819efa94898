#pragma once

#include <string>
#include <vector>

#include "qseries.hpp"

namespace sumsq {

// Dense polynomial with Rational coefficients. Used in K = k^2 for the
// elliptic coefficient polynomials, and in k itself for the three families
// with a (1 + k sn^2) denominator.
class KPoly {
public:
    KPoly() = default;
    KPoly(const Rational& c);  // NOLINT: constants convert implicitly
    KPoly(int c) : KPoly(Rational(c)) {}
    explicit KPoly(std::vector<Rational> coeffs);

    static KPoly var() { return KPoly(std::vector<Rational>{0, 1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational operator[](int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    KPoly& operator+=(const KPoly& o);
    KPoly& operator-=(const KPoly& o);
    KPoly& operator*=(const KPoly& o);
    bool operator==(const KPoly& o) const { return c_ == o.c_; }
    bool operator!=(const KPoly& o) const { return c_ != o.c_; }

    Rational eval(const Rational& x) const;
    // p(K) -> p(k^2)
    KPoly square_var() const;
    std::string str(const std::string& var = "K") const;

private:
    void trim();
    std::vector<Rational> c_;
};

KPoly operator+(KPoly a, const KPoly& b);
KPoly operator-(KPoly a, const KPoly& b);
KPoly operator-(const KPoly& a);
KPoly operator*(KPoly a, const KPoly& b);
KPoly kpow(const KPoly& a, unsigned e);
// Exact quotient; throws DomainError when b does not divide a.
KPoly exact_div(const KPoly& a, const KPoly& b);
// Quotient and remainder.
void divmod(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r);

QX kpoly_eval_qx(const KPoly& p, const QX& ksq);

// Power series in u with KPoly coefficients; terms[j] multiplies u^j.
struct UKSeries {
    std::vector<KPoly> terms;

    int order() const { return static_cast<int>(terms.size()); }
};

UKSeries uk_mul(const UKSeries& a, const UKSeries& b);
// Requires a constant nonzero u^0 term.
UKSeries uk_invert(const UKSeries& a);
UKSeries uk_add(const UKSeries& a, const UKSeries& b);
UKSeries uk_scale(const UKSeries& a, const KPoly& s);

enum class Parity { Odd, Even, Square };

struct FamilyInfo {
    const char* tag;
    Parity parity;
    bool in_k;  // coefficients are polynomials in k rather than K
};

// The 24 Maclaurin families followed by the three k-families.
const std::vector<FamilyInfo>& elliptic_families();
int family_index(const std::string& tag);
// First admissible m: 1 for odd and squared families, 0 for even ones.
int first_index(const std::string& tag);

// sn, cn, dn to u^{order-1} from sn' = cn dn, cn' = -sn dn, dn' = -K sn cn.
void jacobi_series(int order, UKSeries& sn, UKSeries& cn, UKSeries& dn);
UKSeries family_series(const std::string& tag, int order);

// (family)_m for m = first_index(tag) .. m_max.
std::vector<KPoly> elliptic_coeffs(const std::string& tag, int m_max);
KPoly elliptic_coeff(const std::string& tag, int m);

}  // namespace sumsq
