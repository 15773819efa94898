#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qseries.hpp"
#include "report.hpp"

namespace sumsq {

enum class Transform { Plain, MinusQ, QSquared, SqrtQ };

Transform parse_transform(const std::string& s);

// General Lambert series
//   scale * (-A)^{-1} q^{G-C} sum_{y,m>=1} (-A)^y E^m (D(Bm+C))^u q^{(F-B)m+(Bm+C)y}
// with every q-exponent required to land on the quarter grid. negate_q applies
// q -> -q termwise.
struct LambertSpec {
    Rational A, B, C, D, E, F, G;
    unsigned u = 0;
    Rational scale = 1;
    bool negate_q = false;

    LambertSpec apply(Transform t) const;
};

QX lambert(const LambertSpec& spec, long order);

enum class Family { V, U, G, R, C, D, T, N, That, Chat, Ttilde };

Family parse_family(const std::string& name);
std::string family_name(Family f);

// V_s = sum r^s q^r/(1-q^r)          U_s = sum (-1)^{r-1} r^s q^r/(1+q^r)
// G_s = sum (-1)^r r^s q^r/(1-q^r)   R_s = sum (-1)^{r+1} (2r-1)^s q^{2r-1}/(1+q^{2r-1})
// C_s = sum (2r-1)^s q^{2r-1}/(1-q^{2(2r-1)})
// D_s = sum r^s q^r/(1-q^{2r})       N_s = sum r^s q^r/(1+q^{2r})
// T_s = sum (2r-1)^s q^{r-1/2}/(1+q^{2r-1})
// That_s = sum (-1)^r (2r-1)^s q^{r-1/2}/(1-q^{2r-1})
// Chat_s = sum (-1)^r (2r-1)^s q^{r-1/2}/(1+q^{2r-1})
// Ttilde_s = sum (2r-1)^s q^{r-1}/(1+q^{2r-1})
LambertSpec family_spec(Family f, unsigned s);
QX named_family(Family f, unsigned s, long order, Transform t = Transform::Plain);

enum class DivisorKind { Sigma, SigmaDagger, SigmaTilde };

Integer divisor_sum(DivisorKind kind, unsigned r, long n);
// Values for 0..n_max (index 0 is 0), shared and cached.
std::shared_ptr<const std::vector<Integer>> divisor_table(DivisorKind kind, unsigned r, long n_max);

enum class Theta { T2, T3, T4, Triangle };

Theta parse_theta(const std::string& s);
QX theta(Theta which, Transform t, long order);
QX theta_pow(Theta which, Transform t, unsigned p, long order);
// theta_2(q^{1/2})^p = 2^p q^{p/8} Triangle(q)^p; p must be even to stay on the grid.
QX theta2_sqrt_pow(unsigned p, long order);

// z = theta3^2, k^2, k'^2, k', k, k'^{1/2} as series on the quarter grid.
struct NomeBridge {
    QX z, ksq, kprime_sq, kprime, k, kprime_half;
};

// Checks z^2(1+k^2), z^2(2-k^2), z^2(1-2k^2) against their Lambert forms and
// throws BridgeError on disagreement.
NomeBridge nome_bridge(long order);

enum class TauMethod { Eta, Eq1_15, Eq1_29, Eq1_30, Eq1_31, Eq1_32, Eq1_33 };

TauMethod parse_tau_method(const std::string& s);
std::string tau_method_name(TauMethod m);
Integer tau(long n, TauMethod method);
// Odd n: 2160 sum[sd3 sd7 - sd5 sd5] + 186480 sum[s3 s7 - s5 s5]
//        = 759 s3 - 200 s5 - 642 s7 + 83 s11.
bool tau_relation_holds(long n);

struct EisensteinSeries {
    int weight;
    QX series;
};

// q-part of E_{2n} = 1 - (4n/B_{2n}) sum r^{2n-1} q^r/(1-q^r).
EisensteinSeries eisenstein(int weight, long order);

// U, G, C, D as combinations of E_{2m}(q), E_{2m}(q^2), E_{2m}(q^4).
std::vector<VerificationReport> verify_eisenstein_combinations(int m, long order);

}  // namespace sumsq
