#pragma once

#include <string>
#include <vector>

#include "identities.hpp"

namespace sumsq {

// s_lambda(xs). Bialternant with exact division when the xs are distinct,
// Jacobi-Trudi over complete homogeneous sums otherwise.
Rational schur_eval(const Partition& lambda, const std::vector<Rational>& xs);
Integer schur_eval(const Partition& lambda, const std::vector<Integer>& xs);

// Increasing subset of {1..n} and its complement.
struct SubsetPair {
    std::vector<int> S, T, Sc, Tc;
    long sum_S = 0, sum_T = 0;
};

std::vector<int> complement(const std::vector<int>& set, int n);
// Every increasing p-subset of {1..n}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int p);

// lambda_i = cb_{l_{p-i+1}}/d - cb_{l_1}/d + i - p, cb indexed 1..n.
Partition expansion_partitions(const std::vector<int>& set, const std::vector<long>& cb, long d);

// Determinant with rows from S (Lambert series L_{c_i + b_j}) and the
// remaining rows constants a_{i+j-1}; the chi variant replaces the last
// column's a_{i+n-1} by a_{i+n}.
struct ExpansionConfig {
    int n = 1;
    Rational A, B, C, D, E, F, G;
    std::vector<long> b, c;  // 1-based, strictly increasing
    std::vector<Rational> a; // 1-based
    long d_b = 1, d_c = 1;
    bool chi = false;

    void validate() const;
};

// The Schur function expansion of det(M_{n,S}) as a multiple sum.
QX expand_lambert_det(const ExpansionConfig& cfg, const std::vector<int>& S, long order);
// The same determinant built directly from its Lambert series entries.
QX direct_lambert_det(const ExpansionConfig& cfg, const std::vector<int>& S, long order);

// Printed multiple sums
//   sum_{y_r >= 1, m_1 > ... > m_p >= 1} ysign msign q^{kappa sum m y + shift sum m}
//     (m_1...m_p)^prod_pow prod_{r<s} (m_r^2 - m_s^2)^2 [sum m^2] poly(m^2) inner
// where inner is 1 or the Laplace sum over S, T of size p in {1..n}.
enum class YSign { None, Alt, Half };  // 1, (-1)^{sum y}, (-1)^{(sum y - p)/2}
enum class MSign { None, Alt, Half };  // 1, (-1)^{sum m}, (-1)^{(p + sum m)/2}
enum class Inner { One, Laplace, LaplaceChi };
enum class ConstSeq { C, A, B };       // c_i, a_i, b_i of the Hankel identities

struct Monomial {
    Rational coeff;
    std::vector<int> exps;  // powers of m_1^2 .. m_p^2
};

struct MultiSum {
    bool m_odd = false, y_odd = false;
    Rational kappa = 1, shift = 0;
    YSign ysign = YSign::None;
    MSign msign = MSign::None;
    int prod_pow = 0;
    bool sq_sum = false;
    std::vector<Monomial> poly;  // empty means 1
    Inner inner = Inner::One;
    ConstSeq seq = ConstSeq::C;
    int d_offset = 0;  // D entries k_{l + j - 1 + d_offset (+ chi)}
};

struct MultiSumTerm {
    std::vector<long> m, y;
    long exponent;  // quarter units
    Rational coeff;
};

// Weight of one m-tuple, everything except the y-sign and the q-power.
Rational multisum_weight(const MultiSum& ms, int n, const std::vector<long>& m);
std::vector<MultiSumTerm> multisum_terms(const MultiSum& ms, int n, int p, long order);
QX multisum_series(const MultiSum& ms, int n, int p, long order);

// Schur form registry: groups s7 and s8.
const std::vector<IdentityRecord>& schur_records();
const IdentityRecord& schur_record(const std::string& id);
const std::vector<std::string>& schur_groups();
VerificationReport schur_form_identity(const std::string& id, int n, long order);
std::vector<VerificationReport> schur_suite(const std::string& group, int n, long order, int jobs = 1);

// Triangular-number counts t_s(N) for s = 4n^2 or 4n(n+1), all N <= n_max.
std::vector<Integer> t_count_table(int s, long n_max);
Integer t_count(int s, long N);
// r_s(N) for s = 4n^2 or 4n(n+1) from the Schur form of theta_3(-q)^s.
std::vector<Integer> r_count_via_schur_table(int s, long n_max);
Integer r_count_via_schur(int s, long N);

}  // namespace sumsq
