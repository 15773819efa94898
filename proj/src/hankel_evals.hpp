#pragma once

#include <string>
#include <vector>

#include "hankel_cfrac.hpp"
#include "report.hpp"

namespace sumsq {

enum class EvalKind { H1, H2, Chi };

// One determinant side of an evaluation: which determinant, over which
// sequence. For elliptic families c_nu = (family)_{nu + shift}. The constant
// sequences are "tan" ((-1)^{nu-1} (2^{2nu}-1)|B_{2nu}|/(4nu)), "sec2"
// ((-1)^nu (2^{2nu+2}-1)|B_{2nu+2}|/(4(nu+1))), "sec" ((-1)^{nu-1}|E_{2nu-2}|/4)
// and "sectan" ((-1)^nu |E_{2nu}|/4).
struct EvalSide {
    EvalKind kind;
    std::string family;
    int shift;
};

struct EvalCase {
    std::string id;  // EQ_4_1 .. EQ_4_63
    std::vector<EvalSide> sides;
    bool symbolic;   // polynomial in K, otherwise rational
};

const std::vector<EvalCase>& eval_cases();
const EvalCase& eval_case(const std::string& id);

// Sequence c_0 .. c_len (c_0 unused).
std::vector<KPoly> eval_sequence(const std::string& family, int shift, int len);
KPoly eval_determinant(const EvalSide& side, int n);

// Closed form of the evaluation; rational cases are constant polynomials.
KPoly rhs_closed_form(const EvalCase& c, int n);

// Direct determinants against the closed form for n = 1 .. n_max.
VerificationReport verify_eval(const EvalCase& c, int n_max);

// det(|E_{r+s}|)_{0 <= r,s < n} = prod_{r<n} r!^2, id EQ_4_69.
VerificationReport verify_euler_hankel(int n_max);

}  // namespace sumsq
