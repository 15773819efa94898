#pragma once

#include <string>
#include <vector>

#include "lambert_theta.hpp"

namespace sumsq {

// Lambert series written through z, k, k' and the elliptic coefficient
// polynomials: EQ_2_80 .. EQ_2_90.
const std::vector<std::string>& elliptic_lambert_ids();

VerificationReport verify_elliptic_lambert(const std::string& id, int m, long order);
VerificationReport verify_elliptic_lambert(const std::string& id, int m, long order, const NomeBridge& b);

}  // namespace sumsq
