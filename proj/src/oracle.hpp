#pragma once

#include <vector>

#include "exact_core.hpp"

// Brute-force ground truth. Uses only integer arrays and enumeration, never
// the series types, so a bug in the identity machinery cannot hide itself.
namespace sumsq::oracle {

enum class CountKind { Squares, Triangles };

// r(0..n_max): number of ordered s-tuples with the given sum of squares
// (or of triangular numbers j(j+1)/2, j >= 0).
std::vector<Integer> count_representations(CountKind kind, int s, long n_max);

// tau(1..n_max) from q * prod (1 - q^r)^24 by direct polynomial multiplication.
std::vector<Integer> tau_oracle(long n_max);

enum class DivisorKind { Sigma, SigmaDagger, SigmaTilde };

// sigma: sum d^r; sigma_dagger: sum (-1)^d d^r; sigma_tilde: sum (-1)^{d+n/d} d^r.
Integer divisor_oracle(DivisorKind kind, unsigned r, long n);

}  // namespace sumsq::oracle
