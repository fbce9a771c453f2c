#pragma once

#include "calex/laurent.hpp"

namespace calex {

// First Betti number data of the n-sheeted cyclic covering branched
// along a curve with the given Alexander factorization.
struct BettiReport {
  int n = 1;
  long b1 = 0;             // roots that are n-th roots of unity, != 1
  long r_n = 0;            // all roots that are n-th roots of unity
  long affine_h1_dim = 0;  // r_n + 1
  long components = 1;     // mult of Phi_1 plus 1
  bool operator==(const BettiReport&) const = default;
};

// Counts roots through the factorization: each factor (d, mult) with
// d | n and d > 1 contributes mult * phi(d). Throws
// residual_present_error when the factorization is incomplete.
BettiReport betti_b1(const CyclotomicFactorization& f, int n);

// Multiplicity of Phi_1 plus one.
long components_from_delta(const CyclotomicFactorization& f);

}  // namespace calex
