#pragma once

#include <string>

#include "calex/laurent.hpp"
#include "calex/presentation.hpp"

namespace calex {

// <x_1..x_m | [x_i, x_1...x_m] = 1>: every Hurwitz C-group of degree m
// is a quotient of this one.
CPresentation universal_hurwitz(int m);

// Independent route to the same polynomial: the monodromy permutes the
// kernel basis {a_0} + (m-2) cycles of length m, so its characteristic
// polynomial det(tI - h) is the cycle-type product (t-1)(t^m-1)^(m-2).
LaurentPoly universal_char_oracle(int m);

// Z^n as a C-group: x_i = x_j^-1 x_i x_j for all i != j.
CPresentation abelian_cgroup(int n);

// Four generators, x_4 = x_2^2 x_1 x_2^-2, x_3 = x_2,
// x_2 = x_4^2 x_2 x_4^-2, product of all four central.
CPresentation g2_presentation();

// Witness for the central word (x_1...x_n)^m with trivial conjugators;
// generator i is injected at position i.
CentralWordWitness power_product_witness(int n, int m);

// Expands p to an explicit Hurwitz presentation of degree m = witness
// length: one new generator per non-injection position with the
// conjugation relation from the witness, original relations renumbered,
// then central relations added. The caller asserts the witness word is
// central. The Alexander polynomial is unchanged (same group).
CPresentation hurwitzify(const CPresentation& p,
                         const CentralWordWitness& witness);

// Brings p into explicit Hurwitz form: already-explicit presentations
// pass through ensure_hurwitz, asserted larger degrees are expanded via
// the recorded witness.
CPresentation to_hurwitz_form(const CPresentation& p);

// Hurwitz product: glue the factors along their last generators and make
// each factor's full product commute with the other factor's generators.
// The result has Alexander polynomial Delta_1 * Delta_2 and is a Hurwitz
// C-group of degree 2*m1*m2 with central word y1^m2 y2^m1 (recorded as a
// witness). Inputs must carry a Hurwitz degree or be ensurable.
CPresentation hurwitz_product(const CPresentation& a, const CPresentation& b);

// Builtin presentation specs used by the CLI and tests:
//   "g2" | "universal:<m>" | "abelian:<n>" | "torus:<n>:<m>" |
//   "torus6:<n>:<m>"  (torus presentation expanded to degree n*m)
CPresentation make_builtin(const std::string& spec);

}  // namespace calex
