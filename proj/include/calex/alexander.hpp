#pragma once

#include <optional>
#include <string>
#include <vector>

#include "calex/laurent.hpp"
#include "calex/presentation.hpp"

namespace calex {

// Abelianized Fox matrix: one row per nonempty relator, one column per
// generator. Every row sums to the zero polynomial.
struct AlexanderMatrix {
  int cols = 0;
  std::vector<std::vector<LaurentPoly>> rows;

  int row_count() const { return static_cast<int>(rows.size()); }
};

AlexanderMatrix build_matrix(const CPresentation& p);
AlexanderMatrix build_matrix(const std::vector<Word>& relators,
                             int generator_count);

// Repeatedly pivots on +-t^k entries (smallest (row, col) first): clears
// the pivot column with row operations, then deletes the pivot row and
// column and drops rows that became zero. Preserves the first elementary
// ideal, hence the minor GCD up to units.
AlexanderMatrix simplify_unit_pivots(AlexanderMatrix mat);

// Fraction-free Bareiss determinant of a square Laurent matrix, up to a
// power of t (rows are shifted into Z[t] first).
LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m);

// Canonical GCD of all (cols-1)-minors; zero when rows < cols-1 (the
// presented module has infinite rank), one when cols == 1. With
// threads > 1 the minors are evaluated in parallel; the result does not
// depend on the schedule.
LaurentPoly minor_gcd(const AlexanderMatrix& mat, int threads = 1);

struct Check {
  std::string name;
  bool pass = false;
  bool applicable = true;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  bool all_pass() const;
  const Check* find(const std::string& name) const;
};

struct AlexanderResult {
  std::string label;
  LaurentPoly canonical;  // constant term != 0, positive leading coeff
  CyclotomicFactorization factorization;
  int generator_count = 0;
  int components = 0;
  std::optional<int> hurwitz_degree;
  CheckReport checks;

  // det(h - t*Id) convention: (-1)^deg * canonical.
  LaurentPoly paper_signed() const;
};

// Structural checks on a computed polynomial:
//   delta0_unit            |Delta(0)| == 1
//   factors_divide_degree  every cyclotomic index divides the degree m
//   divides_universal      Delta | (t-1)(t^m-1)^(m-2)
//   phi1_multiplicity      mult of Phi_1 == components - 1
//   irreducible_shape      k == 1: reciprocal, even degree, Delta(1) == 1
//   prime_power_trivial    k == 1 and m a prime power: Delta == 1
//   constant_sign          Delta(0) == (-1)^(k-1)
CheckReport verify(const LaurentPoly& canonical,
                   const CyclotomicFactorization& factorization,
                   int components, std::optional<int> hurwitz_degree);

// Full pipeline: build, simplify, minor GCD, canonicalize, factor,
// verify. A non-cyclotomic residual is reported, not thrown.
AlexanderResult alexander_polynomial(const CPresentation& p, int threads = 1);

}  // namespace calex
