#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "calex/errors.hpp"

namespace calex {

// Integer Laurent polynomial in one variable t. Coefficients are
// arbitrary-precision integers and every operation is exact.
//
// Representation: coeffs_[i] holds the coefficient of t^(low_ + i).
// Invariant: first and last stored coefficients are nonzero; the zero
// polynomial is the empty run with low_ == 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(mpz_class constant);
  LaurentPoly(long lowest, std::vector<mpz_class> coeffs);

  static LaurentPoly one();
  static LaurentPoly term(mpz_class coeff, long exponent);
  static LaurentPoly t_power(long exponent);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_unit() const;  // +-t^k

  long lowest_exponent() const;  // nonzero input only
  long degree() const;           // highest exponent, nonzero input only
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  const mpz_class& leading_coefficient() const;
  mpz_class coefficient(long exponent) const;
  mpz_class constant_term() const { return coefficient(0); }

  LaurentPoly operator-() const;
  LaurentPoly shifted(long exponent_delta) const;  // multiply by t^delta
  LaurentPoly pow(long e) const;                   // e >= 0

  // requires lowest_exponent() >= 0 (or zero polynomial)
  mpz_class evaluate(const mpz_class& x) const;

  std::string to_string() const;
  static LaurentPoly from_string(const std::string& text);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;

 private:
  long low_ = 0;
  std::vector<mpz_class> coeffs_;
  void trim();
};

// Throws non_divisible_error when b does not divide a in Z[t,t^-1];
// b must be nonzero.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);
std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& a,
                                            const LaurentPoly& b);

// GCD in Z[t,t^-1], returned as the canonical representative (constant
// term nonzero, positive leading coefficient). Primitive PRS over Z.
// Not both arguments may be zero.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

struct CanonicalForm {
  LaurentPoly poly;  // poly(0) != 0, positive leading coefficient
  int sign = 1;
  long t_shift = 0;
};

// p == sign * t^t_shift * poly. Throws zero_polynomial_error on 0.
CanonicalForm canonicalize(const LaurentPoly& p);

// Convenience: canonical representative, with zero passing through.
LaurentPoly canonical_part(const LaurentPoly& p);

// d-th cyclotomic polynomial, d >= 1. Memoized; the shared cache is
// thread-safe and idempotent.
LaurentPoly cyclotomic(long d);

// Palindromic coefficient run; callers pass canonical polynomials.
bool is_reciprocal(const LaurentPoly& p);

struct CyclotomicFactor {
  long index;         // d of Phi_d
  long multiplicity;  // >= 1
  bool operator==(const CyclotomicFactor&) const = default;
};

// sign * t^t_shift * prod Phi_d^mult * residual reconstructs the input
// exactly; residual is set only when the input was not a unit times a
// product of cyclotomic polynomials.
struct CyclotomicFactorization {
  int sign = 1;
  long t_shift = 0;
  std::vector<CyclotomicFactor> factors;  // sorted by index, distinct
  std::optional<LaurentPoly> residual;

  bool complete() const { return !residual.has_value(); }
  long multiplicity_of(long index) const;
  long root_count() const;  // sum mult * phi(d) == deg of cyclotomic part
  LaurentPoly reconstruct() const;
  std::string to_string() const;
};

// Trial division by Phi_d for every d with phi(d) <= deg, d enumerated up
// to 2*deg^2 + 1 (complete since phi(d) >= sqrt(d/2)). A leftover factor
// is reported as residual, not an error. Input must be nonzero.
CyclotomicFactorization factor_cyclotomic(const LaurentPoly& p);

long euler_phi(long n);
bool is_prime_power(long n);  // n == p^k with k >= 1

}  // namespace calex
