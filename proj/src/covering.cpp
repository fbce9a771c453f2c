#include "calex/covering.hpp"

namespace calex {

namespace {

void require_complete(const CyclotomicFactorization& f) {
  if (!f.complete())
    throw residual_present_error(
        "factorization has a non-cyclotomic residual: " +
        f.residual->to_string());
}

}  // namespace

BettiReport betti_b1(const CyclotomicFactorization& f, int n) {
  if (n < 1) throw calex_error("covering degree must be >= 1");
  require_complete(f);
  BettiReport report;
  report.n = n;
  for (const auto& fac : f.factors) {
    if (fac.index > 1 && n % fac.index == 0)
      report.b1 += fac.multiplicity * euler_phi(fac.index);
  }
  long r1 = f.multiplicity_of(1);  // t = 1 is an n-th root for every n
  report.r_n = report.b1 + r1;
  report.affine_h1_dim = report.r_n + 1;
  report.components = r1 + 1;
  return report;
}

long components_from_delta(const CyclotomicFactorization& f) {
  require_complete(f);
  return f.multiplicity_of(1) + 1;
}

}  // namespace calex
