#include <doctest.h>

#include "calex/alexander.hpp"
#include "calex/constructions.hpp"
#include "calex/covering.hpp"
#include "calex/json_io.hpp"

using calex::betti_b1;
using calex::components_from_delta;
using calex::CyclotomicFactorization;

namespace {

CyclotomicFactorization fac(std::vector<calex::CyclotomicFactor> fs) {
  CyclotomicFactorization f;
  f.factors = std::move(fs);
  return f;
}

}  // namespace

TEST_CASE("betti numbers from factorizations") {
  for (long k = 1; k <= 5; ++k) {
    CHECK(betti_b1(fac({{6, k}}), 6).b1 == 2 * k);
    CHECK(betti_b1(fac({{1, k}, {2, k}}), 2).b1 == k);
  }
  CHECK(betti_b1(fac({{6, 1}}), 5).b1 == 0);

  auto report = betti_b1(fac({{1, 2}, {3, 1}}), 3);
  CHECK(report.b1 == 2);            // phi(3) = 2
  CHECK(report.r_n == 4);           // plus both roots at t = 1
  CHECK(report.affine_h1_dim == 5);
  CHECK(report.components == 3);
}

TEST_CASE("full divisor case counts every root") {
  // when n is a multiple of every index, b1 = deg - (k-1)
  auto f = fac({{1, 2}, {4, 1}, {6, 3}});
  long deg = f.root_count();
  auto report = betti_b1(f, 12);
  CHECK(report.b1 == deg - 2);
  CHECK(report.r_n == deg);
}

TEST_CASE("divisibility monotonicity") {
  auto f = fac({{2, 1}, {3, 2}, {12, 1}});
  long prev = -1;
  for (int n : {1, 2, 4, 12}) {
    long b = betti_b1(f, n).b1;
    CHECK(b >= prev);
    prev = b;
  }
  CHECK(betti_b1(f, 1).b1 == 0);
  CHECK(betti_b1(f, 12).b1 == f.root_count());
}

TEST_CASE("irreducible factorizations give even betti numbers") {
  // no Phi_1 (irreducible) and no Phi_2 (t = -1 is never a root)
  auto f = fac({{6, 2}, {5, 1}, {12, 1}});
  for (int n = 1; n <= 30; ++n) CHECK(betti_b1(f, n).b1 % 2 == 0);
}

TEST_CASE("components from delta") {
  CHECK(components_from_delta(fac({{1, 1}, {2, 1}})) == 2);
  CHECK(components_from_delta(fac({{6, 1}})) == 1);
  CHECK(components_from_delta(fac({{1, 2}, {3, 1}})) == 3);
  // cross-check against union-find on the presentation side
  auto u3 = calex::alexander_polynomial(calex::universal_hurwitz(3));
  CHECK(components_from_delta(u3.factorization) == u3.components);
}

TEST_CASE("residual factorizations are rejected") {
  CyclotomicFactorization f;
  f.residual = calex::LaurentPoly(mpz_class(2));
  CHECK_THROWS_AS(betti_b1(f, 2), calex::residual_present_error);
  CHECK_THROWS_AS(components_from_delta(f), calex::residual_present_error);
}

TEST_CASE("betti json") {
  auto j = calex::betti_to_json(betti_b1(fac({{6, 1}}), 6));
  CHECK(j["n"] == 6);
  CHECK(j["b1"] == 2);
  CHECK(j["r_n"] == 2);
  CHECK(j["affine_h1_dim"] == 3);
  CHECK(j["components"] == 1);
}
