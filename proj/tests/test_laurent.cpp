#include <doctest.h>

#include <atomic>
#include <thread>

#include "calex/json_io.hpp"
#include "calex/laurent.hpp"

using calex::canonical_part;
using calex::canonicalize;
using calex::cyclotomic;
using calex::exact_divide;
using calex::factor_cyclotomic;
using calex::laurent_gcd;
using calex::LaurentPoly;

namespace {

LaurentPoly poly(long low, std::vector<long> cs) {
  std::vector<mpz_class> z(cs.begin(), cs.end());
  return LaurentPoly(low, std::move(z));
}

const LaurentPoly t_minus_1 = poly(0, {-1, 1});

}  // namespace

TEST_CASE("basic arithmetic") {
  LaurentPoly t_plus_1 = poly(0, {1, 1});
  CHECK(t_minus_1 * t_plus_1 == poly(0, {-1, 0, 1}));  // t^2 - 1

  LaurentPoly p = poly(-2, {3, 0, -1, 7});
  CHECK(p * LaurentPoly::one() == p);
  CHECK(p + LaurentPoly{} == p);
  CHECK(p - p == LaurentPoly{});

  // (t^3 - 1) / (t - 1) = t^2 + t + 1
  CHECK(exact_divide(poly(0, {-1, 0, 0, 1}), t_minus_1) == poly(0, {1, 1, 1}));
  CHECK_THROWS_AS(exact_divide(poly(0, {1, 0, 1}), poly(0, {1, 1})),
                  calex::non_divisible_error);
  // t is a unit, so dividing by it always succeeds
  CHECK(exact_divide(poly(0, {1, 1}), LaurentPoly::t_power(1)) ==
        poly(-1, {1, 1}));
  CHECK_THROWS_AS(exact_divide(t_minus_1, LaurentPoly{}),
                  calex::zero_polynomial_error);
  CHECK(exact_divide(LaurentPoly{}, t_minus_1) == LaurentPoly{});

  // Laurent shifts divide out exactly.
  CHECK(exact_divide(poly(-3, {-1, 0, 0, 1}), poly(2, {-1, 1})) ==
        poly(-5, {1, 1, 1}));
}

TEST_CASE("gcd") {
  // Fox entries of the G_{2,4} relator: the two rows are negatives of
  // each other, so the gcd is the canonical part of either.
  LaurentPoly a = poly(0, {1, -1, 1, -1});   // 1 - t + t^2 - t^3
  LaurentPoly b = poly(0, {-1, 1, -1, 1});   // -1 + t - t^2 + t^3
  CHECK(laurent_gcd(a, b) == poly(0, {-1, 1, -1, 1}));  // t^3 - t^2 + t - 1

  // gcd with zero is the canonical part; integer content is kept
  CHECK(laurent_gcd(poly(3, {-2, 2}), LaurentPoly{}) == poly(0, {-2, 2}));
  CHECK_THROWS_AS(laurent_gcd(LaurentPoly{}, LaurentPoly{}),
                  calex::zero_polynomial_error);

  // Euclidean sequence by hand: t^3-1 = t*(t^2-1) + (t-1); t^2-1 = (t+1)(t-1).
  CHECK(laurent_gcd(poly(0, {-1, 0, 1}), poly(0, {-1, 0, 0, 1})) == t_minus_1);

  // gcd(a*c, b*c) == canonical(gcd(a,b) * c)
  LaurentPoly c = poly(-1, {2, 0, 3});
  LaurentPoly g = laurent_gcd(poly(0, {-1, 0, 1}), poly(0, {-1, 0, 0, 1}));
  CHECK(laurent_gcd(poly(0, {-1, 0, 1}) * c, poly(0, {-1, 0, 0, 1}) * c) ==
        canonical_part(g * c));

  // gcd divides both inputs exactly
  CHECK(calex::try_exact_divide(poly(0, {-1, 0, 1}), g).has_value());
  CHECK(calex::try_exact_divide(poly(0, {-1, 0, 0, 1}), g).has_value());
}

TEST_CASE("canonicalize") {
  // -t^3(t-1) = -t^4 + t^3
  auto c = canonicalize(poly(3, {1, -1}));
  CHECK(c.poly == t_minus_1);
  CHECK(c.sign == -1);
  CHECK(c.t_shift == 3);

  auto id = canonicalize(poly(0, {1, -1, 1}));  // t^2 - t + 1
  CHECK(id.poly == poly(0, {1, -1, 1}));
  CHECK(id.sign == 1);
  CHECK(id.t_shift == 0);

  // (1-t)(1 + t^2 + t^4) expands to -t^5+t^4-t^3+t^2-t+1
  LaurentPoly p = poly(0, {1, -1}) * poly(0, {1, 0, 1, 0, 1});
  auto e = canonicalize(p);
  CHECK(e.poly == poly(0, {-1, 1, -1, 1, -1, 1}));
  CHECK(e.sign == -1);
  CHECK(e.t_shift == 0);

  CHECK_THROWS_AS(canonicalize(LaurentPoly{}), calex::zero_polynomial_error);

  // idempotent and unit insensitive
  for (long k : {-2L, 0L, 5L}) {
    auto v = canonicalize(p.shifted(k));
    CHECK(v.poly == e.poly);
    auto neg = canonicalize(-p.shifted(k));
    CHECK(neg.poly == e.poly);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == t_minus_1);
  CHECK(cyclotomic(2) == poly(0, {1, 1}));

  // Divide t^6-1 by Phi_1 Phi_2 Phi_3 independently of the recursion.
  LaurentPoly t6 = poly(0, {-1, 0, 0, 0, 0, 0, 1});
  LaurentPoly expected =
      exact_divide(t6, t_minus_1 * poly(0, {1, 1}) * poly(0, {1, 1, 1}));
  CHECK(expected == poly(0, {1, -1, 1}));
  CHECK(cyclotomic(6) == expected);

  // prod over d | k of Phi_d == t^k - 1
  for (long k = 1; k <= 30; ++k) {
    LaurentPoly prod = LaurentPoly::one();
    for (long d = 1; d <= k; ++d)
      if (k % d == 0) prod = prod * cyclotomic(d);
    CHECK(prod == LaurentPoly::t_power(k) - LaurentPoly::one());
  }

  // monic of degree phi(d), value at 0
  for (long d = 2; d <= 24; ++d) {
    CHECK(cyclotomic(d).degree() == calex::euler_phi(d));
    CHECK(cyclotomic(d).leading_coefficient() == 1);
    CHECK(cyclotomic(d).constant_term() == 1);
  }
  CHECK(cyclotomic(1).constant_term() == -1);
}

TEST_CASE("euler phi and prime powers") {
  CHECK(calex::euler_phi(1) == 1);
  CHECK(calex::euler_phi(12) == 4);
  CHECK(calex::euler_phi(30) == 8);
  CHECK(calex::is_prime_power(7));
  CHECK(calex::is_prime_power(27));
  CHECK(calex::is_prime_power(16));
  CHECK(!calex::is_prime_power(1));
  CHECK(!calex::is_prime_power(12));
}

TEST_CASE("factor_cyclotomic") {
  auto f = factor_cyclotomic(poly(0, {-1, 0, 1}));  // t^2 - 1
  REQUIRE(f.complete());
  CHECK(f.sign == 1);
  CHECK(f.factors == std::vector<calex::CyclotomicFactor>{{1, 1}, {2, 1}});

  auto cube = factor_cyclotomic(poly(0, {1, -1, 1}).pow(3));
  REQUIRE(cube.complete());
  CHECK(cube.factors == std::vector<calex::CyclotomicFactor>{{6, 3}});

  // (t-1)(t^3-1)
  auto u = factor_cyclotomic(t_minus_1 * poly(0, {-1, 0, 0, 1}));
  REQUIRE(u.complete());
  CHECK(u.factors == std::vector<calex::CyclotomicFactor>{{1, 2}, {3, 1}});

  auto bad = factor_cyclotomic(poly(0, {-2, 1}));  // t - 2
  CHECK(!bad.complete());
  CHECK(bad.reconstruct() == poly(0, {-2, 1}));

  auto content = factor_cyclotomic(poly(0, {-2, 2}));  // 2(t-1)
  CHECK(!content.complete());
  CHECK(content.multiplicity_of(1) == 1);
  CHECK(*content.residual == LaurentPoly(mpz_class(2)));
  CHECK(content.reconstruct() == poly(0, {-2, 2}));

  // unit handling
  auto unit = factor_cyclotomic(poly(-4, {-3, 3}).shifted(1));
  CHECK(unit.reconstruct() == poly(-3, {-3, 3}));
}

TEST_CASE("is_reciprocal") {
  CHECK(calex::is_reciprocal(poly(0, {1, -1, 1})));
  CHECK(!calex::is_reciprocal(t_minus_1));
  CHECK(calex::is_reciprocal(poly(0, {1, -1, 1, -1, 1})));
}

TEST_CASE("text rendering round trip") {
  for (const auto& p :
       {poly(0, {1, -1, 1}), poly(-3, {2, 0, -7}), LaurentPoly{},
        poly(0, {5}), poly(1, {1}), poly(-1, {-1})}) {
    CHECK(LaurentPoly::from_string(p.to_string()) == p);
  }
  CHECK(poly(0, {1, -1, 1}).to_string() == "t^2 - t + 1");
  CHECK(poly(-3, {2, 0, -7}).to_string() == "-7*t^-1 + 2*t^-3");
  CHECK(LaurentPoly{}.to_string() == "0");
  CHECK(LaurentPoly::from_string("t^2-t+1") == poly(0, {1, -1, 1}));
}

TEST_CASE("json round trip") {
  mpz_class big = 1;
  for (int i = 0; i < 100; ++i) big *= 2;  // 2^100, beyond 64 bits
  LaurentPoly p(-2, {mpz_class(3), big, mpz_class(-1)});
  CHECK(calex::poly_from_json(calex::poly_to_json(p)) == p);
  CHECK(calex::poly_from_json(calex::poly_to_json(LaurentPoly{})) ==
        LaurentPoly{});
}

TEST_CASE("cyclotomic cache is safe under concurrent access") {
  std::vector<std::thread> pool;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&ok] {
      for (long d = 1; d <= 40; ++d) {
        LaurentPoly p = cyclotomic(d);
        if (d > 1 && p.degree() != calex::euler_phi(d)) ok = false;
      }
    });
  }
  for (auto& th : pool) th.join();
  CHECK(ok.load());
}

TEST_CASE("evaluate") {
  CHECK(poly(0, {1, 1, 1}).evaluate(1) == 3);
  CHECK(poly(0, {-1, 0, 1}).evaluate(2) == 3);
  CHECK(poly(1, {1, 1}).evaluate(0) == 0);
  CHECK_THROWS(poly(-1, {1}).evaluate(2));
}
