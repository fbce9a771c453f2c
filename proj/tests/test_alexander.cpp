#include <doctest.h>

#include "calex/alexander.hpp"
#include "calex/braid.hpp"
#include "calex/constructions.hpp"
#include "calex/json_io.hpp"

using calex::alexander_polynomial;
using calex::AlexanderMatrix;
using calex::build_matrix;
using calex::LaurentPoly;
using calex::minor_gcd;
using calex::simplify_unit_pivots;
using calex::Word;

namespace {

LaurentPoly poly(long low, std::vector<long> cs) {
  std::vector<mpz_class> z(cs.begin(), cs.end());
  return LaurentPoly(low, std::move(z));
}

Word x(int i, long e = 1) { return Word::generator(i, e); }

}  // namespace

TEST_CASE("build_matrix from a single relator") {
  // commutator relator of Z^2, Fox rules applied by hand
  Word r = x(1, -1) * x(2, -1) * x(1) * x(2);
  auto mat = build_matrix({r}, 2);
  REQUIRE(mat.row_count() == 1);
  CHECK(mat.rows[0][0] == poly(-2, {1, -1}));   // t^-2 - t^-1
  CHECK(mat.rows[0][1] == poly(-2, {-1, 1}));   // t^-1 - t^-2
  CHECK(minor_gcd(mat) == poly(0, {-1, 1}));    // canonical t - 1
}

TEST_CASE("build_matrix for the G_{2,2m} relator") {
  for (int m = 1; m <= 4; ++m) {
    Word r = (x(1) * x(2)).pow(m) * (x(2) * x(1)).pow(-m);
    auto mat = build_matrix({r}, 2);
    LaurentPoly sum;
    for (int i = 0; i < m; ++i) sum = sum + LaurentPoly::t_power(2 * i);
    CHECK(mat.rows[0][0] == poly(0, {1, -1}) * sum);
    CHECK(mat.rows[0][1] == poly(0, {-1, 1}) * sum);
    CHECK(minor_gcd(mat) == calex::canonical_part(poly(0, {1, -1}) * sum));
  }
}

TEST_CASE("trivial relators are skipped") {
  calex::CPresentation p;
  p.generator_count = 3;
  p.add_relation(2, 2, x(2, 4));
  auto mat = build_matrix(p);
  CHECK(mat.row_count() == 0);
  CHECK(mat.cols == 3);
  CHECK(minor_gcd(mat) == LaurentPoly{});  // rows < cols-1: Delta == 0
}

TEST_CASE("row sum invariant is enforced") {
  AlexanderMatrix mat;
  CHECK_THROWS_AS(build_matrix({x(1)}, 2), calex::invariant_error);
}

TEST_CASE("unit pivot simplification") {
  // x3 = x2 contributes a unit row; pivoting removes generator 3
  auto p = calex::parse_presentation(
      "generators: 3\nrel: x3 = x2\nrel: x1 = x2^-1 x1 x2\n");
  auto mat = build_matrix(p);
  CHECK(mat.cols == 3);
  auto simplified = simplify_unit_pivots(mat);
  CHECK(simplified.cols < 3);
  CHECK(minor_gcd(simplified) == minor_gcd(mat));

  // no unit entries: unchanged
  AlexanderMatrix plain;
  plain.cols = 2;
  plain.rows = {{poly(0, {1, -1}), poly(0, {-1, 1})}};
  auto same = simplify_unit_pivots(plain);
  CHECK(same.rows == plain.rows);

  // the expanded torus presentation collapses to at most two columns
  auto torus6 = calex::make_builtin("torus6:2:3");
  auto big = build_matrix(torus6);
  CHECK(big.cols == 6);
  CHECK(simplify_unit_pivots(big).cols <= 2);
}

TEST_CASE("minor gcd conventions") {
  // one generator: the empty minor is 1
  AlexanderMatrix one_col;
  one_col.cols = 1;
  CHECK(minor_gcd(one_col) == LaurentPoly::one());

  // free group F_2: no relations, Delta == 0
  calex::CPresentation f2;
  f2.generator_count = 2;
  CHECK(alexander_polynomial(f2).canonical == LaurentPoly{});
}

TEST_CASE("G(2) raw minor enumeration") {
  auto mat = build_matrix(calex::g2_presentation());
  CHECK(mat.cols == 4);
  CHECK(mat.row_count() == 7);
  CHECK(minor_gcd(mat) == poly(0, {-1, 0, 1}));  // t^2 - 1, no pivots needed
}

TEST_CASE("pipeline determinism and invariances") {
  auto r1 = alexander_polynomial(calex::g2_presentation());
  auto r2 = alexander_polynomial(calex::g2_presentation());
  CHECK(r1.canonical == r2.canonical);
  CHECK(r1.factorization.factors == r2.factorization.factors);
  CHECK(calex::result_to_json(r1) == calex::result_to_json(r2));

  // permuting relations leaves the polynomial unchanged
  auto p = calex::g2_presentation();
  std::rotate(p.relations.begin(), p.relations.begin() + 3,
              p.relations.end());
  CHECK(alexander_polynomial(p).canonical == r1.canonical);

  // relabeling generators consistently leaves it unchanged: swap x1, x4
  auto q = calex::g2_presentation();
  auto swap_idx = [](int i) { return i == 1 ? 4 : i == 4 ? 1 : i; };
  for (auto& rel : q.relations) {
    rel.left = swap_idx(rel.left);
    rel.right = swap_idx(rel.right);
    std::vector<calex::Letter> ls;
    for (auto l : rel.conjugator.letters())
      ls.push_back({swap_idx(l.generator), l.exponent});
    rel.conjugator = Word::from_letters(ls);
  }
  CHECK(alexander_polynomial(q).canonical == r1.canonical);
}

TEST_CASE("raw and simplified minors agree on the small corpus") {
  for (const auto& p :
       {calex::abelian_cgroup(3), calex::abelian_cgroup(4),
        calex::g2_presentation(), calex::universal_hurwitz(4)}) {
    auto mat = build_matrix(p);
    CHECK(minor_gcd(mat) == minor_gcd(simplify_unit_pivots(mat)));
  }
}

TEST_CASE("parallel minor reduction is schedule independent") {
  for (int threads : {2, 4}) {
    auto mat = build_matrix(calex::g2_presentation());
    CHECK(minor_gcd(mat, threads) == minor_gcd(mat, 1));
    auto uni = build_matrix(calex::universal_hurwitz(4));
    CHECK(minor_gcd(uni, threads) == minor_gcd(uni, 1));
  }
}

TEST_CASE("verify checks") {
  auto g2 = alexander_polynomial(calex::g2_presentation());
  CHECK(g2.checks.all_pass());
  CHECK(g2.checks.find("phi1_multiplicity")->pass);
  CHECK(g2.components == 2);
  CHECK(g2.factorization.multiplicity_of(1) == 1);

  auto trefoil = alexander_polynomial(calex::g_nm_presentation(2, 3));
  CHECK(trefoil.checks.all_pass());
  const auto* shape = trefoil.checks.find("irreducible_shape");
  REQUIRE(shape != nullptr);
  CHECK(shape->pass);
  CHECK(shape->applicable);

  // negative control: t - 2 fails the determinant-unit check
  LaurentPoly bad = poly(0, {-2, 1});
  auto report =
      calex::verify(bad, calex::factor_cyclotomic(bad), 1, std::nullopt);
  CHECK(!report.find("delta0_unit")->pass);
  CHECK(!report.all_pass());
}

TEST_CASE("epimorphism divisibility on the corpus") {
  // adding relations can only shrink the polynomial, so the quotient's
  // Delta divides the universal group's
  auto uni4 = alexander_polynomial(calex::universal_hurwitz(4)).canonical;
  auto g2 = alexander_polynomial(calex::g2_presentation()).canonical;
  auto z4 = alexander_polynomial(calex::abelian_cgroup(4)).canonical;
  CHECK(calex::try_exact_divide(uni4, g2).has_value());
  CHECK(calex::try_exact_divide(uni4, z4).has_value());

  auto uni6 = alexander_polynomial(calex::universal_hurwitz(6)).canonical;
  auto torus6 =
      alexander_polynomial(calex::make_builtin("torus6:2:3")).canonical;
  CHECK(calex::try_exact_divide(uni6, torus6).has_value());
}

TEST_CASE("paper sign view") {
  auto g2 = alexander_polynomial(calex::g2_presentation());
  // deg 2: the char-poly normalization agrees with the canonical one
  CHECK(g2.paper_signed() == g2.canonical);
  auto z2 = alexander_polynomial(calex::abelian_cgroup(2));
  CHECK(z2.paper_signed() == -z2.canonical);  // deg 1: leading term -t
  CHECK(z2.paper_signed().constant_term() == 1);  // (-1)^(deg - (k-1)) = 1
}

TEST_CASE("result json schema") {
  auto j = calex::result_to_json(alexander_polynomial(calex::g2_presentation()));
  CHECK(j["canonical"] == nlohmann::json({-1, 0, 1}));
  CHECK(j["factors"].size() == 2);
  CHECK(j["factors"][0]["d"] == 1);
  CHECK(j["factors"][0]["mult"] == 1);
  CHECK(j["factors"][1]["d"] == 2);
  CHECK(j["components"] == 2);
  CHECK(j["generators"] == 4);
  CHECK(j["hurwitz_degree"] == 4);
  CHECK(j["unit"]["sign"] == 1);
  CHECK(j["unit"]["t_power"] == 0);
  for (const auto& [name, entry] : j["checks"].items())
    CHECK(entry["pass"] == true);
}
