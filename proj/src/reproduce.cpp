#include "calex/reproduce.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "calex/alexander.hpp"
#include "calex/braid.hpp"
#include "calex/constructions.hpp"
#include "calex/covering.hpp"

namespace calex {

namespace {

using Rng = std::mt19937_64;

struct Criterion {
  std::string title;
  int total = 0;
  int failed = 0;
  std::ostringstream details;

  void expect(bool ok, const std::string& what) {
    ++total;
    if (!ok) {
      ++failed;
      details << "    FAIL " << what << "\n";
    }
  }
  bool pass() const { return failed == 0; }
};

void report(std::ostream& os, int index, const Criterion& c) {
  os << "criterion " << index << " " << (c.pass() ? "PASS" : "FAIL") << "  "
     << c.title << " [" << (c.total - c.failed) << "/" << c.total << "]\n";
  if (!c.pass()) os << c.details.str();
}

LaurentPoly phi(long d) { return cyclotomic(d); }

LaurentPoly geometric_even_sum(int terms) {
  LaurentPoly s;
  for (int i = 0; i < terms; ++i) s = s + LaurentPoly::t_power(2 * i);
  return s;
}

Word random_word(Rng& rng, int max_gen, int max_runs) {
  std::uniform_int_distribution<int> runs(0, max_runs);
  std::uniform_int_distribution<int> gen(1, max_gen);
  std::uniform_int_distribution<int> exp(-3, 3);
  Word w;
  int n = runs(rng);
  for (int i = 0; i < n; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    w = w * Word::generator(gen(rng), e);
  }
  return w;
}

CPresentation random_presentation(Rng& rng) {
  std::uniform_int_distribution<int> gens(2, 4);
  CPresentation p;
  p.generator_count = gens(rng);
  std::uniform_int_distribution<int> rels(1, 5);
  std::uniform_int_distribution<int> idx(1, p.generator_count);
  int n = rels(rng);
  for (int i = 0; i < n; ++i)
    p.add_relation(idx(rng), idx(rng), random_word(rng, p.generator_count, 3));
  return p;
}

LaurentPoly random_poly(Rng& rng) {
  std::uniform_int_distribution<int> low(-1, 1);
  std::uniform_int_distribution<int> len(1, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<mpz_class> cs;
  int n = len(rng);
  for (int i = 0; i < n; ++i) cs.emplace_back(coeff(rng));
  return LaurentPoly(low(rng), std::move(cs));
}

AlexanderMatrix random_matrix(Rng& rng) {
  std::uniform_int_distribution<int> rows(3, 6);
  std::uniform_int_distribution<int> cols(3, 4);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<int> shift(-2, 2);
  AlexanderMatrix m;
  m.cols = cols(rng);
  int r = rows(rng);
  for (int i = 0; i < r; ++i) {
    std::vector<LaurentPoly> row;
    for (int j = 0; j < m.cols; ++j) {
      int k = kind(rng);
      if (k < 2) {
        row.emplace_back();
      } else if (k < 5) {
        row.push_back(LaurentPoly::term(k % 2 ? 1 : -1, shift(rng)));
      } else {
        row.push_back(random_poly(rng));
      }
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

struct CorpusEntry {
  std::string name;
  AlexanderResult result;
};

}  // namespace

bool run_acceptance(std::ostream& os, std::uint64_t seed, int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  bool all = true;
  std::vector<CorpusEntry> corpus;
  auto run = [&](int index, Criterion& c) {
    report(os, index, c);
    all = all && c.pass();
  };

  {  // 1: torus knot groups against the closed formula
    Criterion c{"torus knot Alexander polynomials match the closed formula"};
    for (auto [n, m] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 5}}) {
      auto result = alexander_polynomial(g_nm_presentation(n, m), threads);
      bool ok = result.canonical == le_formula(n, m);
      c.expect(ok, "G_{" + std::to_string(n) + "," + std::to_string(m) +
                       "}: got " + result.canonical.to_string());
      corpus.push_back({result.label, std::move(result)});
    }
    run(1, c);
  }

  {  // 2: G_{2,2m} series
    Criterion c{"G_{2,2m} polynomials equal (1-t)(1+t^2+...+t^(2m-2))"};
    for (int m = 1; m <= 6; ++m) {
      auto result = alexander_polynomial(g_nm_presentation(2, 2 * m), threads);
      LaurentPoly expected = canonical_part(
          (LaurentPoly::one() - LaurentPoly::t_power(1)) *
          geometric_even_sum(m));
      c.expect(result.canonical == expected,
               "G_{2," + std::to_string(2 * m) + "}: got " +
                   result.canonical.to_string() + ", want " +
                   expected.to_string());
      corpus.push_back({result.label, std::move(result)});
    }
    run(2, c);
  }

  {  // 3: G(2)
    Criterion c{"G(2): Delta = t^2-1, two components, all checks pass"};
    auto result = alexander_polynomial(g2_presentation(), threads);
    c.expect(result.canonical ==
                 LaurentPoly(0, {mpz_class(-1), mpz_class(0), mpz_class(1)}),
             "Delta(G(2)) = " + result.canonical.to_string());
    c.expect(result.components == 2,
             "components = " + std::to_string(result.components));
    c.expect(result.hurwitz_degree && *result.hurwitz_degree == 4,
             "hurwitz degree");
    c.expect(result.checks.all_pass(), "verify report");
    corpus.push_back({result.label, std::move(result)});
    run(3, c);
  }

  {  // 4: universal Hurwitz groups against the permutation oracle
    Criterion c{
        "universal Hurwitz groups match (t-1)(t^m-1)^(m-2) and the "
        "permutation oracle"};
    for (int m = 2; m <= 5; ++m) {
      auto result = alexander_polynomial(universal_hurwitz(m), threads);
      LaurentPoly closed = canonical_part(
          phi(1) * (LaurentPoly::t_power(m) - LaurentPoly::one())
                       .pow(std::max(m - 2, 0)));
      LaurentPoly oracle = canonical_part(universal_char_oracle(m));
      c.expect(result.canonical == closed,
               "G~_" + std::to_string(m) + " vs closed formula");
      c.expect(result.canonical == oracle,
               "G~_" + std::to_string(m) + " vs permutation oracle");
      corpus.push_back({result.label, std::move(result)});
    }
    run(4, c);
  }

  {  // 5: Hurwitz products
    Criterion c{"Hurwitz products multiply Alexander polynomials"};
    auto z2 = abelian_cgroup(2);
    auto torus6 = make_builtin("torus6:2:3");

    auto r1 = alexander_polynomial(hurwitz_product(z2, z2), threads);
    c.expect(r1.canonical == canonical_part(phi(1) * phi(1)),
             "Z^2 <> Z^2: got " + r1.canonical.to_string());
    corpus.push_back({r1.label, std::move(r1)});

    auto r2 = alexander_polynomial(hurwitz_product(g2_presentation(), z2),
                                   threads);
    c.expect(r2.canonical == canonical_part(phi(1) * phi(1) * phi(2)),
             "G(2) <> Z^2: got " + r2.canonical.to_string());
    corpus.push_back({r2.label, std::move(r2)});

    auto r3 = alexander_polynomial(hurwitz_product(torus6, torus6), threads);
    c.expect(r3.canonical == canonical_part(phi(6) * phi(6)),
             "G_{2,3}@6 <> G_{2,3}@6: got " + r3.canonical.to_string());
    corpus.push_back({r3.label, std::move(r3)});
    run(5, c);
  }

  {  // 6: Betti numbers from factorizations
    Criterion c{"first Betti numbers of cyclic coverings"};
    for (long k = 1; k <= 5; ++k) {
      CyclotomicFactorization f;
      f.factors = {{6, k}};
      c.expect(betti_b1(f, 6).b1 == 2 * k,
               "b1({Phi_6^" + std::to_string(k) + "}, 6)");
      CyclotomicFactorization g;
      g.factors = {{1, k}, {2, k}};
      c.expect(betti_b1(g, 2).b1 == k,
               "b1({Phi_1^k Phi_2^k}, 2), k=" + std::to_string(k));
    }
    {
      CyclotomicFactorization f;
      f.factors = {{6, 1}};
      c.expect(betti_b1(f, 5).b1 == 0, "coprime degree gives b1 = 0");
      CyclotomicFactorization g;
      g.factors = {{4, 2}, {3, 1}};
      c.expect(betti_b1(g, 25).b1 == 0, "coprime degree gives b1 = 0 (25)");
      c.expect(betti_b1(g, 12).b1 == 2 * 2 + 2,
               "n = 12 counts Phi_4^2 and Phi_3");
    }
    run(6, c);
  }

  {  // 7: cyclotomic values at t = 1
    Criterion c{"Phi_k(1) equals p on prime powers and 1 otherwise"};
    const std::vector<std::pair<long, long>> prime_powers = {
        {2, 2}, {3, 3}, {4, 2}, {5, 5}, {7, 7},
        {8, 2}, {9, 3}, {16, 2}, {25, 5}, {27, 3}};
    for (auto [k, p] : prime_powers)
      c.expect(phi(k).evaluate(1) == p, "Phi_" + std::to_string(k) + "(1)");
    for (long k : {6, 10, 12, 15, 18, 20, 30})
      c.expect(phi(k).evaluate(1) == 1, "Phi_" + std::to_string(k) + "(1)");
    run(7, c);
  }

  {  // 8: randomized property suites
    Criterion c{"randomized property suites (fixed seed)"};
    const int cases = 200;

    {  // row sums of Fox matrices vanish
      Rng rng(seed);
      for (int i = 0; i < cases; ++i) {
        AlexanderMatrix m = build_matrix(random_presentation(rng));
        bool ok = true;
        for (const auto& row : m.rows) {
          LaurentPoly sum;
          for (const auto& e : row) sum = sum + e;
          ok = ok && sum.is_zero();
        }
        c.expect(ok, "row sums vanish, case " + std::to_string(i));
        if (!ok) break;
      }
    }

    {  // Fox product rule and the fundamental identity
      Rng rng(seed + 1);
      for (int i = 0; i < cases; ++i) {
        Word u = random_word(rng, 4, 6), v = random_word(rng, 4, 6);
        std::uniform_int_distribution<int> gen(1, 4);
        int g = gen(rng);
        LaurentPoly lhs = fox_derivative(u * v, g);
        LaurentPoly rhs =
            fox_derivative(u, g) +
            LaurentPoly::t_power(u.exponent_sum()) * fox_derivative(v, g);
        c.expect(lhs == rhs, "product rule, case " + std::to_string(i));

        LaurentPoly total;
        for (int j = 1; j <= std::max(u.max_generator(), 1); ++j)
          total = total + fox_derivative(u, j) * phi(1);
        LaurentPoly target = LaurentPoly::t_power(u.exponent_sum()) -
                             LaurentPoly::one();
        c.expect(total == target, "fundamental identity, case " +
                                      std::to_string(i));

        LaurentPoly inv = fox_derivative(u.inverse(), g);
        LaurentPoly expect_inv =
            -(LaurentPoly::t_power(-u.exponent_sum()) * fox_derivative(u, g));
        c.expect(inv == expect_inv, "inverse rule, case " + std::to_string(i));
        if (c.failed) break;
      }
    }

    {  // braid relations hold at the action level
      Rng rng(seed + 2);
      for (int i = 0; i < cases; ++i) {
        std::uniform_int_distribution<int> strands(3, 5);
        int n = strands(rng);
        std::uniform_int_distribution<int> idx(1, n - 2);
        int a = idx(rng);
        Word w = random_word(rng, n, 6);
        BraidWord lhs(n, {{a, 1}, {a + 1, 1}, {a, 1}});
        BraidWord rhs(n, {{a + 1, 1}, {a, 1}, {a + 1, 1}});
        c.expect(artin_apply(lhs, w) == artin_apply(rhs, w),
                 "braid relation, case " + std::to_string(i));
        if (n >= 4) {
          BraidWord ab(n, {{1, 1}, {n - 1, 1}});
          BraidWord ba(n, {{n - 1, 1}, {1, 1}});
          c.expect(artin_apply(ab, w) == artin_apply(ba, w),
                   "distant commutation, case " + std::to_string(i));
        }
        BraidWord b(n);
        std::uniform_int_distribution<int> len(1, 6);
        std::uniform_int_distribution<int> any_idx(1, n - 1);
        std::uniform_int_distribution<int> sgn(0, 1);
        int bl = len(rng);
        for (int j = 0; j < bl; ++j)
          b = b * BraidWord(n, {{any_idx(rng), sgn(rng) ? 1 : -1}});
        c.expect(artin_apply(b * b.inverse(), w) == w,
                 "inverse action, case " + std::to_string(i));
        if (c.failed) break;
      }
    }

    {  // full twist conjugates by the product of the generators
      Rng rng(seed + 3);
      for (int i = 0; i < cases; ++i) {
        std::uniform_int_distribution<int> strands(2, 4);
        int n = strands(rng);
        Word w = random_word(rng, n, 5);
        Word y;
        for (int g = 1; g <= n; ++g) y = y * Word::generator(g);
        Word expected = w.conjugated_by(y.inverse());  // y w y^-1
        c.expect(artin_apply(full_twist(n), w) == expected,
                 "full twist conjugation, case " + std::to_string(i));
        BraidWord half = half_twist(n);
        c.expect(artin_apply(half * half, w) ==
                     artin_apply(full_twist(n), w),
                 "half twist squared, case " + std::to_string(i));
        if (c.failed) break;
      }
    }

    {  // factorization round trip
      Rng rng(seed + 4);
      for (int i = 0; i < cases; ++i) {
        CyclotomicFactorization f;
        std::uniform_int_distribution<int> sgn(0, 1);
        std::uniform_int_distribution<long> shift(-3, 3);
        std::uniform_int_distribution<long> index(1, 30);
        std::uniform_int_distribution<long> mult(1, 3);
        std::uniform_int_distribution<int> count(0, 3);
        f.sign = sgn(rng) ? 1 : -1;
        f.t_shift = shift(rng);
        int nf = count(rng);
        for (int j = 0; j < nf; ++j) {
          long d = index(rng);
          bool dup = false;
          for (auto& existing : f.factors)
            if (existing.index == d) dup = true;
          if (!dup) f.factors.push_back({d, mult(rng)});
        }
        std::sort(f.factors.begin(), f.factors.end(),
                  [](const auto& a, const auto& b) { return a.index < b.index; });
        LaurentPoly p = f.reconstruct();
        CyclotomicFactorization g = factor_cyclotomic(p);
        c.expect(g.complete() && g.reconstruct() == p && g.sign == f.sign &&
                     g.t_shift == f.t_shift && g.factors == f.factors,
                 "factorization round trip, case " + std::to_string(i));
        if (c.failed) break;
      }
    }

    {  // minor GCD invariance under unit pivots
      Rng rng(seed + 5);
      for (int i = 0; i < cases; ++i) {
        AlexanderMatrix m = random_matrix(rng);
        LaurentPoly brute = minor_gcd(m);
        LaurentPoly simplified = minor_gcd(simplify_unit_pivots(m));
        c.expect(brute == simplified,
                 "pivot invariance, case " + std::to_string(i) + ": " +
                     brute.to_string() + " vs " + simplified.to_string());
        if (c.failed) break;
      }
    }
    run(8, c);
  }

  {  // 9: structural theorems over the whole computed corpus
    Criterion c{"structural checks pass on every computed polynomial"};
    for (const auto& entry : corpus) {
      for (const auto& check : entry.result.checks.checks)
        c.expect(check.pass,
                 entry.name + " / " + check.name + ": " + check.detail);
    }
    run(9, c);
  }

  const auto t1 = std::chrono::steady_clock::now();
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  os << (all ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << " (" << ms
     << " ms, seed " << seed << ")\n";
  return all;
}

}  // namespace calex
