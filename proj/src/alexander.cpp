#include "calex/alexander.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace calex {

AlexanderMatrix build_matrix(const std::vector<Word>& relators,
                             int generator_count) {
  AlexanderMatrix mat;
  mat.cols = generator_count;
  for (const auto& r : relators) {
    if (r.empty()) continue;
    std::vector<LaurentPoly> row;
    row.reserve(static_cast<std::size_t>(generator_count));
    LaurentPoly sum;
    for (int g = 1; g <= generator_count; ++g) {
      row.push_back(fox_derivative(r, g));
      sum = sum + row.back();
    }
    if (!sum.is_zero())
      throw invariant_error("Fox matrix row for relator " + r.to_string() +
                            " does not sum to zero");
    mat.rows.push_back(std::move(row));
  }
  return mat;
}

AlexanderMatrix build_matrix(const CPresentation& p) {
  return build_matrix(relators(p), p.generator_count);
}

AlexanderMatrix simplify_unit_pivots(AlexanderMatrix mat) {
  // Stop at one column: its minor GCD is the empty determinant already.
  while (mat.cols > 1) {
    int pr = -1, pc = -1;
    for (int r = 0; r < mat.row_count() && pr < 0; ++r)
      for (int c = 0; c < mat.cols; ++c)
        if (mat.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]
                .is_unit()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;
    const auto& pivot_row = mat.rows[static_cast<std::size_t>(pr)];
    const LaurentPoly& pivot = pivot_row[static_cast<std::size_t>(pc)];
    for (int r = 0; r < mat.row_count(); ++r) {
      if (r == pr) continue;
      auto& row = mat.rows[static_cast<std::size_t>(r)];
      const LaurentPoly& entry = row[static_cast<std::size_t>(pc)];
      if (entry.is_zero()) continue;
      LaurentPoly factor = exact_divide(entry, pivot);
      for (int c = 0; c < mat.cols; ++c)
        row[static_cast<std::size_t>(c)] =
            row[static_cast<std::size_t>(c)] -
            factor * pivot_row[static_cast<std::size_t>(c)];
    }
    mat.rows.erase(mat.rows.begin() + pr);
    for (auto& row : mat.rows) row.erase(row.begin() + pc);
    --mat.cols;
    std::erase_if(mat.rows, [](const std::vector<LaurentPoly>& row) {
      return std::all_of(row.begin(), row.end(),
                         [](const LaurentPoly& e) { return e.is_zero(); });
    });
  }
  return mat;
}

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::one();
  // Shift each column into Z[t]; the determinant changes by a unit only.
  for (std::size_t j = 0; j < n; ++j) {
    long low = 0;
    bool any = false;
    for (std::size_t i = 0; i < n; ++i)
      if (!m[i][j].is_zero()) {
        low = any ? std::min(low, m[i][j].lowest_exponent())
                  : m[i][j].lowest_exponent();
        any = true;
      }
    if (!any) return {};
    if (low != 0)
      for (std::size_t i = 0; i < n; ++i) m[i][j] = m[i][j].shifted(-low);
  }
  int sign = 1;
  LaurentPoly prev = LaurentPoly::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num.is_zero() ? LaurentPoly{} : exact_divide(num, prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

namespace {

// Lexicographic k-subsets of {0..n-1}.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

LaurentPoly submatrix_det(const AlexanderMatrix& mat,
                          const std::vector<int>& row_idx,
                          const std::vector<int>& col_idx) {
  std::vector<std::vector<LaurentPoly>> sub;
  sub.reserve(row_idx.size());
  for (int r : row_idx) {
    std::vector<LaurentPoly> row;
    row.reserve(col_idx.size());
    for (int c : col_idx)
      row.push_back(
          mat.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    sub.push_back(std::move(row));
  }
  return determinant(std::move(sub));
}

LaurentPoly gcd_accumulate(const LaurentPoly& acc, const LaurentPoly& det) {
  if (det.is_zero()) return acc;
  if (acc.is_zero()) return canonical_part(det);
  return laurent_gcd(acc, det);
}

}  // namespace

LaurentPoly minor_gcd(const AlexanderMatrix& mat, int threads) {
  const int k = mat.cols - 1;
  if (mat.cols <= 1) return LaurentPoly::one();
  if (mat.row_count() < k) return {};  // Delta == 0 by convention

  const auto col_sets = subsets(mat.cols, k);
  const auto row_sets = subsets(mat.row_count(), k);
  LaurentPoly g;
  if (threads <= 1) {
    for (const auto& cols : col_sets) {
      for (const auto& rows : row_sets) {
        g = gcd_accumulate(g, submatrix_det(mat, rows, cols));
        if (g.is_one()) return g;
      }
    }
    return g;
  }

  // Parallel map over row subsets, GCD-reduced in fixed chunk order. GCD
  // is associative and commutative on canonical representatives, so the
  // result is schedule independent; stopping early once some chunk hits 1
  // cannot change it.
  std::atomic<bool> done{false};
  for (const auto& cols : col_sets) {
    const std::size_t total = row_sets.size();
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(threads), total);
    std::vector<LaurentPoly> partial(nthreads);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t] {
        LaurentPoly local;
        for (std::size_t i = t; i < total; i += nthreads) {
          if (done.load(std::memory_order_relaxed)) break;
          local = gcd_accumulate(local, submatrix_det(mat, row_sets[i], cols));
          if (local.is_one()) {
            done.store(true, std::memory_order_relaxed);
            break;
          }
        }
        partial[t] = std::move(local);
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& part : partial) g = gcd_accumulate(g, part);
    if (g.is_one()) return g;
    done.store(false, std::memory_order_relaxed);
  }
  return g;
}

bool CheckReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

const Check* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

LaurentPoly AlexanderResult::paper_signed() const {
  if (canonical.is_zero()) return canonical;
  return canonical.degree() % 2 == 0 ? canonical : -canonical;
}

namespace {

std::string poly_str(const LaurentPoly& p) { return p.to_string(); }

}  // namespace

CheckReport verify(const LaurentPoly& canonical,
                   const CyclotomicFactorization& f, int components,
                   std::optional<int> hurwitz_degree) {
  CheckReport report;
  auto add = [&](std::string name, bool pass, std::string detail,
                 bool applicable = true) {
    report.checks.push_back(
        {std::move(name), pass, applicable, std::move(detail)});
  };
  const bool zero = canonical.is_zero();
  const int k = components;

  {
    mpz_class c0 = zero ? mpz_class(0) : canonical.constant_term();
    bool ok = c0 == 1 || c0 == -1;
    add("delta0_unit", ok, "Delta(0) = " + c0.get_str());
  }

  if (hurwitz_degree && f.complete()) {
    long m = *hurwitz_degree;
    bool ok = true;
    std::ostringstream os;
    for (const auto& fac : f.factors)
      if (m % fac.index != 0) {
        ok = false;
        os << " Phi_" << fac.index << " does not divide " << m << ";";
      }
    add("factors_divide_degree", ok,
        ok ? "all factor indices divide m = " + std::to_string(m) : os.str());
  } else {
    add("factors_divide_degree", !zero && f.complete(),
        zero          ? "Delta == 0"
        : f.complete() ? "skipped: no hurwitz degree"
                       : "non-cyclotomic residual",
        false);
  }

  if (hurwitz_degree && !zero) {
    long m = *hurwitz_degree;
    LaurentPoly bound =
        cyclotomic(1) *
        (LaurentPoly::t_power(m) - LaurentPoly::one()).pow(std::max(m - 2, 0L));
    bool ok = try_exact_divide(bound, canonical).has_value();
    add("divides_universal", ok,
        "Delta | (t-1)(t^" + std::to_string(m) + "-1)^" +
            std::to_string(std::max(m - 2, 0L)) + (ok ? "" : " fails"));
  } else {
    add("divides_universal", !zero,
        zero ? "Delta == 0" : "skipped: no hurwitz degree", false);
  }

  {
    bool ok = f.complete() && f.multiplicity_of(1) == k - 1;
    add("phi1_multiplicity", ok,
        "mult Phi_1 = " + std::to_string(f.multiplicity_of(1)) +
            ", components - 1 = " + std::to_string(k - 1));
  }

  if (k == 1 && !zero) {
    bool rec = is_reciprocal(canonical);
    bool even = canonical.degree() % 2 == 0;
    bool at_one = canonical.evaluate(1) == 1;
    add("irreducible_shape", rec && even && at_one,
        std::string("reciprocal=") + (rec ? "yes" : "no") +
            " degree=" + std::to_string(zero ? -1 : canonical.degree()) +
            " Delta(1)=" + canonical.evaluate(1).get_str());
  } else {
    add("irreducible_shape", !zero,
        zero ? "Delta == 0" : "skipped: " + std::to_string(k) + " components",
        false);
  }

  if (k == 1 && hurwitz_degree && is_prime_power(*hurwitz_degree) && !zero) {
    bool ok = canonical.is_one();
    add("prime_power_trivial", ok,
        "m = " + std::to_string(*hurwitz_degree) +
            " is a prime power; Delta = " + poly_str(canonical));
  } else {
    add("prime_power_trivial", !zero,
        zero ? "Delta == 0" : "skipped: not an irreducible prime-power case",
        false);
  }

  {
    mpz_class expected = (k - 1) % 2 == 0 ? 1 : -1;
    mpz_class c0 = zero ? mpz_class(0) : canonical.constant_term();
    add("constant_sign", c0 == expected,
        "Delta(0) = " + c0.get_str() + ", (-1)^(k-1) = " + expected.get_str());
  }

  return report;
}

AlexanderResult alexander_polynomial(const CPresentation& p, int threads) {
  AlexanderResult result;
  result.label = p.label;
  result.generator_count = p.generator_count;
  result.components = components(p);
  result.hurwitz_degree = p.hurwitz_degree;

  AlexanderMatrix mat = simplify_unit_pivots(build_matrix(p));
  LaurentPoly g = minor_gcd(mat, threads);
  result.canonical = g;
  if (g.is_zero()) {
    result.factorization.residual = LaurentPoly{};  // flags the degenerate case
  } else {
    result.factorization = factor_cyclotomic(g);
  }
  result.checks = verify(result.canonical, result.factorization,
                         result.components, result.hurwitz_degree);
  return result;
}

}  // namespace calex
