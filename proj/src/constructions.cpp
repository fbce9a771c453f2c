#include "calex/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "calex/braid.hpp"

namespace calex {

CPresentation universal_hurwitz(int m) {
  if (m < 2) throw calex_error("universal_hurwitz needs m >= 2");
  CPresentation p;
  p.generator_count = m;
  p = ensure_hurwitz(std::move(p));
  p.label = "G~_" + std::to_string(m);
  return p;
}

LaurentPoly universal_char_oracle(int m) {
  if (m < 2) throw calex_error("universal_char_oracle needs m >= 2");
  // Basis: one fixed element a_(0,m), then a_(k,j) for k = 1..m and
  // j = 2..m-1 with h: a_(k,j) -> a_(k+1,j), a_(m,j) -> a_(1,j).
  std::vector<int> perm;
  perm.push_back(0);  // fixed point
  int base = 1;
  for (int j = 2; j <= m - 1; ++j) {
    for (int k = 1; k <= m; ++k)
      perm.push_back(k == m ? base : base + k);  // k -> k+1 cyclically
    base += m;
  }
  std::vector<bool> seen(perm.size(), false);
  LaurentPoly charpoly = LaurentPoly::one();
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    long len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(perm[i])) {
      seen[i] = true;
      ++len;
    }
    charpoly = charpoly * (LaurentPoly::t_power(len) - LaurentPoly::one());
  }
  return charpoly;
}

CPresentation abelian_cgroup(int n) {
  if (n < 1) throw calex_error("abelian_cgroup needs n >= 1");
  CPresentation p;
  p.generator_count = n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) p.add_relation(i, i, Word::generator(j));
  p.label = "Z^" + std::to_string(n);
  return p;
}

CPresentation g2_presentation() {
  CPresentation p;
  p.generator_count = 4;
  p.add_relation(4, 1, Word::generator(2, -2));  // x4 = x2^2 x1 x2^-2
  p.add_relation(3, 2, Word());                  // x3 = x2
  p.add_relation(2, 2, Word::generator(4, -2));  // x2 = x4^2 x2 x4^-2
  p = ensure_hurwitz(std::move(p));
  p.label = "G(2)";
  return p;
}

CentralWordWitness power_product_witness(int n, int m) {
  CentralWordWitness w;
  for (int rep = 0; rep < m; ++rep)
    for (int i = 1; i <= n; ++i) w.letters.push_back({i, Word()});
  w.injection.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w.injection[static_cast<std::size_t>(i - 1)] = i;
  return w;
}

namespace {

Word renumber(const Word& w, const std::vector<int>& map) {
  std::vector<Letter> letters;
  for (const auto& l : w.letters())
    letters.push_back({map[static_cast<std::size_t>(l.generator)], l.exponent});
  return Word::from_letters(letters);
}

void validate_witness(const CPresentation& p, const CentralWordWitness& w) {
  const int n = p.generator_count;
  const int m = w.degree();
  if (static_cast<int>(w.injection.size()) != n)
    throw malformed_witness_error("witness injection must cover all " +
                                  std::to_string(n) + " generators");
  std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
  for (int i = 1; i <= n; ++i) {
    int pos = w.injection[static_cast<std::size_t>(i - 1)];
    if (pos < 1 || pos > m)
      throw malformed_witness_error("injection position out of range");
    if (used[static_cast<std::size_t>(pos)])
      throw malformed_witness_error("injection positions must be distinct");
    used[static_cast<std::size_t>(pos)] = true;
    const auto& letter = w.letters[static_cast<std::size_t>(pos - 1)];
    if (letter.target != i || !letter.conjugator.empty())
      throw malformed_witness_error(
          "generator x" + std::to_string(i) +
          " does not appear verbatim at its injection position");
  }
  for (const auto& letter : w.letters) {
    if (letter.target < 1 || letter.target > n)
      throw malformed_witness_error("witness letter targets x" +
                                    std::to_string(letter.target) +
                                    " outside 1.." + std::to_string(n));
    if (letter.conjugator.max_generator() > n)
      throw malformed_witness_error("witness conjugator out of range");
  }
}

}  // namespace

CPresentation hurwitzify(const CPresentation& p,
                         const CentralWordWitness& witness) {
  validate_witness(p, witness);
  const int m = witness.degree();
  // map[old index] = new index (the injection position).
  std::vector<int> map(static_cast<std::size_t>(p.generator_count) + 1, 0);
  for (int i = 1; i <= p.generator_count; ++i)
    map[static_cast<std::size_t>(i)] =
        witness.injection[static_cast<std::size_t>(i - 1)];

  CPresentation out;
  out.generator_count = m;
  for (const auto& r : p.relations)
    out.add_relation(map[static_cast<std::size_t>(r.left)],
                     map[static_cast<std::size_t>(r.right)],
                     renumber(r.conjugator, map));
  std::vector<bool> injected(static_cast<std::size_t>(m) + 1, false);
  for (int i = 1; i <= p.generator_count; ++i)
    injected[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] = true;
  for (int pos = 1; pos <= m; ++pos) {
    if (injected[static_cast<std::size_t>(pos)]) continue;
    const auto& letter = witness.letters[static_cast<std::size_t>(pos - 1)];
    out.add_relation(pos, map[static_cast<std::size_t>(letter.target)],
                     renumber(letter.conjugator, map));
  }
  out = ensure_hurwitz(std::move(out));
  out.label = p.label.empty() ? "@" + std::to_string(m)
                              : p.label + "@" + std::to_string(m);
  return out;
}

CPresentation to_hurwitz_form(const CPresentation& p) {
  if (!p.hurwitz_degree) return ensure_hurwitz(p);
  if (*p.hurwitz_degree == p.generator_count) return ensure_hurwitz(p);
  if (p.central_witness) return hurwitzify(p, *p.central_witness);
  throw missing_hurwitz_degree_error(
      "presentation asserts degree " + std::to_string(*p.hurwitz_degree) +
      " on " + std::to_string(p.generator_count) +
      " generators but records no central witness");
}

CPresentation hurwitz_product(const CPresentation& a_in,
                              const CPresentation& b_in) {
  CPresentation a = to_hurwitz_form(a_in);
  CPresentation b = to_hurwitz_form(b_in);
  const int m1 = a.generator_count;
  const int m2 = b.generator_count;
  if (m1 < 2 || m2 < 2)
    throw missing_hurwitz_degree_error(
        "hurwitz_product factors need degree >= 2");
  const int c = m1 + m2 - 1;  // shared last generator

  std::vector<int> map1(static_cast<std::size_t>(m1) + 1, 0);
  for (int g = 1; g < m1; ++g) map1[static_cast<std::size_t>(g)] = g;
  map1[static_cast<std::size_t>(m1)] = c;
  std::vector<int> map2(static_cast<std::size_t>(m2) + 1, 0);
  for (int g = 1; g < m2; ++g) map2[static_cast<std::size_t>(g)] = m1 - 1 + g;
  map2[static_cast<std::size_t>(m2)] = c;

  CPresentation out;
  out.generator_count = c;
  for (const auto& r : a.relations)
    out.add_relation(map1[static_cast<std::size_t>(r.left)],
                     map1[static_cast<std::size_t>(r.right)],
                     renumber(r.conjugator, map1));
  for (const auto& r : b.relations)
    out.add_relation(map2[static_cast<std::size_t>(r.left)],
                     map2[static_cast<std::size_t>(r.right)],
                     renumber(r.conjugator, map2));

  Word y1, y2;
  for (int g = 1; g <= m1; ++g)
    y1 = y1 * Word::generator(map1[static_cast<std::size_t>(g)]);
  for (int g = 1; g <= m2; ++g)
    y2 = y2 * Word::generator(map2[static_cast<std::size_t>(g)]);

  // Generators of each factor commute with the other factor's full
  // product raised to this factor's degree.
  for (int g = 1; g < m1; ++g)
    out.add_relation(g, g, y2.pow(m1));
  for (int g = 1; g < m2; ++g) {
    int idx = map2[static_cast<std::size_t>(g)];
    out.add_relation(idx, idx, y1.pow(m2));
  }

  out.hurwitz_degree = 2 * m1 * m2;
  CentralWordWitness witness;
  auto push_product = [&witness](const Word& y, int copies) {
    for (int rep = 0; rep < copies; ++rep)
      for (const auto& l : y.letters())
        for (long k = 0; k < l.exponent; ++k)
          witness.letters.push_back({l.generator, Word()});
  };
  push_product(y1, m2);
  push_product(y2, m1);
  witness.injection.resize(static_cast<std::size_t>(c));
  for (int g = 1; g < m1; ++g)
    witness.injection[static_cast<std::size_t>(g - 1)] = g;
  witness.injection[static_cast<std::size_t>(c - 1)] = m1;  // c inside y1
  for (int g = 1; g < m2; ++g)
    witness.injection[static_cast<std::size_t>(m1 - 1 + g - 1)] =
        m1 * m2 + g;
  out.central_witness = std::move(witness);

  std::string la = a_in.label.empty() ? "P1" : a_in.label;
  std::string lb = b_in.label.empty() ? "P2" : b_in.label;
  out.label = la + " ◇ " + lb;
  return out;
}

CPresentation make_builtin(const std::string& spec) {
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      std::size_t colon = s.find(':', start);
      parts.push_back(s.substr(start, colon - start));
      if (colon == std::string::npos) break;
      start = colon + 1;
    }
    return parts;
  };
  auto parts = split(spec);
  auto arg = [&](std::size_t i) {
    if (i >= parts.size())
      throw syntax_error("builtin '" + spec + "' is missing an argument", 1, 1);
    try {
      return std::stoi(parts[i]);
    } catch (const std::exception&) {
      throw syntax_error("builtin argument '" + parts[i] +
                             "' is not an integer",
                         1, 1);
    }
  };
  const std::string& kind = parts[0];
  if (kind == "g2" && parts.size() == 1) return g2_presentation();
  if (kind == "universal" && parts.size() == 2)
    return universal_hurwitz(arg(1));
  if (kind == "abelian" && parts.size() == 2) return abelian_cgroup(arg(1));
  if (kind == "torus" && parts.size() == 3)
    return g_nm_presentation(arg(1), arg(2));
  if (kind == "torus6" && parts.size() == 3) {
    int n = arg(1), m = arg(2);
    return hurwitzify(g_nm_presentation(n, m), power_product_witness(n, m));
  }
  throw syntax_error("unknown builtin '" + spec + "'", 1, 1);
}

}  // namespace calex
