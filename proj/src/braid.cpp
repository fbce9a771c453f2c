#include "calex/braid.hpp"

#include <numeric>
#include <sstream>

#include "calex/constructions.hpp"

namespace calex {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw calex_error("braid group needs at least 2 strands");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1)
      throw index_out_of_range_error("braid generator s" +
                                     std::to_string(l.index) + " outside 1.." +
                                     std::to_string(strands_ - 1));
    if (l.sign != 1 && l.sign != -1)
      throw calex_error("braid letter sign must be +-1");
  }
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (strands_ != rhs.strands_)
    throw calex_error("braid words on different strand counts");
  std::vector<BraidLetter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back({it->index, -it->sign});
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::pow(long e) const {
  BraidWord base = e < 0 ? inverse() : *this;
  long n = e < 0 ? -e : e;
  BraidWord out(strands_);
  for (long i = 0; i < n; ++i) out = out * base;
  return out;
}

std::string BraidWord::to_string() const {
  // Render runs of equal letters with exponents.
  Word runs;
  for (const auto& l : letters_)
    runs = runs * Word::generator(l.index, l.sign);
  return runs.to_string('s');
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
  Word runs = Word::parse(text, 's');
  std::vector<BraidLetter> letters;
  for (const auto& r : runs.letters()) {
    int sign = r.exponent > 0 ? 1 : -1;
    for (long k = 0; k < (r.exponent > 0 ? r.exponent : -r.exponent); ++k)
      letters.push_back({r.generator, sign});
  }
  return BraidWord(strands, std::move(letters));
}

namespace {

Word generator_image(const BraidLetter& l, int g) {
  int j = l.index;
  if (l.sign > 0) {
    if (g == j)
      return Word::generator(j) * Word::generator(j + 1) *
             Word::generator(j, -1);
    if (g == j + 1) return Word::generator(j);
  } else {
    if (g == j) return Word::generator(j + 1);
    if (g == j + 1)
      return Word::generator(j + 1, -1) * Word::generator(j) *
             Word::generator(j + 1);
  }
  return Word::generator(g);
}

}  // namespace

Word artin_apply(const BraidWord& b, const Word& w) {
  if (w.max_generator() > b.strands())
    throw index_out_of_range_error(
        "word uses x" + std::to_string(w.max_generator()) + " but braid has " +
        std::to_string(b.strands()) + " strands");
  Word current = w;
  for (const auto& letter : b.letters()) {
    Word next;
    for (const auto& run : current.letters())
      next = next * generator_image(letter, run.generator).pow(run.exponent);
    current = std::move(next);
  }
  return current;
}

BraidWord half_twist(int n) {
  std::vector<BraidLetter> letters;
  for (int tail = 1; tail <= n - 1; ++tail)
    for (int i = tail; i >= 1; --i) letters.push_back({i, 1});
  return BraidWord(n, std::move(letters));
}

BraidWord b_nm(int n, int m) {
  if (n < 2 || m < 1) throw calex_error("b_nm needs n >= 2, m >= 1");
  std::vector<BraidLetter> letters;
  for (int rep = 0; rep < m; ++rep)
    for (int i = 1; i <= n - 1; ++i) letters.push_back({i, 1});
  return BraidWord(n, std::move(letters));
}

BraidWord full_twist(int n) { return b_nm(n, n); }

CPresentation g_nm_presentation(int n, int m) {
  BraidWord b = b_nm(n, m);
  CPresentation p;
  p.generator_count = n;
  for (int i = 1; i <= n; ++i) {
    Word image = artin_apply(b, Word::generator(i));
    auto [j, conj] = extract_conjugate(image);
    p.add_relation(i, j, conj);
  }
  p.hurwitz_degree = n * m;
  p.central_witness = power_product_witness(n, m);
  std::ostringstream label;
  label << "G_{" << n << "," << m << "}";
  p.label = label.str();
  return p;
}

LaurentPoly le_formula(int n, int m) {
  if (n < 1 || m < 1) throw calex_error("le_formula needs positive n, m");
  if (std::gcd(n, m) != 1)
    throw not_coprime_error("le_formula requires coprime (" +
                            std::to_string(n) + "," + std::to_string(m) + ")");
  LaurentPoly tn = LaurentPoly::t_power(n) - LaurentPoly::one();
  LaurentPoly tm = LaurentPoly::t_power(m) - LaurentPoly::one();
  LaurentPoly tnm =
      LaurentPoly::t_power(static_cast<long>(n) * m) - LaurentPoly::one();
  return canonical_part(exact_divide(cyclotomic(1) * tnm, tn * tm));
}

}  // namespace calex
