#include "calex/word.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

namespace calex {

void Word::append_run(int generator, long exponent) {
  if (exponent == 0) return;
  if (generator < 1) throw index_out_of_range_error("generator index < 1");
  if (!letters_.empty() && letters_.back().generator == generator) {
    letters_.back().exponent += exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({generator, exponent});
}

Word Word::generator(int index, long exponent) {
  Word w;
  w.append_run(index, exponent);
  return w;
}

Word Word::from_letters(const std::vector<Letter>& letters) {
  Word w;
  for (const auto& l : letters) w.append_run(l.generator, l.exponent);
  return w;
}

long Word::length() const {
  long n = 0;
  for (const auto& l : letters_) n += std::labs(l.exponent);
  return n;
}

long Word::exponent_sum() const {
  long s = 0;
  for (const auto& l : letters_) s += l.exponent;
  return s;
}

int Word::max_generator() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.generator);
  return m;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  for (const auto& l : rhs.letters_) w.append_run(l.generator, l.exponent);
  return w;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->generator, -it->exponent});
  return w;
}

Word Word::conjugated_by(const Word& c) const {
  return c.inverse() * *this * c;
}

Word Word::pow(long e) const {
  Word base = e < 0 ? inverse() : *this;
  long n = e < 0 ? -e : e;
  Word out;
  for (long i = 0; i < n; ++i) out = out * base;
  return out;
}

LaurentPoly fox_derivative(const Word& w, int generator) {
  // Left-to-right scan with running exponent sum e: the letter x_g at
  // position e contributes t^e, the letter x_g^-1 contributes -t^(e-1).
  std::map<long, mpz_class> acc;
  long e = 0;
  for (const auto& l : w.letters()) {
    if (l.generator == generator) {
      if (l.exponent > 0) {
        for (long k = 0; k < l.exponent; ++k) acc[e + k] += 1;
      } else {
        for (long k = 1; k <= -l.exponent; ++k) acc[e - k] -= 1;
      }
    }
    e += l.exponent;
  }
  LaurentPoly p;
  for (const auto& [exp, coeff] : acc)
    p = p + LaurentPoly::term(coeff, exp);
  return p;
}

std::pair<int, Word> extract_conjugate(const Word& w) {
  // Expand to single letters; a reduced conjugate of a generator is
  // exactly s^-1 ... x_j ... s with the suffix inverse to the prefix.
  std::vector<std::pair<int, int>> singles;  // (generator, +-1)
  for (const auto& l : w.letters()) {
    int step = l.exponent > 0 ? 1 : -1;
    for (long k = 0; k < std::labs(l.exponent); ++k)
      singles.emplace_back(l.generator, step);
  }
  if (singles.size() % 2 == 0)
    throw not_a_conjugate_error("word has even length: " + w.to_string());
  std::size_t mid = singles.size() / 2;
  if (singles[mid].second != 1)
    throw not_a_conjugate_error("middle letter is inverted: " + w.to_string());
  for (std::size_t i = 0; i < mid; ++i) {
    const auto& a = singles[i];
    const auto& b = singles[singles.size() - 1 - i];
    if (a.first != b.first || a.second != -b.second)
      throw not_a_conjugate_error("word is not a conjugate of a generator: " +
                                  w.to_string());
  }
  Word conj;
  std::vector<Letter> tail;
  for (std::size_t i = mid + 1; i < singles.size(); ++i)
    tail.push_back({singles[i].first, singles[i].second});
  return {singles[mid].first, Word::from_letters(tail)};
}

std::string Word::to_string(char prefix) const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << prefix << l.generator;
    if (l.exponent != 1) os << '^' << l.exponent;
  }
  return os.str();
}

namespace {

struct WordCursor {
  const std::string& s;
  std::size_t i = 0;
  char prefix;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw syntax_error(msg, 1, static_cast<int>(i) + 1);
  }
  long read_int() {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) fail("expected integer");
    return std::stol(s.substr(start, i - start));
  }
  long read_optional_exponent() {
    skip_ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      return read_int();
    }
    return 1;
  }
};

Word parse_sequence(WordCursor& c, bool in_parens) {
  Word out;
  while (true) {
    c.skip_ws();
    if (c.i >= c.s.size()) {
      if (in_parens) c.fail("missing ')'");
      return out;
    }
    char ch = c.s[c.i];
    if (ch == ')') {
      if (!in_parens) c.fail("unmatched ')'");
      return out;
    }
    if (ch == '(') {
      ++c.i;
      Word group = parse_sequence(c, true);
      ++c.i;  // consume ')'
      out = out * group.pow(c.read_optional_exponent());
    } else if (ch == c.prefix) {
      ++c.i;
      if (c.i >= c.s.size() ||
          !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        c.fail("expected generator index");
      long index = c.read_int();
      out = out * Word::generator(static_cast<int>(index),
                                  c.read_optional_exponent());
    } else if (ch == '1' && out.empty()) {
      // "1" denotes the empty word
      ++c.i;
    } else {
      c.fail(std::string("unexpected character '") + ch + "'");
    }
  }
}

}  // namespace

Word Word::parse(const std::string& text, char prefix) {
  WordCursor c{text, 0, prefix};
  return parse_sequence(c, false);
}

}  // namespace calex
