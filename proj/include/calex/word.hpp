#pragma once

#include <string>
#include <utility>
#include <vector>

#include "calex/laurent.hpp"

namespace calex {

// One maximal run x_g^e inside a reduced word; e != 0.
struct Letter {
  int generator;  // 1-based
  long exponent;
  bool operator==(const Letter&) const = default;
};

// Freely reduced word in a free group on indexed generators x1, x2, ...
// Adjacent runs always have distinct generators, so the representation
// of a group element is unique.
class Word {
 public:
  Word() = default;

  static Word generator(int index, long exponent = 1);
  static Word from_letters(const std::vector<Letter>& letters);

  bool empty() const { return letters_.size() == 0; }
  const std::vector<Letter>& letters() const { return letters_; }
  long length() const;  // total number of single letters (sum of |exponent|)
  long exponent_sum() const;
  int max_generator() const;  // 0 for the empty word

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word conjugated_by(const Word& c) const;  // c^-1 * this * c
  Word pow(long e) const;

  bool operator==(const Word&) const = default;

  // "x1 x2^-2 (x1 x2)^3"; parse accepts the same grammar with any
  // single-letter atom prefix (braid words use 's').
  std::string to_string(char prefix = 'x') const;
  static Word parse(const std::string& text, char prefix = 'x');

 private:
  std::vector<Letter> letters_;
  void append_run(int generator, long exponent);
};

// Abelianized Fox derivative: the image of d(w)/d(x_gen) in Z[t,t^-1]
// under the exponent-sum map x_i -> t.
LaurentPoly fox_derivative(const Word& w, int generator);

// Splits a reduced word of shape u * x_j * u^-1 (middle letter exponent
// +1) into (j, u^-1), so that w == conj^-1 * x_j * conj for the returned
// conjugator. Throws not_a_conjugate_error when the shape fails.
std::pair<int, Word> extract_conjugate(const Word& w);

}  // namespace calex
