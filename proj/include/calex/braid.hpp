#pragma once

#include <string>
#include <vector>

#include "calex/presentation.hpp"
#include "calex/word.hpp"

namespace calex {

struct BraidLetter {
  int index;  // 1..strands-1
  int sign;   // +1 or -1
  bool operator==(const BraidLetter&) const = default;
};

// Word in the braid group Br_n on the standard generators s_1..s_(n-1).
// No normal form is attempted; braids are compared through their action
// on the free group.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }

  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord inverse() const;
  BraidWord pow(long e) const;

  std::string to_string() const;  // "s1 s2^-1"
  static BraidWord parse(const std::string& text, int strands);

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

// Action on the free group F_n: s_j sends x_j to x_j x_(j+1) x_j^-1 and
// x_(j+1) to x_j; the inverse letter applies the inverse substitution.
// Letters act left to right. The input word may only use x_1..x_n.
Word artin_apply(const BraidWord& b, const Word& w);

BraidWord half_twist(int n);  // Garside element
BraidWord full_twist(int n);  // (s_1...s_(n-1))^n, acts by conjugation
BraidWord b_nm(int n, int m);  // monodromy of w^n = z^m

// <x_1..x_n | x_i = b_nm(x_i)>, each relation stored via
// extract_conjugate. Hurwitz of degree n*m with central word
// (x_1...x_n)^m, recorded as a witness for later expansion.
CPresentation g_nm_presentation(int n, int m);

// (t-1)(t^nm - 1) / ((t^n - 1)(t^m - 1)) for coprime n, m.
LaurentPoly le_formula(int n, int m);

}  // namespace calex
