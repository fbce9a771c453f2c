#pragma once

#include <stdexcept>
#include <string>

namespace calex {

struct calex_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact-divide remainder was nonzero
struct non_divisible_error : calex_error {
  using calex_error::calex_error;
};

// operation needs a nonzero polynomial
struct zero_polynomial_error : calex_error {
  using calex_error::calex_error;
};

struct syntax_error : calex_error {
  syntax_error(std::string msg, int line, int column)
      : calex_error("line " + std::to_string(line) + ", col " +
                    std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

// word does not reduce to a conjugate of a single generator
struct not_a_conjugate_error : calex_error {
  using calex_error::calex_error;
};

struct index_out_of_range_error : calex_error {
  using calex_error::calex_error;
};

struct not_coprime_error : calex_error {
  using calex_error::calex_error;
};

struct missing_hurwitz_degree_error : calex_error {
  using calex_error::calex_error;
};

// cyclotomic factorization carries a non-unit residual
struct residual_present_error : calex_error {
  using calex_error::calex_error;
};

struct malformed_witness_error : calex_error {
  using calex_error::calex_error;
};

// broken internal invariant (e.g. a Fox matrix row with nonzero sum)
struct invariant_error : calex_error {
  using calex_error::calex_error;
};

}  // namespace calex
