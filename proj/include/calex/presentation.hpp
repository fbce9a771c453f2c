#pragma once

#include <optional>
#include <string>
#include <vector>

#include "calex/word.hpp"

namespace calex {

// x_left = conjugator^-1 * x_right * conjugator. The conjugator is
// normalized so that it never starts with a run of x_right; this keeps
// the stored form the one the parser would recover from the rendered
// relation.
struct CRelation {
  int left;
  int right;
  Word conjugator;
  bool operator==(const CRelation&) const = default;
};

// Quasipositive central word w = y_1 ... y_m with y_p = conj^-1 x_target
// conj, used to expand a presentation to an explicit Hurwitz form of
// degree m. injection[i-1] is the position (1-based) where generator i
// appears verbatim (trivial conjugator).
struct CentralWitnessLetter {
  int target;
  Word conjugator;
  bool operator==(const CentralWitnessLetter&) const = default;
};

struct CentralWordWitness {
  std::vector<CentralWitnessLetter> letters;
  std::vector<int> injection;
  int degree() const { return static_cast<int>(letters.size()); }
  bool operator==(const CentralWordWitness&) const = default;
};

// Presentation with conjugation-only relations (a C-presentation).
//
// hurwitz_degree is an assertion by the constructing code that the group
// is a Hurwitz C-group of that degree. It usually equals generator_count
// (explicit central relations, see ensure_hurwitz); constructions may
// assert a larger degree and record the central_witness that an
// expansion to that degree would consume.
class CPresentation {
 public:
  int generator_count = 0;
  std::vector<CRelation> relations;
  std::optional<int> hurwitz_degree;
  std::optional<CentralWordWitness> central_witness;
  std::string label;

  // Validates indices and merges the leading x_right run of the
  // conjugator into the conjugation itself.
  void add_relation(int left, int right, Word conjugator);
  bool has_relation(int left, int right, const Word& conjugator) const;
};

// Line-oriented DSL:
//   generators: <m>
//   rel: x<i> = <word>            word must reduce to u x_j u^-1
//   central: <word>               one conjugation relation per generator
//   hurwitz_degree: <d>
//   label: <text>
//   # comment
CPresentation parse_presentation(const std::string& text);
std::string render_presentation(const CPresentation& p);

// Number of generator classes after merging left~right over all
// relations; equals the rank of the abelianization.
int components(const CPresentation& p);

// x_left^-1 * w^-1 * x_right * w for every relation, freely reduced.
// Relations that reduce to the empty word are emitted as empty words.
std::vector<Word> relators(const CPresentation& p);

// Adds the missing relations x_i = y^-1 x_i y with y = x_1 ... x_m and
// sets hurwitz_degree = m. The caller asserts that y is central in the
// presented group; when it is not, the presented group changes.
CPresentation ensure_hurwitz(CPresentation p);

}  // namespace calex
