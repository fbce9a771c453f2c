#include "calex/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace calex {

namespace {

void check_index(int index, int m, const char* what) {
  if (index < 1 || index > m)
    throw index_out_of_range_error(std::string(what) + " x" +
                                   std::to_string(index) +
                                   " outside 1.." + std::to_string(m));
}

void check_word_range(const Word& w, int m, const char* what) {
  if (w.max_generator() > m)
    throw index_out_of_range_error(std::string(what) + " uses x" +
                                   std::to_string(w.max_generator()) +
                                   " outside 1.." + std::to_string(m));
}

}  // namespace

void CPresentation::add_relation(int left, int right, Word conjugator) {
  check_index(left, generator_count, "relation generator");
  check_index(right, generator_count, "relation generator");
  check_word_range(conjugator, generator_count, "conjugator");
  // A leading run of x_right cancels against the conjugated generator.
  if (!conjugator.empty() &&
      conjugator.letters().front().generator == right) {
    auto letters = conjugator.letters();
    letters.erase(letters.begin());
    conjugator = Word::from_letters(letters);
  }
  relations.push_back({left, right, std::move(conjugator)});
}

bool CPresentation::has_relation(int left, int right,
                                 const Word& conjugator) const {
  for (const auto& r : relations)
    if (r.left == left && r.right == right && r.conjugator == conjugator)
      return true;
  return false;
}

int components(const CPresentation& p) {
  std::vector<int> parent(static_cast<std::size_t>(p.generator_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a)
      a = parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  };
  for (const auto& r : p.relations)
    parent[static_cast<std::size_t>(find(r.left - 1))] = find(r.right - 1);
  int classes = 0;
  for (int i = 0; i < p.generator_count; ++i)
    if (find(i) == i) ++classes;
  return classes;
}

std::vector<Word> relators(const CPresentation& p) {
  std::vector<Word> out;
  out.reserve(p.relations.size());
  for (const auto& r : p.relations) {
    Word w = Word::generator(r.left, -1) * r.conjugator.inverse() *
             Word::generator(r.right) * r.conjugator;
    out.push_back(std::move(w));
  }
  return out;
}

CPresentation ensure_hurwitz(CPresentation p) {
  Word y;
  for (int i = 1; i <= p.generator_count; ++i) y = y * Word::generator(i);
  for (int i = 1; i <= p.generator_count; ++i) {
    // Normalize the same way add_relation would, to detect presence.
    Word conj = y;
    if (!conj.empty() && conj.letters().front().generator == i) {
      auto letters = conj.letters();
      letters.erase(letters.begin());
      conj = Word::from_letters(letters);
    }
    if (!p.has_relation(i, i, conj)) p.add_relation(i, i, y);
  }
  p.hurwitz_degree = p.generator_count;
  return p;
}

namespace {

struct Line {
  int number;
  std::string key;
  std::string value;
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

CPresentation parse_presentation(const std::string& text) {
  CPresentation p;
  bool have_generators = false;
  std::vector<std::pair<int, Word>> pending_central;  // (line, word)
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    std::size_t colon = line.find(':');
    std::string key = colon == std::string::npos ? "" : trim(line.substr(0, colon));
    if (key != "label") {
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    colon = line.find(':');
    if (colon == std::string::npos)
      throw syntax_error("expected '<keyword>: ...'", line_no, 1);
    key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    try {
      if (key == "generators") {
        if (have_generators)
          throw syntax_error("duplicate generators line", line_no, 1);
        p.generator_count = std::stoi(value);
        if (p.generator_count < 1)
          throw syntax_error("generator count must be positive", line_no, 1);
        have_generators = true;
      } else if (key == "rel") {
        if (!have_generators)
          throw syntax_error("rel before generators line", line_no, 1);
        std::size_t eq = value.find('=');
        if (eq == std::string::npos)
          throw syntax_error("rel needs '='", line_no, 1);
        Word lhs = Word::parse(trim(value.substr(0, eq)));
        if (lhs.letters().size() != 1 || lhs.letters()[0].exponent != 1)
          throw syntax_error("rel left side must be a single generator",
                             line_no, 1);
        Word rhs = Word::parse(trim(value.substr(eq + 1)));
        check_word_range(rhs, p.generator_count, "relation word");
        auto [j, conj] = extract_conjugate(rhs);
        p.add_relation(lhs.letters()[0].generator, j, conj);
      } else if (key == "central") {
        if (!have_generators)
          throw syntax_error("central before generators line", line_no, 1);
        Word w = Word::parse(value);
        check_word_range(w, p.generator_count, "central word");
        pending_central.emplace_back(line_no, w);
      } else if (key == "hurwitz_degree") {
        int d = std::stoi(value);
        if (d < 1)
          throw syntax_error("hurwitz_degree must be positive", line_no, 1);
        p.hurwitz_degree = d;
      } else if (key == "label") {
        p.label = value;
      } else {
        throw syntax_error("unknown keyword '" + key + "'", line_no, 1);
      }
    } catch (const syntax_error&) {
      throw;
    } catch (const not_a_conjugate_error& e) {
      throw not_a_conjugate_error("line " + std::to_string(line_no) + ": " +
                                  e.what());
    } catch (const index_out_of_range_error& e) {
      throw index_out_of_range_error("line " + std::to_string(line_no) + ": " +
                                     e.what());
    } catch (const calex_error& e) {
      throw syntax_error(e.what(), line_no, 1);
    } catch (const std::invalid_argument&) {
      throw syntax_error("expected integer after '" + key + ":'", line_no, 1);
    }
  }
  if (!have_generators) throw syntax_error("missing generators line", 1, 1);
  for (const auto& [ln, w] : pending_central) {
    (void)ln;
    for (int i = 1; i <= p.generator_count; ++i) p.add_relation(i, i, w);
  }
  return p;
}

std::string render_presentation(const CPresentation& p) {
  std::ostringstream os;
  os << "generators: " << p.generator_count << "\n";
  if (!p.label.empty()) os << "label: " << p.label << "\n";
  if (p.hurwitz_degree) os << "hurwitz_degree: " << *p.hurwitz_degree << "\n";
  for (const auto& r : p.relations) {
    Word rhs = Word::generator(r.right).conjugated_by(r.conjugator);
    os << "rel: x" << r.left << " = " << rhs.to_string() << "\n";
  }
  return os.str();
}

}  // namespace calex
