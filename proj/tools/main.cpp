#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "calex/alexander.hpp"
#include "calex/braid.hpp"
#include "calex/constructions.hpp"
#include "calex/covering.hpp"
#include "calex/json_io.hpp"
#include "calex/reproduce.hpp"

namespace {

using calex::AlexanderResult;
using calex::CPresentation;

CPresentation load_presentation(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0)
    return calex::make_builtin(source.substr(8));
  std::string text;
  if (source == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(source);
    if (!in) throw calex::calex_error("cannot open file '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return calex::parse_presentation(text);
}

void print_result_text(const AlexanderResult& r, std::ostream& os) {
  if (!r.label.empty()) os << "label:          " << r.label << "\n";
  os << "generators:     " << r.generator_count << "\n";
  os << "components:     " << r.components << "\n";
  if (r.hurwitz_degree)
    os << "hurwitz degree: " << *r.hurwitz_degree << "\n";
  os << "Delta (canonical): " << r.canonical.to_string() << "\n";
  os << "Delta (char-poly sign): " << r.paper_signed().to_string() << "\n";
  os << "factorization:  " << r.factorization.to_string() << "\n";
  os << "checks:\n";
  for (const auto& c : r.checks.checks) {
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
}

int thread_count(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("CALEX_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const calex::syntax_error*>(&e)) return "syntax";
  if (dynamic_cast<const calex::not_a_conjugate_error*>(&e))
    return "not-a-conjugate";
  if (dynamic_cast<const calex::index_out_of_range_error*>(&e))
    return "index-out-of-range";
  if (dynamic_cast<const calex::non_divisible_error*>(&e))
    return "non-divisible";
  if (dynamic_cast<const calex::zero_polynomial_error*>(&e))
    return "zero-polynomial";
  if (dynamic_cast<const calex::not_coprime_error*>(&e)) return "not-coprime";
  if (dynamic_cast<const calex::missing_hurwitz_degree_error*>(&e))
    return "missing-hurwitz-degree";
  if (dynamic_cast<const calex::residual_present_error*>(&e))
    return "residual-present";
  if (dynamic_cast<const calex::malformed_witness_error*>(&e))
    return "malformed-witness";
  return "error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander polynomials of C-groups and Hurwitz C-groups"};
  app.require_subcommand(1);
  app.fallthrough();  // --json/--threads may follow the subcommand

  bool json_mode = false;
  int threads_flag = 0;
  app.add_flag("--json", json_mode, "machine-readable JSON output");
  app.add_option("--threads", threads_flag,
                 "worker threads for minor enumeration (default 1, or "
                 "CALEX_THREADS)");

  std::string source, source_b;
  int betti_n = 1;
  int braid_n = 2, braid_m = 1;
  std::uint64_t seed = calex::kDefaultSeed;

  auto* cmd_alexander = app.add_subcommand(
      "alexander", "compute the Alexander polynomial of a presentation");
  cmd_alexander->add_option("input", source, "file, '-' for stdin, or builtin:<spec>")
      ->required();

  auto* cmd_betti = app.add_subcommand(
      "betti", "first Betti number of the n-sheeted cyclic covering");
  cmd_betti->add_option("--delta", source, "presentation supplying Delta")
      ->required();
  cmd_betti->add_option("--n", betti_n, "covering degree")->required();

  auto* cmd_product = app.add_subcommand(
      "product", "Hurwitz product of two presentations, then the pipeline");
  cmd_product->add_option("a", source, "first factor")->required();
  cmd_product->add_option("b", source_b, "second factor")->required();

  auto* cmd_braid = app.add_subcommand(
      "braid-group", "emit the torus-link group presentation G_{n,m}");
  cmd_braid->add_option("--n", braid_n, "strands")->required();
  cmd_braid->add_option("--m", braid_m, "twist count")->required();

  auto* cmd_verify = app.add_subcommand(
      "verify", "run the pipeline and exit 2 unless every check passes");
  cmd_verify->add_option("input", source, "file, '-' or builtin:<spec>")
      ->required();

  auto* cmd_reproduce = app.add_subcommand(
      "reproduce", "run the full verification table");
  cmd_reproduce->add_option("--seed", seed, "seed for the property suites");

  CLI11_PARSE(app, argc, argv);
  const int threads = thread_count(threads_flag);

  try {
    if (cmd_alexander->parsed()) {
      auto result =
          calex::alexander_polynomial(load_presentation(source), threads);
      if (json_mode)
        std::cout << calex::result_to_json(result).dump(2) << "\n";
      else
        print_result_text(result, std::cout);
      return 0;
    }
    if (cmd_betti->parsed()) {
      auto result =
          calex::alexander_polynomial(load_presentation(source), threads);
      auto report = calex::betti_b1(result.factorization, betti_n);
      if (json_mode) {
        std::cout << calex::betti_to_json(report).dump(2) << "\n";
      } else {
        std::cout << "Delta:         " << result.canonical.to_string() << "\n"
                  << "factorization: " << result.factorization.to_string()
                  << "\n"
                  << "n:             " << report.n << "\n"
                  << "b1:            " << report.b1 << "\n"
                  << "r_n:           " << report.r_n << "\n"
                  << "affine H1 dim: " << report.affine_h1_dim << "\n"
                  << "components:    " << report.components << "\n";
      }
      return 0;
    }
    if (cmd_product->parsed()) {
      auto p = calex::hurwitz_product(load_presentation(source),
                                      load_presentation(source_b));
      auto result = calex::alexander_polynomial(p, threads);
      if (json_mode)
        std::cout << calex::result_to_json(result).dump(2) << "\n";
      else
        print_result_text(result, std::cout);
      return 0;
    }
    if (cmd_braid->parsed()) {
      std::cout << calex::render_presentation(
          calex::g_nm_presentation(braid_n, braid_m));
      return 0;
    }
    if (cmd_verify->parsed()) {
      auto result =
          calex::alexander_polynomial(load_presentation(source), threads);
      if (json_mode)
        std::cout << calex::result_to_json(result).dump(2) << "\n";
      else
        print_result_text(result, std::cout);
      return result.checks.all_pass() ? 0 : 2;
    }
    if (cmd_reproduce->parsed()) {
      bool ok = calex::run_acceptance(std::cout, seed, threads);
      return ok ? 0 : 2;
    }
  } catch (const std::exception& e) {
    if (json_mode) {
      nlohmann::json err{
          {"error", {{"kind", error_kind(e)}, {"message", e.what()}}}};
      std::cout << err.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
  }
  return 0;
}
