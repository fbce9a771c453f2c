#include "calex/json_io.hpp"

namespace calex {

using nlohmann::json;

namespace {

json coeff_to_json(const mpz_class& c) {
  if (c.fits_slong_p()) return json(c.get_si());
  return json(c.get_str());
}

mpz_class coeff_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw syntax_error("coefficient must be an integer or decimal string", 1, 1);
}

}  // namespace

json poly_to_json(const LaurentPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(coeff_to_json(c));
  return json{{"lowest", p.is_zero() ? 0 : p.lowest_exponent()},
              {"coeffs", coeffs}};
}

LaurentPoly poly_from_json(const json& j) {
  std::vector<mpz_class> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(coeff_from_json(c));
  return LaurentPoly(j.at("lowest").get<long>(), std::move(coeffs));
}

json factorization_to_json(const CyclotomicFactorization& f) {
  json factors = json::array();
  for (const auto& fac : f.factors)
    factors.push_back({{"d", fac.index}, {"mult", fac.multiplicity}});
  json out{{"sign", f.sign}, {"t_shift", f.t_shift}, {"factors", factors}};
  if (f.residual) out["residual"] = poly_to_json(*f.residual);
  return out;
}

json result_to_json(const AlexanderResult& r) {
  json canonical = json::array();
  for (const auto& c : r.canonical.coefficients())
    canonical.push_back(coeff_to_json(c));
  json factors = json::array();
  for (const auto& fac : r.factorization.factors)
    factors.push_back({{"d", fac.index}, {"mult", fac.multiplicity}});
  json checks = json::object();
  for (const auto& c : r.checks.checks)
    checks[c.name] = json{{"pass", c.pass}, {"detail", c.detail}};
  json out{{"label", r.label},
           {"canonical", canonical},
           {"unit",
            {{"sign", r.factorization.sign},
             {"t_power", r.factorization.t_shift}}},
           {"factors", factors},
           {"generators", r.generator_count},
           {"components", r.components},
           {"hurwitz_degree",
            r.hurwitz_degree ? json(*r.hurwitz_degree) : json(nullptr)},
           {"checks", checks}};
  if (r.factorization.residual)
    out["residual"] = poly_to_json(*r.factorization.residual);
  return out;
}

json betti_to_json(const BettiReport& r) {
  return json{{"n", r.n},
              {"b1", r.b1},
              {"r_n", r.r_n},
              {"affine_h1_dim", r.affine_h1_dim},
              {"components", r.components}};
}

}  // namespace calex
