#pragma once

#include <json.hpp>

#include "calex/alexander.hpp"
#include "calex/covering.hpp"
#include "calex/laurent.hpp"

namespace calex {

// {"lowest": k, "coeffs": [c0, ...]} with coeffs[i] the coefficient of
// t^(lowest+i). Coefficients that fit in 64 bits are emitted as JSON
// numbers, larger ones as decimal strings; the reader accepts both, so
// the round trip is bit exact.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json factorization_to_json(const CyclotomicFactorization& f);
nlohmann::json result_to_json(const AlexanderResult& r);
nlohmann::json betti_to_json(const BettiReport& r);

}  // namespace calex
