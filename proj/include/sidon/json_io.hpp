#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "sidon/absolute_value.hpp"
#include "sidon/experiments.hpp"
#include "sidon/perturb.hpp"
#include "sidon/setops.hpp"
#include "sidon/verify.hpp"
#include "sidon/weights.hpp"

// JSON forms of the library types. Rationals always travel as strings ("p" or "p/q").
// Parse failures throw sidon::ParseError.
namespace sidon::json {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Magnitude& m);
Json to_json(const std::vector<Rational>& values);
Json to_json(const FiniteSet& set);
Json to_json(const AbsoluteValue& av);
/// {"k":3,"h":2,"coeffs":{"1":1,"2":-2,"3":1}}, support only.
Json to_json(const WeightVector& w);
Json to_json(const CollisionWitness& witness);
/// {"is_sidon":..,"h":..,"witness":..,"weight":{"coeffs":..},"collision_sum":..}; absent parts are null.
Json to_json(const Verdict& verdict);
/// {"beta":[..],"trace":[..]}; the trace lists the steps i >= 2 that moved a point.
Json to_json(const PerturbationResult& result);
Json to_json(const PerturbationStep& step);
Json to_json(const DensityReport& report);

std::string density_csv_header();
std::string to_csv_row(const DensityReport& report);

Rational rational_from_json(const Json& value);
std::vector<Rational> rationals_from_json(const Json& value);
AbsoluteValue absolute_value_from_json(const Json& value);
WeightVector weight_from_json(const Json& value);
CollisionWitness witness_from_json(const Json& value, std::size_t h);
/// Inverse of to_json(Verdict), certificates included.
Verdict verdict_from_json(const Json& value);

struct PerturbRequest {
    std::vector<Rational> alpha;
    PerturbationPlan plan;
};

/// {"alpha":[..],"epsilons":[..],"h":2,"abs":{"kind":"archimedean"}}; a single epsilon
/// is broadcast over alpha. Non-positive epsilons throw InvalidPlanError.
PerturbRequest perturb_request_from_json(const Json& value);

/// Parses text and wraps nlohmann parse failures as ParseError.
Json parse_document(const std::string& text);

}  // namespace sidon::json
