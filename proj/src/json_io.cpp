#include "sidon/json_io.hpp"

#include <sstream>

#include "sidon/errors.hpp"

namespace sidon::json {

namespace {

Json counts_to_json(const CollisionWitness::Counts& counts) {
    Json out = Json::object();
    for (const auto& [index, mult] : counts) out[std::to_string(index)] = mult;
    return out;
}

Json coeffs_to_json(const WeightVector& w) {
    Json out = Json::object();
    for (std::size_t i : w.support()) out[std::to_string(i)] = w[i];
    return out;
}

std::size_t parse_index(const std::string& key) {
    std::size_t value = 0;
    std::size_t used = 0;
    try {
        value = std::stoul(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != key.size() || key.empty() || key.front() == '-' || value == 0) {
        throw ParseError("invalid index key '" + key + "'");
    }
    return value;
}

CollisionWitness::Counts counts_from_json(const Json& value) {
    if (!value.is_object()) throw ParseError("witness side must be an object of index -> count");
    CollisionWitness::Counts counts;
    for (const auto& [key, mult] : value.items()) {
        if (!mult.is_number_unsigned()) throw ParseError("witness count for index " + key + " must be a nonnegative integer");
        counts[parse_index(key)] = mult.get<std::size_t>();
    }
    return counts;
}

const Json& require(const Json& object, const char* key) {
    if (!object.is_object() || !object.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    return object.at(key);
}

std::size_t positive_size(const Json& value, const char* what) {
    if (!value.is_number_unsigned() || value.get<std::size_t>() == 0) {
        throw ParseError(std::string(what) + " must be a positive integer");
    }
    return value.get<std::size_t>();
}

}  // namespace

Json to_json(const Rational& q) { return q.to_string(); }
Json to_json(const Magnitude& m) { return m.value().to_string(); }

Json to_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const Rational& q : values) out.push_back(q.to_string());
    return out;
}

Json to_json(const FiniteSet& set) {
    Json out = Json::array();
    for (const Rational& q : set) out.push_back(q.to_string());
    return out;
}

Json to_json(const AbsoluteValue& av) {
    Json out = Json::object();
    if (av.kind() == AbsoluteValue::Kind::archimedean) {
        out["kind"] = "archimedean";
    } else {
        out["kind"] = "p-adic";
        out["p"] = av.prime();
    }
    return out;
}

Json to_json(const WeightVector& w) {
    Json out = Json::object();
    out["k"] = w.k();
    out["h"] = w.h();
    out["coeffs"] = coeffs_to_json(w);
    return out;
}

Json to_json(const CollisionWitness& witness) {
    Json out = Json::object();
    out["u"] = counts_to_json(witness.u());
    out["v"] = counts_to_json(witness.v());
    return out;
}

Json to_json(const Verdict& verdict) {
    Json out = Json::object();
    out["is_sidon"] = verdict.is_sidon;
    out["h"] = verdict.h;
    out["witness"] = verdict.witness ? to_json(*verdict.witness) : Json(nullptr);
    if (verdict.weight) {
        Json weight = Json::object();
        weight["coeffs"] = coeffs_to_json(*verdict.weight);
        out["weight"] = std::move(weight);
    } else {
        out["weight"] = nullptr;
    }
    out["collision_sum"] = verdict.collision_sum ? to_json(*verdict.collision_sum) : Json(nullptr);
    return out;
}

Json to_json(const PerturbationStep& step) {
    Json out = Json::object();
    out["i"] = step.index;
    out["a"] = step.a.to_string();
    out["b"] = step.b.to_string();
    out["delta1"] = step.delta1 ? to_json(*step.delta1) : Json(nullptr);
    out["x"] = step.shift.to_string();
    out["C_size"] = step.forbidden_size;
    out["displacement"] = to_json(step.displacement);
    return out;
}

Json to_json(const PerturbationResult& result) {
    Json out = Json::object();
    out["beta"] = to_json(result.beta);
    Json trace = Json::array();
    for (const PerturbationStep& step : result.trace) {
        if (step.index >= 2) trace.push_back(to_json(step));
    }
    out["trace"] = std::move(trace);
    return out;
}

Json to_json(const DensityReport& report) {
    Json out = Json::object();
    out["k"] = report.k;
    out["h"] = report.h;
    out["trials"] = report.trials;
    out["sidon_count"] = report.sidon_count;
    out["fraction"] = report.fraction.to_string();
    out["seed"] = report.seed;
    out["sampler"] = report.sampler;
    out["exhaustive"] = report.exhaustive;
    return out;
}

std::string density_csv_header() { return "k,h,trials,sidon_count,fraction,seed,sampler,exhaustive"; }

std::string to_csv_row(const DensityReport& report) {
    std::ostringstream row;
    row << report.k << ',' << report.h << ',' << report.trials << ',' << report.sidon_count << ','
        << report.fraction << ',' << report.seed << ',' << report.sampler << ',' << (report.exhaustive ? "true" : "false");
    return row.str();
}

Rational rational_from_json(const Json& value) {
    if (!value.is_string()) throw ParseError("rationals must be JSON strings, got " + value.dump());
    return Rational::parse(value.get<std::string>());
}

std::vector<Rational> rationals_from_json(const Json& value) {
    if (!value.is_array()) throw ParseError("expected a JSON array of rational strings");
    std::vector<Rational> out;
    out.reserve(value.size());
    for (const Json& item : value) out.push_back(rational_from_json(item));
    return out;
}

AbsoluteValue absolute_value_from_json(const Json& value) {
    const Json& kind = require(value, "kind");
    if (kind == "archimedean") return AbsoluteValue::archimedean();
    if (kind == "p-adic") {
        const Json& p = require(value, "p");
        if (!p.is_number_unsigned()) throw ParseError("p must be a positive integer");
        return AbsoluteValue::p_adic(p.get<std::uint64_t>());
    }
    throw ParseError("unknown absolute value kind " + kind.dump());
}

WeightVector weight_from_json(const Json& value) {
    const std::size_t k = positive_size(require(value, "k"), "k");
    const std::size_t h = positive_size(require(value, "h"), "h");
    const Json& coeffs = require(value, "coeffs");
    if (!coeffs.is_object()) throw ParseError("coeffs must be an object of index -> coefficient");
    std::vector<std::int64_t> dense(k, 0);
    for (const auto& [key, c] : coeffs.items()) {
        const std::size_t index = parse_index(key);
        if (index > k) throw ParseError("coefficient index " + key + " exceeds k");
        if (!c.is_number_integer()) throw ParseError("coefficient for index " + key + " must be an integer");
        dense[index - 1] = c.get<std::int64_t>();
    }
    return WeightVector(h, std::move(dense));
}

CollisionWitness witness_from_json(const Json& value, std::size_t h) {
    return CollisionWitness(counts_from_json(require(value, "u")), counts_from_json(require(value, "v")), h);
}

Verdict verdict_from_json(const Json& value) {
    Verdict verdict;
    const Json& is_sidon = require(value, "is_sidon");
    if (!is_sidon.is_boolean()) throw ParseError("is_sidon must be a boolean");
    verdict.is_sidon = is_sidon.get<bool>();
    verdict.h = positive_size(require(value, "h"), "h");
    if (value.contains("witness") && !value.at("witness").is_null()) {
        verdict.witness = witness_from_json(value.at("witness"), verdict.h);
    }
    if (value.contains("weight") && !value.at("weight").is_null()) {
        const Json& coeffs = require(value.at("weight"), "coeffs");
        std::size_t k = 0;
        for (const auto& [key, c] : coeffs.items()) k = std::max(k, parse_index(key));
        Json full = Json::object();
        full["k"] = k;
        full["h"] = verdict.h;
        full["coeffs"] = coeffs;
        verdict.weight = weight_from_json(full);
    }
    if (value.contains("collision_sum") && !value.at("collision_sum").is_null()) {
        verdict.collision_sum = rational_from_json(value.at("collision_sum"));
    }
    return verdict;
}

PerturbRequest perturb_request_from_json(const Json& value) {
    PerturbRequest request;
    request.alpha = rationals_from_json(require(value, "alpha"));
    request.plan.h = positive_size(require(value, "h"), "h");
    if (value.contains("abs")) request.plan.av = absolute_value_from_json(value.at("abs"));
    std::vector<Rational> eps = rationals_from_json(require(value, "epsilons"));
    if (eps.size() == 1 && request.alpha.size() > 1) eps.resize(request.alpha.size(), eps.front());
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (eps[i].sign() <= 0) {
            throw InvalidPlanError("epsilon_" + std::to_string(i + 1) + " = " + eps[i].to_string() + " is not positive");
        }
        request.plan.epsilons.emplace_back(eps[i]);
    }
    if (value.contains("allow_duplicates")) {
        if (!value.at("allow_duplicates").is_boolean()) throw ParseError("allow_duplicates must be a boolean");
        request.plan.allow_duplicates = value.at("allow_duplicates").get<bool>();
    }
    return request;
}

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace sidon::json
