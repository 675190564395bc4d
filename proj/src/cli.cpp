#include "sidon/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sidon/errors.hpp"
#include "sidon/json_io.hpp"

namespace sidon::cli {

namespace {

using json::Json;

class InputError : public Error {
public:
    using Error::Error;
};

struct CommonOptions {
    std::string input_path;
    std::string inline_json;
    std::string output_path;
};

struct AbsOptions {
    std::string kind = "archimedean";
    std::optional<std::uint64_t> p;
};

struct VerifyOptions {
    std::size_t h = 0;
    std::string method = "bruteforce";
    AbsOptions abs;
};

struct PerturbOptions {
    std::optional<std::size_t> h;
    std::optional<std::string> eps;
    std::string eps_file;
    bool eps_harmonic = false;
    bool stream = false;
    std::optional<std::size_t> count;
    bool allow_duplicates = false;
    std::optional<std::string> abs_kind;
    std::optional<std::uint64_t> p;
};

struct WeightsOptions {
    std::size_t k = 0;
    std::size_t h = 0;
    bool canonical = false;
};

struct SumsetOptions {
    std::string op;
    std::string c;
    std::string b;
    std::string a_star;
    std::optional<std::size_t> h;
    std::optional<std::size_t> r;
    std::optional<std::size_t> s;
};

struct DensityOptions {
    std::size_t k = 0;
    std::size_t h = 0;
    std::uint64_t trials = 0;
    std::string sampler;
    std::uint64_t seed = 0;
    bool exact = false;
    std::uint64_t budget = 2'000'000;
    std::string format = "json";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::optional<Json> load_input(const CommonOptions& common) {
    if (!common.input_path.empty() && !common.inline_json.empty()) {
        throw InputError("give either --in or --json, not both");
    }
    if (!common.inline_json.empty()) return json::parse_document(common.inline_json);
    if (!common.input_path.empty()) return json::parse_document(read_file(common.input_path));
    return std::nullopt;
}

Json require_input(const CommonOptions& common) {
    auto input = load_input(common);
    if (!input) throw InputError("no input: pass --in <path> or --json '<document>'");
    return *input;
}

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const ParseError&) {
        throw ParseError("unparseable rational '" + text + "' for " + flag);
    }
}

AbsoluteValue make_absolute_value(const std::string& kind, std::optional<std::uint64_t> p) {
    if (kind == "archimedean") {
        if (p) throw InputError("--p only applies to --abs p-adic");
        return AbsoluteValue::archimedean();
    }
    if (kind == "p-adic") {
        if (!p) throw InputError("--abs p-adic needs --p <prime>");
        if (!is_prime(*p)) throw InputError("--p " + std::to_string(*p) + " is not prime");
        return AbsoluteValue::p_adic(*p);
    }
    throw InputError("unknown --abs '" + kind + "'");
}

void write_document(const CommonOptions& common, const std::string& text, std::ostream& out) {
    if (common.output_path.empty()) {
        out << text;
        out.flush();
        return;
    }
    // Write beside the target and rename so readers never see a partial report.
    const std::filesystem::path target(common.output_path);
    std::filesystem::path staging = target;
    staging += ".partial";
    {
        std::ofstream file(staging, std::ios::binary | std::ios::trunc);
        if (!file) throw InputError("cannot write output file '" + common.output_path + "'");
        file << text;
        if (!file.flush()) throw InputError("failed writing output file '" + common.output_path + "'");
    }
    std::filesystem::rename(staging, target);
}

std::string dump(const Json& document) { return document.dump(2) + "\n"; }

Json command_header(const char* name, Json request) {
    Json report = Json::object();
    report["command"] = name;
    report["request"] = std::move(request);
    return report;
}

int run_verify(const CommonOptions& common, const VerifyOptions& options, std::ostream& out) {
    const AbsoluteValue av = make_absolute_value(options.abs.kind, options.abs.p);
    const Json input = require_input(common);
    const auto config = PointConfiguration::validate(json::rationals_from_json(input));

    Json request = Json::object();
    request["points"] = json::to_json(std::vector<Rational>(config.points().begin(), config.points().end()));
    request["h"] = options.h;
    request["abs"] = json::to_json(av);
    request["method"] = options.method;
    Json report = command_header("verify", std::move(request));

    const Verdict primary = options.method == "hyperplane" ? verify_hyperplane(config, options.h)
                                                           : verify_bruteforce(config, options.h);
    const Json verdict = json::to_json(primary);
    for (const auto& [key, value] : verdict.items()) report[key] = value;
    if (options.method == "both") {
        const Verdict cross = verify_hyperplane(config, options.h);
        report["cross_check"] = json::to_json(cross);
        report["agree"] = cross.is_sidon == primary.is_sidon;
    }
    write_document(common, dump(report), out);
    return kSuccess;
}

std::vector<Magnitude> epsilons_for(const PerturbOptions& options, std::size_t count) {
    std::vector<Rational> raw;
    if (options.eps) {
        raw.assign(count, parse_flag_rational("--eps", *options.eps));
    } else if (!options.eps_file.empty()) {
        raw = json::rationals_from_json(json::parse_document(read_file(options.eps_file)));
        if (raw.size() == 1) raw.resize(count, raw.front());
    } else if (options.eps_harmonic) {
        for (std::size_t i = 1; i <= count; ++i) raw.emplace_back(1, static_cast<long>(i));
    }
    std::vector<Magnitude> out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].sign() <= 0) {
            throw InvalidPlanError("epsilon_" + std::to_string(i + 1) + " = " + raw[i].to_string() + " is not positive");
        }
        out.emplace_back(raw[i]);
    }
    return out;
}

void check_eps_choice(const PerturbOptions& options, bool required) {
    const int given = (options.eps ? 1 : 0) + (options.eps_file.empty() ? 0 : 1) + (options.eps_harmonic ? 1 : 0);
    if (given > 1) throw InputError("give only one of --eps, --eps-file, --eps-harmonic");
    if (required && given == 0) throw InputError("perturb needs --eps, --eps-file or --eps-harmonic");
}

int run_perturb_stream(const CommonOptions& common, const PerturbOptions& options, std::ostream& out) {
    check_eps_choice(options, true);
    if (!options.h) throw InputError("perturb --stream needs --h");
    const AbsoluteValue av = make_absolute_value(options.abs_kind.value_or("archimedean"), options.p);
    const auto input = load_input(common);
    if (!input && !options.count) throw InputError("perturb --stream without input needs --count");

    std::vector<Rational> listed;
    if (input) listed = json::rationals_from_json(*input);
    const std::size_t limit = options.count.value_or(listed.size());

    // Without an input list the source is 0, 1, 2, ...
    std::size_t produced = 0;
    PerturbationStream::Source source = [&]() -> std::optional<Rational> {
        if (produced >= limit) return std::nullopt;
        if (input) {
            if (produced >= listed.size()) return std::nullopt;
            return listed[produced++];
        }
        return Rational(static_cast<long>(produced++));
    };
    std::vector<Magnitude> fixed;
    if (!options.eps_harmonic) fixed = epsilons_for(options, limit);
    PerturbationStream::Schedule schedule = [&](std::size_t i) -> Magnitude {
        if (options.eps_harmonic) return harmonic_epsilon(i);
        if (i > fixed.size()) throw InvalidPlanError("no epsilon for index " + std::to_string(i));
        return fixed[i - 1];
    };
    PerturbationStream stream(source, schedule, *options.h, av, options.allow_duplicates);

    std::ostringstream lines;
    Json request = Json::object();
    request["h"] = *options.h;
    request["abs"] = json::to_json(av);
    request["stream"] = true;
    request["count"] = limit;
    request["eps"] = options.eps_harmonic ? Json("1/i") : (options.eps ? Json(*options.eps) : Json(options.eps_file));
    request["source"] = input ? json::to_json(listed) : Json("naturals");
    lines << command_header("perturb", std::move(request)).dump() << "\n";
    const bool to_stdout = common.output_path.empty();
    if (to_stdout) {
        out << lines.str() << std::flush;
        lines.str("");
    }
    while (stream.next()) {
        const PerturbationStep& step = stream.state().trace().back();
        Json line = Json::object();
        line["i"] = step.index;
        line["a"] = step.a.to_string();
        line["b"] = step.b.to_string();
        line["displacement"] = json::to_json(step.displacement);
        if (to_stdout) {
            out << line.dump() << "\n" << std::flush;
        } else {
            lines << line.dump() << "\n";
        }
    }
    if (!to_stdout) write_document(common, lines.str(), out);
    return kSuccess;
}

int run_perturb(const CommonOptions& common, const PerturbOptions& options, std::ostream& out) {
    if (options.stream) return run_perturb_stream(common, options, out);
    const Json input = require_input(common);

    json::PerturbRequest request;
    if (input.is_object()) {
        check_eps_choice(options, false);
        request = json::perturb_request_from_json(input);
        if (options.h) request.plan.h = *options.h;
        if (options.abs_kind || options.p) {
            request.plan.av = make_absolute_value(options.abs_kind.value_or("archimedean"), options.p);
        }
        if (options.allow_duplicates) request.plan.allow_duplicates = true;
        if (options.eps || !options.eps_file.empty() || options.eps_harmonic) {
            request.plan.epsilons = epsilons_for(options, request.alpha.size());
        }
    } else {
        check_eps_choice(options, true);
        if (!options.h) throw InputError("perturb needs --h");
        request.alpha = json::rationals_from_json(input);
        request.plan.h = *options.h;
        request.plan.av = make_absolute_value(options.abs_kind.value_or("archimedean"), options.p);
        request.plan.allow_duplicates = options.allow_duplicates;
        request.plan.epsilons = epsilons_for(options, request.alpha.size());
    }
    if (request.alpha.empty()) throw EmptyInputError("perturb needs at least one point");
    if (!request.plan.allow_duplicates) PointConfiguration::validate(request.alpha);

    const PerturbationResult result = perturb_sequence(request.alpha, request.plan);

    Json echo = Json::object();
    echo["alpha"] = json::to_json(request.alpha);
    Json eps = Json::array();
    for (const Magnitude& e : request.plan.epsilons) eps.push_back(json::to_json(e));
    echo["epsilons"] = std::move(eps);
    echo["h"] = request.plan.h;
    echo["abs"] = json::to_json(request.plan.av);
    echo["allow_duplicates"] = request.plan.allow_duplicates;
    Json report = command_header("perturb", std::move(echo));
    const Json body = json::to_json(result);
    for (const auto& [key, value] : body.items()) report[key] = value;
    write_document(common, dump(report), out);
    return kSuccess;
}

int run_weights(const CommonOptions& common, const WeightsOptions& options, std::ostream& out) {
    Json request = Json::object();
    request["k"] = options.k;
    request["h"] = options.h;
    request["canonical"] = options.canonical;
    Json report = command_header("weights", std::move(request));
    Json list = Json::array();
    for_each_weight_vector(options.k, options.h, options.canonical, [&](const WeightVector& w) {
        list.push_back(json::to_json(w));
        return true;
    });
    report["count"] = list.size();
    report["weights"] = std::move(list);
    write_document(common, dump(report), out);
    return kSuccess;
}

int run_sumset(const CommonOptions& common, const SumsetOptions& options, std::ostream& out) {
    const Json input = require_input(common);
    const FiniteSet set(json::rationals_from_json(input));
    auto need_rational = [&](const std::string& flag, const std::string& value) {
        if (value.empty()) throw InputError("--op " + options.op + " needs " + flag);
        return parse_flag_rational(flag, value);
    };
    auto need_size = [&](const std::string& flag, const std::optional<std::size_t>& value) {
        if (!value) throw InputError("--op " + options.op + " needs " + flag);
        return *value;
    };

    Json request = Json::object();
    request["op"] = options.op;
    request["set"] = json::to_json(set);
    FiniteSet result;
    if (options.op == "translate") {
        const Rational c = need_rational("--c", options.c);
        request["c"] = c.to_string();
        result = translate(set, c);
    } else if (options.op == "dilate") {
        const Rational c = need_rational("--c", options.c);
        request["c"] = c.to_string();
        result = dilate(c, set);
    } else if (options.op == "hsum") {
        const std::size_t h = need_size("--h", options.h);
        request["h"] = h;
        result = h_fold_sumset(set, h);
    } else if (options.op == "rs-diff") {
        const std::size_t r = need_size("--r", options.r);
        const std::size_t s = need_size("--s", options.s);
        request["r"] = r;
        request["s"] = s;
        result = r_s_sum_difference(set, r, s);
    } else if (options.op == "shifted") {
        const Rational b = need_rational("--b", options.b);
        const std::size_t r = need_size("--r", options.r);
        const std::size_t h = need_size("--h", options.h);
        request["b"] = b.to_string();
        request["r"] = r;
        request["h"] = h;
        result = shifted_sumset(set, b, r, h);
    } else if (options.op == "forbidden") {
        const Rational a_star = need_rational("--a-star", options.a_star);
        const std::size_t h = need_size("--h", options.h);
        if (h == 0) throw InputError("--h must be at least 1");
        request["a_star"] = a_star.to_string();
        request["h"] = h;
        result = forbidden_set(set, a_star, h);
    } else {
        throw InputError("unknown --op '" + options.op + "'");
    }
    Json report = command_header("sumset", std::move(request));
    report["size"] = result.size();
    report["result"] = json::to_json(result);
    write_document(common, dump(report), out);
    return kSuccess;
}

int run_density(const CommonOptions& common, const DensityOptions& options, std::ostream& out) {
    if (options.format != "json" && options.format != "csv") throw InputError("unknown --format '" + options.format + "'");
    const SamplerSpec spec = SamplerSpec::parse(options.sampler, options.seed);
    DensityReport report;
    if (options.exact) {
        if (spec.kind != SamplerSpec::Kind::integer_grid) throw InputError("--exact needs --sampler grid:<N>");
        report = exact_grid_density(spec.bound, options.k, options.h, options.budget);
    } else {
        if (options.trials == 0) throw InputError("density needs --trials >= 1 (or --exact)");
        report = sidon_density(options.k, options.h, options.trials, spec);
    }
    if (options.format == "csv") {
        write_document(common, json::density_csv_header() + "\n" + json::to_csv_row(report) + "\n", out);
        return kSuccess;
    }
    Json request = Json::object();
    request["k"] = options.k;
    request["h"] = options.h;
    request["trials"] = options.trials;
    request["sampler"] = options.sampler;
    request["seed"] = options.seed;
    request["exact"] = options.exact;
    Json document = command_header("density", std::move(request));
    const Json body = json::to_json(report);
    for (const auto& [key, value] : body.items()) document[key] = value;
    write_document(common, dump(document), out);
    return kSuccess;
}

void add_common(CLI::App* sub, CommonOptions& common) {
    sub->add_option("--in", common.input_path, "Input JSON file");
    sub->add_option("--json", common.inline_json, "Inline input JSON document");
    sub->add_option("--out", common.output_path, "Write the report here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact B_h (h-Sidon) set verification, perturbation and density experiments", "sidon"};
    app.require_subcommand(1);
    // --h is the order flag everywhere, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");

    CommonOptions common;

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Decide whether a set of rationals is h-Sidon");
    add_common(verify_cmd, common);
    verify_cmd->add_option("--h", verify.h, "Order h")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--method", verify.method, "bruteforce, hyperplane or both")
        ->check(CLI::IsMember({"bruteforce", "hyperplane", "both"}));
    verify_cmd->add_option("--abs", verify.abs.kind, "archimedean or p-adic");
    verify_cmd->add_option("--p", verify.abs.p, "Prime for --abs p-adic");

    PerturbOptions perturb;
    auto* perturb_cmd = app.add_subcommand("perturb", "Move a sequence by less than eps_i into an h-Sidon set");
    add_common(perturb_cmd, common);
    perturb_cmd->add_option("--h", perturb.h, "Order h")->check(CLI::PositiveNumber);
    perturb_cmd->add_option("--eps", perturb.eps, "Displacement bound used for every index");
    perturb_cmd->add_option("--eps-file", perturb.eps_file, "JSON array of per-index bounds");
    perturb_cmd->add_flag("--eps-harmonic", perturb.eps_harmonic, "Use eps_i = 1/i");
    perturb_cmd->add_flag("--stream", perturb.stream, "Emit b_i one JSON line at a time");
    perturb_cmd->add_option("--count", perturb.count, "Number of elements to emit in stream mode");
    perturb_cmd->add_flag("--allow-duplicates", perturb.allow_duplicates, "Accept repeated input values");
    perturb_cmd->add_option("--abs", perturb.abs_kind, "archimedean or p-adic");
    perturb_cmd->add_option("--p", perturb.p, "Prime for --abs p-adic");

    WeightsOptions weights;
    auto* weights_cmd = app.add_subcommand("weights", "List the weight vectors for k indices and order h");
    add_common(weights_cmd, common);
    weights_cmd->add_option("--k", weights.k, "Index set size")->required()->check(CLI::PositiveNumber);
    weights_cmd->add_option("--h", weights.h, "Order h")->required()->check(CLI::PositiveNumber);
    weights_cmd->add_flag("--canonical", weights.canonical, "One vector per {w, -w} pair");

    SumsetOptions sumset_opts;
    auto* sumset_cmd = app.add_subcommand("sumset", "Additive set operations");
    add_common(sumset_cmd, common);
    sumset_cmd->add_option("--op", sumset_opts.op, "translate, dilate, hsum, rs-diff, shifted or forbidden")->required();
    sumset_cmd->add_option("--c", sumset_opts.c, "Constant for translate/dilate");
    sumset_cmd->add_option("--b", sumset_opts.b, "Point b for shifted");
    sumset_cmd->add_option("--a-star", sumset_opts.a_star, "Target point for forbidden");
    sumset_cmd->add_option("--h", sumset_opts.h, "Order h");
    sumset_cmd->add_option("--r", sumset_opts.r, "r");
    sumset_cmd->add_option("--s", sumset_opts.s, "s");

    DensityOptions density;
    auto* density_cmd = app.add_subcommand("density", "Fraction of random or all grid k-sets that are h-Sidon");
    add_common(density_cmd, common);
    density_cmd->add_option("--k", density.k, "Set size")->required()->check(CLI::PositiveNumber);
    density_cmd->add_option("--h", density.h, "Order h")->required()->check(CLI::PositiveNumber);
    density_cmd->add_option("--trials", density.trials, "Number of sampled sets");
    density_cmd->add_option("--sampler", density.sampler, "grid:<N> or rational:<M>")->required();
    density_cmd->add_option("--seed", density.seed, "Generator seed");
    density_cmd->add_flag("--exact", density.exact, "Enumerate every k-subset of the grid");
    density_cmd->add_option("--budget", density.budget, "Maximum subsets for --exact");
    density_cmd->add_option("--format", density.format, "json or csv");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kMalformedInput;
    }

    try {
        if (verify_cmd->parsed()) return run_verify(common, verify, out);
        if (perturb_cmd->parsed()) return run_perturb(common, perturb, out);
        if (weights_cmd->parsed()) return run_weights(common, weights, out);
        if (sumset_cmd->parsed()) return run_sumset(common, sumset_opts, out);
        if (density_cmd->parsed()) return run_density(common, density, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kMalformedInput;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kMalformedInput;
    } catch (const DuplicateElementError& e) {
        err << "error: " << e.what() << "\n";
        return kMalformedInput;
    } catch (const EmptyInputError& e) {
        err << "error: " << e.what() << "\n";
        return kMalformedInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
    err << "error: no subcommand\n";
    return kMalformedInput;
}

}  // namespace sidon::cli
