#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sidon/cli.hpp"
#include "sidon/errors.hpp"
#include "sidon/json_io.hpp"

namespace py = pybind11;
using sidon::json::Json;

namespace {

// Reports cross into Python through the same JSON forms the CLI writes.
py::object to_python(const Json& value) { return py::module_::import("json").attr("loads")(value.dump()); }

std::vector<sidon::Rational> parse_all(const std::vector<std::string>& texts) {
    std::vector<sidon::Rational> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(sidon::Rational::parse(t));
    return out;
}

sidon::AbsoluteValue make_abs(const std::string& kind, std::optional<std::uint64_t> p) {
    if (kind == "archimedean") return sidon::AbsoluteValue::archimedean();
    if (kind == "p-adic") {
        if (!p) throw sidon::ParseError("p-adic absolute value needs p");
        return sidon::AbsoluteValue::p_adic(*p);
    }
    throw sidon::ParseError("unknown absolute value kind '" + kind + "'");
}

sidon::Verdict run_verifier(const std::vector<std::string>& points, std::size_t h, const std::string& method) {
    const auto config = sidon::PointConfiguration::validate(parse_all(points));
    if (method == "bruteforce") return sidon::verify_bruteforce(config, h);
    if (method == "hyperplane") return sidon::verify_hyperplane(config, h);
    throw sidon::ParseError("method must be 'bruteforce' or 'hyperplane'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact B_h (h-Sidon) set verification and perturbation over the rationals";

    py::register_exception<sidon::Error>(m, "SidonError", PyExc_ValueError);

    m.def("verify", [](const std::vector<std::string>& points, std::size_t h, const std::string& method) {
        return to_python(sidon::json::to_json(run_verifier(points, h, method)));
    }, py::arg("points"), py::arg("h"), py::arg("method") = "bruteforce");

    m.def("perturb", [](const std::vector<std::string>& alpha, const std::vector<std::string>& epsilons, std::size_t h,
                        const std::string& kind, std::optional<std::uint64_t> p, bool allow_duplicates) {
        Json request = Json::object();
        request["alpha"] = alpha;
        request["epsilons"] = epsilons;
        request["h"] = h;
        request["abs"] = sidon::json::to_json(make_abs(kind, p));
        request["allow_duplicates"] = allow_duplicates;
        const auto parsed = sidon::json::perturb_request_from_json(request);
        if (!allow_duplicates && !parsed.alpha.empty()) sidon::PointConfiguration::validate(parsed.alpha);
        return to_python(sidon::json::to_json(sidon::perturb_sequence(parsed.alpha, parsed.plan)));
    }, py::arg("alpha"), py::arg("epsilons"), py::arg("h"), py::arg("abs") = "archimedean", py::arg("p") = py::none(),
       py::arg("allow_duplicates") = false);

    m.def("forbidden_set", [](const std::vector<std::string>& a, const std::string& a_star, std::size_t h) {
        return to_python(sidon::json::to_json(
            sidon::forbidden_set(sidon::FiniteSet(parse_all(a)), sidon::Rational::parse(a_star), h)));
    }, py::arg("a"), py::arg("a_star"), py::arg("h"));

    m.def("weight_vectors", [](std::size_t k, std::size_t h, bool canonical) {
        Json list = Json::array();
        sidon::for_each_weight_vector(k, h, canonical, [&](const sidon::WeightVector& w) {
            list.push_back(sidon::json::to_json(w));
            return true;
        });
        return to_python(list);
    }, py::arg("k"), py::arg("h"), py::arg("canonical") = false);

    m.def("h_fold_sumset", [](const std::vector<std::string>& a, std::size_t h) {
        return to_python(sidon::json::to_json(sidon::h_fold_sumset(sidon::FiniteSet(parse_all(a)), h)));
    }, py::arg("a"), py::arg("h"));

    m.def("r_s_sum_difference", [](const std::vector<std::string>& a, std::size_t r, std::size_t s) {
        return to_python(sidon::json::to_json(sidon::r_s_sum_difference(sidon::FiniteSet(parse_all(a)), r, s)));
    }, py::arg("a"), py::arg("r"), py::arg("s"));

    m.def("shifted_sumset", [](const std::vector<std::string>& a, const std::string& b, std::size_t r, std::size_t h) {
        return to_python(sidon::json::to_json(
            sidon::shifted_sumset(sidon::FiniteSet(parse_all(a)), sidon::Rational::parse(b), r, h)));
    }, py::arg("a"), py::arg("b"), py::arg("r"), py::arg("h"));

    m.def("abs_value", [](const std::string& x, const std::string& kind, std::optional<std::uint64_t> p) {
        return sidon::abs_value(sidon::Rational::parse(x), make_abs(kind, p)).value().to_string();
    }, py::arg("x"), py::arg("abs") = "archimedean", py::arg("p") = py::none());

    m.def("small_nonzero_element", [](const std::string& bound, const std::string& kind, std::optional<std::uint64_t> p) {
        const sidon::Rational m_value = sidon::Rational::parse(bound);
        return sidon::small_nonzero_element(sidon::Magnitude(m_value), make_abs(kind, p)).to_string();
    }, py::arg("bound"), py::arg("abs") = "archimedean", py::arg("p") = py::none());

    m.def("sidon_density", [](std::size_t k, std::size_t h, std::uint64_t trials, const std::string& sampler,
                              std::uint64_t seed) {
        return to_python(sidon::json::to_json(sidon::sidon_density(k, h, trials, sidon::SamplerSpec::parse(sampler, seed))));
    }, py::arg("k"), py::arg("h"), py::arg("trials"), py::arg("sampler"), py::arg("seed") = 0);

    m.def("exact_grid_density", [](std::uint64_t n, std::size_t k, std::size_t h) {
        return to_python(sidon::json::to_json(sidon::exact_grid_density(n, k, h)));
    }, py::arg("n"), py::arg("k"), py::arg("h"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = sidon::cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run the command line front end in-process; returns (exit_code, stdout, stderr).");
}
