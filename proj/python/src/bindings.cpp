#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cactusnet/cactus.hpp"
#include "cactusnet/cli.hpp"
#include "cactusnet/detgame.hpp"
#include "cactusnet/error.hpp"
#include "cactusnet/io.hpp"

namespace py = pybind11;
using namespace cactusnet;

// Rationals cross the boundary as "p/q" strings and structured results as
// JSON text; the Python package converts both.

namespace {

StepChain chain_named(const std::string& loop) {
    if (loop == "left") return left_chain();
    if (loop == "right") return right_chain();
    throw py::value_error("loop must be 'left' or 'right', got '" + loop + "'");
}

std::vector<std::string> strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(v.to_string());
    return out;
}

std::vector<Rational> rationals(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    for (const auto& t : texts) out.push_back(Rational::parse(t));
    return out;
}

Network network_from_text(const std::string& text) {
    try {
        return network_from_json(Json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("network JSON: ") + e.what());
    }
}

template <typename T>
void exception(py::module_& m, const char* name, py::handle base) {
    py::register_exception<T>(m, name, base);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact cactus network construction and fiber verification";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    exception<PoleError>(m, "PoleError", base);
    exception<ZeroDenominator>(m, "ZeroDenominator", base);
    exception<ParseError>(m, "ParseError", base);
    exception<SelfLoop>(m, "SelfLoop", base);
    exception<NonPositiveConductivity>(m, "NonPositiveConductivity", base);
    exception<UnknownEndpoint>(m, "UnknownEndpoint", base);
    exception<NoBoundary>(m, "NoBoundary", base);
    exception<SingularInterior>(m, "SingularInterior", base);
    exception<NonPositiveParameter>(m, "NonPositiveParameter", base);
    exception<InfeasibleFiber>(m, "InfeasibleFiber", base);
    exception<NonPositiveSlack>(m, "NonPositiveSlack", base);
    exception<TopologyMismatch>(m, "TopologyMismatch", base);
    exception<InvariantViolation>(m, "InvariantViolation", base);

    m.def("topology_json", [] { return topology_to_json(build_topology()).dump(); });

    m.def("populate_json", [](const std::string& x) { return network_to_json(populate(Rational::parse(x))).dump(); },
          py::arg("x"));

    m.def(
        "verify_fiber_json",
        [](const std::vector<std::string>& xs, const std::string& slack) {
            return fiber_report_to_json(verify_fiber(rationals(xs), Rational::parse(slack))).dump();
        },
        py::arg("xs"), py::arg("slack") = "1");

    m.def(
        "response_json",
        [](const std::string& network) { return response_to_json(schur_response(network_from_text(network))).dump(); },
        py::arg("network"));

    m.def(
        "dirichlet_response_json",
        [](const std::string& network) {
            return response_to_json(response_by_dirichlet(network_from_text(network))).dump();
        },
        py::arg("network"));

    m.def(
        "chain_eval",
        [](const std::string& loop, const std::string& x) {
            return strings(chain_eval(chain_named(loop), Rational::parse(x)));
        },
        py::arg("loop"), py::arg("x"));

    m.def(
        "closed_form", [](const std::string& loop) { return chain_closed_form(chain_named(loop)).to_string(); },
        py::arg("loop"));

    m.def("certificate", [] {
        const StepChain loops[] = {left_chain(), right_chain()};
        const ArityCertificate cert = certify_arity(loops);
        py::dict out;
        out["polynomial"] = cert.conservation.to_string();
        out["coefficients"] = strings(cert.conservation.coefficients());
        out["rational_roots"] = strings(cert.rational_roots);
        out["real_root_count"] = cert.real_root_count;
        out["arity"] = cert.arity();
        return out;
    });

    m.def("arity", [] { return arity(); });

    m.def(
        "game_json",
        [](const std::string& target, bool promote) {
            if (target == "multiplexor") return game_to_json(run_game(multiplexor_game(), promote)).dump();
            if (target == "cactus") return game_to_json(run_game(cactus_game(), promote)).dump();
            throw py::value_error("target must be 'multiplexor' or 'cactus', got '" + target + "'");
        },
        py::arg("target"), py::arg("promote") = false);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int status = run_cli(args, out, err);
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"));
}
