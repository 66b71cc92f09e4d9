#include "cactusnet/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cactusnet/cactus.hpp"
#include "cactusnet/detgame.hpp"
#include "cactusnet/error.hpp"
#include "cactusnet/io.hpp"

namespace cactusnet {

namespace {

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
    if (dynamic_cast<const ZeroDenominator*>(&e)) return "ZeroDenominator";
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const SelfLoop*>(&e)) return "SelfLoop";
    if (dynamic_cast<const NonPositiveConductivity*>(&e)) return "NonPositiveConductivity";
    if (dynamic_cast<const UnknownEndpoint*>(&e)) return "UnknownEndpoint";
    if (dynamic_cast<const NoBoundary*>(&e)) return "NoBoundary";
    if (dynamic_cast<const SingularInterior*>(&e)) return "SingularInterior";
    if (dynamic_cast<const NonPositiveParameter*>(&e)) return "NonPositiveParameter";
    if (dynamic_cast<const InfeasibleFiber*>(&e)) return "InfeasibleFiber";
    if (dynamic_cast<const NonPositiveSlack*>(&e)) return "NonPositiveSlack";
    if (dynamic_cast<const TopologyMismatch*>(&e)) return "TopologyMismatch";
    if (dynamic_cast<const InvariantViolation*>(&e)) return "InvariantViolation";
    return "Error";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot write " + path.string());
    os << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<Rational> parse_positive(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    for (const auto& t : texts) {
        Rational x = Rational::parse(t);
        if (x.sign() <= 0) throw ParseError("parameter " + t + " is not a positive rational");
        out.push_back(std::move(x));
    }
    return out;
}

std::string set_text(const std::vector<Rational>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].to_string();
    return s + "}";
}

/// Emits `text` to `path` when given, to stdout otherwise.
void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty()) {
        out << text;
    } else {
        write_file(path, text);
    }
}

int report_game(std::ostream& out, const std::string& label, const GameState& initial, bool promote) {
    const GameState final_state = run_game(initial, promote);
    out << label << ": removal order";
    for (const auto& p : final_state.removed) out << ' ' << to_string(p);
    out << '\n';
    out << label << ": " << (final_state.all_removed() ? "PASS" : "FAIL") << " all orange edges removed ("
        << final_state.removed.size() << "/" << final_state.orange.size() << ")\n";
    return final_state.all_removed() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and verification of a 3-to-1 unrecoverable resistor network", "cactusnet"};
    app.require_subcommand(1);

    std::string out_path;

    auto* topology = app.add_subcommand("topology", "Emit the unpopulated cactus skeleton as JSON");
    topology->add_option("--out", out_path, "Write to this file instead of stdout");

    std::string x_text;
    auto* populate_cmd = app.add_subcommand("populate", "Emit the star-populated network at fiber parameter x");
    populate_cmd->add_option("--x", x_text, "Fiber parameter as p/q")->required();
    populate_cmd->add_option("--out", out_path, "Write to this file instead of stdout");

    bool table = false;
    std::vector<std::string> table_xs{"2", "3", "4"};
    auto* chains = app.add_subcommand("chains", "Arm-propagation closed forms, or traces with --table");
    chains->add_flag("--table", table, "Render the propagation traces of both loops");
    chains->add_option("--xs", table_xs, "Parameters for the table rows")->delimiter(',');

    app.add_subcommand("cubic", "Conservation polynomial, its rational roots and Sturm root count");

    std::vector<std::string> xs_text{"2", "3", "4"};
    std::string slack_text = "1";
    std::string format = "text";
    auto* verify = app.add_subcommand("verify", "Populate, solve auxiliaries and verify exact response equality");
    verify->add_option("--xs", xs_text, "Fiber parameters, comma separated")->delimiter(',');
    verify->add_option("--slack", slack_text, "Auxiliary slack (positive rational)");
    verify->add_option("--out", out_path, "Directory for report, network and response files");
    verify->add_option("--format", format, "Stdout format")->check(CLI::IsMember({"text", "json", "csv"}));

    bool promote = false;
    std::string target = "both";
    auto* game = app.add_subcommand("game", "Play the determination game");
    game->add_flag("--promote", promote, "Turn removed orange edges white for later passes");
    game->add_option("--target", target, "Which graph to play on")
        ->check(CLI::IsMember({"multiplexor", "cactus", "both"}));

    app.add_subcommand("arity", "Certified size of the cactus fiber");

    std::string network_path;
    auto* response = app.add_subcommand("response", "Exact response matrix CSV of a network JSON file");
    response->add_option("--network", network_path, "Network JSON file")->required()->check(CLI::ExistingFile);

    std::vector<std::string> argv_store{"cactusnet"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (topology->parsed()) {
            emit(out, out_path, dump(topology_to_json(build_topology())));
        } else if (populate_cmd->parsed()) {
            emit(out, out_path, dump(network_to_json(populate(Rational::parse(x_text)))));
        } else if (chains->parsed()) {
            const StepChain left = left_chain();
            const StepChain right = right_chain();
            if (table) {
                const auto xs = parse_positive(table_xs);
                out << "left loop (quad^3)\n" << render_table(left, xs) << '\n';
                out << "right loop (switch quad^2 switch)\n" << render_table(right, xs);
            } else {
                out << "left:  " << chain_closed_form(left).to_string() << '\n';
                out << "right: " << chain_closed_form(right).to_string() << '\n';
            }
        } else if (app.got_subcommand("cubic")) {
            const StepChain loops[] = {left_chain(), right_chain()};
            const ArityCertificate cert = certify_arity(loops);
            out << cert.conservation.to_string() << "; rational roots " << set_text(cert.rational_roots)
                << "; real roots " << cert.real_root_count << '\n';
        } else if (verify->parsed()) {
            const auto xs = parse_positive(xs_text);
            const FiberReport report = verify_fiber(xs, Rational::parse(slack_text));
            const std::string csv = response_to_csv(report.common_response);
            if (!out_path.empty()) {
                const std::filesystem::path dir(out_path);
                std::filesystem::create_directories(dir);
                write_file(dir / "fiber_report.json", dump(fiber_report_to_json(report)));
                write_file(dir / "response.csv", csv);
                for (std::size_t k = 0; k < report.networks.size(); ++k) {
                    write_file(dir / ("network_" + std::to_string(k) + ".json"),
                               dump(network_to_json(report.networks[k])));
                }
            }
            if (format == "json") {
                out << dump(fiber_report_to_json(report));
            } else if (format == "csv") {
                out << csv;
            } else {
                for (std::size_t k = 0; k < report.parameters.size(); ++k) {
                    out << "x = " << report.parameters[k].to_string() << ": auxiliary";
                    for (const auto& [pair, value] : report.auxiliary_solution[k]) {
                        out << ' ' << to_string(pair) << '=' << value.to_string();
                    }
                    out << '\n';
                }
                out << "responses exactly equal across " << report.parameters.size()
                    << " networks; Dirichlet oracle agrees\n";
                out << "conservation polynomial " << report.conservation.to_string() << ", real roots "
                    << report.real_root_count << '\n';
                out << "arity " << report.arity << '\n';
            }
        } else if (game->parsed()) {
            int status = 0;
            if (target != "cactus") status |= report_game(out, "multiplexor", multiplexor_game(), promote);
            if (target != "multiplexor") status |= report_game(out, "cactus", cactus_game(), promote);
            return status;
        } else if (app.got_subcommand("arity")) {
            out << arity() << '\n';
        } else if (response->parsed()) {
            std::ifstream is(network_path);
            std::stringstream buffer;
            buffer << is.rdbuf();
            Json j;
            try {
                j = Json::parse(buffer.str());
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(std::string("network JSON: ") + e.what());
            }
            out << response_to_csv(schur_response(network_from_json(j)));
        }
    } catch (const std::exception& e) {
        err << "error: " << error_kind(e) << ": " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace cactusnet
