// Runs every acceptance criterion at exact tolerance and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cactusnet/cactus.hpp"
#include "cactusnet/cli.hpp"
#include "cactusnet/detgame.hpp"
#include "cactusnet/error.hpp"
#include "cactusnet/io.hpp"
#include "published_figures.hpp"
#include "support.hpp"

using namespace cactusnet;
namespace t = cactusnet::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(BigInt(p), BigInt(d)); }

const std::vector<Rational>& fiber() {
    static const std::vector<Rational> xs{q(2), q(3), q(4)};
    return xs;
}

std::string cli(const std::vector<std::string>& args, int& status) {
    std::ostringstream out;
    std::ostringstream err;
    status = run_cli(args, out, err);
    return out.str();
}

Outcome fiber_equality() {
    Outcome o;
    int status = 0;
    const Json report = Json::parse(cli({"verify", "--xs", "2,3,4", "--format", "json"}, status));
    o.require(status == 0, "verify exited " + std::to_string(status));
    o.require(report.at("slack") == "1", "slack is not 1");

    const auto r = verify_fiber(fiber(), q(1));
    for (std::size_t k = 0; k < r.networks.size(); ++k) {
        const auto lambda = schur_response(r.networks[k]);
        o.require(lambda == r.common_response, "network " + std::to_string(k) + " response differs");
        o.require(response_by_dirichlet(r.networks[k]) == lambda,
                  "Dirichlet oracle disagrees for network " + std::to_string(k));
        o.require(response_to_json(lambda) == report.at("common_response"), "CLI report response differs");
    }
    o.require(r.networks.size() == 3, "expected three networks");
    if (o.ok) o.detail = "3 networks, 12x12 responses identical, Dirichlet oracle agrees";
    return o;
}

Outcome published_conductivities() {
    Outcome o;
    const std::pair<int, const t::PublishedFigure*> figures[] = {
        {2, &t::kPopulatedAt2}, {3, &t::kPopulatedAt3}, {4, &t::kPopulatedAt4}};
    std::size_t matched = 0;
    for (const auto& [x, figure] : figures) {
        const Network n = populate(q(x));
        for (const auto& e : *figure) {
            if (x == 3 && e.hub == 17 && e.leaf == 14) continue;
            const auto got = n.edge({e.hub, e.leaf});
            const bool same = got && got->conductivity == q(e.num, e.den);
            o.require(same, "x=" + std::to_string(x) + " edge " + std::to_string(e.hub) + "-" +
                                std::to_string(e.leaf));
            matched += same;
        }
    }

    // Adjudicate the disputed label with the criterion-1 oracle.
    std::vector<std::string> valid;
    for (const Rational& label : {q(85, 18), q(85, 16)}) {
        std::vector<Edge> edges = populate(q(3)).edges();
        for (auto& e : edges) {
            if (e.pair() == VertexPair(14, 17)) e.conductivity = label;
        }
        std::vector<Network> nets{populate(q(2)), build_network(build_topology().vertices, edges), populate(q(4))};
        try {
            verify_networks(fiber(), std::move(nets), q(1));
            valid.push_back(label.to_string());
        } catch (const InfeasibleFiber&) {
        }
    }
    o.require(!valid.empty(), "neither 85/18 nor 85/16 gives fiber equality");
    if (o.ok) {
        std::string which;
        for (const auto& v : valid) which += (which.empty() ? "" : ", ") + v;
        o.detail = std::to_string(matched) + "/77 labels match; (17,14) at x=3 valid with {" + which +
                   "}; printed 85/18 " +
                   (std::find(valid.begin(), valid.end(), "85/18") == valid.end() ? "fails" : "holds");
    }
    return o;
}

Outcome propagation_tables() {
    Outcome o;
    const std::vector<std::vector<Rational>> left{
        {q(2), q(5), q(1, 5), q(9, 5), q(10, 3), q(2, 3), q(3, 2)},
        {q(3), q(4), q(1, 4), q(7, 4), q(24, 7), q(4, 7), q(7, 4)},
        {q(4), q(3), q(1, 3), q(5, 3), q(18, 5), q(2, 5), q(5, 2)},
    };
    const std::vector<std::vector<Rational>> right{
        {q(2), q(5), q(5), q(2), q(1, 2), q(1, 2), q(3), q(1, 2), q(1, 2)},
        {q(3), q(4), q(4), q(3), q(1, 3), q(2, 3), q(9, 4), q(5, 4), q(5, 4)},
        {q(4), q(3), q(3), q(4), q(1, 4), q(3, 4), q(2), q(3, 2), q(3, 2)},
    };
    std::size_t entries = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        const auto l = chain_eval(left_chain(), fiber()[k]);
        const auto r = chain_eval(right_chain(), fiber()[k]);
        o.require(l == left[k], "left row x=" + fiber()[k].to_string());
        o.require(r == right[k], "right row x=" + fiber()[k].to_string());
        entries += l.size() + r.size();
    }
    if (o.ok) o.detail = std::to_string(entries) + " trace entries (21 left, 27 right)";
    return o;
}

Outcome closed_forms() {
    Outcome o;
    const auto l = chain_closed_form(left_chain());
    const auto r = chain_closed_form(right_chain());
    o.require(l == ratfun_canonical(Polynomial{q(-13), q(2)}, Polynomial{q(-10), q(2)}), "left is " + l.to_string());
    o.require(r == ratfun_canonical(Polynomial{q(-7), q(4)}, Polynomial{q(-2), q(2)}), "right is " + r.to_string());
    auto rng = t::make_rng(2024);
    int points = 0;
    while (points < 100) {
        const Rational x = t::random_rational(rng, 1000);
        try {
            const auto lt = chain_eval(left_chain(), x);
            const auto rt = chain_eval(right_chain(), x);
            o.require(lt.back() == l(x) && rt.back() == r(x), "disagreement at x=" + x.to_string());
            ++points;
        } catch (const PoleError&) {
        }
    }
    if (o.ok) o.detail = "L = " + l.to_string() + ", R = " + r.to_string() + "; 100 random points agree";
    return o;
}

Outcome arity_certificate() {
    Outcome o;
    const StepChain loops[] = {left_chain(), right_chain()};
    const auto cert = certify_arity(loops);
    o.require(cert.conservation == Polynomial{q(-24), q(26), q(-9), q(1)}, cert.conservation.to_string());
    o.require(cert.rational_roots == fiber(), "rational roots differ");
    o.require(cert.real_root_count == 3, "Sturm count " + std::to_string(cert.real_root_count));
    int status = 0;
    const std::string printed = cli({"arity"}, status);
    o.require(status == 0 && printed == "3\n", "arity printed '" + printed + "'");
    if (o.ok) o.detail = cert.conservation.to_string() + "; roots {2,3,4}; Sturm 3; arity 3";
    return o;
}

Outcome loop_conservation() {
    Outcome o;
    const std::pair<Rational, Rational> expected[] = {{q(3, 2), q(1, 2)}, {q(7, 4), q(5, 4)}, {q(5, 2), q(3, 2)}};
    for (std::size_t k = 0; k < 3; ++k) {
        const Rational l = chain_eval(left_chain(), fiber()[k]).back();
        const Rational r = chain_eval(right_chain(), fiber()[k]).back();
        o.require(l == expected[k].first && r == expected[k].second, "returns at x=" + fiber()[k].to_string());
        o.require(l + r == fiber()[k], "sum at x=" + fiber()[k].to_string());
    }
    if (o.ok) o.detail = "3/2 + 1/2 = 2, 7/4 + 5/4 = 3, 5/2 + 3/2 = 4";
    return o;
}

Outcome off_fiber() {
    Outcome o;
    const auto common = verify_fiber(fiber()).common_response;
    const auto off = schur_response(populate(q(7, 2)));
    const auto& aux = build_topology().auxiliary;
    std::size_t differing = 0;
    for (std::size_t i = 0; i < off.boundary.size(); ++i) {
        for (std::size_t j = i + 1; j < off.boundary.size(); ++j) {
            const VertexPair p(off.boundary[i], off.boundary[j]);
            if (std::find(aux.begin(), aux.end(), p) != aux.end()) continue;
            differing += off.entries(i, j) != common.entries(i, j);
        }
    }
    o.require(differing >= 1, "populate(7/2) matches every non-auxiliary pair");
    bool infeasible = false;
    try {
        verify_fiber(std::vector<Rational>{q(2), q(7, 2)});
    } catch (const InfeasibleFiber&) {
        infeasible = true;
    }
    o.require(infeasible, "verify_fiber({2, 7/2}) did not raise InfeasibleFiber");
    if (o.ok) o.detail = "non-auxiliary pairs differing: " + std::to_string(differing) + "; InfeasibleFiber raised";
    return o;
}

Outcome property_suites() {
    Outcome o;
    auto rng = t::make_rng(8);
    constexpr int kNetworks = 50;
    int perturbed = 0;
    for (int i = 0; i < kNetworks; ++i) {
        const Network n = t::random_network(rng);
        const auto lambda = schur_response(n);
        o.require(response_by_dirichlet(n) == lambda, "oracle mismatch on network " + std::to_string(i));
        const auto bad = check_response_invariants(lambda);
        o.require(!bad, bad.value_or(""));
        if (n.boundary().size() < 2) continue;

        const VertexId bi = n.boundary().front();
        const VertexId bj = n.boundary().back();
        const Rational a = t::random_positive(rng);
        const Edge extra[] = {{bi, bj, a, EdgeRole::Auxiliary}};
        const auto after = schur_response(with_edges(n, extra));
        std::size_t changed = 0;
        for (std::size_t r = 0; r < lambda.boundary.size(); ++r) {
            for (std::size_t c = 0; c < lambda.boundary.size(); ++c) {
                const Rational d = after.entries(r, c) - lambda.entries(r, c);
                if (d.is_zero()) continue;
                ++changed;
                const bool diag = r == c;
                o.require(d == (diag ? a : -a), "perturbation delta wrong on network " + std::to_string(i));
            }
        }
        o.require(changed == 4, "perturbation touched " + std::to_string(changed) + " entries");
        ++perturbed;
    }
    if (o.ok) {
        o.detail = std::to_string(kNetworks) + " random networks, " + std::to_string(perturbed) +
                   " perturbation checks";
    }
    return o;
}

Outcome determination_game() {
    Outcome o;
    const auto mux = run_game(multiplexor_game());
    const auto cactus = run_game(cactus_game());
    o.require(mux.all_removed(), "multiplexor keeps orange edges");
    o.require(cactus.all_removed(), "cactus keeps orange edges");
    auto rng = t::make_rng(9);
    for (int i = 0; i < 50; ++i) {
        for (const auto* ref : {&mux, &cactus}) {
            auto g = ref == &mux ? multiplexor_game() : cactus_game();
            std::shuffle(g.white.begin(), g.white.end(), rng);
            std::shuffle(g.orange.begin(), g.orange.end(), rng);
            o.require(run_game(g).removed == ref->removed, "order dependence on shuffle " + std::to_string(i));
        }
    }
    if (o.ok) {
        o.detail = "multiplexor " + std::to_string(mux.removed.size()) + "/5, cactus " +
                   std::to_string(cactus.removed.size()) + "/6; 50 shuffles agree";
    }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"fiber equality", fiber_equality},
        {"published conductivities", published_conductivities},
        {"propagation tables", propagation_tables},
        {"closed forms", closed_forms},
        {"arity certificate", arity_certificate},
        {"loop conservation", loop_conservation},
        {"off-fiber negative test", off_fiber},
        {"property suites", property_suites},
        {"determination game", determination_game},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << o.detail << '\n';
    }
    return failures == 0 ? 0 : 1;
}
