#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigidcount/counting.hpp"
#include "rigidcount/graph.hpp"
#include "rigidcount/isomorphism.hpp"
#include "rigidcount/rigidity.hpp"
#include "rigidcount/solver.hpp"

namespace {

using namespace rigidcount;

// Exit codes: 2 parse error, 3 I/O error, 4 flexible graph, 5 path-count
// guard, 6 verification failure.
enum ExitCode {
    kOk = 0,
    kParseError = 2,
    kIoError = 3,
    kFlexible = 4,
    kGuard = 5,
    kVerifyFailed = 6,
};

struct Options {
    std::string graph_path;
    std::string format = "text";
    std::uint64_t seed = 42;
    std::string seeds_csv;
    bool numeric_fallback = false;
    bool force = false;
    std::string dump_solutions;
    TrackerConfig tracker;
};

std::vector<std::uint64_t> parse_seeds(const Options& opt) {
    if (opt.seeds_csv.empty())
        return {opt.seed, opt.seed + 1, opt.seed + 2};
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(opt.seeds_csv);
    std::string item;
    while (std::getline(ss, item, ','))
        seeds.push_back(std::stoull(item));
    if (seeds.empty())
        throw ArgumentError("--seeds needs at least one value");
    return seeds;
}

void print_certificate(std::ostream& out, const CountCertificate& c, int depth) {
    out << std::string(2 * depth, ' ') << to_string(c.rule);
    if (c.factor)
        out << " factor=" << c.factor->str();
    else
        out << " factor=unknown";
    out << " [" << c.graph_fingerprint << "]\n";
    for (const auto& child : c.children)
        print_certificate(out, child, depth + 1);
}

int cmd_analyze(const Graph& g, const Options& opt) {
    RigidityReport r = analyze(g);
    if (opt.format == "json") {
        std::cout << report_to_json(r) << "\n";
        return kOk;
    }
    std::cout << "n: " << r.n << "\n"
              << "m: " << r.m << "\n"
              << "generic_rank: " << r.generic_rank << "\n"
              << "is_rigid: " << (r.is_rigid ? "true" : "false") << "\n"
              << "is_isostatic: " << (r.is_isostatic ? "true" : "false") << "\n"
              << "is_redundantly_rigid: " << (r.is_redundantly_rigid ? "true" : "false") << "\n"
              << "is_3_connected: " << (r.is_3_connected ? "true" : "false") << "\n"
              << "is_globally_rigid: " << (r.is_globally_rigid ? "true" : "false") << "\n"
              << "is_r_connected: " << (r.is_r_connected ? "true" : "false") << "\n"
              << "b_value: " << r.b_value << "\n";
    std::cout << "rigid_components:";
    for (const auto& comp : r.rigid_components) {
        std::cout << " {";
        for (size_t i = 0; i < comp.size(); ++i)
            std::cout << (i ? "," : "") << comp[i];
        std::cout << "}";
    }
    std::cout << "\n";
    int trivial = 0;
    for (const auto& block : r.r_components)
        if (block.size() == 1)
            ++trivial;
    std::cout << "r_components: " << r.r_components.size() << " blocks (" << trivial
              << " single-edge)\n";
    return kOk;
}

// Product of the known certificate factors (residues contribute 1).
BigInt certificate_known_product(const CountCertificate& c) {
    BigInt v = c.factor.value_or(1);
    for (const auto& child : c.children)
        v *= certificate_known_product(child);
    return v;
}

int count_residue_occurrences(const CountCertificate& c, const Graph& residue) {
    int count = c.rule == Rule::Irreducible &&
                        c.graph_fingerprint == fingerprint_hex(residue)
                    ? 1
                    : 0;
    for (const auto& child : c.children)
        count += count_residue_occurrences(child, residue);
    return count;
}

int cmd_count(const Graph& g, const Options& opt) {
    CountResult result = count_c(g);

    nlohmann::json fallback;
    if (opt.numeric_fallback && !result.exact) {
        // Known factors times a numeric count per residue occurrence.
        BigInt value = certificate_known_product(result.certificate);
        bool all_solved = true;
        auto residue_values = nlohmann::json::array();
        std::vector<BigInt> residue_counts;
        for (const auto& residue : result.residues) {
            NumericCount nc = count_realizations(residue, opt.seed, opt.tracker);
            all_solved = all_solved && nc.certified;
            residue_counts.push_back(nc.c_estimate);
            residue_values.push_back({{"n", residue.vertex_count()},
                                      {"c_estimate", nc.c_estimate},
                                      {"certified", nc.certified}});
        }
        for (size_t i = 0; i < result.residues.size(); ++i) {
            int occurrences = count_residue_occurrences(result.certificate,
                                                        result.residues[i]);
            for (int k = 0; k < occurrences; ++k)
                value *= residue_counts[i];
        }
        fallback["residue_counts"] = residue_values;
        fallback["value"] = value.str();
        fallback["note"] = "numeric, probability-1";
        fallback["certified"] = all_solved;
    }

    if (opt.format == "json") {
        auto j = nlohmann::json::parse(count_result_to_json(result));
        if (!fallback.is_null())
            j["numeric_fallback"] = fallback;
        std::cout << j.dump() << "\n";
        return kOk;
    }
    if (result.exact) {
        std::cout << "c = " << result.exact->str() << "\n";
    } else {
        std::cout << "c = " << result.expression << "  (irreducible residues remain)\n";
        for (size_t i = 0; i < result.residues.size(); ++i)
            std::cout << "  R" << i << ": " << graph_to_json(result.residues[i]) << "\n";
        if (!fallback.is_null())
            std::cout << "numeric fallback (probability-1): " << fallback.dump() << "\n";
    }
    std::cout << "certificate:\n";
    print_certificate(std::cout, result.certificate, 1);
    return kOk;
}

int cmd_solve(const Graph& g, const Options& opt) {
    if (g.vertex_count() > 9 && !opt.force) {
        std::cerr << "error: " << (2 * g.vertex_count() - 3)
                  << " variables means 2^" << (2 * g.vertex_count() - 3)
                  << " paths; pass --force to run anyway\n";
        return kGuard;
    }
    SolveOutput out = solve_realizations(g, opt.seed, opt.tracker);
    if (!opt.dump_solutions.empty()) {
        std::ofstream dump(opt.dump_solutions);
        if (!dump)
            throw std::ios_base::failure("cannot write " + opt.dump_solutions);
        auto arr = nlohmann::json::array();
        for (const auto& rep : out.class_representatives)
            arr.push_back(nlohmann::json::parse(realization_to_json(rep)));
        dump << arr.dump() << "\n";
    }
    if (opt.format == "json") {
        std::cout << numeric_count_to_json(out.count) << "\n";
        return kOk;
    }
    const auto& c = out.count;
    std::cout << "total_paths: " << c.total_paths << "\n"
              << "finite_solutions: " << c.finite_solutions << "\n"
              << "c: " << c.c_estimate << "\n"
              << "real: " << c.real_count << "\n"
              << "minkowski: " << c.minkowski_count << "\n"
              << "complex_pairs: " << c.complex_pair_count << "\n"
              << "failures: " << c.failures << "\n"
              << "certified: " << (c.certified ? "true" : "false") << "\n";
    return kOk;
}

int cmd_verify(const Graph& g, const Options& opt) {
    VerifyReport report = verify_against_decomposition(g, parse_seeds(opt), opt.tracker);
    if (opt.format == "json") {
        std::cout << verify_report_to_json(report) << "\n";
    } else {
        std::cout << "decomposition: " << report.decomposition_value << "\n";
        for (const auto& e : report.entries) {
            std::cout << "seed " << e.seed << ": ";
            if (!e.solved)
                std::cout << "error (" << e.error << ")";
            else
                std::cout << "c = " << e.c_estimate << (e.certified ? "" : " [non-certified]")
                          << (e.agrees ? " agrees" : " DISAGREES");
            std::cout << "\n";
        }
        std::cout << "all_agree: " << (report.all_agree ? "true" : "false") << "\n";
    }
    return report.all_agree ? kOk : kVerifyFailed;
}

int cmd_bound(const Graph& g, const Options& opt) {
    BigInt bound = borcea_streinu_bound(g.vertex_count());
    if (opt.format == "json")
        std::cout << nlohmann::json{{"n", g.vertex_count()}, {"bound", bound.str()}}.dump()
                  << "\n";
    else
        std::cout << bound.str() << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numeric counting of complex planar realisations"};
    app.require_subcommand(1);

    Options opt;
    std::string command;
    for (const char* name : {"analyze", "count", "solve", "verify", "bound"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("graph", opt.graph_path, "graph file (edge list or JSON)")
            ->required();
        sub->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", opt.seed, "measurement seed (default 42)");
        sub->add_option("--seeds", opt.seeds_csv, "comma-separated seeds for verify");
        sub->add_flag("--numeric-fallback", opt.numeric_fallback,
                      "resolve irreducible residues numerically");
        sub->add_flag("--force", opt.force, "override the path-count guard");
        sub->add_option("--dump-solutions", opt.dump_solutions,
                        "write canonical solutions to this file");
        sub->add_option("--newton-tol", opt.tracker.newton_tol, "Newton tolerance");
        sub->add_option("--cluster-eps", opt.tracker.endpoint_cluster_eps,
                        "endpoint clustering radius");
        sub->add_option("--divergence-norm", opt.tracker.divergence_norm,
                        "norm treated as escape to infinity");
        sub->callback([&command, name]() { command = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        rigidcount::Graph g = rigidcount::load_graph_file(opt.graph_path);
        if (command == "analyze")
            return cmd_analyze(g, opt);
        if (command == "count")
            return cmd_count(g, opt);
        if (command == "solve")
            return cmd_solve(g, opt);
        if (command == "verify")
            return cmd_verify(g, opt);
        if (command == "bound")
            return cmd_bound(g, opt);
        std::cerr << "error: unknown command\n";
        return 1;
    } catch (const rigidcount::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIoError;
    } catch (const rigidcount::NotRigidError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFlexible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
