// Command line front end: generate instances, build separators, verify
// families, report bounds, solve tiny instances exactly, and simulate
// single-link fault localization.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathsep/bounds.hpp"
#include "pathsep/constructors.hpp"
#include "pathsep/cover.hpp"
#include "pathsep/exact.hpp"
#include "pathsep/faultsim.hpp"
#include "pathsep/generators.hpp"
#include "pathsep/io.hpp"
#include "pathsep/verifier.hpp"

using nlohmann::json;
using namespace pathsep;

namespace {

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_graph(in);
}

PathFamily load_family(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open family file: " + path);
    return parse_family(in, g);
}

void write_or_print(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write: " + out_path);
        out << text;
    }
}

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, i + 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph(10, e);
}

struct ConstructOutput {
    ConstructionResult result;
    double runtime_ms = 0.0;
    std::string method_used;
};

ConstructOutput run_construct(const Graph& g, std::string method, uint64_t seed,
                              std::optional<double> p_opt) {
    auto t0 = std::chrono::steady_clock::now();
    if (method == "auto") {
        if (is_forest(g)) method = "forest";
        else if (is_complete_graph(g) && g.n() >= 5) method = "complete";
        else if (auto d = hypercube_dimension(g); d && *d >= 2) method = "hypercube";
        else method = "general";
    }
    ConstructOutput out;
    if (method == "forest") {
        out.result = separator_forest(g);
    } else if (method == "complete") {
        out.result = separator_complete(g, seed);
    } else if (method == "hypercube") {
        auto d = hypercube_dimension(g);
        if (!d || *d < 2) throw std::runtime_error("graph is not a canonical hypercube");
        out.result = separator_hypercube(g, *d);
    } else if (method == "gnp") {
        double p = p_opt ? *p_opt
                         : (g.n() >= 2 ? 2.0 * g.m() / (static_cast<double>(g.n()) * (g.n() - 1))
                                       : 0.5);
        out.result = separator_gnp(g, p, seed);
    } else if (method == "general") {
        out.result = separator_general(g, seed);
    } else {
        throw std::runtime_error("unknown method: " + method);
    }
    out.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    out.method_used = method;
    return out;
}

json construct_report(const Graph& g, const ConstructOutput& co, uint64_t seed) {
    json j;
    j["method"] = co.method_used;
    j["n"] = g.n();
    j["m"] = g.m();
    j["t"] = co.result.size();
    j["claimed_bound"] = co.result.claimed_bound;
    if (g.n() >= 2 && g.m() >= g.n())
        j["entropy_lb"] = entropy_lower_bound(g.n(), g.m()).entropy_form;
    else
        j["entropy_lb"] = nullptr;
    j["verified"] = co.result.certified;
    j["retries"] = co.result.retries;
    j["patched"] = co.result.patched;
    j["seed"] = seed;
    j["runtime_ms"] = co.runtime_ms;
    return j;
}

int cmd_bench(const std::string& suite);

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"path separators: constructions, verification, bounds, fault simulation"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    std::string gen_family;
    std::vector<std::string> gen_params;
    uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("family", gen_family,
                    "path|star|cycle|complete|bipartite|hypercube|gnp|tree|extremal-tree")
        ->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // construct
    auto* con = app.add_subcommand("construct", "build a verified separator");
    std::string con_method = "auto", con_graph, con_out;
    uint64_t con_seed = 0;
    bool con_json = false;
    std::optional<double> con_p;
    con->add_option("--method", con_method, "auto|general|forest|complete|hypercube|gnp");
    con->add_option("--seed", con_seed, "rng seed");
    double con_p_raw = -1.0;
    con->add_option("--p", con_p_raw, "edge probability used to generate the graph (gnp)");
    con->add_flag("--json", con_json, "machine-readable report");
    con->add_option("-o,--output", con_out, "family output file (default stdout)");
    con->add_option("graph", con_graph, "graph file")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "check the separator property");
    std::string ver_graph, ver_family;
    bool ver_json = false;
    ver->add_option("graph", ver_graph)->required();
    ver->add_option("family", ver_family)->required();
    ver->add_flag("--json", ver_json);

    // bounds
    auto* bnd = app.add_subcommand("bounds", "report lower/upper bounds");
    std::string bnd_graph;
    bool bnd_json = false;
    bnd->add_option("graph", bnd_graph)->required();
    bnd->add_flag("--json", bnd_json);

    // exact
    auto* exc = app.add_subcommand("exact", "exact psn for tiny graphs");
    std::string exc_graph;
    bool exc_json = false;
    exc->add_option("graph", exc_graph)->required();
    exc->add_flag("--json", exc_json);

    // simulate
    auto* sim = app.add_subcommand("simulate", "single-fault localization campaign");
    std::string sim_graph, sim_family, sim_fail = "all";
    int sim_trials = 0;
    uint64_t sim_seed = 0;
    bool sim_json = false;
    sim->add_option("graph", sim_graph)->required();
    sim->add_option("family", sim_family)->required();
    sim->add_option("--trials", sim_trials, "0 = exhaustive");
    sim->add_option("--fail", sim_fail, "edge id, 'none', or 'all'");
    sim->add_option("--seed", sim_seed);
    sim->add_flag("--json", sim_json);

    // bench
    auto* ben = app.add_subcommand("bench", "size-vs-bound table over a suite");
    std::string ben_suite = "quick";
    ben->add_option("suite", ben_suite, "quick|acceptance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            auto need = [&](std::size_t k) {
                if (gen_params.size() < k)
                    throw std::runtime_error("family '" + gen_family + "' needs " +
                                             std::to_string(k) + " parameter(s)");
            };
            Graph g(0, {});
            if (gen_family == "path") { need(1); g = gen_path(std::stoi(gen_params[0])); }
            else if (gen_family == "star") { need(1); g = gen_star(std::stoi(gen_params[0])); }
            else if (gen_family == "cycle") { need(1); g = gen_cycle(std::stoi(gen_params[0])); }
            else if (gen_family == "complete") { need(1); g = gen_complete(std::stoi(gen_params[0])); }
            else if (gen_family == "bipartite") { need(2); g = gen_complete_bipartite(std::stoi(gen_params[0]), std::stoi(gen_params[1])); }
            else if (gen_family == "hypercube") { need(1); g = gen_hypercube(std::stoi(gen_params[0])); }
            else if (gen_family == "gnp") { need(2); g = gen_gnp(std::stoi(gen_params[0]), std::stod(gen_params[1]), gen_seed); }
            else if (gen_family == "tree") { need(1); g = gen_random_tree(std::stoi(gen_params[0]), gen_seed); }
            else if (gen_family == "extremal-tree") { need(1); g = gen_extremal_tree(std::stoi(gen_params[0])); }
            else if (gen_family == "petersen") { g = petersen(); }
            else throw std::runtime_error("unknown family: " + gen_family);
            std::ostringstream ss;
            emit_graph(ss, g);
            write_or_print(gen_out, ss.str());
            return 0;
        }

        if (*con) {
            if (con_p_raw >= 0.0) con_p = con_p_raw;
            Graph g = load_graph(con_graph);
            auto co = run_construct(g, con_method, con_seed, con_p);
            std::ostringstream fam;
            emit_family(fam, co.result.family);
            write_or_print(con_out, fam.str());
            // The family owns stdout when no output file is given; the
            // report moves to stderr so pipelines stay clean.
            std::ostream& rep = con_out.empty() ? std::cerr : std::cout;
            if (con_json) {
                rep << construct_report(g, co, con_seed).dump(2) << '\n';
            } else {
                rep << "method:        " << co.method_used << '\n'
                    << "n, m:          " << g.n() << ", " << g.m() << '\n'
                    << "paths:         " << co.result.size() << '\n'
                    << "claimed bound: " << co.result.claimed_bound << '\n'
                    << "verified:      " << (co.result.certified ? "yes" : "NO") << '\n'
                    << "retries:       " << co.result.retries << '\n'
                    << "patched:       " << co.result.patched << '\n'
                    << "runtime:       " << co.runtime_ms << " ms\n";
            }
            return co.result.certified ? 0 : 1;
        }

        if (*ver) {
            Graph g = load_graph(ver_graph);
            PathFamily fam = load_family(ver_family, g);
            auto rep = check_separator(g, fam);
            if (ver_json) {
                json j;
                j["is_separator"] = rep.is_separator;
                j["is_test_set"] = rep.is_test_set;
                j["uncovered_edges"] = rep.uncovered_edges;
                json pairs = json::array();
                for (const auto& up : rep.unseparated_pairs)
                    pairs.push_back({up.e, up.f});
                j["unseparated_pairs"] = pairs;
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "separator: " << (rep.is_separator ? "yes" : "no") << '\n'
                          << "test set:  " << (rep.is_test_set ? "yes" : "no") << '\n'
                          << "uncovered: " << rep.uncovered_edges.size() << '\n'
                          << "unseparated directed pairs: " << rep.unseparated_count << '\n';
                for (std::size_t i = 0; i < rep.unseparated_pairs.size() && i < 20; ++i) {
                    auto [e, f] = rep.unseparated_pairs[i];
                    auto [a, b] = g.edge(e);
                    auto [c, d] = g.edge(f);
                    std::cout << "  no path holds edge " << e << "=(" << a << "," << b
                              << ") without edge " << f << "=(" << c << "," << d << ")\n";
                }
            }
            return rep.is_separator ? 0 : 1;
        }

        if (*bnd) {
            Graph g = load_graph(bnd_graph);
            auto r = bounds_report(g);
            if (bnd_json) {
                json j;
                j["n"] = r.n;
                j["m"] = r.m;
                j["info_lb"] = r.info_lb;
                j["entropy_lb"] = r.entropy_lb ? json(*r.entropy_lb) : json(nullptr);
                j["log_form_lb"] = r.log_form_lb ? json(*r.log_form_lb) : json(nullptr);
                j["upper_general"] = r.upper_general;
                j["upper_cap_3nlogn"] = r.upper_cap;
                j["tree_exact"] = r.tree_exact ? json(*r.tree_exact) : json(nullptr);
                j["mintree_lb"] = r.mintree_lb ? json(*r.mintree_lb) : json(nullptr);
                j["hypercube_lb"] = r.hypercube_lb ? json(*r.hypercube_lb) : json(nullptr);
                j["hypercube_ub"] = r.hypercube_ub ? json(*r.hypercube_ub) : json(nullptr);
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "n, m:            " << r.n << ", " << r.m << '\n'
                          << "info lower:      " << r.info_lb << '\n';
                if (r.entropy_lb) std::cout << "entropy lower:   " << *r.entropy_lb << '\n';
                if (r.log_form_lb) std::cout << "log-form lower:  " << *r.log_form_lb << '\n';
                std::cout << "general upper:   " << r.upper_general << '\n'
                          << "3n log2 n cap:   " << r.upper_cap << '\n';
                if (r.tree_exact) std::cout << "forest exact:    " << *r.tree_exact << '\n';
                if (r.mintree_lb) std::cout << "min tree value:  " << *r.mintree_lb << '\n';
                if (r.hypercube_lb)
                    std::cout << "hypercube:       [" << *r.hypercube_lb << ", "
                              << *r.hypercube_ub << "]\n";
            }
            return 0;
        }

        if (*exc) {
            Graph g = load_graph(exc_graph);
            ExactOptions opt;
            if (const char* env = std::getenv("PATHSEP_MAX_EXACT_EDGES"))
                opt.max_edges = std::atoi(env);
            auto res = exact_psn(g, opt);
            if (exc_json) {
                json j;
                j["psn"] = res.psn;
                json w = json::array();
                for (const auto& p : res.witness.paths) w.push_back(p.vertices);
                j["witness"] = w;
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "psn = " << res.psn << '\n';
                std::ostringstream ss;
                emit_family(ss, res.witness);
                std::cout << ss.str();
            }
            return 0;
        }

        if (*sim) {
            Graph g = load_graph(sim_graph);
            PathFamily fam = load_family(sim_family, g);
            if (sim_fail != "all") {
                FaultScenario s{&g, &fam, std::nullopt};
                if (sim_fail != "none") {
                    int e = std::stoi(sim_fail);
                    if (e < 0 || e >= g.m()) throw std::runtime_error("edge id out of range");
                    s.failed_edge = e;
                }
                auto failing = observe(s);
                auto d1 = decode_signature(g, fam, failing);
                auto d2 = decode_intersection(g, fam, failing);
                auto name = [](const DecodeOutcome& d) {
                    switch (d.kind) {
                        case DecodeKind::NoFault: return std::string("no-fault");
                        case DecodeKind::Identified:
                            return "identified(" + std::to_string(d.edge) + ")";
                        case DecodeKind::Ambiguous:
                            return "ambiguous(" + std::to_string(d.candidates.size()) + ")";
                        default: return std::string("inconsistent");
                    }
                };
                std::cout << "failing tests:";
                for (int i : failing) std::cout << ' ' << i;
                std::cout << "\nsignature decode:    " << name(d1)
                          << "\nintersection decode: " << name(d2) << '\n';
                return 0;
            }
            auto rep = campaign(g, fam, sim_trials, sim_seed);
            if (sim_json) {
                json j;
                j["trials"] = rep.trials;
                j["identified_signature"] = rep.identified_sig;
                j["ambiguous_signature"] = rep.ambiguous_sig;
                j["missed_signature"] = rep.missed_sig;
                j["identified_intersection"] = rep.identified_int;
                j["ambiguous_intersection"] = rep.ambiguous_int;
                j["missed_intersection"] = rep.missed_int;
                j["no_fault_ok"] = rep.no_fault_ok;
                j["tests_per_edge_mean"] = rep.tests_per_edge_mean;
                j["family_size"] = rep.family_size;
                j["info_lb"] = rep.info_lb;
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "trials:                 " << rep.trials << '\n'
                          << "identified (signature): " << rep.identified_sig << " ("
                          << 100.0 * rep.identification_rate_sig() << "%)\n"
                          << "ambiguous  (signature): " << rep.ambiguous_sig << '\n'
                          << "missed as no-fault:     " << rep.missed_sig << '\n'
                          << "identified (intersect): " << rep.identified_int << '\n'
                          << "no-fault detection:     " << (rep.no_fault_ok ? "ok" : "BROKEN")
                          << '\n'
                          << "tests per edge (mean):  " << rep.tests_per_edge_mean << '\n'
                          << "family size vs info lb: " << rep.family_size << " vs "
                          << rep.info_lb << '\n';
            }
            return 0;
        }

        if (*ben) return cmd_bench(ben_suite);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

namespace {

int cmd_bench(const std::string& suite) {
    struct Row {
        std::string name;
        Graph g;
        std::string method;
        std::optional<double> p;
    };
    std::vector<Row> rows;
    rows.push_back({"path-12", gen_path(12), "forest", {}});
    rows.push_back({"star-9", gen_star(9), "forest", {}});
    rows.push_back({"tree-40", gen_random_tree(40, 7), "forest", {}});
    rows.push_back({"extremal-20", gen_extremal_tree(20), "forest", {}});
    rows.push_back({"K8", gen_complete(8), "general", {}});
    rows.push_back({"K16", gen_complete(16), "complete", {}});
    rows.push_back({"Q4", gen_hypercube(4), "hypercube", {}});
    rows.push_back({"petersen", petersen(), "general", {}});
    if (suite == "acceptance") {
        rows.push_back({"K40", gen_complete(40), "complete", {}});
        rows.push_back({"Q6", gen_hypercube(6), "hypercube", {}});
        rows.push_back({"gnp-100-0.3", gen_gnp(100, 0.3, 11), "general", {}});
        rows.push_back({"gnp-100-0.46", gen_gnp(100, 0.4605, 11), "gnp", 0.4605});
    }
    std::printf("%-14s %5s %6s %6s %8s %10s %9s %8s\n", "instance", "n", "m", "size",
                "claimed", "entropy_lb", "verified", "ms");
    for (auto& row : rows) {
        auto co = run_construct(row.g, row.method, 1, row.p);
        double elb = (row.g.n() >= 2 && row.g.m() >= row.g.n())
                         ? entropy_lower_bound(row.g.n(), row.g.m()).entropy_form
                         : 0.0;
        std::printf("%-14s %5d %6d %6d %8lld %10.2f %9s %8.1f\n", row.name.c_str(),
                    row.g.n(), row.g.m(), co.result.size(),
                    static_cast<long long>(co.result.claimed_bound), elb,
                    co.result.certified ? "yes" : "NO", co.runtime_ms);
    }
    return 0;
}

} // namespace
