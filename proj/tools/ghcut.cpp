#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghcut/gen.hpp"
#include "ghcut/ghtree.hpp"
#include "ghcut/io.hpp"
#include "ghcut/oracles.hpp"
#include "ghcut/packing.hpp"
#include "ghcut/stats.hpp"
#include "ghcut/verify.hpp"

using namespace ghcut;
using nlohmann::json;

namespace {

std::uint64_t env_seed() {
    const char* s = std::getenv("GHCUT_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 1;
}

Graph load_graph(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    return read_graph_file(path);
}

std::vector<VertexId> load_terminals(const std::string& spec, const Graph& g) {
    std::vector<VertexId> u;
    if (spec.empty() || spec == "all") {
        u.resize(g.num_vertices());
        for (VertexId v = 0; v < g.num_vertices(); ++v) u[v] = v;
        return u;
    }
    std::ifstream in(spec);
    if (!in) throw std::runtime_error("cannot open terminal file: " + spec);
    VertexId v;
    while (in >> v) u.push_back(v);
    if (u.empty()) throw std::runtime_error("terminal file is empty: " + spec);
    return u;
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open output file: " + out);
    f << text;
}

int cmd_ghtree(const std::string& input, const std::string& algo,
               const std::string& terminals, std::uint64_t seed, bool validate,
               bool as_json, const std::string& out, int k, double trials_factor) {
    Graph g = load_graph(input);
    std::vector<VertexId> u = load_terminals(terminals, g);

    GhConfig cfg;
    cfg.seed = seed;
    cfg.ssmc.k = k;
    cfg.ssmc.sampling_trials_factor = trials_factor;
    GhTree t;
    if (algo == "classic") {
        if (u.size() != static_cast<std::size_t>(g.num_vertices()))
            throw std::runtime_error("classic supports only --terminals all");
        t = gomory_hu_classic(g);
    } else if (algo == "gusfield") {
        if (u.size() != static_cast<std::size_t>(g.num_vertices()))
            throw std::runtime_error("gusfield supports only --terminals all");
        t = gusfield(g);
    } else {
        t = ghtree_fast(g, u, cfg);
    }

    if (validate) {
        TreeViolation v = validate_ghtree(g, t);
        if (!v.ok) {
            std::cerr << "validation failed: " << v.what << "\n";
            return 2;
        }
        std::cerr << "validation: ok\n";
    }

    if (as_json) {
        write_output(out, tree_to_json(t) + "\n");
    } else {
        std::ostringstream s;
        write_tree(s, t);
        write_output(out, s.str());
    }
    return 0;
}

int cmd_query(const std::string& tree_path, const std::vector<std::string>& pairs,
              bool all, bool as_json, const std::string& out) {
    GhTree t = read_tree_file(tree_path);
    std::ostringstream s;
    json rows = json::array();
    auto emit = [&](VertexId a, VertexId b, Weight lam) {
        if (as_json)
            rows.push_back({{"a", a}, {"b", b}, {"lambda", lam}});
        else
            s << a << " " << b << " " << lam << "\n";
    };
    if (all) {
        for (std::size_t i = 0; i < t.terminals.size(); ++i)
            for (std::size_t j = i + 1; j < t.terminals.size(); ++j) {
                VertexId a = t.terminals[i], b = t.terminals[j];
                emit(a, b, tree_query(t, a, b).value);
            }
    } else {
        if (pairs.empty()) throw CLI::ValidationError("query", "no pairs given");
        for (const std::string& p : pairs) {
            std::istringstream ps(p);
            VertexId a, b;
            char comma;
            if (!(ps >> a >> comma >> b) || comma != ',')
                throw CLI::ValidationError("query", "pair must be a,b: " + p);
            emit(a, b, tree_query(t, a, b).value);
        }
    }
    if (as_json)
        write_output(out, json{{"schema", 1}, {"queries", rows}}.dump(2) + "\n");
    else
        write_output(out, s.str());
    return 0;
}

int cmd_pack(const std::string& input, const std::string& terminals, double eps,
             bool as_json, const std::string& out) {
    Graph g = load_graph(input);
    std::vector<VertexId> u = load_terminals(terminals, g);
    Packing p = mwu_pack(g, u, eps);
    Weight lam = steiner_mincut(g, u);

    std::vector<double> load(g.num_edges(), 0.0);
    for (std::size_t i = 0; i < p.subgraphs.size(); ++i)
        for (int id : p.subgraphs[i].edge_ids) load[id] += p.values[i];
    bool feasible = true;
    for (int id = 0; id < g.num_edges(); ++id)
        if (load[id] > static_cast<double>(g.edge(id).w) * (1.0 + 1e-9)) feasible = false;

    double ratio = lam > 0 ? p.total_value / static_cast<double>(lam) : 0.0;
    if (as_json) {
        json j{{"schema", 1},
               {"total_value", p.total_value},
               {"lambda_u", lam},
               {"ratio", ratio},
               {"subgraphs", p.subgraphs.size()},
               {"iterations", p.iterations},
               {"feasible", feasible}};
        write_output(out, j.dump(2) + "\n");
    } else {
        std::ostringstream s;
        s << "total_value " << p.total_value << "\n"
          << "lambda(U)   " << lam << "\n"
          << "ratio       " << ratio << "\n"
          << "subgraphs   " << p.subgraphs.size() << "\n"
          << "feasible    " << (feasible ? "yes" : "no") << "\n";
        write_output(out, s.str());
    }
    return feasible ? 0 : 2;
}

int cmd_bench(const std::vector<int>& sizes, const std::vector<double>& densities,
              const std::vector<std::uint64_t>& seeds,
              const std::vector<std::string>& algos, Weight max_w,
              const std::string& out) {
    json rows = json::array();
    for (int n : sizes)
        for (double d : densities)
            for (std::uint64_t seed : seeds)
                for (const std::string& algo : algos) {
                    int m = static_cast<int>(d * n);
                    Graph g = random_connected_graph(n, m, max_w, seed);
                    std::vector<VertexId> u(n);
                    for (VertexId v = 0; v < n; ++v) u[v] = v;
                    stats::reset();
                    auto start = std::chrono::steady_clock::now();
                    GhTree t;
                    if (algo == "classic")
                        t = gomory_hu_classic(g);
                    else if (algo == "gusfield")
                        t = gusfield(g);
                    else {
                        GhConfig cfg;
                        cfg.seed = seed;
                        t = ghtree_fast(g, u, cfg);
                    }
                    double secs =
                        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                      start)
                            .count();
                    stats::Snapshot st = stats::snapshot();
                    rows.push_back({{"schema", 1},
                                    {"algo", algo},
                                    {"n", n},
                                    {"m", g.num_edges()},
                                    {"seed", seed},
                                    {"seconds", secs},
                                    {"maxflow_calls", st.maxflow_calls},
                                    {"flow_vertices", st.flow_vertices},
                                    {"flow_edges", st.flow_edges},
                                    {"retries", st.ghtree_retries},
                                    {"step_fallbacks", st.ghtree_step_fallbacks},
                                    {"max_depth", st.max_recursion_depth},
                                    {"tree_edges", t.edges.size()}});
                }
    write_output(out, rows.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gomory-Hu cut trees and all-pairs max-flow"};
    app.require_subcommand(1);

    std::string input, out, terminals, tree_path, algo = "fast";
    std::uint64_t seed = env_seed();
    bool validate = false, as_json = false, all = false;
    int k = 4, threads = 1;
    double trials_factor = 3.0, eps = 0.1;
    std::vector<std::string> pairs, algos{"fast"};
    std::vector<int> sizes{64};
    std::vector<double> densities{3.0};
    std::vector<std::uint64_t> seeds{1};
    Weight max_w = 100;

    CLI::App* ght = app.add_subcommand("ghtree", "build a cut tree");
    ght->add_option("input", input, "graph file or - for stdin")->required();
    ght->add_option("--algo", algo, "classic|gusfield|fast")
        ->check(CLI::IsMember({"classic", "gusfield", "fast"}));
    ght->add_option("--terminals", terminals, "terminal file or 'all'");
    ght->add_option("--seed", seed, "RNG seed (default GHCUT_SEED or 1)");
    ght->add_option("--k", k, "guide-tree respect parameter");
    ght->add_option("--trials-factor", trials_factor, "half-sampling trial factor");
    ght->add_option("--threads", threads, "accepted for compatibility; single-threaded");
    ght->add_flag("--validate", validate, "validate the tree before writing");
    ght->add_flag("--json", as_json, "JSON output");
    ght->add_option("-o,--out", out, "output path (default stdout)");

    CLI::App* qry = app.add_subcommand("query", "query a stored tree");
    qry->add_option("tree", tree_path, "tree file")->required();
    qry->add_option("pairs", pairs, "pairs as a,b");
    qry->add_flag("--all", all, "all terminal pairs");
    qry->add_flag("--json", as_json, "JSON output");
    qry->add_option("-o,--out", out, "output path (default stdout)");

    CLI::App* pck = app.add_subcommand("pack", "pack Steiner subgraphs");
    pck->add_option("input", input, "graph file or - for stdin")->required();
    pck->add_option("--terminals", terminals, "terminal file or 'all'");
    pck->add_option("--epsilon", eps, "MWU accuracy");
    pck->add_flag("--json", as_json, "JSON output");
    pck->add_option("-o,--out", out, "output path (default stdout)");

    CLI::App* ben = app.add_subcommand("bench", "benchmark constructors");
    ben->add_option("--sizes", sizes, "vertex counts");
    ben->add_option("--densities", densities, "edges per vertex");
    ben->add_option("--seeds", seeds, "RNG seeds");
    ben->add_option("--algos", algos, "constructors to time");
    ben->add_option("--max-weight", max_w, "max edge weight");
    ben->add_option("-o,--out", out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ght->parsed())
            return cmd_ghtree(input, algo, terminals, seed, validate, as_json, out, k,
                              trials_factor);
        if (qry->parsed()) return cmd_query(tree_path, pairs, all, as_json, out);
        if (pck->parsed()) return cmd_pack(input, terminals, eps, as_json, out);
        if (ben->parsed()) return cmd_bench(sizes, densities, seeds, algos, max_w, out);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
