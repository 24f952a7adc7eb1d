#include "ghcut/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ghcut {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> out;
    std::string t;
    while (iss >> t) out.push_back(t);
    return out;
}

long long to_int(const std::string& s, int line, const std::string& what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer " + what + ", got '" + s + "'");
    }
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long n = -1, m = -1;
    std::vector<RawEdge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (tok.size() != 4 || tok[1] != "ghct")
                throw ParseError(lineno, "header must be 'p ghct <n> <m>'");
            n = to_int(tok[2], lineno, "vertex count");
            m = to_int(tok[3], lineno, "edge count");
            if (n < 0 || m < 0) throw ParseError(lineno, "negative size in header");
            have_header = true;
            continue;
        }
        if (tok[0] == "e") {
            if (!have_header) throw ParseError(lineno, "edge line before header");
            if (tok.size() != 4) throw ParseError(lineno, "edge line must be 'e <u> <v> <w>'");
            long long u = to_int(tok[1], lineno, "endpoint");
            long long v = to_int(tok[2], lineno, "endpoint");
            long long w = to_int(tok[3], lineno, "weight");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "endpoint out of range [1," + std::to_string(n) + "]");
            if (w <= 0) throw ParseError(lineno, "weight must be positive");
            edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), w});
            continue;
        }
        if (have_header) throw ParseError(lineno, "unrecognized line '" + tok[0] + "'");
        // Headerless edge-list: `u v w` per line, 0-based ids.
        if (tok.size() != 3) throw ParseError(lineno, "edge list line must be '<u> <v> <w>'");
        long long u = to_int(tok[0], lineno, "endpoint");
        long long v = to_int(tok[1], lineno, "endpoint");
        long long w = to_int(tok[2], lineno, "weight");
        if (u < 0 || v < 0) throw ParseError(lineno, "negative vertex id");
        if (w <= 0) throw ParseError(lineno, "weight must be positive");
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), w});
    }
    if (!have_header) {
        n = 0;
        for (const RawEdge& e : edges) n = std::max({n, static_cast<long long>(e.u) + 1,
                                                     static_cast<long long>(e.v) + 1});
    } else if (m != static_cast<long long>(edges.size())) {
        throw ParseError(lineno, "header promised " + std::to_string(m) + " edges, got " +
                                     std::to_string(edges.size()));
    }
    try {
        return Graph::build(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p ghct " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges())
        out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
}

void write_tree(std::ostream& out, const GhTree& t) {
    out << "t " << t.terminals.size() << '\n';
    for (const GhTreeEdge& e : t.edges) out << "T " << e.a << ' ' << e.b << ' ' << e.w << '\n';
    std::vector<char> is_term(t.f.size(), 0);
    for (VertexId u : t.terminals) is_term[u] = 1;
    for (VertexId v = 0; v < static_cast<VertexId>(t.f.size()); ++v)
        if (!is_term[v]) out << "F " << v << ' ' << t.f[v] << '\n';
}

GhTree read_tree(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long u_count = -1;
    std::vector<GhTreeEdge> edges;
    std::vector<std::pair<VertexId, VertexId>> fmap;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "t") {
            if (u_count >= 0) throw ParseError(lineno, "duplicate tree header");
            if (tok.size() != 2) throw ParseError(lineno, "header must be 't <|U|>'");
            u_count = to_int(tok[1], lineno, "terminal count");
            if (u_count < 1) throw ParseError(lineno, "terminal count must be positive");
        } else if (tok[0] == "T") {
            if (tok.size() != 4) throw ParseError(lineno, "edge line must be 'T <a> <b> <w>'");
            edges.push_back({static_cast<VertexId>(to_int(tok[1], lineno, "terminal")),
                             static_cast<VertexId>(to_int(tok[2], lineno, "terminal")),
                             to_int(tok[3], lineno, "weight")});
        } else if (tok[0] == "F") {
            if (tok.size() != 3) throw ParseError(lineno, "mapping line must be 'F <v> <rep>'");
            fmap.push_back({static_cast<VertexId>(to_int(tok[1], lineno, "vertex")),
                            static_cast<VertexId>(to_int(tok[2], lineno, "representative"))});
        } else {
            throw ParseError(lineno, "unrecognized line '" + tok[0] + "'");
        }
    }
    if (u_count < 0) throw ParseError(lineno, "missing 't' header");
    if (static_cast<long long>(edges.size()) != u_count - 1)
        throw ParseError(lineno, "expected " + std::to_string(u_count - 1) + " tree edges, got " +
                                     std::to_string(edges.size()));

    long long n = u_count + static_cast<long long>(fmap.size());
    std::vector<char> non_term(n, 0);
    for (auto [v, rep] : fmap) {
        if (v < 0 || v >= n) throw ParseError(lineno, "mapped vertex out of range");
        if (non_term[v]) throw ParseError(lineno, "duplicate mapping for vertex " +
                                                      std::to_string(v));
        non_term[v] = 1;
    }
    GhTree t;
    t.f.assign(n, -1);
    for (VertexId v = 0; v < n; ++v)
        if (!non_term[v]) {
            t.terminals.push_back(v);
            t.f[v] = v;
        }
    for (auto [v, rep] : fmap) {
        if (rep < 0 || rep >= n || non_term[rep])
            throw ParseError(lineno, "representative " + std::to_string(rep) +
                                         " is not a terminal");
        t.f[v] = rep;
    }
    for (const GhTreeEdge& e : edges)
        if (e.a < 0 || e.a >= n || non_term[e.a] || e.b < 0 || e.b >= n || non_term[e.b])
            throw ParseError(lineno, "tree edge endpoint is not a terminal");
    t.edges = edges;
    return t;
}

GhTree read_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_tree(in);
}

std::string tree_to_json(const GhTree& t) {
    nlohmann::json j;
    j["schema"] = 1;
    j["terminals"] = t.terminals;
    j["edges"] = nlohmann::json::array();
    for (const GhTreeEdge& e : t.edges)
        j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"w", e.w}});
    nlohmann::json f = nlohmann::json::object();
    for (std::size_t v = 0; v < t.f.size(); ++v) f[std::to_string(v)] = t.f[v];
    j["f"] = f;
    return j.dump(2);
}

GhTree tree_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GhTree t;
    t.terminals = j.at("terminals").get<std::vector<VertexId>>();
    for (const auto& e : j.at("edges"))
        t.edges.push_back({e.at("a").get<VertexId>(), e.at("b").get<VertexId>(),
                           e.at("w").get<Weight>()});
    const auto& f = j.at("f");
    t.f.assign(f.size(), -1);
    for (auto it = f.begin(); it != f.end(); ++it) {
        std::size_t v = std::stoull(it.key());
        if (v >= t.f.size()) t.f.resize(v + 1, -1);
        t.f[v] = it.value().get<VertexId>();
    }
    return t;
}

}  // namespace ghcut
