#include "hpd/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hpd/errors.hpp"
#include "hpd/hash.hpp"
#include "hpd/rng.hpp"
#include "json.hpp"

namespace hpd {

// --- Graph ----------------------------------------------------------------

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n_) + ")");
}

void Graph::set_edge(int u, int v, bool present) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    std::uint64_t ubit = std::uint64_t{1} << (v & 63);
    std::uint64_t vbit = std::uint64_t{1} << (u & 63);
    std::size_t ui = static_cast<std::size_t>(u) * words_ + (v >> 6);
    std::size_t vi = static_cast<std::size_t>(v) * words_ + (u >> 6);
    if (present) {
        bits_[ui] |= ubit;
        bits_[vi] |= vbit;
    } else {
        bits_[ui] &= ~ubit;
        bits_[vi] &= ~vbit;
    }
}

long long Graph::edge_count() const {
    long long total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total / 2;
}

int Graph::degree(int v) const {
    int d = 0;
    for (std::uint64_t w : row(v)) d += std::popcount(w);
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::uint64_t Graph::content_hash() const {
    std::uint64_t h = fnv1a64(&n_, sizeof n_);
    if (!bits_.empty()) h = fnv1a64(bits_.data(), bits_.size() * sizeof(std::uint64_t), h);
    return h;
}

// --- WeightedGraph ----------------------------------------------------------

WeightedGraph::WeightedGraph(int k) {
    if (k < 1) throw std::invalid_argument("WeightedGraph: vertex count must be at least 1");
    k_ = k;
    w_.assign(static_cast<std::size_t>(k) * k, 0.0);
}

void WeightedGraph::check_index(int i) const {
    if (i < 0 || i >= k_)
        throw std::invalid_argument("WeightedGraph: index " + std::to_string(i) + " out of range [0, " +
                                    std::to_string(k_) + ")");
}

void WeightedGraph::set(int i, int j, double v) {
    check_index(i);
    check_index(j);
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument("WeightedGraph: weight " + std::to_string(v) + " outside [0, 1]");
    w_[static_cast<std::size_t>(i) * k_ + j] = v;
    w_[static_cast<std::size_t>(j) * k_ + i] = v;
}

WeightedGraph WeightedGraph::from_rows(const std::vector<std::vector<double>>& rows) {
    int k = static_cast<int>(rows.size());
    WeightedGraph r(k);
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(rows[i].size()) != k)
            throw std::invalid_argument("WeightedGraph: matrix is not square");
        for (int j = 0; j < k; ++j) {
            double v = rows[i][j];
            if (!std::isfinite(v) || v < 0.0 || v > 1.0)
                throw std::invalid_argument("WeightedGraph: weight outside [0, 1] at (" + std::to_string(i) +
                                            ", " + std::to_string(j) + ")");
            if (rows[j][i] != v)
                throw std::invalid_argument("WeightedGraph: matrix is not symmetric at (" + std::to_string(i) +
                                            ", " + std::to_string(j) + ")");
        }
    }
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) r.set(i, j, rows[i][j]);
    return r;
}

std::vector<std::vector<double>> WeightedGraph::rows() const {
    std::vector<std::vector<double>> out(k_, std::vector<double>(k_));
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) out[i][j] = at(i, j);
    return out;
}

std::uint64_t WeightedGraph::content_hash() const {
    std::uint64_t h = fnv1a64(&k_, sizeof k_);
    if (!w_.empty()) h = fnv1a64(w_.data(), w_.size() * sizeof(double), h);
    return h;
}

// --- constructions -------------------------------------------------------

Graph graph_from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.set_edge(u, v, true);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set_edge(u, v, true);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.set_edge(v, (v + 1) % n, true);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need at least 1 vertex");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1, true);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite: negative part size");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.set_edge(u, v, true);
    return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_graph: p outside [0, 1]");
    Graph g(n);
    Rng rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.set_edge(u, v, true);
    return g;
}

WeightedGraph as_weighted(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("as_weighted: graph must have at least 1 vertex");
    WeightedGraph r(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) r.set(u, v, 1.0);
    return r;
}

int blow_up_class(int v, int n, int k) {
    // 1-based ceil((v+1) * k / n), shifted to 0-based: near-equal contiguous blocks.
    return static_cast<int>((static_cast<long long>(v + 1) * k + n - 1) / n) - 1;
}

Graph sample_from_weighted(const WeightedGraph& r, int n, std::uint64_t seed) {
    int k = r.k();
    if (n < k) throw std::invalid_argument("sample_from_weighted: need n >= k");
    Graph g(n);
    Rng rng(seed);
    for (int u = 0; u < n; ++u) {
        int cu = blow_up_class(u, n, k);
        for (int v = u + 1; v < n; ++v) {
            if (rng.bernoulli(r.at(cu, blow_up_class(v, n, k)))) g.set_edge(u, v, true);
        }
    }
    return g;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    int q = static_cast<int>(vertices.size());
    std::vector<char> seen(g.n(), 0);
    for (int v : vertices) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (seen[v]) throw std::invalid_argument("induced_subgraph: duplicate vertex");
        seen[v] = 1;
    }
    Graph sub(q);
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            if (g.adjacent(vertices[a], vertices[b])) sub.set_edge(a, b, true);
    return sub;
}

Graph random_induced_subgraph(const Graph& g, int q, std::uint64_t seed) {
    if (q < 0 || q > g.n()) throw std::invalid_argument("random_induced_subgraph: bad subset size");
    Rng rng(seed);
    std::vector<int> ids(g.n());
    for (int i = 0; i < g.n(); ++i) ids[i] = i;
    for (int i = 0; i < q; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n() - i)));
        std::swap(ids[i], ids[j]);
    }
    std::vector<int> chosen(ids.begin(), ids.begin() + q);
    std::sort(chosen.begin(), chosen.end());
    return induced_subgraph(g, chosen);
}

// --- edge-list text format -------------------------------------------------

Graph load_edge_list(std::istream& in, const std::string& path) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        if (required) throw ParseError(path, lineno, "unexpected end of file");
        return false;
    };

    next_line(true);
    std::istringstream head(line);
    long long n = -1, m = -1;
    std::string extra;
    if (!(head >> n >> m) || (head >> extra))
        throw ParseError(path, lineno, "expected header \"n m\"");
    if (n < 0 || m < 0) throw ParseError(path, lineno, "negative counts in header");

    Graph g(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        next_line(true);
        std::istringstream row(line);
        long long u = -1, v = -1;
        if (!(row >> u >> v) || (row >> extra))
            throw ParseError(path, lineno, "expected edge line \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(path, lineno, "edge endpoint out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(path, lineno, "loops are not allowed");
        g.set_edge(static_cast<int>(u), static_cast<int>(v), true);
    }
    if (next_line(false)) throw ParseError(path, lineno, "trailing content after " + std::to_string(m) + " edges");
    return g;
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return load_edge_list(in, path);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    auto es = g.edges();
    out << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path, 0, "cannot open file for writing");
    save_edge_list(g, out);
}

// --- WeightedGraph JSON ------------------------------------------------------

namespace {

int line_of_byte(const std::string& text, std::size_t byte) {
    int line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

}  // namespace

WeightedGraph load_weighted_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path, line_of_byte(text, e.byte), std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("k") || !j.contains("w"))
        throw ParseError(path, 0, "expected object with \"k\" and \"w\"");
    if (!j["k"].is_number_integer() || j["k"].get<long long>() < 1)
        throw ParseError(path, 0, "\"k\" must be a positive integer");
    int k = j["k"].get<int>();
    if (!j["w"].is_array() || static_cast<int>(j["w"].size()) != k)
        throw ParseError(path, 0, "\"w\" must be a k x k array");
    std::vector<std::vector<double>> rows(k);
    for (int i = 0; i < k; ++i) {
        const auto& row = j["w"][i];
        if (!row.is_array() || static_cast<int>(row.size()) != k)
            throw ParseError(path, 0, "\"w\" row " + std::to_string(i) + " is not length " + std::to_string(k));
        for (const auto& cell : row) {
            if (!cell.is_number()) throw ParseError(path, 0, "\"w\" entries must be numbers");
            rows[i].push_back(cell.get<double>());
        }
    }
    try {
        return WeightedGraph::from_rows(rows);
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, 0, e.what());
    }
}

std::string weighted_to_json_string(const WeightedGraph& r) {
    nlohmann::json j;
    j["k"] = r.k();
    j["w"] = r.rows();
    return j.dump();
}

void save_weighted_json_file(const WeightedGraph& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path, 0, "cannot open file for writing");
    out << weighted_to_json_string(r) << '\n';
}

}  // namespace hpd
