#ifndef HPD_GRAPH_HPP
#define HPD_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hpd {

// Undirected graph on vertices 0..n-1 with dense bit-matrix adjacency.
// Symmetric and loop-free by construction; copies are independent values.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int words_per_row() const { return words_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void set_edge(int u, int v, bool present);
    void toggle_edge(int u, int v) { set_edge(u, v, !adjacent(u, v)); }

    long long edge_count() const;
    int degree(int v) const;

    std::span<const std::uint64_t> row(int v) const {
        check_vertex(v);
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    // Edges as (u, v) with u < v, lexicographically ordered.
    std::vector<std::pair<int, int>> edges() const;

    std::uint64_t content_hash() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

template <class F>
void for_each_neighbor(const Graph& g, int u, F f) {
    auto row = g.row(u);
    for (std::size_t w = 0; w < row.size(); ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
            int v = static_cast<int>(w * 64) + __builtin_ctzll(bits);
            f(v);
            bits &= bits - 1;
        }
    }
}

// Complete weighted graph on k vertices: symmetric k x k matrix with entries
// in [0, 1], diagonal included.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int k);
    static WeightedGraph from_rows(const std::vector<std::vector<double>>& rows);

    int k() const { return k_; }

    double at(int i, int j) const {
        check_index(i);
        check_index(j);
        return w_[static_cast<std::size_t>(i) * k_ + j];
    }

    // Sets both (i, j) and (j, i); rejects values outside [0, 1].
    void set(int i, int j, double v);

    const std::vector<double>& raw() const { return w_; }

    std::vector<std::vector<double>> rows() const;
    std::uint64_t content_hash() const;

    bool operator==(const WeightedGraph&) const = default;

private:
    void check_index(int i) const;

    int k_ = 0;
    std::vector<double> w_;
};

// --- constructions -------------------------------------------------------

Graph graph_from_edge_list(int n, std::span<const std::pair<int, int>> edges);
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

// G(n, p) with one Bernoulli draw per unordered pair, pairs in lexicographic
// order, so results are reproducible from the seed alone.
Graph random_graph(int n, double p, std::uint64_t seed);

// 0/1 weights (zero diagonal) matching the graph's adjacency.
WeightedGraph as_weighted(const Graph& g);

// Class of vertex v when n vertices are split into k near-equal contiguous
// index blocks (used by sample_from_weighted).
int blow_up_class(int v, int n, int k);

// Random n-vertex graph where the pair (u, v) is an edge with probability
// w(class(u), class(v)); same-class pairs use the diagonal weight.
Graph sample_from_weighted(const WeightedGraph& r, int n, std::uint64_t seed);

// Subgraph induced by the listed vertices (distinct, in the given order).
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Uniformly random q-subset of V(g), reported in ascending vertex order.
Graph random_induced_subgraph(const Graph& g, int q, std::uint64_t seed);

// --- file formats --------------------------------------------------------

// Edge-list text: first line "n m", then m lines "u v" with 0-based vertices.
// Duplicate edges collapse; loops and out-of-range endpoints are rejected.
Graph load_edge_list(std::istream& in, const std::string& path_for_errors);
Graph load_edge_list_file(const std::string& path);
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::string& path);

// WeightedGraph JSON: {"k": k, "w": [[...], ...]} row-major, symmetric,
// entries in [0, 1]; validated on load.
WeightedGraph load_weighted_json_file(const std::string& path);
std::string weighted_to_json_string(const WeightedGraph& r);
void save_weighted_json_file(const WeightedGraph& r, const std::string& path);

}  // namespace hpd

#endif
