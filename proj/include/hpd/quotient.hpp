#ifndef HPD_QUOTIENT_HPP
#define HPD_QUOTIENT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hpd/graph.hpp"
#include "hpd/partition.hpp"
#include "hpd/rational.hpp"

namespace hpd {

// Ordered adjacent-pair counts between classes: counts(i, j) is the number of
// ordered pairs (u, v) with u in class i, v in class j, and uv an edge. Each
// intra-class edge therefore contributes 2 to counts(i, i).
struct PairCount {
    int k = 0;
    std::vector<int> sizes;
    std::vector<long long> counts;  // k x k row-major

    long long at(int i, int j) const { return counts[static_cast<std::size_t>(i) * k + j]; }
    double density(int i, int j) const {
        return static_cast<double>(at(i, j)) / (static_cast<double>(sizes[i]) * sizes[j]);
    }
};

PairCount pair_counts(const Graph& g, const Equipartition& p);

// Reduced graph: weight(i, j) = counts(i, j) / (|V_i| |V_j|); the diagonal
// uses the doubled intra-class count over |V_i|^2.
WeightedGraph reduce(const Graph& g, const Equipartition& p);
RatMatrix reduce_rational(const Graph& g, const Equipartition& p);

// n-vertex weighted graph assigning every pair (u, v) — including u = v —
// the reduced density of its class pair.
WeightedGraph blow_up_reduced(const Graph& g, const Equipartition& p);

// How an equipartition is searched for: exhaustive enumeration (bounded by
// max_exact_n) or seeded local search with `budget` restarts.
struct SearchMode {
    enum class Kind { Exact, Heuristic };
    Kind kind = Kind::Exact;
    int budget = 32;
    std::uint64_t seed = 0;
    int max_exact_n = kDefaultEnumerationCap;

    static SearchMode exact(int max_n = kDefaultEnumerationCap) {
        SearchMode m;
        m.kind = Kind::Exact;
        m.max_exact_n = max_n;
        return m;
    }
    static SearchMode heuristic(int budget, std::uint64_t seed) {
        SearchMode m;
        m.kind = Kind::Heuristic;
        m.budget = budget;
        m.seed = seed;
        return m;
    }
};

// Minimizes an objective of the class-pair counts over equipartitions of g
// into k labeled classes. Exact mode scans the full enumeration, scoring all
// k! class relabelings of each partition so label-sensitive objectives are
// covered; heuristic mode runs steepest-descent local search (vertex swaps
// plus legal single moves) from `budget` random starts. Ties keep the first
// candidate encountered.
struct ArgminResult {
    double value = 0.0;
    Equipartition partition;
};
using CountsObjective = std::function<double(const PairCount&)>;
ArgminResult argmin_over_equipartitions(const Graph& g, int k, const CountsObjective& objective,
                                        const SearchMode& mode);

// Is some k-class quotient of g within mean absolute deviation 2/k of R?
// Exact mode decides; heuristic mode is one-sided (a witness proves yes).
struct ReducibilityResult {
    bool member = false;
    double best_d1 = 0.0;
    std::optional<Equipartition> witness;
};
ReducibilityResult is_almost_reducible(const Graph& g, const WeightedGraph& r, const SearchMode& mode);

// Edits g's cross-class pairs so the quotient moves toward target densities:
// for each class pair i < j, removes (or adds) exactly
// floor(|R(i,j) - S(i,j)| |V_i| |V_j|) edges (non-edges), lexicographically.
Graph round_to_target(const Graph& g, const Equipartition& p, const WeightedGraph& s);

}  // namespace hpd

#endif
