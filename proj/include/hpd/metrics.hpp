#ifndef HPD_METRICS_HPP
#define HPD_METRICS_HPP

#include <cstdint>
#include <vector>

#include "hpd/graph.hpp"
#include "hpd/property.hpp"
#include "hpd/rational.hpp"

namespace hpd {

// |E(g) symmetric-difference E(h)| / n^2, counting unordered pairs.
double edit_distance(const Graph& g, const Graph& h);

// Mean absolute weight difference over all ordered pairs incl. diagonal.
double d1(const WeightedGraph& a, const WeightedGraph& b);
Rat d1_rational(const RatMatrix& a, const RatMatrix& b);

// Optimal fractional cut vectors. `value` is the signed normalized bilinear
// form at (alpha, beta); the distance equals |value|.
struct CutWitness {
    std::vector<double> alpha;
    std::vector<double> beta;
    double value = 0.0;
};

struct CutResult {
    double distance = 0.0;
    CutWitness witness;
};

inline constexpr int kCutExactCap = 22;

// max over alpha, beta in [0,1]^k of |sum alpha(x) (A - B)(x, y) beta(y)| / k^2.
// The bilinear form attains its maximum at 0/1 vectors, so alpha is
// enumerated (Gray code) and beta optimized per sign; exact up to k = 22.
CutResult cut_distance_exact(const WeightedGraph& a, const WeightedGraph& b);

// Alternating maximization from `restarts` random 0/1 starts; deterministic
// given the seed, never exceeds the exact value, monotone in restarts.
CutResult cut_distance_heuristic(const WeightedGraph& a, const WeightedGraph& b, int restarts,
                                 std::uint64_t seed);

inline constexpr int kOracleDefaultCap = 8;

struct PropertyDistance {
    double distance = 0.0;   // edits / n^2
    long long edits = 0;
    Graph witness;           // a nearest graph with the property
};

// Exact minimal unordered-pair edit distance from g to the hereditary
// property Forb(family), by iterative deepening over edit budgets with a
// branch-on-forbidden-copy search (deletions tried before additions inside
// each copy). Throws PropertyEmptyError when no graph on n vertices
// satisfies the property.
PropertyDistance distance_to_property_exact(const Graph& g, const PropertySpec& spec,
                                            int max_n = kOracleDefaultCap);

}  // namespace hpd

#endif
