#ifndef HPD_HOMDENSITY_HPP
#define HPD_HOMDENSITY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hpd/graph.hpp"
#include "hpd/property.hpp"
#include "hpd/rational.hpp"

namespace hpd {

// Map from pattern vertices to host vertices; need not be injective.
using MapAssignment = std::vector<int>;

// Work cap for exact map enumeration (number of maps, default 1e8);
// overridable via the HPDIST_WORK_CAP environment variable.
long long hom_work_cap();

// Induced homomorphism weight of one map: over all vertex pairs of F, edges
// contribute R(phi(i), phi(j)) and non-edges contribute 1 - R(phi(i),
// phi(j)); colliding pairs read the diagonal.
double hom_weight(const Graph& f, const WeightedGraph& r, std::span<const int> image);

struct HomEstimate {
    double value = 0.0;
    double std_error = 0.0;   // zero for exact evaluations
    long long samples = 0;    // maps evaluated
    bool exact = true;
};

// Average induced homomorphism weight over all k^f maps (exact; throws
// CapExceededError when k^f exceeds the work cap).
HomEstimate hom_density_weighted(const Graph& f, const WeightedGraph& r);
// Unbiased Monte-Carlo mean over uniform maps, with standard error.
HomEstimate hom_density_weighted_mc(const Graph& f, const WeightedGraph& r, long long samples,
                                    std::uint64_t seed);

// Same densities against a plain host graph (0/1 weights, zero diagonal).
HomEstimate hom_density_graph(const Graph& f, const Graph& host);
HomEstimate hom_density_graph_mc(const Graph& f, const Graph& host, long long samples, std::uint64_t seed);

// Exact-arithmetic variants for the lemma-verification suites.
Rat hom_density_rational(const Graph& f, const RatMatrix& r);
Rat hom_density_rational(const Graph& f, const Graph& host);

// Telescoping expansion of a product difference:
// prod(a) - prod(b) = sum_j [prod_{i<j} a_i] (a_j - b_j) [prod_{i>j} b_i].
template <class T>
T product_difference_expansion(std::span<const T> a, std::span<const T> b) {
    if (a.size() != b.size()) throw std::invalid_argument("product_difference_expansion: length mismatch");
    T total = T(0);
    for (std::size_t j = 0; j < a.size(); ++j) {
        T term = a[j] - b[j];
        for (std::size_t i = 0; i < j; ++i) term *= a[i];
        for (std::size_t i = j + 1; i < a.size(); ++i) term *= b[i];
        total += term;
    }
    return total;
}

// First induced copy of any family pattern in the host, if one exists:
// vertices[i] is the (injective) image of pattern vertex i.
struct Embedding {
    int pattern_index = -1;
    std::vector<int> vertices;
};

std::optional<Embedding> find_induced_embedding(const Graph& host, std::span<const Graph> family);

struct FreeResult {
    bool free = true;
    std::optional<Embedding> copy;
};

// Does the host avoid every family pattern as an induced subgraph?
FreeResult is_induced_free(const Graph& host, std::span<const Graph> family);
FreeResult is_induced_free(const Graph& host, const PropertySpec& spec);

}  // namespace hpd

#endif
