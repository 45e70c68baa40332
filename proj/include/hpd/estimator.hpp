#ifndef HPD_ESTIMATOR_HPP
#define HPD_ESTIMATOR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hpd/graph.hpp"
#include "hpd/partition.hpp"
#include "hpd/property.hpp"
#include "hpd/quotient.hpp"

namespace hpd {

// Closed-form pair derived from removal constants: class-count floor
// k0 = ceil(max{n0, 2/delta, 4 M^2 / delta^{M^2}}) and regularity target
// gamma = delta^{M^2} / (8 M^2). eps is accepted for interface symmetry and
// echoed by callers; the closed forms do not depend on it.
struct AttestConstants {
    long long k0 = 0;
    double gamma = 0.0;
};
AttestConstants attest_constants(double delta, long long M, long long n0, double eps);

// Reduced graphs of known property members, used as attestation targets:
// distance to the nearest entry upper-bounds distance to the full (infinite)
// attestation set.
struct AttestationCodebook {
    int K = 0;           // class-count bound every entry respects
    double gamma = 0.0;  // regularity target the entries were built with
    std::vector<WeightedGraph> entries;
    std::vector<std::string> provenance;  // one source note per entry
};

struct EstimateReport {
    std::string method;     // "sample" or "codebook"
    double estimate = 0.0;  // median of trial_values
    std::vector<double> trial_values;
    bool upper_bound_only = false;  // codebook estimates only bound the distance from above
    // configuration echo
    int s = 0;       // sample size (sample method)
    int trials = 0;  // trial count (sample method)
    int K = 0;       // class-count bound (codebook method)
    int budget = 0;  // heuristic restart budget; 0 means exact search
    std::uint64_t seed = 0;
    // codebook argmin detail
    int argmin_entry = -1;
    std::optional<Equipartition> argmin_partition;
};

// Sorted middle value; mean of the two middles on even length.
double median(std::vector<double> values);

// Repeats `trials` times: induce a random s-vertex subgraph (trial t uses
// seed + t) and measure its exact edit distance to the property. Reports the
// median and every trial value.
EstimateReport sample_estimate(const Graph& g, const PropertySpec& spec, int s, int trials,
                               std::uint64_t seed);

// One entry per member: the quotient under a regular partition found with at
// most K classes (class count k0 = min(2, K) doubled twice per refinement
// round, so the round budget is the largest r with k0 * 4^r <= K). Every
// member is partitioned with the same caller seed, so duplicate members
// produce duplicate entries; entries within d1 < 1e-6 of an earlier entry of
// the same size are dropped. When `check` is given, members small enough to
// scan are required to satisfy it; larger members are trusted and their
// provenance notes say so.
AttestationCodebook build_codebook(std::span<const Graph> members, int K, double gamma,
                                   std::uint64_t seed, const PropertySpec* check = nullptr);

// min over equipartitions of g (all of them, or mode.budget local-search
// candidates) of the d1 distance from the quotient to the nearest codebook
// entry of matching size. Entries are feasible only when k <= n and
// n >= k^{3/2}; with no feasible entry the call refuses and names the floor.
// The achieved minimum, the argmin partition, and the argmin entry index are
// all reported. This bounds the true attestation distance from above.
EstimateReport codebook_estimate(const Graph& g, const AttestationCodebook& book,
                                 const SearchMode& mode);

// argmax over family patterns with at most M vertices of the induced
// homomorphism density in g (exact when the map count fits the work cap,
// Monte Carlo with mc_samples otherwise; pattern i samples with seed + i).
struct ProbeResult {
    int pattern_index = -1;
    double density = 0.0;
    bool exceeds_delta = false;  // density >= delta
    bool exact = true;           // density of the winning pattern was exact
};
ProbeResult removal_probe(const Graph& g, const PropertySpec& spec, long long mc_samples,
                          std::uint64_t seed);

// Codebook JSON format: {"K": int, "gamma": real, "entries": [{"k": int,
// "w": [[...]]}, ...], "provenance": [string, ...]}.
AttestationCodebook load_codebook_file(const std::string& path);
void save_codebook_file(const AttestationCodebook& book, const std::string& path);

}  // namespace hpd

#endif
