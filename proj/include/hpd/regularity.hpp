#ifndef HPD_REGULARITY_HPP
#define HPD_REGULARITY_HPP

#include <cstdint>
#include <vector>

#include "hpd/graph.hpp"
#include "hpd/partition.hpp"

namespace hpd {

// Outcome of iterative refinement toward a cut-distance regular equipartition.
struct FkResult {
    Equipartition partition;
    double gamma_achieved = 0.0;  // cut distance between the graph and the returned quotient blow-up
    int rounds = 0;               // refinement rounds performed before returning
    bool certified = false;       // exact evaluation confirmed gamma_achieved <= gamma
    std::vector<double> energy_log;   // quotient energy at the start of each round
    std::vector<double> witness_log;  // cut distance measured at each round
};

// Default refinement budget: the quotient energy lives in [0, 1] and each
// productive round should raise it by about gamma^2 / 2.
int default_fk_rounds(double gamma);

// Refines a seeded random equipartition into k0 classes until the blown-up
// quotient is within cut distance gamma of the graph or the class count
// would exceed min(n, k0 * 4^max_rounds) (max_rounds < 0 picks the default
// budget). Each refinement splits classes on the current witness's indicator
// pair and re-equalizes, at most quadrupling the class count. Evaluation is
// exact when n is within the exact cut-distance cap, heuristic (32 restarts)
// otherwise; heuristic evaluation can stop the loop but never sets
// `certified`. Failure to certify is reported in-band via certified=false
// and the best value seen, never an exception.
FkResult fk_partition(const Graph& g, double gamma, int k0, int max_rounds = -1,
                      std::uint64_t seed = 0);

// Checks a claimed regular partition. Exact evaluation decides either way;
// heuristic evaluation can only refute, since its witness is a lower bound.
enum class FkVerdict { CertifiedPass, CertifiedFail, Refuted, Unknown };
struct FkVerification {
    FkVerdict verdict = FkVerdict::Unknown;
    double value = 0.0;  // exact cut distance, or the heuristic lower bound
};
FkVerification verify_fk(const Graph& g, const Equipartition& p, double gamma);

// Size-weighted mean squared class-pair density of the quotient.
double fk_energy(const Graph& g, const Equipartition& p);

}  // namespace hpd

#endif
