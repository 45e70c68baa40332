#ifndef HPD_VERIFY_HPP
#define HPD_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hpd {

// One batch check over a fixed seeded instance family.
struct CheckOutcome {
    std::string name;
    bool passed = false;
    long long cases = 0;       // individual comparisons performed
    long long violations = 0;  // comparisons that failed
    std::string detail;        // first violation, or a summary note
    double wall_ms = 0.0;
};

// The ten acceptance checks. Instance families, seeds, and tolerances are
// fixed inside each check so the whole battery is reproducible.
CheckOutcome check_quotient_hom_floor();       // quotient hom >= host hom ^ C(f,2), rationals
CheckOutcome check_hom_cut_lipschitz();        // |hom(F,R1) - hom(F,R2)| <= f^2 cut distance
CheckOutcome check_blowup_hom_gap();           // |hom(F,R) - hom(F,blow-up)| <= 2kf/n
CheckOutcome check_cut_vs_d1();                // cut distance <= d1, equality at k = 1
CheckOutcome check_rounding_chain();           // rounded graph: quotient near target, dist <= d1
CheckOutcome check_oracle_anchors();           // known distances + independent brute force
CheckOutcome check_fk_certification();         // regular partitioning certifies on n <= 20
CheckOutcome check_estimator_concentration();  // sampled median near planted distance
CheckOutcome check_constant_formulas();        // closed-form constants on three known inputs
CheckOutcome check_determinism();              // identical seeds give byte-identical summaries

// All ten, in order.
std::vector<CheckOutcome> run_acceptance();

// Scaled-down inequality battery for the command line: instance counts grow
// with max_n and draw from `seed`. Exit-style contract: all must pass.
std::vector<CheckOutcome> run_lemma_suite(int max_n, std::uint64_t seed);

}  // namespace hpd

#endif
