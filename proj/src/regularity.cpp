#include "hpd/regularity.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "hpd/metrics.hpp"
#include "hpd/quotient.hpp"
#include "hpd/rng.hpp"

namespace hpd {

int default_fk_rounds(double gamma) {
    if (!(gamma > 0.0) || gamma >= 1.0)
        throw std::invalid_argument("default_fk_rounds: gamma must lie in (0, 1)");
    return static_cast<int>(std::ceil(2.0 / (gamma * gamma))) + 1;
}

double fk_energy(const Graph& g, const Equipartition& p) {
    PairCount c = pair_counts(g, p);
    double sum = 0.0;
    for (int i = 0; i < c.k; ++i)
        for (int j = 0; j < c.k; ++j) {
            double cnt = static_cast<double>(c.at(i, j));
            sum += cnt * cnt / (static_cast<double>(c.sizes[i]) * c.sizes[j]);
        }
    return sum / (static_cast<double>(g.n()) * g.n());
}

FkResult fk_partition(const Graph& g, double gamma, int k0, int max_rounds, std::uint64_t seed) {
    const int n = g.n();
    if (n < 1) throw std::invalid_argument("fk_partition: empty graph");
    if (k0 < 1 || k0 > n) throw std::invalid_argument("fk_partition: need 1 <= k0 <= n");
    if (!(gamma > 0.0) || gamma >= 1.0)
        throw std::invalid_argument("fk_partition: gamma must lie in (0, 1)");
    if (max_rounds < 0) max_rounds = default_fk_rounds(gamma);
    long long class_cap = k0;
    for (int r = 0; r < max_rounds && class_cap < n; ++r) class_cap = std::min<long long>(class_cap * 4, n);

    const WeightedGraph w = as_weighted(g);
    Equipartition p = random_equipartition(n, k0, seed);

    std::vector<double> energy_log;
    std::vector<double> witness_log;
    Equipartition best_p = p;
    double best_val = 0.0;
    bool have_best = false;

    for (int round = 0;; ++round) {
        energy_log.push_back(fk_energy(g, p));
        WeightedGraph bl = blow_up_reduced(g, p);
        bool exact = n <= kCutExactCap;
        CutResult cut = exact ? cut_distance_exact(w, bl)
                              : cut_distance_heuristic(w, bl, 32, mix_seed(seed, 1000 + round));
        witness_log.push_back(cut.distance);
        if (!have_best || cut.distance < best_val) {
            have_best = true;
            best_val = cut.distance;
            best_p = p;
        }
        if (cut.distance <= gamma)
            return FkResult{std::move(p),          cut.distance,
                            round,                 exact,
                            std::move(energy_log), std::move(witness_log)};

        // Split every class on the witness indicator pair, then re-equalize.
        std::vector<int> marks(n);
        for (int v = 0; v < n; ++v)
            marks[v] =
                2 * (cut.witness.alpha[v] > 0.5 ? 1 : 0) + (cut.witness.beta[v] > 0.5 ? 1 : 0);
        Equipartition next = split_classes(p, marks);
        // A witness with positive form is non-constant on some class, so the
        // split must add classes; stop defensively if it ever does not.
        if (next.k() > class_cap || next.same_partition(p))
            return FkResult{std::move(best_p),     best_val,
                            round,                 false,
                            std::move(energy_log), std::move(witness_log)};
        p = std::move(next);
    }
}

FkVerification verify_fk(const Graph& g, const Equipartition& p, double gamma) {
    if (p.n() != g.n()) throw std::invalid_argument("verify_fk: partition size mismatch");
    const WeightedGraph w = as_weighted(g);
    const WeightedGraph bl = blow_up_reduced(g, p);
    if (g.n() <= kCutExactCap) {
        CutResult cut = cut_distance_exact(w, bl);
        return FkVerification{
            cut.distance <= gamma ? FkVerdict::CertifiedPass : FkVerdict::CertifiedFail,
            cut.distance};
    }
    CutResult cut = cut_distance_heuristic(w, bl, 32, 0);
    return FkVerification{cut.distance > gamma ? FkVerdict::Refuted : FkVerdict::Unknown,
                          cut.distance};
}

}  // namespace hpd
