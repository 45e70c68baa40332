#include "hpd/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hpd/errors.hpp"
#include "hpd/estimator.hpp"
#include "hpd/graph.hpp"
#include "hpd/homdensity.hpp"
#include "hpd/metrics.hpp"
#include "hpd/partition.hpp"
#include "hpd/property.hpp"
#include "hpd/quotient.hpp"
#include "hpd/rational.hpp"
#include "hpd/regularity.hpp"
#include "hpd/rng.hpp"

namespace hpd {

namespace {

using Clock = std::chrono::steady_clock;

// Accumulates case/violation counts for one named check and stamps wall time.
struct Recorder {
    CheckOutcome out;
    Clock::time_point start = Clock::now();

    explicit Recorder(std::string name) {
        out.name = std::move(name);
        out.passed = false;
        out.cases = 0;
        out.violations = 0;
    }

    void count(bool ok, const std::string& what) {
        ++out.cases;
        if (!ok) {
            ++out.violations;
            if (out.detail.empty()) out.detail = what;
        }
    }

    CheckOutcome finish() { return finish_with(out.violations == 0); }

    CheckOutcome finish_with(bool passed) {
        out.passed = passed;
        out.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return out;
    }
};

struct NamedPattern {
    std::string name;
    Graph graph;
};

std::vector<NamedPattern> standard_patterns() {
    std::vector<NamedPattern> ps;
    ps.push_back({"K2", complete_graph(2)});
    ps.push_back({"P3", path_graph(3)});
    ps.push_back({"K3", complete_graph(3)});
    ps.push_back({"C4", cycle_graph(4)});
    ps.push_back({"K4", complete_graph(4)});
    ps.push_back({"P4", path_graph(4)});
    return ps;
}

WeightedGraph random_weighted(int k, Rng& rng) {
    WeightedGraph w(k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) w.set(i, j, rng.real01());
    return w;
}

// ---- quotient hom floor: hom(F, G/P) >= hom(F, G)^C(f,2) over equal-size classes ----

CheckOutcome quotient_hom_floor_impl(const char* name, int n_lo, int n_hi, int random_count,
                                     bool structured, std::uint64_t seed) {
    Recorder rec(name);
    auto patterns = standard_patterns();

    std::vector<Graph> instances;
    std::vector<std::string> labels;
    if (structured) {
        for (int n = n_lo; n <= n_hi; ++n) {
            instances.push_back(complete_graph(n));
            labels.push_back("K" + std::to_string(n));
            instances.push_back(cycle_graph(n));
            labels.push_back("C" + std::to_string(n));
            for (int a = 1; a <= n / 2; ++a) {
                instances.push_back(complete_bipartite(a, n - a));
                labels.push_back("K_{" + std::to_string(a) + "," + std::to_string(n - a) + "}");
            }
        }
    }
    int span = n_hi - n_lo + 1;
    for (int i = 1; i <= random_count; ++i) {
        int n = n_lo + (i % span);
        double p = 0.3 + 0.2 * ((i / span) % 3);
        instances.push_back(random_graph(n, p, mix_seed(seed, i)));
        labels.push_back("random n=" + std::to_string(n) + " #" + std::to_string(i));
    }

    for (std::size_t gi = 0; gi < instances.size(); ++gi) {
        const Graph& g = instances[gi];
        int n = g.n();
        std::vector<Rat> host(patterns.size());
        for (std::size_t pi = 0; pi < patterns.size(); ++pi)
            host[pi] = hom_density_rational(patterns[pi].graph, g);

        for (int k = 1; k <= 3; ++k) {
            if (n % k != 0) continue;  // the floor needs classes of equal size
            std::vector<Equipartition> parts;
            if (n <= 8) {
                parts = all_equipartitions(n, k);
            } else {
                for (int t = 0; t < 60; ++t)
                    parts.push_back(random_equipartition(
                        n, k, mix_seed(seed, 0xF00 + (gi << 10) + (static_cast<std::size_t>(k) << 7) + t)));
            }
            for (std::size_t qi = 0; qi < parts.size(); ++qi) {
                RatMatrix r = reduce_rational(g, parts[qi]);
                for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
                    const Graph& f = patterns[pi].graph;
                    unsigned pairs = static_cast<unsigned>(f.n() * (f.n() - 1) / 2);
                    Rat quotient_hom = hom_density_rational(f, r);
                    Rat floor_val = rat_pow(host[pi], pairs);
                    rec.count(quotient_hom >= floor_val,
                              labels[gi] + " k=" + std::to_string(k) + " partition#" +
                                  std::to_string(qi) + " pattern " + patterns[pi].name + ": " +
                                  rat_to_string(quotient_hom) + " < " + rat_to_string(floor_val));
                }
            }
        }
    }
    return rec.finish();
}

// ---- hom counting is Lipschitz in cut distance with constant f^2 ----

CheckOutcome hom_cut_lipschitz_impl(const char* name, int pair_count, int max_k,
                                    std::uint64_t seed) {
    Recorder rec(name);
    auto patterns = standard_patterns();
    for (int i = 1; i <= pair_count; ++i) {
        int k = 1 + ((i - 1) % max_k);
        Rng rng(mix_seed(seed, i));
        WeightedGraph a = random_weighted(k, rng);
        WeightedGraph b = random_weighted(k, rng);
        double cut = cut_distance_exact(a, b).distance;
        for (const auto& pat : patterns) {
            int f = pat.graph.n();
            double ha = hom_density_weighted(pat.graph, a).value;
            double hb = hom_density_weighted(pat.graph, b).value;
            double bound = static_cast<double>(f) * f * cut + 1e-9;
            rec.count(std::fabs(ha - hb) <= bound,
                      "pair #" + std::to_string(i) + " k=" + std::to_string(k) + " pattern " +
                          pat.name + ": |" + std::to_string(ha) + " - " + std::to_string(hb) +
                          "| > " + std::to_string(f * f) + " * " + std::to_string(cut));
        }
    }
    return rec.finish();
}

// ---- quotient vs blown-up quotient: hom densities agree within 2kf/n ----

CheckOutcome blowup_hom_gap_impl(const char* name, const std::vector<int>& ns, int count,
                                 std::uint64_t seed) {
    Recorder rec(name);
    auto patterns = standard_patterns();
    for (int i = 1; i <= count; ++i) {
        int n = ns[static_cast<std::size_t>(i - 1) % ns.size()];
        double p = 0.3 + 0.2 * ((i - 1) % 3);
        Graph g = random_graph(n, p, mix_seed(seed, i));
        for (int k = 1; k <= 4; ++k) {
            if (n % k != 0) continue;
            Equipartition part =
                random_equipartition(n, k, mix_seed(seed, 0xE00 + static_cast<std::uint64_t>(i) * 8 + k));
            WeightedGraph r = reduce(g, part);
            WeightedGraph bl = blow_up_reduced(g, part);
            for (std::size_t pi = 0; pi < 3; ++pi) {  // K2, P3, K3 keep n^f small
                const Graph& f = patterns[pi].graph;
                double hr = hom_density_weighted(f, r).value;
                double hb = hom_density_weighted(f, bl).value;
                double bound = 2.0 * k * f.n() / n + 1e-12;
                rec.count(std::fabs(hr - hb) <= bound,
                          "instance #" + std::to_string(i) + " n=" + std::to_string(n) + " k=" +
                              std::to_string(k) + " pattern " + patterns[pi].name + ": gap " +
                              std::to_string(std::fabs(hr - hb)) + " > " + std::to_string(bound));
            }
        }
    }
    return rec.finish();
}

// ---- cut distance never exceeds d1; they coincide at k=1 ----

CheckOutcome cut_vs_d1_impl(const char* name, int pair_count, int max_k, std::uint64_t seed) {
    Recorder rec(name);
    for (int i = 1; i <= pair_count; ++i) {
        int k = 1 + ((i - 1) % max_k);
        Rng rng(mix_seed(seed, i));
        WeightedGraph a = random_weighted(k, rng);
        WeightedGraph b = random_weighted(k, rng);
        double cut = cut_distance_exact(a, b).distance;
        double dd = d1(a, b);
        rec.count(cut <= dd + 1e-12, "pair #" + std::to_string(i) + " k=" + std::to_string(k) +
                                         ": cut " + std::to_string(cut) + " > d1 " +
                                         std::to_string(dd));
        if (k == 1)
            rec.count(std::fabs(cut - dd) <= 1e-15,
                      "pair #" + std::to_string(i) + " k=1: cut and d1 must coincide");
    }
    return rec.finish();
}

// ---- rounding a graph toward a target matrix: quotient lands within 2/k, edit cost <= d1 ----

CheckOutcome rounding_chain_impl(const char* name, int count, int max_n, std::uint64_t seed) {
    Recorder rec(name);
    for (int i = 1; i <= count; ++i) {
        int k = 2 + ((i - 1) % 2);
        int n;
        if (k == 2) {
            int lo = 4, hi = std::max(4, std::min(12, max_n));
            n = lo + ((i - 1) % (hi - lo + 1));
        } else {
            int lo = 6, hi = std::max(6, std::min(12, max_n));
            if (max_n < 6) continue;  // the 2/k guarantee needs floor(n/k) >= sqrt(k)
            n = lo + ((i - 1) % (hi - lo + 1));
        }
        double p = 0.3 + 0.2 * ((i - 1) % 3);
        Graph g = random_graph(n, p, mix_seed(seed, i));
        Equipartition part = random_equipartition(n, k, mix_seed(seed, 0xD00 + i));
        Rng rng(mix_seed(seed, 0xD0000 + i));
        WeightedGraph target = random_weighted(k, rng);

        WeightedGraph before = reduce(g, part);
        Graph rounded = round_to_target(g, part, target);
        double after = d1(reduce(rounded, part), target);
        rec.count(after <= 2.0 / k + 1e-12,
                  "instance #" + std::to_string(i) + " n=" + std::to_string(n) + " k=" +
                      std::to_string(k) + ": post-rounding d1 " + std::to_string(after) +
                      " > 2/k");
        double edits = edit_distance(g, rounded);
        double budget = d1(before, target);
        rec.count(edits <= budget + 1e-9, "instance #" + std::to_string(i) +
                                              ": edit cost " + std::to_string(edits) +
                                              " > d1 budget " + std::to_string(budget));
    }
    return rec.finish();
}

// ---- independent 4-vertex brute force against the editing oracle ----

CheckOutcome oracle_cross_check_impl(const char* name) {
    Recorder rec(name);
    static const int kPu[6] = {0, 0, 0, 1, 1, 2};
    static const int kPv[6] = {1, 2, 3, 2, 3, 3};
    static const int kTriples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

    auto triple_edges = [&](unsigned mask, const int* t) {
        int e = 0;
        for (int idx = 0; idx < 6; ++idx) {
            int u = kPu[idx], v = kPv[idx];
            bool u_in = (u == t[0] || u == t[1] || u == t[2]);
            bool v_in = (v == t[0] || v == t[1] || v == t[2]);
            if (u_in && v_in && ((mask >> idx) & 1u)) ++e;
        }
        return e;
    };

    for (int fam = 0; fam < 2; ++fam) {
        PropertySpec spec;
        spec.family.push_back(fam == 0 ? complete_graph(3) : path_graph(3));
        const char* fam_name = fam == 0 ? "triangle-free" : "induced-P3-free";
        auto is_free = [&](unsigned mask) {
            for (const auto& t : kTriples) {
                int e = triple_edges(mask, t);
                if (fam == 0 ? (e == 3) : (e == 2)) return false;
            }
            return true;
        };
        for (unsigned mask = 0; mask < 64; ++mask) {
            int best = 7;
            for (unsigned tgt = 0; tgt < 64; ++tgt)
                if (is_free(tgt)) best = std::min(best, std::popcount(mask ^ tgt));
            Graph g(4);
            for (int idx = 0; idx < 6; ++idx)
                if ((mask >> idx) & 1u) g.set_edge(kPu[idx], kPv[idx], true);
            PropertyDistance pd = distance_to_property_exact(g, spec);
            rec.count(pd.edits == best, std::string(fam_name) + " mask " + std::to_string(mask) +
                                            ": oracle edits " + std::to_string(pd.edits) +
                                            " != brute force " + std::to_string(best));
            rec.count(is_induced_free(pd.witness, spec).free,
                      std::string(fam_name) + " mask " + std::to_string(mask) +
                          ": oracle witness still contains a forbidden pattern");
        }
    }
    return rec.finish();
}

// ---- hom density cap on hosts that avoid the pattern ----

CheckOutcome free_host_hom_cap_impl(const char* name, int max_n, std::uint64_t seed) {
    Recorder rec(name);
    auto patterns = standard_patterns();
    int hi = std::max(4, std::min(12, max_n));
    for (int i = 1; i <= 100; ++i) {
        int n = 4 + ((i - 1) % (hi - 3));
        double p = 0.2 + 0.2 * ((i - 1) % 4);
        Graph g = random_graph(n, p, mix_seed(seed, i));
        for (const auto& pat : patterns) {
            const Graph* f = &pat.graph;
            if (!is_induced_free(g, std::span<const Graph>(f, 1)).free) continue;
            int fn = pat.graph.n();
            double cap = static_cast<double>(fn * (fn - 1) / 2) / n;
            double hd = hom_density_graph(pat.graph, g).value;
            rec.count(hd <= cap + 1e-12, "host #" + std::to_string(i) + " n=" + std::to_string(n) +
                                             " avoids " + pat.name + " but hom density " +
                                             std::to_string(hd) + " > " + std::to_string(cap));
        }
    }
    return rec.finish();
}

// ---- shared suite runs for the regularity and estimator checks (also reused by determinism) ----

struct SuiteRun {
    long long cases = 0;
    long long violations = 0;
    std::string first_detail;
    std::string json;
};

SuiteRun fk_suite_run() {
    SuiteRun run;
    auto chk = [&](bool ok, const std::string& what) {
        ++run.cases;
        if (!ok) {
            ++run.violations;
            if (run.first_detail.empty()) run.first_detail = what;
        }
    };
    nlohmann::json all = nlohmann::json::array();
    for (int i = 1; i <= 50; ++i) {
        int n = 8 + ((i - 1) % 13);
        double p = 0.2 + 0.3 * ((i - 1) % 3);
        Graph g = random_graph(n, p, mix_seed(0xA7, i));
        FkResult res = fk_partition(g, 0.15, 2, -1, static_cast<std::uint64_t>(i));
        FkVerification ver = verify_fk(g, res.partition, 0.15);
        std::string tag = "instance #" + std::to_string(i) + " n=" + std::to_string(n);
        chk(res.certified, tag + ": partition not certified");
        chk(res.partition.k() <= n, tag + ": class count exceeds n");
        chk(ver.verdict == FkVerdict::CertifiedPass, tag + ": independent verification failed");
        chk(std::fabs(ver.value - res.gamma_achieved) <= 1e-12,
            tag + ": verifier value " + std::to_string(ver.value) + " != reported " +
                std::to_string(res.gamma_achieved));
        bool monotone = true;
        for (std::size_t r = 1; r < res.energy_log.size(); ++r)
            if (res.energy_log[r] < res.energy_log[r - 1] - 1e-12) monotone = false;
        chk(monotone, tag + ": refinement energy decreased between rounds");
        all.push_back({{"n", n},
                       {"assignment", res.partition.assignment()},
                       {"gamma_achieved", res.gamma_achieved},
                       {"rounds", res.rounds},
                       {"certified", res.certified},
                       {"energy", res.energy_log},
                       {"witness", res.witness_log}});
    }
    run.json = all.dump();
    return run;
}

Graph planted_bipartite(int side, int planted, std::uint64_t seed) {
    Graph g = complete_bipartite(side, side);
    std::vector<std::pair<int, int>> intra;
    for (int s = 0; s < 2; ++s) {
        int off = s * side;
        for (int u = 0; u < side; ++u)
            for (int v = u + 1; v < side; ++v) intra.push_back({off + u, off + v});
    }
    Rng rng(seed);
    for (int i = 0; i < planted; ++i) {
        std::size_t j = static_cast<std::size_t>(i) + rng.below(intra.size() - i);
        std::swap(intra[static_cast<std::size_t>(i)], intra[j]);
        g.set_edge(intra[static_cast<std::size_t>(i)].first,
                   intra[static_cast<std::size_t>(i)].second, true);
    }
    return g;
}

SuiteRun estimator_suite_run() {
    SuiteRun run;
    PropertySpec spec;
    spec.family.push_back(complete_graph(3));
    nlohmann::json all = nlohmann::json::array();
    const int side = 50;
    const int planted = 500;  // planted / (2*side)^2 = 0.05 upper-bounds the true distance
    for (int rep = 1; rep <= 30; ++rep) {
        Graph g = planted_bipartite(side, planted, mix_seed(0xA8, rep));
        EstimateReport est = sample_estimate(g, spec, 7, 25, mix_seed(0xA8E, rep));
        bool hit = std::fabs(est.estimate - 0.05) <= 0.05;
        ++run.cases;
        if (!hit) {
            ++run.violations;
            if (run.first_detail.empty())
                run.first_detail = "replicate #" + std::to_string(rep) + ": median estimate " +
                                   std::to_string(est.estimate) + " outside 0.05 +/- 0.05";
        }
        all.push_back({{"replicate", rep},
                       {"estimate", est.estimate},
                       {"trials", est.trial_values},
                       {"hit", hit}});
    }
    run.json = all.dump();
    return run;
}

void adopt(Recorder& rec, const SuiteRun& run) {
    rec.out.cases = run.cases;
    rec.out.violations = run.violations;
    rec.out.detail = run.first_detail;
}

}  // namespace

CheckOutcome check_quotient_hom_floor() {
    return quotient_hom_floor_impl("quotient_hom_floor", 4, 9, 200, true, 0xA1);
}

CheckOutcome check_hom_cut_lipschitz() {
    return hom_cut_lipschitz_impl("hom_cut_lipschitz", 500, 8, 0xA2);
}

CheckOutcome check_blowup_hom_gap() {
    return blowup_hom_gap_impl("blowup_hom_gap", {8, 12}, 100, 0xA3);
}

CheckOutcome check_cut_vs_d1() { return cut_vs_d1_impl("cut_vs_d1", 1000, 10, 0xA4); }

CheckOutcome check_rounding_chain() {
    return rounding_chain_impl("rounding_chain", 100, 12, 0xA5);
}

CheckOutcome check_oracle_anchors() {
    Recorder rec("oracle_anchors");
    PropertySpec triangle_free;
    triangle_free.family.push_back(complete_graph(3));

    PropertyDistance k4 = distance_to_property_exact(complete_graph(4), triangle_free);
    rec.count(k4.edits == 2 && std::fabs(k4.distance - 0.125) <= 1e-15,
              "K4 to triangle-free: expected 2 edits / distance 0.125, got " +
                  std::to_string(k4.edits) + " / " + std::to_string(k4.distance));
    PropertyDistance k6 = distance_to_property_exact(complete_graph(6), triangle_free);
    rec.count(k6.edits == 6 && std::fabs(k6.distance - 6.0 / 36.0) <= 1e-15,
              "K6 to triangle-free: expected 6 edits, got " + std::to_string(k6.edits));
    PropertyDistance k33 = distance_to_property_exact(complete_bipartite(3, 3), triangle_free);
    rec.count(k33.edits == 0 && k33.distance == 0.0,
              "K_{3,3} is already triangle-free but oracle edits = " + std::to_string(k33.edits));

    CheckOutcome cross = oracle_cross_check_impl("oracle_cross_check");
    rec.out.cases += cross.cases;
    rec.out.violations += cross.violations;
    if (rec.out.detail.empty()) rec.out.detail = cross.detail;
    return rec.finish();
}

CheckOutcome check_fk_certification() {
    Recorder rec("fk_certification");
    adopt(rec, fk_suite_run());
    return rec.finish();
}

CheckOutcome check_estimator_concentration() {
    Recorder rec("estimator_concentration");
    SuiteRun run = estimator_suite_run();
    adopt(rec, run);
    long long hits = run.cases - run.violations;
    std::string tally = std::to_string(hits) + "/" + std::to_string(run.cases) +
                        " medians within 0.05 of the planted upper bound (need >= 20)";
    rec.out.detail = rec.out.detail.empty() ? tally : tally + "; first miss: " + rec.out.detail;
    return rec.finish_with(hits >= 20);
}

CheckOutcome check_constant_formulas() {
    Recorder rec("constant_formulas");
    AttestConstants a = attest_constants(0.5, 2, 10, 0.1);
    rec.count(a.k0 == 256 && a.gamma == 1.0 / 512.0,
              "delta=0.5 M=2 n0=10: got k0=" + std::to_string(a.k0) + " gamma=" +
                  std::to_string(a.gamma) + ", expected 256 and 1/512");
    AttestConstants b = attest_constants(1.0, 1, 1, 0.1);
    rec.count(b.k0 == 4 && b.gamma == 0.125, "delta=1 M=1 n0=1: got k0=" + std::to_string(b.k0) +
                                                 " gamma=" + std::to_string(b.gamma) +
                                                 ", expected 4 and 1/8");
    AttestConstants c = attest_constants(0.5, 1, 3, 0.1);
    rec.count(c.k0 == 8 && c.gamma == 0.0625, "delta=0.5 M=1 n0=3: got k0=" + std::to_string(c.k0) +
                                                  " gamma=" + std::to_string(c.gamma) +
                                                  ", expected 8 and 1/16");
    return rec.finish();
}

CheckOutcome check_determinism() {
    Recorder rec("determinism");
    SuiteRun f1 = fk_suite_run();
    SuiteRun f2 = fk_suite_run();
    rec.count(f1.json == f2.json,
              "regular-partition suite summaries differ between identical runs");
    SuiteRun e1 = estimator_suite_run();
    SuiteRun e2 = estimator_suite_run();
    rec.count(e1.json == e2.json, "estimator suite summaries differ between identical runs");
    return rec.finish();
}

std::vector<CheckOutcome> run_acceptance() {
    std::vector<CheckOutcome> out;
    out.push_back(check_quotient_hom_floor());
    out.push_back(check_hom_cut_lipschitz());
    out.push_back(check_blowup_hom_gap());
    out.push_back(check_cut_vs_d1());
    out.push_back(check_rounding_chain());
    out.push_back(check_oracle_anchors());
    out.push_back(check_fk_certification());
    out.push_back(check_estimator_concentration());
    out.push_back(check_constant_formulas());
    out.push_back(check_determinism());
    return out;
}

std::vector<CheckOutcome> run_lemma_suite(int max_n, std::uint64_t seed) {
    if (max_n < 4) max_n = 4;
    if (max_n > 16) max_n = 16;
    int hi = std::min(max_n, 9);

    std::vector<int> blowup_ns;
    for (int n = 4; n <= std::min(max_n, 12); n += 2) blowup_ns.push_back(n);

    std::vector<CheckOutcome> out;
    out.push_back(
        quotient_hom_floor_impl("quotient_hom_floor", 4, hi, 30, false, mix_seed(seed, 0xB1)));
    out.push_back(hom_cut_lipschitz_impl("hom_cut_lipschitz", 100, 8, mix_seed(seed, 0xB2)));
    out.push_back(blowup_hom_gap_impl("blowup_hom_gap", blowup_ns, 40, mix_seed(seed, 0xB3)));
    out.push_back(cut_vs_d1_impl("cut_vs_d1", 200, 10, mix_seed(seed, 0xB4)));
    out.push_back(rounding_chain_impl("rounding_chain", 40, max_n, mix_seed(seed, 0xB5)));
    out.push_back(free_host_hom_cap_impl("free_host_hom_cap", max_n, mix_seed(seed, 0xB6)));
    out.push_back(oracle_cross_check_impl("oracle_cross_check"));
    return out;
}

}  // namespace hpd
