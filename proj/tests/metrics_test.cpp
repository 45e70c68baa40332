#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>

#include "hpd/errors.hpp"
#include "hpd/graph.hpp"
#include "hpd/homdensity.hpp"
#include "hpd/metrics.hpp"
#include "hpd/property.hpp"
#include "hpd/rational.hpp"
#include "hpd/rng.hpp"

using namespace hpd;

namespace {

WeightedGraph random_weighted(int k, Rng& rng) {
    WeightedGraph w(k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) w.set(i, j, rng.real01());
    return w;
}

// Independent cut-distance oracle: scan all 0/1 vector pairs directly.
double cut_brute_force(const WeightedGraph& a, const WeightedGraph& b) {
    int k = a.k();
    double best = 0.0;
    for (unsigned am = 0; am < (1u << k); ++am)
        for (unsigned bm = 0; bm < (1u << k); ++bm) {
            double s = 0.0;
            for (int x = 0; x < k; ++x)
                if ((am >> x) & 1u)
                    for (int y = 0; y < k; ++y)
                        if ((bm >> y) & 1u) s += a.at(x, y) - b.at(x, y);
            best = std::max(best, std::fabs(s));
        }
    return best / (static_cast<double>(k) * k);
}

double witness_form(const WeightedGraph& a, const WeightedGraph& b, const CutWitness& w) {
    int k = a.k();
    double s = 0.0;
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) s += w.alpha[x] * (a.at(x, y) - b.at(x, y)) * w.beta[y];
    return s / (static_cast<double>(k) * k);
}

}  // namespace

TEST_CASE("edit distance counts unordered pair differences over n^2") {
    Graph k4 = complete_graph(4);
    Graph k4_minus = k4;
    k4_minus.toggle_edge(0, 1);
    CHECK(edit_distance(k4, k4) == 0.0);
    CHECK(edit_distance(k4, k4_minus) == doctest::Approx(1.0 / 16.0));
    CHECK(edit_distance(k4, empty_graph(4)) == doctest::Approx(6.0 / 16.0));
    CHECK(edit_distance(k4_minus, k4) == edit_distance(k4, k4_minus));
    CHECK_THROWS_AS(edit_distance(k4, complete_graph(5)), std::invalid_argument);
}

TEST_CASE("d1 averages absolute deviations over all ordered cells") {
    WeightedGraph a = WeightedGraph::from_rows({{0.5, 1.0}, {1.0, 0.5}});
    WeightedGraph b = WeightedGraph::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    CHECK(d1(a, b) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(d1(a, a) == 0.0);
    CHECK_THROWS_AS(d1(a, WeightedGraph(3)), std::invalid_argument);

    RatMatrix ra(2), rb(2);
    ra.at(0, 0) = make_rat(1, 2);
    ra.at(1, 1) = make_rat(1, 2);
    ra.at(0, 1) = ra.at(1, 0) = Rat(1);
    rb.at(0, 1) = rb.at(1, 0) = Rat(1);
    CHECK(d1_rational(ra, rb) == make_rat(1, 4));
}

TEST_CASE("exact cut distance matches an independent brute force") {
    for (int i = 1; i <= 60; ++i) {
        int k = 1 + (i % 4);
        Rng rng(mix_seed(0xC0FFEE, i));
        WeightedGraph a = random_weighted(k, rng);
        WeightedGraph b = random_weighted(k, rng);
        CutResult res = cut_distance_exact(a, b);
        CHECK(res.distance == doctest::Approx(cut_brute_force(a, b)).epsilon(1e-12));
        // The reported witness reproduces the reported value.
        CHECK(std::fabs(witness_form(a, b, res.witness)) ==
              doctest::Approx(res.distance).epsilon(1e-12));
        CHECK(res.distance == doctest::Approx(cut_distance_exact(b, a).distance).epsilon(1e-12));
    }
    // k = 1 reduces to the absolute difference of the single cell.
    WeightedGraph x(1), y(1);
    x.set(0, 0, 0.3);
    y.set(0, 0, 0.8);
    CHECK(cut_distance_exact(x, y).distance == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(cut_distance_exact(WeightedGraph(23), WeightedGraph(23)), CapExceededError);
}

TEST_CASE("heuristic cut search is valid, deterministic, and usually tight") {
    int exact_hits = 0;
    const int trials = 200;
    for (int i = 1; i <= trials; ++i) {
        int k = 2 + (i % 5);
        Rng rng(mix_seed(0xBEEF, i));
        WeightedGraph a = random_weighted(k, rng);
        WeightedGraph b = random_weighted(k, rng);
        CutResult exact = cut_distance_exact(a, b);
        CutResult heur = cut_distance_heuristic(a, b, 32, 9);
        CHECK(heur.distance <= exact.distance + 1e-12);  // never overshoots
        if (std::fabs(heur.distance - exact.distance) <= 1e-9) ++exact_hits;
        CutResult again = cut_distance_heuristic(a, b, 32, 9);
        CHECK(heur.distance == again.distance);
    }
    // Alternating maximization from 32 restarts finds the optimum nearly always.
    CHECK(exact_hits >= static_cast<int>(0.95 * trials));

    WeightedGraph a(2), b(2);
    CHECK_THROWS_AS(cut_distance_heuristic(a, b, 0, 1), std::invalid_argument);
}

TEST_CASE("property distance anchors and witness sanity") {
    PropertySpec triangle_free;
    triangle_free.family.push_back(complete_graph(3));

    PropertyDistance k4 = distance_to_property_exact(complete_graph(4), triangle_free);
    CHECK(k4.edits == 2);
    CHECK(k4.distance == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(is_induced_free(k4.witness, triangle_free).free);
    CHECK(edit_distance(complete_graph(4), k4.witness) == doctest::Approx(k4.distance));

    PropertyDistance k6 = distance_to_property_exact(complete_graph(6), triangle_free);
    CHECK(k6.edits == 6);
    CHECK(k6.distance == doctest::Approx(6.0 / 36.0).epsilon(1e-15));
    CHECK(is_induced_free(k6.witness, triangle_free).free);

    PropertyDistance k33 = distance_to_property_exact(complete_bipartite(3, 3), triangle_free);
    CHECK(k33.edits == 0);
    CHECK(k33.witness == complete_bipartite(3, 3));

    // Forbidding induced P3 keeps exactly the disjoint unions of cliques:
    // K4 already qualifies, C4 needs two edits.
    PropertySpec cluster;
    cluster.family.push_back(path_graph(3));
    CHECK(distance_to_property_exact(complete_graph(4), cluster).edits == 0);
    PropertyDistance c4 = distance_to_property_exact(cycle_graph(4), cluster);
    CHECK(c4.edits == 2);
    CHECK(is_induced_free(c4.witness, cluster).free);
}

TEST_CASE("optimality double-check: no free graph strictly closer than the oracle") {
    PropertySpec spec;
    spec.family.push_back(complete_graph(3));
    for (int i = 0; i < 10; ++i) {
        Graph g = random_graph(4, 0.7, mix_seed(0x0DD, i));
        PropertyDistance pd = distance_to_property_exact(g, spec);
        // Enumerate all 4-vertex graphs; none inside the oracle's radius is free.
        static const int pu[6] = {0, 0, 0, 1, 1, 2};
        static const int pv[6] = {1, 2, 3, 2, 3, 3};
        unsigned gmask = 0;
        for (int t = 0; t < 6; ++t)
            if (g.adjacent(pu[t], pv[t])) gmask |= 1u << t;
        for (unsigned m = 0; m < 64; ++m) {
            if (std::popcount(m ^ gmask) >= pd.edits) continue;
            Graph cand(4);
            for (int t = 0; t < 6; ++t)
                if ((m >> t) & 1u) cand.set_edge(pu[t], pv[t], true);
            CHECK_FALSE(is_induced_free(cand, spec).free);
        }
    }
}

TEST_CASE("unsatisfiable properties raise PropertyEmptyError") {
    // Forbidding both the edge and the non-edge excludes every 2-vertex graph.
    PropertySpec impossible;
    impossible.family.push_back(complete_graph(2));
    impossible.family.push_back(empty_graph(2));
    CHECK_THROWS_AS(distance_to_property_exact(path_graph(3), impossible), PropertyEmptyError);

    // A 1-vertex forbidden pattern empties the property on any host.
    PropertySpec one;
    one.family.push_back(complete_graph(1));
    CHECK_THROWS_AS(distance_to_property_exact(complete_graph(3), one), PropertyEmptyError);
}

TEST_CASE("the oracle refuses hosts beyond its vertex cap") {
    PropertySpec spec;
    spec.family.push_back(complete_graph(3));
    CHECK_THROWS_AS(distance_to_property_exact(complete_graph(9), spec), CapExceededError);
    CHECK(distance_to_property_exact(cycle_graph(9), spec, 9).edits == 0);
}
