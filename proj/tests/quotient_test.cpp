#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hpd/graph.hpp"
#include "hpd/homdensity.hpp"
#include "hpd/metrics.hpp"
#include "hpd/partition.hpp"
#include "hpd/quotient.hpp"
#include "hpd/rational.hpp"

using namespace hpd;

TEST_CASE("pair counts double intra-class edges and split cross edges") {
    Graph k4 = complete_graph(4);
    Equipartition p(4, 2, {0, 0, 1, 1});
    PairCount pc = pair_counts(k4, p);
    CHECK(pc.sizes == std::vector<int>{2, 2});
    CHECK(pc.at(0, 0) == 2);  // the single intra edge, both orders
    CHECK(pc.at(0, 1) == 4);
    CHECK(pc.at(1, 0) == 4);
    CHECK(pc.density(0, 0) == 0.5);
    CHECK(pc.density(0, 1) == 1.0);
}

TEST_CASE("reduction densities match hand values") {
    Graph c4 = cycle_graph(4);  // edges 0-1, 1-2, 2-3, 3-0
    Equipartition p(4, 2, {0, 0, 1, 1});
    WeightedGraph r = reduce(c4, p);
    CHECK(r.at(0, 0) == 0.5);
    CHECK(r.at(1, 1) == 0.5);
    CHECK(r.at(0, 1) == 0.5);

    RatMatrix rr = reduce_rational(c4, p);
    CHECK(rr.at(0, 0) == make_rat(1, 2));
    CHECK(rr.at(0, 1) == make_rat(1, 2));

    // The one-class quotient is the overall ordered-pair density.
    Equipartition whole(4, 1, {0, 0, 0, 0});
    CHECK(reduce(c4, whole).at(0, 0) == 0.5);
}

TEST_CASE("blown-up reduction assigns every pair its class-pair density") {
    Graph c4 = cycle_graph(4);
    Equipartition p(4, 2, {0, 0, 1, 1});
    WeightedGraph bl = blow_up_reduced(c4, p);
    REQUIRE(bl.k() == 4);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) CHECK(bl.at(u, v) == 0.5);

    Graph k4 = complete_graph(4);
    WeightedGraph bk = blow_up_reduced(k4, p);
    CHECK(bk.at(0, 1) == 0.5);  // intra pair gets the doubled-diagonal density
    CHECK(bk.at(0, 0) == 0.5);
    CHECK(bk.at(0, 2) == 1.0);
}

TEST_CASE("quotient hom floor holds with equal classes and can fail without") {
    // Triangle plus isolated vertices. With classes {0,1,2} and {3,4} the
    // class sizes differ, and the floor hom(F, G/P) >= hom(F, G)^{C(f,2)}
    // genuinely fails; growing the second class to size 3 restores it.
    Graph g5(5);
    g5.set_edge(0, 1, true);
    g5.set_edge(0, 2, true);
    g5.set_edge(1, 2, true);
    Equipartition uneven(5, 2, {0, 0, 0, 1, 1});
    Rat q5 = hom_density_rational(complete_graph(2), reduce_rational(g5, uneven));
    Rat h5 = hom_density_rational(complete_graph(2), g5);
    CHECK(q5 == make_rat(1, 6));
    CHECK(h5 == make_rat(6, 25));
    CHECK(q5 < h5);  // floor violated: unequal class sizes break the bound

    Graph g6(6);
    g6.set_edge(0, 1, true);
    g6.set_edge(0, 2, true);
    g6.set_edge(1, 2, true);
    Equipartition even(6, 2, {0, 0, 0, 1, 1, 1});
    Rat q6 = hom_density_rational(complete_graph(2), reduce_rational(g6, even));
    Rat h6 = hom_density_rational(complete_graph(2), g6);
    CHECK(q6 == make_rat(1, 6));
    CHECK(h6 == make_rat(1, 6));
    CHECK(q6 >= h6);  // with equal classes the floor holds (here with equality)
}

TEST_CASE("rounding toward a target moves the quotient and bounds the edits") {
    Graph k4 = complete_graph(4);
    Equipartition p(4, 2, {0, 0, 1, 1});
    WeightedGraph target(2);  // diagonal 0.5, cross 0
    target.set(0, 0, 0.5);
    target.set(1, 1, 0.5);

    Graph rounded = round_to_target(k4, p, target);
    // All four cross edges are removed; intra pairs are untouched.
    CHECK(rounded.edge_count() == 2);
    CHECK(rounded.adjacent(0, 1));
    CHECK(rounded.adjacent(2, 3));
    CHECK_FALSE(rounded.adjacent(0, 2));

    WeightedGraph after = reduce(rounded, p);
    CHECK(d1(after, target) == 0.0);
    CHECK(edit_distance(k4, rounded) == 0.25);
    CHECK(edit_distance(k4, rounded) <= d1(reduce(k4, p), target));

    WeightedGraph wrong(3);
    CHECK_THROWS_AS(round_to_target(k4, p, wrong), std::invalid_argument);
}

TEST_CASE("exact partition search finds the true minimizer") {
    Graph k22 = complete_bipartite(2, 2);
    WeightedGraph target(2);
    target.set(0, 1, 1.0);
    CountsObjective obj = [&](const PairCount& pc) {
        double sum = 0.0;
        for (int i = 0; i < pc.k; ++i)
            for (int j = 0; j < pc.k; ++j) sum += std::fabs(pc.density(i, j) - target.at(i, j));
        return sum / 4.0;
    };
    ArgminResult exact = argmin_over_equipartitions(k22, 2, obj, SearchMode::exact());
    CHECK(exact.value == 0.0);  // the true bipartition reproduces the target
    CHECK(exact.partition.same_partition(Equipartition(4, 2, {0, 0, 1, 1})));

    ArgminResult heur = argmin_over_equipartitions(k22, 2, obj, SearchMode::heuristic(16, 3));
    CHECK(heur.value == 0.0);
}

TEST_CASE("heuristic search is deterministic and never beats the exact optimum") {
    Graph g = random_graph(8, 0.5, 21);
    WeightedGraph target(3);
    target.set(0, 1, 1.0);
    target.set(1, 2, 0.5);
    CountsObjective obj = [&](const PairCount& pc) {
        double sum = 0.0;
        for (int i = 0; i < pc.k; ++i)
            for (int j = 0; j < pc.k; ++j) sum += std::fabs(pc.density(i, j) - target.at(i, j));
        return sum / 9.0;
    };
    ArgminResult exact = argmin_over_equipartitions(g, 3, obj, SearchMode::exact());
    ArgminResult h1 = argmin_over_equipartitions(g, 3, obj, SearchMode::heuristic(32, 9));
    ArgminResult h2 = argmin_over_equipartitions(g, 3, obj, SearchMode::heuristic(32, 9));
    CHECK(h1.value == h2.value);
    CHECK(h1.partition.same_partition(h2.partition));
    CHECK(h1.value >= exact.value - 1e-12);
}

TEST_CASE("almost-reducibility compares the best quotient against 2/k") {
    // Best 2-class quotient of K4 sits at mean deviation 0.25 from the
    // complete-bipartite target, within the 2/k = 1 margin.
    WeightedGraph cross(2);
    cross.set(0, 1, 1.0);
    ReducibilityResult r = is_almost_reducible(complete_graph(4), cross, SearchMode::exact());
    CHECK(r.member);
    CHECK(r.best_d1 == doctest::Approx(0.25).epsilon(1e-12));
    REQUIRE(r.witness.has_value());

    // An all-ones 3-class target is mean deviation 1 from any quotient of an
    // empty graph, far beyond 2/3.
    WeightedGraph ones(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) ones.set(i, j, 1.0);
    ReducibilityResult miss = is_almost_reducible(empty_graph(9), ones, SearchMode::exact());
    CHECK_FALSE(miss.member);
    CHECK(miss.best_d1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(miss.witness.has_value());

    CHECK_THROWS_AS(is_almost_reducible(complete_graph(2), ones, SearchMode::exact()),
                    std::invalid_argument);
}
