#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hpd/graph.hpp"
#include "hpd/metrics.hpp"
#include "hpd/partition.hpp"
#include "hpd/quotient.hpp"
#include "hpd/regularity.hpp"
#include "hpd/rng.hpp"

using namespace hpd;

TEST_CASE("partition energy matches the hand value on K4 halves") {
    Graph k4 = complete_graph(4);
    Equipartition p(4, 2, {0, 0, 1, 1});
    // counts: 2 on the diagonal blocks, 4 off; energy = (1 + 4 + 4 + 1)/16.
    CHECK(fk_energy(k4, p) == doctest::Approx(0.625).epsilon(1e-15));
    // Energy never exceeds the maximum density of 1.
    Graph g = random_graph(10, 0.5, 1);
    CHECK(fk_energy(g, random_equipartition(10, 3, 2)) <= 1.0);
}

TEST_CASE("round budget formula and argument validation") {
    CHECK(default_fk_rounds(0.5) == 9);
    CHECK(default_fk_rounds(0.2) == 51);
    CHECK_THROWS_AS(default_fk_rounds(0.0), std::invalid_argument);
    CHECK_THROWS_AS(default_fk_rounds(1.0), std::invalid_argument);
    Graph g = complete_graph(4);
    CHECK_THROWS_AS(fk_partition(g, 0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(fk_partition(g, 1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(fk_partition(g, 0.2, 0), std::invalid_argument);
    CHECK_THROWS_AS(fk_partition(g, 0.2, 5), std::invalid_argument);
}

TEST_CASE("small instances always certify and verification agrees") {
    for (std::uint64_t seed : {0ull, 1ull, 2ull, 3ull, 4ull}) {
        FkResult res = fk_partition(complete_bipartite(4, 4), 0.05, 2, -1, seed);
        CHECK(res.certified);
        CHECK(res.gamma_achieved <= 0.05);
        CHECK(res.partition.k() <= 8);
        FkVerification ver = verify_fk(complete_bipartite(4, 4), res.partition, 0.05);
        CHECK(ver.verdict == FkVerdict::CertifiedPass);
        CHECK(ver.value == doctest::Approx(res.gamma_achieved).epsilon(1e-12));
    }

    // A complete graph is its own blow-up at any equipartition up to 1/n
    // diagonal effects, so a loose target certifies in the first round.
    FkResult easy = fk_partition(complete_graph(12), 0.05, 2, -1, 9);
    CHECK(easy.certified);
    CHECK(easy.rounds == 0);
    CHECK(easy.energy_log.size() == 1);
}

TEST_CASE("tight targets drive multi-round refinement with monotone energy") {
    Graph g = random_graph(18, 0.5, 7);
    FkResult res = fk_partition(g, 0.03, 2, -1, 0);
    CHECK(res.certified);
    CHECK(res.rounds >= 2);
    CHECK(res.partition.k() <= 18);
    CHECK(res.gamma_achieved <= 0.03);
    REQUIRE(res.energy_log.size() == static_cast<std::size_t>(res.rounds) + 1);
    REQUIRE(res.witness_log.size() == res.energy_log.size());
    for (std::size_t r = 1; r < res.energy_log.size(); ++r) {
        double gain = res.energy_log[r] - res.energy_log[r - 1];
        CHECK(gain >= -1e-12);
        // Refining along a cut witness of value c gains at least c^2/2.
        double c = res.witness_log[r - 1];
        CHECK(gain >= c * c / 2.0 - 1e-9);
    }

    FkResult again = fk_partition(g, 0.03, 2, -1, 0);
    CHECK(again.partition.assignment() == res.partition.assignment());
    CHECK(again.energy_log == res.energy_log);
    CHECK(again.witness_log == res.witness_log);
}

TEST_CASE("the energy increment bound holds across a seeded family") {
    for (int i = 0; i < 12; ++i) {
        int n = 14 + 3 * (i % 3);
        Graph g = random_graph(n, 0.5, mix_seed(0x5EED, i));
        FkResult res = fk_partition(g, 0.02, 2, -1, static_cast<std::uint64_t>(i));
        CHECK(res.certified);
        for (std::size_t r = 1; r < res.energy_log.size(); ++r) {
            double gain = res.energy_log[r] - res.energy_log[r - 1];
            double c = res.witness_log[r - 1];
            CHECK(gain >= c * c / 2.0 - 1e-9);
        }
    }
}

TEST_CASE("forced class-count ceilings end the search uncertified") {
    // One round from k0=2 can reach at most 8 classes; a sub-singleton target
    // on a structured graph cannot be met there, so the cap is the stopper.
    Graph g = random_graph(16, 0.5, 3);
    FkResult res = fk_partition(g, 0.005, 2, 1, 5);
    if (!res.certified) {
        CHECK(res.partition.k() <= 8);
        CHECK(res.gamma_achieved > 0.005);
        // The reported partition is the best one visited.
        FkVerification ver = verify_fk(g, res.partition, 0.005);
        CHECK(ver.verdict == FkVerdict::CertifiedFail);
        CHECK(ver.value == doctest::Approx(res.gamma_achieved).epsilon(1e-12));
    }
    // With the full default budget the same instance certifies.
    FkResult full = fk_partition(g, 0.005, 2, -1, 5);
    CHECK(full.certified);
}

TEST_CASE("verification reports each verdict kind") {
    // Exact range, failing target.
    Graph k4 = complete_graph(4);
    Equipartition whole(4, 1, {0, 0, 0, 0});
    FkVerification fail = verify_fk(k4, whole, 0.01);
    CHECK(fail.verdict == FkVerdict::CertifiedFail);
    CHECK(fail.value > 0.01);

    // Exact range, passing target.
    FkVerification pass = verify_fk(k4, whole, 0.5);
    CHECK(pass.verdict == FkVerdict::CertifiedPass);

    // Beyond the exact cap the check is one-sided.
    Graph big = random_graph(30, 0.5, 11);
    Equipartition p = random_equipartition(30, 2, 1);
    FkVerification refuted = verify_fk(big, p, 1e-6);
    CHECK(refuted.verdict == FkVerdict::Refuted);
    CHECK(refuted.value > 1e-6);
    FkVerification unknown = verify_fk(big, p, 0.9);
    CHECK(unknown.verdict == FkVerdict::Unknown);
    CHECK(unknown.value <= 0.9);
}

TEST_CASE("beyond the exact cap the search itself degrades gracefully") {
    Graph big = random_graph(26, 0.5, 13);
    FkResult res = fk_partition(big, 0.2, 2, -1, 4);
    CHECK_FALSE(res.certified);  // heuristic evaluation cannot certify
    CHECK(res.gamma_achieved <= 0.2);
    FkResult again = fk_partition(big, 0.2, 2, -1, 4);
    CHECK(again.partition.assignment() == res.partition.assignment());
    CHECK(again.gamma_achieved == res.gamma_achieved);
}
