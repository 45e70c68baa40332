#include "hpd/cli.hpp"

#include <chrono>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
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
#include "hpd/report.hpp"
#include "hpd/verify.hpp"

namespace hpd {

namespace {

using Clock = std::chrono::steady_clock;

const char* kUsage =
    "usage: hpdist <subcommand> [options]\n"
    "subcommands:\n"
    "  gen       generate a graph file (random | complete | cycle | path |\n"
    "            complete-bipartite | empty)\n"
    "  quotient  reduce a graph by an equipartition file\n"
    "  hom       induced homomorphism density of a pattern in a host\n"
    "  dist      edit / d1 / cut / property distance\n"
    "  fk        weak regular partition search with certification\n"
    "  estimate  distance estimation by sampling or codebook lookup\n"
    "  probe     densest family pattern in a host\n"
    "  codebook  build an attestation codebook from member graphs\n"
    "  verify    run the invariant suites (exit 0 iff every check passes)\n"
    "\n"
    "Run 'hpdist <subcommand> --help' for flags. Every run writes a JSON\n"
    "report (--output PATH, '-' for standard output). The environment\n"
    "variable HPDIST_WORK_CAP overrides the exact-evaluation work cap.\n";

bool has_json_suffix(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

nlohmann::json graph_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n()}, {"m", g.edge_count()}, {"edges", edges}};
}

nlohmann::json weighted_json(const WeightedGraph& r) { return {{"k", r.k()}, {"w", r.rows()}}; }

nlohmann::json hom_json(const HomEstimate& e) {
    return {{"value", e.value},
            {"std_error", e.std_error},
            {"samples", e.samples},
            {"exact", e.exact}};
}

nlohmann::json outcome_json(const CheckOutcome& c) {
    return {{"name", c.name},
            {"passed", c.passed},
            {"cases", c.cases},
            {"violations", c.violations},
            {"detail", c.detail},
            {"wall_ms", c.wall_ms}};
}

struct RunContext {
    ReportEnvelope env;
    std::string output = "-";
    Clock::time_point start = Clock::now();

    int finish(nlohmann::json result, int status = 0) {
        env.result = std::move(result);
        env.wall_time_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        write_report(env, output);
        return status;
    }
};

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"distance-to-hereditary-property estimation on dense graphs"};
    app.require_subcommand(1);

    // gen ------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    std::string gen_type, gen_out, gen_output = "-";
    int gen_n = 0, gen_a = 0, gen_b = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 0;
    gen->add_option("--type", gen_type, "graph family")
        ->required()
        ->check(CLI::IsMember(
            {"random", "complete", "cycle", "path", "complete-bipartite", "empty"}));
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--a", gen_a, "first side size (complete-bipartite)");
    gen->add_option("--b", gen_b, "second side size (complete-bipartite)");
    gen->add_option("--p", gen_p, "edge probability (random)");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", gen_out, "edge-list file to write")->required();
    gen->add_option("--output", gen_output, "report path, '-' for stdout");

    // quotient -------------------------------------------------------------
    auto* quo = app.add_subcommand("quotient", "reduce a graph by an equipartition");
    std::string quo_graph, quo_partition, quo_out, quo_output = "-";
    quo->add_option("graph", quo_graph, "edge-list file")->required();
    quo->add_option("partition", quo_partition, "partition file (one class index per line)")
        ->required();
    quo->add_option("--out", quo_out, "also save the reduced graph JSON here");
    quo->add_option("--output", quo_output, "report path, '-' for stdout");

    // hom --------------------------------------------------------------------
    auto* hom = app.add_subcommand("hom", "induced homomorphism density");
    std::string hom_pattern, hom_host, hom_output = "-";
    long long hom_mc = 0;
    std::uint64_t hom_seed = 0;
    bool hom_rational = false;
    hom->add_option("--pattern", hom_pattern, "pattern edge-list file")->required();
    hom->add_option("--host", hom_host, "host: edge list, or reduced-graph .json")->required();
    auto* mc_opt = hom->add_option("--mc", hom_mc, "Monte Carlo sample count (0 = exact)");
    hom->add_option("--seed", hom_seed, "sampling seed");
    hom->add_flag("--exact-rational", hom_rational, "exact rational arithmetic")
        ->excludes(mc_opt);
    hom->add_option("--output", hom_output, "report path, '-' for stdout");

    // dist -------------------------------------------------------------------
    auto* dist = app.add_subcommand("dist", "distances between graphs or matrices");
    std::string dist_kind, dist_a, dist_b, dist_output = "-";
    int dist_budget = 32, dist_max_n = kOracleDefaultCap;
    std::uint64_t dist_seed = 0;
    dist->add_option("--kind", dist_kind, "edit | d1 | cut | property")
        ->required()
        ->check(CLI::IsMember({"edit", "d1", "cut", "property"}));
    dist->add_option("a", dist_a, "first input file")->required();
    dist->add_option("b", dist_b, "second input file (property: the family spec JSON)")
        ->required();
    dist->add_option("--budget", dist_budget, "heuristic restarts for cut beyond the exact cap");
    dist->add_option("--seed", dist_seed, "heuristic seed");
    dist->add_option("--max-n", dist_max_n, "vertex cap for the exact property oracle");
    dist->add_option("--output", dist_output, "report path, '-' for stdout");

    // fk ---------------------------------------------------------------------
    auto* fk = app.add_subcommand("fk", "weak regular partition search");
    std::string fk_graph, fk_output = "-";
    double fk_gamma = 0.0;
    int fk_k0 = 2, fk_max_rounds = -1;
    std::uint64_t fk_seed = 0;
    fk->add_option("graph", fk_graph, "edge-list file")->required();
    fk->add_option("--gamma", fk_gamma, "cut-distance target in (0, 1)")->required();
    fk->add_option("--k0", fk_k0, "initial class count");
    fk->add_option("--max-rounds", fk_max_rounds, "refinement round cap (-1 = formula default)");
    fk->add_option("--seed", fk_seed, "heuristic seed (used beyond the exact cap)");
    fk->add_option("--output", fk_output, "report path, '-' for stdout");

    // estimate ---------------------------------------------------------------
    auto* est = app.add_subcommand("estimate", "estimate distance to a property");
    std::string est_method, est_graph, est_spec, est_book, est_output = "-";
    int est_s = 7, est_trials = 25, est_budget = 32, est_max_exact_n = kDefaultEnumerationCap;
    std::uint64_t est_seed = 0;
    est->add_option("--method", est_method, "sample | codebook")
        ->required()
        ->check(CLI::IsMember({"sample", "codebook"}));
    est->add_option("graph", est_graph, "edge-list file")->required();
    est->add_option("--spec", est_spec, "property spec JSON (sample method)");
    est->add_option("--codebook", est_book, "codebook JSON (codebook method)");
    est->add_option("--s", est_s, "sample size per trial");
    est->add_option("--trials", est_trials, "trial count");
    est->add_option("--budget", est_budget,
                    "codebook partition-search restarts (0 = exhaustive)");
    est->add_option("--max-exact-n", est_max_exact_n,
                    "vertex cap for exhaustive partition search");
    est->add_option("--seed", est_seed, "master seed");
    est->add_option("--output", est_output, "report path, '-' for stdout");

    // probe ------------------------------------------------------------------
    auto* probe = app.add_subcommand("probe", "densest family pattern in a host");
    std::string probe_graph, probe_spec, probe_output = "-";
    long long probe_mc = 0;
    std::uint64_t probe_seed = 0;
    probe->add_option("graph", probe_graph, "edge-list file")->required();
    probe->add_option("--spec", probe_spec, "property spec JSON with removal constants")
        ->required();
    probe->add_option("--mc", probe_mc, "Monte Carlo samples when exact counting is too large");
    probe->add_option("--seed", probe_seed, "sampling seed");
    probe->add_option("--output", probe_output, "report path, '-' for stdout");

    // codebook ---------------------------------------------------------------
    auto* book = app.add_subcommand("codebook", "build an attestation codebook");
    std::vector<std::string> book_members;
    std::string book_out, book_spec, book_output = "-";
    int book_k = 0;
    double book_gamma = 0.0;
    std::uint64_t book_seed = 0;
    book->add_option("--members", book_members, "member edge-list files")
        ->required()
        ->expected(-1);
    book->add_option("--K", book_k, "class-count bound")->required();
    book->add_option("--gamma", book_gamma, "regularity target")->required();
    book->add_option("--seed", book_seed, "partition seed");
    book->add_option("--out", book_out, "codebook JSON to write")->required();
    book->add_option("--spec", book_spec, "property spec JSON to screen members against");
    book->add_option("--output", book_output, "report path, '-' for stdout");

    // verify -----------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "run the invariant suites");
    std::string ver_suite = "acceptance", ver_output = "-";
    int ver_max_n = 9;
    std::uint64_t ver_seed = 1;
    ver->add_option("--suite", ver_suite, "lemmas | acceptance")
        ->check(CLI::IsMember({"lemmas", "acceptance"}));
    ver->add_option("--max-n", ver_max_n, "instance-size cap for the lemma suite");
    ver->add_option("--seed", ver_seed, "suite seed (lemma suite)");
    ver->add_option("--output", ver_output, "report path, '-' for stdout");

    app.parse(argc, argv);

    RunContext ctx;

    if (gen->parsed()) {
        ctx.output = gen_output;
        ctx.env.subcommand = "gen";
        ctx.env.seed = gen_seed;
        ctx.env.config = {{"type", gen_type}, {"n", gen_n},       {"a", gen_a},
                          {"b", gen_b},       {"p", gen_p},       {"seed", gen_seed},
                          {"out", gen_out},   {"output", gen_output}};
        Graph g;
        if (gen_type == "random")
            g = random_graph(gen_n, gen_p, gen_seed);
        else if (gen_type == "complete")
            g = complete_graph(gen_n);
        else if (gen_type == "cycle")
            g = cycle_graph(gen_n);
        else if (gen_type == "path")
            g = path_graph(gen_n);
        else if (gen_type == "complete-bipartite")
            g = complete_bipartite(gen_a, gen_b);
        else
            g = empty_graph(gen_n);
        save_edge_list_file(g, gen_out);
        return ctx.finish({{"n", g.n()}, {"m", g.edge_count()}, {"path", gen_out}});
    }

    if (quo->parsed()) {
        ctx.output = quo_output;
        ctx.env.subcommand = "quotient";
        ctx.env.config = {{"graph", quo_graph}, {"partition", quo_partition},
                          {"out", quo_out},     {"output", quo_output}};
        Graph g = load_edge_list_file(quo_graph);
        ctx.env.add_input(quo_graph);
        Equipartition p = load_partition_file(quo_partition);
        ctx.env.add_input(quo_partition);
        if (p.n() != g.n())
            throw std::invalid_argument("quotient: partition covers " + std::to_string(p.n()) +
                                        " vertices but the graph has " + std::to_string(g.n()));
        WeightedGraph r = reduce(g, p);
        if (!quo_out.empty()) save_weighted_json_file(r, quo_out);
        return ctx.finish(weighted_json(r));
    }

    if (hom->parsed()) {
        ctx.output = hom_output;
        ctx.env.subcommand = "hom";
        ctx.env.seed = hom_seed;
        ctx.env.config = {{"pattern", hom_pattern},
                          {"host", hom_host},
                          {"mc", hom_mc},
                          {"seed", hom_seed},
                          {"exact_rational", hom_rational},
                          {"output", hom_output}};
        Graph f = load_edge_list_file(hom_pattern);
        ctx.env.add_input(hom_pattern);
        nlohmann::json result;
        if (has_json_suffix(hom_host)) {
            WeightedGraph host = load_weighted_json_file(hom_host);
            ctx.env.add_input(hom_host);
            if (hom_rational) {
                RatMatrix m(host.k());
                for (int i = 0; i < host.k(); ++i)
                    for (int j = 0; j < host.k(); ++j) m.at(i, j) = Rat(host.at(i, j));
                Rat v = hom_density_rational(f, m);
                result = {{"value", v.get_d()},
                          {"value_rational", rat_to_string(v)},
                          {"exact", true}};
            } else if (hom_mc > 0) {
                result = hom_json(hom_density_weighted_mc(f, host, hom_mc, hom_seed));
            } else {
                result = hom_json(hom_density_weighted(f, host));
            }
        } else {
            Graph host = load_edge_list_file(hom_host);
            ctx.env.add_input(hom_host);
            if (hom_rational) {
                Rat v = hom_density_rational(f, host);
                result = {{"value", v.get_d()},
                          {"value_rational", rat_to_string(v)},
                          {"exact", true}};
            } else if (hom_mc > 0) {
                result = hom_json(hom_density_graph_mc(f, host, hom_mc, hom_seed));
            } else {
                result = hom_json(hom_density_graph(f, host));
            }
        }
        return ctx.finish(result);
    }

    if (dist->parsed()) {
        ctx.output = dist_output;
        ctx.env.subcommand = "dist";
        ctx.env.seed = dist_seed;
        ctx.env.config = {{"kind", dist_kind},     {"a", dist_a},
                          {"b", dist_b},           {"budget", dist_budget},
                          {"seed", dist_seed},     {"max_n", dist_max_n},
                          {"output", dist_output}};
        nlohmann::json result;
        if (dist_kind == "edit") {
            Graph g = load_edge_list_file(dist_a);
            ctx.env.add_input(dist_a);
            Graph h = load_edge_list_file(dist_b);
            ctx.env.add_input(dist_b);
            result = {{"value", edit_distance(g, h)}};
        } else if (dist_kind == "d1") {
            WeightedGraph a = load_weighted_json_file(dist_a);
            ctx.env.add_input(dist_a);
            WeightedGraph b = load_weighted_json_file(dist_b);
            ctx.env.add_input(dist_b);
            result = {{"value", d1(a, b)}};
        } else if (dist_kind == "cut") {
            WeightedGraph a = load_weighted_json_file(dist_a);
            ctx.env.add_input(dist_a);
            WeightedGraph b = load_weighted_json_file(dist_b);
            ctx.env.add_input(dist_b);
            bool exact = a.k() <= kCutExactCap;
            CutResult res = exact ? cut_distance_exact(a, b)
                                  : cut_distance_heuristic(a, b, dist_budget, dist_seed);
            result = {{"value", res.distance},
                      {"exact", exact},
                      {"witness",
                       {{"alpha", res.witness.alpha},
                        {"beta", res.witness.beta},
                        {"signed_value", res.witness.value}}}};
        } else {
            Graph g = load_edge_list_file(dist_a);
            ctx.env.add_input(dist_a);
            PropertySpec spec = load_property_spec_file(dist_b);
            ctx.env.add_input(dist_b);
            PropertyDistance pd = distance_to_property_exact(g, spec, dist_max_n);
            result = {{"value", pd.distance},
                      {"edits", pd.edits},
                      {"witness", graph_json(pd.witness)}};
        }
        return ctx.finish(result);
    }

    if (fk->parsed()) {
        ctx.output = fk_output;
        ctx.env.subcommand = "fk";
        ctx.env.seed = fk_seed;
        ctx.env.config = {{"graph", fk_graph},
                          {"gamma", fk_gamma},
                          {"k0", fk_k0},
                          {"max_rounds", fk_max_rounds},
                          {"seed", fk_seed},
                          {"output", fk_output}};
        Graph g = load_edge_list_file(fk_graph);
        ctx.env.add_input(fk_graph);
        FkResult res = fk_partition(g, fk_gamma, fk_k0, fk_max_rounds, fk_seed);
        return ctx.finish({{"assignment", res.partition.assignment()},
                           {"k", res.partition.k()},
                           {"gamma_achieved", res.gamma_achieved},
                           {"rounds", res.rounds},
                           {"certified", res.certified},
                           {"energy_log", res.energy_log},
                           {"witness_log", res.witness_log}});
    }

    if (est->parsed()) {
        ctx.output = est_output;
        ctx.env.subcommand = "estimate";
        ctx.env.seed = est_seed;
        ctx.env.config = {{"method", est_method},   {"graph", est_graph},
                          {"spec", est_spec},       {"codebook", est_book},
                          {"s", est_s},             {"trials", est_trials},
                          {"budget", est_budget},   {"max_exact_n", est_max_exact_n},
                          {"seed", est_seed},       {"output", est_output}};
        Graph g = load_edge_list_file(est_graph);
        ctx.env.add_input(est_graph);
        EstimateReport rep;
        if (est_method == "sample") {
            if (est_spec.empty())
                throw std::invalid_argument("estimate: --method sample requires --spec");
            PropertySpec spec = load_property_spec_file(est_spec);
            ctx.env.add_input(est_spec);
            rep = sample_estimate(g, spec, est_s, est_trials, est_seed);
        } else {
            if (est_book.empty())
                throw std::invalid_argument("estimate: --method codebook requires --codebook");
            AttestationCodebook bk = load_codebook_file(est_book);
            ctx.env.add_input(est_book);
            SearchMode mode = est_budget > 0 ? SearchMode::heuristic(est_budget, est_seed)
                                             : SearchMode::exact(est_max_exact_n);
            rep = codebook_estimate(g, bk, mode);
        }
        nlohmann::json result = {{"method", rep.method},
                                 {"estimate", rep.estimate},
                                 {"trial_values", rep.trial_values},
                                 {"upper_bound_only", rep.upper_bound_only},
                                 {"s", rep.s},
                                 {"trials", rep.trials},
                                 {"K", rep.K},
                                 {"budget", rep.budget},
                                 {"seed", rep.seed}};
        if (rep.argmin_entry >= 0) result["argmin_entry"] = rep.argmin_entry;
        if (rep.argmin_partition) result["argmin_assignment"] = rep.argmin_partition->assignment();
        return ctx.finish(result);
    }

    if (probe->parsed()) {
        ctx.output = probe_output;
        ctx.env.subcommand = "probe";
        ctx.env.seed = probe_seed;
        ctx.env.config = {{"graph", probe_graph},
                          {"spec", probe_spec},
                          {"mc", probe_mc},
                          {"seed", probe_seed},
                          {"output", probe_output}};
        Graph g = load_edge_list_file(probe_graph);
        ctx.env.add_input(probe_graph);
        PropertySpec spec = load_property_spec_file(probe_spec);
        ctx.env.add_input(probe_spec);
        ProbeResult res = removal_probe(g, spec, probe_mc, probe_seed);
        return ctx.finish({{"pattern_index", res.pattern_index},
                           {"density", res.density},
                           {"exceeds_delta", res.exceeds_delta},
                           {"exact", res.exact}});
    }

    if (book->parsed()) {
        ctx.output = book_output;
        ctx.env.subcommand = "codebook";
        ctx.env.seed = book_seed;
        ctx.env.config = {{"members", book_members}, {"K", book_k},
                          {"gamma", book_gamma},     {"seed", book_seed},
                          {"out", book_out},         {"spec", book_spec},
                          {"output", book_output}};
        std::vector<Graph> members;
        for (const std::string& path : book_members) {
            members.push_back(load_edge_list_file(path));
            ctx.env.add_input(path);
        }
        PropertySpec spec;
        bool have_spec = !book_spec.empty();
        if (have_spec) {
            spec = load_property_spec_file(book_spec);
            ctx.env.add_input(book_spec);
        }
        AttestationCodebook bk =
            build_codebook(members, book_k, book_gamma, book_seed, have_spec ? &spec : nullptr);
        save_codebook_file(bk, book_out);
        return ctx.finish({{"K", bk.K},
                           {"gamma", bk.gamma},
                           {"entries", bk.entries.size()},
                           {"provenance", bk.provenance},
                           {"path", book_out}});
    }

    // verify
    ctx.output = ver_output;
    ctx.env.subcommand = "verify";
    ctx.env.seed = ver_seed;
    ctx.env.config = {{"suite", ver_suite},
                      {"max_n", ver_max_n},
                      {"seed", ver_seed},
                      {"output", ver_output}};
    std::vector<CheckOutcome> outcomes = ver_suite == "acceptance"
                                             ? run_acceptance()
                                             : run_lemma_suite(ver_max_n, ver_seed);
    bool all_passed = true;
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckOutcome& c : outcomes) {
        all_passed = all_passed && c.passed;
        checks.push_back(outcome_json(c));
        std::cerr << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (cases=" << c.cases
                  << ", violations=" << c.violations << ")";
        if (!c.passed && !c.detail.empty()) std::cerr << " — " << c.detail;
        std::cerr << "\n";
    }
    return ctx.finish({{"suite", ver_suite}, {"all_passed", all_passed}, {"checks", checks}},
                      all_passed ? 0 : 1);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    static const std::set<std::string> kKnown = {"gen",      "quotient", "hom",
                                                 "dist",     "fk",       "estimate",
                                                 "probe",    "codebook", "verify"};
    if (argc < 2) {
        std::cerr << kUsage;
        return 1;
    }
    std::string first = argv[1];
    if (first == "-h" || first == "--help" || first == "help") {
        std::cout << kUsage;
        return 0;
    }
    if (!first.empty() && first[0] != '-' && kKnown.find(first) == kKnown.end()) {
        std::cerr << "hpdist: unknown subcommand '" << first << "'\n\n" << kUsage;
        return 1;
    }

    try {
        return dispatch(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << kUsage;
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "hpdist: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "hpdist: " << e.what() << "\n";
        return 2;
    } catch (const CapExceededError& e) {
        std::cerr << "hpdist: " << e.what() << "\n";
        return 3;
    } catch (const PropertyEmptyError& e) {
        std::cerr << "hpdist: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "hpdist: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "hpdist: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace hpd
