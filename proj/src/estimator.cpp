#include "hpd/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "hpd/errors.hpp"
#include "hpd/homdensity.hpp"
#include "hpd/metrics.hpp"
#include "hpd/regularity.hpp"

namespace hpd {

AttestConstants attest_constants(double delta, long long M, long long n0, double eps) {
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("attest_constants: delta must lie in (0, 1]");
    if (M < 1) throw std::invalid_argument("attest_constants: M must be >= 1");
    if (n0 < 1) throw std::invalid_argument("attest_constants: n0 must be >= 1");
    (void)eps;

    if (M > 1000000000LL)
        throw CapExceededError("attest_constants: M is too large to square without overflow");
    long long m2_int = M * M;
    double m2 = static_cast<double>(m2_int);
    double delta_pow;
    if (delta == 1.0) {
        delta_pow = 1.0;
    } else if (m2_int <= 64) {
        // Repeated multiplication keeps small powers bit-exact for dyadic delta.
        delta_pow = 1.0;
        for (long long i = 0; i < m2_int; ++i) delta_pow *= delta;
    } else {
        delta_pow = std::pow(delta, m2);
    }
    double third = 4.0 * m2 / delta_pow;
    if (!std::isfinite(third) || third > 9.0e18)
        throw CapExceededError(
            "attest_constants: delta^(-M^2) exceeds the representable range; use a smaller M or a "
            "larger delta");
    double raw = std::max({static_cast<double>(n0), 2.0 / delta, third});
    // Snap to integers reached exactly by the closed forms before rounding up.
    double nearest = std::round(raw);
    if (std::fabs(raw - nearest) < 1e-9 * std::max(1.0, std::fabs(nearest))) raw = nearest;
    AttestConstants out;
    out.k0 = static_cast<long long>(std::ceil(raw));
    out.gamma = delta_pow / (8.0 * m2);
    return out;
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median: empty input");
    std::sort(values.begin(), values.end());
    std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

EstimateReport sample_estimate(const Graph& g, const PropertySpec& spec, int s, int trials,
                               std::uint64_t seed) {
    validate_property_spec(spec);
    if (trials < 1) throw std::invalid_argument("sample_estimate: need at least 1 trial");
    if (s < 1 || s > g.n()) throw std::invalid_argument("sample_estimate: need 1 <= s <= n");
    if (s > kOracleDefaultCap)
        throw CapExceededError("sample_estimate: s = " + std::to_string(s) +
                               " exceeds the exact-oracle cap " + std::to_string(kOracleDefaultCap));

    EstimateReport rep;
    rep.method = "sample";
    rep.s = s;
    rep.trials = trials;
    rep.seed = seed;
    for (int t = 0; t < trials; ++t) {
        Graph sample = random_induced_subgraph(g, s, seed + static_cast<std::uint64_t>(t));
        rep.trial_values.push_back(distance_to_property_exact(sample, spec).distance);
    }
    rep.estimate = median(rep.trial_values);
    return rep;
}

namespace {

bool membership_checkable(const Graph& member, const PropertySpec& spec) {
    for (const Graph& f : spec.family) {
        double work = std::pow(static_cast<double>(member.n()), static_cast<double>(f.n()));
        if (work > static_cast<double>(hom_work_cap())) return false;
    }
    return true;
}

}  // namespace

AttestationCodebook build_codebook(std::span<const Graph> members, int K, double gamma,
                                   std::uint64_t seed, const PropertySpec* check) {
    if (members.empty()) throw std::invalid_argument("build_codebook: no members");
    if (K < 1) throw std::invalid_argument("build_codebook: K must be >= 1");
    if (!(gamma > 0.0) || gamma >= 1.0)
        throw std::invalid_argument("build_codebook: gamma must lie in (0, 1)");

    AttestationCodebook book;
    book.K = K;
    book.gamma = gamma;
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
        const Graph& m = members[idx];
        std::string note = "member " + std::to_string(idx) + " (n=" + std::to_string(m.n()) + ")";
        if (check) {
            if (membership_checkable(m, *check)) {
                FreeResult fr = is_induced_free(m, *check);
                if (!fr.free)
                    throw std::invalid_argument("build_codebook: member " + std::to_string(idx) +
                                                " contains a forbidden pattern");
                note += ", membership verified";
            } else {
                note += ", membership trusted (beyond check range)";
            }
        }

        int k0 = std::min({2, K, m.n()});
        int rounds = 0;
        long long reach = k0;
        while (reach * 4 <= K) {
            reach *= 4;
            ++rounds;
        }
        FkResult fk = fk_partition(m, gamma, k0, rounds, seed);
        WeightedGraph entry = reduce(m, fk.partition);
        note += ", k=" + std::to_string(entry.k()) +
                (fk.certified ? ", regularity certified" : ", regularity uncertified");

        bool duplicate = false;
        for (const WeightedGraph& prior : book.entries)
            if (prior.k() == entry.k() && d1(prior, entry) < 1e-6) {
                duplicate = true;
                break;
            }
        if (duplicate) continue;
        book.entries.push_back(std::move(entry));
        book.provenance.push_back(std::move(note));
    }
    return book;
}

EstimateReport codebook_estimate(const Graph& g, const AttestationCodebook& book,
                                 const SearchMode& mode) {
    if (book.entries.empty()) throw std::invalid_argument("codebook_estimate: empty codebook");
    const int n = g.n();

    EstimateReport rep;
    rep.method = "codebook";
    rep.upper_bound_only = true;
    rep.K = book.K;
    rep.budget = mode.kind == SearchMode::Kind::Heuristic ? mode.budget : 0;
    rep.seed = mode.kind == SearchMode::Kind::Heuristic ? mode.seed : 0;

    bool any_feasible = false;
    bool have_best = false;
    double best = 0.0;
    for (std::size_t idx = 0; idx < book.entries.size(); ++idx) {
        const WeightedGraph& entry = book.entries[idx];
        const int k = entry.k();
        // Validity floor: quotients into k classes need k <= n and n >= k^{3/2}.
        if (k > n) continue;
        if (static_cast<long long>(n) * n < static_cast<long long>(k) * k * k) continue;
        any_feasible = true;

        auto objective = [&entry, k](const PairCount& c) {
            double sum = 0.0;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sum += std::fabs(c.density(i, j) - entry.at(i, j));
            return sum / (static_cast<double>(k) * k);
        };
        ArgminResult arg = argmin_over_equipartitions(g, k, objective, mode);
        if (!have_best || arg.value < best) {
            have_best = true;
            best = arg.value;
            rep.argmin_entry = static_cast<int>(idx);
            rep.argmin_partition = std::move(arg.partition);
        }
    }
    if (!any_feasible)
        throw std::invalid_argument(
            "codebook_estimate: no feasible entry: every entry of size k needs k <= n and "
            "n >= k^(3/2), but n = " +
            std::to_string(n));

    rep.estimate = best;
    rep.trial_values = {best};
    return rep;
}

ProbeResult removal_probe(const Graph& g, const PropertySpec& spec, long long mc_samples,
                          std::uint64_t seed) {
    validate_property_spec(spec);
    if (!spec.removal)
        throw std::invalid_argument("removal_probe: the property spec carries no removal constants");
    const RemovalConstants& rc = *spec.removal;

    ProbeResult best;
    bool found = false;
    for (std::size_t i = 0; i < spec.family.size(); ++i) {
        const Graph& f = spec.family[i];
        if (f.n() > rc.M) continue;
        double work = std::pow(static_cast<double>(g.n()), static_cast<double>(f.n()));
        double density;
        bool exact;
        if (work <= static_cast<double>(hom_work_cap())) {
            density = hom_density_graph(f, g).value;
            exact = true;
        } else {
            if (mc_samples < 1)
                throw std::invalid_argument("removal_probe: pattern " + std::to_string(i) +
                                            " needs Monte Carlo but mc_samples < 1");
            density = hom_density_graph_mc(f, g, mc_samples, seed + i).value;
            exact = false;
        }
        if (!found || density > best.density) {
            found = true;
            best.pattern_index = static_cast<int>(i);
            best.density = density;
            best.exceeds_delta = density >= rc.delta;
            best.exact = exact;
        }
    }
    if (!found)
        throw std::invalid_argument("removal_probe: no family pattern has at most M = " +
                                    std::to_string(rc.M) + " vertices");
    return best;
}

AttestationCodebook load_codebook_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path, 0, std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("K") || !j.contains("gamma") || !j.contains("entries"))
            throw std::runtime_error("expected an object with K, gamma, and entries");
        AttestationCodebook book;
        book.K = j.at("K").get<int>();
        book.gamma = j.at("gamma").get<double>();
        for (const auto& ej : j.at("entries")) {
            int k = ej.at("k").get<int>();
            auto rows = ej.at("w").get<std::vector<std::vector<double>>>();
            if (static_cast<int>(rows.size()) != k)
                throw std::runtime_error("entry row count does not match k");
            book.entries.push_back(WeightedGraph::from_rows(rows));
        }
        if (j.contains("provenance"))
            book.provenance = j.at("provenance").get<std::vector<std::string>>();
        else
            book.provenance.assign(book.entries.size(), "unspecified");
        if (book.provenance.size() != book.entries.size())
            throw std::runtime_error("provenance count does not match entry count");
        for (const WeightedGraph& e : book.entries)
            if (e.k() > book.K) throw std::runtime_error("entry larger than the class-count bound K");
        return book;
    } catch (const std::exception& e) {
        throw ParseError(path, 0, e.what());
    }
}

void save_codebook_file(const AttestationCodebook& book, const std::string& path) {
    nlohmann::json entries = nlohmann::json::array();
    for (const WeightedGraph& e : book.entries) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < e.k(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j2 = 0; j2 < e.k(); ++j2) row.push_back(e.at(i, j2));
            rows.push_back(std::move(row));
        }
        entries.push_back(nlohmann::json{{"k", e.k()}, {"w", std::move(rows)}});
    }
    nlohmann::json j{{"K", book.K},
                     {"gamma", book.gamma},
                     {"entries", std::move(entries)},
                     {"provenance", book.provenance}};
    std::ofstream out(path);
    if (!out) throw ParseError(path, 0, "cannot open file for writing");
    out << j.dump(2) << "\n";
}

}  // namespace hpd
