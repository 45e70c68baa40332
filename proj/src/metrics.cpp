#include "hpd/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "hpd/errors.hpp"
#include "hpd/homdensity.hpp"
#include "hpd/rng.hpp"

namespace hpd {

double edit_distance(const Graph& g, const Graph& h) {
    if (g.n() != h.n()) throw std::invalid_argument("edit_distance: graphs must share a vertex set");
    long long diff = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v) != h.adjacent(u, v)) ++diff;
    return static_cast<double>(diff) / (static_cast<double>(g.n()) * g.n());
}

double d1(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.k() != b.k()) throw std::invalid_argument("d1: size mismatch");
    double sum = 0.0;
    for (int i = 0; i < a.k(); ++i)
        for (int j = 0; j < a.k(); ++j) sum += std::fabs(a.at(i, j) - b.at(i, j));
    return sum / (static_cast<double>(a.k()) * a.k());
}

Rat d1_rational(const RatMatrix& a, const RatMatrix& b) {
    if (a.k != b.k) throw std::invalid_argument("d1_rational: size mismatch");
    Rat sum = 0;
    for (int i = 0; i < a.k; ++i)
        for (int j = 0; j < a.k; ++j) sum += abs(a.at(i, j) - b.at(i, j));
    return sum / make_rat(static_cast<long long>(a.k) * a.k, 1);
}

// --- cut distance ------------------------------------------------------------

namespace {

std::vector<double> weight_difference(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.k() != b.k()) throw std::invalid_argument("cut distance: size mismatch");
    int k = a.k();
    std::vector<double> d(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) d[static_cast<std::size_t>(i) * k + j] = a.at(i, j) - b.at(i, j);
    return d;
}

// Fresh evaluation of the best response to a fixed alpha: row sums t, the
// better sign direction, and the signed form value.
struct BetaResponse {
    std::vector<double> beta;
    double signed_value = 0.0;
};

BetaResponse best_beta(const std::vector<double>& d, int k, const std::vector<double>& alpha) {
    std::vector<double> t(k, 0.0);
    for (int x = 0; x < k; ++x) {
        if (alpha[x] == 0.0) continue;
        for (int y = 0; y < k; ++y) t[y] += alpha[x] * d[static_cast<std::size_t>(x) * k + y];
    }
    double pos = 0.0, neg = 0.0;
    for (int y = 0; y < k; ++y) {
        if (t[y] > 0.0)
            pos += t[y];
        else
            neg -= t[y];
    }
    BetaResponse out;
    out.beta.assign(k, 0.0);
    if (pos >= neg) {
        for (int y = 0; y < k; ++y)
            if (t[y] > 0.0) out.beta[y] = 1.0;
    } else {
        for (int y = 0; y < k; ++y)
            if (t[y] < 0.0) out.beta[y] = 1.0;
    }
    for (int y = 0; y < k; ++y) out.signed_value += t[y] * out.beta[y];
    return out;
}

// True if mask a, read as the vector (a_0, a_1, ...), is lexicographically
// smaller than mask b.
bool lex_smaller_mask(std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    int i = std::countr_zero(a ^ b);
    return ((a >> i) & 1u) == 0;
}

}  // namespace

CutResult cut_distance_exact(const WeightedGraph& a, const WeightedGraph& b) {
    int k = a.k();
    std::vector<double> d = weight_difference(a, b);
    if (k > kCutExactCap)
        throw CapExceededError("cut_distance_exact: k = " + std::to_string(k) + " exceeds the cap " +
                               std::to_string(kCutExactCap) + "; use the heuristic");

    std::vector<double> t(k, 0.0);
    double best = 0.0;
    std::uint32_t best_mask = 0;  // alpha = all-zeros gives value 0
    std::uint32_t prev = 0;
    std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
    for (std::uint32_t m = 1; m <= full; ++m) {
        std::uint32_t gray = m ^ (m >> 1);
        std::uint32_t flipped = gray ^ prev;
        int x = std::countr_zero(flipped);
        double sgn = (gray & flipped) ? 1.0 : -1.0;
        const double* row = d.data() + static_cast<std::size_t>(x) * k;
        for (int y = 0; y < k; ++y) t[y] += sgn * row[y];
        prev = gray;
        // Periodically rebuild t to bound floating-point drift.
        if ((m & 0xFFFu) == 0) {
            std::fill(t.begin(), t.end(), 0.0);
            for (int xx = 0; xx < k; ++xx) {
                if (!((gray >> xx) & 1u)) continue;
                const double* r2 = d.data() + static_cast<std::size_t>(xx) * k;
                for (int y = 0; y < k; ++y) t[y] += r2[y];
            }
        }
        double pos = 0.0, neg = 0.0;
        for (int y = 0; y < k; ++y) {
            if (t[y] > 0.0)
                pos += t[y];
            else
                neg -= t[y];
        }
        double v = std::max(pos, neg);
        if (v > best || (v == best && lex_smaller_mask(gray, best_mask))) {
            best = v;
            best_mask = gray;
        }
    }

    CutWitness w;
    w.alpha.assign(k, 0.0);
    for (int x = 0; x < k; ++x)
        if ((best_mask >> x) & 1u) w.alpha[x] = 1.0;
    BetaResponse resp = best_beta(d, k, w.alpha);
    w.beta = std::move(resp.beta);
    w.value = resp.signed_value / (static_cast<double>(k) * k);
    return CutResult{std::fabs(w.value), std::move(w)};
}

CutResult cut_distance_heuristic(const WeightedGraph& a, const WeightedGraph& b, int restarts,
                                 std::uint64_t seed) {
    int k = a.k();
    std::vector<double> d = weight_difference(a, b);
    if (restarts < 1) throw std::invalid_argument("cut_distance_heuristic: need at least 1 restart");
    Rng rng(seed);

    CutWitness best;
    best.alpha.assign(k, 0.0);
    best.beta.assign(k, 0.0);
    best.value = 0.0;
    double best_abs = 0.0;

    std::vector<double> alpha(k), beta(k), t(k), u(k);
    for (int rs = 0; rs < restarts; ++rs) {
        std::vector<double> start_a(k), start_b(k);
        for (int i = 0; i < k; ++i) start_a[i] = static_cast<double>(rng.below(2));
        for (int i = 0; i < k; ++i) start_b[i] = static_cast<double>(rng.below(2));
        for (double dir : {1.0, -1.0}) {
            alpha = start_a;
            beta = start_b;
            for (int iter = 0; iter < 100; ++iter) {
                bool changed = false;
                // Best beta for fixed alpha in direction dir.
                std::fill(t.begin(), t.end(), 0.0);
                for (int x = 0; x < k; ++x) {
                    if (alpha[x] == 0.0) continue;
                    const double* row = d.data() + static_cast<std::size_t>(x) * k;
                    for (int y = 0; y < k; ++y) t[y] += row[y];
                }
                for (int y = 0; y < k; ++y) {
                    double want = (dir * t[y] > 0.0) ? 1.0 : 0.0;
                    if (beta[y] != want) {
                        beta[y] = want;
                        changed = true;
                    }
                }
                // Best alpha for fixed beta.
                std::fill(u.begin(), u.end(), 0.0);
                for (int x = 0; x < k; ++x) {
                    const double* row = d.data() + static_cast<std::size_t>(x) * k;
                    for (int y = 0; y < k; ++y)
                        if (beta[y] != 0.0) u[x] += row[y];
                }
                for (int x = 0; x < k; ++x) {
                    double want = (dir * u[x] > 0.0) ? 1.0 : 0.0;
                    if (alpha[x] != want) {
                        alpha[x] = want;
                        changed = true;
                    }
                }
                if (!changed) break;
            }
            double value = 0.0;
            for (int x = 0; x < k; ++x) {
                if (alpha[x] == 0.0) continue;
                const double* row = d.data() + static_cast<std::size_t>(x) * k;
                for (int y = 0; y < k; ++y) value += row[y] * beta[y];
            }
            if (std::fabs(value) > best_abs) {
                best_abs = std::fabs(value);
                best.alpha = alpha;
                best.beta = beta;
                best.value = value / (static_cast<double>(k) * k);
            }
        }
    }
    return CutResult{std::fabs(best.value), std::move(best)};
}

// --- distance to a hereditary property --------------------------------------

namespace {

struct PairId {
    int u, v;  // u < v
};

// Branch-and-bound: any edit set making the host free must toggle a pair
// inside every induced forbidden copy, so branch over the first copy's pairs.
// Banning tried pairs inside each branch keeps subsets duplicate-free without
// losing completeness.
bool fix_within_budget(Graph& work, std::span<const Graph> family, int budget, std::vector<char>& banned,
                       int n, std::vector<PairId>& chosen) {
    auto emb = find_induced_embedding(work, family);
    if (!emb) return true;
    if (budget == 0) return false;

    std::vector<int> verts = emb->vertices;
    std::sort(verts.begin(), verts.end());
    std::vector<PairId> cand;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) cand.push_back({verts[i], verts[j]});
    // Deletions first, lexicographic inside each group.
    std::stable_partition(cand.begin(), cand.end(),
                          [&](const PairId& p) { return work.adjacent(p.u, p.v); });

    std::vector<int> newly_banned;
    bool found = false;
    for (const PairId& p : cand) {
        int pid = p.u * n + p.v;
        if (banned[pid]) continue;
        work.toggle_edge(p.u, p.v);
        chosen.push_back(p);
        if (fix_within_budget(work, family, budget - 1, banned, n, chosen)) {
            found = true;
            break;
        }
        chosen.pop_back();
        work.toggle_edge(p.u, p.v);
        banned[pid] = 1;
        newly_banned.push_back(pid);
    }
    for (int pid : newly_banned) banned[pid] = 0;
    return found;
}

}  // namespace

PropertyDistance distance_to_property_exact(const Graph& g, const PropertySpec& spec, int max_n) {
    validate_property_spec(spec);
    int n = g.n();
    if (n < 1) throw std::invalid_argument("distance_to_property_exact: empty host");
    if (n > max_n)
        throw CapExceededError("distance_to_property_exact: n = " + std::to_string(n) +
                               " exceeds the oracle cap " + std::to_string(max_n));
    for (const Graph& f : spec.family)
        if (f.n() == 1)
            throw PropertyEmptyError(
                "property empty: a single-vertex forbidden pattern excludes every graph on " +
                std::to_string(n) + " vertices");

    int total_pairs = n * (n - 1) / 2;
    std::vector<char> banned(static_cast<std::size_t>(n) * n, 0);
    std::vector<PairId> chosen;
    for (int budget = 0; budget <= total_pairs; ++budget) {
        Graph work = g;
        chosen.clear();
        std::fill(banned.begin(), banned.end(), 0);
        if (fix_within_budget(work, spec.family, budget, banned, n, chosen)) {
            Graph witness = g;
            for (const PairId& p : chosen) witness.toggle_edge(p.u, p.v);
            long long edits = static_cast<long long>(chosen.size());
            return PropertyDistance{static_cast<double>(edits) / (static_cast<double>(n) * n), edits,
                                    std::move(witness)};
        }
    }
    // Budgets up to the full pair count cover every graph on n vertices.
    throw PropertyEmptyError("property empty: no graph on " + std::to_string(n) +
                             " vertices satisfies the property");
}

}  // namespace hpd
