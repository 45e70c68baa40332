#include "hpd/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hpd/errors.hpp"
#include "hpd/rng.hpp"

namespace hpd {

PairCount pair_counts(const Graph& g, const Equipartition& p) {
    if (p.n() != g.n()) throw std::invalid_argument("pair_counts: partition is for a different vertex count");
    int k = p.k();
    PairCount pc;
    pc.k = k;
    pc.sizes = p.class_sizes();
    pc.counts.assign(static_cast<std::size_t>(k) * k, 0);
    for (int u = 0; u < g.n(); ++u) {
        int cu = p.class_of(u);
        for_each_neighbor(g, u, [&](int v) { ++pc.counts[static_cast<std::size_t>(cu) * k + p.class_of(v)]; });
    }
    return pc;
}

WeightedGraph reduce(const Graph& g, const Equipartition& p) {
    PairCount pc = pair_counts(g, p);
    WeightedGraph r(pc.k);
    for (int i = 0; i < pc.k; ++i)
        for (int j = i; j < pc.k; ++j) r.set(i, j, pc.density(i, j));
    return r;
}

RatMatrix reduce_rational(const Graph& g, const Equipartition& p) {
    PairCount pc = pair_counts(g, p);
    RatMatrix r(pc.k);
    for (int i = 0; i < pc.k; ++i)
        for (int j = 0; j < pc.k; ++j)
            r.at(i, j) = make_rat(pc.at(i, j), static_cast<long long>(pc.sizes[i]) * pc.sizes[j]);
    return r;
}

WeightedGraph blow_up_reduced(const Graph& g, const Equipartition& p) {
    WeightedGraph r = reduce(g, p);
    WeightedGraph out(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u; v < g.n(); ++v) out.set(u, v, r.at(p.class_of(u), p.class_of(v)));
    return out;
}

// --- equipartition search --------------------------------------------------

namespace {

// Class assignment with incrementally maintained ordered pair counts.
struct SearchState {
    const Graph* g = nullptr;
    int n = 0, k = 0;
    std::vector<int> cls;
    std::vector<int> sizes;
    std::vector<long long> counts;

    void init(const Graph& graph, const Equipartition& p) {
        g = &graph;
        n = graph.n();
        k = p.k();
        cls = p.assignment();
        PairCount pc = pair_counts(graph, p);
        sizes = pc.sizes;
        counts = pc.counts;
    }

    void move_vertex(int u, int to) {
        int from = cls[u];
        if (from == to) return;
        // cls[u] is updated only after the scan, so same-class neighbors hit
        // the diagonal cells twice, matching the doubled intra convention.
        for_each_neighbor(*g, u, [&](int w) {
            int c = cls[w];
            --counts[static_cast<std::size_t>(from) * k + c];
            --counts[static_cast<std::size_t>(c) * k + from];
            ++counts[static_cast<std::size_t>(to) * k + c];
            ++counts[static_cast<std::size_t>(c) * k + to];
        });
        --sizes[from];
        ++sizes[to];
        cls[u] = to;
    }

    PairCount snapshot() const {
        PairCount pc;
        pc.k = k;
        pc.sizes = sizes;
        pc.counts = counts;
        return pc;
    }

    Equipartition partition() const { return Equipartition(n, k, cls); }
};

double descend(SearchState& st, const CountsObjective& objective, int max_iters) {
    int n = st.n, k = st.k;
    int q = n / k, r = n % k;
    double cur = objective(st.snapshot());
    for (int iter = 0; iter < max_iters; ++iter) {
        double best_val = cur;
        int best_u = -1, best_v = -1, best_c = -1;  // swap (u, v) or single move (u -> c)

        // Single moves are legal only from a size-(q+1) class to a size-q one.
        if (r > 0) {
            for (int u = 0; u < n; ++u) {
                int a = st.cls[u];
                if (st.sizes[a] != q + 1) continue;
                for (int c = 0; c < k; ++c) {
                    if (c == a || st.sizes[c] != q) continue;
                    st.move_vertex(u, c);
                    double val = objective(st.snapshot());
                    st.move_vertex(u, a);
                    if (val < best_val - 1e-15) {
                        best_val = val;
                        best_u = u;
                        best_v = -1;
                        best_c = c;
                    }
                }
            }
        }

        // Swapping two vertices in different classes always preserves sizes.
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                int a = st.cls[u], b = st.cls[v];
                if (a == b) continue;
                st.move_vertex(u, b);
                st.move_vertex(v, a);
                double val = objective(st.snapshot());
                st.move_vertex(v, b);
                st.move_vertex(u, a);
                if (val < best_val - 1e-15) {
                    best_val = val;
                    best_u = u;
                    best_v = v;
                    best_c = -1;
                }
            }
        }

        if (best_u < 0) break;
        if (best_v < 0) {
            st.move_vertex(best_u, best_c);
        } else {
            int a = st.cls[best_u], b = st.cls[best_v];
            st.move_vertex(best_u, b);
            st.move_vertex(best_v, a);
        }
        cur = best_val;
    }
    return cur;
}

}  // namespace

ArgminResult argmin_over_equipartitions(const Graph& g, int k, const CountsObjective& objective,
                                        const SearchMode& mode) {
    if (k < 1 || k > g.n())
        throw std::invalid_argument("argmin_over_equipartitions: class count must be in [1, n]");

    std::optional<Equipartition> best_p;
    double best_val = 0.0;

    if (mode.kind == SearchMode::Kind::Exact) {
        // The enumeration emits each partition once with canonical labels, but
        // the objective may be label-sensitive, so every relabeling is scored.
        std::vector<int> perm(static_cast<std::size_t>(k));
        PairCount rp;
        rp.k = k;
        rp.sizes.resize(static_cast<std::size_t>(k));
        rp.counts.resize(static_cast<std::size_t>(k) * k);
        enumerate_equipartitions(
            g.n(), k,
            [&](const Equipartition& p) {
                const PairCount pc = pair_counts(g, p);
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    for (int i = 0; i < k; ++i) rp.sizes[static_cast<std::size_t>(perm[i])] = pc.sizes[static_cast<std::size_t>(i)];
                    for (int i = 0; i < k; ++i)
                        for (int j = 0; j < k; ++j)
                            rp.counts[static_cast<std::size_t>(perm[i]) * k + perm[j]] = pc.at(i, j);
                    double val = objective(rp);
                    if (!best_p || val < best_val) {
                        best_val = val;
                        std::vector<int> relabeled = p.assignment();
                        for (int& c : relabeled) c = perm[static_cast<std::size_t>(c)];
                        best_p = Equipartition(p.n(), k, std::move(relabeled));
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
            },
            mode.max_exact_n);
    } else {
        Rng rng(mode.seed);
        int restarts = std::max(1, mode.budget);
        for (int rs = 0; rs < restarts; ++rs) {
            SearchState st;
            st.init(g, random_equipartition(g.n(), k, rng.next()));
            double val = descend(st, objective, 200);
            if (!best_p || val < best_val) {
                best_val = val;
                best_p = st.partition();
            }
        }
    }
    return ArgminResult{best_val, std::move(*best_p)};
}

ReducibilityResult is_almost_reducible(const Graph& g, const WeightedGraph& r, const SearchMode& mode) {
    int k = r.k();
    if (k > g.n()) throw std::invalid_argument("is_almost_reducible: target has more classes than vertices");
    CountsObjective obj = [&](const PairCount& pc) {
        double sum = 0.0;
        for (int i = 0; i < pc.k; ++i)
            for (int j = 0; j < pc.k; ++j) sum += std::fabs(pc.density(i, j) - r.at(i, j));
        return sum / (static_cast<double>(pc.k) * pc.k);
    };
    ArgminResult best = argmin_over_equipartitions(g, k, obj, mode);
    ReducibilityResult out;
    out.best_d1 = best.value;
    out.member = best.value <= 2.0 / k + 1e-12;
    if (out.member) out.witness = std::move(best.partition);
    return out;
}

Graph round_to_target(const Graph& g, const Equipartition& p, const WeightedGraph& s) {
    if (p.n() != g.n()) throw std::invalid_argument("round_to_target: partition is for a different vertex count");
    if (s.k() != p.k()) throw std::invalid_argument("round_to_target: target size != class count");
    PairCount pc = pair_counts(g, p);
    Graph out = g;
    for (int i = 0; i < pc.k; ++i) {
        for (int j = i + 1; j < pc.k; ++j) {
            double cross = static_cast<double>(pc.sizes[i]) * pc.sizes[j];
            double excess = static_cast<double>(pc.at(i, j)) - s.at(i, j) * cross;
            long long m = static_cast<long long>(std::floor(std::fabs(excess)));
            if (m == 0) continue;
            bool removing = excess > 0;
            long long done = 0;
            for (int a = 0; a < g.n() && done < m; ++a) {
                int ca = p.class_of(a);
                if (ca != i && ca != j) continue;
                for (int b = a + 1; b < g.n() && done < m; ++b) {
                    int cb = p.class_of(b);
                    if ((ca == i && cb == j) || (ca == j && cb == i)) {
                        if (out.adjacent(a, b) == removing) {
                            out.set_edge(a, b, !removing);
                            ++done;
                        }
                    }
                }
            }
            if (done != m)
                throw std::logic_error("round_to_target: ran out of editable pairs (counts inconsistent)");
        }
    }
    return out;
}

}  // namespace hpd
