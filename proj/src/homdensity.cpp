#include "hpd/homdensity.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

#include "hpd/errors.hpp"
#include "hpd/rng.hpp"

namespace hpd {

long long hom_work_cap() {
    if (const char* env = std::getenv("HPDIST_WORK_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100'000'000LL;
}

namespace {

void check_pattern(const Graph& f) {
    if (f.n() < 1) throw std::invalid_argument("hom density: pattern must have at least 1 vertex");
}

// Number of maps k^f, or -1 if it exceeds the cap.
long long map_count(int k, int f, long long cap) {
    long long total = 1;
    for (int i = 0; i < f; ++i) {
        if (total > cap / k) return -1;
        total *= k;
    }
    return total;
}

}  // namespace

double hom_weight(const Graph& f, const WeightedGraph& r, std::span<const int> image) {
    check_pattern(f);
    if (static_cast<int>(image.size()) != f.n())
        throw std::invalid_argument("hom_weight: image length != pattern size");
    for (int x : image)
        if (x < 0 || x >= r.k()) throw std::invalid_argument("hom_weight: image vertex out of range");
    double w = 1.0;
    for (int i = 0; i < f.n(); ++i) {
        for (int j = i + 1; j < f.n(); ++j) {
            double rw = r.at(image[i], image[j]);
            w *= f.adjacent(i, j) ? rw : 1.0 - rw;
        }
    }
    return w;
}

HomEstimate hom_density_weighted(const Graph& f, const WeightedGraph& r) {
    check_pattern(f);
    int fn = f.n(), k = r.k();
    long long total = map_count(k, fn, hom_work_cap());
    if (total < 0)
        throw CapExceededError("hom_density_weighted: k^f = " + std::to_string(k) + "^" + std::to_string(fn) +
                               " exceeds the work cap " + std::to_string(hom_work_cap()) +
                               " (set HPDIST_WORK_CAP or use Monte-Carlo)");
    std::vector<int> image(fn);
    double acc = 0.0;
    // Depth-first over all maps with incremental pair products.
    auto rec = [&](auto&& self, int depth, double partial) -> void {
        if (partial == 0.0 && depth > 0) {
            // All completions share the zero factor.
            return;
        }
        if (depth == fn) {
            acc += partial;
            return;
        }
        for (int x = 0; x < k; ++x) {
            double w = partial;
            for (int j = 0; j < depth && w != 0.0; ++j) {
                double rw = r.at(image[j], x);
                w *= f.adjacent(j, depth) ? rw : 1.0 - rw;
            }
            image[depth] = x;
            self(self, depth + 1, w);
        }
    };
    rec(rec, 0, 1.0);
    // Zero-pruned branches contribute zero; normalize by the full map count.
    return HomEstimate{acc / static_cast<double>(total), 0.0, total, true};
}

namespace {

HomEstimate mc_mean(long long samples, const std::function<double(Rng&)>& draw, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("Monte-Carlo density: need at least 1 sample");
    Rng rng(seed);
    double sum = 0.0, sumsq = 0.0;
    for (long long i = 0; i < samples; ++i) {
        double v = draw(rng);
        sum += v;
        sumsq += v * v;
    }
    double mean = sum / static_cast<double>(samples);
    double se = 0.0;
    if (samples > 1) {
        double var = (sumsq - static_cast<double>(samples) * mean * mean) / static_cast<double>(samples - 1);
        se = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
    }
    return HomEstimate{mean, se, samples, false};
}

}  // namespace

HomEstimate hom_density_weighted_mc(const Graph& f, const WeightedGraph& r, long long samples,
                                    std::uint64_t seed) {
    check_pattern(f);
    int fn = f.n(), k = r.k();
    std::vector<int> image(fn);
    return mc_mean(
        samples,
        [&](Rng& rng) {
            for (int i = 0; i < fn; ++i) image[i] = static_cast<int>(rng.below(k));
            double w = 1.0;
            for (int i = 0; i < fn && w != 0.0; ++i)
                for (int j = i + 1; j < fn; ++j) {
                    double rw = r.at(image[i], image[j]);
                    w *= f.adjacent(i, j) ? rw : 1.0 - rw;
                }
            return w;
        },
        seed);
}

namespace {

// Number of induced homomorphisms among all n^f maps. A map qualifies iff
// every pattern edge lands on an edge and every pattern non-edge on a
// non-adjacent (possibly equal) pair; collisions on a pattern edge fail
// because hosts have no loops.
long long induced_hom_count(const Graph& f, const Graph& host, long long& total_out) {
    int fn = f.n(), n = host.n();
    long long total = map_count(n, fn, hom_work_cap());
    if (total < 0)
        throw CapExceededError("hom_density_graph: n^f = " + std::to_string(n) + "^" + std::to_string(fn) +
                               " exceeds the work cap " + std::to_string(hom_work_cap()) +
                               " (set HPDIST_WORK_CAP or use Monte-Carlo)");
    std::vector<int> image(fn);
    long long count = 0;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == fn) {
            ++count;
            return;
        }
        for (int x = 0; x < n; ++x) {
            bool ok = true;
            for (int j = 0; j < depth; ++j) {
                bool want = f.adjacent(j, depth);
                bool have = image[j] != x && host.adjacent(image[j], x);
                if (want != have) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                image[depth] = x;
                self(self, depth + 1);
            }
        }
    };
    rec(rec, 0);
    total_out = total;
    return count;
}

}  // namespace

HomEstimate hom_density_graph(const Graph& f, const Graph& host) {
    check_pattern(f);
    if (host.n() < 1) throw std::invalid_argument("hom_density_graph: host must have at least 1 vertex");
    long long total = 0;
    long long count = induced_hom_count(f, host, total);
    return HomEstimate{static_cast<double>(count) / static_cast<double>(total), 0.0, total, true};
}

HomEstimate hom_density_graph_mc(const Graph& f, const Graph& host, long long samples, std::uint64_t seed) {
    check_pattern(f);
    if (host.n() < 1) throw std::invalid_argument("hom_density_graph_mc: host must have at least 1 vertex");
    int fn = f.n(), n = host.n();
    std::vector<int> image(fn);
    return mc_mean(
        samples,
        [&](Rng& rng) {
            for (int i = 0; i < fn; ++i) image[i] = static_cast<int>(rng.below(n));
            for (int i = 0; i < fn; ++i)
                for (int j = i + 1; j < fn; ++j) {
                    bool want = f.adjacent(i, j);
                    bool have = image[i] != image[j] && host.adjacent(image[i], image[j]);
                    if (want != have) return 0.0;
                }
            return 1.0;
        },
        seed);
}

Rat hom_density_rational(const Graph& f, const RatMatrix& r) {
    check_pattern(f);
    int fn = f.n(), k = r.k;
    long long total = map_count(k, fn, hom_work_cap());
    if (total < 0) throw CapExceededError("hom_density_rational: k^f exceeds the work cap");
    std::vector<int> image(fn);
    Rat acc = 0;
    auto rec = [&](auto&& self, int depth, const Rat& partial) -> void {
        if (depth > 0 && sgn(partial) == 0) return;
        if (depth == fn) {
            acc += partial;
            return;
        }
        for (int x = 0; x < k; ++x) {
            Rat w = partial;
            for (int j = 0; j < depth; ++j) {
                const Rat& rw = r.at(image[j], x);
                if (f.adjacent(j, depth))
                    w *= rw;
                else
                    w *= Rat(1) - rw;
            }
            image[depth] = x;
            self(self, depth + 1, w);
        }
    };
    rec(rec, 0, Rat(1));
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(fn));
    return acc / Rat(denom);
}

Rat hom_density_rational(const Graph& f, const Graph& host) {
    check_pattern(f);
    if (host.n() < 1) throw std::invalid_argument("hom_density_rational: host must have at least 1 vertex");
    long long total = 0;
    long long count = induced_hom_count(f, host, total);
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(host.n()),
                  static_cast<unsigned long>(f.n()));
    return Rat(mpz_class(static_cast<long>(count))) / Rat(denom);
}

// --- induced copies ----------------------------------------------------------

namespace {

bool find_embedding_of(const Graph& host, const Graph& f, std::vector<int>& image) {
    int fn = f.n(), n = host.n();
    if (fn > n) return false;
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == fn) return true;
        for (int x = 0; x < n; ++x) {
            if (used[x]) continue;
            bool ok = true;
            for (int j = 0; j < depth; ++j) {
                if (f.adjacent(j, depth) != host.adjacent(image[j], x)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[depth] = x;
            used[x] = 1;
            if (self(self, depth + 1)) return true;
            used[x] = 0;
        }
        return false;
    };
    image.assign(fn, -1);
    return rec(rec, 0);
}

}  // namespace

std::optional<Embedding> find_induced_embedding(const Graph& host, std::span<const Graph> family) {
    if (family.empty()) throw std::invalid_argument("find_induced_embedding: empty family");
    std::vector<int> image;
    for (std::size_t i = 0; i < family.size(); ++i) {
        check_pattern(family[i]);
        if (find_embedding_of(host, family[i], image))
            return Embedding{static_cast<int>(i), image};
    }
    return std::nullopt;
}

FreeResult is_induced_free(const Graph& host, std::span<const Graph> family) {
    auto emb = find_induced_embedding(host, family);
    if (emb) return FreeResult{false, std::move(emb)};
    return FreeResult{true, std::nullopt};
}

FreeResult is_induced_free(const Graph& host, const PropertySpec& spec) {
    validate_property_spec(spec);
    return is_induced_free(host, std::span<const Graph>(spec.family));
}

}  // namespace hpd
