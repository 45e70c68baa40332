#include "hpd/partition.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hpd/errors.hpp"
#include "hpd/rng.hpp"

namespace hpd {

Equipartition::Equipartition(int n, int k, std::vector<int> class_of)
    : n_(n), k_(k), class_of_(std::move(class_of)) {
    if (n < 1) throw std::invalid_argument("Equipartition: need at least 1 vertex");
    if (k < 1 || k > n) throw std::invalid_argument("Equipartition: class count must be in [1, n]");
    if (static_cast<int>(class_of_.size()) != n)
        throw std::invalid_argument("Equipartition: assignment length != n");
    std::vector<int> sizes(k, 0);
    for (int c : class_of_) {
        if (c < 0 || c >= k) throw std::invalid_argument("Equipartition: class index out of range");
        ++sizes[c];
    }
    auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    if (*lo == 0) throw std::invalid_argument("Equipartition: empty class");
    if (*hi - *lo > 1) throw std::invalid_argument("Equipartition: class sizes differ by more than 1");
}

std::vector<int> Equipartition::class_sizes() const {
    std::vector<int> sizes(k_, 0);
    for (int c : class_of_) ++sizes[c];
    return sizes;
}

std::vector<std::vector<int>> Equipartition::classes() const {
    std::vector<std::vector<int>> out(k_);
    for (int v = 0; v < n_; ++v) out[class_of_[v]].push_back(v);
    return out;
}

Equipartition Equipartition::canonical() const {
    std::vector<int> relabel(k_, -1);
    int next = 0;
    std::vector<int> cls(n_);
    for (int v = 0; v < n_; ++v) {
        int c = class_of_[v];
        if (relabel[c] < 0) relabel[c] = next++;
        cls[v] = relabel[c];
    }
    return Equipartition(n_, k_, std::move(cls));
}

bool Equipartition::same_partition(const Equipartition& other) const {
    if (n_ != other.n_ || k_ != other.k_) return false;
    return canonical().assignment() == other.canonical().assignment();
}

Equipartition random_equipartition(int n, int k, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_equipartition: need at least 1 vertex");
    if (k < 1 || k > n) throw std::invalid_argument("random_equipartition: class count must be in [1, n]");
    Rng rng(seed);
    int q = n / k, r = n % k;

    // Which classes receive the extra vertex, uniform over k-choose-r.
    std::vector<char> big(k, 0);
    if (r > 0) {
        std::vector<int> ids(k);
        std::iota(ids.begin(), ids.end(), 0);
        for (int i = 0; i < r; ++i) {
            int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(k - i)));
            std::swap(ids[i], ids[j]);
            big[ids[i]] = 1;
        }
    }

    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    rng.shuffle(verts);

    std::vector<int> cls(n);
    int pos = 0;
    for (int c = 0; c < k; ++c) {
        int size = q + (big[c] ? 1 : 0);
        for (int i = 0; i < size; ++i) cls[verts[pos++]] = c;
    }
    return Equipartition(n, k, std::move(cls));
}

namespace {

void enumerate_rec(int n, int k, std::vector<int>& cls, std::vector<char>& used, int next_class,
                   int big_left, int small_left, int q, const std::function<void(const Equipartition&)>& visit) {
    if (next_class == k) {
        visit(Equipartition(n, k, cls));
        return;
    }
    int leader = 0;
    while (leader < n && used[leader]) ++leader;

    std::vector<int> free;
    for (int v = leader + 1; v < n; ++v)
        if (!used[v]) free.push_back(v);

    auto try_size = [&](int size) {
        int need = size - 1;
        // Choose `need` companions for the leader from `free`, in lex order.
        std::vector<int> pick(need);
        std::function<void(int, int)> combos = [&](int start, int depth) {
            if (depth == need) {
                used[leader] = 1;
                cls[leader] = next_class;
                for (int v : pick) {
                    used[v] = 1;
                    cls[v] = next_class;
                }
                bool was_big = (size == q + 1);
                enumerate_rec(n, k, cls, used, next_class + 1, big_left - (was_big ? 1 : 0),
                              small_left - (was_big ? 0 : 1), q, visit);
                used[leader] = 0;
                for (int v : pick) used[v] = 0;
                return;
            }
            for (int i = start; i <= static_cast<int>(free.size()) - (need - depth); ++i) {
                pick[depth] = free[i];
                combos(i + 1, depth + 1);
            }
        };
        combos(0, 0);
    };

    if (big_left > 0) try_size(q + 1);
    if (small_left > 0) try_size(q);
}

}  // namespace

void enumerate_equipartitions(int n, int k, const std::function<void(const Equipartition&)>& visit, int max_n) {
    if (n < 1) throw std::invalid_argument("enumerate_equipartitions: need at least 1 vertex");
    if (k < 1 || k > n) throw std::invalid_argument("enumerate_equipartitions: class count must be in [1, n]");
    if (n > max_n)
        throw CapExceededError("enumerate_equipartitions: n = " + std::to_string(n) +
                               " exceeds the enumeration cap " + std::to_string(max_n));
    int q = n / k, r = n % k;
    std::vector<int> cls(n, -1);
    std::vector<char> used(n, 0);
    enumerate_rec(n, k, cls, used, 0, r, k - r, q, visit);
}

std::vector<Equipartition> all_equipartitions(int n, int k, int max_n) {
    std::vector<Equipartition> out;
    enumerate_equipartitions(n, k, [&](const Equipartition& p) { out.push_back(p); }, max_n);
    return out;
}

Equipartition split_classes(const Equipartition& p, std::span<const int> marks) {
    int n = p.n();
    if (static_cast<int>(marks.size()) != n)
        throw std::invalid_argument("split_classes: marks length != n");

    // Refined cells keyed by (original class, mark); ids in key order.
    std::map<std::pair<int, int>, int> cell_of;
    for (int v = 0; v < n; ++v) cell_of.emplace(std::make_pair(p.class_of(v), marks[v]), 0);
    int id = 0;
    for (auto& kv : cell_of) kv.second = id++;

    std::vector<std::vector<int>> cells(cell_of.size());
    for (int v = 0; v < n; ++v)
        cells[cell_of[{p.class_of(v), marks[v]}]].push_back(v);  // ascending within cells

    int k2 = static_cast<int>(cells.size());
    int q = n / k2, r = n % k2;

    // Largest cells keep the larger target size; ties favor lower cell index.
    std::vector<int> order(k2);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return cells[a].size() > cells[b].size();
    });
    std::vector<int> target(k2, q);
    for (int i = 0; i < r; ++i) target[order[i]] = q + 1;

    // Move lowest-index surplus vertices into deficit classes in class order.
    std::vector<int> pool;
    for (int c = 0; c < k2; ++c) {
        int surplus = static_cast<int>(cells[c].size()) - target[c];
        for (int i = 0; i < surplus; ++i) pool.push_back(cells[c][i]);
        if (surplus > 0) cells[c].erase(cells[c].begin(), cells[c].begin() + surplus);
    }
    std::sort(pool.begin(), pool.end());
    std::size_t next = 0;
    for (int c = 0; c < k2; ++c) {
        while (static_cast<int>(cells[c].size()) < target[c]) cells[c].push_back(pool[next++]);
    }

    std::vector<int> cls(n, -1);
    for (int c = 0; c < k2; ++c)
        for (int v : cells[c]) cls[v] = c;
    return Equipartition(n, k2, std::move(cls));
}

Equipartition load_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    long long n = -1, k = -1;
    if (!(in >> n >> k)) throw ParseError(path, 1, "expected header \"n k\"");
    if (n < 1 || k < 1) throw ParseError(path, 1, "counts must be positive");
    std::vector<int> cls;
    long long c;
    while (in >> c) cls.push_back(static_cast<int>(c));
    if (static_cast<long long>(cls.size()) != n)
        throw ParseError(path, 2, "expected " + std::to_string(n) + " class indices, found " +
                                      std::to_string(cls.size()));
    try {
        return Equipartition(static_cast<int>(n), static_cast<int>(k), std::move(cls));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, 2, e.what());
    }
}

void save_partition_file(const Equipartition& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path, 0, "cannot open file for writing");
    out << p.n() << ' ' << p.k() << '\n';
    for (int v = 0; v < p.n(); ++v) out << p.class_of(v) << (v + 1 == p.n() ? '\n' : ' ');
}

}  // namespace hpd
