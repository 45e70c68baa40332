#ifndef HPD_PARTITION_HPP
#define HPD_PARTITION_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hpd {

// Partition of 0..n-1 into k nonempty classes whose sizes differ by at most
// one ("equipartition"). Invariants are checked on construction.
class Equipartition {
public:
    Equipartition(int n, int k, std::vector<int> class_of);

    int n() const { return n_; }
    int k() const { return k_; }
    int class_of(int v) const { return class_of_[v]; }
    const std::vector<int>& assignment() const { return class_of_; }

    std::vector<int> class_sizes() const;
    // Vertices of each class in ascending order.
    std::vector<std::vector<int>> classes() const;

    // Same partition with classes relabeled in order of first occurrence.
    Equipartition canonical() const;
    // Equality as unlabeled partitions.
    bool same_partition(const Equipartition& other) const;

private:
    int n_;
    int k_;
    std::vector<int> class_of_;
};

// Uniform over all equitable assignments into exactly k labeled classes.
Equipartition random_equipartition(int n, int k, std::uint64_t seed);

inline constexpr int kDefaultEnumerationCap = 16;

// Visits every equitable partition into exactly k unlabeled classes once,
// classes labeled in order of their smallest vertex. Guarded by a vertex cap
// because the count grows super-exponentially.
void enumerate_equipartitions(int n, int k, const std::function<void(const Equipartition&)>& visit,
                              int max_n = kDefaultEnumerationCap);
std::vector<Equipartition> all_equipartitions(int n, int k, int max_n = kDefaultEnumerationCap);

// Common refinement of p with the given per-vertex marks, re-equalized: the
// new class count is the number of nonempty refined cells (ordered by
// original class, then mark) and surplus vertices (lowest index first) move
// into deficit classes in class-index order.
Equipartition split_classes(const Equipartition& p, std::span<const int> marks);

// Partition text format: first line "n k", then n whitespace-separated class
// indices; validated as an equipartition on load.
Equipartition load_partition_file(const std::string& path);
void save_partition_file(const Equipartition& p, const std::string& path);

}  // namespace hpd

#endif
