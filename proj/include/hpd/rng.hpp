#ifndef HPD_RNG_HPP
#define HPD_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace hpd {

// Seeded generator whose derived draws are platform-independent. The raw
// mt19937_64 output sequence is pinned by the standard; the helpers below
// avoid std::uniform_*_distribution, whose outputs vary across standard
// library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform on {0, ..., bound-1} via masked rejection (unbiased).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
        if (bound == 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0};
        std::uint64_t limit = bound - 1;
        // Smallest all-ones mask covering bound-1.
        int bits = 64;
        while (bits > 1 && (limit >> (bits - 1)) == 0) --bits;
        mask = (bits == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
        for (;;) {
            std::uint64_t v = next() & mask;
            if (v < bound) return v;
        }
    }

    // Uniform on [0, 1) with 53 random bits.
    double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return real01() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

// Stable derivation of per-stream seeds (splitmix64 finalizer).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace hpd

#endif
