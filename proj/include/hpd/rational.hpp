#ifndef HPD_RATIONAL_HPP
#define HPD_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hpd {

// Exact arithmetic used by the lemma-verification suites.
using Rat = mpq_class;

inline Rat make_rat(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned exp) {
    Rat r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Dense symmetric k x k matrix of exact rationals (diagonal included).
struct RatMatrix {
    int k = 0;
    std::vector<Rat> cells;  // row-major

    RatMatrix() = default;
    explicit RatMatrix(int kk) : k(kk), cells(static_cast<std::size_t>(kk) * kk, Rat(0)) {}

    Rat& at(int i, int j) { return cells[static_cast<std::size_t>(i) * k + j]; }
    const Rat& at(int i, int j) const { return cells[static_cast<std::size_t>(i) * k + j]; }
};

}  // namespace hpd

#endif
