#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace ncat {

// std::mt19937_64 is specified bit-for-bit by the standard; the distribution
// templates are not, so bounded draws go through draw() instead.
using Rng = std::mt19937_64;

inline std::uint64_t draw(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

// Seeded choice of k distinct indices out of [0, n), returned ascending.
inline std::vector<std::size_t> choose_indices(std::size_t n, std::size_t k, std::uint64_t seed) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    if (k >= n) return idx;
    Rng rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = static_cast<std::size_t>(draw(rng, i, n - 1));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace ncat
