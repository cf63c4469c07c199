#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "thermocone/types.hpp"

namespace thermocone {

inline std::size_t factorial(std::size_t n) {
    std::size_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

// The index-th permutation of {0..d-1} in lexicographic order (factorial base).
inline Order nth_permutation(std::size_t d, std::size_t index) {
    std::vector<std::size_t> pool(d);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    Order out;
    out.reserve(d);
    for (std::size_t k = d; k > 0; --k) {
        const std::size_t f = factorial(k - 1);
        const std::size_t pick = index / f;
        index %= f;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

inline Order identity_order(std::size_t d) {
    Order o(d);
    std::iota(o.begin(), o.end(), std::size_t{0});
    return o;
}

}  // namespace thermocone
