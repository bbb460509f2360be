// common.hpp - shared typedefs and subset-mask helpers
#ifndef INHCLUST_COMMON_HPP
#define INHCLUST_COMMON_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace inhclust {

using VertexId = std::uint32_t;
using Weight = double;

// Subsets of a hyperedge are bitmasks over positions within the edge's
// vertex list. Arities are capped at 63 so a mask fits one word.
constexpr int kMaxArity = 63;

inline std::uint64_t full_mask(int arity) {
    return (arity >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << arity) - 1);
}

inline int subset_size(std::uint64_t mask) { return std::popcount(mask); }

// Each {S, e\S} class is represented by its numerically smaller mask.
inline std::uint64_t class_rep(std::uint64_t mask, int arity) {
    std::uint64_t comp = full_mask(arity) & ~mask;
    return mask < comp ? mask : comp;
}

// Visits one representative mask per proper nonempty cut class.
template <typename Fn>
void for_each_cut_class(int arity, Fn&& fn) {
    std::uint64_t full = full_mask(arity);
    for (std::uint64_t m = 1; m < full; ++m) {
        if (m < (full & ~m)) fn(m);
    }
}

} // namespace inhclust

#endif // INHCLUST_COMMON_HPP
