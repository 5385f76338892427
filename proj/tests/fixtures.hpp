#ifndef PSLDPC_TESTS_FIXTURES_HPP
#define PSLDPC_TESTS_FIXTURES_HPP

#include <vector>

#include "psldpc/matrix.hpp"
#include "psldpc/rng.hpp"

namespace psldpc::tests {

// 3 x 4 base exponent matrix with a lift-independent 4-cycle.
inline ExponentMatrix worked_base(int lift_size) {
    return ExponentMatrix(3, 4, lift_size,
                          {0, 0, 0, 0,  //
                           0, 1, 3, 4,  //
                           0, 2, 6, 5});
}

// Primary mask paired with worked_base in the worked example.
inline BinaryMask worked_mask() {
    return BinaryMask(3, 4,
                      {1, 1, 1, 1,  //
                       1, 1, 1, 1,  //
                       1, 0, 0, 1});
}

// The 6 x 8 compound matrix the worked example arrives at (girth 8 for any
// lift size >= 7). I = infinity.
inline ExponentMatrix worked_compound(int lift_size) {
    const int I = kInfinity;
    return ExponentMatrix(6, 8, lift_size,
                          {0, 0, 0, 0, I, I, I, I,  //
                           0, 1, 3, 4, I, I, I, I,  //
                           0, I, I, 5, I, 2, 6, I,  //
                           I, I, I, I, 0, 0, 0, 0,  //
                           I, I, I, I, 0, 1, 3, 4,  //
                           I, 2, 6, I, 0, I, I, 5});
}

inline ExponentMatrix random_exponent(SplitMix64& rng, int m, int n, int p, int inf_percent) {
    std::vector<int> entries(static_cast<std::size_t>(m) * n);
    for (auto& e : entries) {
        e = rng.next_below(100) < static_cast<std::uint64_t>(inf_percent)
                ? kInfinity
                : static_cast<int>(rng.next_below(p));
    }
    return ExponentMatrix(m, n, p, std::move(entries));
}

inline SparseBinaryMatrix random_binary(SplitMix64& rng, int rows, int cols, int one_percent) {
    std::vector<std::pair<int, int>> ones;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (rng.next_below(100) < static_cast<std::uint64_t>(one_percent)) ones.emplace_back(r, c);
        }
    }
    return SparseBinaryMatrix(rows, cols, ones);
}

}  // namespace psldpc::tests

#endif
