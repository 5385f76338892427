#include "psldpc/mask.hpp"

#include <algorithm>
#include <stdexcept>

#include "psldpc/rng.hpp"

namespace psldpc {

namespace {

BinaryMask tile_block(const std::vector<std::uint8_t>& block, int m, int copies) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m) * m * copies);
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < copies; ++k) {
            for (int j = 0; j < m; ++j) {
                bits[static_cast<std::size_t>(i) * m * copies + k * m + j] =
                    block[static_cast<std::size_t>(i) * m + j];
            }
        }
    }
    return BinaryMask(m, m * copies, std::move(bits));
}

int require_tiling(int rows, int cols, const char* what) {
    if (rows < 1 || cols < 1 || cols % rows != 0) {
        throw std::invalid_argument(std::string(what) + ": requires n = K*m");
    }
    return cols / rows;
}

// Fixed 4x8 primary mask: one cyclic family of weight-3 columns, then the identity.
constexpr std::uint8_t kHamming4x8[] = {
    1, 0, 1, 1, 1, 0, 0, 0,
    1, 1, 0, 1, 0, 1, 0, 0,
    1, 1, 1, 0, 0, 0, 1, 0,
    0, 1, 1, 1, 0, 0, 0, 1,
};

// Fixed 4x12 primary mask: weight-3 family, weight-2 family, identity.
constexpr std::uint8_t kHamming4x12[] = {
    1, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0,
    1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0,
    1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 0,
    0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1,
};

// All nonzero length-m columns ordered by descending weight, then by
// cyclic-shift family (larger canonical representative first), emitting each
// family as successive downward rotations of its representative. Columns are
// encoded as bit masks with row 0 in the top bit.
std::vector<unsigned> hamming_column_order(int m) {
    const unsigned all = (1u << m) - 1;
    auto rotate_down = [m, all](unsigned c) {
        return ((c >> 1) | (c << (m - 1))) & all;
    };
    std::vector<bool> used(all + 1, false);
    std::vector<std::pair<int, unsigned>> families;  // (weight, canonical member)
    for (unsigned c = 1; c <= all; ++c) {
        if (used[c]) continue;
        unsigned canonical = c;
        unsigned r = c;
        do {
            used[r] = true;
            canonical = std::max(canonical, r);
            r = rotate_down(r);
        } while (r != c);
        families.emplace_back(__builtin_popcount(c), canonical);
    }
    std::sort(families.begin(), families.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    });
    std::vector<unsigned> order;
    order.reserve(all);
    for (const auto& [weight, canonical] : families) {
        (void)weight;
        unsigned r = canonical;
        do {
            order.push_back(r);
            r = rotate_down(r);
        } while (r != canonical);
    }
    return order;
}

}  // namespace

MaskSet::MaskSet(std::vector<BinaryMask> masks) : masks_(std::move(masks)) {
    if (masks_.size() < 2) throw std::invalid_argument("mask set: needs at least two masks");
    if (!validate_maskset(masks_)) {
        throw std::invalid_argument("mask set: masks do not partition the grid (cell sums != 1)");
    }
}

bool validate_maskset(const std::vector<BinaryMask>& masks) {
    if (masks.empty()) return false;
    const int m = masks.front().rows();
    const int n = masks.front().cols();
    for (const auto& mask : masks) {
        if (mask.rows() != m || mask.cols() != n) return false;
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            int sum = 0;
            for (const auto& mask : masks) sum += mask.at(i, j);
            if (sum != 1) return false;
        }
    }
    return true;
}

MaskSet maskset_from_primary(const BinaryMask& m0) {
    return MaskSet({m0, m0.complement()});
}

MaskSet mask_diagonal(int rows, int cols) {
    const int copies = require_tiling(rows, cols, "mask_diagonal");
    std::vector<std::uint8_t> block(static_cast<std::size_t>(rows) * rows, 1);
    for (int i = 0; i < rows; ++i) block[static_cast<std::size_t>(i) * rows + i] = 0;
    return maskset_from_primary(tile_block(block, rows, copies));
}

MaskSet mask_triangle(int rows, int cols) {
    const int copies = require_tiling(rows, cols, "mask_triangle");
    std::vector<std::uint8_t> block(static_cast<std::size_t>(rows) * rows, 0);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j <= i; ++j) block[static_cast<std::size_t>(i) * rows + j] = 1;
    }
    return maskset_from_primary(tile_block(block, rows, copies));
}

MaskSet mask_hamming(int rows, int cols) {
    if (rows < 2 || cols < 1) {
        throw std::invalid_argument("mask_hamming: requires m >= 2, n >= 1");
    }
    if (rows == 4 && cols == 8) {
        return maskset_from_primary(BinaryMask(4, 8, {std::begin(kHamming4x8), std::end(kHamming4x8)}));
    }
    if (rows == 4 && cols == 12) {
        return maskset_from_primary(BinaryMask(4, 12, {std::begin(kHamming4x12), std::end(kHamming4x12)}));
    }
    if (rows >= 30) throw std::invalid_argument("mask_hamming: m too large for column enumeration");
    const auto order = hamming_column_order(rows);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(rows) * cols);
    for (int j = 0; j < cols; ++j) {
        const unsigned column = order[j % order.size()];
        for (int i = 0; i < rows; ++i) {
            bits[static_cast<std::size_t>(i) * cols + j] = (column >> (rows - 1 - i)) & 1u;
        }
    }
    return maskset_from_primary(BinaryMask(rows, cols, std::move(bits)));
}

MaskSet extend_maskset(const MaskSet& ms, int count) {
    if (count < 2) throw std::invalid_argument("extend_maskset: count must be at least 2");
    if (count < ms.count()) throw std::invalid_argument("extend_maskset: cannot shrink a mask set");
    std::vector<BinaryMask> masks = ms.masks();
    while (static_cast<int>(masks.size()) < count) {
        masks.push_back(BinaryMask::zeros(ms.rows(), ms.cols()));
    }
    return MaskSet(std::move(masks));
}

MaskSet random_cell_partition(int rows, int cols, int count, std::uint64_t seed) {
    if (count < 2) throw std::invalid_argument("random_cell_partition: count must be at least 2");
    SplitMix64 rng(seed);
    std::vector<std::vector<std::uint8_t>> bits(
        count, std::vector<std::uint8_t>(static_cast<std::size_t>(rows) * cols, 0));
    for (std::size_t cell = 0; cell < static_cast<std::size_t>(rows) * cols; ++cell) {
        bits[rng.next_below(count)][cell] = 1;
    }
    std::vector<BinaryMask> masks;
    masks.reserve(count);
    for (auto& b : bits) masks.emplace_back(rows, cols, std::move(b));
    return MaskSet(std::move(masks));
}

}  // namespace psldpc
