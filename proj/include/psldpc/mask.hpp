#ifndef PSLDPC_MASK_HPP
#define PSLDPC_MASK_HPP

#include <cstdint>
#include <vector>

#include "psldpc/matrix.hpp"

namespace psldpc {

/// Ordered list of N binary m x n masks that partition the grid: for every
/// cell exactly one mask holds a 1.
class MaskSet {
public:
    explicit MaskSet(std::vector<BinaryMask> masks);

    int count() const { return static_cast<int>(masks_.size()); }
    int rows() const { return masks_.front().rows(); }
    int cols() const { return masks_.front().cols(); }
    const BinaryMask& mask(int k) const { return masks_[k]; }
    const std::vector<BinaryMask>& masks() const { return masks_; }

    bool operator==(const MaskSet&) const = default;

private:
    std::vector<BinaryMask> masks_;
};

/// True iff all masks share one shape and every cell is covered exactly once.
bool validate_maskset(const std::vector<BinaryMask>& masks);

/// {M0, complement}: the standard two-mask partition around a primary mask.
MaskSet maskset_from_primary(const BinaryMask& m0);

/// Diagonal partition: M0 = K copies of the m x m all-ones-minus-identity
/// block side by side; requires n = K*m.
MaskSet mask_diagonal(int rows, int cols);

/// Triangle partition: M0 = K copies of the lower-triangular (including
/// diagonal) all-ones block; requires n = K*m.
MaskSet mask_triangle(int rows, int cols);

/// Hamming-like partition: M0 has pairwise-distinct nonzero columns. The
/// shapes 4x8 and 4x12 return fixed matrices; other shapes come from a
/// deterministic generator (descending column weight, cyclic-shift families,
/// wrapping around once all nonzero columns are used).
MaskSet mask_hamming(int rows, int cols);

/// Grow a two-mask partition to count masks by appending all-zero masks.
MaskSet extend_maskset(const MaskSet& ms, int count);

/// Assign each cell independently and uniformly to one of count masks; for
/// randomized property tests.
MaskSet random_cell_partition(int rows, int cols, int count, std::uint64_t seed);

}  // namespace psldpc

#endif
