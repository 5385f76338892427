#ifndef PSLDPC_LATIN_HPP
#define PSLDPC_LATIN_HPP

#include <cstdint>
#include <vector>

namespace psldpc {

/// True iff the grid is square over Z_N and every row and column is a
/// permutation of {0, ..., N-1}. Throws on ragged or non-square input.
bool validate_latin(const std::vector<std::vector<int>>& grid);

/// N x N grid in which each symbol of Z_N appears once per row and column.
class LatinSquare {
public:
    explicit LatinSquare(std::vector<std::vector<int>> grid);

    int order() const { return order_; }
    int at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * order_ + j]; }

    std::vector<std::vector<int>> grid() const;

    bool operator==(const LatinSquare&) const = default;

private:
    int order_;
    std::vector<int> cells_;
};

/// Circulant square: cell (i, j) = (i - j) mod N.
LatinSquare latin_circulant(int order);

/// Circulant square with rows and columns independently permuted; for
/// randomized property tests, not a uniform sampler.
LatinSquare random_latin_square(int order, std::uint64_t seed);

}  // namespace psldpc

#endif
