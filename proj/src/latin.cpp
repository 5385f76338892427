#include "psldpc/latin.hpp"

#include <numeric>
#include <stdexcept>

#include "psldpc/rng.hpp"

namespace psldpc {

bool validate_latin(const std::vector<std::vector<int>>& grid) {
    const int n = static_cast<int>(grid.size());
    if (n == 0) throw std::invalid_argument("latin square: grid is empty");
    for (const auto& row : grid) {
        if (static_cast<int>(row.size()) != n) {
            throw std::invalid_argument("latin square: grid is not square");
        }
    }
    std::vector<bool> seen(n);
    for (int i = 0; i < n; ++i) {
        seen.assign(n, false);
        for (int v : grid[i]) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = true;
        }
    }
    for (int j = 0; j < n; ++j) {
        seen.assign(n, false);
        for (int i = 0; i < n; ++i) {
            const int v = grid[i][j];
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

LatinSquare::LatinSquare(std::vector<std::vector<int>> grid) {
    if (!validate_latin(grid)) {
        throw std::invalid_argument("latin square: a symbol repeats within a row or column");
    }
    order_ = static_cast<int>(grid.size());
    if (order_ < 2) throw std::invalid_argument("latin square: order must be at least 2");
    cells_.reserve(static_cast<std::size_t>(order_) * order_);
    for (const auto& row : grid) cells_.insert(cells_.end(), row.begin(), row.end());
}

std::vector<std::vector<int>> LatinSquare::grid() const {
    std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
    for (int i = 0; i < order_; ++i) {
        for (int j = 0; j < order_; ++j) out[i][j] = at(i, j);
    }
    return out;
}

LatinSquare latin_circulant(int order) {
    if (order < 2) throw std::invalid_argument("latin_circulant: order must be at least 2");
    std::vector<std::vector<int>> grid(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) grid[i][j] = ((i - j) % order + order) % order;
    }
    return LatinSquare(std::move(grid));
}

LatinSquare random_latin_square(int order, std::uint64_t seed) {
    if (order < 2) throw std::invalid_argument("random_latin_square: order must be at least 2");
    SplitMix64 rng(seed);
    std::vector<int> row_perm(order), col_perm(order);
    std::iota(row_perm.begin(), row_perm.end(), 0);
    std::iota(col_perm.begin(), col_perm.end(), 0);
    for (int i = order - 1; i > 0; --i) {
        std::swap(row_perm[i], row_perm[rng.next_below(i + 1)]);
        std::swap(col_perm[i], col_perm[rng.next_below(i + 1)]);
    }
    std::vector<std::vector<int>> grid(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            grid[i][j] = ((row_perm[i] - col_perm[j]) % order + order) % order;
        }
    }
    return LatinSquare(std::move(grid));
}

}  // namespace psldpc
