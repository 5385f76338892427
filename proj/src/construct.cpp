#include "psldpc/construct.hpp"

#include <stdexcept>

namespace psldpc {

ExponentMatrix gcd_base(int lift_size, int row_len) {
    if (lift_size < 2 || row_len < 2) {
        throw std::invalid_argument("gcd_base: requires P >= 2 and L >= 2");
    }
    const long long factors[4] = {0, 1, row_len, row_len + 1};
    std::vector<int> entries;
    entries.reserve(4 * static_cast<std::size_t>(row_len));
    for (long long f : factors) {
        for (long long j = 0; j < row_len; ++j) {
            entries.push_back(static_cast<int>(f * j % lift_size));
        }
    }
    return ExponentMatrix(4, row_len, lift_size, std::move(entries));
}

ExponentMatrix splice_exponent(const ExponentMatrix& e0, const MaskSet& ms, const LatinSquare& a) {
    if (ms.rows() != e0.block_rows() || ms.cols() != e0.block_cols()) {
        throw std::invalid_argument("splice_exponent: mask shape does not match base matrix");
    }
    if (ms.count() != a.order()) {
        throw std::invalid_argument("splice_exponent: mask count does not match Latin square order");
    }
    const int m = e0.block_rows();
    const int n = e0.block_cols();
    const int order = a.order();
    std::vector<int> entries(static_cast<std::size_t>(m) * n * order * order, kInfinity);
    const std::size_t out_cols = static_cast<std::size_t>(n) * order;
    for (int r = 0; r < order; ++r) {
        for (int c = 0; c < order; ++c) {
            const BinaryMask& mask = ms.mask(a.at(r, c));
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (mask.at(i, j)) {
                        entries[(static_cast<std::size_t>(r) * m + i) * out_cols + c * n + j] = e0.at(i, j);
                    }
                }
            }
        }
    }
    return ExponentMatrix(m * order, n * order, e0.lift_size(), std::move(entries));
}

SparseBinaryMatrix splice_binary(const SparseBinaryMatrix& h0, int lift_size, const MaskSet& ms,
                                 const LatinSquare& a) {
    if (lift_size < 1) throw std::invalid_argument("splice_binary: lift size must be positive");
    if (h0.rows() != ms.rows() * lift_size || h0.cols() != ms.cols() * lift_size) {
        throw std::invalid_argument("splice_binary: base matrix is not an (m*P) x (n*P) array for this mask set");
    }
    if (ms.count() != a.order()) {
        throw std::invalid_argument("splice_binary: mask count does not match Latin square order");
    }
    const int order = a.order();
    const int rows = h0.rows();
    const int cols = h0.cols();

    // Per-mask surviving positions of H0, computed once.
    std::vector<std::vector<std::pair<int, int>>> kept(ms.count());
    for (int r = 0; r < rows; ++r) {
        for (int c : h0.row_support(r)) {
            for (int k = 0; k < ms.count(); ++k) {
                if (ms.mask(k).at(r / lift_size, c / lift_size)) {
                    kept[k].emplace_back(r, c);
                    break;  // masks partition the grid
                }
            }
        }
    }

    std::vector<std::pair<int, int>> ones;
    ones.reserve(h0.ones_count() * order);
    for (int r = 0; r < order; ++r) {
        for (int c = 0; c < order; ++c) {
            for (auto [x, y] : kept[a.at(r, c)]) {
                ones.emplace_back(r * rows + x, c * cols + y);
            }
        }
    }
    return SparseBinaryMatrix(rows * order, cols * order, ones);
}

ExponentMatrix splice_special_n2(const ExponentMatrix& e0) {
    const MaskSet ms = mask_triangle(e0.block_rows(), e0.block_cols());
    const LatinSquare a({{0, 1}, {1, 0}});
    return splice_exponent(e0, ms, a);
}

}  // namespace psldpc
