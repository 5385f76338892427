#ifndef PSLDPC_MATRIX_HPP
#define PSLDPC_MATRIX_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace psldpc {

/// Entry marking an all-zero P x P block in an exponent matrix.
inline constexpr int kInfinity = -1;

inline bool is_infinity(int entry) { return entry == kInfinity; }

/// Dense binary m x n grid used for masking block matrices.
class BinaryMask {
public:
    BinaryMask(int rows, int cols, std::vector<std::uint8_t> bits);
    static BinaryMask zeros(int rows, int cols);
    static BinaryMask ones(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint8_t at(int i, int j) const { return bits_[static_cast<std::size_t>(i) * cols_ + j]; }
    int ones_count() const;

    /// Element-wise 1 - M.
    BinaryMask complement() const;

    bool operator==(const BinaryMask&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<std::uint8_t> bits_;
};

/// m x n grid over {infinity, 0, ..., P-1} describing an array of P x P
/// circulant permutation blocks (entry e) and zero blocks (infinity).
class ExponentMatrix {
public:
    ExponentMatrix(int block_rows, int block_cols, int lift_size, std::vector<int> entries);
    static ExponentMatrix filled(int block_rows, int block_cols, int lift_size, int value);

    int block_rows() const { return block_rows_; }
    int block_cols() const { return block_cols_; }
    int lift_size() const { return lift_size_; }

    int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * block_cols_ + j]; }
    bool finite_at(int i, int j) const { return !is_infinity(at(i, j)); }
    int finite_count() const;

    /// Copy with one entry replaced (value validated against the lift size).
    ExponentMatrix with_entry(int i, int j, int value) const;

    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const ExponentMatrix&) const = default;

private:
    int block_rows_;
    int block_cols_;
    int lift_size_;
    std::vector<int> entries_;  // row-major
};

/// Sparse binary matrix with sorted adjacency in both directions.
class SparseBinaryMatrix {
public:
    SparseBinaryMatrix(int rows, int cols, const std::vector<std::pair<int, int>>& ones);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t ones_count() const { return ones_count_; }

    /// Sorted column indices of the ones in row r.
    const std::vector<int>& row_support(int r) const { return row_adj_[r]; }
    /// Sorted row indices of the ones in column c.
    const std::vector<int>& col_support(int c) const { return col_adj_[c]; }

    bool has(int r, int c) const;

    /// All one-positions in row-major order.
    std::vector<std::pair<int, int>> ones() const;

    bool operator==(const SparseBinaryMatrix& other) const;

private:
    int rows_;
    int cols_;
    std::size_t ones_count_;
    std::vector<std::vector<int>> row_adj_;
    std::vector<std::vector<int>> col_adj_;
};

struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long num, long long den);
    bool operator==(const Rational&) const = default;
    double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
};

/// Row/column weight histograms plus the designed rate 1 - rows/cols.
struct CodeProfile {
    std::map<int, int> column_weights;  // weight -> number of columns
    std::map<int, int> row_weights;     // weight -> number of rows
    Rational designed_rate;

    bool regular(int column_weight, int row_weight) const;
};

/// Replace each entry of E by its P x P block: entry e becomes the identity
/// with rows cyclically shifted right by e, infinity becomes the zero block.
SparseBinaryMatrix expand(const ExponentMatrix& e);

/// Entry-wise: keep E(i,j) where the mask is 1, infinity where it is 0.
ExponentMatrix mask_exponent(const ExponentMatrix& e, const BinaryMask& mask);

/// Zero out every P x P block of H0 whose mask bit is 0. H0 must be an
/// (m*P) x (n*P) matrix for the m x n mask; P = 1 admits arbitrary matrices.
SparseBinaryMatrix mask_binary(const SparseBinaryMatrix& h0, int lift_size, const BinaryMask& mask);

CodeProfile profile(const SparseBinaryMatrix& h);

}  // namespace psldpc

#endif
