#include "psldpc/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace psldpc {

BinaryMask::BinaryMask(int rows, int cols, std::vector<std::uint8_t> bits)
    : rows_(rows), cols_(cols), bits_(std::move(bits)) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("mask: dimensions must be positive");
    }
    if (bits_.size() != static_cast<std::size_t>(rows) * cols) {
        throw std::invalid_argument("mask: bit count does not match dimensions");
    }
    for (auto b : bits_) {
        if (b > 1) throw std::invalid_argument("mask: entries must be 0 or 1");
    }
}

BinaryMask BinaryMask::zeros(int rows, int cols) {
    return BinaryMask(rows, cols, std::vector<std::uint8_t>(static_cast<std::size_t>(rows) * cols, 0));
}

BinaryMask BinaryMask::ones(int rows, int cols) {
    return BinaryMask(rows, cols, std::vector<std::uint8_t>(static_cast<std::size_t>(rows) * cols, 1));
}

int BinaryMask::ones_count() const {
    int n = 0;
    for (auto b : bits_) n += b;
    return n;
}

BinaryMask BinaryMask::complement() const {
    std::vector<std::uint8_t> bits(bits_.size());
    for (std::size_t k = 0; k < bits_.size(); ++k) bits[k] = static_cast<std::uint8_t>(1 - bits_[k]);
    return BinaryMask(rows_, cols_, std::move(bits));
}

ExponentMatrix::ExponentMatrix(int block_rows, int block_cols, int lift_size, std::vector<int> entries)
    : block_rows_(block_rows), block_cols_(block_cols), lift_size_(lift_size), entries_(std::move(entries)) {
    if (block_rows < 1 || block_cols < 1 || lift_size < 1) {
        throw std::invalid_argument("exponent matrix: m, n and P must be positive");
    }
    if (entries_.size() != static_cast<std::size_t>(block_rows) * block_cols) {
        throw std::invalid_argument("exponent matrix: entry count does not match dimensions");
    }
    for (int e : entries_) {
        if (e != kInfinity && (e < 0 || e >= lift_size)) {
            throw std::invalid_argument("exponent matrix: entry " + std::to_string(e) +
                                        " outside [0, " + std::to_string(lift_size - 1) + "]");
        }
    }
}

ExponentMatrix ExponentMatrix::filled(int block_rows, int block_cols, int lift_size, int value) {
    return ExponentMatrix(block_rows, block_cols, lift_size,
                          std::vector<int>(static_cast<std::size_t>(block_rows) * block_cols, value));
}

int ExponentMatrix::finite_count() const {
    int n = 0;
    for (int e : entries_) n += !is_infinity(e);
    return n;
}

ExponentMatrix ExponentMatrix::with_entry(int i, int j, int value) const {
    std::vector<int> entries = entries_;
    entries[static_cast<std::size_t>(i) * block_cols_ + j] = value;
    return ExponentMatrix(block_rows_, block_cols_, lift_size_, std::move(entries));
}

SparseBinaryMatrix::SparseBinaryMatrix(int rows, int cols, const std::vector<std::pair<int, int>>& ones)
    : rows_(rows), cols_(cols), ones_count_(0), row_adj_(rows), col_adj_(cols) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("sparse matrix: dimensions must be non-negative");
    }
    for (auto [r, c] : ones) {
        if (r < 0 || r >= rows || c < 0 || c >= cols) {
            throw std::invalid_argument("sparse matrix: position (" + std::to_string(r) + ", " +
                                        std::to_string(c) + ") out of range");
        }
        row_adj_[r].push_back(c);
    }
    for (int r = 0; r < rows; ++r) {
        auto& cs = row_adj_[r];
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        ones_count_ += cs.size();
        for (int c : cs) col_adj_[c].push_back(r);
    }
    // col lists come out sorted because rows were visited in order
}

bool SparseBinaryMatrix::has(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) return false;
    const auto& cs = row_adj_[r];
    return std::binary_search(cs.begin(), cs.end(), c);
}

std::vector<std::pair<int, int>> SparseBinaryMatrix::ones() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(ones_count_);
    for (int r = 0; r < rows_; ++r) {
        for (int c : row_adj_[r]) out.emplace_back(r, c);
    }
    return out;
}

bool SparseBinaryMatrix::operator==(const SparseBinaryMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && row_adj_ == other.row_adj_;
}

Rational Rational::make(long long num, long long den) {
    if (den == 0) return {0, 1};
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

bool CodeProfile::regular(int column_weight, int row_weight) const {
    return column_weights.size() == 1 && column_weights.begin()->first == column_weight &&
           row_weights.size() == 1 && row_weights.begin()->first == row_weight;
}

SparseBinaryMatrix expand(const ExponentMatrix& e) {
    const int m = e.block_rows();
    const int n = e.block_cols();
    const int p = e.lift_size();
    std::vector<std::pair<int, int>> ones;
    ones.reserve(static_cast<std::size_t>(e.finite_count()) * p);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            const int shift = e.at(i, j);
            if (is_infinity(shift)) continue;
            for (int r = 0; r < p; ++r) {
                ones.emplace_back(i * p + r, j * p + (r + shift) % p);
            }
        }
    }
    return SparseBinaryMatrix(m * p, n * p, ones);
}

ExponentMatrix mask_exponent(const ExponentMatrix& e, const BinaryMask& mask) {
    if (mask.rows() != e.block_rows() || mask.cols() != e.block_cols()) {
        throw std::invalid_argument("mask_exponent: mask shape does not match exponent matrix");
    }
    std::vector<int> entries;
    entries.reserve(e.entries().size());
    for (int i = 0; i < e.block_rows(); ++i) {
        for (int j = 0; j < e.block_cols(); ++j) {
            entries.push_back(mask.at(i, j) ? e.at(i, j) : kInfinity);
        }
    }
    return ExponentMatrix(e.block_rows(), e.block_cols(), e.lift_size(), std::move(entries));
}

SparseBinaryMatrix mask_binary(const SparseBinaryMatrix& h0, int lift_size, const BinaryMask& mask) {
    if (lift_size < 1) throw std::invalid_argument("mask_binary: lift size must be positive");
    if (h0.rows() != mask.rows() * lift_size || h0.cols() != mask.cols() * lift_size) {
        throw std::invalid_argument("mask_binary: matrix is not an (m*P) x (n*P) array for this mask");
    }
    std::vector<std::pair<int, int>> kept;
    kept.reserve(h0.ones_count());
    for (int r = 0; r < h0.rows(); ++r) {
        for (int c : h0.row_support(r)) {
            if (mask.at(r / lift_size, c / lift_size)) kept.emplace_back(r, c);
        }
    }
    return SparseBinaryMatrix(h0.rows(), h0.cols(), kept);
}

CodeProfile profile(const SparseBinaryMatrix& h) {
    CodeProfile out;
    for (int c = 0; c < h.cols(); ++c) {
        out.column_weights[static_cast<int>(h.col_support(c).size())] += 1;
    }
    for (int r = 0; r < h.rows(); ++r) {
        out.row_weights[static_cast<int>(h.row_support(r).size())] += 1;
    }
    out.designed_rate = Rational::make(h.cols() - h.rows(), h.cols());
    return out;
}

}  // namespace psldpc
