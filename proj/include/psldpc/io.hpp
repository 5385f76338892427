#ifndef PSLDPC_IO_HPP
#define PSLDPC_IO_HPP

#include <stdexcept>
#include <string>

#include "psldpc/latin.hpp"
#include "psldpc/matrix.hpp"
#include "psldpc/simulate.hpp"

namespace psldpc {

/// Raised by all readers; the message names the offending line.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parsed form of an alist file: dimensions, max and per-line weights, and
/// 0-indexed position lists in both directions. validate() confirms the
/// weights match the lists and that rows and columns describe one position
/// set.
struct AlistDocument {
    int rows = 0;
    int cols = 0;
    int max_col_weight = 0;
    int max_row_weight = 0;
    std::vector<int> col_weights;
    std::vector<int> row_weights;
    std::vector<std::vector<int>> col_positions;  // per column: row indices
    std::vector<std::vector<int>> row_positions;  // per row: column indices

    static AlistDocument from_matrix(const SparseBinaryMatrix& h);
    SparseBinaryMatrix to_matrix() const;

    /// Empty string when consistent, else a description of the first problem.
    std::string validate() const;
};

// alist interchange format: "cols rows", max weights, per-column and per-row
// weights, then 1-indexed position lists. Lists are written zero-padded to
// the max weight; both padded and unpadded variants are accepted on read.
std::string write_alist(const SparseBinaryMatrix& h);
SparseBinaryMatrix read_alist(const std::string& text);

// Exponent grid: header "m n P", then m rows of n entries, -1 denoting the
// all-zero block.
std::string write_exponent(const ExponentMatrix& e);
ExponentMatrix read_exponent(const std::string& text);

// Mask grid: header "m n", then m rows of binary entries.
std::string write_mask(const BinaryMask& m);
BinaryMask read_mask(const std::string& text);

// Latin square: header "N", then N rows; validated on read.
std::string write_latin(const LatinSquare& a);
LatinSquare read_latin(const std::string& text);

/// CSV: eb_n0_db, frames, bit_errors, frame_errors, ber, fer,
/// min_wrong_codeword_weight (empty when no wrong codeword was seen).
std::string write_csv(const SimResult& result);

std::string load_text(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace psldpc

#endif
