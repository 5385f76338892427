#include "psldpc/io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace psldpc {

namespace {

// Whitespace tokenizer that remembers the line of each token so readers can
// point at the first offending input.
class Tokens {
public:
    explicit Tokens(const std::string& text) {
        int line = 1;
        std::size_t k = 0;
        while (k < text.size()) {
            if (text[k] == '\n') {
                ++line;
                ++k;
            } else if (std::isspace(static_cast<unsigned char>(text[k]))) {
                ++k;
            } else {
                std::size_t start = k;
                while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k]))) ++k;
                tokens_.emplace_back(text.substr(start, k - start), line);
            }
        }
    }

    bool done() const { return next_ >= tokens_.size(); }
    int last_line() const { return tokens_.empty() ? 1 : tokens_.back().second; }

    long long next_int(const char* what) {
        if (done()) {
            throw ParseError(std::string("line ") + std::to_string(last_line()) +
                             ": input ends before " + what);
        }
        const auto& [token, line] = tokens_[next_];
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) {
            throw ParseError("line " + std::to_string(line) + ": expected integer for " + what +
                             ", got '" + token + "'");
        }
        ++next_;
        return value;
    }

    int line_of_last() const { return next_ == 0 ? 1 : tokens_[next_ - 1].second; }

private:
    std::vector<std::pair<std::string, int>> tokens_;
    std::size_t next_ = 0;
};

[[noreturn]] void fail(int line, const std::string& message) {
    throw ParseError("line " + std::to_string(line) + ": " + message);
}

}  // namespace

AlistDocument AlistDocument::from_matrix(const SparseBinaryMatrix& h) {
    AlistDocument doc;
    doc.rows = h.rows();
    doc.cols = h.cols();
    doc.col_positions.resize(h.cols());
    doc.row_positions.resize(h.rows());
    for (int c = 0; c < h.cols(); ++c) {
        doc.col_positions[c] = h.col_support(c);
        doc.col_weights.push_back(static_cast<int>(doc.col_positions[c].size()));
        doc.max_col_weight = std::max(doc.max_col_weight, doc.col_weights.back());
    }
    for (int r = 0; r < h.rows(); ++r) {
        doc.row_positions[r] = h.row_support(r);
        doc.row_weights.push_back(static_cast<int>(doc.row_positions[r].size()));
        doc.max_row_weight = std::max(doc.max_row_weight, doc.row_weights.back());
    }
    return doc;
}

SparseBinaryMatrix AlistDocument::to_matrix() const {
    std::vector<std::pair<int, int>> ones;
    for (int c = 0; c < cols; ++c) {
        for (int r : col_positions[c]) ones.emplace_back(r, c);
    }
    return SparseBinaryMatrix(rows, cols, ones);
}

std::string AlistDocument::validate() const {
    if (rows < 1 || cols < 1) return "alist dimensions must be positive";
    if (col_weights.size() != static_cast<std::size_t>(cols) ||
        col_positions.size() != static_cast<std::size_t>(cols) ||
        row_weights.size() != static_cast<std::size_t>(rows) ||
        row_positions.size() != static_cast<std::size_t>(rows)) {
        return "alist weight or position list counts do not match the dimensions";
    }
    auto check_side = [](const std::vector<int>& weights, const std::vector<std::vector<int>>& lists,
                         int max_weight, int bound, const char* what) -> std::string {
        for (std::size_t k = 0; k < weights.size(); ++k) {
            if (weights[k] < 0 || weights[k] > max_weight) {
                return std::string(what) + " weight " + std::to_string(k + 1) +
                       " exceeds the declared maximum";
            }
            if (lists[k].size() != static_cast<std::size_t>(weights[k])) {
                return std::string("declared ") + std::to_string(weights[k]) + " entries for " + what +
                       " " + std::to_string(k + 1) + " but found " + std::to_string(lists[k].size());
            }
            std::vector<int> sorted = lists[k];
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                if (sorted[i] < 0 || sorted[i] >= bound) {
                    return std::string(what) + " " + std::to_string(k + 1) + " position index out of range";
                }
                if (i > 0 && sorted[i] == sorted[i - 1]) {
                    return std::string(what) + " " + std::to_string(k + 1) + " lists a position twice";
                }
            }
        }
        return {};
    };
    if (auto msg = check_side(col_weights, col_positions, max_col_weight, rows, "column"); !msg.empty()) {
        return msg;
    }
    if (auto msg = check_side(row_weights, row_positions, max_row_weight, cols, "row"); !msg.empty()) {
        return msg;
    }

    long long col_total = 0, row_total = 0;
    for (int w : col_weights) col_total += w;
    for (int w : row_weights) row_total += w;
    if (col_total != row_total) {
        return "column weights sum to " + std::to_string(col_total) + " but row weights sum to " +
               std::to_string(row_total);
    }

    // both directions must describe the same position set
    std::vector<std::vector<int>> from_cols(rows);
    for (int c = 0; c < cols; ++c) {
        for (int r : col_positions[c]) from_cols[r].push_back(c);
    }
    for (int r = 0; r < rows; ++r) {
        std::vector<int> sorted = row_positions[r];
        std::sort(sorted.begin(), sorted.end());
        std::sort(from_cols[r].begin(), from_cols[r].end());
        if (sorted != from_cols[r]) {
            return "alist row list " + std::to_string(r + 1) + " disagrees with the column lists";
        }
    }
    return {};
}

std::string write_alist(const SparseBinaryMatrix& h) {
    const AlistDocument doc = AlistDocument::from_matrix(h);
    std::ostringstream out;
    out << doc.cols << ' ' << doc.rows << '\n';
    out << doc.max_col_weight << ' ' << doc.max_row_weight << '\n';
    for (int c = 0; c < doc.cols; ++c) out << doc.col_weights[c] << (c + 1 == doc.cols ? '\n' : ' ');
    for (int r = 0; r < doc.rows; ++r) out << doc.row_weights[r] << (r + 1 == doc.rows ? '\n' : ' ');
    auto write_lists = [&out](const std::vector<std::vector<int>>& lists, int width) {
        for (const auto& list : lists) {
            for (int k = 0; k < width; ++k) {
                out << (k < static_cast<int>(list.size()) ? list[k] + 1 : 0)
                    << (k + 1 == width ? '\n' : ' ');
            }
        }
    };
    write_lists(doc.col_positions, doc.max_col_weight);
    write_lists(doc.row_positions, doc.max_row_weight);
    return out.str();
}

SparseBinaryMatrix read_alist(const std::string& text) {
    Tokens in(text);
    AlistDocument doc;
    doc.cols = static_cast<int>(in.next_int("the column count"));
    doc.rows = static_cast<int>(in.next_int("the row count"));
    if (doc.cols < 1 || doc.rows < 1) fail(in.line_of_last(), "alist dimensions must be positive");
    doc.max_col_weight = static_cast<int>(in.next_int("the maximum column weight"));
    doc.max_row_weight = static_cast<int>(in.next_int("the maximum row weight"));
    if (doc.max_col_weight < 0 || doc.max_col_weight > doc.rows || doc.max_row_weight < 0 ||
        doc.max_row_weight > doc.cols) {
        fail(in.line_of_last(), "alist maximum weights are out of range");
    }

    for (int c = 0; c < doc.cols; ++c) {
        doc.col_weights.push_back(static_cast<int>(in.next_int("a column weight")));
    }
    for (int r = 0; r < doc.rows; ++r) {
        doc.row_weights.push_back(static_cast<int>(in.next_int("a row weight")));
    }

    // Padded lists carry max-weight entries per line with 0 fillers; unpadded
    // lists carry exactly the declared weight. Decide from the token budget.
    long long remaining = 0;
    {
        Tokens probe(text);
        while (!probe.done()) {
            probe.next_int("a token");
            ++remaining;
        }
        remaining -= 4 + doc.cols + doc.rows;
    }
    long long col_total = 0, row_total = 0;
    for (int w : doc.col_weights) col_total += w;
    for (int w : doc.row_weights) row_total += w;
    const bool padded = remaining == static_cast<long long>(doc.cols) * doc.max_col_weight +
                                         static_cast<long long>(doc.rows) * doc.max_row_weight;
    if (!padded && remaining != col_total + row_total) {
        fail(in.last_line(), "alist position lists are truncated or oversized");
    }

    auto read_lists = [&](std::vector<std::vector<int>>& lists, const std::vector<int>& weights,
                          int max_weight, const char* what) {
        for (int w : weights) {
            std::vector<int> list;
            const int count = padded ? max_weight : w;
            for (int k = 0; k < count; ++k) {
                const long long v = in.next_int(what);
                if (v != 0) list.push_back(static_cast<int>(v - 1));
            }
            lists.push_back(std::move(list));
        }
    };
    read_lists(doc.col_positions, doc.col_weights, doc.max_col_weight, "a column position");
    read_lists(doc.row_positions, doc.row_weights, doc.max_row_weight, "a row position");

    if (const std::string msg = doc.validate(); !msg.empty()) fail(in.last_line(), msg);
    return doc.to_matrix();
}

std::string write_exponent(const ExponentMatrix& e) {
    std::ostringstream out;
    out << e.block_rows() << ' ' << e.block_cols() << ' ' << e.lift_size() << '\n';
    for (int i = 0; i < e.block_rows(); ++i) {
        for (int j = 0; j < e.block_cols(); ++j) {
            out << e.at(i, j) << (j + 1 == e.block_cols() ? '\n' : ' ');
        }
    }
    return out.str();
}

ExponentMatrix read_exponent(const std::string& text) {
    Tokens in(text);
    const long long m = in.next_int("the block row count");
    const long long n = in.next_int("the block column count");
    const long long p = in.next_int("the lift size");
    if (m < 1 || n < 1 || p < 1) fail(in.line_of_last(), "exponent header values must be positive");
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(m * n));
    for (long long k = 0; k < m * n; ++k) {
        const long long v = in.next_int("an exponent entry");
        if (v < -1 || v >= p) {
            fail(in.line_of_last(), "exponent entry " + std::to_string(v) + " outside [-1, " +
                                        std::to_string(p - 1) + "]");
        }
        entries.push_back(static_cast<int>(v));
    }
    return ExponentMatrix(static_cast<int>(m), static_cast<int>(n), static_cast<int>(p), std::move(entries));
}

std::string write_mask(const BinaryMask& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            out << static_cast<int>(m.at(i, j)) << (j + 1 == m.cols() ? '\n' : ' ');
        }
    }
    return out.str();
}

BinaryMask read_mask(const std::string& text) {
    Tokens in(text);
    const long long m = in.next_int("the mask row count");
    const long long n = in.next_int("the mask column count");
    if (m < 1 || n < 1) fail(in.line_of_last(), "mask dimensions must be positive");
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(m * n));
    for (long long k = 0; k < m * n; ++k) {
        const long long v = in.next_int("a mask entry");
        if (v != 0 && v != 1) fail(in.line_of_last(), "mask entries must be 0 or 1");
        bits.push_back(static_cast<std::uint8_t>(v));
    }
    return BinaryMask(static_cast<int>(m), static_cast<int>(n), std::move(bits));
}

std::string write_latin(const LatinSquare& a) {
    std::ostringstream out;
    out << a.order() << '\n';
    for (int i = 0; i < a.order(); ++i) {
        for (int j = 0; j < a.order(); ++j) {
            out << a.at(i, j) << (j + 1 == a.order() ? '\n' : ' ');
        }
    }
    return out.str();
}

LatinSquare read_latin(const std::string& text) {
    Tokens in(text);
    const long long n = in.next_int("the Latin square order");
    if (n < 2) fail(in.line_of_last(), "Latin square order must be at least 2");
    std::vector<std::vector<int>> grid(n, std::vector<int>(n));
    for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j < n; ++j) {
            const long long v = in.next_int("a Latin square entry");
            if (v < 0 || v >= n) {
                fail(in.line_of_last(), "Latin square entry " + std::to_string(v) + " outside Z_" +
                                            std::to_string(n));
            }
            grid[i][j] = static_cast<int>(v);
        }
    }
    if (!validate_latin(grid)) {
        fail(in.line_of_last(), "grid is not a Latin square: a symbol repeats in a row or column");
    }
    return LatinSquare(std::move(grid));
}

std::string write_csv(const SimResult& result) {
    std::ostringstream out;
    out << "eb_n0_db,frames,bit_errors,frame_errors,ber,fer,min_wrong_codeword_weight\n";
    char buf[64];
    for (const auto& pr : result) {
        out << pr.point.eb_n0_db << ',' << pr.frames << ',' << pr.bit_errors << ',' << pr.frame_errors;
        std::snprintf(buf, sizeof buf, ",%.6e,%.6e,", pr.ber, pr.fer);
        out << buf;
        if (auto w = pr.min_wrong_weight()) out << *w;
        out << '\n';
    }
    return out.str();
}

std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace psldpc
