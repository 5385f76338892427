#ifndef PSLDPC_SIMULATE_HPP
#define PSLDPC_SIMULATE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "psldpc/matrix.hpp"

namespace psldpc {

/// One Eb/N0 point of a BPSK / binary-input AWGN sweep.
struct ChannelPoint {
    double eb_n0_db = 0.0;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;

    /// sigma^2 = 1 / (2 * rate * 10^(eb_n0_db / 10)).
    static ChannelPoint from_eb_n0(double eb_n0_db, double rate, std::uint64_t seed);
};

/// Channel LLRs for one frame of the all-zero codeword: y = +1 + noise,
/// LLR = 2*y/sigma^2. The noise stream is a pure function of
/// (point.seed xor frame_index), so frames are reproducible in any order.
std::vector<double> transmit_all_zero(const SparseBinaryMatrix& h, const ChannelPoint& point,
                                      std::uint64_t frame_index = 0);

struct DecodeOutcome {
    std::vector<std::uint8_t> decoded;
    bool converged = false;
    int iterations_used = 0;
    std::optional<int> wrong_codeword_weight;  // set by the harness on converged non-zero words
};

/// Flooding-schedule log-domain sum-product decoder with exact pairwise
/// box-plus check updates, message clipping at +-30 and early termination on
/// a zero syndrome. Reusable across frames for one matrix.
class SpaDecoder {
public:
    explicit SpaDecoder(const SparseBinaryMatrix& h);

    DecodeOutcome decode(const std::vector<double>& llr, int max_iter = 50);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

private:
    void check_node_update();

    int rows_;
    int cols_;
    std::vector<int> row_ptr_;    // CSR over rows
    std::vector<int> edge_var_;   // variable of each edge
    std::vector<int> var_ptr_;    // CSR over columns
    std::vector<int> var_edges_;  // edge ids per variable
    std::vector<double> v2c_;
    std::vector<double> c2v_;
    std::vector<double> posterior_;
    std::vector<double> fwd_;
    std::vector<double> bwd_;
    std::vector<std::uint8_t> hard_;
};

/// One-shot decode of a single LLR vector.
DecodeOutcome spa_decode(const SparseBinaryMatrix& h, const std::vector<double>& llr, int max_iter = 50);

bool syndrome_is_zero(const SparseBinaryMatrix& h, const std::vector<std::uint8_t>& word);

struct StopRule {
    std::uint64_t min_frame_errors = 100;
    std::uint64_t max_frames = 10'000'000;
};

struct PointResult {
    ChannelPoint point;
    std::uint64_t frames = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    double ber = 0.0;
    double fer = 0.0;
    std::map<int, std::uint64_t> wrong_weight_hist;

    std::optional<int> min_wrong_weight() const;
};

using SimResult = std::vector<PointResult>;

/// Monte-Carlo BER/FER sweep. Frames are processed in fixed batches of 256;
/// the stop rule is evaluated at batch boundaries, so the simulated frame set
/// and all counters are independent of the worker count.
SimResult run_ber(const SparseBinaryMatrix& h, const std::vector<ChannelPoint>& points,
                  const StopRule& stop, int max_iter = 50, int threads = 1);

}  // namespace psldpc

#endif
