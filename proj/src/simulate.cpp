#include "psldpc/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "psldpc/rng.hpp"

namespace psldpc {

namespace {

constexpr double kMessageClip = 30.0;
constexpr std::uint64_t kFrameBatch = 256;
constexpr double kTwoPi = 6.283185307179586476925286766559;

double clip(double x) { return std::clamp(x, -kMessageClip, kMessageClip); }

// Exact pairwise box-plus: 2*atanh(tanh(a/2)*tanh(b/2)).
double box_plus(double a, double b) {
    const double mag = std::min(std::fabs(a), std::fabs(b));
    const double sign = ((a < 0) != (b < 0)) ? -1.0 : 1.0;
    return sign * mag + std::log1p(std::exp(-std::fabs(a + b))) - std::log1p(std::exp(-std::fabs(a - b)));
}

// Gaussian pairs via Box-Muller on the per-frame splitmix stream.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] keeps the log finite
        const double u1 = (static_cast<double>(rng_.next() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = rng_.next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = kTwoPi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    SplitMix64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace

ChannelPoint ChannelPoint::from_eb_n0(double eb_n0_db, double rate, std::uint64_t seed) {
    if (rate <= 0.0 || rate >= 1.0) {
        throw std::invalid_argument("channel point: rate must lie in (0, 1)");
    }
    const double sigma_sq = 1.0 / (2.0 * rate * std::pow(10.0, eb_n0_db / 10.0));
    return {eb_n0_db, std::sqrt(sigma_sq), seed};
}

std::vector<double> transmit_all_zero(const SparseBinaryMatrix& h, const ChannelPoint& point,
                                      std::uint64_t frame_index) {
    if (point.noise_sigma <= 0.0) {
        throw std::invalid_argument("transmit: noise sigma must be positive");
    }
    GaussianStream noise(point.seed ^ frame_index);
    const double sigma_sq = point.noise_sigma * point.noise_sigma;
    std::vector<double> llr(h.cols());
    for (auto& v : llr) {
        v = 2.0 * (1.0 + point.noise_sigma * noise.next()) / sigma_sq;
    }
    return llr;
}

SpaDecoder::SpaDecoder(const SparseBinaryMatrix& h) : rows_(h.rows()), cols_(h.cols()) {
    row_ptr_.reserve(rows_ + 1);
    row_ptr_.push_back(0);
    for (int r = 0; r < rows_; ++r) {
        for (int c : h.row_support(r)) edge_var_.push_back(c);
        row_ptr_.push_back(static_cast<int>(edge_var_.size()));
    }
    std::vector<int> var_degree(cols_, 0);
    for (int v : edge_var_) ++var_degree[v];
    var_ptr_.assign(cols_ + 1, 0);
    for (int c = 0; c < cols_; ++c) var_ptr_[c + 1] = var_ptr_[c] + var_degree[c];
    var_edges_.resize(edge_var_.size());
    std::vector<int> fill(var_ptr_.begin(), var_ptr_.end() - 1);
    for (int e = 0; e < static_cast<int>(edge_var_.size()); ++e) {
        var_edges_[fill[edge_var_[e]]++] = e;
    }
    v2c_.resize(edge_var_.size());
    c2v_.resize(edge_var_.size());
    posterior_.resize(cols_);
    hard_.resize(cols_);
    int max_row = 0;
    for (int r = 0; r < rows_; ++r) max_row = std::max(max_row, row_ptr_[r + 1] - row_ptr_[r]);
    fwd_.resize(max_row);
    bwd_.resize(max_row);
}

void SpaDecoder::check_node_update() {
    for (int r = 0; r < rows_; ++r) {
        const int begin = row_ptr_[r];
        const int degree = row_ptr_[r + 1] - begin;
        if (degree == 0) continue;
        if (degree == 1) {
            c2v_[begin] = 0.0;
            continue;
        }
        fwd_[0] = v2c_[begin];
        bwd_[degree - 1] = v2c_[begin + degree - 1];
        for (int k = 1; k < degree; ++k) {
            fwd_[k] = box_plus(fwd_[k - 1], v2c_[begin + k]);
            bwd_[degree - 1 - k] = box_plus(bwd_[degree - k], v2c_[begin + degree - 1 - k]);
        }
        c2v_[begin] = clip(bwd_[1]);
        c2v_[begin + degree - 1] = clip(fwd_[degree - 2]);
        for (int k = 1; k < degree - 1; ++k) {
            c2v_[begin + k] = clip(box_plus(fwd_[k - 1], bwd_[k + 1]));
        }
    }
}

DecodeOutcome SpaDecoder::decode(const std::vector<double>& llr, int max_iter) {
    if (static_cast<int>(llr.size()) != cols_) {
        throw std::invalid_argument("spa_decode: LLR length does not match the matrix");
    }
    if (max_iter < 1) throw std::invalid_argument("spa_decode: max_iter must be at least 1");

    for (int c = 0; c < cols_; ++c) {
        const double v = clip(llr[c]);
        for (int k = var_ptr_[c]; k < var_ptr_[c + 1]; ++k) v2c_[var_edges_[k]] = v;
    }

    DecodeOutcome out;
    for (int iter = 1; iter <= max_iter; ++iter) {
        check_node_update();

        for (int c = 0; c < cols_; ++c) {
            double total = llr[c];
            for (int k = var_ptr_[c]; k < var_ptr_[c + 1]; ++k) total += c2v_[var_edges_[k]];
            posterior_[c] = total;
            hard_[c] = total < 0.0 ? 1 : 0;
            for (int k = var_ptr_[c]; k < var_ptr_[c + 1]; ++k) {
                const int e = var_edges_[k];
                v2c_[e] = clip(total - c2v_[e]);
            }
        }

        bool zero_syndrome = true;
        for (int r = 0; r < rows_ && zero_syndrome; ++r) {
            std::uint8_t parity = 0;
            for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) parity ^= hard_[edge_var_[k]];
            zero_syndrome = parity == 0;
        }
        if (zero_syndrome || iter == max_iter) {
            out.decoded = hard_;
            out.converged = zero_syndrome;
            out.iterations_used = iter;
            return out;
        }
    }
    return out;  // unreachable
}

DecodeOutcome spa_decode(const SparseBinaryMatrix& h, const std::vector<double>& llr, int max_iter) {
    SpaDecoder decoder(h);
    return decoder.decode(llr, max_iter);
}

bool syndrome_is_zero(const SparseBinaryMatrix& h, const std::vector<std::uint8_t>& word) {
    if (static_cast<int>(word.size()) != h.cols()) {
        throw std::invalid_argument("syndrome: word length does not match the matrix");
    }
    for (int r = 0; r < h.rows(); ++r) {
        std::uint8_t parity = 0;
        for (int c : h.row_support(r)) parity ^= word[c];
        if (parity) return false;
    }
    return true;
}

std::optional<int> PointResult::min_wrong_weight() const {
    if (wrong_weight_hist.empty()) return std::nullopt;
    return wrong_weight_hist.begin()->first;
}

namespace {

struct BatchTally {
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    std::map<int, std::uint64_t> wrong_weight_hist;
};

BatchTally simulate_frames(const SparseBinaryMatrix& h, const ChannelPoint& point, int max_iter,
                           SpaDecoder& decoder, std::uint64_t first, std::uint64_t last) {
    BatchTally tally;
    for (std::uint64_t frame = first; frame < last; ++frame) {
        const auto llr = transmit_all_zero(h, point, frame);
        DecodeOutcome outcome = decoder.decode(llr, max_iter);
        if (outcome.converged && !syndrome_is_zero(h, outcome.decoded)) {
            throw std::logic_error("decoder reported convergence with a non-zero syndrome");
        }
        std::uint64_t weight = 0;
        for (auto b : outcome.decoded) weight += b;
        tally.bit_errors += weight;
        if (weight > 0) {
            ++tally.frame_errors;
            if (outcome.converged) {
                // converged to a codeword that is not the transmitted one
                outcome.wrong_codeword_weight = static_cast<int>(weight);
                ++tally.wrong_weight_hist[static_cast<int>(weight)];
            }
        }
    }
    return tally;
}

}  // namespace

SimResult run_ber(const SparseBinaryMatrix& h, const std::vector<ChannelPoint>& points,
                  const StopRule& stop, int max_iter, int threads) {
    if (stop.min_frame_errors < 1) {
        throw std::invalid_argument("run_ber: min_frame_errors must be at least 1");
    }
    const int workers = std::max(1, threads);
    SimResult results;
    results.reserve(points.size());

    for (const auto& point : points) {
        PointResult pr;
        pr.point = point;

        std::vector<SpaDecoder> decoders;
        decoders.reserve(workers);
        for (int w = 0; w < workers; ++w) decoders.emplace_back(h);

        std::uint64_t next_frame = 0;
        while (pr.frame_errors < stop.min_frame_errors && pr.frames < stop.max_frames) {
            const std::uint64_t batch = std::min<std::uint64_t>(kFrameBatch, stop.max_frames - pr.frames);
            std::vector<BatchTally> tallies(workers);
            std::vector<std::exception_ptr> errors(workers);
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) {
                const std::uint64_t first = next_frame + batch * w / workers;
                const std::uint64_t last = next_frame + batch * (w + 1) / workers;
                if (first == last) continue;
                pool.emplace_back([&, w, first, last] {
                    try {
                        tallies[w] = simulate_frames(h, point, max_iter, decoders[w], first, last);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
            for (auto& t : pool) t.join();
            for (const auto& err : errors) {
                if (err) std::rethrow_exception(err);
            }
            for (const auto& tally : tallies) {
                pr.bit_errors += tally.bit_errors;
                pr.frame_errors += tally.frame_errors;
                for (auto [w, count] : tally.wrong_weight_hist) pr.wrong_weight_hist[w] += count;
            }
            next_frame += batch;
            pr.frames += batch;
        }

        pr.ber = pr.frames == 0 ? 0.0
                                : static_cast<double>(pr.bit_errors) /
                                      (static_cast<double>(pr.frames) * static_cast<double>(h.cols()));
        pr.fer = pr.frames == 0 ? 0.0 : static_cast<double>(pr.frame_errors) / static_cast<double>(pr.frames);
        results.push_back(std::move(pr));
    }
    return results;
}

}  // namespace psldpc
