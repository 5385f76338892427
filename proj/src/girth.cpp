#include "psldpc/girth.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>

namespace psldpc {

bool girth_at_least(const GirthResult& a, const GirthResult& b) {
    if (a.exceeds()) return true;
    if (b.exceeds()) return false;
    return a.value >= b.value;
}

bool CycleWitness::validate(const ExponentMatrix& e) const {
    const int len = length();
    if (len < 4 || len % 2 != 0) return false;
    long long sum = 0;
    for (int t = 0; t < len; ++t) {
        const auto [i, j] = positions[t];
        if (i < 0 || i >= e.block_rows() || j < 0 || j >= e.block_cols()) return false;
        if (!e.finite_at(i, j)) return false;
        const auto [ni, nj] = positions[(t + 1) % len];
        if (i == ni && j == nj) return false;
        if (t % 2 == 0) {
            if (i != ni) return false;  // row-sharing pair
        } else {
            if (j != nj) return false;  // column-sharing pair
            sum += e.at(i, j) - e.at(ni, nj);
        }
    }
    if (sum != alternating_sum) return false;
    return sum % e.lift_size() == 0;
}

namespace {

struct Position {
    int i;
    int j;
    int shift;
};

// Layered reachability over closed alternating walks anchored at their
// lexicographically smallest position. State = (position, shift sum mod P)
// after t moves; odd moves stay within a block row, even moves within a
// block column and accumulate the shift difference.
class ExponentGirthSearch {
public:
    explicit ExponentGirthSearch(const ExponentMatrix& e) : lift_(e.lift_size()) {
        for (int i = 0; i < e.block_rows(); ++i) {
            for (int j = 0; j < e.block_cols(); ++j) {
                if (e.finite_at(i, j)) positions_.push_back({i, j, e.at(i, j)});
            }
        }
        const int count = static_cast<int>(positions_.size());
        row_nbrs_.resize(count);
        col_nbrs_.resize(count);
        for (int p = 0; p < count; ++p) {
            for (int q = 0; q < count; ++q) {
                if (q == p) continue;
                if (positions_[q].i == positions_[p].i) row_nbrs_[p].push_back(q);
                if (positions_[q].j == positions_[p].j) col_nbrs_[p].push_back(q);
            }
        }
    }

    // Smallest l in [2, limit] with a closed 2l-walk whose minimum position is
    // the anchor; layers are kept for witness reconstruction.
    std::optional<int> search(int anchor, int limit) {
        const int count = static_cast<int>(positions_.size());
        const std::size_t states = static_cast<std::size_t>(count) * lift_;
        layers_.assign(1, std::vector<std::uint8_t>(states, 0));
        layers_[0][static_cast<std::size_t>(anchor) * lift_] = 1;
        for (int t = 1; t <= 2 * limit - 1; ++t) {
            const auto& prev = layers_.back();
            std::vector<std::uint8_t> next(states, 0);
            bool any = false;
            for (int p = anchor; p < count; ++p) {
                const auto base = static_cast<std::size_t>(p) * lift_;
                for (int s = 0; s < lift_; ++s) {
                    if (!prev[base + s]) continue;
                    if (t % 2 == 1) {
                        for (int q : row_nbrs_[p]) {
                            if (q < anchor) continue;
                            next[static_cast<std::size_t>(q) * lift_ + s] = 1;
                            any = true;
                        }
                    } else {
                        for (int q : col_nbrs_[p]) {
                            if (q < anchor) continue;
                            const int ns = step_sum(s, p, q);
                            next[static_cast<std::size_t>(q) * lift_ + ns] = 1;
                            any = true;
                        }
                    }
                }
            }
            layers_.push_back(std::move(next));
            if (!any) return std::nullopt;
            if (t % 2 == 1 && t >= 3 && closes(anchor, layers_.back())) {
                return (t + 1) / 2;
            }
        }
        return std::nullopt;
    }

    // Walk positions for an l found by search(), reconstructed backwards
    // through the stored layers.
    std::vector<std::pair<int, int>> reconstruct(int anchor, int l) const {
        const int last_t = 2 * l - 1;
        int cur = -1;
        int sum = -1;
        for (int q : col_nbrs_[anchor]) {
            if (q < anchor) continue;
            const auto base = static_cast<std::size_t>(q) * lift_;
            for (int s = 0; s < lift_; ++s) {
                if (layers_[last_t][base + s] && step_sum(s, q, anchor) == 0) {
                    cur = q;
                    sum = s;
                    break;
                }
            }
            if (cur >= 0) break;
        }
        std::vector<int> seq(2 * l);
        seq[0] = anchor;
        for (int t = last_t; t >= 1; --t) {
            seq[t] = cur;
            if (t == 1) break;
            if (t % 2 == 1) {
                // row move from seq[t-1]: same sum
                bool found = false;
                for (int q : row_nbrs_[cur]) {
                    if (q >= anchor && layers_[t - 1][static_cast<std::size_t>(q) * lift_ + sum]) {
                        cur = q;
                        found = true;
                        break;
                    }
                }
                if (!found) throw std::logic_error("girth witness reconstruction lost the trail");
            } else {
                // column move from seq[t-1]: undo the shift difference
                bool found = false;
                for (int q : col_nbrs_[cur]) {
                    if (q < anchor) continue;
                    const int ps = prev_sum(sum, q, cur);
                    if (layers_[t - 1][static_cast<std::size_t>(q) * lift_ + ps]) {
                        cur = q;
                        sum = ps;
                        found = true;
                        break;
                    }
                }
                if (!found) throw std::logic_error("girth witness reconstruction lost the trail");
            }
        }
        std::vector<std::pair<int, int>> out;
        out.reserve(seq.size());
        for (int p : seq) out.emplace_back(positions_[p].i, positions_[p].j);
        return out;
    }

    int position_count() const { return static_cast<int>(positions_.size()); }

private:
    int step_sum(int s, int from, int to) const {
        return ((s + positions_[from].shift - positions_[to].shift) % lift_ + lift_) % lift_;
    }
    int prev_sum(int s, int from, int to) const {
        return ((s - positions_[from].shift + positions_[to].shift) % lift_ + lift_) % lift_;
    }

    bool closes(int anchor, const std::vector<std::uint8_t>& layer) const {
        for (int q : col_nbrs_[anchor]) {
            if (q < anchor) continue;
            const auto base = static_cast<std::size_t>(q) * lift_;
            for (int s = 0; s < lift_; ++s) {
                if (layer[base + s] && step_sum(s, q, anchor) == 0) return true;
            }
        }
        return false;
    }

    int lift_;
    std::vector<Position> positions_;
    std::vector<std::vector<int>> row_nbrs_;
    std::vector<std::vector<int>> col_nbrs_;
    std::vector<std::vector<std::uint8_t>> layers_;
};

void check_cap(int cap) {
    if (cap < 4 || cap % 2 != 0) {
        throw std::invalid_argument("girth: cap must be an even integer >= 4");
    }
}

}  // namespace

GirthResult girth_exponent(const ExponentMatrix& e, int cap, CycleWitness* witness) {
    check_cap(cap);
    if (e.block_rows() < 2 || e.block_cols() < 2) return GirthResult::exceeds_cap(cap);

    ExponentGirthSearch search(e);
    int best_l = cap / 2 + 1;
    int best_anchor = -1;
    for (int anchor = 0; anchor < search.position_count() && best_l > 2; ++anchor) {
        if (auto l = search.search(anchor, best_l - 1)) {
            best_l = *l;
            best_anchor = anchor;
        }
    }
    if (best_anchor < 0) return GirthResult::exceeds_cap(cap);

    if (witness) {
        search.search(best_anchor, best_l);  // rebuild layers for the winner
        witness->positions = search.reconstruct(best_anchor, best_l);
        long long sum = 0;
        const int len = static_cast<int>(witness->positions.size());
        for (int t = 1; t < len; t += 2) {
            const auto [i, j] = witness->positions[t];
            const auto [ni, nj] = witness->positions[(t + 1) % len];
            sum += e.at(i, j) - e.at(ni, nj);
        }
        witness->alternating_sum = sum;
    }
    return GirthResult::exact(2 * best_l);
}

GirthResult girth_graph(const SparseBinaryMatrix& h, int cap) {
    check_cap(cap);
    const int checks = h.rows();
    const int vars = h.cols();
    const int vertex_count = checks + vars;
    int best = cap + 2;

    std::vector<int> dist(vertex_count);
    std::vector<int> parent(vertex_count);
    std::vector<int> queue;
    queue.reserve(vertex_count);

    auto neighbors = [&](int u) -> const std::vector<int>& {
        return u < checks ? h.row_support(u) : h.col_support(u - checks);
    };
    auto vertex_of = [&](int u, int nbr) { return u < checks ? checks + nbr : nbr; };

    for (int start = 0; start < checks && best > 4; ++start) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[start] = 0;
        parent[start] = -1;
        queue.push_back(start);
        const int depth_limit = (std::min(cap, best - 2)) / 2;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            if (dist[u] > depth_limit) break;
            for (int nbr : neighbors(u)) {
                const int w = vertex_of(u, nbr);
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best <= cap ? GirthResult::exact(best) : GirthResult::exceeds_cap(cap);
}

bool check_theorem1(const ExponentMatrix& base, const ExponentMatrix& compound, int cap) {
    return girth_at_least(girth_exponent(compound, cap), girth_exponent(base, cap));
}

}  // namespace psldpc
