#ifndef PSLDPC_GIRTH_HPP
#define PSLDPC_GIRTH_HPP

#include <utility>
#include <vector>

#include "psldpc/matrix.hpp"

namespace psldpc {

/// Shortest-cycle length, or the statement that every cycle is longer than
/// the search cap.
struct GirthResult {
    enum class Kind { Exact, ExceedsCap };

    Kind kind;
    int value = 0;  // even girth, set when Exact
    int cap = 0;    // search cap, set when ExceedsCap

    static GirthResult exact(int value) { return {Kind::Exact, value, 0}; }
    static GirthResult exceeds_cap(int cap) { return {Kind::ExceedsCap, 0, cap}; }

    bool is_exact() const { return kind == Kind::Exact; }
    bool exceeds() const { return kind == Kind::ExceedsCap; }

    bool operator==(const GirthResult&) const = default;
};

/// a >= b under the ordering Exact(4) < Exact(6) < ... < ExceedsCap.
bool girth_at_least(const GirthResult& a, const GirthResult& b);

/// Closed alternating walk through finite entries of an exponent matrix
/// certifying a cycle: positions p0, p1, ..., p_{2l-1} where p_{2t}, p_{2t+1}
/// share a block row, p_{2t+1}, p_{2t+2} share a block column (cyclically),
/// adjacent positions are distinct, and the alternating shift sum over the
/// column-sharing pairs is divisible by P.
struct CycleWitness {
    std::vector<std::pair<int, int>> positions;
    long long alternating_sum = 0;

    int length() const { return static_cast<int>(positions.size()); }
    bool validate(const ExponentMatrix& e) const;
};

/// Exact girth of the lifted matrix H(E, P), computed in the exponent domain:
/// a length-2l cycle exists iff some closed alternating walk of 2l positions
/// has alternating shift sum = 0 mod P. Searches even lengths 4..cap.
GirthResult girth_exponent(const ExponentMatrix& e, int cap = 12, CycleWitness* witness = nullptr);

/// Independent oracle: girth of the bipartite check/variable graph of H by
/// breadth-first search from every check node, early exit at the cap.
GirthResult girth_graph(const SparseBinaryMatrix& h, int cap = 12);

/// True iff the compound matrix has girth at least that of the base, both
/// measured with the same cap.
bool check_theorem1(const ExponentMatrix& base, const ExponentMatrix& compound, int cap = 12);

}  // namespace psldpc

#endif
