#ifndef PSLDPC_CONSTRUCT_HPP
#define PSLDPC_CONSTRUCT_HPP

#include "psldpc/latin.hpp"
#include "psldpc/mask.hpp"
#include "psldpc/matrix.hpp"

namespace psldpc {

/// 4 x L base exponent matrix: entry (i, j) = rowfactor_i * j mod P with
/// rowfactors (0, 1, L, L+1).
ExponentMatrix gcd_base(int lift_size, int row_len);

/// mN x nN compound exponent matrix: block (r, c) is E0 masked by the mask
/// the Latin square selects at (r, c). Lift size is unchanged.
ExponentMatrix splice_exponent(const ExponentMatrix& e0, const MaskSet& ms, const LatinSquare& a);

/// Binary-level counterpart: block (r, c) of the N x N super-array is H0 with
/// every block outside the selected mask zeroed. Works for any binary H0 of
/// shape (m*P) x (n*P); P = 1 places no structural demands on H0.
SparseBinaryMatrix splice_binary(const SparseBinaryMatrix& h0, int lift_size, const MaskSet& ms,
                                 const LatinSquare& a);

/// N = 2 triangle composition: M0 = tiled lower-triangular all-ones block,
/// M1 its complement, Latin square [[0,1],[1,0]]. Requires n = K*m.
ExponentMatrix splice_special_n2(const ExponentMatrix& e0);

}  // namespace psldpc

#endif
