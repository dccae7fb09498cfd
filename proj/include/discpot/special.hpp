#pragma once

#include "discpot/series.hpp"

namespace discpot {

// Slab function of the local model of a smooth anticanonical surface
// (type A_0 fibre):
//   f = prod_{i>=1} (1 + q^i z1^{-1}) prod_{j>=0} (1 + q^j z1),
// with both products cut off once q^i exceeds the truncation.  Lives in
// the ring with smalls (q, uv) and phase z1.
TruncatedSeries local_surface_mirror(const Truncation& trunc);

// Jacobi triple product check at truncation (q <= q_max, |z| <= z_window):
//   prod (1+q^i z^-1)(1+q^j z)  ==  prod 1/(1-q^k) * sum_l q^{l(l-1)/2} z^l.
// Both sides are computed in an inflated window and restricted, so the
// comparison is exact.
bool triple_product_check(int q_max, int z_window);

// Slab function of the abelian-surface family: f = Delta(Omega) * Theta
// in the ring with smalls (q1, q2, qs, uv) and phases (z1, z2), where
//   Theta = sum_{(j,k) in Z^2} qs^{(j+k)(j+k-1)/2} q2^{j(j-1)/2}
//           q1^{k(k-1)/2} z1^j z2^k
// and Delta is the exponential of a finite sum over ordered tuples of
// nonzero lattice vectors summing to zero (see delta_correction).
TruncatedSeries abelian_family_mirror(const Truncation& trunc);

// Delta(Omega) = exp( sum_{j>=2} ((-1)^j / j) sum_{l_1..l_j != 0,
// sum l_i = 0} q1^{e1} q2^{e2} qs^{es} ) with e1 = sum (l_i^1)^2 / 2,
// e2 = sum (l_i^2)^2 / 2, es = sum (l_i^1 + l_i^2)^2 / 2.  Every vector
// contributes degree >= 1, which makes the sum finite at any truncation.
TruncatedSeries delta_correction(const VariableSpec& spec, const Truncation& trunc);

}  // namespace discpot
