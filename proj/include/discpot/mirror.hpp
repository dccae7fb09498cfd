#pragma once

#include "discpot/series.hpp"
#include "discpot/toric.hpp"

namespace discpot {

// Forward mirror map q_k(qcheck) and its inverse qcheck_k(q), one series
// per curve-class generator.  Both live in the ring whose small variables
// are the Kahler names; the forward series are read in the qcheck
// coordinates, the inverse ones in the q coordinates.
struct MirrorMap {
    std::vector<TruncatedSeries> forward;
    std::vector<TruncatedSeries> inverse;
    int order = 0;
};

// Ring of the Kahler variables truncated at total degree `order`.
VariableSpec kahler_spec(const ToricCYData& data);
Truncation kahler_truncation(int order);

// The hypergeometric series g_i(qcheck) of the inverse-mirror-map
// theorem: sum over effective classes with D_i.alpha < 0 and
// D_j.alpha >= 0 for j != i of
//   (-1)^{D_i.alpha} (-(D_i.alpha)-1)! / prod_{j!=i} (D_j.alpha)!
// times qcheck^alpha.  Divisor index i is 0-based.
TruncatedSeries g_series(const ToricCYData& data, int i, int order);

// Assembles the forward map q_k = qcheck_k exp(-sum_i (C_k.D_i) g_i) and
// inverts it by fixed-point iteration; the round trip is verified up to
// the truncation order.
MirrorMap compute_mirror_map(const ToricCYData& data, int order);

// delta_i(q) = exp(g_i(qcheck(q))) - 1, the generating function of
// one-pointed open Gromov-Witten invariants attached to divisor i.
TruncatedSeries delta_series(const ToricCYData& data, int i, int order);

}  // namespace discpot
