#pragma once

#include "discpot/mirror.hpp"
#include "discpot/series.hpp"
#include "discpot/toric.hpp"

namespace discpot {

// Per-lattice-point record of how a slab summand was assembled.
struct SlabTermInfo {
    int point_index = 0;
    std::vector<long> w;        // z-exponents from the frame coordinates
    std::vector<int> q_charge;  // Kahler exponents, empty charge for sigma points
};

// The wall-crossing slab function
//   f = sum_i (1 + delta_i(q)) q^{[C_i]} z^{w_i},
// one summand per lattice point, in the ring with small variables
// (Kahler..., uv) and phase variables z1..z_{n-1}.  z1 is the variable
// the gluing equation uv = f is solved in.
struct SlabFunction {
    TruncatedSeries series;
    Frame frame;
    std::vector<SlabTermInfo> provenance;

    SlabFunction() : series(VariableSpec({}, {}), Truncation{}) {}

    static std::string solving_variable() { return "z1"; }
};

// Ring of a slab function: smalls = Kahler names plus "uv", phases
// z1..z_{n-1}.
VariableSpec slab_spec(const ToricCYData& data);

// Builds the slab function at the given truncation.  The Kahler charge of
// point i is the i-th row of the pairing matrix; sigma points carry the
// empty charge.  Throws ToricError when the frame is invalid, when the
// z-window cannot hold some w_i, or when the q-free part is not of the
// required shape 1 + z1 + (z1-free terms with nonnegative exponents)
// ("unsupported framing").
SlabFunction slab_function(const ToricCYData& data, const Frame& frame,
                           const Truncation& trunc);

// The part of a series with all small exponents zero.
TruncatedSeries small_free_part(const TruncatedSeries& s);

}  // namespace discpot
