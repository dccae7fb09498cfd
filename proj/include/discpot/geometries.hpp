#pragma once

#include "discpot/potential.hpp"
#include "discpot/special.hpp"

namespace discpot {

// A named computation target: either a toric geometry with a chosen
// frame, or one of the non-toric special mirrors.
struct GeometryCase {
    enum class Kind { Toric, Surface, Abelian };

    std::string name;
    Kind kind = Kind::Toric;
    ToricCYData data;          // Kind::Toric only
    Frame frame;               // Kind::Toric only
    Truncation default_trunc;  // truncation the reference tables use
};

std::vector<std::string> builtin_geometry_names();
GeometryCase builtin_geometry(const std::string& name);

// Loads a toric geometry from a JSON config with keys
//   points   : array of lattice points (arrays of ints)
//   sigma    : array of n point indices
//   chamber  : base point index
//   frame    : (n-1) x (n-1) integer matrix, rows v'_j
//   truncation : { "q_total": int, "uv_max": int, "z_window": int }
// Malformed JSON throws SeriesError("json: ..."); semantic problems throw
// ToricError.
GeometryCase geometry_from_json_text(const std::string& text);
GeometryCase geometry_from_config_file(const std::string& path);

// Laurent re-entry bound: the working z-window at which no window
// clipping can influence coefficients kept at `final_t`.  `reentry_rate`
// bounds the negative z-exponents of charged slab monomials per unit of
// small degree; `max_w` is the largest |z-exponent| of a slab summand.
Truncation inflated_truncation(const Truncation& final_t, int reentry_rate, int max_w);

// End-to-end run: builds the slab function at the inflated working
// truncation, solves the gluing equation there and restricts everything
// back to `final_t`, so all reported coefficients are exact.
struct PipelineResult {
    SlabFunction slab;        // restricted to final_t
    GluingSolution solution;  // Z restricted to final_t
    TruncatedSeries log_z;    // equivariant potential coefficient, final_t

    PipelineResult() : log_z(VariableSpec({}, {}), Truncation{}) {}
};

PipelineResult run_pipeline(const GeometryCase& geom, const Truncation& final_t);
PipelineResult run_pipeline(const GeometryCase& geom);  // default truncation

}  // namespace discpot
