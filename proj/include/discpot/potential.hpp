#pragma once

#include "discpot/slab.hpp"

namespace discpot {

// Solution Z of the gluing equation f(..., z1 = -Z, ...) = uv, obtained
// by Newton iteration over the graded ring; Z = -z1 is a series in uv,
// the Kahler variables and the spectator phase variables, with constant
// term 1.  The residual is checked to be exactly zero at the working
// truncation before the solution is returned.
struct GluingSolution {
    TruncatedSeries Z;
    std::string solving_variable;
    int newton_rounds = 0;

    GluingSolution() : Z(VariableSpec({}, {}), Truncation{}) {}
};

// Solves uv = f with the spin-structure twist z1 = -Z.  The series must
// satisfy the slab shape invariant (q-free part 1 + z1 + nonnegative
// z1-free monomials); the Newton seed is that q-free part with the z1
// monomial replaced by nothing, and ceil(log2(S+1)) + 1 rounds suffice
// at small total degree S.  Throws SeriesError when the final residual
// is not exactly zero.
GluingSolution solve_gluing(const TruncatedSeries& f, const std::string& solving_var);
GluingSolution solve_gluing(const SlabFunction& f);

// Coefficient of lambda in the S^1-equivariant disc potential, i.e.
// log Z = log(-z1).
struct EquivariantPotential {
    TruncatedSeries lambda_coefficient;

    EquivariantPotential() : lambda_coefficient(VariableSpec({}, {}), Truncation{}) {}
};

EquivariantPotential equivariant_potential(const GluingSolution& sol);

// Sign conventions used when printing coefficient tables.
//   Inner:        a = -(-1)^{(sum of phase exps) + (sum of Kahler exps)} c
//   Plain:        a = c
//   NegatedPlain: a = -c
// where c is the raw series coefficient.  Kahler exponents exclude uv.
enum class TableConvention { Inner, Plain, NegatedPlain };

struct CoefficientTable {
    VariableSpec spec;
    TableConvention convention = TableConvention::Plain;
    std::map<ExpVec, Rational> entries;

    // Table value at named exponents (unnamed variables are zero); returns
    // 0 for absent monomials.
    Rational value(const std::map<std::string, int>& coords) const;
};

CoefficientTable coefficient_table(const TruncatedSeries& s, TableConvention conv);

// Reconstructs the raw series from a table; inverse of coefficient_table.
TruncatedSeries series_from_table(const CoefficientTable& table, const Truncation& trunc);

// Axial-vertex disc potential: the uv = 0 slice of log Z integrated
// termwise in the spectator variable `var` (integration constant 0).
TruncatedSeries av_potential(const GluingSolution& sol, const std::string& var);

// Local model of the potential near an immersed torus fibre:
// W = h (f - uv) in the ring extended by a small variable h capped at
// exponent 1.  `exponential` additionally rewrites every phase variable
// z_j as exp(x_j) with x_j a new small variable.
struct ImmersedTorusPotential {
    TruncatedSeries w_series;

    ImmersedTorusPotential() : w_series(VariableSpec({}, {}), Truncation{}) {}
};

ImmersedTorusPotential immersed_torus_potential(const SlabFunction& f, bool exponential);

// Obstruction check for the untwisted (trivial spin structure) gluing
// z1 = +Z: the leading constant of the q-free part of f evaluated at
// z1 = 1 and all other phase variables 0.  A nonzero value means the
// Newton seed is not invertible around Z = 1 with the plus sign, so the
// untwisted equation has no solution of the required shape.
struct SpinDiagnostic {
    Rational leading_constant;
    bool solvable = false;
};

SpinDiagnostic untwisted_diagnostic(const SlabFunction& f);

}  // namespace discpot
