#include "discpot/potential.hpp"

#include <cmath>

namespace discpot {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SeriesError(msg); }

// Checks the shape invariant the Newton solver relies on and returns the
// q-free part.
TruncatedSeries checked_qfree(const TruncatedSeries& f, const std::string& var) {
    const VariableSpec& spec = f.spec();
    if (!spec.has("uv") || spec.index_of("uv") >= spec.num_small())
        fail("gluing equation needs a small variable uv");
    const int vi = spec.index_of(var);
    if (vi < spec.num_small()) fail("solving variable must be a phase variable");

    TruncatedSeries qfree = small_free_part(f);
    ExpVec var_exp(spec.arity(), 0);
    var_exp[vi] = 1;
    if (qfree.constant_term() != 1 || qfree.coeff(var_exp) != 1)
        fail("series is not of slab shape: q-free part must be 1 + " + var + " + ...");
    for (const auto& [e, c] : qfree.terms()) {
        if (e == var_exp) continue;
        if (e[vi] != 0) fail("series is not of slab shape: stray " + var + " power");
        for (int j = spec.num_small(); j < spec.arity(); ++j)
            if (e[j] < 0) fail("series is not of slab shape: negative spectator exponent");
    }
    return qfree;
}

}  // namespace

GluingSolution solve_gluing(const TruncatedSeries& f, const std::string& solving_var) {
    const VariableSpec& spec = f.spec();
    const Truncation& trunc = f.trunc();
    TruncatedSeries qfree = checked_qfree(f, solving_var);

    ExpVec var_exp(spec.arity(), 0);
    var_exp[spec.index_of(solving_var)] = 1;
    ExpVec uv_exp(spec.arity(), 0);
    uv_exp[spec.index_of("uv")] = 1;
    const TruncatedSeries uv = TruncatedSeries::monomial(spec, trunc, uv_exp, 1);

    // Seed: the q-free part of f at z1 = -Z has to vanish, so Z starts as
    // 1 plus the spectator monomials.
    TruncatedSeries Z = qfree - TruncatedSeries::monomial(spec, trunc, var_exp, 1);
    TruncatedSeries df = f.derivative(solving_var);

    const int S = trunc.small_total_max;
    const int rounds = static_cast<int>(std::ceil(std::log2(S + 1.0))) + 1;

    GluingSolution sol;
    sol.solving_variable = solving_var;
    for (int r = 0; r < rounds; ++r) {
        std::map<std::string, TruncatedSeries> bind{{solving_var, -Z}};
        TruncatedSeries residual = substitute(f, bind) - uv;
        if (residual.is_zero()) break;
        TruncatedSeries slope = -substitute(df, bind);
        Z = Z - residual * invert(slope);
        ++sol.newton_rounds;
    }
    std::map<std::string, TruncatedSeries> bind{{solving_var, -Z}};
    if (!((substitute(f, bind) - uv).is_zero()))
        fail("Newton iteration did not reach an exactly zero residual");
    sol.Z = Z;
    return sol;
}

GluingSolution solve_gluing(const SlabFunction& f) {
    return solve_gluing(f.series, SlabFunction::solving_variable());
}

EquivariantPotential equivariant_potential(const GluingSolution& sol) {
    EquivariantPotential p;
    p.lambda_coefficient = log_series(sol.Z);
    return p;
}

namespace {

int convention_sign(const VariableSpec& spec, const ExpVec& e, TableConvention conv) {
    switch (conv) {
        case TableConvention::Plain:
            return 1;
        case TableConvention::NegatedPlain:
            return -1;
        case TableConvention::Inner: {
            long s = 0;
            for (int i = 0; i < spec.arity(); ++i) {
                if (spec.is_small_index(i) && spec.name_of(i) == "uv") continue;
                s += e[i];
            }
            // a = -(-1)^s c
            return ((s % 2 + 2) % 2 == 0) ? -1 : 1;
        }
    }
    return 1;
}

}  // namespace

Rational CoefficientTable::value(const std::map<std::string, int>& coords) const {
    ExpVec e(spec.arity(), 0);
    for (const auto& [name, exp] : coords) e[spec.index_of(name)] = exp;
    auto it = entries.find(e);
    return it == entries.end() ? Rational(0) : it->second;
}

CoefficientTable coefficient_table(const TruncatedSeries& s, TableConvention conv) {
    CoefficientTable t;
    t.spec = s.spec();
    t.convention = conv;
    for (const auto& [e, c] : s.terms())
        t.entries[e] = c * Rational(convention_sign(t.spec, e, conv));
    return t;
}

TruncatedSeries series_from_table(const CoefficientTable& table, const Truncation& trunc) {
    TruncatedSeries s = TruncatedSeries::zero(table.spec, trunc);
    for (const auto& [e, a] : table.entries)
        s.add_term(e, a * Rational(convention_sign(table.spec, e, table.convention)));
    return s;
}

TruncatedSeries av_potential(const GluingSolution& sol, const std::string& var) {
    Truncation t = sol.Z.trunc();
    t.per_small_max["uv"] = 0;
    return log_series(sol.Z.restricted(t)).antiderivative(var);
}

ImmersedTorusPotential immersed_torus_potential(const SlabFunction& f, bool exponential) {
    const VariableSpec& spec = f.series.spec();
    const Truncation& trunc = f.series.trunc();

    std::vector<std::string> smalls = spec.small_names;
    smalls.push_back("h");
    VariableSpec hspec(smalls, spec.phase_names);
    Truncation htrunc = trunc;
    htrunc.small_total_max += 1;
    htrunc.per_small_max["h"] = 1;

    ExpVec uv_exp(hspec.arity(), 0);
    uv_exp[hspec.index_of("uv")] = 1;
    ExpVec h_exp(hspec.arity(), 0);
    h_exp[hspec.index_of("h")] = 1;
    TruncatedSeries W =
        TruncatedSeries::monomial(hspec, htrunc, h_exp, 1) *
        (f.series.embedded(hspec, htrunc) - TruncatedSeries::monomial(hspec, htrunc, uv_exp, 1));

    ImmersedTorusPotential p;
    if (!exponential) {
        p.w_series = W;
        return p;
    }

    // Rewrite z_j = exp(x_j): the result lives in a phase-free ring whose
    // small variables additionally include h and the x_j, each x_j capped
    // at the z-window.
    std::vector<std::string> xsmalls = hspec.small_names;
    std::vector<std::string> xnames;
    for (const auto& z : spec.phase_names) {
        xnames.push_back("x" + z.substr(1));
        xsmalls.push_back(xnames.back());
    }
    VariableSpec xspec(xsmalls, {});
    Truncation xtrunc;
    xtrunc.small_total_max = htrunc.small_total_max + spec.num_phase() * trunc.z_window;
    xtrunc.per_small_max = htrunc.per_small_max;
    for (const auto& x : xnames) xtrunc.per_small_max[x] = trunc.z_window;

    TruncatedSeries out = TruncatedSeries::zero(xspec, xtrunc);
    std::map<std::pair<int, int>, TruncatedSeries> exp_cache;
    for (const auto& [e, c] : W.terms()) {
        ExpVec base(xspec.arity(), 0);
        for (int i = 0; i < hspec.num_small(); ++i) base[xspec.index_of(hspec.name_of(i))] = e[i];
        TruncatedSeries term = TruncatedSeries::monomial(xspec, xtrunc, base, c);
        for (int j = 0; j < spec.num_phase(); ++j) {
            const int k = e[hspec.num_small() + j];
            if (k == 0) continue;
            auto key = std::make_pair(j, k);
            auto it = exp_cache.find(key);
            if (it == exp_cache.end()) {
                TruncatedSeries x = TruncatedSeries::variable(xspec, xtrunc, xnames[j]);
                it = exp_cache.emplace(key, exp_series(x * Rational(k))).first;
            }
            term = term * it->second;
        }
        out = out + term;
    }
    p.w_series = out;
    return p;
}

SpinDiagnostic untwisted_diagnostic(const SlabFunction& f) {
    const VariableSpec& spec = f.series.spec();
    const int ns = spec.num_small();
    const int z1 = spec.index_of(SlabFunction::solving_variable());
    // q-free part at z1 = 1 and every other phase variable 0.
    Rational lead = 0;
    const TruncatedSeries qfree = small_free_part(f.series);
    for (const auto& [e, c] : qfree.terms()) {
        bool keep = true;
        for (int j = ns; j < spec.arity() && keep; ++j)
            if (j != z1 && e[j] != 0) keep = false;
        if (keep) lead += c;
    }
    SpinDiagnostic d;
    d.leading_constant = lead;
    d.solvable = (lead == 0);
    return d;
}

}  // namespace discpot
