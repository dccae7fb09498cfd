#include "discpot/geometries.hpp"
#include "discpot/tables.hpp"
#include "doctest.h"

using namespace discpot;

TEST_CASE("affine space gluing has the closed-form solution") {
    PipelineResult pr = run_pipeline(builtin_geometry("c3"));
    const VariableSpec& spec = pr.solution.Z.spec();
    const Truncation& t = pr.solution.Z.trunc();
    TruncatedSeries expect = TruncatedSeries::constant(spec, t, 1);
    expect = expect + TruncatedSeries::variable(spec, t, "z2");
    expect = expect - TruncatedSeries::variable(spec, t, "uv");
    CHECK(pr.solution.Z == expect);
}

TEST_CASE("Newton solution satisfies the gluing equation exactly") {
    for (const auto& name : builtin_geometry_names()) {
        CAPTURE(name);
        GeometryCase g = builtin_geometry(name);
        Truncation work = inflated_truncation(g.default_trunc, 3, 3);
        TruncatedSeries f = [&] {
            if (g.kind == GeometryCase::Kind::Surface) return local_surface_mirror(work);
            if (g.kind == GeometryCase::Kind::Abelian) return abelian_family_mirror(work);
            return slab_function(g.data, g.frame, work).series;
        }();
        GluingSolution sol = solve_gluing(f, "z1");
        CHECK(sol.Z.constant_term() == 1);
        // Independent residual evaluation.
        std::map<std::string, TruncatedSeries> bind;
        bind.insert_or_assign("z1", -sol.Z);
        ExpVec uv(f.spec().arity(), 0);
        uv[f.spec().index_of("uv")] = 1;
        CHECK(substitute(f, bind) ==
              TruncatedSeries::monomial(f.spec(), f.trunc(), uv, 1));
    }
}

TEST_CASE("table conventions invert each other") {
    PipelineResult pr = run_pipeline(builtin_geometry("kp2-inner"));
    for (auto conv : {TableConvention::Inner, TableConvention::Plain,
                      TableConvention::NegatedPlain}) {
        CoefficientTable t = coefficient_table(pr.log_z, conv);
        CHECK(series_from_table(t, pr.log_z.trunc()) == pr.log_z);
    }
    // The inner convention flips by the parity of all non-uv exponents:
    // log Z contains -uv + ... with a = uv coefficient unchanged up to
    // the global flip.
    CoefficientTable inner = coefficient_table(pr.log_z, TableConvention::Inner);
    CoefficientTable plain = coefficient_table(pr.log_z, TableConvention::Plain);
    CHECK(inner.value({{"uv", 1}}) == -plain.value({{"uv", 1}}));
    CHECK(inner.value({{"z2", 1}, {"uv", 1}}) == plain.value({{"z2", 1}, {"uv", 1}}));
}

TEST_CASE("integrality of disc counts") {
    // j * a_{j,0,0} and l * a_{j,k,l} are integers on the local plane
    // and local surface tables.
    PipelineResult inner = run_pipeline(builtin_geometry("kp2-inner"));
    CoefficientTable t = coefficient_table(inner.log_z, TableConvention::Inner);
    const int iz2 = t.spec.index_of("z2");
    const int iuv = t.spec.index_of("uv");
    for (const auto& [e, a] : t.entries) {
        CHECK(is_integer(a * Rational(e[iz2])));
        CHECK(is_integer(a * Rational(e[iuv])));
    }
    PipelineResult surf = run_pipeline(builtin_geometry("surface-a0"));
    CoefficientTable ts = coefficient_table(surf.log_z, TableConvention::NegatedPlain);
    const int juv = ts.spec.index_of("uv");
    for (const auto& [e, a] : ts.entries) CHECK(is_integer(a * Rational(e[juv])));
}

TEST_CASE("axial-vertex potential integrates the uv=0 slice") {
    PipelineResult pr = run_pipeline(builtin_geometry("c3"));
    TruncatedSeries av = av_potential(pr.solution, "z2");
    // log(1 + z2) integrates to z2^2/2 - z2^3/6 + ...
    CHECK(av.coeff_named({{"z2", 2}}) == rat(1, 2));
    CHECK(av.coeff_named({{"z2", 3}}) == rat(-1, 6));
    CHECK(av.coeff_named({{"uv", 1}}) == 0);
    // Differentiating recovers the uv = 0 slice of log Z away from the
    // top window order, where the antiderivative was clipped.
    Truncation t0 = pr.log_z.trunc();
    t0.per_small_max["uv"] = 0;
    t0.z_window -= 1;
    CHECK(av.derivative("z2").restricted(t0) == pr.log_z.restricted(t0));
}

TEST_CASE("immersed torus potential") {
    GeometryCase g = builtin_geometry("c3");
    SlabFunction f = slab_function(g.data, g.frame, g.default_trunc);
    ImmersedTorusPotential p = immersed_torus_potential(f, false);
    CHECK(p.w_series.coeff_named({{"h", 1}}) == 1);
    CHECK(p.w_series.coeff_named({{"h", 1}, {"z1", 1}}) == 1);
    CHECK(p.w_series.coeff_named({{"h", 1}, {"uv", 1}}) == -1);
    CHECK(p.w_series.coeff_named({{"uv", 1}}) == 0);  // everything carries h

    ImmersedTorusPotential pe = immersed_torus_potential(f, true);
    CHECK(pe.w_series.spec().num_phase() == 0);
    CHECK(pe.w_series.coeff_named({{"h", 1}}) == 3);  // f(1,1) - 0 at q-free order
    CHECK(pe.w_series.coeff_named({{"h", 1}, {"x1", 1}}) == 1);
    CHECK(pe.w_series.coeff_named({{"h", 1}, {"x2", 2}}) == rat(1, 2));
    CHECK(pe.w_series.coeff_named({{"h", 1}, {"uv", 1}}) == -1);
}

TEST_CASE("untwisted spin structure is obstructed") {
    GeometryCase g = builtin_geometry("kp2-inner");
    SlabFunction f = slab_function(g.data, g.frame, g.default_trunc);
    SpinDiagnostic d = untwisted_diagnostic(f);
    CHECK(d.leading_constant == 2);
    CHECK(!d.solvable);
}
