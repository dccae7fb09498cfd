#include "discpot/slab.hpp"

#include <cstdlib>

namespace discpot {

VariableSpec slab_spec(const ToricCYData& data) {
    std::vector<std::string> smalls = data.kahler_names;
    smalls.push_back("uv");
    std::vector<std::string> phases;
    for (int j = 1; j < data.n; ++j) phases.push_back("z" + std::to_string(j));
    return VariableSpec(smalls, phases);
}

TruncatedSeries small_free_part(const TruncatedSeries& s) {
    TruncatedSeries out = TruncatedSeries::zero(s.spec(), s.trunc());
    const int ns = s.spec().num_small();
    for (const auto& [e, c] : s.terms()) {
        bool free = true;
        for (int i = 0; i < ns && free; ++i)
            if (e[i] != 0) free = false;
        if (free) out.add_term(e, c);
    }
    return out;
}

SlabFunction slab_function(const ToricCYData& data, const Frame& frame,
                           const Truncation& trunc) {
    validate_frame(data, frame);
    const VariableSpec spec = slab_spec(data);
    const int ns = spec.num_small();
    const int ng = data.num_generators();
    const int d = data.n - 1;

    // One mirror map suffices for all delta_i.
    const int order = trunc.small_total_max;
    MirrorMap mm = compute_mirror_map(data, order);
    std::map<std::string, TruncatedSeries> inv_bind;
    for (int k = 0; k < ng; ++k) inv_bind.insert_or_assign(data.kahler_names[k], mm.inverse[k]);
    const VariableSpec qspec = kahler_spec(data);
    const Truncation qtrunc = kahler_truncation(order);
    const TruncatedSeries one_q = TruncatedSeries::constant(qspec, qtrunc, 1);

    SlabFunction f;
    f.frame = frame;
    f.series = TruncatedSeries::zero(spec, trunc);

    for (int i = 0; i < data.m(); ++i) {
        SlabTermInfo info;
        info.point_index = i;
        info.w = frame_coordinates(data, frame, i);
        for (long wj : info.w)
            if (std::abs(wj) > trunc.z_window)
                throw ToricError("z-window too small to hold the frame coordinates of point " +
                                 std::to_string(i));

        ExpVec charge(spec.arity(), 0);
        if (!data.in_sigma(i)) {
            // Point i is the generator of its own curve class.
            int k = 0;
            while (data.generators[k] != i) ++k;
            charge[spec.index_of(data.kahler_names[k])] = 1;
            info.q_charge.assign(ng, 0);
            info.q_charge[k] = 1;
        }
        for (int j = 0; j < d; ++j) charge[ns + j] = static_cast<int>(info.w[j]);

        f.provenance.push_back(info);
        // 1 + delta_i(q) = exp(g_i(qcheck(q))).
        TruncatedSeries delta_plus_one =
            exp_series(substitute(g_series(data, i, order), inv_bind));
        f.series = f.series + delta_plus_one.embedded(spec, trunc) *
                                  TruncatedSeries::monomial(spec, trunc, charge, 1);
    }

    // The gluing equation is solved in z1; that requires the q-free part
    // to be 1 + z1 plus z1-free monomials with nonnegative exponents.
    TruncatedSeries qfree = small_free_part(f.series);
    const int z1 = spec.index_of("z1");
    ExpVec z1_exp(spec.arity(), 0);
    z1_exp[z1] = 1;
    if (qfree.constant_term() != 1 || qfree.coeff(z1_exp) != 1)
        throw ToricError("unsupported framing: q-free part is not 1 + z1 + ...");
    for (const auto& [e, c] : qfree.terms()) {
        if (e == z1_exp) continue;
        if (e[z1] != 0)
            throw ToricError("unsupported framing: q-free term with z1 exponent " +
                             std::to_string(e[z1]));
        for (int j = ns; j < spec.arity(); ++j)
            if (e[j] < 0)
                throw ToricError("unsupported framing: q-free term with negative exponent");
    }
    return f;
}

}  // namespace discpot
