#include "discpot/mirror.hpp"

namespace discpot {

VariableSpec kahler_spec(const ToricCYData& data) {
    return VariableSpec(data.kahler_names, {});
}

Truncation kahler_truncation(int order) {
    Truncation t;
    t.small_total_max = order;
    t.z_window = 0;
    return t;
}

TruncatedSeries g_series(const ToricCYData& data, int i, int order) {
    if (i < 0 || i >= data.m()) throw ToricError("divisor index out of range");
    if (order < 0) throw ToricError("order must be nonnegative");
    const VariableSpec spec = kahler_spec(data);
    const Truncation trunc = kahler_truncation(order);
    TruncatedSeries g = TruncatedSeries::zero(spec, trunc);
    for (const auto& alpha : enumerate_effective(data, order)) {
        const long di = pair_divisor(data, i, alpha);
        if (di >= 0) continue;
        bool ok = true;
        Integer denom = 1;
        for (int j = 0; j < data.m() && ok; ++j) {
            if (j == i) continue;
            const long dj = pair_divisor(data, j, alpha);
            if (dj < 0) {
                ok = false;
            } else {
                denom *= factorial(static_cast<unsigned long>(dj));
            }
        }
        if (!ok) continue;
        Rational c(factorial(static_cast<unsigned long>(-di - 1)), denom);
        c.canonicalize();
        if ((-di) % 2 != 0) c = -c;
        ExpVec e(alpha.multiplicities.begin(), alpha.multiplicities.end());
        g.add_term(e, c);
    }
    return g;
}

MirrorMap compute_mirror_map(const ToricCYData& data, int order) {
    const VariableSpec spec = kahler_spec(data);
    const Truncation trunc = kahler_truncation(order);
    const int ng = data.num_generators();

    std::vector<TruncatedSeries> g;
    g.reserve(data.m());
    for (int i = 0; i < data.m(); ++i) g.push_back(g_series(data, i, order));

    MirrorMap mm;
    mm.order = order;
    // Forward: q_k = qcheck_k * exp(-sum_i (C_k . D_i) g_i(qcheck)).
    for (int k = 0; k < ng; ++k) {
        TruncatedSeries s = TruncatedSeries::zero(spec, trunc);
        for (int i = 0; i < data.m(); ++i) {
            if (data.pairing[i][k] != 0) s = s + g[i] * Rational(-data.pairing[i][k]);
        }
        mm.forward.push_back(TruncatedSeries::variable(spec, trunc, data.kahler_names[k]) *
                             exp_series(s));
    }

    // Inverse by fixed-point iteration: qcheck_k <- q_k * exp(+sum ...),
    // with the g_i evaluated at the current candidate.  Each round extends
    // the correct order by at least one, so `order` rounds suffice.
    std::vector<TruncatedSeries> cand;
    for (int k = 0; k < ng; ++k)
        cand.push_back(TruncatedSeries::variable(spec, trunc, data.kahler_names[k]));
    for (int round = 0; round < order; ++round) {
        std::map<std::string, TruncatedSeries> bind;
        for (int k = 0; k < ng; ++k) bind.insert_or_assign(data.kahler_names[k], cand[k]);
        std::vector<TruncatedSeries> next;
        bool stable = true;
        for (int k = 0; k < ng; ++k) {
            TruncatedSeries s = TruncatedSeries::zero(spec, trunc);
            for (int i = 0; i < data.m(); ++i) {
                if (data.pairing[i][k] != 0)
                    s = s + substitute(g[i], bind) * Rational(data.pairing[i][k]);
            }
            next.push_back(TruncatedSeries::variable(spec, trunc, data.kahler_names[k]) *
                           exp_series(s));
            if (!(next[k] == cand[k])) stable = false;
        }
        cand = std::move(next);
        if (stable) break;
    }
    mm.inverse = cand;

    // Round-trip check: forward composed with inverse is the identity.
    std::map<std::string, TruncatedSeries> inv_bind;
    for (int k = 0; k < ng; ++k) inv_bind.insert_or_assign(data.kahler_names[k], mm.inverse[k]);
    for (int k = 0; k < ng; ++k) {
        TruncatedSeries id = TruncatedSeries::variable(spec, trunc, data.kahler_names[k]);
        if (!(substitute(mm.forward[k], inv_bind) == id))
            throw ToricError("mirror map inversion failed the round-trip check");
    }
    return mm;
}

TruncatedSeries delta_series(const ToricCYData& data, int i, int order) {
    MirrorMap mm = compute_mirror_map(data, order);
    std::map<std::string, TruncatedSeries> bind;
    for (int k = 0; k < data.num_generators(); ++k)
        bind.insert_or_assign(data.kahler_names[k], mm.inverse[k]);
    TruncatedSeries g = substitute(g_series(data, i, order), bind);
    const VariableSpec spec = kahler_spec(data);
    const Truncation trunc = kahler_truncation(order);
    return exp_series(g) - TruncatedSeries::constant(spec, trunc, 1);
}

}  // namespace discpot
