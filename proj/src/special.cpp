#include "discpot/special.hpp"

#include <array>
#include <cstdlib>

namespace discpot {

TruncatedSeries local_surface_mirror(const Truncation& trunc) {
    VariableSpec spec({"q", "uv"}, {"z1"});
    const int S = trunc.small_total_max;
    TruncatedSeries f = TruncatedSeries::constant(spec, trunc, 1);
    auto factor = [&](int qexp, int zexp) {
        TruncatedSeries t = TruncatedSeries::constant(spec, trunc, 1);
        t.add_term({qexp, 0, zexp}, 1);
        return t;
    };
    // Factors with q-exponent beyond the truncation are identically 1.
    for (int i = 1; i <= S; ++i) f = f * factor(i, -1);
    for (int j = 0; j <= S; ++j) f = f * factor(j, 1);
    return f;
}

bool triple_product_check(int q_max, int z_window) {
    VariableSpec spec({"q"}, {"z"});
    Truncation final_t;
    final_t.small_total_max = q_max;
    final_t.z_window = z_window;
    // Inflated working window: no monomial clipped there can influence a
    // kept one, since z-exponents are bounded below by -q_max.
    Truncation work = final_t;
    work.z_window = z_window + q_max + 1;

    TruncatedSeries lhs = TruncatedSeries::constant(spec, work, 1);
    for (int i = 1; i <= q_max; ++i) {
        TruncatedSeries t = TruncatedSeries::constant(spec, work, 1);
        t.add_term({i, -1}, 1);
        lhs = lhs * t;
    }
    for (int j = 0; j <= q_max; ++j) {
        TruncatedSeries t = TruncatedSeries::constant(spec, work, 1);
        t.add_term({j, 1}, 1);
        lhs = lhs * t;
    }

    TruncatedSeries euler = TruncatedSeries::constant(spec, work, 1);
    for (int k = 1; k <= q_max; ++k) {
        TruncatedSeries t = TruncatedSeries::constant(spec, work, 1);
        t.add_term({k, 0}, -1);
        euler = euler * invert(t);
    }
    TruncatedSeries theta = TruncatedSeries::zero(spec, work);
    for (int l = -work.z_window; l <= work.z_window; ++l) {
        const long e = static_cast<long>(l) * (l - 1) / 2;
        if (e > q_max) continue;
        theta.add_term({static_cast<int>(e), l}, 1);
    }
    return lhs.restricted(final_t) == (euler * theta).restricted(final_t);
}

TruncatedSeries delta_correction(const VariableSpec& spec, const Truncation& trunc) {
    const int budget = trunc.small_total_max;
    // Candidate vectors l != 0 with degree ((l1)^2+(l2)^2+(l1+l2)^2)/2
    // within budget.
    struct Vec {
        int a, b, deg2;  // deg2 = twice the degree
    };
    std::vector<Vec> vecs;
    for (int a = -budget; a <= budget; ++a) {
        for (int b = -budget; b <= budget; ++b) {
            if (a == 0 && b == 0) continue;
            const int d2 = a * a + b * b + (a + b) * (a + b);
            if (d2 <= 2 * budget) vecs.push_back({a, b, d2});
        }
    }

    TruncatedSeries L = TruncatedSeries::zero(spec, trunc);
    const int i1 = spec.index_of("q1");
    const int i2 = spec.index_of("q2");
    const int is = spec.index_of("qs");

    for (int j = 2; j <= budget; ++j) {
        std::map<std::array<int, 3>, Integer> counts;
        // Ordered tuples (l_1..l_j), all nonzero, summing to zero.
        auto rec = [&](auto&& self, int pos, int sa, int sb, int used2, long s11, long s22,
                       long sxx) -> void {
            if (pos == j - 1) {
                const int a = -sa, b = -sb;
                if (a == 0 && b == 0) return;
                const int d2 = a * a + b * b + (a + b) * (a + b);
                if (used2 + d2 > 2 * budget) return;
                std::array<int, 3> e{static_cast<int>((s11 + a * a) / 2),
                                     static_cast<int>((s22 + b * b) / 2),
                                     static_cast<int>((sxx + (a + b) * (a + b)) / 2)};
                counts[e] += 1;
                return;
            }
            const int remaining = j - 1 - pos;  // tuples still to place after this one
            for (const Vec& v : vecs) {
                if (used2 + v.deg2 + 2 * remaining > 2 * budget) continue;
                self(self, pos + 1, sa + v.a, sb + v.b, used2 + v.deg2, s11 + v.a * v.a,
                     s22 + v.b * v.b, sxx + (v.a + v.b) * (v.a + v.b));
            }
        };
        rec(rec, 0, 0, 0, 0, 0, 0, 0);
        Rational coef(Integer(j % 2 == 0 ? 1 : -1), Integer(j));
        coef.canonicalize();
        for (const auto& [e, cnt] : counts) {
            ExpVec exp(spec.arity(), 0);
            exp[i1] = e[0];
            exp[i2] = e[1];
            exp[is] = e[2];
            L.add_term(exp, coef * Rational(cnt));
        }
    }
    return exp_series(L);
}

TruncatedSeries abelian_family_mirror(const Truncation& trunc) {
    VariableSpec spec({"q1", "q2", "qs", "uv"}, {"z1", "z2"});
    const int i1 = spec.index_of("q1");
    const int i2 = spec.index_of("q2");
    const int is = spec.index_of("qs");
    const int iz1 = spec.index_of("z1");
    const int iz2 = spec.index_of("z2");

    TruncatedSeries theta = TruncatedSeries::zero(spec, trunc);
    const int B = trunc.z_window;
    for (int j = -B; j <= B; ++j) {
        for (int k = -B; k <= B; ++k) {
            const long es = static_cast<long>(j + k) * (j + k - 1) / 2;
            const long e2 = static_cast<long>(j) * (j - 1) / 2;
            const long e1 = static_cast<long>(k) * (k - 1) / 2;
            if (e1 + e2 + es > trunc.small_total_max) continue;
            ExpVec e(spec.arity(), 0);
            e[i1] = static_cast<int>(e1);
            e[i2] = static_cast<int>(e2);
            e[is] = static_cast<int>(es);
            e[iz1] = j;
            e[iz2] = k;
            theta.add_term(e, 1);
        }
    }
    return delta_correction(spec, trunc) * theta;
}

}  // namespace discpot
