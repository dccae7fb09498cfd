#include "discpot/toric.hpp"

#include <algorithm>
#include <set>

namespace discpot {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ToricError(msg); }

// Gaussian elimination over the rationals; returns the determinant and
// leaves `rhs` holding the solutions (one column per right-hand side).
Rational solve_system(std::vector<std::vector<Rational>> A,
                      std::vector<std::vector<Rational>>& rhs) {
    const size_t n = A.size();
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && A[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(A[pivot], A[col]);
            std::swap(rhs[pivot], rhs[col]);
            det = -det;
        }
        det *= A[col][col];
        Rational inv = Rational(1) / A[col][col];
        for (size_t j = col; j < n; ++j) A[col][j] *= inv;
        for (auto& v : rhs[col]) v *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col] == 0) continue;
            Rational f = A[row][col];
            for (size_t j = col; j < n; ++j) A[row][j] -= f * A[col][j];
            for (size_t k = 0; k < rhs[row].size(); ++k) rhs[row][k] -= f * rhs[col][k];
        }
    }
    return det;
}

}  // namespace

bool ToricCYData::in_sigma(int i) const {
    return std::find(sigma.begin(), sigma.end(), i) != sigma.end();
}

int ToricCYData::sigma_position(int i) const {
    auto it = std::find(sigma.begin(), sigma.end(), i);
    return it == sigma.end() ? -1 : static_cast<int>(it - sigma.begin());
}

ToricCYData build_toric_data(const std::vector<std::vector<long>>& points,
                             const std::vector<int>& sigma) {
    if (points.empty()) fail("no lattice points given");
    const int n = static_cast<int>(points[0].size()) + 1;
    const int m = static_cast<int>(points.size());

    std::set<std::vector<long>> distinct(points.begin(), points.end());
    if (static_cast<int>(distinct.size()) != m) fail("duplicate lattice points");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != n - 1) fail("inconsistent point dimensions");

    if (static_cast<int>(sigma.size()) != n) fail("sigma must select n points");
    for (int s : sigma)
        if (s < 0 || s >= m) fail("sigma index out of range");

    ToricCYData data;
    data.n = n;
    data.points = points;
    data.sigma = sigma;

    // Columns of the basis matrix are the sigma points lifted to height 1.
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    for (int l = 0; l < n; ++l) {
        for (int r = 0; r < n - 1; ++r) A[r][l] = points[sigma[l]][r];
        A[n - 1][l] = 1;
    }
    // One right-hand-side column per lattice point.
    std::vector<std::vector<Rational>> rhs(n, std::vector<Rational>(m));
    for (int i = 0; i < m; ++i) {
        for (int r = 0; r < n - 1; ++r) rhs[r][i] = points[i][r];
        rhs[n - 1][i] = 1;
    }
    Rational det = solve_system(A, rhs);
    if (det != 1 && det != -1) fail("sigma is not unimodular (determinant != +-1)");

    data.a_matrix.assign(m, std::vector<long>(n, 0));
    for (int i = 0; i < m; ++i) {
        long row_sum = 0;
        for (int l = 0; l < n; ++l) {
            if (!is_integer(rhs[l][i]))
                fail("point " + std::to_string(i) + " is not in the lattice spanned by sigma");
            data.a_matrix[i][l] = static_cast<long>(rhs[l][i].get_num().get_si());
            row_sum += data.a_matrix[i][l];
        }
        if (row_sum != 1) fail("Calabi-Yau condition violated: a-row does not sum to 1");
    }
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k)
            if (data.a_matrix[sigma[l]][k] != (l == k ? 1 : 0))
                fail("a-matrix not the identity on sigma");

    for (int i = 0; i < m; ++i)
        if (!data.in_sigma(i)) data.generators.push_back(i);

    const int ng = data.num_generators();
    data.pairing.assign(m, std::vector<long>(ng, 0));
    for (int k = 0; k < ng; ++k) {
        const int i = data.generators[k];
        long col_sum = 0;
        for (int j = 0; j < m; ++j) {
            long a_ij = 0;
            int pos = data.sigma_position(j);
            if (pos >= 0) a_ij = data.a_matrix[i][pos];
            data.pairing[j][k] = (j == i ? 1 : 0) - a_ij;
            col_sum += data.pairing[j][k];
        }
        if (col_sum != 0) fail("c1 = 0 violated: pairing column does not sum to zero");
    }

    if (ng == 1) {
        data.kahler_names = {"q"};
    } else {
        for (int k = 0; k < ng; ++k) data.kahler_names.push_back("q" + std::to_string(k + 1));
    }
    return data;
}

void validate_frame(const ToricCYData& data, const Frame& frame) {
    if (!data.in_sigma(frame.base_index)) fail("chamber base must lie in sigma");
    const int d = data.n - 1;
    if (static_cast<int>(frame.matrix.size()) != d) fail("frame must have n-1 rows");
    for (const auto& row : frame.matrix)
        if (static_cast<int>(row.size()) != d) fail("frame rows must have n-1 entries");
    std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) A[r][c] = frame.matrix[r][c];
    std::vector<std::vector<Rational>> rhs(d, std::vector<Rational>(0));
    Rational det = solve_system(A, rhs);
    if (det != 1 && det != -1) fail("frame matrix is not unimodular");
}

std::vector<long> frame_coordinates(const ToricCYData& data, const Frame& frame, int i) {
    const int d = data.n - 1;
    // Solve w^T F = p_i - p_b, i.e. (F^T) w = p_i - p_b.
    std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) A[r][c] = frame.matrix[c][r];
    std::vector<std::vector<Rational>> rhs(d, std::vector<Rational>(1));
    for (int r = 0; r < d; ++r)
        rhs[r][0] = data.points[i][r] - data.points[frame.base_index][r];
    Rational det = solve_system(A, rhs);
    if (det == 0) fail("frame matrix is singular");
    std::vector<long> w(d);
    for (int r = 0; r < d; ++r) {
        if (!is_integer(rhs[r][0])) fail("frame coordinates are not integral");
        w[r] = static_cast<long>(rhs[r][0].get_num().get_si());
    }
    return w;
}

std::vector<EffectiveClass> enumerate_effective(const ToricCYData& data, int max_degree) {
    if (max_degree < 0) fail("max_degree must be nonnegative");
    const int ng = data.num_generators();
    std::vector<EffectiveClass> out;
    std::vector<int> d(ng, 0);
    // Lexicographic enumeration of multiplicity vectors with sum <= max_degree.
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == ng) {
            out.push_back({d, used});
            return;
        }
        for (int v = 0; v <= max_degree - used; ++v) {
            d[pos] = v;
            self(self, pos + 1, used + v);
        }
        d[pos] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

long pair_divisor(const ToricCYData& data, int j, const EffectiveClass& alpha) {
    long s = 0;
    for (int k = 0; k < data.num_generators(); ++k)
        s += data.pairing[j][k] * alpha.multiplicities[k];
    return s;
}

}  // namespace discpot
