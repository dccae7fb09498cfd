#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "discpot/rational.hpp"

namespace discpot {

struct ToricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Combinatorial data of a toric Calabi-Yau n-fold: lattice points of the
// height-1 polytope (the height coordinate is implicit), a basis cone
// sigma, the expansion matrix a_{i,l}, curve-class generators C_i and the
// intersection pairing D_j . C_i.
struct ToricCYData {
    int n = 0;                                  // complex dimension
    std::vector<std::vector<long>> points;      // m points in Z^{n-1}
    std::vector<int> sigma;                     // n indices forming a Z-basis
    std::vector<std::vector<long>> a_matrix;    // m x n: v_i = sum_l a_{i,l} v_{sigma[l]}
    std::vector<int> generators;                // indices i not in sigma, ascending
    std::vector<std::vector<long>> pairing;     // m x generators.size(): D_j . C_i
    std::vector<std::string> kahler_names;      // one Kahler variable per generator

    int m() const { return static_cast<int>(points.size()); }
    int num_generators() const { return static_cast<int>(generators.size()); }
    bool in_sigma(int i) const;
    // Position of point index i within sigma, or -1.
    int sigma_position(int i) const;
};

// Solves the unimodular linear system for the a-matrix, derives curve
// classes and the pairing, and checks all invariants (sigma determinant
// +-1, integral a-rows summing to 1, pairing columns summing to 0).
ToricCYData build_toric_data(const std::vector<std::vector<long>>& points,
                             const std::vector<int>& sigma);

// A chamber base b in sigma plus a unimodular basis of the hyperplane
// lattice fixing the z-coordinates.
struct Frame {
    int base_index = 0;                        // point index; must lie in sigma
    std::vector<std::vector<long>> matrix;     // (n-1) rows v'_j in Z^{n-1}
};

void validate_frame(const ToricCYData& data, const Frame& frame);

// Integer coordinates w with sum_j w_j v'_j = points[i] - points[base].
std::vector<long> frame_coordinates(const ToricCYData& data, const Frame& frame, int i);

struct EffectiveClass {
    std::vector<int> multiplicities;  // over the curve-class generators
    int degree = 0;                   // sum of multiplicities
};

// All nonnegative multiplicity vectors with total degree <= max_degree,
// in lexicographic order.
std::vector<EffectiveClass> enumerate_effective(const ToricCYData& data, int max_degree);

// Pairing of a divisor D_j with an effective class alpha.
long pair_divisor(const ToricCYData& data, int j, const EffectiveClass& alpha);

}  // namespace discpot
