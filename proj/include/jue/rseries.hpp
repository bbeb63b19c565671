#pragma once

#include <array>

#include "jue/series.hpp"

namespace jue {

// Spectral points of the Jacobi weight. Local coordinates: w = 1/z at
// infinity, w = z at zero, w = 1 - z at one.
enum class Point { Infinity, Zero, One };

// 2x2 matrix of truncated series in one local coordinate w.
// Invariants: trace = 1 + O(w^{K+1}), det = O(w^{K+1}).
struct MatrixSeries2x2 {
    Point p = Point::Infinity;
    int order = 0;  // trusted degree K
    std::array<TruncatedSeries, 4> m;  // row-major

    const TruncatedSeries& at(int i, int j) const { return m[2 * i + j]; }
    TruncatedSeries& at(int i, int j) { return m[2 * i + j]; }

    TruncatedSeries trace() const { return at(0, 0) + at(1, 1); }
    TruncatedSeries det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }
};

// The matrix series R^[p] to trusted order K, assembled from the recurrence
// coefficients (at p = one, by the alpha<->beta swap of the p = zero series).
MatrixSeries2x2 r_series(Point p, int K);

// 2x2 matrices of rational functions, for the Lax-equation data.
using Matrix2x2RF = std::array<RationalFunction, 4>;

// The conjugated connection matrices: U~(z) = U0~/z + U1~/(1-z).
Matrix2x2RF lax_U0();
Matrix2x2RF lax_U1();

// Checks d_z R = [U~, R] order-by-order on the assembled series at p.
// Returns false with the first failing order (if requested).
bool lax_residue_check(Point p, int K, int* first_failing_order = nullptr);
// Same check on a caller-supplied matrix series (for mutation tests).
bool lax_check_matrix(const MatrixSeries2x2& R, int* first_failing_order = nullptr);

}  // namespace jue
