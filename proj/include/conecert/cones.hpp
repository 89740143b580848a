// conecert - classification and certificates for conic programs
// Copyright 2026 The conecert authors
// Licensed under the Apache License, Version 2.0

#ifndef CONECERT_CONES_HPP
#define CONECERT_CONES_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace conecert {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Supported cone block kinds. Products of these make up K.
///
/// Coordinate conventions (the wire format of this library):
///  - SecondOrder stores the radius coordinate LAST: (x_1..x_k, t) with
///    t >= sqrt(x_1^2 + ... + x_k^2).
///  - RotatedSecondOrder stores (x_1..x_k, p, q) with 2 p q >= sum x_i^2,
///    p >= 0, q >= 0.
///  - PositiveSemidefinite blocks hold svec(X) of a side*side symmetric
///    matrix: upper triangle stacked column-major, off-diagonals scaled
///    by sqrt(2) so the Euclidean inner product equals the Frobenius one.
enum class ConeKind {
    NonnegativeOrthant,
    SecondOrder,
    RotatedSecondOrder,
    PositiveSemidefinite,
    Zero,
    Free,
};

const char* cone_kind_name(ConeKind kind);

struct ConeBlock {
    ConeKind kind;
    int dim;       ///< number of vector coordinates the block occupies
    int psd_side;  ///< matrix side for PSD blocks, 0 otherwise

    static ConeBlock nonneg(int k);
    static ConeBlock soc(int dim);    ///< dim = k + 1 (radius included)
    static ConeBlock rsoc(int dim);   ///< dim = k + 2, requires dim >= 2
    static ConeBlock psd(int side);   ///< occupies side*(side+1)/2 coordinates
    static ConeBlock zero(int k);
    static ConeBlock free(int k);

    /// Zero and Free are each other's duals; the rest are self-dual.
    ConeBlock dual() const;

    bool operator==(const ConeBlock&) const = default;
};

/// K as an ordered Cartesian product of blocks.
struct ConeSpec {
    std::vector<ConeBlock> blocks;
    int total_dim = 0;

    ConeSpec() = default;
    explicit ConeSpec(std::vector<ConeBlock> blocks_);
    static ConeSpec single(ConeBlock block);

    ConeSpec dual() const;

    bool operator==(const ConeSpec&) const = default;
};

/// Euclidean projection P_K(x), blockwise. PSD blocks project by clamping
/// negative eigenvalues of smat(x) to zero.
Vector project_cone(const Vector& x, const ConeSpec& cone);

/// Projection onto the dual cone K*. Coincides with project_cone on
/// self-dual blocks; Zero blocks pass through unchanged (dual is R^k) and
/// Free blocks map to zero.
Vector project_dual_cone(const Vector& x, const ConeSpec& cone);

/// A point in relint K, scaled by `scale` (> 0 required): ones for the
/// orthant, (0..0,1) for SOC, (0..0,1,1) for RSOC, svec(I) for PSD, zero
/// for Zero and Free blocks.
Vector interior_point(const ConeSpec& cone, double scale);

/// ||x - P_K(x)||; zero (up to tolerance) iff x is in K.
double distance_to_cone(const Vector& x, const ConeSpec& cone);

}  // namespace conecert

#endif
