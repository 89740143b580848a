// conecert - classification and certificates for conic programs
// Copyright 2026 The conecert authors
// Licensed under the Apache License, Version 2.0

#ifndef CONECERT_AFFINE_HPP
#define CONECERT_AFFINE_HPP

#include <Eigen/Dense>
#include <variant>

#include "conecert/cones.hpp"

namespace conecert {

/// Witness that Ax = b has no solution at all: a row combination `lambda`
/// with lambda^T A = 0 and lambda^T b = 1. Carries the dropped row whose
/// right-hand side disagreed with the rows kept by the rank reduction.
struct AffineInconsistency {
    Vector lambda;
    int dropped_row = -1;
    double residual = 0.0;
};

/// Factorization-backed projector onto {x | Ax = b} and onto N(A).
///
/// Construction reduces A to a full-row-rank subset of rows (column-pivoted
/// QR of A^T; pivot ratio below 1e-12 of the largest marks a dependent row),
/// then factors A A^T once. Every apply() is two matrix-vector products and
/// two triangular solves. Immutable after construction.
class AffineProjector {
  public:
    /// x0 = A^T (A A^T)^{-1} b, the least-norm point of the affine set.
    const Vector& x0() const { return x0_; }
    /// The kept full-row-rank rows (certificate formulas use these).
    const Matrix& reduced_A() const { return A_; }
    const Vector& reduced_b() const { return b_; }
    int effective_rank() const { return static_cast<int>(A_.rows()); }
    int original_rows() const { return original_rows_; }
    int cols() const { return static_cast<int>(A_.cols()); }

    /// Dx + x0, or Dx when `to_nullspace` is set, where D = I - A^T(AA^T)^{-1}A.
    Vector apply(const Vector& x, bool to_nullspace = false) const;
    Vector project_nullspace(const Vector& x) const { return apply(x, true); }

  private:
    friend std::variant<AffineProjector, AffineInconsistency> build_projector(const Matrix&,
                                                                              const Vector&);
    AffineProjector() = default;

    Matrix A_;
    Vector b_;
    Eigen::LLT<Matrix> llt_;  // of A_ A_^T
    Vector x0_;
    int original_rows_ = 0;
};

/// Builds the projector, dropping linearly dependent rows. If a dropped
/// row's right-hand side is inconsistent with the kept rows (residual above
/// 1e-8 * (1 + ||b||)) the affine set is empty and the inconsistency
/// witness is returned instead; the caller treats that as an immediate
/// strong-infeasibility classification. Throws ValueError on a zero matrix.
std::variant<AffineProjector, AffineInconsistency> build_projector(const Matrix& A,
                                                                   const Vector& b);

}  // namespace conecert

#endif
