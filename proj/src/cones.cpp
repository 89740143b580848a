// conecert - classification and certificates for conic programs
// Copyright 2026 The conecert authors
// Licensed under the Apache License, Version 2.0

#include "conecert/cones.hpp"

#include <cmath>

#include "conecert/errors.hpp"

namespace conecert {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

int triangular_dim(int side) { return side * (side + 1) / 2; }

// svec/smat for a single PSD block, kept local so the cone module does not
// depend on the problem module (which re-exports the public svec).
Matrix block_smat(const Eigen::Ref<const Vector>& v, int side) {
    Matrix M(side, side);
    int k = 0;
    for (int j = 0; j < side; ++j) {
        for (int i = 0; i <= j; ++i, ++k) {
            if (i == j) {
                M(j, j) = v[k];
            } else {
                M(i, j) = M(j, i) = v[k] / kSqrt2;
            }
        }
    }
    return M;
}

void block_svec(const Matrix& M, Eigen::Ref<Vector> out) {
    const int side = static_cast<int>(M.rows());
    int k = 0;
    for (int j = 0; j < side; ++j) {
        for (int i = 0; i <= j; ++i, ++k) {
            out[k] = (i == j) ? M(j, j) : kSqrt2 * M(i, j);
        }
    }
}

// Second-order cone with the radius coordinate last.
void project_soc(const Eigen::Ref<const Vector>& x, Eigen::Ref<Vector> out) {
    const int n = static_cast<int>(x.size());
    if (n == 1) {
        out[0] = std::max(x[0], 0.0);
        return;
    }
    const double t = x[n - 1];
    const double nw = x.head(n - 1).norm();
    if (nw <= t) {
        out = x;
    } else if (nw <= -t) {
        out.setZero();
    } else {
        const double alpha = 0.5 * (nw + t);
        out.head(n - 1) = (alpha / nw) * x.head(n - 1);
        out[n - 1] = alpha;
    }
}

// Rotated cone (w, p, q) -> rotate the (p, q) plane so the constraint
// becomes a plain second-order cone, project, rotate back. The rotation
// u = (p+q)/sqrt2, v = (p-q)/sqrt2 is orthogonal, so the projection
// commutes with it.
void project_rsoc(const Eigen::Ref<const Vector>& x, Eigen::Ref<Vector> out) {
    const int n = static_cast<int>(x.size());
    Vector rotated(n);
    rotated.head(n - 2) = x.head(n - 2);
    rotated[n - 2] = (x[n - 2] - x[n - 1]) / kSqrt2;
    rotated[n - 1] = (x[n - 2] + x[n - 1]) / kSqrt2;
    Vector projected(n);
    project_soc(rotated, projected);
    out.head(n - 2) = projected.head(n - 2);
    out[n - 2] = (projected[n - 1] + projected[n - 2]) / kSqrt2;
    out[n - 1] = (projected[n - 1] - projected[n - 2]) / kSqrt2;
}

void project_psd(const Eigen::Ref<const Vector>& x, int side, Eigen::Ref<Vector> out) {
    const Matrix M = block_smat(x, side);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(M);
    if (eig.info() != Eigen::Success) {
        throw ValueError("psd block: eigendecomposition failed");
    }
    const Vector clamped = eig.eigenvalues().cwiseMax(0.0);
    const Matrix P = eig.eigenvectors() * clamped.asDiagonal() * eig.eigenvectors().transpose();
    block_svec(P, out);
}

void project_block(const ConeBlock& block, const Eigen::Ref<const Vector>& x,
                   Eigen::Ref<Vector> out) {
    switch (block.kind) {
        case ConeKind::NonnegativeOrthant:
            out = x.cwiseMax(0.0);
            break;
        case ConeKind::SecondOrder:
            project_soc(x, out);
            break;
        case ConeKind::RotatedSecondOrder:
            project_rsoc(x, out);
            break;
        case ConeKind::PositiveSemidefinite:
            project_psd(x, block.psd_side, out);
            break;
        case ConeKind::Zero:
            out.setZero();
            break;
        case ConeKind::Free:
            out = x;
            break;
    }
}

void check_dim(const Vector& x, const ConeSpec& cone, const char* op) {
    if (static_cast<int>(x.size()) != cone.total_dim) {
        throw DimensionError(std::string(op) + ": point has length " +
                             std::to_string(x.size()) + " but the cone product has dimension " +
                             std::to_string(cone.total_dim));
    }
}

}  // namespace

const char* cone_kind_name(ConeKind kind) {
    switch (kind) {
        case ConeKind::NonnegativeOrthant: return "nonneg";
        case ConeKind::SecondOrder: return "soc";
        case ConeKind::RotatedSecondOrder: return "rsoc";
        case ConeKind::PositiveSemidefinite: return "psd";
        case ConeKind::Zero: return "zero";
        case ConeKind::Free: return "free";
    }
    return "?";
}

namespace {
ConeBlock make_block(ConeKind kind, int dim, int psd_side, int min_dim) {
    if (dim < min_dim) {
        throw ValueError(std::string(cone_kind_name(kind)) + " block: dimension " +
                         std::to_string(dim) + " below minimum " + std::to_string(min_dim));
    }
    return ConeBlock{kind, dim, psd_side};
}
}  // namespace

ConeBlock ConeBlock::nonneg(int k) { return make_block(ConeKind::NonnegativeOrthant, k, 0, 1); }
ConeBlock ConeBlock::soc(int dim) { return make_block(ConeKind::SecondOrder, dim, 0, 1); }
ConeBlock ConeBlock::rsoc(int dim) { return make_block(ConeKind::RotatedSecondOrder, dim, 0, 2); }
ConeBlock ConeBlock::zero(int k) { return make_block(ConeKind::Zero, k, 0, 1); }
ConeBlock ConeBlock::free(int k) { return make_block(ConeKind::Free, k, 0, 1); }

ConeBlock ConeBlock::psd(int side) {
    if (side < 1) {
        throw ValueError("psd block: side " + std::to_string(side) + " below minimum 1");
    }
    return ConeBlock{ConeKind::PositiveSemidefinite, triangular_dim(side), side};
}

ConeBlock ConeBlock::dual() const {
    if (kind == ConeKind::Zero) return ConeBlock{ConeKind::Free, dim, 0};
    if (kind == ConeKind::Free) return ConeBlock{ConeKind::Zero, dim, 0};
    return *this;
}

ConeSpec::ConeSpec(std::vector<ConeBlock> blocks_) : blocks(std::move(blocks_)) {
    for (const ConeBlock& block : blocks) total_dim += block.dim;
}

ConeSpec ConeSpec::single(ConeBlock block) { return ConeSpec({block}); }

ConeSpec ConeSpec::dual() const {
    std::vector<ConeBlock> dual_blocks;
    dual_blocks.reserve(blocks.size());
    for (const ConeBlock& block : blocks) dual_blocks.push_back(block.dual());
    return ConeSpec(std::move(dual_blocks));
}

Vector project_cone(const Vector& x, const ConeSpec& cone) {
    check_dim(x, cone, "project_cone");
    Vector out(x.size());
    int offset = 0;
    for (const ConeBlock& block : cone.blocks) {
        project_block(block, x.segment(offset, block.dim), out.segment(offset, block.dim));
        offset += block.dim;
    }
    return out;
}

Vector project_dual_cone(const Vector& x, const ConeSpec& cone) {
    check_dim(x, cone, "project_dual_cone");
    Vector out(x.size());
    int offset = 0;
    for (const ConeBlock& block : cone.blocks) {
        project_block(block.dual(), x.segment(offset, block.dim), out.segment(offset, block.dim));
        offset += block.dim;
    }
    return out;
}

Vector interior_point(const ConeSpec& cone, double scale) {
    if (!(scale > 0.0)) {
        throw ValueError("interior_point: scale must be positive, got " + std::to_string(scale));
    }
    Vector out = Vector::Zero(cone.total_dim);
    int offset = 0;
    for (const ConeBlock& block : cone.blocks) {
        auto seg = out.segment(offset, block.dim);
        switch (block.kind) {
            case ConeKind::NonnegativeOrthant:
                seg.setConstant(scale);
                break;
            case ConeKind::SecondOrder:
                seg[block.dim - 1] = scale;
                break;
            case ConeKind::RotatedSecondOrder:
                seg[block.dim - 2] = scale;
                seg[block.dim - 1] = scale;
                break;
            case ConeKind::PositiveSemidefinite: {
                // svec(scale * I): diagonal entries sit at triangular indices.
                int k = 0;
                for (int j = 0; j < block.psd_side; ++j) {
                    k += j;
                    seg[k + j] = scale;
                }
                break;
            }
            case ConeKind::Zero:
            case ConeKind::Free:
                break;  // relint contains the origin
        }
        offset += block.dim;
    }
    return out;
}

double distance_to_cone(const Vector& x, const ConeSpec& cone) {
    return (x - project_cone(x, cone)).norm();
}

}  // namespace conecert
