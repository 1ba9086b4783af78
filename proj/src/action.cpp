#include "siegel/action.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>
#include <limits>

namespace siegel {

const char* to_string(ActionStatus s) {
    switch (s) {
        case ActionStatus::InUpper: return "InUpper";
        case ActionStatus::InLower: return "InLower";
        case ActionStatus::SymmetricOnly: return "SymmetricOnly";
        default: return "SingularDenominator";
    }
}

ActionOutcome mobius_apply(const BlockSymplectic& s, const Matrix& z,
                           const Tolerance& tol) {
    require_square(z, "mobius_apply");
    tol.validate();
    if (z.rows() != s.n) {
        throw DimensionMismatch("mobius_apply: Z must be n x n for a 2n x 2n S");
    }
    const Index n = s.n;

    ActionOutcome out;
    out.e_matrix = s.a() * z + s.b();
    out.f_matrix = s.c() * z + s.d();

    Eigen::JacobiSVD<Matrix> svd(out.f_matrix, Eigen::ComputeFullV);
    const RealVector& sigma = svd.singularValues();
    const double sigma_max = sigma(0);
    const double sigma_min = sigma(sigma.size() - 1);
    out.cond_f = sigma_min > 0.0 ? sigma_max / sigma_min
                                 : std::numeric_limits<double>::infinity();

    if (sigma_min <= tol.psd_tol * std::max(1.0, sigma_max)) {
        out.status = ActionStatus::SingularDenominator;
        out.null_witness = svd.matrixV().col(sigma.size() - 1);
        return out;
    }

    // W F = E  <=>  F^t W^t = E^t; solve instead of inverting F.
    out.result = out.f_matrix.transpose()
                     .partialPivLu()
                     .solve(out.e_matrix.transpose())
                     .transpose();
    out.symmetry_defect = symmetry_defect(out.result);

    const Complex two_i(0, 2);
    Matrix im = (out.result - out.result.adjoint()) / two_i;
    out.im_ef = 0.5 * (im + im.adjoint()).eval();

    Eigen::SelfAdjointEigenSolver<Matrix> eig(out.im_ef);
    if (eig.info() != Eigen::Success) {
        throw NoConvergence("mobius_apply: eigensolver failed on Im(EF^-1)");
    }
    out.min_im_eig = eig.eigenvalues()(0);
    out.max_im_eig = eig.eigenvalues()(n - 1);

    // Both proofs give E^t F = F^t E for (anti)symplectic S, so the image is
    // symmetric up to solve roundoff scaled by cond(F).
    const double sym_gate = tol.sym_tol * std::max(1.0, max_abs(out.result)) +
                            tol.eq_tol * out.cond_f;
    const bool symmetric = out.symmetry_defect <= sym_gate;

    if (symmetric) {
        const Matrix w_sym = 0.5 * (out.result + out.result.transpose());
        Tolerance point_tol = tol;
        point_tol.sym_tol = 1e-3;  // already symmetrized
        if (out.min_im_eig > tol.psd_tol) {
            out.status = ActionStatus::InUpper;
            out.upper = make_siegel(w_sym, point_tol);
            return out;
        }
        if (out.max_im_eig < -tol.psd_tol) {
            out.status = ActionStatus::InLower;
            out.lower = make_lower_siegel(w_sym, point_tol);
            return out;
        }
    }
    out.status = ActionStatus::SymmetricOnly;
    return out;
}

ActionOutcome mobius_apply(const BlockSymplectic& s, const SiegelPoint& z,
                           const Tolerance& tol) {
    return mobius_apply(s, z.z, tol);
}

ComposeResult compose_check(const BlockSymplectic& s, const BlockSymplectic& r,
                            const SiegelPoint& z, const Tolerance& tol) {
    ComposeResult out;
    out.max_defect = std::numeric_limits<double>::quiet_NaN();

    const ActionOutcome first = mobius_apply(r, z, tol);
    if (first.status == ActionStatus::SingularDenominator) {
        out.broken_stage = 0;
        return out;
    }
    const ActionOutcome second = mobius_apply(s, first.result, tol);
    if (second.status == ActionStatus::SingularDenominator) {
        out.broken_stage = 1;
        return out;
    }
    const BlockSymplectic sr = BlockSymplectic::from_matrix(s.s * r.s);
    const ActionOutcome direct = mobius_apply(sr, z, tol);
    if (direct.status == ActionStatus::SingularDenominator) {
        out.broken_stage = 2;
        return out;
    }
    out.lhs = second.result;
    out.rhs = direct.result;
    out.max_defect = max_abs(out.lhs - out.rhs);
    return out;
}

}  // namespace siegel
