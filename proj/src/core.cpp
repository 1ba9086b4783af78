#include "siegel/core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>

namespace siegel {

void Tolerance::validate() const {
    if (!(sym_tol > 0.0 && sym_tol <= 1e-3) ||
        !(psd_tol > 0.0 && psd_tol <= 1e-3) ||
        !(eq_tol > 0.0 && eq_tol <= 1e-3)) {
        throw Error("tolerances must be strictly positive and <= 1e-3");
    }
}

bool all_finite(const Matrix& m) {
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = 0; i < m.rows(); ++i) {
            const Complex& e = m(i, j);
            if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
        }
    }
    return true;
}

void require_finite(const Matrix& m, const char* what) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw Error(std::string(what) + ": matrix must be non-empty");
    }
    if (!all_finite(m)) {
        throw NotFinite(std::string(what) + ": non-finite entry");
    }
}

void require_square(const Matrix& m, const char* what) {
    require_finite(m, what);
    if (m.rows() != m.cols()) {
        throw DimensionMismatch(std::string(what) + ": matrix must be square");
    }
}

HermitianEigen hermitian_eigen(const Matrix& m, const Tolerance& tol) {
    require_square(m, "hermitian_eigen");
    tol.validate();
    const double defect = hermitian_defect(m);
    if (defect > tol.sym_tol) throw NotHermitian(defect);

    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw NoConvergence("hermitian_eigen: solver failed");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix spd_sqrt(const Matrix& p, const Tolerance& tol) {
    HermitianEigen eig = hermitian_eigen(p, tol);
    const double min_eig = eig.values(0);
    if (min_eig <= tol.psd_tol) throw NotPositiveDefinite(min_eig);
    return eig.vectors * eig.values.cwiseSqrt().asDiagonal() *
           eig.vectors.adjoint();
}

Matrix spd_inv_sqrt(const Matrix& p, const Tolerance& tol) {
    HermitianEigen eig = hermitian_eigen(p, tol);
    const double min_eig = eig.values(0);
    if (min_eig <= tol.psd_tol) throw NotPositiveDefinite(min_eig);
    return eig.vectors * eig.values.cwiseSqrt().cwiseInverse().asDiagonal() *
           eig.vectors.adjoint();
}

Matrix pseudo_inverse(const Matrix& m, const Tolerance& tol) {
    require_finite(m, "pseudo_inverse");
    tol.validate();
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector& sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma(0) == 0.0) {
        return Matrix::Zero(m.cols(), m.rows());
    }
    const double cut = tol.psd_tol * sigma(0);
    RealVector inv = RealVector::Zero(sigma.size());
    for (Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cut) inv(i) = 1.0 / sigma(i);
    }
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

double operator_norm(const Matrix& m) {
    require_finite(m, "operator_norm");
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

PsdVerdict is_psd(const Matrix& m, const Tolerance& tol) {
    HermitianEigen eig = hermitian_eigen(m, tol);
    PsdVerdict verdict;
    verdict.min_eigenvalue = eig.values(0);
    const double scale = std::max({1.0, std::abs(eig.values(0)),
                                   std::abs(eig.values(eig.values.size() - 1))});
    verdict.psd = verdict.min_eigenvalue >= -tol.psd_tol * scale;
    if (!verdict.psd) verdict.witness = eig.vectors.col(0);
    return verdict;
}

}  // namespace siegel
