#pragma once

// Dense complex matrix primitives shared by every other header:
// Hermitian eigensolves, SPD square roots, pseudo-inverse, operator norm,
// and tolerance-aware positivity tests.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace siegel {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
    explicit NotHermitian(double defect)
        : Error("matrix is not Hermitian, max defect " + std::to_string(defect)),
          max_defect(defect) {}
    double max_defect;
};

struct NotSymmetric : Error {
    explicit NotSymmetric(double defect)
        : Error("matrix is not symmetric, max defect " + std::to_string(defect)),
          max_defect(defect) {}
    double max_defect;
};

struct NotPositiveDefinite : Error {
    explicit NotPositiveDefinite(double min_eig)
        : Error("matrix is not positive definite, min eigenvalue " +
                std::to_string(min_eig)),
          min_eigenvalue(min_eig) {}
    double min_eigenvalue;
};

struct ImaginaryPartNotPD : Error {
    explicit ImaginaryPartNotPD(double min_eig)
        : Error("imaginary part is not positive definite, min eigenvalue " +
                std::to_string(min_eig)),
          min_eigenvalue(min_eig) {}
    double min_eigenvalue;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotRealSymplectic : Error {
    using Error::Error;
};

struct WrongShape : Error {
    using Error::Error;
};

struct ZeroVector : Error {
    using Error::Error;
};

struct NotFinite : Error {
    using Error::Error;
};

// Absolute tolerances for symmetry checks, semidefiniteness decisions and
// matrix-equality assertions.  The math upstream is exact; doubles need slack.
struct Tolerance {
    double sym_tol = 1e-9;
    double psd_tol = 1e-9;
    double eq_tol = 1e-9;

    void validate() const;
};

inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double hermitian_defect(const Matrix& m) {
    return max_abs(m - m.adjoint());
}

inline double symmetry_defect(const Matrix& m) {
    return max_abs(m - m.transpose());
}

bool all_finite(const Matrix& m);
void require_finite(const Matrix& m, const char* what);
void require_square(const Matrix& m, const char* what);

struct HermitianEigen {
    RealVector values;   // ascending
    Matrix vectors;      // unitary, columns are eigenvectors
};

// Eigendecomposition restricted to (numerically) Hermitian input.
// Throws NotHermitian when the defect exceeds sym_tol.
HermitianEigen hermitian_eigen(const Matrix& m, const Tolerance& tol = {});

// Principal square root of a Hermitian positive definite matrix.
Matrix spd_sqrt(const Matrix& p, const Tolerance& tol = {});

// Inverse of the principal square root; same preconditions as spd_sqrt.
Matrix spd_inv_sqrt(const Matrix& p, const Tolerance& tol = {});

// Moore-Penrose pseudo-inverse via SVD.  Singular values below
// psd_tol * sigma_max are treated as zero; rank decisions never throw.
Matrix pseudo_inverse(const Matrix& m, const Tolerance& tol = {});

// Largest singular value.
double operator_norm(const Matrix& m);

struct PsdVerdict {
    bool psd = false;
    double min_eigenvalue = 0.0;
    Vector witness;  // eigenvector of the most negative eigenvalue when !psd

    explicit operator bool() const { return psd; }
};

// Positive semidefiniteness of a Hermitian matrix, decided as
// min eigenvalue >= -psd_tol * max(1, scale) so closed conditions do not
// flap at the boundary.
PsdVerdict is_psd(const Matrix& m, const Tolerance& tol = {});

}  // namespace siegel
