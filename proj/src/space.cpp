#include "siegel/space.hpp"

namespace siegel {

namespace {

// Shared validation for both spaces.  sign = +1 demands Y > 0, sign = -1
// demands Y < 0; returns min eigenvalue of sign*Y.
double validate_point(const Matrix& z, const Tolerance& tol, double sign,
                      RealMatrix& x_out, RealMatrix& y_out) {
    require_square(z, "siegel point");
    tol.validate();
    const double defect = symmetry_defect(z);
    if (defect > tol.sym_tol) throw NotSymmetric(defect);

    RealMatrix x = z.real();
    RealMatrix y = z.imag();
    // Z is symmetric within sym_tol; symmetrize so downstream spectral
    // calls see exactly symmetric parts.
    x = 0.5 * (x + x.transpose()).eval();
    y = 0.5 * (y + y.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(sign * y);
    if (solver.info() != Eigen::Success) {
        throw NoConvergence("siegel point: eigensolver failed on Im(Z)");
    }
    const double min_eig = solver.eigenvalues()(0);
    if (min_eig <= tol.psd_tol) {
        throw ImaginaryPartNotPD(sign * min_eig);
    }
    x_out = std::move(x);
    y_out = std::move(y);
    return min_eig;
}

}  // namespace

SiegelPoint make_siegel(const Matrix& z, const Tolerance& tol) {
    SiegelPoint p;
    p.min_eig_y = validate_point(z, tol, +1.0, p.x, p.y);
    p.n = z.rows();
    p.z = p.x.cast<Complex>() + Complex(0, 1) * p.y.cast<Complex>();
    return p;
}

LowerSiegelPoint make_lower_siegel(const Matrix& z, const Tolerance& tol) {
    LowerSiegelPoint p;
    p.min_eig_neg_y = validate_point(z, tol, -1.0, p.x, p.y);
    p.n = z.rows();
    p.z = p.x.cast<Complex>() + Complex(0, 1) * p.y.cast<Complex>();
    return p;
}

SiegelPoint center_point(Index n, const Tolerance& tol) {
    return make_siegel(Complex(0, 1) * Matrix::Identity(n, n), tol);
}

SiegelPoint conjugate_point(const LowerSiegelPoint& z) {
    SiegelPoint p;
    p.n = z.n;
    p.x = z.x;
    p.y = -z.y;
    p.z = z.z.conjugate();
    p.min_eig_y = z.min_eig_neg_y;
    return p;
}

LowerSiegelPoint conjugate_point(const SiegelPoint& z) {
    LowerSiegelPoint p;
    p.n = z.n;
    p.x = z.x;
    p.y = -z.y;
    p.z = z.z.conjugate();
    p.min_eig_neg_y = z.min_eig_y;
    return p;
}

RealMatrix random_symmetric(Index n, std::mt19937_64& rng, double scale) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    RealMatrix m(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            m(i, j) = dist(rng);
            m(j, i) = m(i, j);
        }
    }
    return m;
}

RealMatrix random_spd(Index n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    RealMatrix g(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) g(i, j) = dist(rng);
    // G G^t + c I keeps eigenvalues in roughly [0.2, n+0.2].
    return g * g.transpose() + 0.2 * RealMatrix::Identity(n, n);
}

SiegelPoint random_siegel_point(Index n, std::mt19937_64& rng,
                                const Tolerance& tol) {
    RealMatrix x = random_symmetric(n, rng);
    RealMatrix y = random_spd(n, rng);
    return make_siegel(x.cast<Complex>() + Complex(0, 1) * y.cast<Complex>(),
                       tol);
}

LowerSiegelPoint random_lower_siegel_point(Index n, std::mt19937_64& rng,
                                           const Tolerance& tol) {
    RealMatrix x = random_symmetric(n, rng);
    RealMatrix y = random_spd(n, rng);
    return make_lower_siegel(
        x.cast<Complex>() - Complex(0, 1) * y.cast<Complex>(), tol);
}

}  // namespace siegel
