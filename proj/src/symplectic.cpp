#include "siegel/symplectic.hpp"

#include "siegel/action.hpp"

#include <algorithm>
#include <cmath>

namespace siegel {

BlockSymplectic BlockSymplectic::from_matrix(Matrix m) {
    require_square(m, "BlockSymplectic");
    if (m.rows() % 2 != 0) {
        throw DimensionMismatch("BlockSymplectic: matrix must be 2n x 2n");
    }
    BlockSymplectic s;
    s.n = m.rows() / 2;
    s.s = std::move(m);
    return s;
}

BlockSymplectic BlockSymplectic::from_blocks(const Matrix& a, const Matrix& b,
                                             const Matrix& c, const Matrix& d) {
    const Index n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n || c.rows() != n ||
        c.cols() != n || d.rows() != n || d.cols() != n) {
        throw DimensionMismatch("BlockSymplectic: blocks must all be n x n");
    }
    Matrix m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = a;
    m.topRightCorner(n, n) = b;
    m.bottomLeftCorner(n, n) = c;
    m.bottomRightCorner(n, n) = d;
    return from_matrix(std::move(m));
}

Matrix standard_j(Index n) {
    if (n < 1) throw DimensionMismatch("standard_j: n must be >= 1");
    Matrix j = Matrix::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = Matrix::Identity(n, n);
    j.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
    return j;
}

BlockSymplectic lower_reflector(Index n) {
    Matrix m = Matrix::Identity(2 * n, 2 * n);
    m.topLeftCorner(n, n) = -Matrix::Identity(n, n);
    return BlockSymplectic::from_matrix(std::move(m));
}

namespace {

double scale_of(const BlockSymplectic& s) {
    return std::max(1.0, max_abs(s.s));
}

}  // namespace

bool is_symplectic(const BlockSymplectic& s, const Tolerance& tol) {
    const Matrix j = standard_j(s.n);
    return max_abs(s.s.transpose() * j * s.s - j) <= tol.eq_tol * scale_of(s);
}

bool is_symplectic_blockwise(const BlockSymplectic& s, const Tolerance& tol) {
    const double gate = tol.eq_tol * scale_of(s);
    const Matrix atc = s.a().transpose() * s.c();
    const Matrix btd = s.b().transpose() * s.d();
    const Matrix atd_ctb = s.a().transpose() * s.d() - s.c().transpose() * s.b();
    return symmetry_defect(atc) <= gate && symmetry_defect(btd) <= gate &&
           max_abs(atd_ctb - Matrix::Identity(s.n, s.n)) <= gate;
}

bool is_antisymplectic(const BlockSymplectic& s, const Tolerance& tol) {
    const Matrix j = standard_j(s.n);
    return max_abs(s.s.transpose() * j * s.s + j) <= tol.eq_tol * scale_of(s);
}

bool is_real(const BlockSymplectic& s, const Tolerance& tol) {
    return s.s.imag().cwiseAbs().maxCoeff() <= tol.sym_tol * scale_of(s);
}

bool is_purely_imaginary(const BlockSymplectic& s, const Tolerance& tol) {
    return s.s.real().cwiseAbs().maxCoeff() <= tol.sym_tol * scale_of(s);
}

Matrix classifier_matrix(const BlockSymplectic& s) {
    const Matrix j = standard_j(s.n);
    Matrix m = Complex(0, 1) * (s.s.adjoint() * j * s.s - j);
    // Self-adjoint in exact arithmetic; strip floating noise.
    return 0.5 * (m + m.adjoint()).eval();
}

const char* to_string(ActionVerdict v) {
    switch (v) {
        case ActionVerdict::PreservesSiegel: return "PreservesSiegel";
        case ActionVerdict::MapsToLower: return "MapsToLower";
        default: return "Undetermined";
    }
}

ActionClassification classify_action(const BlockSymplectic& s,
                                     const Tolerance& tol) {
    ActionClassification c;
    c.is_real = is_real(s, tol);
    c.is_purely_imaginary = is_purely_imaginary(s, tol);
    c.is_symplectic = is_symplectic(s, tol);
    c.is_antisymplectic = is_antisymplectic(s, tol);
    c.m_matrix = classifier_matrix(s);
    PsdVerdict psd = is_psd(c.m_matrix, tol);
    c.min_eigenvalue = psd.min_eigenvalue;

    if (c.is_symplectic && psd.psd) {
        c.verdict = ActionVerdict::PreservesSiegel;
    } else if ((c.is_antisymplectic && c.is_real) ||
               (c.is_symplectic && c.is_purely_imaginary)) {
        c.verdict = ActionVerdict::MapsToLower;
    } else {
        c.verdict = ActionVerdict::Undetermined;
    }
    return c;
}

SelfAdjointBlocks SelfAdjointBlocks::split(const Matrix& m,
                                           const Tolerance& tol) {
    require_square(m, "SelfAdjointBlocks");
    if (m.rows() % 2 != 0) {
        throw DimensionMismatch("SelfAdjointBlocks: matrix must be 2n x 2n");
    }
    const double defect = hermitian_defect(m);
    if (defect > tol.sym_tol * std::max(1.0, max_abs(m))) {
        throw NotHermitian(defect);
    }
    const Index n = m.rows() / 2;
    SelfAdjointBlocks b;
    b.alpha = m.topLeftCorner(n, n);
    b.beta = m.topRightCorner(n, n);
    b.gamma = m.bottomRightCorner(n, n);
    return b;
}

Matrix SelfAdjointBlocks::assemble() const {
    const Index n = alpha.rows();
    Matrix m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = alpha;
    m.topRightCorner(n, n) = beta;
    m.bottomLeftCorner(n, n) = beta.adjoint();
    m.bottomRightCorner(n, n) = gamma;
    return m;
}

namespace {

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

bool psd_relaxed(const Matrix& m, const Tolerance& tol) {
    Tolerance t = tol;
    t.sym_tol = 1e-6;  // inputs here carry pseudo-inverse roundoff
    return is_psd(hermitize(m), t).psd;
}

}  // namespace

BlockPsdResult block_psd_criterion(const SelfAdjointBlocks& m,
                                   const Tolerance& tol) {
    const Index n = m.alpha.rows();
    if (hermitian_defect(m.alpha) > tol.sym_tol * std::max(1.0, max_abs(m.alpha)) ||
        hermitian_defect(m.gamma) > tol.sym_tol * std::max(1.0, max_abs(m.gamma))) {
        throw NotHermitian(std::max(hermitian_defect(m.alpha),
                                    hermitian_defect(m.gamma)));
    }
    const Matrix id = Matrix::Identity(n, n);
    const double beta_scale = std::max(1.0, max_abs(m.beta));

    BlockPsdResult r;
    {
        const Matrix adag = pseudo_inverse(m.alpha, tol);
        const bool range_ok =
            max_abs((id - m.alpha * adag) * m.beta) <= 1e3 * tol.eq_tol * beta_scale;
        r.via_condition2 = is_psd(m.alpha, tol).psd && range_ok &&
                           psd_relaxed(m.gamma - m.beta.adjoint() * adag * m.beta, tol);
    }
    {
        const Matrix gdag = pseudo_inverse(m.gamma, tol);
        const bool range_ok =
            max_abs((id - m.gamma * gdag) * m.beta.adjoint()) <=
            1e3 * tol.eq_tol * beta_scale;
        r.via_condition3 = is_psd(m.gamma, tol).psd && range_ok &&
                           psd_relaxed(m.alpha - m.beta * gdag * m.beta.adjoint(), tol);
    }
    r.verdict = r.via_condition2;
    return r;
}

BlockConditions classifier_block_conditions(const BlockSymplectic& s,
                                            const Tolerance& tol) {
    const Index n = s.n;
    const Matrix a = s.a(), b = s.b(), c = s.c(), d = s.d();
    const Matrix id = Matrix::Identity(n, n);
    const Complex i(0, 1);

    const Matrix p = a.adjoint() * c - c.adjoint() * a;
    const Matrix beta_raw = a.adjoint() * d - c.adjoint() * b - id;

    BlockConditions out;
    out.cond1 = is_psd(hermitize(i * p), tol).psd;

    // Condition (2) as displayed uses I + P P^+ (not the projector I - P P^+).
    const Matrix pdag = pseudo_inverse(p, tol);
    out.cond2 = max_abs((id + p * pdag) * beta_raw) <=
                1e3 * tol.eq_tol * std::max(1.0, max_abs(beta_raw));

    const Matrix cond3_mat = i * (b.adjoint() * d - d.adjoint() * b) +
                             i * (b.adjoint() * c - d.adjoint() * a + id) * pdag *
                                 beta_raw;
    // The displayed expression need not come out Hermitian for arbitrary
    // input; a non-Hermitian value cannot be >= 0.
    if (hermitian_defect(cond3_mat) >
        1e-6 * std::max(1.0, max_abs(cond3_mat))) {
        out.cond3 = false;
    } else {
        out.cond3 = is_psd(hermitize(cond3_mat), tol).psd;
    }
    return out;
}

namespace {

// Real principal sqrt / inverse sqrt of an SPD real matrix.
std::pair<RealMatrix, RealMatrix> real_spd_sqrt_pair(const RealMatrix& y,
                                                     const Tolerance& tol) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(y);
    if (solver.info() != Eigen::Success) {
        throw NoConvergence("spd sqrt: eigensolver failed");
    }
    const RealVector& lam = solver.eigenvalues();
    if (lam(0) <= tol.psd_tol) throw NotPositiveDefinite(lam(0));
    const RealMatrix& v = solver.eigenvectors();
    RealMatrix root = v * lam.cwiseSqrt().asDiagonal() * v.transpose();
    RealMatrix inv_root =
        v * lam.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose();
    return {root, inv_root};
}

BlockSymplectic witness_from_parts(const RealMatrix& x, const RealMatrix& y,
                                   double a_sign, const Tolerance& tol) {
    auto [root, inv_root] = real_spd_sqrt_pair(y, tol);
    const Index n = x.rows();
    RealMatrix s = RealMatrix::Zero(2 * n, 2 * n);
    s.topLeftCorner(n, n) = a_sign * root;
    s.topRightCorner(n, n) = x * inv_root;
    s.bottomRightCorner(n, n) = inv_root;
    return BlockSymplectic::from_matrix(s.cast<Complex>());
}

}  // namespace

BlockSymplectic upper_witness(const SiegelPoint& z, const Tolerance& tol) {
    return witness_from_parts(z.x, z.y, +1.0, tol);
}

BlockSymplectic lower_witness(const LowerSiegelPoint& z, const Tolerance& tol) {
    return witness_from_parts(z.x, (-z.y).eval(), -1.0, tol);
}

bool is_in_stabilizer_k(const BlockSymplectic& u, const Tolerance& tol) {
    if (!is_real(u, tol) || !is_symplectic(u, tol)) {
        throw NotRealSymplectic("is_in_stabilizer_k: input must be real symplectic");
    }
    const Index n = u.n;
    const ActionOutcome out = mobius_apply(u, center_point(n, tol), tol);
    if (out.status == ActionStatus::SingularDenominator) return false;
    const Matrix target = Complex(0, 1) * Matrix::Identity(n, n);
    const bool fixes = max_abs(out.result - target) <= 10 * tol.eq_tol;
    if (!fixes) return false;

    // Consequences of the fixed point per the characterization of K.
    if (max_abs(u.s.transpose() * u.s - Matrix::Identity(2 * n, 2 * n)) >
        100 * tol.eq_tol * scale_of(u)) {
        throw Error("stabilizer member failed orthogonality check");
    }
    if (max_abs(u.a() - u.d()) > 100 * tol.eq_tol * scale_of(u) ||
        max_abs(u.b() + u.c()) > 100 * tol.eq_tol * scale_of(u)) {
        throw Error("stabilizer member failed block-shape check");
    }
    return true;
}

BlockSymplectic canonical_sign(const BlockSymplectic& s) {
    const double gate = 1e-12 * scale_of(s);
    for (Index i = 0; i < s.s.rows(); ++i) {
        for (Index j = 0; j < s.s.cols(); ++j) {
            const Complex e = s.s(i, j);
            if (std::abs(e) <= gate) continue;
            const double lead = std::abs(e.real()) > gate ? e.real() : e.imag();
            if (lead < 0) {
                BlockSymplectic flipped = s;
                flipped.s = -s.s;
                return flipped;
            }
            return s;
        }
    }
    return s;
}

BlockSymplectic siegel_translation(const SiegelPoint& w) {
    const Index n = w.n;
    Matrix s = Matrix::Identity(2 * n, 2 * n);
    s.topRightCorner(n, n) = w.z;
    return BlockSymplectic::from_matrix(std::move(s));
}

namespace {

enum class Generator { Translation, Diagonal, J };

// Product of symplectic generators; scales kept gentle so words of
// length <= 8 stay well conditioned.
Matrix symplectic_word(Index n, std::mt19937_64& rng, bool complex_entries) {
    std::uniform_int_distribution<int> len_dist(3, 8);
    std::uniform_int_distribution<int> kind_dist(0, 2);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);

    Matrix s = Matrix::Identity(2 * n, 2 * n);
    const int len = len_dist(rng);
    for (int k = 0; k < len; ++k) {
        Matrix g = Matrix::Identity(2 * n, 2 * n);
        switch (static_cast<Generator>(kind_dist(rng))) {
            case Generator::Translation: {
                Matrix b(n, n);
                for (Index i = 0; i < n; ++i) {
                    for (Index j = i; j < n; ++j) {
                        Complex e(0.6 * entry(rng),
                                  complex_entries ? 0.6 * entry(rng) : 0.0);
                        b(i, j) = e;
                        b(j, i) = e;
                    }
                }
                g.topRightCorner(n, n) = b;
                break;
            }
            case Generator::Diagonal: {
                Matrix m(n, n);
                for (Index i = 0; i < n; ++i) {
                    for (Index j = 0; j < n; ++j) {
                        m(i, j) = Complex(0.35 * entry(rng),
                                          complex_entries ? 0.35 * entry(rng) : 0.0);
                    }
                }
                Matrix ginv = Matrix::Identity(n, n) + m;
                g.topLeftCorner(n, n) = ginv;
                g.bottomRightCorner(n, n) = ginv.transpose().inverse();
                break;
            }
            case Generator::J:
                g = standard_j(n);
                break;
        }
        s = s * g;
    }
    return s;
}

}  // namespace

BlockSymplectic random_real_symplectic(Index n, std::mt19937_64& rng) {
    return BlockSymplectic::from_matrix(symplectic_word(n, rng, false));
}

BlockSymplectic random_orthogonal_symplectic(Index n, std::mt19937_64& rng) {
    // U(n) embeds into K via A + iB unitary -> [[A, B], [-B, A]].
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    RealMatrix a = q.real(), b = q.imag();
    Matrix u(2 * n, 2 * n);
    u.topLeftCorner(n, n) = a.cast<Complex>();
    u.topRightCorner(n, n) = b.cast<Complex>();
    u.bottomLeftCorner(n, n) = -b.cast<Complex>();
    u.bottomRightCorner(n, n) = a.cast<Complex>();
    return BlockSymplectic::from_matrix(std::move(u));
}

BlockSymplectic random_real_antisymplectic(Index n, std::mt19937_64& rng) {
    BlockSymplectic r = random_real_symplectic(n, rng);
    BlockSymplectic refl = lower_reflector(n);
    return BlockSymplectic::from_matrix(r.s * refl.s);
}

BlockSymplectic random_purely_imaginary_symplectic(Index n,
                                                   std::mt19937_64& rng) {
    BlockSymplectic q = random_real_antisymplectic(n, rng);
    return BlockSymplectic::from_matrix(Complex(0, 1) * q.s);
}

BlockSymplectic random_psd_classifier_symplectic(Index n,
                                                 std::mt19937_64& rng) {
    // Word in factors whose classifier is PSD: real symplectic (M = 0)
    // and translations T_W with Im(W) >= 0 (M = diag(0, 2 Im W)).
    // M composes by congruence plus a PSD term, so the product stays PSD.
    std::uniform_int_distribution<int> len_dist(1, 3);
    const int len = len_dist(rng);
    Matrix s = random_real_symplectic(n, rng).s;
    for (int k = 0; k < len; ++k) {
        RealMatrix x = random_symmetric(n, rng, 0.5);
        RealMatrix y = 0.5 * random_spd(n, rng);
        Matrix t = Matrix::Identity(2 * n, 2 * n);
        t.topRightCorner(n, n) =
            x.cast<Complex>() + Complex(0, 1) * y.cast<Complex>();
        s = s * t;
        s = s * random_real_symplectic(n, rng).s;
    }
    return BlockSymplectic::from_matrix(std::move(s));
}

BlockSymplectic random_complex_symplectic(Index n, std::mt19937_64& rng) {
    return BlockSymplectic::from_matrix(symplectic_word(n, rng, true));
}

}  // namespace siegel
