#pragma once

// The 2n x 2n block world: the standard form J, (anti)symplectic
// predicates, the classifier M = i(S*JS - J), the block positivity
// criterion, the named witness constructions S_Z and S_Z-, the stabilizer
// of iI, and seeded samplers for the property suites.

#include "siegel/core.hpp"
#include "siegel/space.hpp"

#include <random>

namespace siegel {

// A 2n x 2n complex matrix with named n x n quadrants
// s = [[a, b], [c, d]].  No symplectic property is assumed at
// construction; the predicates below are explicit.
struct BlockSymplectic {
    Index n = 0;
    Matrix s;

    static BlockSymplectic from_matrix(Matrix m);
    static BlockSymplectic from_blocks(const Matrix& a, const Matrix& b,
                                       const Matrix& c, const Matrix& d);

    Matrix a() const { return s.topLeftCorner(n, n); }
    Matrix b() const { return s.topRightCorner(n, n); }
    Matrix c() const { return s.bottomLeftCorner(n, n); }
    Matrix d() const { return s.bottomRightCorner(n, n); }
};

// J = [[O, I], [-I, O]]; exact integer entries.
Matrix standard_j(Index n);

// I_- = [[-I, O], [O, I]], the reflection conjugating the two spaces.
BlockSymplectic lower_reflector(Index n);

// ||S^t J S - J||_max <= eq_tol.
bool is_symplectic(const BlockSymplectic& s, const Tolerance& tol = {});

// The blockwise equivalent: A^t C and B^t D symmetric, A^t D - C^t B = I.
bool is_symplectic_blockwise(const BlockSymplectic& s, const Tolerance& tol = {});

// ||S^t J S + J||_max <= eq_tol.
bool is_antisymplectic(const BlockSymplectic& s, const Tolerance& tol = {});

// Structural gates, scale-relative: max |Im entry| (resp. Re) below
// sym_tol * max(1, ||S||_max).
bool is_real(const BlockSymplectic& s, const Tolerance& tol = {});
bool is_purely_imaginary(const BlockSymplectic& s, const Tolerance& tol = {});

// M = i(S*JS - J), self-adjoint by construction.
Matrix classifier_matrix(const BlockSymplectic& s);

enum class ActionVerdict { PreservesSiegel, MapsToLower, Undetermined };

const char* to_string(ActionVerdict v);

struct ActionClassification {
    ActionVerdict verdict = ActionVerdict::Undetermined;
    Matrix m_matrix;
    double min_eigenvalue = 0.0;
    bool is_real = false;
    bool is_purely_imaginary = false;
    bool is_symplectic = false;
    bool is_antisymplectic = false;
};

// PreservesSiegel only under the sufficient condition (symplectic and
// M >= 0); MapsToLower only for real antisymplectic or purely imaginary
// symplectic input; everything else is Undetermined.  The converse of the
// sufficient condition is open, so the verdict never overclaims.
ActionClassification classify_action(const BlockSymplectic& s,
                                     const Tolerance& tol = {});

// Self-adjoint 2n x 2n matrix in blocks M = [[alpha, beta], [beta*, gamma]].
struct SelfAdjointBlocks {
    Matrix alpha, beta, gamma;

    static SelfAdjointBlocks split(const Matrix& m, const Tolerance& tol = {});
    Matrix assemble() const;
};

struct BlockPsdResult {
    bool verdict = false;
    bool via_condition2 = false;  // alpha >= 0, (I - alpha alpha^+) beta = O,
                                  // gamma - beta* alpha^+ beta >= 0
    bool via_condition3 = false;  // the mirrored test through gamma
};

// Pseudo-inverse characterization of M >= 0; condition (2) decides the
// verdict, condition (3) is evaluated as a cross-check and must agree.
BlockPsdResult block_psd_criterion(const SelfAdjointBlocks& m,
                                   const Tolerance& tol = {});

struct BlockConditions {
    bool cond1 = false;
    bool cond2 = false;
    bool cond3 = false;
};

// The three displayed conditions on A, B, C, D, evaluated literally as
// written.  Whether they are equivalent to M >= 0 is unknown; this only
// reports, it asserts nothing.
BlockConditions classifier_block_conditions(const BlockSymplectic& s,
                                            const Tolerance& tol = {});

// S_Z = [[sqrt(Y), X sqrt(Y^-1)], [O, sqrt(Y^-1)]]: real symplectic,
// sends iI to Z.
BlockSymplectic upper_witness(const SiegelPoint& z, const Tolerance& tol = {});

// S_Z- = [[-sqrt(-Y), X sqrt(-Y^-1)], [O, sqrt(-Y^-1)]] for Y < 0:
// real antisymplectic, sends iI to z.
BlockSymplectic lower_witness(const LowerSiegelPoint& z,
                              const Tolerance& tol = {});

// Membership in K = {U real symplectic : Phi_U(iI) = iI}, decided by the
// fixed point; orthogonality and the [[A, B], [-B, A]] shape are then
// asserted as consequences.  Throws NotRealSymplectic on bad input.
bool is_in_stabilizer_k(const BlockSymplectic& u, const Tolerance& tol = {});

// Representative of the coset {S, -S}: flips the sign so the first
// nonzero entry in reading order has non-negative real part.
BlockSymplectic canonical_sign(const BlockSymplectic& s);

// T_W = [[I, W], [O, I]]; symplectic for any symmetric W, acts by Z -> Z + W.
BlockSymplectic siegel_translation(const SiegelPoint& w);

// Samplers.  All are deterministic functions of the generator state and
// exact-by-construction members of their advertised class.
BlockSymplectic random_real_symplectic(Index n, std::mt19937_64& rng);
BlockSymplectic random_orthogonal_symplectic(Index n, std::mt19937_64& rng);
BlockSymplectic random_real_antisymplectic(Index n, std::mt19937_64& rng);
BlockSymplectic random_purely_imaginary_symplectic(Index n,
                                                   std::mt19937_64& rng);
// Complex symplectic with classifier M >= 0: a word in real symplectic
// generators and translations T_W with Im(W) >= 0.
BlockSymplectic random_psd_classifier_symplectic(Index n,
                                                 std::mt19937_64& rng);
// Unconstrained complex symplectic word; for the converse probe.
BlockSymplectic random_complex_symplectic(Index n, std::mt19937_64& rng);

}  // namespace siegel
