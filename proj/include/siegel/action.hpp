#pragma once

// The Mobius-style action Phi_S(Z) = (AZ + B)(CZ + D)^-1 with full
// well-definedness diagnostics, plus the composition law check.

#include "siegel/core.hpp"
#include "siegel/space.hpp"
#include "siegel/symplectic.hpp"

#include <optional>

namespace siegel {

enum class ActionStatus { InUpper, InLower, SymmetricOnly, SingularDenominator };

const char* to_string(ActionStatus s);

struct ActionOutcome {
    ActionStatus status = ActionStatus::SymmetricOnly;
    Matrix e_matrix;         // AZ + B
    Matrix f_matrix;         // CZ + D
    Matrix result;           // E F^-1, empty when the denominator is singular
    Matrix im_ef;            // Hermitian part of Im(E F^-1)
    double cond_f = 0.0;
    double symmetry_defect = 0.0;
    double min_im_eig = 0.0;
    double max_im_eig = 0.0;
    Vector null_witness;     // near-null vector of F in the singular case
    std::optional<SiegelPoint> upper;
    std::optional<LowerSiegelPoint> lower;
};

// Computes E, F, solves E F^-1 through the transposed system (never by
// explicit inversion) and classifies the image.  A near-singular
// denominator (sigma_min <= psd_tol * ||F||) is an outcome, not an
// exception.
ActionOutcome mobius_apply(const BlockSymplectic& s, const SiegelPoint& z,
                           const Tolerance& tol = {});

// Same action started from a lower-space point (needed by the isometry
// machinery; the algebra is identical).
ActionOutcome mobius_apply(const BlockSymplectic& s, const Matrix& z,
                           const Tolerance& tol = {});

struct ComposeResult {
    Matrix lhs;              // Phi_S(Phi_R(Z))
    Matrix rhs;              // Phi_SR(Z)
    double max_defect = 0.0;
    int broken_stage = -1;   // 0: Phi_R, 1: Phi_S after it, 2: Phi_SR
};

// Two-path evaluation of Phi_S . Phi_R = Phi_SR at Z.  If any stage hits
// a singular denominator, broken_stage reports which and the defect is NaN.
ComposeResult compose_check(const BlockSymplectic& s, const BlockSymplectic& r,
                            const SiegelPoint& z, const Tolerance& tol = {});

}  // namespace siegel
