#pragma once

// Finsler norm and the induced metric on the Siegel space, the mirrored
// metric on the lower space, the quotient metric on SP_2n(R)/K, the
// closed-form distance, and executable checkers for the isometry,
// contraction and compression statements.

#include "siegel/action.hpp"
#include "siegel/core.hpp"
#include "siegel/space.hpp"
#include "siegel/symplectic.hpp"

#include <optional>
#include <vector>

namespace siegel {

struct TangentVector {
    SiegelPoint at;
    Matrix w;  // complex symmetric
};

TangentVector make_tangent(const SiegelPoint& at, const Matrix& w,
                           const Tolerance& tol = {});

// F_Z(W) = || Y^-1/2 W Y^-1/2 || in operator norm.
double finsler_norm(const TangentVector& t, const Tolerance& tol = {});

enum class DistanceMethod { ClosedForm, PathUpperBound };

struct DistanceReport {
    double value = 0.0;
    DistanceMethod method = DistanceMethod::ClosedForm;
    BlockSymplectic s1_norm_arg;  // witness S_{Z1}
    BlockSymplectic s2_norm_arg;  // witness S_{Z2}
    double operator_norm_used = 1.0;
};

// d_inf(Z1, Z2) = 2 ln || S_{Z1}^-1 S_{Z2} ||, solved via LU, never by
// explicit inversion.  The norm is clamped to >= 1 before the log.
DistanceReport siegel_distance(const SiegelPoint& z1, const SiegelPoint& z2,
                               const Tolerance& tol = {});

// d_-(Z1, Z2) = d_inf(conj Z1, conj Z2).
DistanceReport lower_distance(const LowerSiegelPoint& z1,
                              const LowerSiegelPoint& z2,
                              const Tolerance& tol = {});

// d^S(S1 K, S2 K) = 2 ln || S1^-1 S2 ||; both inputs must be real
// symplectic (NotRealSymplectic otherwise).
double quotient_distance(const BlockSymplectic& s1, const BlockSymplectic& s2,
                         const Tolerance& tol = {});

// Classical hyperbolic distance on the upper half plane,
// arccosh(1 + |z - w|^2 / (2 Im z Im w)).  Oracle for n = 1.
double hyperbolic_distance(Complex z, Complex w);

struct PathSample {
    std::vector<SiegelPoint> points;  // Z(t_0 .. t_k), t uniform in [0, 1]
};

PathSample straight_path(const SiegelPoint& z1, const SiegelPoint& z2,
                         int segments, const Tolerance& tol = {});

// Composite midpoint rule over the discretized path: per segment, F at the
// midpoint applied to the finite-difference tangent.  An upper bound for
// d_inf up to quadrature slack.
double path_finsler_length(const PathSample& p, const Tolerance& tol = {});

struct IsometryResult {
    double lhs = 0.0;  // d_-(Phi_S(z1), Phi_S(z2))
    double rhs = 0.0;  // d_inf(z1, z2)
    double defect = 0.0;
};

// Checks the isometry statement for purely imaginary symplectic S; other
// input is rejected.
IsometryResult isometry_check(const BlockSymplectic& s, const SiegelPoint& z1,
                              const SiegelPoint& z2, const Tolerance& tol = {});

struct ContractionResult {
    double max_ratio = 0.0;
    std::vector<double> ratios;  // degenerate pairs (d_inf < 1e-6) excluded
};

// s must be a translation T_W = [[I, W], [O, I]] with W in the upper space
// (WrongShape otherwise).
ContractionResult contraction_check(
    const BlockSymplectic& s,
    const std::vector<std::pair<SiegelPoint, SiegelPoint>>& pairs,
    const Tolerance& tol = {});

// Conjugated form s = P T_W P^-1 with P real symplectic, built internally.
ContractionResult contraction_check(
    const SiegelPoint& translation, const std::optional<BlockSymplectic>& p,
    const std::vector<std::pair<SiegelPoint, SiegelPoint>>& pairs,
    const Tolerance& tol = {});

struct CompressionResult {
    double lhs = 0.0;   // hyperbolic distance of the compressed scalars
    double rhs = 0.0;   // d_inf(z1, z2)
    bool holds = false; // lhs <= rhs + slack
};

// Compression Z -> v* Z v into the scalar upper half plane, ||v|| <= 1.
CompressionResult compression_check(const Vector& v, const SiegelPoint& z1,
                                    const SiegelPoint& z2,
                                    const Tolerance& tol = {});

}  // namespace siegel
