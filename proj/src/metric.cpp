#include "siegel/metric.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>

namespace siegel {

TangentVector make_tangent(const SiegelPoint& at, const Matrix& w,
                           const Tolerance& tol) {
    require_square(w, "make_tangent");
    if (w.rows() != at.n) {
        throw DimensionMismatch("make_tangent: W must match the base point");
    }
    const double defect = symmetry_defect(w);
    if (defect > tol.sym_tol * std::max(1.0, max_abs(w))) {
        throw NotSymmetric(defect);
    }
    return {at, w};
}

double finsler_norm(const TangentVector& t, const Tolerance& tol) {
    const Matrix inv_root = spd_inv_sqrt(t.at.y.cast<Complex>(), tol);
    return operator_norm(inv_root * t.w * inv_root);
}

namespace {

double log_norm_of_quotient(const Matrix& s1, const Matrix& s2) {
    // 2 ln || s1^-1 s2 ||; >= 1 in exact arithmetic, clamp against
    // floating error producing a tiny negative distance.
    const Matrix q = s1.partialPivLu().solve(s2);
    return 2.0 * std::log(std::max(operator_norm(q), 1.0));
}

}  // namespace

DistanceReport siegel_distance(const SiegelPoint& z1, const SiegelPoint& z2,
                               const Tolerance& tol) {
    if (z1.n != z2.n) {
        throw DimensionMismatch("siegel_distance: points of different dimension");
    }
    DistanceReport r;
    r.method = DistanceMethod::ClosedForm;
    r.s1_norm_arg = upper_witness(z1, tol);
    r.s2_norm_arg = upper_witness(z2, tol);
    const Matrix q = r.s1_norm_arg.s.partialPivLu().solve(r.s2_norm_arg.s);
    r.operator_norm_used = std::max(operator_norm(q), 1.0);
    r.value = 2.0 * std::log(r.operator_norm_used);
    return r;
}

DistanceReport lower_distance(const LowerSiegelPoint& z1,
                              const LowerSiegelPoint& z2,
                              const Tolerance& tol) {
    return siegel_distance(conjugate_point(z1), conjugate_point(z2), tol);
}

double quotient_distance(const BlockSymplectic& s1, const BlockSymplectic& s2,
                         const Tolerance& tol) {
    if (!is_real(s1, tol) || !is_symplectic(s1, tol) || !is_real(s2, tol) ||
        !is_symplectic(s2, tol)) {
        throw NotRealSymplectic("quotient_distance: inputs must be real symplectic");
    }
    if (s1.n != s2.n) {
        throw DimensionMismatch("quotient_distance: dimension mismatch");
    }
    return log_norm_of_quotient(s1.s, s2.s);
}

double hyperbolic_distance(Complex z, Complex w) {
    const double y1 = z.imag(), y2 = w.imag();
    if (y1 <= 0.0 || y2 <= 0.0) {
        throw Error("hyperbolic_distance: points must lie in the upper half plane");
    }
    const double q = std::norm(z - w) / (2.0 * y1 * y2);
    return std::acosh(1.0 + q);
}

PathSample straight_path(const SiegelPoint& z1, const SiegelPoint& z2,
                         int segments, const Tolerance& tol) {
    if (z1.n != z2.n) {
        throw DimensionMismatch("straight_path: endpoints of different dimension");
    }
    if (segments < 1) throw Error("straight_path: need at least one segment");
    PathSample p;
    p.points.reserve(segments + 1);
    for (int k = 0; k <= segments; ++k) {
        const double t = static_cast<double>(k) / segments;
        // Convexity of the positive cone keeps every interpolant valid.
        p.points.push_back(make_siegel((1.0 - t) * z1.z + t * z2.z, tol));
    }
    return p;
}

double path_finsler_length(const PathSample& p, const Tolerance& tol) {
    if (p.points.size() < 2) return 0.0;
    const int k = static_cast<int>(p.points.size()) - 1;
    const double dt = 1.0 / k;
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
        const Matrix& za = p.points[i].z;
        const Matrix& zb = p.points[i + 1].z;
        const Matrix mid = 0.5 * (za + zb);
        const Matrix tangent = (zb - za) / dt;
        const SiegelPoint zm = make_siegel(mid, tol);
        total += finsler_norm(make_tangent(zm, tangent, tol), tol) * dt;
    }
    return total;
}

IsometryResult isometry_check(const BlockSymplectic& s, const SiegelPoint& z1,
                              const SiegelPoint& z2, const Tolerance& tol) {
    if (!is_purely_imaginary(s, tol) || !is_symplectic(s, tol)) {
        throw Error("isometry_check: S must be purely imaginary symplectic");
    }
    const ActionOutcome w1 = mobius_apply(s, z1, tol);
    const ActionOutcome w2 = mobius_apply(s, z2, tol);
    if (w1.status != ActionStatus::InLower || w2.status != ActionStatus::InLower) {
        throw Error("isometry_check: image did not land in the lower space");
    }
    IsometryResult r;
    r.lhs = lower_distance(*w1.lower, *w2.lower, tol).value;
    r.rhs = siegel_distance(z1, z2, tol).value;
    r.defect = std::abs(r.lhs - r.rhs);
    return r;
}

namespace {

constexpr double kDegeneratePairGate = 1e-6;

ContractionResult contraction_ratios(
    const BlockSymplectic& s,
    const std::vector<std::pair<SiegelPoint, SiegelPoint>>& pairs,
    const Tolerance& tol) {
    ContractionResult r;
    for (const auto& [z1, z2] : pairs) {
        const double base = siegel_distance(z1, z2, tol).value;
        if (base < kDegeneratePairGate) continue;
        const ActionOutcome w1 = mobius_apply(s, z1, tol);
        const ActionOutcome w2 = mobius_apply(s, z2, tol);
        if (w1.status != ActionStatus::InUpper ||
            w2.status != ActionStatus::InUpper) {
            throw Error("contraction_check: image left the Siegel space");
        }
        const double mapped = siegel_distance(*w1.upper, *w2.upper, tol).value;
        r.ratios.push_back(mapped / base);
    }
    r.max_ratio =
        r.ratios.empty() ? 0.0 : *std::max_element(r.ratios.begin(), r.ratios.end());
    return r;
}

}  // namespace

ContractionResult contraction_check(
    const BlockSymplectic& s,
    const std::vector<std::pair<SiegelPoint, SiegelPoint>>& pairs,
    const Tolerance& tol) {
    const Index n = s.n;
    const double gate = 10 * tol.eq_tol * std::max(1.0, max_abs(s.s));
    const bool translation_shape =
        max_abs(s.a() - Matrix::Identity(n, n)) <= gate &&
        max_abs(s.d() - Matrix::Identity(n, n)) <= gate &&
        max_abs(s.c()) <= gate;
    if (!translation_shape) {
        throw WrongShape("contraction_check: S is not of translation form");
    }
    // The translation parameter must itself lie in the upper space.
    make_siegel(s.b(), tol);
    return contraction_ratios(s, pairs, tol);
}

ContractionResult contraction_check(
    const SiegelPoint& translation, const std::optional<BlockSymplectic>& p,
    const std::vector<std::pair<SiegelPoint, SiegelPoint>>& pairs,
    const Tolerance& tol) {
    const BlockSymplectic t = siegel_translation(translation);
    if (!p) return contraction_ratios(t, pairs, tol);
    if (!is_real(*p, tol) || !is_symplectic(*p, tol)) {
        throw NotRealSymplectic("contraction_check: P must be real symplectic");
    }
    const Matrix conj = p->s * t.s * p->s.partialPivLu().inverse();
    return contraction_ratios(BlockSymplectic::from_matrix(conj), pairs, tol);
}

CompressionResult compression_check(const Vector& v, const SiegelPoint& z1,
                                    const SiegelPoint& z2,
                                    const Tolerance& tol) {
    if (v.size() != z1.n || z1.n != z2.n) {
        throw DimensionMismatch("compression_check: dimension mismatch");
    }
    const double norm_v = v.norm();
    if (norm_v <= tol.eq_tol) throw ZeroVector("compression_check: v is zero");
    if (norm_v > 1.0 + tol.eq_tol) {
        throw Error("compression_check: v must lie in the closed unit ball");
    }
    const Complex w1 = (v.adjoint() * z1.z * v)(0);
    const Complex w2 = (v.adjoint() * z2.z * v)(0);
    CompressionResult r;
    r.lhs = hyperbolic_distance(w1, w2);
    r.rhs = siegel_distance(z1, z2, tol).value;
    r.holds = r.lhs <= r.rhs + 1e-9;
    return r;
}

}  // namespace siegel
