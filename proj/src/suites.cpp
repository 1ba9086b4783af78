#include "siegel/suites.hpp"

#include "siegel/action.hpp"
#include "siegel/metric.hpp"
#include "siegel/space.hpp"
#include "siegel/symplectic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

namespace siegel {

namespace {

using Clock = std::chrono::steady_clock;

Json doc_json(const Matrix& m, const char* kind) {
    return MatrixDocument::from_matrix(m, kind).to_json();
}

struct SuiteContext {
    const SuiteOptions& opt;
    SuiteReport& report;
    std::mt19937_64 rng;

    explicit SuiteContext(const SuiteOptions& o, SuiteReport& r)
        : opt(o), report(r), rng(o.seed) {}

    void fail(long trial, Json inputs, Json observed, Json expected,
              double defect) {
        report.failures.push_back(
            {trial, std::move(inputs), std::move(observed), std::move(expected),
             defect});
    }

    void note_defect(double d) {
        if (std::isfinite(d)) report.max_defect = std::max(report.max_defect, d);
    }
};

// --- individual suites ----------------------------------------------------

void suite_check(SuiteContext& ctx) {
    const Tolerance& tol = ctx.opt.tol;
    for (long t = 0; t < ctx.opt.trials; ++t) {
        // Alternate symplectic, antisymplectic, and arbitrary words; the two
        // predicates and the blockwise form must agree on all of them.
        BlockSymplectic s = [&] {
            switch (t % 3) {
                case 0: return random_real_symplectic(ctx.opt.n, ctx.rng);
                case 1: return random_real_antisymplectic(ctx.opt.n, ctx.rng);
                default: return random_complex_symplectic(ctx.opt.n, ctx.rng);
            }
        }();
        const bool sp = is_symplectic(s, tol);
        const bool sp_block = is_symplectic_blockwise(s, tol);
        if (sp != sp_block) {
            ctx.fail(t, Json{{"s", doc_json(s.s, "symplectic")}},
                     Json{{"is_symplectic", sp}, {"blockwise", sp_block}},
                     Json{{"agreement", true}}, 1.0);
            continue;
        }
        if (t % 3 == 1) {
            // Product of two antisymplectics is symplectic.
            BlockSymplectic s2 = random_real_antisymplectic(ctx.opt.n, ctx.rng);
            BlockSymplectic prod = BlockSymplectic::from_matrix(s.s * s2.s);
            if (!is_symplectic(prod, tol)) {
                ctx.fail(t, Json{{"s", doc_json(s.s, "symplectic")},
                                 {"s2", doc_json(s2.s, "symplectic")}},
                         Json{{"product_symplectic", false}},
                         Json{{"product_symplectic", true}}, 1.0);
            }
        }
    }
}

void suite_classify_soundness(SuiteContext& ctx) {
    const Tolerance& tol = ctx.opt.tol;
    for (long t = 0; t < ctx.opt.trials; ++t) {
        BlockSymplectic s = random_psd_classifier_symplectic(ctx.opt.n, ctx.rng);
        // Acceptance filter: the sampler is PSD by construction, but the
        // classifier itself is the gate under test.
        if (!is_psd(classifier_matrix(s), tol).psd) {
            ctx.fail(t, Json{{"s", doc_json(s.s, "symplectic")}},
                     Json{{"classifier_psd", false}},
                     Json{{"classifier_psd", true}}, 1.0);
            continue;
        }
        SiegelPoint z = random_siegel_point(ctx.opt.n, ctx.rng, tol);
        ActionOutcome out = mobius_apply(s, z, tol);
        if (out.status != ActionStatus::InUpper) {
            ctx.fail(t,
                     Json{{"s", doc_json(s.s, "symplectic")},
                          {"z", doc_json(z.z, "siegel_point")}},
                     Json{{"status", to_string(out.status)}},
                     Json{{"status", "InUpper"}}, 1.0);
        }
    }
}

void suite_composition(SuiteContext& ctx) {
    const Tolerance& tol = ctx.opt.tol;
    for (long t = 0; t < ctx.opt.trials; ++t) {
        BlockSymplectic s = random_real_symplectic(ctx.opt.n, ctx.rng);
        BlockSymplectic r = random_real_symplectic(ctx.opt.n, ctx.rng);
        SiegelPoint z = random_siegel_point(ctx.opt.n, ctx.rng, tol);
        ComposeResult res = compose_check(s, r, z, tol);
        if (res.broken_stage >= 0) {
            ctx.fail(t,
                     Json{{"s", doc_json(s.s, "symplectic")},
                          {"r", doc_json(r.s, "symplectic")},
                          {"z", doc_json(z.z, "siegel_point")}},
                     Json{{"broken_stage", res.broken_stage}},
                     Json{{"broken_stage", -1}}, 1.0);
            continue;
        }
        const double gate = 1e-8 * (1.0 + operator_norm(s.s) * operator_norm(r.s) *
                                              operator_norm(z.z));
        ctx.note_defect(res.max_defect);
        if (res.max_defect > gate) {
            ctx.fail(t,
                     Json{{"s", doc_json(s.s, "symplectic")},
                          {"r", doc_json(r.s, "symplectic")},
                          {"z", doc_json(z.z, "siegel_point")}},
                     Json{{"max_defect", res.max_defect}}, Json{{"gate", gate}},
                     res.max_defect);
        }
    }
}

void suite_real_action(SuiteContext& ctx) {
    const Tolerance& tol = ctx.opt.tol;
    for (long t = 0; t < ctx.opt.trials; ++t) {
        BlockSymplectic s = random_real_symplectic(ctx.opt.n, ctx.rng);
        SiegelPoint z = random_siegel_point(ctx.opt.n, ctx.rng, tol);
        ActionOutcome out = mobius_apply(s, z, tol);
        const bool ok = out.status == ActionStatus::InUpper &&
                        out.symmetry_defect <= 1e-8 * out.cond_f;
        ctx.note_defect(out.symmetry_defect);
        if (!ok) {
            ctx.fail(t,
                     Json{{"s", doc_json(s.s, "symplectic")},
                          {"z", doc_json(z.z, "siegel_point")}},
                     Json{{"status", to_string(out.status)},
                          {"symmetry_defect", out.symmetry_defect},
                          {"cond_f", out.cond_f}},
                     Json{{"status", "InUpper"}}, out.symmetry_defect);
        }
    }
}

void suite_antisymplectic_action(SuiteContext& ctx) {
    const Tolerance& tol = ctx.opt.tol;
    for (long t = 0; t < ctx.opt.trials; ++t) {
        BlockSymplectic s = (t % 2 == 0)
                                ? random_real_antisymplectic(ctx.opt.n, ctx.rng)
                                : random_purely_imaginary_symplectic(ctx.opt.n,
                                                                     ctx.rng);
        SiegelPoint z = random_siegel_point(ctx.opt.n, ctx.rng, tol);
        ActionOutcome out = mobius_apply(s, z, tol);
        if (out.status != ActionStatus::InLower) {
            ctx.fail(t,
                     Json{{"s", doc_json(s.s, "symplectic")},
                          {"z", doc_json(z.z, "siegel_point")}},
                     Json{{"status", to_string(out.status)}},
                     Json{{"status", "InLower"}}, 1.0);
        }
    }
}

void suite_pure_imaginary_isometry(SuiteContext& ctx) {
    const Tolerance& tol = ctx.opt.tol;
    for (long t = 0; t < ctx.opt.trials; ++t) {
        BlockSymplectic s =
            random_purely_imaginary_symplectic(ctx.opt.n, ctx.rng);
        SiegelPoint z1 = random_siegel_point(ctx.opt.n, ctx.rng, tol);
        SiegelPoint z2 = random_siegel_point(ctx.opt.n, ctx.rng, tol);
        IsometryResult r = isometry_check(s, z1, z2, tol);
        ctx.note_defect(r.defect);
        if (r.defect > 1e-7 * (1.0 + r.rhs)) {
            ctx.fail(t,
                     Json{{"s", doc_json(s.s, "symplectic")},
                          {"z1", doc_json(z1.z, "siegel_point")},
                          {"z2", doc_json(z2.z, "siegel_point")}},
                     Json{{"lhs", r.lhs}, {"rhs", r.rhs}},
                     Json{{"defect_below", 1e-7 * (1.0 + r.rhs)}}, r.defect);
        }
    }
}

void suite_hyperbolic_oracle(SuiteContext& ctx) {
    const Tolerance& tol = ctx.opt.tol;
    std::uniform_real_distribution<double> xdist(-2.0, 2.0);
    std::uniform_real_distribution<double> ydist(0.1, 3.0);
    for (long t = 0; t < ctx.opt.trials; ++t) {
        const Complex z(xdist(ctx.rng), ydist(ctx.rng));
        const Complex w(xdist(ctx.rng), ydist(ctx.rng));
        Matrix mz(1, 1), mw(1, 1);
        mz(0, 0) = z;
        mw(0, 0) = w;
        const double closed =
            siegel_distance(make_siegel(mz, tol), make_siegel(mw, tol), tol).value;
        const double oracle = hyperbolic_distance(z, w);
        const double defect = std::abs(closed - oracle);
        ctx.note_defect(defect);
        if (defect > 1e-9) {
            ctx.fail(t,
                     Json{{"z", doc_json(mz, "siegel_point")},
                          {"w", doc_json(mw, "siegel_point")}},
                     Json{{"closed_form", closed}}, Json{{"oracle", oracle}},
                     defect);
        }
    }
}

void suite_metric_axioms(SuiteContext& ctx) {
    const Tolerance& tol = ctx.opt.tol;
    for (long t = 0; t < ctx.opt.trials; ++t) {
        SiegelPoint z1 = random_siegel_point(ctx.opt.n, ctx.rng, tol);
        SiegelPoint z2 = random_siegel_point(ctx.opt.n, ctx.rng, tol);
        SiegelPoint z3 = random_siegel_point(ctx.opt.n, ctx.rng, tol);
        const double d12 = siegel_distance(z1, z2, tol).value;
        const double d21 = siegel_distance(z2, z1, tol).value;
        const double d13 = siegel_distance(z1, z3, tol).value;
        const double d23 = siegel_distance(z2, z3, tol).value;
        const double d11 = siegel_distance(z1, z1, tol).value;
        const double sym_defect = std::abs(d12 - d21);
        const double tri_defect = std::max(0.0, d13 - (d12 + d23));
        ctx.note_defect(std::max({sym_defect, tri_defect, d11}));
        if (d12 < 0.0 || sym_defect > 1e-9 || tri_defect > 1e-8 || d11 > 1e-9) {
            ctx.fail(t,
                     Json{{"z1", doc_json(z1.z, "siegel_point")},
                          {"z2", doc_json(z2.z, "siegel_point")},
                          {"z3", doc_json(z3.z, "siegel_point")}},
                     Json{{"d12", d12},
                          {"d21", d21},
                          {"triangle_defect", tri_defect},
                          {"d11", d11}},
                     Json{{"metric_axioms", true}},
                     std::max({sym_defect, tri_defect, d11}));
        }
    }
}

void suite_path_bound(SuiteContext& ctx) {
    const Tolerance& tol = ctx.opt.tol;
    const int segments = 64;
    for (long t = 0; t < ctx.opt.trials; ++t) {
        SiegelPoint z1 = random_siegel_point(ctx.opt.n, ctx.rng, tol);
        SiegelPoint z2 = random_siegel_point(ctx.opt.n, ctx.rng, tol);
        const double d = siegel_distance(z1, z2, tol).value;
        const double len =
            path_finsler_length(straight_path(z1, z2, segments, tol), tol);
        const double undercut = std::max(0.0, d - len);
        ctx.note_defect(undercut);
        if (undercut > 1e-3) {
            ctx.fail(t,
                     Json{{"z1", doc_json(z1.z, "siegel_point")},
                          {"z2", doc_json(z2.z, "siegel_point")}},
                     Json{{"path_length", len}}, Json{{"at_least", d - 1e-3}},
                     undercut);
        }
    }
}

void suite_contraction(SuiteContext& ctx) {
    const Tolerance& tol = ctx.opt.tol;
    const long batches = std::max(1L, ctx.opt.trials / 100);
    for (long b = 0; b < batches; ++b) {
        SiegelPoint w = random_siegel_point(ctx.opt.n, ctx.rng, tol);
        std::vector<std::pair<SiegelPoint, SiegelPoint>> pairs;
        for (int k = 0; k < 100; ++k) {
            pairs.emplace_back(random_siegel_point(ctx.opt.n, ctx.rng, tol),
                               random_siegel_point(ctx.opt.n, ctx.rng, tol));
        }
        ContractionResult r =
            contraction_check(siegel_translation(w), pairs, tol);
        ctx.note_defect(r.max_ratio);
        if (r.max_ratio >= 1.0) {
            ctx.fail(b, Json{{"translation", doc_json(w.z, "siegel_point")}},
                     Json{{"max_ratio", r.max_ratio}},
                     Json{{"max_ratio_below", 1.0}}, r.max_ratio);
        }
    }
}

void suite_compression(SuiteContext& ctx) {
    const Tolerance& tol = ctx.opt.tol;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (long t = 0; t < ctx.opt.trials; ++t) {
        SiegelPoint z1 = random_siegel_point(ctx.opt.n, ctx.rng, tol);
        SiegelPoint z2 = random_siegel_point(ctx.opt.n, ctx.rng, tol);
        Vector v(ctx.opt.n);
        for (Index i = 0; i < ctx.opt.n; ++i)
            v(i) = Complex(gauss(ctx.rng), gauss(ctx.rng));
        v /= v.norm();
        CompressionResult r = compression_check(v, z1, z2, tol);
        ctx.note_defect(std::max(0.0, r.lhs - r.rhs));
        if (!r.holds) {
            Matrix vm(ctx.opt.n, 1);
            vm.col(0) = v;
            ctx.fail(t,
                     Json{{"v", doc_json(vm, "matrix")},
                          {"z1", doc_json(z1.z, "siegel_point")},
                          {"z2", doc_json(z2.z, "siegel_point")}},
                     Json{{"lhs", r.lhs}, {"rhs", r.rhs}},
                     Json{{"lhs_le_rhs", true}}, r.lhs - r.rhs);
        }
    }
}

// Random self-adjoint 2n x 2n with a chosen spectrum; zeroed eigenvalues
// make alpha/gamma rank-deficient in a controlled way.
Matrix random_self_adjoint_block(Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> lam(-1.0, 2.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Matrix g(2 * n, 2 * n);
    for (Index i = 0; i < 2 * n; ++i)
        for (Index j = 0; j < 2 * n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    RealVector spectrum(2 * n);
    for (Index i = 0; i < 2 * n; ++i) {
        spectrum(i) = coin(rng) < 0.3 ? 0.0 : lam(rng);
    }
    Matrix m = q * spectrum.asDiagonal() * q.adjoint();
    return 0.5 * (m + m.adjoint());
}

void suite_block_psd(SuiteContext& ctx) {
    const Tolerance& tol = ctx.opt.tol;
    for (long t = 0; t < ctx.opt.trials; ++t) {
        Matrix m = random_self_adjoint_block(ctx.opt.n, ctx.rng);
        SelfAdjointBlocks blocks = SelfAdjointBlocks::split(m, tol);
        BlockPsdResult crit = block_psd_criterion(blocks, tol);
        const bool direct = is_psd(m, tol).psd;
        if (crit.via_condition2 != direct || crit.via_condition3 != direct) {
            ctx.fail(t, Json{{"m", doc_json(m, "matrix")}},
                     Json{{"condition2", crit.via_condition2},
                          {"condition3", crit.via_condition3},
                          {"direct", direct}},
                     Json{{"agreement", true}}, 1.0);
        }
    }
}

void suite_converse_probe(SuiteContext& ctx) {
    // Empirical tallies only: the converse of the classification theorem is
    // open, so nothing here asserts equivalence and nothing can fail.
    const Tolerance& tol = ctx.opt.tol;
    const int probes_per_matrix = 16;
    long psd_preserved = 0, psd_violated = 0;
    long nonpsd_preserved = 0, nonpsd_violated = 0;
    Json candidates = Json::array();
    for (long t = 0; t < ctx.opt.trials; ++t) {
        BlockSymplectic s = random_complex_symplectic(ctx.opt.n, ctx.rng);
        if (!is_symplectic(s, tol)) continue;
        const bool psd = is_psd(classifier_matrix(s), tol).psd;
        bool preserved = true;
        for (int k = 0; k < probes_per_matrix; ++k) {
            SiegelPoint z = random_siegel_point(ctx.opt.n, ctx.rng, tol);
            if (mobius_apply(s, z, tol).status != ActionStatus::InUpper) {
                preserved = false;
                break;
            }
        }
        if (psd && preserved) ++psd_preserved;
        if (psd && !preserved) ++psd_violated;
        if (!psd && preserved) {
            ++nonpsd_preserved;
            // Candidate against the converse: preserved empirically although
            // the classifier is not PSD.  Serialize for later scrutiny.
            if (candidates.size() < 32) {
                candidates.push_back(Json{
                    {"trial", t},
                    {"s", doc_json(s.s, "symplectic")},
                    {"min_classifier_eig",
                     is_psd(classifier_matrix(s), tol).min_eigenvalue}});
            }
        }
        if (!psd && !preserved) ++nonpsd_violated;
    }
    ctx.report.extra = Json{{"probes_per_matrix", probes_per_matrix},
                            {"psd_preserved", psd_preserved},
                            {"psd_violated", psd_violated},
                            {"nonpsd_preserved", nonpsd_preserved},
                            {"nonpsd_violated", nonpsd_violated},
                            {"converse_candidates", candidates}};
}

using SuiteFn = void (*)(SuiteContext&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"check", suite_check},
        {"classify-soundness", suite_classify_soundness},
        {"composition", suite_composition},
        {"real-action", suite_real_action},
        {"antisymplectic-action", suite_antisymplectic_action},
        {"pure-imaginary-isometry", suite_pure_imaginary_isometry},
        {"hyperbolic-oracle", suite_hyperbolic_oracle},
        {"metric-axioms", suite_metric_axioms},
        {"path-bound", suite_path_bound},
        {"contraction", suite_contraction},
        {"compression", suite_compression},
        {"block-psd", suite_block_psd},
        {"converse-probe", suite_converse_probe},
    };
    return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    const auto& reg = registry();
    const auto it = std::find_if(reg.begin(), reg.end(),
                                 [&](const auto& e) { return e.first == name; });
    if (it == reg.end()) throw UnknownSuite("unknown suite '" + name + "'");

    SuiteReport report;
    report.suite = name;
    report.seed = opt.seed;
    report.trials = opt.trials;

    const auto start = Clock::now();
    SuiteContext ctx(opt, report);
    it->second(ctx);
    report.wall_time =
        std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

}  // namespace siegel
