// Command line front end: one-shot queries over matrix documents and the
// seeded property-suite runner.
//
// Exit codes: 0 success, 1 property failure, 2 usage/parse error,
// 3 singular denominator.

#include "siegel/action.hpp"
#include "siegel/document.hpp"
#include "siegel/metric.hpp"
#include "siegel/space.hpp"
#include "siegel/suites.hpp"
#include "siegel/symplectic.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

using namespace siegel;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSingular = 3;

Tolerance tolerance_from(double tol_flag) {
    Tolerance tol;
    if (tol_flag > 0.0) {
        tol.sym_tol = tol.psd_tol = tol.eq_tol = tol_flag;
    }
    tol.validate();
    return tol;
}

BlockSymplectic load_block(const std::string& path) {
    const MatrixDocument doc = read_document(path);
    if (doc.value.rows() != doc.value.cols() || doc.value.rows() % 2 != 0) {
        throw ParseError("expected a 2n x 2n matrix in '" + path + "'");
    }
    return BlockSymplectic::from_matrix(doc.value);
}

int cmd_check(const std::string& input, double tol_flag) {
    const Tolerance tol = tolerance_from(tol_flag);
    const BlockSymplectic s = load_block(input);
    const Matrix j = standard_j(s.n);
    const double sympl_defect = max_abs(s.s.transpose() * j * s.s - j);
    const double anti_defect = max_abs(s.s.transpose() * j * s.s + j);
    const bool sympl = is_symplectic(s, tol);
    const bool anti = is_antisymplectic(s, tol);

    std::cout << (sympl ? "symplectic" : anti ? "antisymplectic" : "neither")
              << "\n";
    std::cout << "defect ||S^tJS - J||_max = " << sympl_defect << "\n";
    std::cout << "defect ||S^tJS + J||_max = " << anti_defect << "\n";
    const Matrix atc = s.a().transpose() * s.c();
    const Matrix btd = s.b().transpose() * s.d();
    const Matrix atd_ctb =
        s.a().transpose() * s.d() - s.c().transpose() * s.b();
    std::cout << "block defects: sym(A^tC) = " << symmetry_defect(atc)
              << ", sym(B^tD) = " << symmetry_defect(btd)
              << ", ||A^tD - C^tB - I||_max = "
              << max_abs(atd_ctb - Matrix::Identity(s.n, s.n)) << "\n";
    return kExitOk;
}

int cmd_classify(const std::string& input, double tol_flag) {
    const Tolerance tol = tolerance_from(tol_flag);
    const BlockSymplectic s = load_block(input);
    if (!is_symplectic(s, tol) && !is_antisymplectic(s, tol)) {
        std::cerr << "input is neither symplectic nor antisymplectic\n";
        return kExitUsage;
    }
    const ActionClassification c = classify_action(s, tol);
    std::cout << "verdict: " << to_string(c.verdict) << "\n";
    std::cout << "min eigenvalue of i(S*JS - J): " << c.min_eigenvalue << "\n";
    std::cout << "flags: real=" << c.is_real
              << " purely_imaginary=" << c.is_purely_imaginary
              << " symplectic=" << c.is_symplectic
              << " antisymplectic=" << c.is_antisymplectic << "\n";
    if (c.is_symplectic) {
        const BlockConditions bc = classifier_block_conditions(s, tol);
        std::cout << "block conditions: (1)=" << bc.cond1 << " (2)=" << bc.cond2
                  << " (3)=" << bc.cond3 << "\n";
    }
    return kExitOk;
}

int cmd_act(const std::string& s_path, const std::string& z_path,
            const std::string& out_path, double tol_flag) {
    const Tolerance tol = tolerance_from(tol_flag);
    const BlockSymplectic s = load_block(s_path);
    const MatrixDocument z_doc = read_document(z_path);
    const ActionOutcome out = mobius_apply(s, z_doc.value, tol);
    std::cout << "status: " << to_string(out.status) << "\n";
    if (out.status == ActionStatus::SingularDenominator) {
        std::cout << "near-null vector of CZ+D available; sigma_min below gate\n";
        return kExitSingular;
    }
    std::cout << "cond(CZ+D): " << out.cond_f << "\n";
    write_document(MatrixDocument::from_matrix(out.result, "matrix"), out_path);
    return kExitOk;
}

int cmd_dist(const std::string& z1_path, const std::string& z2_path, bool lower,
             int path_segments, double tol_flag) {
    const Tolerance tol = tolerance_from(tol_flag);
    const MatrixDocument d1 = read_document(z1_path);
    const MatrixDocument d2 = read_document(z2_path);
    double value = 0.0;
    if (lower) {
        value = lower_distance(make_lower_siegel(d1.value, tol),
                               make_lower_siegel(d2.value, tol), tol)
                    .value;
    } else {
        value = siegel_distance(make_siegel(d1.value, tol),
                                make_siegel(d2.value, tol), tol)
                    .value;
    }
    std::cout << "distance: " << value << "\n";
    if (path_segments > 0 && !lower) {
        const SiegelPoint z1 = make_siegel(d1.value, tol);
        const SiegelPoint z2 = make_siegel(d2.value, tol);
        const double len = path_finsler_length(
            straight_path(z1, z2, path_segments, tol), tol);
        std::cout << "path upper bound (k=" << path_segments << "): " << len
                  << "\n";
        std::cout << "gap: " << len - value << "\n";
    }
    return kExitOk;
}

int cmd_propcheck(const std::string& suite, std::uint64_t seed, long trials,
                  Index n, const std::string& json_out, double tol_flag) {
    SuiteOptions opt;
    opt.seed = seed;
    opt.trials = trials;
    opt.n = n;
    opt.tol = tolerance_from(tol_flag);
    const SuiteReport report = run_suite(suite, opt);
    std::cout << "suite " << report.suite << ": " << report.trials
              << " trials, " << report.failures.size()
              << " failures, max defect " << report.max_defect << "\n";
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) {
            std::cerr << "cannot write '" << json_out << "'\n";
            return kExitUsage;
        }
        out << report.to_json().dump(2) << "\n";
    }
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Siegel upper half space toolkit"};
    app.require_subcommand(1);

    std::string input = "-", s_path, z_path, z2_path, out_path = "-";
    std::string suite, json_out;
    double tol_flag = 0.0;
    bool lower = false;
    int path_segments = 0;
    std::uint64_t seed = 42;
    long trials = 1000;
    Index n = 2;

    auto* check = app.add_subcommand("check",
                                     "symplectic / antisymplectic verdict");
    check->add_option("input", input, "matrix document (JSON, '-' for stdin)");
    check->add_option("--tol", tol_flag, "override all tolerances");

    auto* classify =
        app.add_subcommand("classify", "classifier verdict for the action");
    classify->add_option("input", input, "matrix document");
    classify->add_option("--tol", tol_flag, "override all tolerances");

    auto* act = app.add_subcommand("act", "apply Phi_S to a point");
    act->add_option("s", s_path, "2n x 2n matrix document")->required();
    act->add_option("z", z_path, "n x n point document")->required();
    act->add_option("--out", out_path, "result document path ('-' = stdout)");
    act->add_option("--tol", tol_flag, "override all tolerances");

    auto* dist = app.add_subcommand("dist", "distance between two points");
    dist->add_option("z1", z_path, "first point document")->required();
    dist->add_option("z2", z2_path, "second point document")->required();
    dist->add_flag("--lower", lower, "points lie in the lower space");
    dist->add_option("--path", path_segments,
                     "also print the discretized path upper bound with k segments");
    dist->add_option("--tol", tol_flag, "override all tolerances");

    auto* prop = app.add_subcommand("propcheck", "run a seeded property suite");
    prop->add_option("suite", suite, "suite name")->required();
    prop->add_option("--seed", seed, "RNG seed");
    prop->add_option("--trials", trials, "number of trials");
    prop->add_option("--n", n, "matrix block dimension");
    prop->add_option("--json", json_out, "write the full report to this path");
    prop->add_option("--tol", tol_flag, "override all tolerances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(input, tol_flag);
        if (classify->parsed()) return cmd_classify(input, tol_flag);
        if (act->parsed()) return cmd_act(s_path, z_path, out_path, tol_flag);
        if (dist->parsed())
            return cmd_dist(z_path, z2_path, lower, path_segments, tol_flag);
        if (prop->parsed())
            return cmd_propcheck(suite, seed, trials, n, json_out, tol_flag);
    } catch (const siegel::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const siegel::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const siegel::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const siegel::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
