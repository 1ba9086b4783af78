#include "siegel/metric.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace siegel;

namespace {

SiegelPoint scaled_center(Index n, double y) {
    return make_siegel(Complex(0, y) * Matrix::Identity(n, n));
}

Matrix random_symmetric_complex(Index n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix w(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            w(i, j) = Complex(dist(rng), dist(rng));
            w(j, i) = w(i, j);
        }
    }
    return w;
}

// i * (real antisymplectic): the purely imaginary symplectic class.
BlockSymplectic imaginary_symplectic_fixture(Index n) {
    return BlockSymplectic::from_matrix(Complex(0, 1) *
                                        (standard_j(n) * lower_reflector(n).s));
}

}  // namespace

TEST_CASE("finsler_norm fixtures") {
    std::mt19937_64 rng(109);
    Matrix w = random_symmetric_complex(3, rng);
    CHECK(finsler_norm(make_tangent(center_point(3), w)) ==
          doctest::Approx(operator_norm(w)).epsilon(1e-12));

    // n = 1 reduces to the hyperbolic line element |w| / y.
    Matrix z1(1, 1), w1(1, 1);
    z1(0, 0) = Complex(0.7, 2.5);
    w1(0, 0) = Complex(-0.3, 0.4);
    CHECK(finsler_norm(make_tangent(make_siegel(z1), w1)) ==
          doctest::Approx(std::abs(w1(0, 0)) / 2.5).epsilon(1e-12));

    CHECK(finsler_norm(make_tangent(scaled_center(2, 2.0),
                                    Matrix::Identity(2, 2))) ==
          doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(
        make_tangent(center_point(2), Matrix::Identity(3, 3)),
        DimensionMismatch);
}

TEST_CASE("siegel_distance fixtures") {
    std::mt19937_64 rng(113);
    SiegelPoint z = random_siegel_point(3, rng);
    CHECK(siegel_distance(z, z).value <= 1e-9);

    for (Index n : {1, 2, 3}) {
        for (double y : {0.1, 0.5, 2.0, 10.0}) {
            DistanceReport r = siegel_distance(center_point(n), scaled_center(n, y));
            CHECK(std::abs(r.value - std::abs(std::log(y))) < 1e-10);
            CHECK(r.value ==
                  doctest::Approx(2.0 * std::log(r.operator_norm_used)));
        }
    }
}

TEST_CASE("siegel_distance agrees with the hyperbolic oracle at n = 1") {
    std::mt19937_64 rng(127);
    std::uniform_real_distribution<double> xdist(-2.0, 2.0);
    std::uniform_real_distribution<double> ydist(0.1, 3.0);
    for (int rep = 0; rep < 2000; ++rep) {
        Matrix a(1, 1), b(1, 1);
        a(0, 0) = Complex(xdist(rng), ydist(rng));
        b(0, 0) = Complex(xdist(rng), ydist(rng));
        const double closed = siegel_distance(make_siegel(a), make_siegel(b)).value;
        const double oracle = hyperbolic_distance(a(0, 0), b(0, 0));
        CHECK(std::abs(closed - oracle) < 1e-9);
    }
}

TEST_CASE("lower_distance delegates through conjugation") {
    std::mt19937_64 rng(131);
    LowerSiegelPoint z1 = random_lower_siegel_point(2, rng);
    LowerSiegelPoint z2 = random_lower_siegel_point(2, rng);
    CHECK(lower_distance(z1, z1).value <= 1e-9);
    CHECK(std::abs(lower_distance(z1, z2).value - lower_distance(z2, z1).value) <
          1e-9);
    CHECK(lower_distance(z1, z2).value ==
          doctest::Approx(
              siegel_distance(conjugate_point(z1), conjugate_point(z2)).value));

    for (double y : {0.1, 0.5, 2.0, 10.0}) {
        LowerSiegelPoint a =
            make_lower_siegel(Complex(0, -1) * Matrix::Identity(2, 2));
        LowerSiegelPoint b =
            make_lower_siegel(Complex(0, -y) * Matrix::Identity(2, 2));
        CHECK(std::abs(lower_distance(a, b).value - std::abs(std::log(y))) <
              1e-10);
    }
}

TEST_CASE("quotient_distance and the Psi isometry") {
    std::mt19937_64 rng(137);
    BlockSymplectic s = random_real_symplectic(2, rng);
    CHECK(quotient_distance(s, s) <= 1e-9);

    for (int rep = 0; rep < 100; ++rep) {
        SiegelPoint z = random_siegel_point(2, rng);
        BlockSymplectic sz = upper_witness(z);
        BlockSymplectic identity =
            BlockSymplectic::from_matrix(Matrix::Identity(4, 4));
        const double quotient = quotient_distance(identity, sz);
        const double direct = siegel_distance(center_point(2), z).value;
        CHECK(std::abs(quotient - direct) < 1e-8);
    }

    // Independence of the coset representative.
    for (int rep = 0; rep < 100; ++rep) {
        BlockSymplectic s1 = random_real_symplectic(2, rng);
        BlockSymplectic s2 = random_real_symplectic(2, rng);
        BlockSymplectic u = random_orthogonal_symplectic(2, rng);
        BlockSymplectic v = random_orthogonal_symplectic(2, rng);
        const double base = quotient_distance(s1, s2);
        const double moved = quotient_distance(
            BlockSymplectic::from_matrix(s1.s * u.s),
            BlockSymplectic::from_matrix(s2.s * v.s));
        CHECK(std::abs(base - moved) < 1e-8);
    }

    BlockSymplectic complex_s = BlockSymplectic::from_matrix(
        Complex(0, 1) * Matrix::Identity(4, 4));
    CHECK_THROWS_AS(quotient_distance(complex_s, complex_s), NotRealSymplectic);
}

TEST_CASE("path_finsler_length: fixtures and refinement") {
    SiegelPoint z = center_point(2);
    PathSample constant{{z, z, z}};
    CHECK(path_finsler_length(constant) == 0.0);

    SiegelPoint z2 = scaled_center(2, 2.0);
    const double exact = std::log(2.0);
    const double len512 = path_finsler_length(straight_path(z, z2, 512));
    CHECK(std::abs(len512 - exact) < 1e-3);

    const double gap512 = std::abs(len512 - exact);
    const double gap1024 =
        std::abs(path_finsler_length(straight_path(z, z2, 1024)) - exact);
    CHECK(gap1024 <= 0.6 * gap512);

    std::mt19937_64 rng(139);
    for (int rep = 0; rep < 20; ++rep) {
        SiegelPoint a = random_siegel_point(2, rng);
        SiegelPoint b = random_siegel_point(2, rng);
        const double d = siegel_distance(a, b).value;
        const double len = path_finsler_length(straight_path(a, b, 128));
        CHECK(len >= d - 1e-3);
    }
}

TEST_CASE("isometry_check for purely imaginary symplectic maps") {
    std::mt19937_64 rng(149);
    BlockSymplectic s = imaginary_symplectic_fixture(2);
    REQUIRE(is_purely_imaginary(s, Tolerance{}));
    REQUIRE(is_symplectic(s));

    SiegelPoint z = random_siegel_point(2, rng);
    IsometryResult same = isometry_check(s, z, z);
    CHECK(same.defect <= 1e-12);

    for (int rep = 0; rep < 200; ++rep) {
        BlockSymplectic si = random_purely_imaginary_symplectic(2, rng);
        SiegelPoint z1 = random_siegel_point(2, rng);
        SiegelPoint z2 = random_siegel_point(2, rng);
        IsometryResult r = isometry_check(si, z1, z2);
        CHECK(r.defect <= 1e-7 * (1.0 + r.rhs));
    }

    BlockSymplectic real_s = random_real_symplectic(2, rng);
    CHECK_THROWS_AS(isometry_check(real_s, z, z), Error);
}

TEST_CASE("real-symplectic invariance of the metric") {
    std::mt19937_64 rng(151);
    for (int rep = 0; rep < 100; ++rep) {
        BlockSymplectic s = random_real_symplectic(2, rng);
        SiegelPoint z1 = random_siegel_point(2, rng);
        SiegelPoint z2 = random_siegel_point(2, rng);
        ActionOutcome w1 = mobius_apply(s, z1);
        ActionOutcome w2 = mobius_apply(s, z2);
        REQUIRE(w1.status == ActionStatus::InUpper);
        REQUIRE(w2.status == ActionStatus::InUpper);
        const double before = siegel_distance(z1, z2).value;
        const double after = siegel_distance(*w1.upper, *w2.upper).value;
        CHECK(std::abs(before - after) <= 1e-7 * (1.0 + before));
    }
}

TEST_CASE("contraction_check fixtures") {
    // s = T_{iI}: z -> z + iI; the scalar-multiple fixture has ratio
    // ln(3/2) / ln 2.
    SiegelPoint param = center_point(2);
    std::vector<std::pair<SiegelPoint, SiegelPoint>> pairs{
        {center_point(2), scaled_center(2, 2.0)}};
    ContractionResult r = contraction_check(siegel_translation(param), pairs);
    REQUIRE(r.ratios.size() == 1);
    CHECK(std::abs(r.ratios[0] - std::log(1.5) / std::log(2.0)) < 1e-9);
    CHECK(r.max_ratio < 1.0);

    // Degenerate pairs are excluded.
    std::vector<std::pair<SiegelPoint, SiegelPoint>> degenerate{
        {center_point(2), center_point(2)}};
    CHECK(contraction_check(siegel_translation(param), degenerate)
              .ratios.empty());

    CHECK_THROWS_AS(
        contraction_check(BlockSymplectic::from_matrix(standard_j(2)), pairs),
        WrongShape);
}

TEST_CASE("contraction over sampled translation parameters") {
    std::mt19937_64 rng(157);
    for (int batch = 0; batch < 10; ++batch) {
        SiegelPoint w = random_siegel_point(2, rng);
        std::vector<std::pair<SiegelPoint, SiegelPoint>> pairs;
        for (int k = 0; k < 50; ++k) {
            pairs.emplace_back(random_siegel_point(2, rng),
                               random_siegel_point(2, rng));
        }
        ContractionResult r = contraction_check(siegel_translation(w), pairs);
        CHECK(r.max_ratio < 1.0);

        // Conjugated form P T_W P^-1 contracts as well.
        BlockSymplectic p = random_real_symplectic(2, rng);
        ContractionResult rc = contraction_check(w, p, pairs);
        CHECK(rc.max_ratio < 1.0);
    }
}

TEST_CASE("compression_check fixtures") {
    // n = 1, v = 1: the compression is the identity.
    Matrix z1(1, 1), z2(1, 1);
    z1(0, 0) = Complex(0.4, 1.2);
    z2(0, 0) = Complex(-0.8, 0.5);
    Vector v1(1);
    v1(0) = 1.0;
    CompressionResult same =
        compression_check(v1, make_siegel(z1), make_siegel(z2));
    CHECK(std::abs(same.lhs - same.rhs) < 1e-12);
    CHECK(same.holds);

    // Diagonal case: e1 extracts the (1,1) entries.
    Matrix d1 = Matrix::Zero(2, 2), d2 = Matrix::Zero(2, 2);
    d1(0, 0) = Complex(0.3, 1.0);
    d1(1, 1) = Complex(0.0, 2.0);
    d2(0, 0) = Complex(-0.2, 0.7);
    d2(1, 1) = Complex(0.0, 1.5);
    Vector e1 = Vector::Zero(2);
    e1(0) = 1.0;
    CompressionResult diag =
        compression_check(e1, make_siegel(d1), make_siegel(d2));
    CHECK(diag.lhs ==
          doctest::Approx(hyperbolic_distance(d1(0, 0), d2(0, 0))));
    CHECK(diag.holds);

    Vector zero = Vector::Zero(2);
    CHECK_THROWS_AS(
        compression_check(zero, make_siegel(d1), make_siegel(d2)), ZeroVector);
}

TEST_CASE("compression holds over seeded samples") {
    std::mt19937_64 rng(163);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (Index n : {2, 3, 4}) {
        for (int rep = 0; rep < 200; ++rep) {
            SiegelPoint z1 = random_siegel_point(n, rng);
            SiegelPoint z2 = random_siegel_point(n, rng);
            Vector v(n);
            for (Index i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
            v /= v.norm();
            CHECK(compression_check(v, z1, z2).holds);
        }
    }
}

TEST_CASE("metric axioms on sampled triples") {
    std::mt19937_64 rng(167);
    for (int rep = 0; rep < 300; ++rep) {
        SiegelPoint z1 = random_siegel_point(3, rng);
        SiegelPoint z2 = random_siegel_point(3, rng);
        SiegelPoint z3 = random_siegel_point(3, rng);
        const double d12 = siegel_distance(z1, z2).value;
        const double d21 = siegel_distance(z2, z1).value;
        const double d13 = siegel_distance(z1, z3).value;
        const double d23 = siegel_distance(z2, z3).value;
        CHECK(d12 >= 0.0);
        CHECK(std::abs(d12 - d21) < 1e-9);
        CHECK(d13 <= d12 + d23 + 1e-8);
    }
}
