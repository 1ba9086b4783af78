#include "siegel/action.hpp"
#include "siegel/space.hpp"
#include "siegel/symplectic.hpp"

#include <doctest.h>

#include <random>

using namespace siegel;

namespace {

// S = [[I, iI], [iI, O]]: complex symplectic whose action pushes iI out of
// the upper space.
BlockSymplectic example_one(Index n) {
    const Matrix id = Matrix::Identity(n, n);
    const Matrix i_id = Complex(0, 1) * id;
    return BlockSymplectic::from_blocks(id, i_id, i_id, Matrix::Zero(n, n));
}

}  // namespace

TEST_CASE("standard_j fixtures") {
    Matrix j1 = standard_j(1);
    CHECK(j1(0, 1) == Complex(1.0));
    CHECK(j1(1, 0) == Complex(-1.0));
    CHECK(j1(0, 0) == Complex(0.0));

    Matrix j2 = standard_j(2);
    CHECK(max_abs(j2.topRightCorner(2, 2) - Matrix::Identity(2, 2)) == 0.0);
    CHECK(max_abs(j2.bottomLeftCorner(2, 2) + Matrix::Identity(2, 2)) == 0.0);
    CHECK(max_abs(j2.transpose() * j2 - Matrix::Identity(4, 4)) == 0.0);
    CHECK(max_abs(j2 * j2 + Matrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("is_symplectic fixtures") {
    CHECK(is_symplectic(BlockSymplectic::from_matrix(standard_j(2))));
    CHECK(is_symplectic(example_one(2)));

    std::mt19937_64 rng(31);
    SiegelPoint z = random_siegel_point(3, rng);
    CHECK(is_symplectic(upper_witness(z)));
}

TEST_CASE("is_symplectic_blockwise agrees with the J-form predicate") {
    CHECK(is_symplectic_blockwise(
        BlockSymplectic::from_matrix(Matrix::Identity(4, 4))));
    CHECK(is_symplectic_blockwise(example_one(2)));

    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int rep = 0; rep < 2000; ++rep) {
        Matrix m(4, 4);
        for (Index i = 0; i < 4; ++i)
            for (Index j = 0; j < 4; ++j) m(i, j) = Complex(dist(rng), dist(rng));
        BlockSymplectic s = BlockSymplectic::from_matrix(m);
        CHECK(is_symplectic(s) == is_symplectic_blockwise(s));
    }
    // And on genuine members of the group.
    for (int rep = 0; rep < 200; ++rep) {
        BlockSymplectic s = random_real_symplectic(2, rng);
        CHECK(is_symplectic(s));
        CHECK(is_symplectic_blockwise(s));
    }
}

TEST_CASE("is_antisymplectic fixtures") {
    Matrix i_id = Complex(0, 1) * Matrix::Identity(4, 4);
    CHECK(is_antisymplectic(BlockSymplectic::from_matrix(i_id)));
    CHECK(is_antisymplectic(lower_reflector(2)));

    std::mt19937_64 rng(41);
    LowerSiegelPoint z = random_lower_siegel_point(2, rng);
    CHECK(is_antisymplectic(lower_witness(z)));
}

TEST_CASE("products mix symplectic and antisymplectic as expected") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 100; ++rep) {
        BlockSymplectic a1 = random_real_antisymplectic(2, rng);
        BlockSymplectic a2 = random_real_antisymplectic(2, rng);
        BlockSymplectic s = random_real_symplectic(2, rng);
        CHECK(is_symplectic(BlockSymplectic::from_matrix(a1.s * a2.s)));
        CHECK(is_antisymplectic(BlockSymplectic::from_matrix(s.s * a1.s)));
        CHECK(is_antisymplectic(BlockSymplectic::from_matrix(a1.s * s.s)));
    }
}

TEST_CASE("classifier_matrix: blockwise formula and fixtures") {
    std::mt19937_64 rng(47);
    BlockSymplectic s = random_real_symplectic(2, rng);
    CHECK(max_abs(classifier_matrix(s)) < 1e-12);

    BlockSymplectic e1 = example_one(2);
    Matrix m = classifier_matrix(e1);
    CHECK(max_abs(m.topLeftCorner(2, 2) + 2.0 * Matrix::Identity(2, 2)) < 1e-14);
    CHECK_FALSE(is_psd(m).psd);

    // Blockwise formula M = [[i(A*C - C*A), i(A*D - C*B - I)],
    //                        [i(B*C - D*A + I), i(B*D - D*B)]].
    for (int rep = 0; rep < 50; ++rep) {
        BlockSymplectic t = random_complex_symplectic(2, rng);
        const Matrix a = t.a(), b = t.b(), c = t.c(), d = t.d();
        const Matrix id = Matrix::Identity(2, 2);
        const Complex i(0, 1);
        Matrix expect(4, 4);
        expect.topLeftCorner(2, 2) = i * (a.adjoint() * c - c.adjoint() * a);
        expect.topRightCorner(2, 2) = i * (a.adjoint() * d - c.adjoint() * b - id);
        expect.bottomLeftCorner(2, 2) =
            i * (b.adjoint() * c - d.adjoint() * a + id);
        expect.bottomRightCorner(2, 2) = i * (b.adjoint() * d - d.adjoint() * b);
        CHECK(max_abs(classifier_matrix(t) - expect) < 1e-12);
        CHECK(hermitian_defect(classifier_matrix(t)) < 1e-12);
    }
}

TEST_CASE("classify_action fixtures") {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 20; ++rep) {
        ActionClassification c = classify_action(random_real_symplectic(2, rng));
        CHECK(c.verdict == ActionVerdict::PreservesSiegel);
    }

    BlockSymplectic iq = random_purely_imaginary_symplectic(2, rng);
    ActionClassification c = classify_action(iq);
    CHECK(c.verdict == ActionVerdict::MapsToLower);
    CHECK(c.is_purely_imaginary);

    ActionClassification e1 = classify_action(example_one(2));
    CHECK(e1.verdict == ActionVerdict::Undetermined);
    CHECK(e1.is_symplectic);
    CHECK(e1.min_eigenvalue < 0.0);
    // And the action indeed leaves the upper space at iI.
    ActionOutcome out = mobius_apply(example_one(2), center_point(2));
    CHECK(out.status == ActionStatus::InLower);
}

TEST_CASE("block_psd_criterion fixtures") {
    const Matrix id = Matrix::Identity(2, 2);
    SelfAdjointBlocks trivial{id, Matrix::Zero(2, 2), id};
    BlockPsdResult r = block_psd_criterion(trivial);
    CHECK(r.verdict);
    CHECK(r.via_condition2);
    CHECK(r.via_condition3);

    SelfAdjointBlocks schur_neg{id, 2.0 * id, id};
    BlockPsdResult r2 = block_psd_criterion(schur_neg);
    CHECK_FALSE(r2.verdict);
    // eigenvalues of the assembled matrix are -1 and 3
    PsdVerdict direct = is_psd(schur_neg.assemble());
    CHECK_FALSE(direct.psd);
    CHECK(direct.min_eigenvalue == doctest::Approx(-1.0));
}

TEST_CASE("classifier_block_conditions fixtures") {
    std::mt19937_64 rng(59);
    BlockConditions real_case =
        classifier_block_conditions(random_real_symplectic(2, rng));
    CHECK(real_case.cond1);
    CHECK(real_case.cond2);
    CHECK(real_case.cond3);

    BlockConditions e1 = classifier_block_conditions(example_one(2));
    CHECK_FALSE(e1.cond1);  // i(A*C - C*A) = -2I

    BlockSymplectic i_id = BlockSymplectic::from_matrix(
        Complex(0, 1) * Matrix::Identity(4, 4));
    CHECK(classifier_block_conditions(i_id).cond1);
}

TEST_CASE("upper_witness fixtures") {
    SiegelPoint center = center_point(2);
    CHECK(max_abs(upper_witness(center).s - Matrix::Identity(4, 4)) < 1e-14);

    const double y = 4.0;
    SiegelPoint scaled =
        make_siegel(Complex(0, y) * Matrix::Identity(2, 2));
    Matrix expect = Matrix::Zero(4, 4);
    expect.topLeftCorner(2, 2) = 2.0 * Matrix::Identity(2, 2);
    expect.bottomRightCorner(2, 2) = 0.5 * Matrix::Identity(2, 2);
    CHECK(max_abs(upper_witness(scaled).s - expect) < 1e-12);

    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 50; ++rep) {
        SiegelPoint z = random_siegel_point(3, rng);
        BlockSymplectic sz = upper_witness(z);
        CHECK(is_real(sz, Tolerance{}));
        CHECK(is_symplectic(sz));
        ActionOutcome out = mobius_apply(sz, center_point(3));
        REQUIRE(out.status == ActionStatus::InUpper);
        CHECK(max_abs(out.result - z.z) < 1e-9);
    }
}

TEST_CASE("lower_witness fixtures") {
    LowerSiegelPoint neg_center =
        make_lower_siegel(Complex(0, -1) * Matrix::Identity(2, 2));
    CHECK(max_abs(lower_witness(neg_center).s - lower_reflector(2).s) < 1e-14);

    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 50; ++rep) {
        LowerSiegelPoint z = random_lower_siegel_point(2, rng);
        BlockSymplectic sz = lower_witness(z);
        CHECK(is_real(sz, Tolerance{}));
        CHECK(is_antisymplectic(sz));
        ActionOutcome out = mobius_apply(sz, center_point(2));
        REQUIRE(out.status == ActionStatus::InLower);
        CHECK(max_abs(out.result - z.z) < 1e-9);
    }
}

TEST_CASE("stabilizer membership") {
    CHECK(is_in_stabilizer_k(
        BlockSymplectic::from_matrix(Matrix::Identity(4, 4))));
    CHECK(is_in_stabilizer_k(BlockSymplectic::from_matrix(standard_j(2))));

    SiegelPoint moved = make_siegel(Complex(0, 2) * Matrix::Identity(2, 2));
    CHECK_FALSE(is_in_stabilizer_k(upper_witness(moved)));

    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 50; ++rep) {
        CHECK(is_in_stabilizer_k(random_orthogonal_symplectic(2, rng)));
    }

    BlockSymplectic complex_s = BlockSymplectic::from_matrix(
        Complex(0, 1) * Matrix::Identity(4, 4));
    CHECK_THROWS_AS(is_in_stabilizer_k(complex_s), NotRealSymplectic);
}

TEST_CASE("random_real_symplectic samples are exactly in the group") {
    std::mt19937_64 rng(73);
    for (Index n : {1, 2, 3}) {
        for (int rep = 0; rep < 200; ++rep) {
            BlockSymplectic s = random_real_symplectic(n, rng);
            CHECK(is_symplectic(s));
            CHECK(is_real(s, Tolerance{}));
            CHECK(classify_action(s).verdict == ActionVerdict::PreservesSiegel);
            CHECK(std::abs(std::abs(s.s.determinant()) - 1.0) < 1e-6);
        }
    }
}

TEST_CASE("canonical_sign picks one representative of {S, -S}") {
    std::mt19937_64 rng(79);
    for (int rep = 0; rep < 100; ++rep) {
        BlockSymplectic s = random_real_symplectic(2, rng);
        BlockSymplectic neg = s;
        neg.s = -s.s;
        CHECK(max_abs(canonical_sign(s).s - canonical_sign(neg).s) == 0.0);
    }
}
