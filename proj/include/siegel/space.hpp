#pragma once

// The Siegel upper half space (symmetric Z = X + iY with Y positive
// definite), its lower twin (Y negative definite), and conjugation
// between the two.

#include "siegel/core.hpp"

#include <random>

namespace siegel {

// Validated point of the upper space.  x and y are the real symmetric
// parts of z; min_eig_y is cached at construction.
struct SiegelPoint {
    Index n = 0;
    Matrix z;
    RealMatrix x;
    RealMatrix y;
    double min_eig_y = 0.0;
};

// Same shape with Y negative definite; min_eig_neg_y caches the smallest
// eigenvalue of -Y.
struct LowerSiegelPoint {
    Index n = 0;
    Matrix z;
    RealMatrix x;
    RealMatrix y;
    double min_eig_neg_y = 0.0;
};

// Validates symmetry (NotSymmetric) and positive definiteness of the
// imaginary part (ImaginaryPartNotPD).
SiegelPoint make_siegel(const Matrix& z, const Tolerance& tol = {});
LowerSiegelPoint make_lower_siegel(const Matrix& z, const Tolerance& tol = {});

// i * I_n, the base point fixed by the stabilizer K.
SiegelPoint center_point(Index n, const Tolerance& tol = {});

// Entrywise conjugation swaps the two spaces; an involution.
SiegelPoint conjugate_point(const LowerSiegelPoint& z);
LowerSiegelPoint conjugate_point(const SiegelPoint& z);

// Z = X + iY with X random symmetric and Y random SPD (eigenvalues
// bounded away from zero).  Deterministic given the generator state.
SiegelPoint random_siegel_point(Index n, std::mt19937_64& rng,
                                const Tolerance& tol = {});
LowerSiegelPoint random_lower_siegel_point(Index n, std::mt19937_64& rng,
                                           const Tolerance& tol = {});

RealMatrix random_symmetric(Index n, std::mt19937_64& rng, double scale = 1.0);
RealMatrix random_spd(Index n, std::mt19937_64& rng);

}  // namespace siegel
