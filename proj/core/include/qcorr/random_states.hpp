#pragma once

#include "qcorr/complex_matrix.hpp"
#include "qcorr/states.hpp"

#include <array>
#include <random>

namespace qcorr {

using Rng = std::mt19937_64;

// Normalized 4-component column of complex gaussians: uniform on the
// pure-state sphere.
ComplexMatrix random_state_vector(Rng& rng);

DensityMatrix random_pure_state(Rng& rng);

// Convex mixture of `rank` independent random pure states with uniform
// random weights. rank in [1, 4].
DensityMatrix random_mixed_state(Rng& rng, int rank = 4);

// Pinching that zeroes every entry outside the diagonal and
// antidiagonal: rho_X = (rho + (sz(x)sz) rho (sz(x)sz)) / 2. Positivity
// and trace survive (average of two valid states), the X pattern is
// exact.
DensityMatrix project_to_x(const DensityMatrix& rho);

// Haar-distributed SU(2) element.
ComplexMatrix random_local_unitary(Rng& rng);

// (uA (x) uB) rho (uA (x) uB)^dag.
DensityMatrix apply_local_unitaries(const DensityMatrix& rho, const ComplexMatrix& uA,
                                    const ComplexMatrix& uB);

// Uniform direction on the unit sphere.
std::array<double, 3> random_unit_vector(Rng& rng);

}  // namespace qcorr
