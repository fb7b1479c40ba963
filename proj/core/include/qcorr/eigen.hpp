#pragma once

#include "qcorr/complex_matrix.hpp"

#include <vector>

namespace qcorr {

// Eigensystem of a Hermitian matrix. Eigenvalues are sorted descending;
// ties keep first-encountered order so repeated runs and degenerate
// spectra produce identical column layouts. Column i of eigenvectors
// pairs with eigenvalues[i].
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Cyclic complex Jacobi for small Hermitian matrices (n in {2, 3, 4}).
//
// Input must be Hermitian within max-entry asymmetry 1e-10 (throws
// std::invalid_argument otherwise); it is symmetrized before iterating,
// which is a bitwise no-op for exactly Hermitian input. Convergence is
// off-diagonal Frobenius norm < 1e-13 with a 100-sweep cap, tuned for
// the O(1)-normed matrices this library works with; failure to converge
// or to reconstruct the input within `tol` throws std::runtime_error
// carrying the residual.
//
// Rotations with an exactly zero pivot are skipped, so block structure
// in the input (e.g. the X pattern of the scenario states) survives into
// the eigenvectors exactly instead of being smeared by near-identity
// rotations. Downstream measures rely on this.
SpectralDecomposition eigh(const ComplexMatrix& a, double tol = 1e-10);

namespace detail {

// Same algorithm without the public size gate; accepts n in [1, 8].
// Exists for the 8x8 Hermitian dilation used by the general concurrence.
SpectralDecomposition eigh_upto8(const ComplexMatrix& a, double tol = 1e-10);

}  // namespace detail

}  // namespace qcorr
