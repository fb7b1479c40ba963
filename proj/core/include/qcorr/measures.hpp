#pragma once

#include "qcorr/complex_matrix.hpp"
#include "qcorr/eigen.hpp"
#include "qcorr/states.hpp"

#include <array>

namespace qcorr {

// Value of a correlation measure plus the branch that achieved it.
// value is clipped to 0 from rounding-level negatives (>= -1e-12).
// branch meaning per producer:
//   concurrence_x: 1 = antidiagonal coherence |rho14|-sqrt(rho22 rho33),
//                  2 = inner coherence |rho23|-sqrt(rho11 rho44), 0 = clipped at 0
//   concurrence_general: 1 when positive, 0 when clipped
//   interferometric_power: 1-based Pauli axis of the minimizing branch
struct MeasureResult {
    double value;
    int branch;
};

// The 3x3 real symmetric matrix whose smallest eigenvalue is the
// interferometric power. branch_values carries the diagonal entries;
// when `diagonal` is set (off-diagonal magnitudes < 1e-10, true for
// every scenario state) those are the candidate branch minima directly.
struct MMatrix {
    ComplexMatrix m;
    bool diagonal;
    std::array<double, 3> branch_values;
};

// Closed-form concurrence for X-shaped states (nonzero entries confined
// to the diagonal and antidiagonal within 1e-10; throws
// std::invalid_argument otherwise):
//   C = 2 max{0, |rho14| - sqrt(rho22 rho33), |rho23| - sqrt(rho11 rho44)}.
MeasureResult concurrence_x(const DensityMatrix& rho);

// Concurrence for arbitrary two-qubit states: C = max{0, l1-l2-l3-l4}
// where the l_i are, in descending order, the square roots of the
// eigenvalues of rho (sy(x)sy) rho* (sy(x)sy). Computed as the singular
// values of conj(sqrt(rho)) (sy(x)sy) sqrt(rho) through an 8x8 Hermitian
// dilation, which evaluates exactly those square roots without the
// precision loss of rooting near-zero eigenvalues; agreement with
// concurrence_x on X states is held to 1e-9.
MeasureResult concurrence_general(const DensityMatrix& rho);

MMatrix build_m_matrix(const DensityMatrix& rho);

// Same construction from a caller-supplied eigendecomposition. Public so
// tests can rotate a degenerate eigenspace and confirm M does not care.
MMatrix m_matrix_from_spectrum(const SpectralDecomposition& ed);

// Smallest eigenvalue of M; the worst-case quantum Fisher information
// (over local probe Hamiltonians on qubit A) divided by 4.
MeasureResult interferometric_power(const DensityMatrix& rho);

// Quadratic form n^T M n computed directly from the spectral sum for the
// probe direction n (|n| = 1 within 1e-12), never materializing M.
// Independent assembly path used to cross-check build_m_matrix.
double qfi_directional(const DensityMatrix& rho, const std::array<double, 3>& n);

// min over `resolution` Fibonacci-sphere directions of qfi_directional.
// Brute-force oracle for interferometric_power; resolution >= 100.
double ip_sphere_oracle(const DensityMatrix& rho, int resolution);

}  // namespace qcorr
