#pragma once

#include "qcorr/complex_matrix.hpp"

namespace qcorr {

// Two-qubit density matrix over the computational basis {|00>, |01>,
// |10>, |11>}, row-major, 1-based element names rho_ij in comments and
// docs map to (i-1, j-1) indices. Construction validates:
//   - Hermitian within max-entry asymmetry 1e-10 (then symmetrized,
//     a bitwise no-op for exactly Hermitian input),
//   - trace within 1e-8 of 1 (then renormalized to exactly unit trace),
//   - eigenvalues >= -1e-10; tiny negatives are clipped to 0 and the
//     matrix rebuilt from the clipped spectrum, then renormalized.
// Anything outside those tolerances is a real bug upstream, not rounding
// noise, and throws std::invalid_argument. An already-exact state (the
// maximally mixed state, say) passes through unchanged.
class DensityMatrix {
public:
    explicit DensityMatrix(const ComplexMatrix& m);

    const ComplexMatrix& matrix() const { return m_; }
    cplx entry(int r, int c) const { return m_(r, c); }

private:
    ComplexMatrix m_;
};

// Validation entry point for raw matrices; same contract as the ctor.
DensityMatrix validate(const ComplexMatrix& m);

enum class StateKind { Werner, SchmidtPure };

struct StateFamily {
    StateKind kind;
    double alpha;  // in [0, 1]
};

// (1-alpha) I/4 + alpha |Psi-><Psi-| with |Psi-> = (|01> - |10>)/sqrt(2).
// Separable for alpha <= 1/3.
DensityMatrix make_werner(double alpha);

// Projector onto sqrt(1-alpha)|00> + sqrt(alpha)|11>.
DensityMatrix make_schmidt_pure(double alpha);

DensityMatrix make_state(const StateFamily& family);

}  // namespace qcorr
