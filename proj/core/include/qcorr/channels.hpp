#pragma once

#include "qcorr/complex_matrix.hpp"
#include "qcorr/states.hpp"

#include <string>
#include <vector>

namespace qcorr {

// Single-qubit channel in Kraus form. Operators are public so tests can
// tamper with a copy and watch completeness_residual() flag it; the
// constructor rejects sets whose completeness residual exceeds 1e-12.
struct KrausChannel {
    std::string name;
    std::vector<ComplexMatrix> operators;  // each 2x2
    double gamma = 0.0;
    double q = 0.0;  // meaningful for the damping channel only

    KrausChannel(std::string name, std::vector<ComplexMatrix> operators,
                 double gamma, double q);

    // Largest |entry| of (sum_i E_i^dag E_i) - I.
    double completeness_residual() const;

    static KrausChannel identity();
};

// gamma(t) = 1 - exp(-Gamma t): damping progress from a decay rate and a
// time. All channel constructors take gamma directly; this is the
// convenience converter for callers who think in t.
struct TimeParams {
    double Gamma;
    double t;
    double gamma() const;
};

// E0 = diag(1, sqrt(1-gamma)), E1 = diag(0, sqrt(gamma)): phase damping,
// no energy exchange.
KrausChannel dephasing(double gamma);

// Generalized amplitude damping toward a bath with stationary excited
// population 1-q; q = 1 is the zero-temperature limit (relax to |0>).
KrausChannel gad(double gamma, double q);

// Isotropic Pauli noise: E0 = sqrt(1-3 gamma/4) I, Ei = sqrt(gamma/4) sigma_i.
KrausChannel depolarizing(double gamma);

// rho' = sum_{i,j} (E_i (x) F_j) rho (E_i (x) F_j)^dag with chA on the
// first qubit and chB on the second; the output is validated.
DensityMatrix apply_local_pair(const DensityMatrix& rho, const KrausChannel& chA,
                               const KrausChannel& chB);

// apply_local_pair with `first` on both qubits, then with `second` on
// both qubits. Sequential composition; the combined-noise scenario uses
// equal gamma for both stages.
DensityMatrix compose(const DensityMatrix& rho, const KrausChannel& first,
                      const KrausChannel& second);

}  // namespace qcorr
