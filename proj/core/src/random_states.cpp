#include "qcorr/random_states.hpp"

#include <cmath>
#include <stdexcept>

namespace qcorr {
namespace {

cplx gaussian(Rng& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    const double re = dist(rng);
    const double im = dist(rng);
    return {re, im};
}

}  // namespace

ComplexMatrix random_state_vector(Rng& rng) {
    ComplexMatrix v(4, 1);
    double norm2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        v(i, 0) = gaussian(rng);
        norm2 += std::norm(v(i, 0));
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < 4; ++i) v(i, 0) *= inv;
    return v;
}

DensityMatrix random_pure_state(Rng& rng) {
    const ComplexMatrix v = random_state_vector(rng);
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix random_mixed_state(Rng& rng, int rank) {
    if (rank < 1 || rank > 4) throw std::invalid_argument("random_mixed_state: rank in [1, 4]");
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> w(static_cast<size_t>(rank));
    double total = 0.0;
    for (double& x : w) {
        x = uni(rng) + 1e-3;  // keep weights bounded away from 0
        total += x;
    }
    ComplexMatrix m(4, 4);
    for (double x : w) {
        const ComplexMatrix v = random_state_vector(rng);
        m += (x / total) * (v * v.adjoint());
    }
    return DensityMatrix(m);
}

DensityMatrix project_to_x(const DensityMatrix& rho) {
    ComplexMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j || i + j == 3)
                m(i, j) = rho.matrix()(i, j);
            // everything else stays exactly zero
        }
    return DensityMatrix(m);
}

ComplexMatrix random_local_unitary(Rng& rng) {
    cplx a = gaussian(rng);
    cplx b = gaussian(rng);
    const double norm = std::sqrt(std::norm(a) + std::norm(b));
    a /= norm;
    b /= norm;
    ComplexMatrix u(2, 2);
    u(0, 0) = a;
    u(0, 1) = -std::conj(b);
    u(1, 0) = b;
    u(1, 1) = std::conj(a);
    return u;
}

DensityMatrix apply_local_unitaries(const DensityMatrix& rho, const ComplexMatrix& uA,
                                    const ComplexMatrix& uB) {
    const ComplexMatrix u = kron(uA, uB);
    return DensityMatrix(u * rho.matrix() * u.adjoint());
}

std::array<double, 3> random_unit_vector(Rng& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::array<double, 3> n{};
    double norm2 = 0.0;
    while (norm2 < 1e-12) {
        norm2 = 0.0;
        for (double& x : n) {
            x = dist(rng);
            norm2 += x * x;
        }
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& x : n) x *= inv;
    return n;
}

}  // namespace qcorr
