#include "qcorr/states.hpp"

#include "qcorr/eigen.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcorr {
namespace {

constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-8;
constexpr double kEigenFloor = -1e-10;

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0, 1]");
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("DensityMatrix: expected a 4x4 matrix");
    if (!m.all_finite()) throw std::invalid_argument("DensityMatrix: non-finite entry");
    if (m.hermiticity_error() > kHermTol)
        throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-10");

    ComplexMatrix sym(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) sym(i, j) = (m(i, j) + std::conj(m(j, i))) * 0.5;
        sym(i, i) = cplx(sym(i, i).real(), 0.0);
    }

    const double tr = sym.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        std::ostringstream msg;
        msg << "DensityMatrix: trace " << tr << " deviates from 1 beyond 1e-8";
        throw std::invalid_argument(msg.str());
    }
    if (tr != 1.0) sym *= cplx(1.0 / tr, 0.0);

    SpectralDecomposition ed = eigh(sym);
    double min_eig = ed.eigenvalues.back();
    for (double q : ed.eigenvalues) min_eig = std::min(min_eig, q);
    if (min_eig < kEigenFloor) {
        std::ostringstream msg;
        msg << "DensityMatrix: eigenvalue " << min_eig << " below -1e-10";
        throw std::invalid_argument(msg.str());
    }

    if (min_eig < 0.0) {
        // Clip rounding-level negatives and rebuild; renormalize since
        // clipping shifts the trace by the clipped mass.
        double total = 0.0;
        for (double& q : ed.eigenvalues) {
            if (q < 0.0) q = 0.0;
            total += q;
        }
        ComplexMatrix rebuilt(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                cplx r(0.0, 0.0);
                for (int k = 0; k < 4; ++k)
                    r += ed.eigenvalues[static_cast<size_t>(k)] * ed.eigenvectors(i, k) *
                         std::conj(ed.eigenvectors(j, k));
                rebuilt(i, j) = r / total;
            }
        m_ = rebuilt;
    } else {
        m_ = sym;
    }
}

DensityMatrix validate(const ComplexMatrix& m) { return DensityMatrix(m); }

DensityMatrix make_werner(double alpha) {
    check_alpha(alpha);
    ComplexMatrix m(4, 4);
    m(0, 0) = (1.0 - alpha) / 4.0;
    m(1, 1) = (1.0 + alpha) / 4.0;
    m(2, 2) = (1.0 + alpha) / 4.0;
    m(3, 3) = (1.0 - alpha) / 4.0;
    m(1, 2) = -alpha / 2.0;
    m(2, 1) = -alpha / 2.0;
    return DensityMatrix(m);
}

DensityMatrix make_schmidt_pure(double alpha) {
    check_alpha(alpha);
    const double coherence = std::sqrt(alpha * (1.0 - alpha));
    ComplexMatrix m(4, 4);
    m(0, 0) = 1.0 - alpha;
    m(3, 3) = alpha;
    m(0, 3) = coherence;
    m(3, 0) = coherence;
    return DensityMatrix(m);
}

DensityMatrix make_state(const StateFamily& family) {
    switch (family.kind) {
        case StateKind::Werner: return make_werner(family.alpha);
        case StateKind::SchmidtPure: return make_schmidt_pure(family.alpha);
    }
    throw std::invalid_argument("make_state: unknown state kind");
}

}  // namespace qcorr
