#include "qcorr/measures.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qcorr {
namespace {

constexpr double kXShapeTol = 1e-10;
constexpr double kPairCutoff = 1e-12;   // q_i + q_l below this: term excluded
constexpr double kDiagonalTol = 1e-10;  // M off-diagonal below this: branch = diagonal index
constexpr double kPsdFloor = -1e-10;

double clip_measure(double value, const char* what) {
    if (value >= 0.0) return value;
    if (value < kPsdFloor) {
        std::ostringstream msg;
        msg << what << ": negative value " << value << " beyond rounding tolerance";
        throw std::runtime_error(msg.str());
    }
    return 0.0;
}

// sigma_y (x) sigma_y: the spin-flip kernel. Real entries, exact.
ComplexMatrix spin_flip_kernel() {
    ComplexMatrix s(4, 4);
    s(0, 3) = -1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 0) = -1.0;
    return s;
}

// <psi_i| Op |psi_l> for eigenvector columns i, l.
cplx sandwich(const ComplexMatrix& vecs, const ComplexMatrix& op, int i, int l) {
    cplx acc(0.0, 0.0);
    for (int r = 0; r < 4; ++r) {
        cplx opl(0.0, 0.0);
        for (int c = 0; c < 4; ++c) opl += op(r, c) * vecs(c, l);
        acc += std::conj(vecs(r, i)) * opl;
    }
    return acc;
}

const std::array<ComplexMatrix, 3>& pauli_on_first_qubit() {
    static const std::array<ComplexMatrix, 3> ops = {
        kron(pauli_x(), ComplexMatrix::identity(2)),
        kron(pauli_y(), ComplexMatrix::identity(2)),
        kron(pauli_z(), ComplexMatrix::identity(2)),
    };
    return ops;
}

double qfi_from_spectrum(const SpectralDecomposition& ed, const std::array<double, 3>& n) {
    // (n . sigma) (x) 1 assembled entrywise; no M matrix anywhere.
    ComplexMatrix axis(2, 2);
    axis(0, 0) = n[2];
    axis(0, 1) = cplx(n[0], -n[1]);
    axis(1, 0) = cplx(n[0], n[1]);
    axis(1, 1) = -n[2];
    const ComplexMatrix probe = kron(axis, ComplexMatrix::identity(2));

    double total = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int l = i + 1; l < 4; ++l) {
            const double qi = ed.eigenvalues[static_cast<size_t>(i)];
            const double ql = ed.eigenvalues[static_cast<size_t>(l)];
            const double sum = qi + ql;
            if (sum <= kPairCutoff) continue;
            const double w = (qi - ql) * (qi - ql) / sum;
            if (w == 0.0) continue;
            total += w * std::norm(sandwich(ed.eigenvectors, probe, i, l));
        }
    return total;
}

}  // namespace

MeasureResult concurrence_x(const DensityMatrix& rho) {
    const ComplexMatrix& r = rho.matrix();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j || i + j == 3) continue;
            if (std::abs(r(i, j)) > kXShapeTol)
                throw std::invalid_argument(
                    "concurrence_x: state is not X-shaped within 1e-10");
        }

    const double r11 = r(0, 0).real();
    const double r22 = r(1, 1).real();
    const double r33 = r(2, 2).real();
    const double r44 = r(3, 3).real();
    const double lambda1 = std::abs(r(0, 3)) - std::sqrt(std::max(0.0, r22 * r33));
    const double lambda2 = std::abs(r(1, 2)) - std::sqrt(std::max(0.0, r11 * r44));

    const double best = std::max(lambda1, lambda2);
    if (best <= 0.0) return {0.0, 0};
    return {2.0 * best, lambda1 >= lambda2 ? 1 : 2};
}

MeasureResult concurrence_general(const DensityMatrix& rho) {
    const SpectralDecomposition ed = eigh(rho.matrix());

    // sqrt(rho) from the clipped spectrum. The clip keeps sqrt() off
    // rounding-level negatives and zeroes out noise eigenvalues whose
    // square roots would otherwise inject ~1e-7 into the lambdas.
    const double qmax = ed.eigenvalues.front();
    const double floor = 1e-13 * std::max(1.0, qmax);
    ComplexMatrix root(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx acc(0.0, 0.0);
            for (int k = 0; k < 4; ++k) {
                const double q = ed.eigenvalues[static_cast<size_t>(k)];
                if (q < floor) continue;
                acc += std::sqrt(q) * ed.eigenvectors(i, k) * std::conj(ed.eigenvectors(j, k));
            }
            root(i, j) = acc;
        }

    const ComplexMatrix b = root.conjugate() * spin_flip_kernel() * root;

    // Singular values of b via the Hermitian dilation [[0, b], [b+, 0]],
    // whose spectrum is {+s_i, -s_i}. Since b+ b equals sqrt(rho) (sy sy)
    // rho* (sy sy) sqrt(rho), a similarity transform of the product
    // matrix in the concurrence definition, the s_i are exactly the
    // square roots of that product's eigenvalues.
    ComplexMatrix dilation(8, 8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            dilation(i, 4 + j) = b(i, j);
            dilation(4 + j, i) = std::conj(b(i, j));
        }
    const SpectralDecomposition sd = detail::eigh_upto8(dilation);

    double c = std::max(0.0, sd.eigenvalues[0]);
    for (int k = 1; k < 4; ++k) c -= std::max(0.0, sd.eigenvalues[static_cast<size_t>(k)]);
    if (c <= 0.0) return {0.0, 0};
    return {c, 1};
}

MMatrix m_matrix_from_spectrum(const SpectralDecomposition& ed) {
    if (ed.eigenvectors.rows() != 4 || ed.eigenvectors.cols() != 4 ||
        ed.eigenvalues.size() != 4)
        throw std::invalid_argument("m_matrix_from_spectrum: expected a 4x4 eigensystem");

    const auto& ops = pauli_on_first_qubit();
    ComplexMatrix m(3, 3);
    for (int i = 0; i < 4; ++i)
        for (int l = i + 1; l < 4; ++l) {
            const double qi = ed.eigenvalues[static_cast<size_t>(i)];
            const double ql = ed.eigenvalues[static_cast<size_t>(l)];
            const double sum = qi + ql;
            if (sum <= kPairCutoff) continue;
            const double w = (qi - ql) * (qi - ql) / sum;
            if (w == 0.0) continue;

            std::array<cplx, 3> amp;
            for (size_t mi = 0; mi < 3; ++mi)
                amp[mi] = sandwich(ed.eigenvectors, ops[mi], i, l);

            // Pair (l, i) contributes the conjugate term; folding both
            // into Re(.) absorbs the leading 1/2 of the spectral sum.
            for (int mi = 0; mi < 3; ++mi)
                for (int ni = 0; ni < 3; ++ni) {
                    const cplx term =
                        amp[static_cast<size_t>(mi)] * std::conj(amp[static_cast<size_t>(ni)]);
                    m(mi, ni) += w * term.real();
                }
        }

    MMatrix out;
    out.m = m;
    double off = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) off = std::max(off, std::abs(m(i, j)));
    out.diagonal = off < kDiagonalTol;
    out.branch_values = {m(0, 0).real(), m(1, 1).real(), m(2, 2).real()};
    return out;
}

MMatrix build_m_matrix(const DensityMatrix& rho) {
    return m_matrix_from_spectrum(eigh(rho.matrix()));
}

MeasureResult interferometric_power(const DensityMatrix& rho) {
    const MMatrix mm = build_m_matrix(rho);

    if (mm.diagonal) {
        // Exact-diagonal fast path (every scenario state lands here):
        // the branch is the first minimal Pauli axis, deterministically.
        size_t best = 0;
        for (size_t i = 1; i < 3; ++i)
            if (mm.branch_values[i] < mm.branch_values[best]) best = i;
        return {clip_measure(mm.branch_values[best], "interferometric_power"),
                static_cast<int>(best) + 1};
    }

    const SpectralDecomposition ed = eigh(mm.m);
    const int last = 2;  // descending order: smallest eigenvalue sits last
    double best_mag = -1.0;
    int branch = 1;
    for (int r = 0; r < 3; ++r) {
        const double mag = std::abs(ed.eigenvectors(r, last));
        if (mag > best_mag) {  // strict: first index wins ties
            best_mag = mag;
            branch = r + 1;
        }
    }
    return {clip_measure(ed.eigenvalues[static_cast<size_t>(last)], "interferometric_power"),
            branch};
}

double qfi_directional(const DensityMatrix& rho, const std::array<double, 3>& n) {
    const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::invalid_argument("qfi_directional: direction must be unit length");
    return qfi_from_spectrum(eigh(rho.matrix()), n);
}

double ip_sphere_oracle(const DensityMatrix& rho, int resolution) {
    if (resolution < 100)
        throw std::invalid_argument("ip_sphere_oracle: resolution must be >= 100");

    const SpectralDecomposition ed = eigh(rho.matrix());
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < resolution; ++k) {
        const double z = 1.0 - (2.0 * k + 1.0) / resolution;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double theta = golden_angle * k;
        std::array<double, 3> n = {r * std::cos(theta), r * std::sin(theta), z};
        const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        for (double& v : n) v /= len;
        best = std::min(best, qfi_from_spectrum(ed, n));
    }
    return best;
}

}  // namespace qcorr
