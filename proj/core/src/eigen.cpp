#include "qcorr/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcorr {
namespace {

constexpr double kOffDiagTarget = 1e-13;
constexpr int kMaxSweeps = 100;
constexpr double kHermTol = 1e-10;

double off_diag_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (int p = 0; p < a.rows(); ++p)
        for (int q = 0; q < a.cols(); ++q)
            if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
}

// One Jacobi rotation zeroing a(p,q). The pivot is nonzero by the
// caller's check. Phase w = a(p,q)/|a(p,q)| reduces the problem to the
// real symmetric 2x2 case; |t| <= 1 keeps the rotation angle within 45
// degrees, which is what makes the sweep converge and keeps eigenvalue
// order stable under tiny perturbations.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const cplx apq = a(p, q);
    const double abs_apq = std::abs(apq);
    const cplx w = apq / abs_apq;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * abs_apq);
    double t;
    if (tau >= 0.0)
        t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = a.rows();
    const cplx sw = s * w;        // s e^{i phi}
    const cplx swc = std::conj(sw);  // s e^{-i phi}

    // A <- U^dagger A U with U = [[c, -s w], [s conj(w), c]] on (p, q).
    for (int k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = c * akp + swc * akq;
        a(k, q) = -sw * akp + c * akq;
        a(p, k) = std::conj(a(k, p));
        a(q, k) = std::conj(a(k, q));
    }
    const double new_pp = app * c * c + 2.0 * abs_apq * c * s + aqq * s * s;
    const double new_qq = app * s * s - 2.0 * abs_apq * c * s + aqq * c * c;
    a(p, p) = new_pp;
    a(q, q) = new_qq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (int k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = c * vkp + swc * vkq;
        v(k, q) = -sw * vkp + c * vkq;
    }
}

SpectralDecomposition jacobi(const ComplexMatrix& input, double tol) {
    const int n = input.rows();

    // Symmetrized working copy; exact Hermitian input passes through
    // bitwise, near-Hermitian input gets a real diagonal.
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a(i, j) = (input(i, j) + std::conj(input(j, i))) * 0.5;
        a(i, i) = cplx(a(i, i).real(), 0.0);
    }

    ComplexMatrix v = ComplexMatrix::identity(n);
    double off = off_diag_frobenius(a);
    int sweep = 0;
    while (off >= kOffDiagTarget) {
        if (sweep++ == kMaxSweeps) {
            std::ostringstream msg;
            msg << "eigh: no convergence after " << kMaxSweeps
                << " sweeps; off-diagonal residual " << off;
            throw std::runtime_error(msg.str());
        }
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > 0.0) rotate(a, v, p, q);
        off = off_diag_frobenius(a);
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    SpectralDecomposition out;
    out.eigenvalues.resize(static_cast<size_t>(n));
    out.eigenvectors = ComplexMatrix(n, n);
    for (int col = 0; col < n; ++col) {
        out.eigenvalues[static_cast<size_t>(col)] = a(order[static_cast<size_t>(col)], order[static_cast<size_t>(col)]).real();
        for (int row = 0; row < n; ++row)
            out.eigenvectors(row, col) = v(row, order[static_cast<size_t>(col)]);
    }

    // Reconstruction gate: sum_i q_i |psi_i><psi_i| must reproduce the
    // symmetrized input entrywise within tol.
    double resid = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx r(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                r += out.eigenvalues[static_cast<size_t>(k)] * out.eigenvectors(i, k) *
                     std::conj(out.eigenvectors(j, k));
            resid = std::max(resid, std::abs(r - (input(i, j) + std::conj(input(j, i))) * 0.5));
        }
    if (resid > tol) {
        std::ostringstream msg;
        msg << "eigh: reconstruction residual " << resid << " exceeds tolerance " << tol;
        throw std::runtime_error(msg.str());
    }
    return out;
}

void check_input(const ComplexMatrix& a, int min_n, int max_n) {
    if (a.rows() != a.cols()) throw std::invalid_argument("eigh: matrix not square");
    if (a.rows() < min_n || a.rows() > max_n)
        throw std::invalid_argument("eigh: unsupported dimension " + std::to_string(a.rows()));
    if (!a.all_finite()) throw std::invalid_argument("eigh: non-finite entry");
    if (a.hermiticity_error() > kHermTol)
        throw std::invalid_argument("eigh: input not Hermitian within 1e-10");
}

}  // namespace

SpectralDecomposition eigh(const ComplexMatrix& a, double tol) {
    check_input(a, 2, 4);
    return jacobi(a, tol);
}

namespace detail {

SpectralDecomposition eigh_upto8(const ComplexMatrix& a, double tol) {
    check_input(a, 1, 8);
    return jacobi(a, tol);
}

}  // namespace detail

}  // namespace qcorr
