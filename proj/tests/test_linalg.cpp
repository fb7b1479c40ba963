#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcorr/complex_matrix.hpp"
#include "qcorr/eigen.hpp"

#include <cmath>
#include <random>

using namespace qcorr;

namespace {

ComplexMatrix random_hermitian(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix a(n, n);
    for (int r = 0; r < n; ++r) {
        a(r, r) = gauss(rng);
        for (int c = r + 1; c < n; ++c) {
            a(r, c) = cplx(gauss(rng), gauss(rng));
            a(c, r) = std::conj(a(r, c));
        }
    }
    return a;
}

double reconstruction_error(const ComplexMatrix& a, const SpectralDecomposition& ed) {
    const int n = a.rows();
    ComplexMatrix scaled = ed.eigenvectors;
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) scaled(r, c) *= ed.eigenvalues[static_cast<size_t>(c)];
    return max_abs_diff(scaled * ed.eigenvectors.adjoint(), a);
}

}  // namespace

TEST_CASE("pauli algebra") {
    const ComplexMatrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
    const cplx i(0.0, 1.0);

    CHECK(max_abs_diff(sx * sy, i * sz) == 0.0);
    CHECK(max_abs_diff(sy * sz, i * sx) == 0.0);
    CHECK(max_abs_diff(sz * sx, i * sy) == 0.0);
    for (const ComplexMatrix& s : paulis()) {
        CHECK(max_abs_diff(s * s, ComplexMatrix::identity(2)) == 0.0);
        CHECK(s.hermiticity_error() == 0.0);
        CHECK(std::abs(s.trace()) == 0.0);
    }
}

TEST_CASE("kron mixed product") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = random_hermitian(rng, 2), b = random_hermitian(rng, 2);
        const ComplexMatrix c = random_hermitian(rng, 2), d = random_hermitian(rng, 2);
        CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) <= 1e-10);
    }
    // Shape of a rectangular product.
    ComplexMatrix tall(3, 1);
    tall(0, 0) = 1.0;
    tall(1, 0) = 2.0;
    tall(2, 0) = cplx(0.0, 1.0);
    const ComplexMatrix k = kron(tall, pauli_x());
    CHECK(k.rows() == 6);
    CHECK(k.cols() == 2);
    CHECK(k(0, 1) == cplx(1.0, 0.0));
    CHECK(k(4, 1) == cplx(0.0, 1.0));
}

TEST_CASE("matrix basics") {
    ComplexMatrix a(2, 3);
    a(0, 0) = cplx(1.0, 2.0);
    a(1, 2) = cplx(0.0, -1.0);
    const ComplexMatrix ad = a.adjoint();
    CHECK(ad.rows() == 3);
    CHECK(ad(0, 0) == std::conj(a(0, 0)));
    CHECK(ad(2, 1) == std::conj(a(1, 2)));
    CHECK(a.max_abs() == doctest::Approx(std::sqrt(5.0)));
    CHECK(a.all_finite());
    a(1, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_FALSE(a.all_finite());
}

TEST_CASE("two by two closed-form eigenvalues") {
    // [[a, b+ic], [b-ic, d]] has eigenvalues (a+d)/2 +- sqrt(((a-d)/2)^2 + b^2 + c^2).
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = u(rng), d = u(rng), b = u(rng), c = u(rng);
        ComplexMatrix m(2, 2);
        m(0, 0) = a;
        m(1, 1) = d;
        m(0, 1) = cplx(b, c);
        m(1, 0) = cplx(b, -c);
        const double mid = 0.5 * (a + d);
        const double rad = std::sqrt(0.25 * (a - d) * (a - d) + b * b + c * c);
        const SpectralDecomposition ed = eigh(m);
        CHECK(ed.eigenvalues[0] == doctest::Approx(mid + rad).epsilon(1e-8));
        CHECK(ed.eigenvalues[1] == doctest::Approx(mid - rad).epsilon(1e-8));
    }
}

TEST_CASE("known spectrum round trip") {
    // Build V D V^dag from a hand-picked unitary and recover D.
    const double th = 0.7;
    ComplexMatrix v(3, 3);
    v(0, 0) = std::cos(th);
    v(0, 1) = -std::sin(th);
    v(1, 0) = cplx(0.0, std::sin(th));
    v(1, 1) = cplx(0.0, std::cos(th));
    v(2, 2) = 1.0;
    CHECK(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(3)) <= 1e-15);

    ComplexMatrix d(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = -2.0;
    const ComplexMatrix a = v * d * v.adjoint();
    const SpectralDecomposition ed = eigh(a);
    CHECK(ed.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(ed.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ed.eigenvalues[2] == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(reconstruction_error(a, ed) <= 1e-10);
}

TEST_CASE("diagonal input stays exact") {
    ComplexMatrix a(4, 4);
    a(0, 0) = 2.0;
    a(1, 1) = 5.0;
    a(2, 2) = 5.0;
    a(3, 3) = 1.0;
    const SpectralDecomposition ed = eigh(a);
    CHECK(ed.eigenvalues == std::vector<double>{5.0, 5.0, 2.0, 1.0});
    // No rotation happens, so eigenvectors are exact basis columns and the
    // degenerate pair keeps its original encounter order.
    CHECK(ed.eigenvectors(1, 0) == cplx(1.0, 0.0));
    CHECK(ed.eigenvectors(2, 1) == cplx(1.0, 0.0));
    CHECK(ed.eigenvectors(0, 2) == cplx(1.0, 0.0));
    CHECK(ed.eigenvectors(3, 3) == cplx(1.0, 0.0));
    CHECK(ed.eigenvectors(0, 0) == cplx(0.0, 0.0));
}

TEST_CASE("random hermitian properties") {
    std::mt19937_64 rng(23);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            const ComplexMatrix a = random_hermitian(rng, n);
            const SpectralDecomposition ed = eigh(a);

            double trace_sum = 0.0;
            for (double q : ed.eigenvalues) trace_sum += q;
            CHECK(std::abs(trace_sum - a.trace().real()) <= 1e-10);

            for (size_t k = 1; k < ed.eigenvalues.size(); ++k)
                CHECK(ed.eigenvalues[k - 1] >= ed.eigenvalues[k]);

            CHECK(max_abs_diff(ed.eigenvectors.adjoint() * ed.eigenvectors,
                               ComplexMatrix::identity(n)) <= 1e-12);
            CHECK(reconstruction_error(a, ed) <= 1e-10);
        }
    }
}

TEST_CASE("eight by eight through the extended solver") {
    // [[0, B], [B^dag, 0]] has eigenvalues +-(singular values of B); for
    // unitary B those are all 1.
    const ComplexMatrix b = kron(pauli_x(), pauli_z());
    ComplexMatrix dil(8, 8);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            dil(r, c + 4) = b(r, c);
            dil(r + 4, c) = std::conj(b(c, r));
        }
    const SpectralDecomposition ed = detail::eigh_upto8(dil);
    for (int k = 0; k < 4; ++k) CHECK(ed.eigenvalues[static_cast<size_t>(k)] == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 4; k < 8; ++k) CHECK(ed.eigenvalues[static_cast<size_t>(k)] == doctest::Approx(-1.0).epsilon(1e-12));

    std::mt19937_64 rng(31);
    const ComplexMatrix h = random_hermitian(rng, 8);
    CHECK(reconstruction_error(h, detail::eigh_upto8(h)) <= 1e-10);
}

TEST_CASE("input rejection") {
    ComplexMatrix non_herm(2, 2);
    non_herm(0, 1) = 1.0;  // missing the mirror entry
    CHECK_THROWS_AS(eigh(non_herm), std::invalid_argument);

    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(eigh(random_hermitian(rng, 5)), std::invalid_argument);
    CHECK_THROWS_AS(eigh(ComplexMatrix(2, 3)), std::invalid_argument);

    ComplexMatrix one(1, 1);
    one(0, 0) = 1.0;
    CHECK_THROWS_AS(eigh(one), std::invalid_argument);
    CHECK_NOTHROW(detail::eigh_upto8(one));

    ComplexMatrix bad(2, 2);
    bad(0, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(eigh(bad), std::invalid_argument);
}
