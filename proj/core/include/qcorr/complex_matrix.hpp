#pragma once

#include <array>
#include <complex>
#include <vector>

namespace qcorr {

using cplx = std::complex<double>;

// Dense row-major complex matrix sized for two-qubit work (nothing here
// is tuned past 8x8). Entries are kept finite; operations that could
// produce NaN/Inf from valid inputs don't exist in this module.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const cplx& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    cplx trace() const;
    double frobenius_norm() const;
    // Largest |entry|.
    double max_abs() const;
    // Largest |A(r,c) - conj(A(c,r))| over all entries; 0 for exactly Hermitian input.
    double hermiticity_error() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);

// Kronecker product, dimensions (a.rows*b.rows) x (a.cols*b.cols).
// Basis convention downstream: kron(A, B) acts as A on the first qubit,
// B on the second, over {|00>, |01>, |10>, |11>}.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest |a - b| entry; matrices must be same shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
// {sigma_x, sigma_y, sigma_z}, indexed 0..2 (reported branches are 1-based).
const std::array<ComplexMatrix, 3>& paulis();

}  // namespace qcorr
