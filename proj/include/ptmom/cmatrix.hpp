#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ptmom {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Plain storage plus the handful of
// operations the toolkit needs; heavy products go through the kernels below.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cplx s);
    CMatrix operator+(const CMatrix& o) const { CMatrix r = *this; r += o; return r; }
    CMatrix operator-(const CMatrix& o) const { CMatrix r = *this; r -= o; return r; }
    CMatrix operator*(cplx s) const { CMatrix r = *this; r *= s; return r; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    // max_ij |M_ij - conj(M_ji)|
    double hermiticity_defect() const;
    // M <- (M + M^dagger)/2
    void symmetrize_hermitian();

    bool operator==(const CMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

namespace kernels {

// C = A * B, plain serial triple loop (reference path, kept for testing).
CMatrix matmul_serial(const CMatrix& a, const CMatrix& b);

// C = A * B, rows distributed over OpenMP threads. Each output row is
// accumulated in a fixed k-order, so the result is bitwise identical to the
// serial kernel for any thread count.
CMatrix matmul_parallel(const CMatrix& a, const CMatrix& b);

// dispatch: parallel kernel above a small-size cutoff
CMatrix matmul(const CMatrix& a, const CMatrix& b);

std::vector<cplx> matvec(const CMatrix& a, const std::vector<cplx>& x);

}  // namespace kernels

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) { return kernels::matmul(a, b); }

}  // namespace ptmom
