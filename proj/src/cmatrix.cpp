#include "ptmom/cmatrix.hpp"

#include <cmath>
#include <stdexcept>

namespace ptmom {

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMatrix: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMatrix: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

CMatrix CMatrix::transpose() const {
    CMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

cplx CMatrix::trace() const {
    if (!square()) throw std::invalid_argument("CMatrix::trace: not square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double CMatrix::hermiticity_defect() const {
    if (!square()) throw std::invalid_argument("CMatrix: not square");
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

void CMatrix::symmetrize_hermitian() {
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, i) = cplx((*this)(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < cols_; ++j) {
            cplx v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
            (*this)(i, j) = v;
            (*this)(j, i) = std::conj(v);
        }
    }
}

namespace kernels {

static void matmul_row(const CMatrix& a, const CMatrix& b, CMatrix& c, std::size_t i) {
    const std::size_t n = a.cols(), m = b.cols();
    cplx* crow = c.data() + i * m;
    const cplx* arow = a.data() + i * n;
    for (std::size_t k = 0; k < n; ++k) {
        const cplx aik = arow[k];
        if (aik == cplx(0.0)) continue;
        const cplx* brow = b.data() + k * m;
        for (std::size_t j = 0; j < m; ++j) crow[j] += aik * brow[j];
    }
}

CMatrix matmul_serial(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) matmul_row(a, b, c, i);
    return c;
}

CMatrix matmul_parallel(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
    CMatrix c(a.rows(), b.cols());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)a.rows(); ++i) matmul_row(a, b, c, (std::size_t)i);
    return c;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.rows() >= 64) return matmul_parallel(a, b);
    return matmul_serial(a, b);
}

std::vector<cplx> matvec(const CMatrix& a, const std::vector<cplx>& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matvec: shape mismatch");
    std::vector<cplx> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx s = 0.0;
        const cplx* row = a.data() + i * a.cols();
        for (std::size_t j = 0; j < a.cols(); ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

}  // namespace kernels
}  // namespace ptmom
