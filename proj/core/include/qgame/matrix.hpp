#ifndef QGAME_MATRIX_HPP
#define QGAME_MATRIX_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qgame {

using cplx = std::complex<double>;

/// Dense complex matrix of dimension 2 or 4, stored row-major.
/// Large enough for a two-qubit density matrix; no heap allocation.
class Matrix {
public:
    explicit Matrix(int dim) : dim_(dim) {
        if (dim != 2 && dim != 4)
            throw std::invalid_argument("Matrix: dim must be 2 or 4");
    }

    static Matrix identity(int dim) {
        Matrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return dim_; }

    cplx& operator()(int r, int c) { return a_[r * dim_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[r * dim_ + c]; }

    Matrix operator+(const Matrix& o) const {
        check_dim(o);
        Matrix r(dim_);
        for (int i = 0; i < dim_ * dim_; ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_dim(o);
        Matrix r(dim_);
        for (int i = 0; i < dim_ * dim_; ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        check_dim(o);
        Matrix r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                const cplx aik = (*this)(i, k);
                if (aik == cplx{}) continue;
                for (int j = 0; j < dim_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    friend Matrix operator*(cplx s, const Matrix& m) {
        Matrix r(m.dim_);
        for (int i = 0; i < m.dim_ * m.dim_; ++i) r.a_[i] = s * m.a_[i];
        return r;
    }

    friend Matrix operator*(double s, const Matrix& m) { return cplx(s) * m; }

    Matrix adjoint() const {
        Matrix r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    /// max |entry|
    double max_abs() const {
        double m = 0.0;
        for (int i = 0; i < dim_ * dim_; ++i) m = std::max(m, std::abs(a_[i]));
        return m;
    }

    /// max |a_ij - b_ij|
    double max_abs_diff(const Matrix& o) const {
        check_dim(o);
        double m = 0.0;
        for (int i = 0; i < dim_ * dim_; ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
        return m;
    }

    bool is_hermitian(double tol) const { return max_abs_diff(adjoint()) <= tol; }

    bool is_finite() const {
        for (int i = 0; i < dim_ * dim_; ++i)
            if (!std::isfinite(a_[i].real()) || !std::isfinite(a_[i].imag())) return false;
        return true;
    }

private:
    void check_dim(const Matrix& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("Matrix: dimension mismatch");
    }

    int dim_;
    std::array<cplx, 16> a_{};
};

}  // namespace qgame

#endif
