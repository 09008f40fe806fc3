#include "qgame/quantum.hpp"

#include <algorithm>
#include <cmath>

namespace qgame {

Matrix pauli(PauliAxis axis) {
    Matrix m(2);
    switch (axis) {
        case PauliAxis::x:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case PauliAxis::y:
            m(0, 1) = cplx(0.0, -1.0);
            m(1, 0) = cplx(0.0, 1.0);
            break;
        case PauliAxis::z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

static void check_outcome(int sigma) {
    if (sigma != 1 && sigma != -1)
        throw std::invalid_argument("outcome sigma must be +1 or -1");
}

Matrix bloch_projector(double theta, int sigma) {
    check_outcome(sigma);
    const double s = sigma * std::sin(theta);
    const double c = sigma * std::cos(theta);
    Matrix m(2);
    m(0, 0) = 0.5 * (1.0 + c);
    m(0, 1) = 0.5 * s;
    m(1, 0) = 0.5 * s;
    m(1, 1) = 0.5 * (1.0 - c);
    return m;
}

Matrix bloch_projector(double theta, double phi, int sigma) {
    check_outcome(sigma);
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    Matrix m(2);
    m(0, 0) = 0.5 * (1.0 + sigma * nz);
    m(0, 1) = 0.5 * sigma * cplx(nx, -ny);
    m(1, 0) = 0.5 * sigma * cplx(nx, ny);
    m(1, 1) = 0.5 * (1.0 - sigma * nz);
    return m;
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
    if (a.dim() != 2 || b.dim() != 2)
        throw std::invalid_argument("tensor_product: both factors must be 2x2");
    Matrix r(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

Matrix partial_trace_matrix(const Matrix& m, Subsystem keep) {
    if (m.dim() != 4)
        throw std::invalid_argument("partial_trace: input must be 4x4");
    Matrix r(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                if (keep == Subsystem::A)
                    r(i, j) += m(2 * i + k, 2 * j + k);
                else
                    r(i, j) += m(2 * k + i, 2 * k + j);
            }
    return r;
}

static std::vector<double> eigenvalues_2x2(const Matrix& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return {mean - r, mean + r};
}

// Cyclic Jacobi with complex rotations; terminates when the off-diagonal
// Frobenius norm drops below 1e-13.
static std::vector<double> eigenvalues_jacobi(Matrix m) {
    const int n = m.dim();
    const double threshold = 1e-13;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * std::norm(m(p, q));
        if (std::sqrt(off) < threshold) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = m(p, q);
                const double abs_apq = std::abs(apq);
                if (abs_apq == 0.0) continue;
                const cplx phase = apq / abs_apq;
                const double tau = (m(q, q).real() - m(p, p).real()) / (2.0 * abs_apq);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = t * c * phase;
                // m <- G^dagger m G, G = I except G(p,p)=c, G(p,q)=s,
                // G(q,p)=-conj(s), G(q,q)=c.
                for (int k = 0; k < n; ++k) {
                    const cplx mkp = m(k, p);
                    const cplx mkq = m(k, q);
                    m(k, p) = c * mkp - std::conj(s) * mkq;
                    m(k, q) = s * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx mpk = m(p, k);
                    const cplx mqk = m(q, k);
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = std::conj(s) * mpk + c * mqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = m(i, i).real();
    return ev;
}

std::vector<double> eigenvalues_hermitian(const Matrix& m) {
    if (!m.is_hermitian(1e-10))
        throw std::invalid_argument("eigenvalues_hermitian: matrix is not Hermitian");
    std::vector<double> ev = m.dim() == 2 ? eigenvalues_2x2(m) : eigenvalues_jacobi(m);
    std::sort(ev.begin(), ev.end());
    return ev;
}

DensityMatrix::DensityMatrix(const Matrix& m) : m_(m) {
    if (!m.is_finite())
        throw std::invalid_argument("DensityMatrix: non-finite entries");
    if (!m.is_hermitian(kHermitianTol))
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(m.trace() - cplx(1.0)) > kTraceTol)
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    const std::vector<double> ev = eigenvalues_hermitian(m);
    if (ev.front() < kPsdTol)
        throw std::invalid_argument("DensityMatrix: not positive semi-definite");
}

DensityMatrix DensityMatrix::pure(const std::vector<cplx>& amplitudes) {
    const int dim = static_cast<int>(amplitudes.size());
    Matrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
    return DensityMatrix(m);
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    return DensityMatrix(partial_trace_matrix(rho.matrix(), keep));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lambda : eigenvalues_hermitian(rho.matrix())) {
        lambda = std::clamp(lambda, 0.0, 1.0);
        if (lambda > 0.0) s -= lambda * std::log(lambda);
    }
    return std::max(s, 0.0);
}

double von_neumann_entropy_bits(const DensityMatrix& rho) {
    return von_neumann_entropy(rho) / std::log(2.0);
}

}  // namespace qgame
