#ifndef QGAME_QUANTUM_HPP
#define QGAME_QUANTUM_HPP

#include <vector>

#include "qgame/matrix.hpp"

namespace qgame {

// Tolerances for density-matrix validation.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = -1e-10;

enum class PauliAxis { x, y, z };

enum class Subsystem { A, B };

Matrix pauli(PauliAxis axis);

/// Rank-1 projector 1/2 (1 + sigma n.v) for Bloch vector
/// n = (sin theta cos phi, sin theta sin phi, cos theta); sigma = +-1.
Matrix bloch_projector(double theta, int sigma);
Matrix bloch_projector(double theta, double phi, int sigma);

/// Kronecker product; subsystem A is the left factor.
Matrix tensor_product(const Matrix& a, const Matrix& b);

/// Partial trace of an arbitrary 4x4 matrix down to the kept subsystem.
Matrix partial_trace_matrix(const Matrix& m, Subsystem keep);

/// Real eigenvalues of a Hermitian matrix, ascending. Closed form for 2x2,
/// cyclic Jacobi for 4x4 (off-diagonal norm threshold 1e-13).
std::vector<double> eigenvalues_hermitian(const Matrix& m);

/// Hermitian, unit-trace, positive semi-definite matrix. Validates on
/// construction and is immutable afterwards.
class DensityMatrix {
public:
    explicit DensityMatrix(const Matrix& m);

    /// Outer product |psi><psi| of a normalized state vector.
    static DensityMatrix pure(const std::vector<cplx>& amplitudes);

    const Matrix& matrix() const { return m_; }
    int dim() const { return m_.dim(); }

private:
    Matrix m_;
};

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// -sum lambda_i ln lambda_i in nats, with 0 ln 0 = 0. Eigenvalues are
/// clamped to [0,1] so round-off below zero cannot produce NaN.
double von_neumann_entropy(const DensityMatrix& rho);

/// Same quantity in bits.
double von_neumann_entropy_bits(const DensityMatrix& rho);

}  // namespace qgame

#endif
