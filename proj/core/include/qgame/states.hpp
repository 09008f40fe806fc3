#ifndef QGAME_STATES_HPP
#define QGAME_STATES_HPP

#include <string>

#include "qgame/quantum.hpp"

namespace qgame {

enum class Family { werner, d1, d2, product, custom };

enum class Regime { classical, discorded_separable, entangled };

/// A named two-qubit state from one of the shipped families, together with
/// the parameter it was constructed from.
struct StateFamily {
    Family family;
    double parameter;  // eta for werner, x for d1/d2; unused otherwise
    DensityMatrix matrix;
};

/// (1-eta)/4 * identity + eta |psi-><psi-|, eta in [0,1].
StateFamily werner(double eta);

/// 1/2 [ |up><up| (x) |up><up| + |x><x| (x) |x><x| ],
/// |x> = cos(x/2)|up> + sin(x/2)|down>, x in [0, 2pi].
StateFamily d1(double x);

/// 1/2 [ |up><up| (x) |up><up| + |down><down| (x) |x><x| ], x in [0, 2pi].
StateFamily d2(double x);

/// Pure product of Bloch kets |theta_a> (x) |theta_b| (azimuth 0).
StateFamily product_state(double theta_a, double theta_b);

/// Arbitrary user-supplied 4x4 density matrix.
StateFamily custom_state(const Matrix& m);

/// Correlation regime by documented parameter range. Throws for the
/// product/custom families, whose regime is not tabulated.
Regime regime(const StateFamily& family);

std::string family_name(Family family);
std::string regime_name(Regime r);

}  // namespace qgame

#endif
