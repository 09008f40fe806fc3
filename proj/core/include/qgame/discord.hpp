#ifndef QGAME_DISCORD_HPP
#define QGAME_DISCORD_HPP

#include <optional>

#include "qgame/quantum.hpp"

namespace qgame {

/// Which subsystem the local measurement acts on. Discord is asymmetric, so
/// the orientation matters for quantum-classical states.
enum class MeasuredSubsystem { B, A };

/// One measurement branch: outcome probability and the conditional state of
/// the unmeasured subsystem. The state is absent when the branch probability
/// is below 1e-12 (its entropy contribution is then zero).
struct PostMeasurement {
    double probability;
    std::optional<DensityMatrix> state;
};

struct DiscordResult {
    double discord;             // nats, clamped to 0 when within -1e-8
    double optimal_theta;       // minimizing polar measurement angle
    double mutual_information;  // nats
    double j_value;             // post-measurement mutual information at the optimum
};

/// S(rho_A) + S(rho_B) - S(rho_AB), nats.
double mutual_information(const DensityMatrix& rho);

PostMeasurement post_measurement_state(const DensityMatrix& rho, double theta, int sigma,
                                       MeasuredSubsystem side = MeasuredSubsystem::B);
PostMeasurement post_measurement_state(const DensityMatrix& rho, double theta, double phi,
                                       int sigma, MeasuredSubsystem side);

/// sum_sigma p_sigma S(conditional state), nats.
double conditional_entropy(const DensityMatrix& rho, double theta,
                           MeasuredSubsystem side = MeasuredSubsystem::B);
double conditional_entropy(const DensityMatrix& rho, double theta, double phi,
                           MeasuredSubsystem side);

/// S(marginal of unmeasured side) - conditional entropy.
double j_post_measurement(const DensityMatrix& rho, double theta,
                          MeasuredSubsystem side = MeasuredSubsystem::B);

/// Minimizes I - J over the polar measurement angle (coarse 721-sample grid
/// plus golden-section refinement). With azimuthal_scan the minimization
/// also sweeps the azimuthal angle.
DiscordResult discord(const DensityMatrix& rho, MeasuredSubsystem side = MeasuredSubsystem::B,
                      bool azimuthal_scan = false);

}  // namespace qgame

#endif
