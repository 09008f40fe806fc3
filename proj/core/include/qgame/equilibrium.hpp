#ifndef QGAME_EQUILIBRIUM_HPP
#define QGAME_EQUILIBRIUM_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "qgame/game.hpp"

namespace qgame {

enum class NashClass { strict_nash, weak_nash, not_nash };

enum class Verdict { strict_nash_found, weak_nash_flat, none };

struct CriticalPoint {
    StrategyProfile profile;
    double jacobian_norm = 0.0;               // infinity norm after refinement
    std::array<double, 4> hessian_diag{};     // second partials of f
    NashClass classification = NashClass::not_nash;  // from the Hessian sign rule
    bool nash_verified = false;               // passed best-response probing
    double payoff_a = 0.0;
    double payoff_b = 0.0;
};

struct EquilibriumReport {
    std::string game_description;
    int grid_resolution = 0;
    bool flat_surface = false;
    Verdict verdict = Verdict::none;
    std::vector<CriticalPoint> critical_points;
};

struct SearchOptions {
    int resolution = 41;             // grid samples per axis
    int threads = 0;                 // 0 = hardware concurrency
    double seed_threshold = 0.15;    // |J| below which a local-min cell seeds refinement
    double stationary_tol = 1e-8;    // |J| after refinement
    double hessian_band = 1e-6;      // zero band for classification
    double dedup_tol = 1e-4;         // per-coordinate torus distance
    int probe_count = 360;           // best-response probes per coordinate
    double probe_slack = 1e-9;       // max tolerated unilateral improvement
    int max_refine_iters = 200;
    double jacobian_step = 1e-4;     // central-difference step for the gradient
    double hessian_step = 1e-3;      // central-difference step for second derivatives
    double flat_tol = 1e-10;         // max |f| on the 11^4 probe grid
};

using PayoffFunction = std::function<double(const StrategyProfile&)>;

/// Central finite-difference gradient of f over the four angles.
std::array<double, 4> jacobian(const PayoffFunction& f, const StrategyProfile& profile,
                               double step = 1e-4);
std::array<double, 4> jacobian(const GameInstance& game, const StrategyProfile& profile);

/// Central second differences along each axis (Hessian diagonal).
std::array<double, 4> hessian_diag(const PayoffFunction& f, const StrategyProfile& profile,
                                   double step = 1e-3);
std::array<double, 4> hessian_diag(const GameInstance& game, const StrategyProfile& profile);

/// Full 4x4 finite-difference Hessian (off-diagonal entries are reported for
/// diagnostics only; classification uses the diagonal).
std::array<std::array<double, 4>, 4> hessian_full(const PayoffFunction& f,
                                                  const StrategyProfile& profile,
                                                  double step = 1e-3);

/// Saddle sign rule: Alice's diagonal entries (first two) must not be
/// positive, Bob's (last two) must not be negative; strict when all four
/// clear the zero band, weak when the pattern holds with zeros.
NashClass classify(const std::array<double, 4>& hessian_diagonal, double band = 1e-6);

/// Grid scan over [0,2pi)^4 with Newton refinement of the Jacobian roots,
/// torus deduplication, Hessian classification and best-response probing.
std::vector<CriticalPoint> find_stationary_points(const GameInstance& game,
                                                  const SearchOptions& options = {});

/// Full pipeline: flat-surface shortcut, stationary-point search,
/// probe verification, verdict aggregation.
EquilibriumReport find_nash_equilibria(const GameInstance& game, const SearchOptions& options = {});

/// Checks the four unilateral-deviation inequalities on probe_count evenly
/// spaced angles per coordinate, with slack on the payoff comparison.
bool verify_nash_inequalities(const GameInstance& game, const StrategyProfile& profile,
                              int probe_count, double slack = 1e-9);

/// Per-coordinate torus deduplication used by the search (exposed for tests).
std::vector<StrategyProfile> dedup_profiles(const std::vector<StrategyProfile>& points,
                                            double tol);

double torus_distance(double a, double b);

std::string verdict_name(Verdict v);
std::string nash_class_name(NashClass c);

}  // namespace qgame

#endif
