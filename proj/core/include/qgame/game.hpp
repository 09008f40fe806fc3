#ifndef QGAME_GAME_HPP
#define QGAME_GAME_HPP

#include <array>
#include <string>

#include "qgame/quantum.hpp"

namespace qgame {

enum class Player { A, B };

/// A pure strategy: the four detector angles. Indexed access follows the
/// order (theta_a, theta_a', theta_b, theta_b'); the first two belong to
/// Alice, the last two to Bob.
struct StrategyProfile {
    double theta_a = 0.0;
    double theta_a_prime = 0.0;
    double theta_b = 0.0;
    double theta_b_prime = 0.0;

    double operator[](int k) const {
        return k == 0 ? theta_a : k == 1 ? theta_a_prime : k == 2 ? theta_b : theta_b_prime;
    }
    double& operator[](int k) {
        return k == 0 ? theta_a : k == 1 ? theta_a_prime : k == 2 ? theta_b : theta_b_prime;
    }
};

/// Per-cell payoffs indexed by (Alice type, Bob type, Alice outcome, Bob
/// outcome, player). Type index 0 is the unprimed detector; outcomes are
/// passed as +-1. Constant-sum: every cell's A+B total is the same.
class PayoffTensor {
public:
    /// Matching game: Alice scores on matched outcomes in the (a,b), (a,b')
    /// and (a',b) blocks and on mismatched outcomes in (a',b'); Bob scores
    /// the complement. Every cell sums to 1.
    static PayoffTensor standard();

    /// Same as standard() except the (a, b, down, down) cell pays Alice 2
    /// and Bob -1. Still constant-sum, biased towards Alice.
    static PayoffTensor biased();

    double entry(int alpha, int beta, int sigma, int sigma_prime, Player player) const;
    void set_entry(int alpha, int beta, int sigma, int sigma_prime, Player player, double value);

    double cell_sum(int alpha, int beta, int sigma, int sigma_prime) const;
    bool is_constant_sum(double tol = 1e-12) const;

    /// The per-cell A+B total.
    double cell_constant() const { return cell_sum(0, 0, +1, +1); }

    const std::string& name() const { return name_; }

private:
    static int outcome_index(int sigma);

    double u_[2][2][2][2][2] = {};
    std::string name_ = "explicit";
};

/// Joint prior over detector-type pairs; uniform 1/4 by default.
struct Priors {
    double p[2][2] = {{0.25, 0.25}, {0.25, 0.25}};

    static Priors uniform() { return {}; }
    void validate(double tol = 1e-12) const;
};

struct GameInstance {
    PayoffTensor payoffs;
    Priors priors;
    DensityMatrix state;
    std::string state_description = "custom";
};

/// Tr[Pi_{sigma|theta_alpha} (x) Pi_{sigma'|theta_beta} rho], clamped to [0,1].
double conditional_prob(const DensityMatrix& state, double theta_alpha, double theta_beta,
                        int sigma, int sigma_prime);

/// 16-term sum of payoff * conditional probability * prior.
double expected_payoff(const GameInstance& game, const StrategyProfile& profile, Player player);

/// C = (U_A + U_B) / 2, constant over profiles for a constant-sum tensor.
double game_constant(const GameInstance& game);

/// f = U_A - C; Bob's payoff is C - f.
double f_value(const GameInstance& game, const StrategyProfile& profile);

/// Tr[(Pi_{sigma|a} - Pi_{sigma|a*}) (x) Pi_{sigma'|beta} rho], evaluated in
/// trace form (a single 4x4 trace, not a difference of probabilities).
double deviation_gap(const DensityMatrix& state, double theta_alpha, double theta_alpha_star,
                     double theta_beta, int sigma, int sigma_prime);

/// Closed-form payoff evaluator. Precomputes the state's Pauli correlation
/// coefficients so each payoff costs a handful of trig calls instead of 16
/// 4x4 traces; agrees with expected_payoff to machine precision.
class PayoffEvaluator {
public:
    explicit PayoffEvaluator(const GameInstance& game);

    double payoff(const StrategyProfile& profile, Player player) const;
    double f(const StrategyProfile& profile) const;
    double constant() const { return constant_; }

private:
    struct BlockCoefficients {
        double k0, ka, kb, kk;  // weights of 1, sigma, sigma', sigma*sigma'
    };

    double block_value(const BlockCoefficients& c, double sin_a, double cos_a, double sin_b,
                       double cos_b) const;

    // local Bloch vectors (x,z components) and correlation matrix of the state
    double ax_, az_, bx_, bz_;
    double cxx_, cxz_, czx_, czz_;
    BlockCoefficients coeff_[2][2][2];  // [alpha][beta][player], prior included
    double constant_;
};

}  // namespace qgame

#endif
