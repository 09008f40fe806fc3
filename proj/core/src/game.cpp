#include "qgame/game.hpp"

#include <algorithm>
#include <cmath>

namespace qgame {

int PayoffTensor::outcome_index(int sigma) {
    if (sigma == +1) return 0;
    if (sigma == -1) return 1;
    throw std::invalid_argument("PayoffTensor: outcome must be +1 or -1");
}

double PayoffTensor::entry(int alpha, int beta, int sigma, int sigma_prime, Player player) const {
    return u_[alpha][beta][outcome_index(sigma)][outcome_index(sigma_prime)]
             [player == Player::A ? 0 : 1];
}

void PayoffTensor::set_entry(int alpha, int beta, int sigma, int sigma_prime, Player player,
                             double value) {
    u_[alpha][beta][outcome_index(sigma)][outcome_index(sigma_prime)]
      [player == Player::A ? 0 : 1] = value;
}

double PayoffTensor::cell_sum(int alpha, int beta, int sigma, int sigma_prime) const {
    return entry(alpha, beta, sigma, sigma_prime, Player::A) +
           entry(alpha, beta, sigma, sigma_prime, Player::B);
}

bool PayoffTensor::is_constant_sum(double tol) const {
    const double c = cell_constant();
    for (int alpha = 0; alpha < 2; ++alpha)
        for (int beta = 0; beta < 2; ++beta)
            for (int s : {+1, -1})
                for (int sp : {+1, -1})
                    if (std::abs(cell_sum(alpha, beta, s, sp) - c) > tol) return false;
    return true;
}

PayoffTensor PayoffTensor::standard() {
    PayoffTensor t;
    t.name_ = "standard";
    for (int alpha = 0; alpha < 2; ++alpha)
        for (int beta = 0; beta < 2; ++beta)
            for (int s : {+1, -1})
                for (int sp : {+1, -1}) {
                    const bool matched = s == sp;
                    const bool alice_wins = (alpha == 1 && beta == 1) ? !matched : matched;
                    t.set_entry(alpha, beta, s, sp, Player::A, alice_wins ? 1.0 : 0.0);
                    t.set_entry(alpha, beta, s, sp, Player::B, alice_wins ? 0.0 : 1.0);
                }
    return t;
}

PayoffTensor PayoffTensor::biased() {
    PayoffTensor t = standard();
    t.name_ = "biased";
    t.set_entry(0, 0, -1, -1, Player::A, 2.0);
    t.set_entry(0, 0, -1, -1, Player::B, -1.0);
    return t;
}

void Priors::validate(double tol) const {
    double sum = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            if (p[a][b] < 0.0 || p[a][b] > 1.0)
                throw std::invalid_argument("Priors: probability outside [0,1]");
            sum += p[a][b];
        }
    if (std::abs(sum - 1.0) > tol) throw std::invalid_argument("Priors: probabilities must sum to 1");
}

double conditional_prob(const DensityMatrix& state, double theta_alpha, double theta_beta,
                        int sigma, int sigma_prime) {
    const Matrix op =
        tensor_product(bloch_projector(theta_alpha, sigma), bloch_projector(theta_beta, sigma_prime));
    const double p = (op * state.matrix()).trace().real();
    return std::clamp(p, 0.0, 1.0);
}

double expected_payoff(const GameInstance& game, const StrategyProfile& profile, Player player) {
    double total = 0.0;
    for (int alpha = 0; alpha < 2; ++alpha) {
        const double theta_alpha = alpha == 0 ? profile.theta_a : profile.theta_a_prime;
        for (int beta = 0; beta < 2; ++beta) {
            const double theta_beta = beta == 0 ? profile.theta_b : profile.theta_b_prime;
            for (int s : {+1, -1})
                for (int sp : {+1, -1})
                    total += game.payoffs.entry(alpha, beta, s, sp, player) *
                             conditional_prob(game.state, theta_alpha, theta_beta, s, sp) *
                             game.priors.p[alpha][beta];
        }
    }
    return total;
}

double game_constant(const GameInstance& game) {
    if (!game.payoffs.is_constant_sum())
        throw std::invalid_argument("game_constant: payoff tensor is not constant-sum");
    const StrategyProfile origin{};
    return 0.5 * (expected_payoff(game, origin, Player::A) + expected_payoff(game, origin, Player::B));
}

double f_value(const GameInstance& game, const StrategyProfile& profile) {
    if (!game.payoffs.is_constant_sum())
        throw std::invalid_argument("f_value: payoff tensor is not constant-sum");
    const double ua = expected_payoff(game, profile, Player::A);
    const double ub = expected_payoff(game, profile, Player::B);
    return 0.5 * (ua - ub);
}

double deviation_gap(const DensityMatrix& state, double theta_alpha, double theta_alpha_star,
                     double theta_beta, int sigma, int sigma_prime) {
    const Matrix diff = bloch_projector(theta_alpha, sigma) - bloch_projector(theta_alpha_star, sigma);
    const Matrix op = tensor_product(diff, bloch_projector(theta_beta, sigma_prime));
    return (op * state.matrix()).trace().real();
}

PayoffEvaluator::PayoffEvaluator(const GameInstance& game) {
    game.priors.validate();
    const Matrix& rho = game.state.matrix();
    const Matrix id = Matrix::identity(2);
    const Matrix sx = pauli(PauliAxis::x);
    const Matrix sz = pauli(PauliAxis::z);
    const auto corr = [&](const Matrix& a, const Matrix& b) {
        return (tensor_product(a, b) * rho).trace().real();
    };
    ax_ = corr(sx, id);
    az_ = corr(sz, id);
    bx_ = corr(id, sx);
    bz_ = corr(id, sz);
    cxx_ = corr(sx, sx);
    cxz_ = corr(sx, sz);
    czx_ = corr(sz, sx);
    czz_ = corr(sz, sz);

    for (int alpha = 0; alpha < 2; ++alpha)
        for (int beta = 0; beta < 2; ++beta)
            for (int player = 0; player < 2; ++player) {
                BlockCoefficients c{};
                for (int s : {+1, -1})
                    for (int sp : {+1, -1}) {
                        const double u = game.payoffs.entry(
                            alpha, beta, s, sp, player == 0 ? Player::A : Player::B);
                        c.k0 += 0.25 * u;
                        c.ka += 0.25 * u * s;
                        c.kb += 0.25 * u * sp;
                        c.kk += 0.25 * u * s * sp;
                    }
                const double prior = game.priors.p[alpha][beta];
                coeff_[alpha][beta][player] = {prior * c.k0, prior * c.ka, prior * c.kb,
                                               prior * c.kk};
            }

    if (!game.payoffs.is_constant_sum())
        throw std::invalid_argument("PayoffEvaluator: payoff tensor is not constant-sum");
    constant_ = game_constant(game);
}

double PayoffEvaluator::block_value(const BlockCoefficients& c, double sin_a, double cos_a,
                                    double sin_b, double cos_b) const {
    const double local_a = ax_ * sin_a + az_ * cos_a;
    const double local_b = bx_ * sin_b + bz_ * cos_b;
    const double corr = sin_a * (cxx_ * sin_b + cxz_ * cos_b) + cos_a * (czx_ * sin_b + czz_ * cos_b);
    return c.k0 + c.ka * local_a + c.kb * local_b + c.kk * corr;
}

double PayoffEvaluator::payoff(const StrategyProfile& profile, Player player) const {
    const int p = player == Player::A ? 0 : 1;
    const double sa = std::sin(profile.theta_a), ca = std::cos(profile.theta_a);
    const double sap = std::sin(profile.theta_a_prime), cap = std::cos(profile.theta_a_prime);
    const double sb = std::sin(profile.theta_b), cb = std::cos(profile.theta_b);
    const double sbp = std::sin(profile.theta_b_prime), cbp = std::cos(profile.theta_b_prime);
    return block_value(coeff_[0][0][p], sa, ca, sb, cb) +
           block_value(coeff_[0][1][p], sa, ca, sbp, cbp) +
           block_value(coeff_[1][0][p], sap, cap, sb, cb) +
           block_value(coeff_[1][1][p], sap, cap, sbp, cbp);
}

double PayoffEvaluator::f(const StrategyProfile& profile) const {
    return payoff(profile, Player::A) - constant_;
}

}  // namespace qgame
