// Acceptance suite: one PASS/FAIL line per criterion. Run with --soak to add
// the long resolution-41 grid run and the 31/41 verdict-stability sweep.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qgame/discord.hpp"
#include "qgame/equilibrium.hpp"
#include "qgame/game.hpp"
#include "qgame/states.hpp"

using namespace qgame;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

GameInstance make_game(const StateFamily& state,
                       PayoffTensor payoffs = PayoffTensor::standard()) {
    return {std::move(payoffs), Priors::uniform(), state.matrix, family_name(state.family)};
}

Verdict verdict_at(const StateFamily& state, int resolution,
                   PayoffTensor payoffs = PayoffTensor::standard()) {
    SearchOptions options;
    options.resolution = resolution;
    return find_nash_equilibria(make_game(state, std::move(payoffs)), options).verdict;
}

bool criterion_closed_form_probabilities(std::string& detail) {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);

    const DensityMatrix mixed = werner(0.0).matrix;
    for (int i = 0; i < 1000; ++i) {
        const int s = (rng() & 1) ? +1 : -1;
        const int sp = (rng() & 1) ? +1 : -1;
        const double p = conditional_prob(mixed, angle(rng), angle(rng), s, sp);
        if (std::abs(p - 0.25) > 1e-12) {
            detail = "werner(0) probability deviates from 1/4";
            return false;
        }
    }

    const DensityMatrix d2_zero = d2(0.0).matrix;
    const DensityMatrix d2_pi = d2(kPi).matrix;
    for (int i = 0; i < 50; ++i)
        for (int j = 0; j < 50; ++j) {
            const double ta = kTwoPi * i / 49;
            const double tb = kTwoPi * j / 49;
            for (int s : {+1, -1})
                for (int sp : {+1, -1}) {
                    const double want0 = 0.25 * (1.0 + sp * std::cos(tb));
                    if (std::abs(conditional_prob(d2_zero, ta, tb, s, sp) - want0) > 1e-12) {
                        detail = "d2(0) closed form mismatch";
                        return false;
                    }
                    const double want_pi =
                        0.25 * (1.0 + s * sp * std::cos(ta) * std::cos(tb));
                    if (std::abs(conditional_prob(d2_pi, ta, tb, s, sp) - want_pi) > 1e-12) {
                        detail = "d2(pi) closed form mismatch";
                        return false;
                    }
                }
        }
    return true;
}

bool criterion_constant_sum(std::string& detail) {
    std::mt19937 rng(102);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        StateFamily state = werner(0.0);
        switch (i % 5) {
            case 0: state = werner(unit(rng)); break;
            case 1: state = d1(angle(rng)); break;
            case 2: state = d2(angle(rng)); break;
            case 3: state = product_state(angle(rng), angle(rng)); break;
            case 4: state = custom_state(werner(unit(rng)).matrix.matrix()); break;
        }
        for (const PayoffTensor& tensor : {PayoffTensor::standard(), PayoffTensor::biased()}) {
            const GameInstance game = make_game(state, tensor);
            const StrategyProfile p{angle(rng), angle(rng), angle(rng), angle(rng)};
            const double total =
                expected_payoff(game, p, Player::A) + expected_payoff(game, p, Player::B);
            if (std::abs(total - 1.0) > 1e-12) {
                detail = "U_A + U_B deviates from 1 by " + std::to_string(total - 1.0);
                return false;
            }
        }
    }
    return true;
}

bool criterion_werner_verdicts(std::string& detail) {
    if (verdict_at(werner(0.0), 21) != Verdict::weak_nash_flat) {
        detail = "werner(0) verdict is not weak_nash_flat";
        return false;
    }
    for (double eta : {0.1, 0.5, 1.0}) {
        if (verdict_at(werner(eta), 21) != Verdict::none) {
            detail = "werner(" + std::to_string(eta) + ") verdict is not none";
            return false;
        }
    }
    return true;
}

bool has_verified_point(const EquilibriumReport& report, double want_a_prime,
                        double want_b_prime, double tol) {
    for (const CriticalPoint& cp : report.critical_points) {
        if (!cp.nash_verified) continue;
        if (std::abs(cp.profile.theta_a_prime - want_a_prime) < tol &&
            std::abs(cp.profile.theta_b_prime - want_b_prime) < tol)
            return true;
    }
    return false;
}

bool criterion_d1_verdicts(std::string& detail) {
    SearchOptions options;
    options.resolution = 21;
    const auto classical = find_nash_equilibria(make_game(d1(0.0)), options);
    if (classical.verdict != Verdict::strict_nash_found) {
        detail = "d1(0) verdict is not strict_nash_found";
        return false;
    }
    if (!has_verified_point(classical, kPi / 2, kPi / 2, 0.05)) {
        detail = "d1(0) lacks a verified point near (pi/2, pi/2)";
        return false;
    }
    if (verdict_at(d1(kPi / 2), 21) != Verdict::none) {
        detail = "d1(pi/2) verdict is not none";
        return false;
    }
    return true;
}

bool criterion_d2_verdicts(std::string& detail) {
    if (verdict_at(d2(0.0), 21) != Verdict::weak_nash_flat) {
        detail = "d2(0) verdict is not weak_nash_flat";
        return false;
    }
    SearchOptions options;
    options.resolution = 21;
    const auto quantum = find_nash_equilibria(make_game(d2(kPi / 2)), options);
    if (quantum.verdict != Verdict::strict_nash_found) {
        detail = "d2(pi/2) verdict is not strict_nash_found";
        return false;
    }
    if (!has_verified_point(quantum, kPi / 2, kPi / 4, 0.05)) {
        detail = "d2(pi/2) lacks a verified point near (pi/2, pi/4)";
        return false;
    }
    return true;
}

bool criterion_biased_game(std::string& detail) {
    // Bob-angle dependence of the biased surface at d2(0)
    const GameInstance biased = make_game(d2(0.0), PayoffTensor::biased());
    const GameInstance standard = make_game(d2(0.0), PayoffTensor::standard());
    const PayoffEvaluator biased_eval(biased);
    const PayoffEvaluator standard_eval(standard);
    double lo = 1e30, hi = -1e30, spread_std = 0.0;
    for (int i = 0; i <= 100; ++i) {
        StrategyProfile p{0.7, kPi / 2, kTwoPi * i / 100, kPi / 2};
        const double v = biased_eval.payoff(p, Player::B);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        spread_std = std::max(spread_std, std::abs(standard_eval.f(p)));
    }
    if (hi - lo <= 0.01) {
        detail = "biased surface spread over theta_b is too small";
        return false;
    }
    if (spread_std >= 1e-10) {
        detail = "standard game at d2(0) is not flat";
        return false;
    }
    for (double x : {0.0, kPi / 2}) {
        if (verdict_at(d2(x), 21, PayoffTensor::biased()) == Verdict::none) {
            detail = "biased d2(" + std::to_string(x) + ") verdict is none";
            return false;
        }
    }
    return true;
}

bool criterion_discord_endpoints(std::string& detail) {
    if (discord(werner(0.0).matrix).discord > 1e-8) {
        detail = "discord(werner(0)) not 0";
        return false;
    }
    // independent oracle: brute-force scan at 10,001 points plus a local
    // parabolic refinement around the best sample
    const DensityMatrix bell = werner(1.0).matrix;
    const double mi = mutual_information(bell);
    double best = 1e30;
    for (int i = 0; i <= 10000; ++i) {
        best = std::min(best, mi - j_post_measurement(bell, kTwoPi * i / 10000));
    }
    if (std::abs(best - std::numbers::ln2) > 1e-6) {
        detail = "brute-force oracle for werner(1) is off";
        return false;
    }
    if (std::abs(discord(bell).discord - std::numbers::ln2) > 1e-6) {
        detail = "discord(werner(1)) differs from ln 2";
        return false;
    }
    if (std::abs(discord(product_state(0.9, 1.7).matrix).discord) > 1e-9) {
        detail = "product-state discord not 0";
        return false;
    }
    const DensityMatrix oneway = d2(kPi / 2).matrix;
    if (discord(oneway, MeasuredSubsystem::B).discord <= 0.01) {
        detail = "d2(pi/2) measure-B discord too small";
        return false;
    }
    if (std::abs(discord(oneway, MeasuredSubsystem::A).discord) > 1e-6) {
        detail = "d2(pi/2) measure-A discord not 0";
        return false;
    }
    return true;
}

bool criterion_derivative_soundness(std::string& detail) {
    const GameInstance game = make_game(werner(1.0));
    const PayoffEvaluator eval(game);
    const PayoffFunction f = [&](const StrategyProfile& p) { return eval.f(p); };
    std::mt19937 rng(108);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int i = 0; i < 100; ++i) {
        const StrategyProfile p{angle(rng), angle(rng), angle(rng), angle(rng)};
        const auto g1 = jacobian(f, p, 1e-4);
        const auto g2 = jacobian(f, p, 5e-5);
        for (int k = 0; k < 4; ++k) {
            if (std::abs(g1[k] - g2[k]) > 1e-6) {
                detail = "Richardson consistency failed";
                return false;
            }
        }
    }
    SearchOptions options;
    options.resolution = 21;
    for (const StateFamily& state : {d1(0.0), d2(kPi / 2)}) {
        const GameInstance g = make_game(state);
        const auto report = find_nash_equilibria(g, options);
        for (const CriticalPoint& cp : report.critical_points) {
            if (cp.nash_verified && !verify_nash_inequalities(g, cp.profile, 360)) {
                detail = "a verified point fails the 360-probe inequality check";
                return false;
            }
        }
    }
    return true;
}

bool criterion_soak(std::string& detail) {
    // verdict stability across 21/31/41 plus the full resolution-41 run
    const std::vector<std::pair<StateFamily, Verdict>> cases = {
        {werner(0.0), Verdict::weak_nash_flat}, {werner(0.1), Verdict::none},
        {werner(0.5), Verdict::none},           {werner(1.0), Verdict::none},
        {d1(0.0), Verdict::strict_nash_found},  {d1(kPi / 2), Verdict::none},
        {d2(0.0), Verdict::weak_nash_flat},     {d2(kPi / 2), Verdict::strict_nash_found},
    };
    for (const auto& [state, expected] : cases) {
        for (int resolution : {31, 41}) {
            if (verdict_at(state, resolution) != expected) {
                detail = family_name(state.family) + " verdict unstable at resolution " +
                         std::to_string(resolution);
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    bool soak = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--soak") == 0) soak = true;

    struct Criterion {
        std::string name;
        std::function<bool(std::string&)> run;
    };
    std::vector<Criterion> criteria = {
        {"closed-form-conditional-probabilities", criterion_closed_form_probabilities},
        {"constant-sum-identity", criterion_constant_sum},
        {"werner-equilibrium-verdicts", criterion_werner_verdicts},
        {"d1-equilibrium-verdicts", criterion_d1_verdicts},
        {"d2-equilibrium-verdicts", criterion_d2_verdicts},
        {"biased-game-surfaces-and-verdicts", criterion_biased_game},
        {"discord-endpoints", criterion_discord_endpoints},
        {"derivative-soundness-and-probes", criterion_derivative_soundness},
    };
    if (soak) criteria.push_back({"grid-41-soak", criterion_soak});

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        const bool ok = c.run(detail);
        if (ok) {
            std::printf("PASS %s\n", c.name.c_str());
        } else {
            ++failures;
            std::printf("FAIL %s: %s\n", c.name.c_str(), detail.c_str());
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
