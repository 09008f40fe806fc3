#include "qgame/discord.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace qgame {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBranchTol = 1e-12;
constexpr double kZeroFloor = 1e-8;

Subsystem unmeasured(MeasuredSubsystem side) {
    return side == MeasuredSubsystem::B ? Subsystem::A : Subsystem::B;
}

// Golden-section minimization of a smooth 1-D function.
double golden_section(const std::function<double(double)>& g, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double gc = g(c), gd = g(d);
    while (b - a > tol) {
        if (gc < gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - inv_phi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + inv_phi * (b - a);
            gd = g(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

double mutual_information(const DensityMatrix& rho) {
    const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
    const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
    const double s_ab = von_neumann_entropy(rho);
    return s_a + s_b - s_ab;
}

PostMeasurement post_measurement_state(const DensityMatrix& rho, double theta, double phi,
                                       int sigma, MeasuredSubsystem side) {
    const Matrix proj = bloch_projector(theta, phi, sigma);
    const Matrix id = Matrix::identity(2);
    const Matrix op = side == MeasuredSubsystem::B ? tensor_product(id, proj)
                                                   : tensor_product(proj, id);
    const Matrix projected = op * rho.matrix() * op;
    const double p = projected.trace().real();
    if (p <= kBranchTol) return {std::max(p, 0.0), std::nullopt};
    const Matrix cond = (1.0 / p) * partial_trace_matrix(projected, unmeasured(side));
    return {p, DensityMatrix(cond)};
}

PostMeasurement post_measurement_state(const DensityMatrix& rho, double theta, int sigma,
                                       MeasuredSubsystem side) {
    return post_measurement_state(rho, theta, 0.0, sigma, side);
}

double conditional_entropy(const DensityMatrix& rho, double theta, double phi,
                           MeasuredSubsystem side) {
    double s = 0.0;
    for (int sigma : {+1, -1}) {
        const PostMeasurement branch = post_measurement_state(rho, theta, phi, sigma, side);
        if (branch.state) s += branch.probability * von_neumann_entropy(*branch.state);
    }
    return s;
}

double conditional_entropy(const DensityMatrix& rho, double theta, MeasuredSubsystem side) {
    return conditional_entropy(rho, theta, 0.0, side);
}

double j_post_measurement(const DensityMatrix& rho, double theta, MeasuredSubsystem side) {
    const double s_marginal = von_neumann_entropy(partial_trace(rho, unmeasured(side)));
    return s_marginal - conditional_entropy(rho, theta, side);
}

DiscordResult discord(const DensityMatrix& rho, MeasuredSubsystem side, bool azimuthal_scan) {
    const double mi = mutual_information(rho);
    const double s_marginal = von_neumann_entropy(partial_trace(rho, unmeasured(side)));

    // objective: I - J(theta, phi) = conditional entropy + (I - S_marginal)
    const auto objective = [&](double theta, double phi) {
        return mi - (s_marginal - conditional_entropy(rho, theta, phi, side));
    };

    const int grid = 721;
    double best_theta = 0.0, best_phi = 0.0;
    double best = objective(0.0, 0.0);
    const int phi_grid = azimuthal_scan ? 61 : 1;
    for (int j = 0; j < phi_grid; ++j) {
        const double phi = kTwoPi * j / phi_grid;
        for (int i = 0; i < grid; ++i) {
            const double theta = kTwoPi * i / (grid - 1);
            const double v = objective(theta, phi);
            if (v < best) {
                best = v;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    const double step = kTwoPi / (grid - 1);
    best_theta = golden_section([&](double t) { return objective(t, best_phi); },
                                best_theta - step, best_theta + step, 1e-9);
    if (azimuthal_scan) {
        const double phi_step = kTwoPi / phi_grid;
        best_phi = golden_section([&](double p) { return objective(best_theta, p); },
                                  best_phi - phi_step, best_phi + phi_step, 1e-9);
        best_theta = golden_section([&](double t) { return objective(t, best_phi); },
                                    best_theta - step, best_theta + step, 1e-9);
    }
    best = objective(best_theta, best_phi);

    DiscordResult result;
    result.mutual_information = mi;
    result.optimal_theta = std::fmod(std::fmod(best_theta, kTwoPi) + kTwoPi, kTwoPi);
    if (best < kZeroFloor) {
        // values inside the numerical zero floor are reported as exactly 0
        result.discord = 0.0;
        result.j_value = mi;
    } else {
        result.discord = best;
        result.j_value = mi - best;
    }
    return result;
}

}  // namespace qgame
