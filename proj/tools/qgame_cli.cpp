// Command-line front end: payoff surfaces, Nash equilibrium search, quantum
// discord, and the built-in closed-form verification suite.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgame/discord.hpp"
#include "qgame/equilibrium.hpp"
#include "qgame/game.hpp"
#include "qgame/state_spec.hpp"
#include "qgame/states.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitSpecError = 2;
constexpr int kExitIoError = 3;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// all numeric output uses 12 significant digits
std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    out << content;
    if (!out.good()) throw IoError("failed writing output file: " + path);
}

int angle_index(const std::string& name) {
    if (name == "theta_a" || name == "a") return 0;
    if (name == "theta_a_prime" || name == "theta_a'" || name == "a'") return 1;
    if (name == "theta_b" || name == "b") return 2;
    if (name == "theta_b_prime" || name == "theta_b'" || name == "b'") return 3;
    throw qgame::SpecError("unknown angle name: '" + name + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

qgame::PayoffTensor payoffs_by_name(const std::string& name) {
    if (name == "standard") return qgame::PayoffTensor::standard();
    if (name == "biased") return qgame::PayoffTensor::biased();
    throw qgame::SpecError("unknown payoff tensor: '" + name + "'");
}

qgame::GameInstance make_game(const std::string& state_spec, const std::string& payoffs) {
    qgame::StateFamily state = qgame::parse_state_spec(state_spec);
    return {payoffs_by_name(payoffs), qgame::Priors::uniform(), state.matrix, state_spec};
}

struct SurfaceArgs {
    std::string state_spec;
    std::string payoffs = "standard";
    std::string player = "A";
    std::string sweep = "theta_a,theta_b";
    std::string fixed = "theta_a_prime=pi/2,theta_b_prime=pi/2";
    int resolution = 101;
    std::string out;
};

int run_surface(const SurfaceArgs& args) {
    const qgame::GameInstance game = make_game(args.state_spec, args.payoffs);
    const qgame::PayoffEvaluator eval(game);

    const std::vector<std::string> sweep_names = split(args.sweep, ',');
    if (sweep_names.size() != 2) throw qgame::SpecError("--sweep needs two angle names");
    const int axis1 = angle_index(sweep_names[0]);
    const int axis2 = angle_index(sweep_names[1]);
    if (axis1 == axis2) throw qgame::SpecError("--sweep angles must differ");

    qgame::StrategyProfile base{};
    bool assigned[4] = {false, false, false, false};
    assigned[axis1] = assigned[axis2] = true;
    for (const std::string& pair : split(args.fixed, ',')) {
        const std::size_t eq = pair.find('=');
        if (eq == std::string::npos)
            throw qgame::SpecError("--fixed entries must look like angle=value");
        const int idx = angle_index(pair.substr(0, eq));
        if (assigned[idx]) throw qgame::SpecError("angle fixed twice or also swept: " + pair);
        base[idx] = qgame::parse_angle(pair.substr(eq + 1));
        assigned[idx] = true;
    }
    for (bool a : assigned)
        if (!a) throw qgame::SpecError("sweep and fixed angles must cover all four angles");
    if (args.resolution < 2) throw qgame::SpecError("--resolution must be >= 2");

    std::string csv = "axis1,axis2,value\n";
    for (int i = 0; i < args.resolution; ++i) {
        const double t1 = kTwoPi * i / (args.resolution - 1);
        for (int j = 0; j < args.resolution; ++j) {
            const double t2 = kTwoPi * j / (args.resolution - 1);
            qgame::StrategyProfile p = base;
            p[axis1] = t1;
            p[axis2] = t2;
            double value;
            if (args.player == "A")
                value = eval.payoff(p, qgame::Player::A);
            else if (args.player == "B")
                value = eval.payoff(p, qgame::Player::B);
            else if (args.player == "f")
                value = eval.f(p);
            else
                throw qgame::SpecError("--player must be A, B or f");
            csv += num(t1) + "," + num(t2) + "," + num(value) + "\n";
        }
    }
    write_output(args.out, csv);
    return kExitOk;
}

struct EquilibriaArgs {
    std::string state_spec;
    std::string payoffs = "standard";
    int grid = 41;
    int threads = 0;
    std::string out;
};

int run_equilibria(const EquilibriaArgs& args) {
    const qgame::GameInstance game = make_game(args.state_spec, args.payoffs);
    qgame::SearchOptions options;
    options.resolution = args.grid;
    options.threads = args.threads;
    const qgame::EquilibriumReport report = qgame::find_nash_equilibria(game, options);

    std::string doc;
    doc += "game.state = " + args.state_spec + "\n";
    doc += "game.payoffs = " + args.payoffs + "\n";
    doc += "grid.resolution = " + std::to_string(report.grid_resolution) + "\n";
    doc += std::string("flat_surface = ") + (report.flat_surface ? "true" : "false") + "\n";
    doc += "verdict = " + qgame::verdict_name(report.verdict) + "\n";
    doc += "critical_points.count = " + std::to_string(report.critical_points.size()) + "\n";
    for (std::size_t i = 0; i < report.critical_points.size(); ++i) {
        const qgame::CriticalPoint& cp = report.critical_points[i];
        const std::string key = "point." + std::to_string(i) + ".";
        doc += key + "theta_a = " + num(cp.profile.theta_a) + "\n";
        doc += key + "theta_a_prime = " + num(cp.profile.theta_a_prime) + "\n";
        doc += key + "theta_b = " + num(cp.profile.theta_b) + "\n";
        doc += key + "theta_b_prime = " + num(cp.profile.theta_b_prime) + "\n";
        doc += key + "jacobian_norm = " + num(cp.jacobian_norm) + "\n";
        doc += key + "hessian_diag = " + num(cp.hessian_diag[0]) + " " + num(cp.hessian_diag[1]) +
               " " + num(cp.hessian_diag[2]) + " " + num(cp.hessian_diag[3]) + "\n";
        doc += key + "classification = " + qgame::nash_class_name(cp.classification) + "\n";
        doc += key + std::string("nash_verified = ") + (cp.nash_verified ? "true" : "false") + "\n";
        doc += key + "payoff_A = " + num(cp.payoff_a) + "\n";
        doc += key + "payoff_B = " + num(cp.payoff_b) + "\n";
    }
    write_output(args.out, doc);
    return kExitOk;
}

struct DiscordArgs {
    std::string state_spec;
    std::string orientation = "measure_B";
    bool azimuthal_scan = false;
    std::string out;
};

int run_discord(const DiscordArgs& args) {
    const qgame::StateFamily state = qgame::parse_state_spec(args.state_spec);
    qgame::MeasuredSubsystem side;
    if (args.orientation == "measure_B")
        side = qgame::MeasuredSubsystem::B;
    else if (args.orientation == "measure_A")
        side = qgame::MeasuredSubsystem::A;
    else
        throw qgame::SpecError("--orientation must be measure_B or measure_A");

    const qgame::DiscordResult result = qgame::discord(state.matrix, side, args.azimuthal_scan);
    std::string doc;
    doc += "state = " + args.state_spec + "\n";
    doc += "orientation = " + args.orientation + "\n";
    doc += "discord = " + num(result.discord) + "\n";
    doc += "optimal_theta = " + num(result.optimal_theta) + "\n";
    doc += "mutual_information = " + num(result.mutual_information) + "\n";
    doc += "j_value = " + num(result.j_value) + "\n";
    write_output(args.out, doc);
    return kExitOk;
}

struct VerifyArgs {
    std::string state_spec;  // optional extra state included in the checks
    std::string out;
};

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

int run_verify(const VerifyArgs& args) {
    using namespace qgame;
    std::vector<CheckResult> checks;
    const auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        checks.push_back({name, ok, detail});
    };

    // extra state supplied on the command line, validated first
    std::optional<StateFamily> extra;
    if (!args.state_spec.empty()) {
        try {
            extra = parse_state_spec(args.state_spec);
            report("density_matrix", true, args.state_spec);
        } catch (const SpecError& e) {
            report("density_matrix", false, e.what());
        }
    }

    std::vector<StateFamily> zoo = {werner(0.0), werner(0.3), werner(1.0), d1(0.0),
                                    d1(0.5 * std::numbers::pi), d2(0.0),
                                    d2(0.5 * std::numbers::pi), product_state(0.7, 2.1)};
    if (extra) zoo.push_back(*extra);

    {  // projector completeness and idempotence
        double err = 0.0;
        for (int i = 0; i <= 36; ++i) {
            const double theta = kTwoPi * i / 36;
            const Matrix up = bloch_projector(theta, +1);
            const Matrix down = bloch_projector(theta, -1);
            err = std::max(err, (up + down - Matrix::identity(2)).max_abs());
            err = std::max(err, (up * up - up).max_abs());
        }
        report("projector_completeness", err <= 1e-12, "max error " + num(err));
    }
    {  // maximally mixed Werner state: every outcome probability is 1/4
        const DensityMatrix rho = werner(0.0).matrix;
        double err = 0.0;
        for (int i = 0; i < 20; ++i)
            for (int j = 0; j < 20; ++j)
                for (int s : {+1, -1})
                    for (int sp : {+1, -1})
                        err = std::max(err, std::abs(conditional_prob(rho, kTwoPi * i / 20,
                                                                      kTwoPi * j / 20, s, sp) -
                                                     0.25));
        report("werner0_quarter", err <= 1e-12, "max error " + num(err));
    }
    {  // d2(0) closed form: 1/4 (1 + sigma' cos theta_beta)
        const DensityMatrix rho = d2(0.0).matrix;
        double err = 0.0;
        for (int i = 0; i < 50; ++i)
            for (int j = 0; j < 50; ++j) {
                const double ta = kTwoPi * i / 49, tb = kTwoPi * j / 49;
                for (int s : {+1, -1})
                    for (int sp : {+1, -1})
                        err = std::max(err, std::abs(conditional_prob(rho, ta, tb, s, sp) -
                                                     0.25 * (1.0 + sp * std::cos(tb))));
            }
        report("d2_zero_closed_form", err <= 1e-12, "max error " + num(err));
    }
    {  // d2(pi) closed form: 1/4 (1 + sigma sigma' cos theta_alpha cos theta_beta)
        const DensityMatrix rho = d2(std::numbers::pi).matrix;
        double err = 0.0;
        for (int i = 0; i < 50; ++i)
            for (int j = 0; j < 50; ++j) {
                const double ta = kTwoPi * i / 49, tb = kTwoPi * j / 49;
                for (int s : {+1, -1})
                    for (int sp : {+1, -1})
                        err = std::max(err,
                                       std::abs(conditional_prob(rho, ta, tb, s, sp) -
                                                0.25 * (1.0 + s * sp * std::cos(ta) * std::cos(tb))));
            }
        report("d2_pi_closed_form", err <= 1e-12, "max error " + num(err));
    }
    {  // outcome normalization over the zoo
        double err = 0.0;
        for (const StateFamily& state : zoo)
            for (int i = 0; i < 15; ++i)
                for (int j = 0; j < 15; ++j) {
                    double sum = 0.0;
                    for (int s : {+1, -1})
                        for (int sp : {+1, -1})
                            sum += conditional_prob(state.matrix, kTwoPi * i / 15, kTwoPi * j / 15,
                                                    s, sp);
                    err = std::max(err, std::abs(sum - 1.0));
                }
        report("probability_normalization", err <= 1e-12, "max error " + num(err));
    }
    {  // constant sum for both payoff tensors over the zoo
        double err = 0.0;
        for (const PayoffTensor& tensor : {PayoffTensor::standard(), PayoffTensor::biased()})
            for (const StateFamily& state : zoo) {
                const GameInstance game{tensor, Priors::uniform(), state.matrix, "zoo"};
                for (int i = 0; i < 6; ++i) {
                    const StrategyProfile p{kTwoPi * i / 6, kTwoPi * (i + 1) / 7,
                                            kTwoPi * (i + 2) / 9, kTwoPi * (i + 3) / 11};
                    err = std::max(err, std::abs(expected_payoff(game, p, Player::A) +
                                                 expected_payoff(game, p, Player::B) - 1.0));
                }
            }
        report("constant_sum", err <= 1e-12, "max error " + num(err));
    }

    std::string doc;
    bool all_ok = true;
    for (const CheckResult& c : checks) {
        all_ok = all_ok && c.passed;
        doc += std::string(c.passed ? "PASS" : "FAIL") + " " + c.name + " (" + c.detail + ")\n";
    }
    doc += std::string("result = ") + (all_ok ? "pass" : "fail") + "\n";
    write_output(args.out, doc);
    return all_ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bayesian constant-sum quantum game toolkit"};
    app.require_subcommand(1);

    SurfaceArgs surface_args;
    CLI::App* surface = app.add_subcommand("surface", "Export a payoff surface as CSV");
    surface->add_option("--state", surface_args.state_spec, "State spec, e.g. werner:0.5")
        ->required();
    surface->add_option("--payoffs", surface_args.payoffs, "standard | biased");
    surface->add_option("--player", surface_args.player, "A | B | f");
    surface->add_option("--sweep", surface_args.sweep, "Two swept angle names, comma separated");
    surface->add_option("--fixed", surface_args.fixed, "Fixed angles, angle=value pairs");
    surface->add_option("--resolution", surface_args.resolution, "Samples per swept axis");
    surface->add_option("--out", surface_args.out, "Output CSV path (default stdout)");

    EquilibriaArgs eq_args;
    CLI::App* equilibria = app.add_subcommand("equilibria", "Search for pure-strategy Nash equilibria");
    equilibria->add_option("--state", eq_args.state_spec, "State spec")->required();
    equilibria->add_option("--payoffs", eq_args.payoffs, "standard | biased");
    equilibria->add_option("--grid", eq_args.grid, "Grid resolution per axis");
    equilibria->add_option("--threads", eq_args.threads, "Worker threads (0 = all available)");
    equilibria->add_option("--out", eq_args.out, "Output path (default stdout)");

    DiscordArgs discord_args;
    CLI::App* discord_cmd = app.add_subcommand("discord", "Compute quantum discord");
    discord_cmd->add_option("--state", discord_args.state_spec, "State spec")->required();
    discord_cmd->add_option("--orientation", discord_args.orientation, "measure_B | measure_A");
    discord_cmd->add_flag("--azimuthal-scan", discord_args.azimuthal_scan,
                          "Minimize over the azimuthal angle as well");
    discord_cmd->add_option("--out", discord_args.out, "Output path (default stdout)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run the built-in analytic check suite");
    verify->add_option("--state", verify_args.state_spec,
                       "Extra state spec to include in the density-matrix check");
    verify->add_option("--out", verify_args.out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitSpecError;
    }

    try {
        if (surface->parsed()) return run_surface(surface_args);
        if (equilibria->parsed()) return run_equilibria(eq_args);
        if (discord_cmd->parsed()) return run_discord(discord_args);
        if (verify->parsed()) return run_verify(verify_args);
    } catch (const qgame::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpecError;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpecError;
    }
    return kExitSpecError;
}
