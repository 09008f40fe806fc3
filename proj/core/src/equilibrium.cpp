#include "qgame/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <unordered_map>

namespace qgame {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
    double w = std::fmod(theta, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

double inf_norm(const std::array<double, 4>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Solves a 4x4 symmetric system by Gaussian elimination with partial
// pivoting. Returns false when the matrix is numerically singular.
bool solve4(std::array<std::array<double, 4>, 4> a, std::array<double, 4> b,
            std::array<double, 4>& x) {
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < 1e-14) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int r = col + 1; r < 4; ++r) {
            const double m = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= m * a[col][c];
            b[r] -= m * b[col];
        }
    }
    for (int r = 3; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < 4; ++c) s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return true;
}

// Damped Newton on the gradient, with a descent fallback on |J|^2.
// Returns true when |J|inf drops below the stationarity tolerance.
bool refine_root(const PayoffFunction& f, StrategyProfile& x, const SearchOptions& opt) {
    std::array<double, 4> g = jacobian(f, x, opt.jacobian_step);
    double gnorm = inf_norm(g);
    for (int iter = 0; iter < opt.max_refine_iters && gnorm >= opt.stationary_tol; ++iter) {
        const auto h = hessian_full(f, x, opt.hessian_step);
        std::array<double, 4> step{};
        std::array<double, 4> rhs{-g[0], -g[1], -g[2], -g[3]};
        bool have_direction = solve4(h, rhs, step);
        if (!have_direction) {
            // descent direction for |J|^2 / 2 is -H g
            for (int k = 0; k < 4; ++k) {
                step[k] = 0.0;
                for (int j = 0; j < 4; ++j) step[k] -= h[k][j] * g[j];
            }
            const double n = inf_norm(step);
            if (n < 1e-15) return false;
            for (double& s : step) s /= n;  // unit-size probe direction
        }
        double alpha = 1.0;
        bool improved = false;
        for (int halving = 0; halving < 16; ++halving, alpha *= 0.5) {
            StrategyProfile trial = x;
            for (int k = 0; k < 4; ++k) trial[k] = x[k] + alpha * step[k];
            const auto gt = jacobian(f, trial, opt.jacobian_step);
            if (inf_norm(gt) < gnorm) {
                x = trial;
                g = gt;
                gnorm = inf_norm(gt);
                improved = true;
                break;
            }
        }
        if (!improved) return false;
    }
    return gnorm < opt.stationary_tol;
}

// Best-response probing: true when no unilateral single-coordinate deviation
// improves the deviating player's payoff by more than slack. Coordinates 0,1
// belong to Alice (who gains when f rises), 2,3 to Bob (who gains when f
// falls).
bool probe_pass(const PayoffFunction& f, const StrategyProfile& x, int probe_count,
                double slack) {
    const double base = f(x);
    for (int coord = 0; coord < 4; ++coord) {
        const bool alice = coord < 2;
        for (int i = 0; i < probe_count; ++i) {
            StrategyProfile trial = x;
            trial[coord] = kTwoPi * i / probe_count;
            const double gain = alice ? f(trial) - base : base - f(trial);
            if (gain > slack) return false;
        }
    }
    return true;
}

struct TorusHash {
    std::size_t operator()(const std::array<long long, 4>& key) const {
        std::size_t h = 0;
        for (long long k : key) h = h * 1000003u + std::hash<long long>{}(k);
        return h;
    }
};

}  // namespace

double torus_distance(double a, double b) {
    const double d = std::abs(wrap_angle(a) - wrap_angle(b));
    return std::min(d, kTwoPi - d);
}

std::array<double, 4> jacobian(const PayoffFunction& f, const StrategyProfile& profile,
                               double step) {
    std::array<double, 4> g{};
    for (int k = 0; k < 4; ++k) {
        StrategyProfile hi = profile, lo = profile;
        hi[k] += step;
        lo[k] -= step;
        g[k] = (f(hi) - f(lo)) / (2.0 * step);
    }
    return g;
}

std::array<double, 4> jacobian(const GameInstance& game, const StrategyProfile& profile) {
    const PayoffEvaluator eval(game);
    return jacobian([&](const StrategyProfile& p) { return eval.f(p); }, profile);
}

std::array<double, 4> hessian_diag(const PayoffFunction& f, const StrategyProfile& profile,
                                   double step) {
    std::array<double, 4> h{};
    const double center = f(profile);
    for (int k = 0; k < 4; ++k) {
        StrategyProfile hi = profile, lo = profile;
        hi[k] += step;
        lo[k] -= step;
        h[k] = (f(hi) - 2.0 * center + f(lo)) / (step * step);
    }
    return h;
}

std::array<double, 4> hessian_diag(const GameInstance& game, const StrategyProfile& profile) {
    const PayoffEvaluator eval(game);
    return hessian_diag([&](const StrategyProfile& p) { return eval.f(p); }, profile);
}

std::array<std::array<double, 4>, 4> hessian_full(const PayoffFunction& f,
                                                  const StrategyProfile& profile, double step) {
    std::array<std::array<double, 4>, 4> h{};
    const auto diag = hessian_diag(f, profile, step);
    for (int k = 0; k < 4; ++k) h[k][k] = diag[k];
    for (int r = 0; r < 4; ++r)
        for (int c = r + 1; c < 4; ++c) {
            StrategyProfile pp = profile, pm = profile, mp = profile, mm = profile;
            pp[r] += step; pp[c] += step;
            pm[r] += step; pm[c] -= step;
            mp[r] -= step; mp[c] += step;
            mm[r] -= step; mm[c] -= step;
            h[r][c] = h[c][r] = (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * step * step);
        }
    return h;
}

NashClass classify(const std::array<double, 4>& d, double band) {
    for (double v : d)
        if (std::isnan(v)) throw std::invalid_argument("classify: NaN Hessian entry");
    const bool violated = d[0] > band || d[1] > band || d[2] < -band || d[3] < -band;
    if (violated) return NashClass::not_nash;
    const bool strict = d[0] < -band && d[1] < -band && d[2] > band && d[3] > band;
    return strict ? NashClass::strict_nash : NashClass::weak_nash;
}

std::vector<StrategyProfile> dedup_profiles(const std::vector<StrategyProfile>& points,
                                            double tol) {
    std::vector<StrategyProfile> kept;
    std::unordered_multimap<std::array<long long, 4>, std::size_t, TorusHash> cells;
    const long long ncells = std::max<long long>(1, std::llround(std::floor(kTwoPi / tol)));
    const auto cell_of = [&](const StrategyProfile& p) {
        std::array<long long, 4> key{};
        for (int k = 0; k < 4; ++k) {
            long long c = static_cast<long long>(std::floor(wrap_angle(p[k]) / tol));
            key[k] = ((c % ncells) + ncells) % ncells;
        }
        return key;
    };
    const auto close = [&](const StrategyProfile& a, const StrategyProfile& b) {
        for (int k = 0; k < 4; ++k)
            if (torus_distance(a[k], b[k]) > tol) return false;
        return true;
    };
    for (const StrategyProfile& p : points) {
        const auto center = cell_of(p);
        bool duplicate = false;
        // check the 3^4 neighbouring cells (torus wrap included)
        for (int n = 0; n < 81 && !duplicate; ++n) {
            std::array<long long, 4> key = center;
            int idx = n;
            for (int k = 0; k < 4; ++k, idx /= 3)
                key[k] = (key[k] + (idx % 3) - 1 + ncells) % ncells;
            auto range = cells.equal_range(key);
            for (auto it = range.first; it != range.second; ++it)
                if (close(p, kept[it->second])) {
                    duplicate = true;
                    break;
                }
        }
        if (!duplicate) {
            cells.emplace(center, kept.size());
            kept.push_back(p);
        }
    }
    return kept;
}

std::vector<CriticalPoint> find_stationary_points(const GameInstance& game,
                                                  const SearchOptions& options) {
    if (options.resolution < 5)
        throw std::invalid_argument("find_stationary_points: resolution must be >= 5");
    const PayoffEvaluator eval(game);
    const PayoffFunction f = [&](const StrategyProfile& p) { return eval.f(p); };

    const int res = options.resolution;
    const std::size_t total = static_cast<std::size_t>(res) * res * res * res;
    std::vector<double> norms(total);

    const auto node_angle = [&](int i) { return kTwoPi * i / res; };
    const auto node_index = [&](int i0, int i1, int i2, int i3) {
        return ((static_cast<std::size_t>(i0) * res + i1) * res + i2) * res + i3;
    };

    int nthreads = options.threads > 0 ? options.threads
                                       : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min(nthreads, res));

    // pass 1: |J|inf on every grid node
    const auto scan_slab = [&](int lo, int hi) {
        for (int i0 = lo; i0 < hi; ++i0)
            for (int i1 = 0; i1 < res; ++i1)
                for (int i2 = 0; i2 < res; ++i2)
                    for (int i3 = 0; i3 < res; ++i3) {
                        const StrategyProfile p{node_angle(i0), node_angle(i1), node_angle(i2),
                                                node_angle(i3)};
                        norms[node_index(i0, i1, i2, i3)] =
                            inf_norm(jacobian(f, p, options.jacobian_step));
                    }
    };
    if (nthreads == 1) {
        scan_slab(0, res);
    } else {
        std::vector<std::thread> workers;
        for (int t = 0; t < nthreads; ++t) {
            const int lo = res * t / nthreads;
            const int hi = res * (t + 1) / nthreads;
            workers.emplace_back(scan_slab, lo, hi);
        }
        for (auto& w : workers) w.join();
    }

    // pass 2: seed refinement from axis-local minima under the threshold
    std::vector<StrategyProfile> refined;
    const auto is_local_min = [&](int i0, int i1, int i2, int i3) {
        const double v = norms[node_index(i0, i1, i2, i3)];
        const int idx[4] = {i0, i1, i2, i3};
        for (int k = 0; k < 4; ++k)
            for (int d : {-1, +1}) {
                int n[4] = {idx[0], idx[1], idx[2], idx[3]};
                n[k] = (n[k] + d + res) % res;
                if (norms[node_index(n[0], n[1], n[2], n[3])] < v) return false;
            }
        return true;
    };
    for (int i0 = 0; i0 < res; ++i0)
        for (int i1 = 0; i1 < res; ++i1)
            for (int i2 = 0; i2 < res; ++i2)
                for (int i3 = 0; i3 < res; ++i3) {
                    if (norms[node_index(i0, i1, i2, i3)] >= options.seed_threshold) continue;
                    if (!is_local_min(i0, i1, i2, i3)) continue;
                    StrategyProfile x{node_angle(i0), node_angle(i1), node_angle(i2),
                                      node_angle(i3)};
                    if (!refine_root(f, x, options)) continue;
                    for (int k = 0; k < 4; ++k) x[k] = wrap_angle(x[k]);
                    refined.push_back(x);
                }

    // pass 3: deduplicate on the torus, classify, probe
    std::vector<CriticalPoint> result;
    for (const StrategyProfile& p : dedup_profiles(refined, options.dedup_tol)) {
        CriticalPoint cp;
        cp.profile = p;
        cp.jacobian_norm = inf_norm(jacobian(f, p, options.jacobian_step));
        cp.hessian_diag = hessian_diag(f, p, options.hessian_step);
        cp.classification = classify(cp.hessian_diag, options.hessian_band);
        cp.nash_verified = cp.classification != NashClass::not_nash &&
                           probe_pass(f, p, options.probe_count, options.probe_slack);
        cp.payoff_a = eval.payoff(p, Player::A);
        cp.payoff_b = eval.payoff(p, Player::B);
        result.push_back(cp);
    }

    // deterministic ordering
    std::sort(result.begin(), result.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        for (int k = 0; k < 4; ++k)
            if (a.profile[k] != b.profile[k]) return a.profile[k] < b.profile[k];
        return false;
    });
    return result;
}

EquilibriumReport find_nash_equilibria(const GameInstance& game, const SearchOptions& options) {
    EquilibriumReport report;
    report.game_description = game.state_description + " / " + game.payoffs.name();
    report.grid_resolution = options.resolution;

    const PayoffEvaluator eval(game);
    // flat-surface shortcut on a coarse probe grid
    double max_abs_f = 0.0;
    const int probe_res = 11;
    for (int i0 = 0; i0 < probe_res; ++i0)
        for (int i1 = 0; i1 < probe_res; ++i1)
            for (int i2 = 0; i2 < probe_res; ++i2)
                for (int i3 = 0; i3 < probe_res; ++i3) {
                    const StrategyProfile p{kTwoPi * i0 / probe_res, kTwoPi * i1 / probe_res,
                                            kTwoPi * i2 / probe_res, kTwoPi * i3 / probe_res};
                    max_abs_f = std::max(max_abs_f, std::abs(eval.f(p)));
                }
    if (max_abs_f < options.flat_tol) {
        report.flat_surface = true;
        report.verdict = Verdict::weak_nash_flat;
        return report;
    }

    report.critical_points = find_stationary_points(game, options);
    // An isolated, probe-verified saddle is reported as a strict Nash find;
    // the flat surface is the weak case.
    const bool any_nash = std::any_of(
        report.critical_points.begin(), report.critical_points.end(),
        [](const CriticalPoint& cp) { return cp.nash_verified; });
    report.verdict = any_nash ? Verdict::strict_nash_found : Verdict::none;
    return report;
}

bool verify_nash_inequalities(const GameInstance& game, const StrategyProfile& profile,
                              int probe_count, double slack) {
    const double base_a = expected_payoff(game, profile, Player::A);
    const double base_b = expected_payoff(game, profile, Player::B);
    for (int coord = 0; coord < 4; ++coord) {
        const bool alice = coord < 2;
        for (int i = 0; i < probe_count; ++i) {
            StrategyProfile trial = profile;
            trial[coord] = kTwoPi * i / probe_count;
            const double dev =
                expected_payoff(game, trial, alice ? Player::A : Player::B);
            if (dev > (alice ? base_a : base_b) + slack) return false;
        }
    }
    return true;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::strict_nash_found: return "strict_nash_found";
        case Verdict::weak_nash_flat: return "weak_nash_flat";
        case Verdict::none: return "none";
    }
    return "?";
}

std::string nash_class_name(NashClass c) {
    switch (c) {
        case NashClass::strict_nash: return "strict_nash";
        case NashClass::weak_nash: return "weak_nash";
        case NashClass::not_nash: return "not_nash";
    }
    return "?";
}

}  // namespace qgame
