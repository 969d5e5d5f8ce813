#include "safesep/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace safesep {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

std::string to_string(ObstacleBehavior b) {
    switch (b) {
        case ObstacleBehavior::kConstant: return "constant";
        case ObstacleBehavior::kChasing: return "chasing";
        case ObstacleBehavior::kCooperative: return "cooperative";
    }
    return "constant";
}

ObstacleBehavior behavior_from_string(const std::string& s) {
    if (s == "constant") return ObstacleBehavior::kConstant;
    if (s == "chasing") return ObstacleBehavior::kChasing;
    if (s == "cooperative") return ObstacleBehavior::kCooperative;
    throw std::invalid_argument("unknown obstacle behavior: " + s);
}

void ScenarioConfig::validate() const {
    std::vector<std::string> errs;
    auto check = [&](bool ok, const std::string& msg) {
        if (!ok) errs.push_back(msg);
    };
    check(duration > 0.0, "duration must be > 0");
    check(dt > 0.0, "dt must be > 0");
    check(dt <= budget.T_s * (1.0 + 1e-9), "dt must not exceed T_s");
    check(!obstacles.empty(), "at least one obstacle is required");
    check(guard_margin > 0.0, "guard_margin must be > 0");
    check(blend_margin > 0.0, "blend_margin must be > 0");
    check(monitor_band > 0.0, "monitor_band must be > 0");
    try {
        uav.validate();
    } catch (const std::exception& e) {
        errs.emplace_back(e.what());
    }
    try {
        budget.validate();
    } catch (const std::exception& e) {
        errs.emplace_back(e.what());
    }
    for (std::size_t k = 0; k < obstacles.size(); ++k) {
        const auto& o = obstacles[k];
        const std::string tag = "obstacle[" + std::to_string(k) + "]: ";
        try {
            o.params.validate();
        } catch (const std::exception& e) {
            errs.push_back(tag + e.what());
        }
        check(o.theta >= 0.0 && o.theta < 1.0, tag + "theta must be in [0,1)");
        check(o.theta <= budget.theta_m + 1e-12, tag + "theta exceeds theta_m");
        check(o.tau_d >= 0.0, tag + "tau_d must be >= 0");
        check(o.tau_d <= budget.tau_dm + 1e-12, tag + "tau_d exceeds tau_dm");
        if (o.behavior == ObstacleBehavior::kChasing) {
            check(o.chase_eps > 0.0, tag + "chase_eps must be > 0");
        }
    }
    if (!errs.empty()) {
        std::ostringstream os;
        os << "invalid scenario config:";
        for (const auto& e : errs) os << "\n  - " << e;
        throw std::invalid_argument(os.str());
    }
}

RunResult run_scenario(const ScenarioConfig& config) {
    config.validate();

    const double l = config.uav.l;
    const double v_m = config.uav.v_m;
    const std::size_t n_obs = config.obstacles.size();

    double max_r_o = 0.0;
    double max_v_o = 0.0;
    for (const auto& o : config.obstacles) {
        max_r_o = std::max(max_r_o, o.params.r_o);
        max_v_o = std::max(max_v_o, o.params.v_o);
    }

    double r_s = config.r_s;
    if (r_s <= 0.0) {
        const RadiusReport rep =
            compute_radius_report(config.uav, {max_r_o, max_v_o}, config.budget);
        r_s = rep.r_s_designed;
    }

    ControllerParams ctrl;
    ctrl.r_guard = r_s + max_r_o + config.guard_margin;
    ctrl.margin = config.blend_margin;
    ctrl.goal = config.goal;
    ctrl.v_m = v_m;
    ctrl.validate();

    std::uint64_t seed_state = config.seed;
    const BoundedNoise self_noise(splitmix64(seed_state), config.budget.b, config.budget.v_b);

    UavState uav{config.p0, config.v0};
    std::vector<ObstacleState> obs_states;
    std::vector<BroadcastLink> links;
    std::vector<Vec3> a_cmds;
    obs_states.reserve(n_obs);
    links.reserve(n_obs);
    a_cmds.reserve(n_obs);
    for (const auto& spec : config.obstacles) {
        obs_states.push_back({spec.p0, spec.v0});
        LinkParams lp;
        lp.theta = spec.theta;
        lp.tau_d = spec.tau_d;
        lp.T_s = config.budget.T_s;
        lp.noise_bound = config.budget.b_o;
        lp.noise_rate = config.budget.v_bo;
        lp.seed = splitmix64(seed_state);
        // Pre-run truth is extrapolated along the initial velocity; exact for
        // constant-velocity obstacles.
        const Vec3 xi0 = filtered_position(spec.p0, spec.v0, l);
        links.emplace_back(lp, xi0, spec.v0);
        a_cmds.push_back(spec.v0);
    }

    const auto n_steps = static_cast<std::size_t>(std::llround(config.duration / config.dt));
    const auto ts_every = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(config.budget.T_s / config.dt)));

    std::vector<TraceRecord> trace;
    trace.reserve(n_steps + 1);

    Vec3 v_c;
    std::vector<Vec3> e_list(n_obs);

    for (std::size_t i = 0;; ++i) {
        const double t = static_cast<double>(i) * config.dt;
        TraceRecord rec;
        rec.t = t;
        rec.p = uav.p;
        rec.v = uav.v;
        rec.xi = filtered_position(uav.p, uav.v, l);
        rec.xi_hat = rec.xi + self_noise.at(t);
        rec.obstacles.resize(n_obs);

        for (std::size_t k = 0; k < n_obs; ++k) {
            auto& ot = rec.obstacles[k];
            ot.p_o = obs_states[k].p_o;
            ot.v_o_vec = obs_states[k].v_o_vec;
            ot.xi_o = filtered_position(ot.p_o, ot.v_o_vec, l);
            const LinkEstimate est = links[k].estimate(t, ot.xi_o);
            ot.xi_bar_o = links[k].xi_bar();
            ot.xi_hat_o = est.xi_hat;
            ot.lambda_o = est.lambda_o;
            ot.dist_p = (rec.p - ot.p_o).norm();
            ot.dist_xi = (rec.xi - ot.xi_o).norm();
            ot.dist_e = (rec.xi_hat - ot.xi_hat_o).norm();
            e_list[k] = rec.xi_hat - ot.xi_hat_o;
        }

        if (i % ts_every == 0) {
            for (auto& link : links) link.tick_sample_hold(t);
            v_c = n_obs == 1 ? avoid_one(t, e_list[0], rec.xi_hat, ctrl)
                             : avoid_many(t, e_list, rec.xi_hat, ctrl);
            for (std::size_t k = 0; k < n_obs; ++k) {
                const auto& spec = config.obstacles[k];
                switch (spec.behavior) {
                    case ObstacleBehavior::kConstant:
                        break;  // a_o stays at the initial velocity
                    case ObstacleBehavior::kChasing:
                        a_cmds[k] = chasing_command(rec.xi, rec.obstacles[k].xi_o, v_c,
                                                    spec.chase_eps);
                        break;
                    case ObstacleBehavior::kCooperative: {
                        ControllerParams mirror = ctrl;
                        mirror.v_m = std::max(spec.params.v_o,
                                              std::numeric_limits<double>::min());
                        mirror.goal = spec.goal;
                        a_cmds[k] = cooperative_command(
                            t, e_list[k], [&](double tt, const Vec3& e) {
                                return avoid_one(tt, e, rec.obstacles[k].xi_o, mirror);
                            });
                        break;
                    }
                }
            }
        }
        rec.v_c = v_c;

        rec.min_dist_p = std::numeric_limits<double>::infinity();
        rec.min_dist_xi = std::numeric_limits<double>::infinity();
        rec.min_dist_e = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < n_obs; ++k) {
            const auto& ot = rec.obstacles[k];
            const double r_o = config.obstacles[k].params.r_o;
            rec.min_dist_p = std::min(rec.min_dist_p, ot.dist_p);
            rec.min_dist_xi = std::min(rec.min_dist_xi, ot.dist_xi);
            rec.min_dist_e = std::min(rec.min_dist_e, ot.dist_e);
            rec.est_violation = rec.est_violation || ot.dist_e < r_s + r_o;
            rec.collision = rec.collision || ot.dist_p < config.uav.r_m + r_o;
        }
        trace.push_back(std::move(rec));
        if (i == n_steps) break;

        uav = step_uav(uav, v_c, l, config.dt);
        for (std::size_t k = 0; k < n_obs; ++k) {
            obs_states[k] = step_obstacle(obs_states[k], a_cmds[k], l, config.dt);
            const Vec3 xi_new = filtered_position(obs_states[k].p_o, obs_states[k].v_o_vec, l);
            links[k].push_truth(t + config.dt, xi_new);
            links[k].advance_expectation(t, config.dt);
        }
    }

    // Post pass: boundary monitor with central-difference estimate rates.
    RunVerdict verdict;
    verdict.r_s = r_s;
    verdict.min_true_distance = std::numeric_limits<double>::infinity();
    verdict.min_filtered_distance = std::numeric_limits<double>::infinity();
    verdict.min_estimated_distance = std::numeric_limits<double>::infinity();
    verdict.per_obstacle_min_true.assign(n_obs, std::numeric_limits<double>::infinity());
    verdict.per_obstacle_min_estimated.assign(n_obs, std::numeric_limits<double>::infinity());

    for (std::size_t i = 0; i < trace.size(); ++i) {
        auto& rec = trace[i];
        verdict.min_true_distance = std::min(verdict.min_true_distance, rec.min_dist_p);
        verdict.min_filtered_distance = std::min(verdict.min_filtered_distance, rec.min_dist_xi);
        verdict.min_estimated_distance = std::min(verdict.min_estimated_distance, rec.min_dist_e);
        verdict.monitors.max_speed = std::max(verdict.monitors.max_speed, rec.v.norm());
        verdict.collision = verdict.collision || rec.collision;
        if (rec.est_violation && !verdict.first_violation_time) {
            verdict.first_violation_time = rec.t;
        }
        for (std::size_t k = 0; k < n_obs; ++k) {
            auto& ot = rec.obstacles[k];
            verdict.per_obstacle_min_true[k] =
                std::min(verdict.per_obstacle_min_true[k], ot.dist_p);
            verdict.per_obstacle_min_estimated[k] =
                std::min(verdict.per_obstacle_min_estimated[k], ot.dist_e);
            verdict.monitors.max_lambda_norm =
                std::max(verdict.monitors.max_lambda_norm, ot.lambda_o.norm());
            if (i == 0 || i + 1 == trace.size()) continue;
            const Vec3 xi_hat_o_dot =
                (trace[i + 1].obstacles[k].xi_hat_o - trace[i - 1].obstacles[k].xi_hat_o) /
                (2.0 * config.dt);
            const Vec3 e_o = rec.xi_hat - ot.xi_hat_o;
            const MonitorVerdict mv = separation_condition_monitor(
                e_o, rec.v_c, xi_hat_o_dot, r_s, config.obstacles[k].params.r_o,
                config.budget.v_b, config.monitor_band);
            if (mv == MonitorVerdict::kNotApplicable) {
                ot.monitor = 0;
            } else if (mv == MonitorVerdict::kSatisfied) {
                ot.monitor = 1;
                ++verdict.monitors.shell_evaluations;
            } else {
                ot.monitor = -1;
                ++verdict.monitors.shell_evaluations;
                ++verdict.monitors.shell_violations;
            }
        }
    }
    return {std::move(trace), std::move(verdict)};
}

double ks_statistic(std::vector<double> samples) {
    const std::size_t n = samples.size();
    if (n < 30) throw std::invalid_argument("ks_statistic: need at least 30 samples");
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / double(n);
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / double(n - 1));
    if (!(sd > 0.0)) throw std::domain_error("ks_statistic: degenerate (constant) samples");
    std::sort(samples.begin(), samples.end());
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = normal_cdf((samples[i] - mean) / sd);
        d = std::max(d, std::abs(f - double(i) / double(n)));
        d = std::max(d, std::abs(double(i + 1) / double(n) - f));
    }
    return d;
}

bool verify_filtered_separation_implication(const std::vector<TraceRecord>& trace, double r, double r_v) {
    if (trace.empty()) throw std::invalid_argument("verify_filtered_separation_implication: empty trace");
    if (trace.front().obstacles.size() != 1) {
        throw std::invalid_argument("verify_filtered_separation_implication: single-obstacle trace required");
    }
    const double threshold = filtered_separation_threshold(r, r_v);
    bool premise = trace.front().obstacles[0].dist_p >= r * (1.0 - 1e-12);
    for (const auto& rec : trace) {
        premise = premise && rec.obstacles[0].dist_xi >= threshold * (1.0 - 1e-12);
        if (premise && rec.obstacles[0].dist_p < r * (1.0 - 1e-6)) return false;
    }
    return true;
}

}  // namespace safesep
