#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "safesep/channel.hpp"
#include "safesep/controller.hpp"
#include "safesep/dynamics.hpp"
#include "safesep/params.hpp"
#include "safesep/radius.hpp"

namespace safesep {

enum class ObstacleBehavior {
    kConstant,     ///< holds its initial velocity
    kChasing,      ///< matches the vehicle's filtered velocity plus a pursuit term
    kCooperative,  ///< runs the same avoidance law on mirrored feedback
};

std::string to_string(ObstacleBehavior b);
ObstacleBehavior behavior_from_string(const std::string& s);

struct ObstacleSpec {
    ObstacleParams params;
    Vec3 p0;
    Vec3 v0;
    ObstacleBehavior behavior = ObstacleBehavior::kConstant;
    double theta = 0.0;      ///< per-link loss probability
    double tau_d = 0.0;      ///< per-link delay [s]
    double chase_eps = 2.0;  ///< pursuit closing speed for kChasing [m/s]
    Vec3 goal;               ///< waypoint for kCooperative goal seeking
};

struct ScenarioConfig {
    std::string name = "custom";
    double duration = 20.0;
    double dt = 0.01;
    std::uint64_t seed = 0;
    VehicleParams uav;
    Vec3 p0;
    Vec3 v0;
    Vec3 goal;
    std::vector<ObstacleSpec> obstacles;
    UncertaintyBudget budget;
    double r_s = 0.0;           ///< explicit safety radius; <= 0 computes it from the budget
    double guard_margin = 2.0;  ///< r_guard = r_s + r_o + guard_margin
    double blend_margin = 2.0;  ///< controller blend band [m]
    double monitor_band = 0.1;  ///< shell half-width for the boundary monitor [m]

    void validate() const;  // throws listing every offending field
};

struct ObstacleTrace {
    Vec3 p_o, v_o_vec, xi_o, xi_bar_o, xi_hat_o, lambda_o;
    double dist_p = 0.0;   ///< || p - p_o ||
    double dist_xi = 0.0;  ///< || xi - xi_o ||
    double dist_e = 0.0;   ///< || xi_hat - xi_hat_o ||
    int monitor = 0;       ///< boundary monitor: 0 off-shell, 1 satisfied, -1 violated
};

struct TraceRecord {
    double t = 0.0;
    Vec3 p, v, xi, xi_hat;
    Vec3 v_c;  ///< applied (saturated) command; also the filtered velocity
    std::vector<ObstacleTrace> obstacles;
    double min_dist_p = 0.0;
    double min_dist_xi = 0.0;
    double min_dist_e = 0.0;
    bool est_violation = false;
    bool collision = false;
};

struct MonitorSummary {
    std::size_t shell_evaluations = 0;
    std::size_t shell_violations = 0;
    double max_lambda_norm = 0.0;
    double max_speed = 0.0;  ///< max || v || over the run
};

struct RunVerdict {
    double r_s = 0.0;  ///< radius the run was judged against
    double min_true_distance = 0.0;
    double min_filtered_distance = 0.0;
    double min_estimated_distance = 0.0;
    std::vector<double> per_obstacle_min_true;
    std::vector<double> per_obstacle_min_estimated;
    std::optional<double> first_violation_time;
    bool collision = false;
    MonitorSummary monitors;
};

struct RunResult {
    std::vector<TraceRecord> trace;
    RunVerdict verdict;
};

/// Deterministic scenario execution. Identical (config, seed) produce an
/// identical trace. Handles one or many obstacles; single-obstacle configs
/// through the multi path give the same verdict.
RunResult run_scenario(const ScenarioConfig& config);

/// One-sample Kolmogorov-Smirnov statistic of the samples against a normal
/// with the sample mean and variance.
double ks_statistic(std::vector<double> samples);

/// Checks the true-versus-filtered separation implication along a
/// single-obstacle trace: wherever the filtered separation has stayed at or
/// above sqrt(r^2 + r_v^2) since the start (and the true separation started
/// at or above r), the true separation must still be at or above r.
bool verify_filtered_separation_implication(const std::vector<TraceRecord>& trace, double r, double r_v);

}  // namespace safesep
