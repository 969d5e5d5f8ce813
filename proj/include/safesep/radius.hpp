#pragma once

#include "safesep/params.hpp"
#include "safesep/vec3.hpp"

namespace safesep {

/// Gap between filtered and true separation due to velocity: (v_m + v_o) / l.
double maneuver_radius(double v_m, double v_o, double l);

/// Closed-form inflation absorbing packet loss, delay, and both noise
/// bounds: theta_m T_s v_o / (1 - theta_m) + v_o tau_dm + b + b_o.
double uncertainty_radius(const UncertaintyBudget& budget, double v_o);

/// Lower bound on the safety radius used during offline design:
/// sqrt((r_m + r_o)^2 + r_v^2) + r_e - r_o.
double designed_safety_radius(double r_m, double r_o, double r_v, double r_e);

/// Lower bound on the safety radius applied to the estimated filtered
/// distance in flight. Same right-hand side as the designed bound.
double practical_safety_radius(double r_m, double r_o, double r_v, double r_e);

/// Speed condition under which a non-cooperative obstacle can always be
/// outrun: v_m >= v_o + v_b + v_bo.
bool check_speed_condition(double v_m, double v_o, double v_b, double v_bo);

/// Maintaining the filtered separation at or above sqrt(r^2 + r_v^2)
/// guarantees the true separation stays at or above r.
double filtered_separation_threshold(double r, double r_v);

struct RadiusReport {
    double r_v = 0.0;
    double r_e = 0.0;
    double r_s_designed = 0.0;
    double r_s_practical = 0.0;  ///< equals r_s_designed; kept as the flight-phase alias
    double r_s_estimated = 0.0;  ///< estimated-radius alias, equal to r_s_designed
    bool speed_condition_ok = false;
};

RadiusReport compute_radius_report(const VehicleParams& veh, const ObstacleParams& obs,
                                   const UncertaintyBudget& budget);

enum class MonitorVerdict {
    kNotApplicable,  ///< outside the evaluation shell
    kSatisfied,
    kViolated,
};

/// Evaluates the boundary separation condition e_o'.xi_dot - e_o'.xi_hat_o_dot
/// >= (r_s + r_o) v_b on the shell | ||e_o|| - (r_s + r_o) | <= band.
MonitorVerdict separation_condition_monitor(const Vec3& e_o, const Vec3& xi_dot,
                                            const Vec3& xi_hat_o_dot, double r_s, double r_o,
                                            double v_b, double band, double slack = 1e-6);

/// Cooperative-obstacle relaxation: (r_s + r_o)(v_m - v_b) >= e_o'.xi_hat_o_dot.
bool check_cooperative_boundary_condition(const Vec3& e_o, const Vec3& xi_hat_o_dot, double r_s, double r_o,
                                double v_m, double v_b);

}  // namespace safesep
