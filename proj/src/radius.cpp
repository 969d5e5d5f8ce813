#include "safesep/radius.hpp"

#include <cmath>
#include <stdexcept>

namespace safesep {

double maneuver_radius(double v_m, double v_o, double l) {
    if (l <= 0.0) throw std::invalid_argument("maneuver_radius: l must be > 0");
    if (v_m < 0.0 || v_o < 0.0)
        throw std::invalid_argument("maneuver_radius: speeds must be >= 0");
    return (v_m + v_o) / l;
}

double uncertainty_radius(const UncertaintyBudget& budget, double v_o) {
    if (budget.theta_m >= 1.0)
        throw std::invalid_argument("uncertainty_radius: theta_m must be < 1");
    budget.validate();
    return budget.theta_m * budget.T_s * v_o / (1.0 - budget.theta_m) + v_o * budget.tau_dm +
           budget.b + budget.b_o;
}

double designed_safety_radius(double r_m, double r_o, double r_v, double r_e) {
    if (r_m <= 0.0 || r_o <= 0.0)
        throw std::invalid_argument("designed_safety_radius: radii must be > 0");
    return std::sqrt((r_m + r_o) * (r_m + r_o) + r_v * r_v) + r_e - r_o;
}

double practical_safety_radius(double r_m, double r_o, double r_v, double r_e) {
    // The flight-phase bound shares the design-phase right-hand side.
    return designed_safety_radius(r_m, r_o, r_v, r_e);
}

bool check_speed_condition(double v_m, double v_o, double v_b, double v_bo) {
    return v_m >= v_o + v_b + v_bo;
}

double filtered_separation_threshold(double r, double r_v) {
    if (r < 0.0 || r_v < 0.0)
        throw std::invalid_argument("filtered_separation_threshold: radii must be >= 0");
    return std::sqrt(r * r + r_v * r_v);
}

RadiusReport compute_radius_report(const VehicleParams& veh, const ObstacleParams& obs,
                                   const UncertaintyBudget& budget) {
    veh.validate();
    obs.validate();
    budget.validate();
    RadiusReport rep;
    rep.r_v = maneuver_radius(veh.v_m, obs.v_o, veh.l);
    rep.r_e = uncertainty_radius(budget, obs.v_o);
    rep.r_s_designed = designed_safety_radius(veh.r_m, obs.r_o, rep.r_v, rep.r_e);
    rep.r_s_practical = rep.r_s_designed;
    rep.r_s_estimated = rep.r_s_designed;
    rep.speed_condition_ok = check_speed_condition(veh.v_m, obs.v_o, budget.v_b, budget.v_bo);
    return rep;
}

MonitorVerdict separation_condition_monitor(const Vec3& e_o, const Vec3& xi_dot,
                                            const Vec3& xi_hat_o_dot, double r_s, double r_o,
                                            double v_b, double band, double slack) {
    if (band <= 0.0) throw std::invalid_argument("separation_condition_monitor: band must be > 0");
    const double dist = e_o.norm();
    const double shell = r_s + r_o;
    if (std::abs(dist - shell) > band) return MonitorVerdict::kNotApplicable;
    const double lhs = e_o.dot(xi_dot) - e_o.dot(xi_hat_o_dot);
    return lhs >= shell * v_b - slack ? MonitorVerdict::kSatisfied : MonitorVerdict::kViolated;
}

bool check_cooperative_boundary_condition(const Vec3& e_o, const Vec3& xi_hat_o_dot, double r_s, double r_o,
                                double v_m, double v_b) {
    return (r_s + r_o) * (v_m - v_b) >= e_o.dot(xi_hat_o_dot);
}

}  // namespace safesep
