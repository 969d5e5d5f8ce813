#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "safesep/channel.hpp"
#include "safesep/params.hpp"
#include "safesep/vec3.hpp"

namespace safesep {

/// Input profile for the first-order tracking bound check: integrates
/// x' = -k(t) (x - y(t)) and verifies the norm bound, plus the rate bound
/// when the initial gap qualifies for it.
struct TrackingProfile {
    std::function<double(double)> k;
    double k_min = 0.0;
    double k_max = 0.0;
    std::function<Vec3(double)> y;
    double y_max = 0.0;
    double v_y_max = 0.0;
    Vec3 x0;
    double duration = 10.0;
    double dt = 1e-3;
};

struct TrackingBoundResult {
    double max_x_norm = 0.0;
    double max_x_dot_norm = 0.0;
    bool rate_bound_applicable = false;  ///< ||x0 - y(0)|| <= v_y_max / k_min held
    bool norm_bound_ok = false;          ///< max ||x|| <= y_max (1 + 1e-6)
    bool rate_bound_ok = false;          ///< max ||x'|| <= (k_max/k_min) v_y_max (1 + 1e-6)
    bool ok = false;
};

/// Throws on precondition violations (k outside [k_min, k_max] along the
/// grid, ||x0|| > y_max, non-positive bounds).
TrackingBoundResult verify_tracking_bounds(const TrackingProfile& profile);

/// Randomized admissible profile for the sweep: k oscillates inside
/// [k_min, k_max], y is a certified bounded signal.
TrackingProfile random_tracking_profile(std::uint64_t seed, bool qualify_rate_bound);

struct SeparationCurve {
    std::vector<double> t;
    std::vector<double> p_norm;   ///< true separation over time
    std::vector<double> xi_norm;  ///< filtered separation over time
    double min_p_norm = 0.0;
};

/// Anti-parallel equality construction: the filtered separation is held
/// exactly at sqrt(r^2 + r_v^2) while the relative velocity norm stays at
/// l * r_v; the true separation then rides the floor r for all time.
SeparationCurve equality_separation_curve(double r, double l, double v_m, double v_o,
                                          double duration, double dt);

/// Sub-threshold construction: the filtered separation is held at
/// sqrt(r^2 + r_v^2 - eps_o); the true separation must dip below r.
SeparationCurve necessity_separation_curve(double r, double l, double v_m, double v_o,
                                           double eps_o, double duration, double dt);

struct LambdaSweepResult {
    double worst_ratio = 0.0;  ///< max over runs of max ||lambda|| / bound
    double bound = 0.0;        ///< v_o tau_dm + theta_m T_s v_o / (1 - theta_m)
    bool ok = false;           ///< worst_ratio <= 1.01
};

/// Runs the expectation model over randomized admissible obstacle
/// trajectories (filtered speed below v_o, per-link theta and tau_d drawn
/// within the budget) and checks the closed-form lambda bound.
LambdaSweepResult lambda_bound_sweep(const UncertaintyBudget& budget, double v_o,
                                     std::size_t n_trajectories, std::uint64_t seed,
                                     double duration = 20.0);

}  // namespace safesep
