#pragma once

#include <cstddef>
#include <vector>

#include "safesep/dynamics.hpp"
#include "safesep/vec3.hpp"

namespace safesep {

/// Parameters of the shipped avoidance law. The law ramps from goal-seeking
/// to a fully radial escape as the estimated separation falls from
/// r_guard + margin down to r_guard; at and inside r_guard the command is
/// exactly v_m along e_o, which meets the boundary inner-product floor with
/// equality on the sphere ||e_o|| = r_s + r_o.
struct ControllerParams {
    double r_guard = 0.0;   ///< activation radius, must exceed r_s + r_o [m]
    double margin = 0.0;    ///< blend band width [m], > 0
    Vec3 goal;              ///< waypoint [m]
    double v_m = 0.0;       ///< command cap [m/s]
    double goal_gain = 1.0; ///< goal-seeking proportional gain [1/s]

    void validate() const;
};

/// Avoidance command against a single obstacle. e_o is the estimated
/// filtered separation (self minus obstacle); self_xi_hat is the vehicle's
/// own estimated filtered position, used only for goal seeking.
Vec3 avoid_one(double t, const Vec3& e_o, const Vec3& self_xi_hat, const ControllerParams& params);

/// Multi-obstacle form: proximity-weighted combination of the per-obstacle
/// radial terms. With a single obstacle inside its blend band this reduces
/// exactly to avoid_one.
Vec3 avoid_many(double t, const std::vector<Vec3>& e_list, const Vec3& self_xi_hat,
                const ControllerParams& params);

struct CertReport {
    double min_inner = 0.0;   ///< min over sphere samples of x' c(t, x)
    double threshold = 0.0;   ///< (r_s + r_o) v_m
    Vec3 worst_direction;
    bool certified = false;
    std::size_t n_samples = 0;
};

/// Samples quasi-uniform directions on the sphere ||x|| = r_s + r_o and
/// checks the boundary inner-product floor x' c(t, x) >= (r_s + r_o) v_m.
CertReport certify_boundary_floor(const ControlLaw& controller, double r_s, double r_o, double v_m,
                          std::size_t n_samples, double tolerance = 1e-9);

}  // namespace safesep
