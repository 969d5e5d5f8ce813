#pragma once

#include <functional>

#include "safesep/core.hpp"
#include "safesep/vec3.hpp"

namespace safesep {

struct UavState {
    Vec3 p;  ///< position [m]
    Vec3 v;  ///< velocity [m/s]
};

struct ObstacleState {
    Vec3 p_o;
    Vec3 v_o_vec;
};

/// Clamps a velocity command to norm v_m, preserving direction.
Vec3 saturate_command(const Vec3& v_c, double v_m);

/// One classical RK4 step of p' = v, v' = -l (v - v_c) with v_c held constant
/// over the step.
UavState step_uav(const UavState& s, const Vec3& v_c, double l, double dt);

/// One RK4 step of the obstacle model p_o' = v_o, v_o' = -l (v_o - a_o).
/// With v_o(0) = a_o constant the motion is exactly straight-line constant
/// velocity.
ObstacleState step_obstacle(const ObstacleState& s, const Vec3& a_o, double l, double dt);

/// Filtered-velocity command of an obstacle chasing the vehicle: matches the
/// vehicle's filtered velocity and adds a pursuit component of magnitude eps
/// pointed at the vehicle. Guarantees the separation shrinks at eps when the
/// vehicle cannot outrun it.
Vec3 chasing_command(const Vec3& xi, const Vec3& xi_o, const Vec3& xi_dot, double eps);

using ControlLaw = std::function<Vec3(double t, const Vec3& e_o)>;

/// Command of a cooperative obstacle: it runs the given avoidance law on the
/// mirrored feedback -e_o, treating the vehicle as its obstacle.
inline Vec3 cooperative_command(double t, const Vec3& e_o_mirror, const ControlLaw& controller) {
    return controller(t, -e_o_mirror);
}

}  // namespace safesep
