#pragma once

#include "safesep/params.hpp"
#include "safesep/vec3.hpp"

namespace safesep {

/// Position plus velocity scaled by the inverse maneuver constant. This
/// collapses the second-order vehicle model into a single integrator whose
/// derivative is exactly the applied velocity command.
inline Vec3 filtered_position(const Vec3& p, const Vec3& v, double l) {
    if (l <= 0.0) throw std::invalid_argument("filtered_position: l must be > 0");
    return p + v * (1.0 / l);
}

/// Relative position, velocity, and filtered position of vehicle minus
/// obstacle. xi_tilde == p_tilde + v_tilde / l holds exactly.
struct ErrorTriplet {
    Vec3 p_tilde;
    Vec3 v_tilde;
    Vec3 xi_tilde;
};

inline ErrorTriplet position_error_triplet(const Vec3& p, const Vec3& v, const Vec3& p_o,
                                           const Vec3& v_o, double l) {
    ErrorTriplet e;
    e.p_tilde = p - p_o;
    e.v_tilde = v - v_o;
    e.xi_tilde = filtered_position(p, v, l) - filtered_position(p_o, v_o, l);
    return e;
}

}  // namespace safesep
