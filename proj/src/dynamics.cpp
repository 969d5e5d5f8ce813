#include "safesep/dynamics.hpp"

#include <ostream>

namespace safesep {

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << "[" << v.x << ", " << v.y << ", " << v.z << "]";
}

Vec3 saturate_command(const Vec3& v_c, double v_m) {
    if (v_m <= 0.0) throw std::invalid_argument("saturate_command: v_m must be > 0");
    const double n = v_c.norm();
    if (n <= v_m) return v_c;
    return v_c * (v_m / n);
}

namespace {

// Both plant models are p' = v, v' = -l (v - u) with u constant over the
// step; share one RK4 kernel.
struct PV {
    Vec3 p, v;
};

PV rk4_first_order_tracking(const PV& s, const Vec3& u, double l, double dt) {
    auto deriv = [&](const PV& x) -> PV { return {x.v, (u - x.v) * l}; };
    const PV k1 = deriv(s);
    const PV k2 = deriv({s.p + k1.p * (dt / 2), s.v + k1.v * (dt / 2)});
    const PV k3 = deriv({s.p + k2.p * (dt / 2), s.v + k2.v * (dt / 2)});
    const PV k4 = deriv({s.p + k3.p * dt, s.v + k3.v * dt});
    return {s.p + (k1.p + k2.p * 2 + k3.p * 2 + k4.p) * (dt / 6),
            s.v + (k1.v + k2.v * 2 + k3.v * 2 + k4.v) * (dt / 6)};
}

}  // namespace

UavState step_uav(const UavState& s, const Vec3& v_c, double l, double dt) {
    if (dt <= 0.0) throw std::invalid_argument("step_uav: dt must be > 0");
    if (l <= 0.0) throw std::invalid_argument("step_uav: l must be > 0");
    const PV out = rk4_first_order_tracking({s.p, s.v}, v_c, l, dt);
    return {out.p, out.v};
}

ObstacleState step_obstacle(const ObstacleState& s, const Vec3& a_o, double l, double dt) {
    if (dt <= 0.0) throw std::invalid_argument("step_obstacle: dt must be > 0");
    if (l <= 0.0) throw std::invalid_argument("step_obstacle: l must be > 0");
    const PV out = rk4_first_order_tracking({s.p_o, s.v_o_vec}, a_o, l, dt);
    return {out.p, out.v};
}

Vec3 chasing_command(const Vec3& xi, const Vec3& xi_o, const Vec3& xi_dot, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("chasing_command: eps must be > 0");
    const Vec3 gap = xi_o - xi;
    if (gap.norm() == 0.0) {
        throw std::domain_error("chasing_command: coincident filtered positions");
    }
    return xi_dot - gap.normalized() * eps;
}

}  // namespace safesep
