#include "safesep/controller.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace safesep {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

/// Deterministic unit vector orthogonal to d (any unit d).
Vec3 lateral_of(const Vec3& d) {
    const Vec3 probe = std::abs(d.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    return d.cross(probe).normalized();
}

Vec3 goal_command(const Vec3& self_xi_hat, const ControllerParams& p) {
    return saturate_command((p.goal - self_xi_hat) * p.goal_gain, p.v_m);
}

}  // namespace

void ControllerParams::validate() const {
    if (margin <= 0.0) throw std::invalid_argument("ControllerParams: margin must be > 0");
    if (r_guard <= 0.0) throw std::invalid_argument("ControllerParams: r_guard must be > 0");
    if (v_m <= 0.0) throw std::invalid_argument("ControllerParams: v_m must be > 0");
    if (goal_gain <= 0.0) throw std::invalid_argument("ControllerParams: goal_gain must be > 0");
}

Vec3 avoid_one(double t, const Vec3& e_o, const Vec3& self_xi_hat,
               const ControllerParams& params) {
    (void)t;
    const double dist = e_o.norm();
    if (dist == 0.0) throw std::domain_error("avoid_one: coincident estimates");
    const double alpha = clamp01((params.r_guard + params.margin - dist) / params.margin);
    const Vec3 radial = e_o * (params.v_m / dist);
    if (alpha >= 1.0) return radial;  // fully radial, exactly v_m along e_o
    const Vec3 cmd = radial * alpha + goal_command(self_xi_hat, params) * (1.0 - alpha);
    return saturate_command(cmd, params.v_m);
}

Vec3 avoid_many(double t, const std::vector<Vec3>& e_list, const Vec3& self_xi_hat,
                const ControllerParams& params) {
    (void)t;
    if (e_list.empty()) throw std::invalid_argument("avoid_many: no obstacles given");
    double alpha = 0.0;
    Vec3 dir_sum;
    double weight_sum = 0.0;
    for (const Vec3& e : e_list) {
        const double dist = e.norm();
        if (dist == 0.0) throw std::domain_error("avoid_many: coincident estimates");
        const double w = clamp01((params.r_guard + params.margin - dist) / params.margin);
        alpha = std::max(alpha, w);
        weight_sum += w;
        dir_sum += e * (w / dist);
    }
    if (alpha == 0.0) return goal_command(self_xi_hat, params);

    Vec3 radial;
    const double dir_norm = dir_sum.norm();
    if (dir_norm <= 1e-9 * weight_sum) {
        // Symmetric pincer: the radial terms cancel. Break the tie with a
        // fixed lateral nudge so the integrator does not stall on the
        // measure-zero configuration.
        radial = lateral_of(e_list.front().normalized()) * (1e-3 * params.v_m);
    } else {
        radial = dir_sum * (params.v_m / dir_norm);
    }
    if (alpha >= 1.0) return saturate_command(radial, params.v_m);
    const Vec3 cmd = radial * alpha + goal_command(self_xi_hat, params) * (1.0 - alpha);
    return saturate_command(cmd, params.v_m);
}

CertReport certify_boundary_floor(const ControlLaw& controller, double r_s, double r_o, double v_m,
                          std::size_t n_samples, double tolerance) {
    if (n_samples < 1000) {
        throw std::invalid_argument("certify_boundary_floor: need at least 1000 sphere samples");
    }
    const double radius = r_s + r_o;
    CertReport rep;
    rep.threshold = radius * v_m;
    rep.n_samples = n_samples;
    rep.min_inner = std::numeric_limits<double>::infinity();

    // Fibonacci sphere: quasi-uniform without randomness.
    const double golden_angle = 3.14159265358979323846 * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n_samples);
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        const Vec3 x = Vec3{rho * std::cos(phi), rho * std::sin(phi), z} * radius;
        const double inner = x.dot(controller(0.0, x));
        if (inner < rep.min_inner) {
            rep.min_inner = inner;
            rep.worst_direction = x / radius;
        }
    }
    rep.certified = rep.min_inner >= rep.threshold - tolerance * std::max(1.0, rep.threshold);
    return rep;
}

}  // namespace safesep
