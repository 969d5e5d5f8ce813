#include "safesep/verify.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace safesep {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TrackingBoundResult verify_tracking_bounds(const TrackingProfile& profile) {
    if (profile.k_min <= 0.0 || profile.k_max < profile.k_min) {
        throw std::invalid_argument("verify_tracking_bounds: need 0 < k_min <= k_max");
    }
    if (profile.y_max <= 0.0 || profile.v_y_max < 0.0) {
        throw std::invalid_argument("verify_tracking_bounds: need y_max > 0, v_y_max >= 0");
    }
    if (profile.x0.norm() > profile.y_max * (1.0 + 1e-9)) {
        throw std::invalid_argument("verify_tracking_bounds: ||x0|| exceeds y_max");
    }
    const auto n = static_cast<std::size_t>(std::llround(profile.duration / profile.dt));

    auto deriv = [&](double t, const Vec3& x) {
        const double kt = profile.k(t);
        if (kt < profile.k_min * (1.0 - 1e-9) || kt > profile.k_max * (1.0 + 1e-9)) {
            throw std::invalid_argument("verify_tracking_bounds: k(t) outside [k_min, k_max]");
        }
        const Vec3 yt = profile.y(t);
        if (yt.norm() > profile.y_max * (1.0 + 1e-9)) {
            throw std::invalid_argument("verify_tracking_bounds: ||y(t)|| exceeds y_max");
        }
        return (yt - x) * kt;
    };

    TrackingBoundResult res;
    res.rate_bound_applicable =
        (profile.x0 - profile.y(0.0)).norm() <= profile.v_y_max / profile.k_min * (1.0 + 1e-9);

    Vec3 x = profile.x0;
    const double h = profile.dt;
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) * h;
        res.max_x_norm = std::max(res.max_x_norm, x.norm());
        res.max_x_dot_norm = std::max(res.max_x_dot_norm, deriv(t, x).norm());
        if (i == n) break;
        const Vec3 k1 = deriv(t, x);
        const Vec3 k2 = deriv(t + h / 2, x + k1 * (h / 2));
        const Vec3 k3 = deriv(t + h / 2, x + k2 * (h / 2));
        const Vec3 k4 = deriv(t + h, x + k3 * h);
        x += (k1 + k2 * 2 + k3 * 2 + k4) * (h / 6);
    }

    res.norm_bound_ok = res.max_x_norm <= profile.y_max * (1.0 + 1e-6);
    const double rate_cap = profile.k_max / profile.k_min * profile.v_y_max;
    res.rate_bound_ok =
        !res.rate_bound_applicable || res.max_x_dot_norm <= rate_cap * (1.0 + 1e-6);
    res.ok = res.norm_bound_ok && res.rate_bound_ok;
    return res;
}

TrackingProfile random_tracking_profile(std::uint64_t seed, bool qualify_rate_bound) {
    std::mt19937_64 rng(seed);
    auto u01 = [&] { return canonical_u01(rng); };

    TrackingProfile p;
    p.k_min = 0.5 + 1.5 * u01();
    p.k_max = p.k_min * (1.0 + 3.0 * u01());
    const double omega_k = 0.2 + 3.0 * u01();
    const double phase_k = 2.0 * kPi * u01();
    const double kmin = p.k_min, kmax = p.k_max;
    p.k = [kmin, kmax, omega_k, phase_k](double t) {
        return kmin + (kmax - kmin) * 0.5 * (1.0 + std::sin(omega_k * t + phase_k));
    };

    p.y_max = 0.5 + 4.5 * u01();
    p.v_y_max = 0.1 + 4.9 * u01();
    BoundedNoise y_sig(rng(), p.y_max, p.v_y_max);
    p.y = [y_sig](double t) { return y_sig.at(t); };

    const Vec3 dir = Vec3{u01() - 0.5, u01() - 0.5, u01() - 0.5}.normalized();
    if (qualify_rate_bound) {
        const Vec3 y0 = p.y(0.0);
        const double room = std::max(0.0, p.y_max - y0.norm());
        const double mag = 0.9 * u01() * std::min(p.v_y_max / p.k_min, room);
        p.x0 = y0 + dir * mag;
    } else {
        p.x0 = dir * (u01() * p.y_max);
    }
    return p;
}

SeparationCurve equality_separation_curve(double r, double l, double v_m, double v_o,
                                          double duration, double dt) {
    if (r <= 0.0 || l <= 0.0) throw std::invalid_argument("equality curve: need r, l > 0");
    const double r_v = (v_m + v_o) / l;
    const double speed = l * r_v;  // relative speed v_m + v_o
    const double omega = speed / r;
    auto v_rel = [&](double t) { return Vec3{-std::sin(omega * t), std::cos(omega * t), 0} * speed; };

    SeparationCurve curve;
    const auto n = static_cast<std::size_t>(std::llround(duration / dt));
    Vec3 p_rel{r, 0, 0};
    curve.min_p_norm = p_rel.norm();
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) * dt;
        curve.t.push_back(t);
        curve.p_norm.push_back(p_rel.norm());
        curve.xi_norm.push_back((p_rel + v_rel(t) / l).norm());
        curve.min_p_norm = std::min(curve.min_p_norm, p_rel.norm());
        if (i == n) break;
        const Vec3 k1 = v_rel(t);
        const Vec3 k2 = v_rel(t + dt / 2);
        const Vec3 k4 = v_rel(t + dt);
        p_rel += (k1 + k2 * 4 + k4) * (dt / 6);  // Simpson; v_rel depends on t only
    }
    return curve;
}

SeparationCurve necessity_separation_curve(double r, double l, double v_m, double v_o,
                                           double eps_o, double duration, double dt) {
    if (eps_o <= 0.0 || eps_o >= r * r) {
        throw std::invalid_argument("necessity curve: need 0 < eps_o < r^2");
    }
    const double r_v = (v_m + v_o) / l;
    const double speed = l * r_v;

    // Relative velocity chosen so the filtered separation squared stays at
    // r^2 + r_v^2 - eps_o while its norm stays at l * r_v.
    auto v_rel_of = [&](const Vec3& p_rel) {
        const double pn = p_rel.norm();
        const Vec3 p_hat = p_rel / pn;
        const double radial = l * (r * r - eps_o - pn * pn) / (2.0 * pn);
        const double tang_sq = speed * speed - radial * radial;
        const Vec3 t_hat = Vec3{0, 0, 1}.cross(p_hat).normalized();
        return p_hat * radial + t_hat * std::sqrt(std::max(0.0, tang_sq));
    };

    SeparationCurve curve;
    const auto n = static_cast<std::size_t>(std::llround(duration / dt));
    Vec3 p_rel{r, 0, 0};
    curve.min_p_norm = p_rel.norm();
    for (std::size_t i = 0; i <= n; ++i) {
        curve.t.push_back(static_cast<double>(i) * dt);
        curve.p_norm.push_back(p_rel.norm());
        curve.xi_norm.push_back((p_rel + v_rel_of(p_rel) / l).norm());
        curve.min_p_norm = std::min(curve.min_p_norm, p_rel.norm());
        if (i == n) break;
        const Vec3 k1 = v_rel_of(p_rel);
        const Vec3 k2 = v_rel_of(p_rel + k1 * (dt / 2));
        const Vec3 k3 = v_rel_of(p_rel + k2 * (dt / 2));
        const Vec3 k4 = v_rel_of(p_rel + k3 * dt);
        p_rel += (k1 + k2 * 2 + k3 * 2 + k4) * (dt / 6);
    }
    return curve;
}

LambdaSweepResult lambda_bound_sweep(const UncertaintyBudget& budget, double v_o,
                                     std::size_t n_trajectories, std::uint64_t seed,
                                     double duration) {
    budget.validate();
    if (v_o <= 0.0) throw std::invalid_argument("lambda_bound_sweep: v_o must be > 0");
    if (budget.theta_m <= 0.0 || budget.tau_dm <= 0.0) {
        throw std::invalid_argument("lambda_bound_sweep: need theta_m > 0 and tau_dm > 0");
    }

    LambdaSweepResult res;
    res.bound = v_o * budget.tau_dm +
                budget.theta_m * budget.T_s * v_o / (1.0 - budget.theta_m);

    std::mt19937_64 rng(seed);
    const double dt = budget.T_s;
    const auto n_steps = static_cast<std::size_t>(std::llround(duration / dt));

    for (std::size_t traj = 0; traj < n_trajectories; ++traj) {
        LinkParams lp;
        lp.theta = budget.theta_m * (0.05 + 0.95 * canonical_u01(rng));
        lp.tau_d = budget.tau_dm * (0.05 + 0.95 * canonical_u01(rng));
        lp.T_s = budget.T_s;
        lp.seed = rng();

        // Admissible filtered velocity: certified norm bound v_o.
        BoundedNoise vel(rng(), v_o, 2.0 * v_o);
        Vec3 xi{100.0 * (canonical_u01(rng) - 0.5), 100.0 * (canonical_u01(rng) - 0.5), 100.0};
        BroadcastLink link(lp, xi, vel.at(0.0));

        for (std::size_t i = 0; i < n_steps; ++i) {
            const double t = static_cast<double>(i) * dt;
            const Vec3 step = (vel.at(t) + vel.at(t + dt)) * (dt / 2.0);
            xi += step;
            link.push_truth(t + dt, xi);
            link.advance_expectation(t, dt);
            const double lam = (xi - link.xi_bar()).norm();
            res.worst_ratio = std::max(res.worst_ratio, lam / res.bound);
        }
    }
    res.ok = res.worst_ratio <= 1.01;
    return res;
}

}  // namespace safesep
