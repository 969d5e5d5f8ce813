#include "safesep/channel.hpp"

#include <algorithm>
#include <cmath>

namespace safesep {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt3 = 0.57735026918962576451;
}  // namespace

BoundedNoise::BoundedNoise(std::uint64_t seed, double bound, double rate_bound)
    : bound_(bound), rate_bound_(rate_bound) {
    if (bound < 0.0 || rate_bound < 0.0) {
        throw std::invalid_argument("BoundedNoise: bounds must be non-negative");
    }
    if (bound == 0.0) return;

    // Per-axis budgets. Amplitude fractions sum to 1; the frequency factors
    // keep sum(amp_i * omega_i) <= 0.97 * per-axis rate budget, so the
    // worst-case derivative norm stays below rate_bound.
    const double amp_budget = bound * kInvSqrt3;
    const double rate_budget = rate_bound * kInvSqrt3;
    constexpr double frac[3] = {0.5, 0.3, 0.2};
    constexpr double freq_factor[3] = {0.5, 1.2, 1.8};

    std::mt19937_64 rng(seed);
    for (auto& axis : comps_) {
        for (int i = 0; i < 3; ++i) {
            axis[i].amp = frac[i] * amp_budget;
            const double jitter = 0.7 + 0.3 * canonical_u01(rng);
            axis[i].omega = freq_factor[i] * jitter * (rate_budget / amp_budget);
            axis[i].phase = 2.0 * kPi * canonical_u01(rng);
        }
    }
}

Vec3 BoundedNoise::at(double t) const {
    if (bound_ == 0.0) return {};
    double out[3];
    for (int axis = 0; axis < 3; ++axis) {
        double s = 0.0;
        for (const auto& c : comps_[axis]) {
            s += c.amp * std::sin(c.omega * t + c.phase);
        }
        out[axis] = s;
    }
    return {out[0], out[1], out[2]};
}

void DelayBuffer::push(double t, const Vec3& value) {
    if (!samples_.empty() && t < samples_.back().first) {
        throw std::invalid_argument("DelayBuffer::push: times must be non-decreasing");
    }
    samples_.emplace_back(t, value);
}

Vec3 DelayBuffer::sample(double t) const {
    if (samples_.empty()) throw std::logic_error("DelayBuffer::sample: empty buffer");
    if (t <= samples_.front().first) return samples_.front().second;
    if (t >= samples_.back().first) return samples_.back().second;
    const auto it = std::lower_bound(
        samples_.begin(), samples_.end(), t,
        [](const std::pair<double, Vec3>& s, double tq) { return s.first < tq; });
    const auto& [t1, v1] = *it;
    const auto& [t0, v0] = *(it - 1);
    const double w = (t - t0) / (t1 - t0);
    return v0 + (v1 - v0) * w;
}

void DelayBuffer::prune(double t_min) {
    while (samples_.size() >= 2 && samples_[1].first <= t_min) {
        samples_.pop_front();
    }
}

double DelayBuffer::earliest_time() const {
    if (samples_.empty()) throw std::logic_error("DelayBuffer: empty buffer");
    return samples_.front().first;
}

void LinkParams::validate() const {
    if (theta < 0.0 || theta >= 1.0)
        throw std::invalid_argument("LinkParams: theta must be in [0,1)");
    if (tau_d < 0.0) throw std::invalid_argument("LinkParams: tau_d must be >= 0");
    if (T_s <= 0.0) throw std::invalid_argument("LinkParams: T_s must be > 0");
    if (noise_bound < 0.0 || noise_rate < 0.0)
        throw std::invalid_argument("LinkParams: noise bounds must be >= 0");
}

BroadcastLink::BroadcastLink(const LinkParams& params, const Vec3& xi0, const Vec3& slope0)
    : params_(params), noise_(params.seed ^ 0x9e3779b97f4a7c15ull, params.noise_bound,
                              params.noise_rate),
      rng_(params.seed) {
    params_.validate();
    // Prefill the delay horizon with the straight-line extrapolation of the
    // truth, so xi_bar(0) = xi_o(-tau_d) exactly.
    const double horizon = params_.tau_d + 2.0 * params_.T_s;
    const int n = static_cast<int>(std::ceil(horizon / params_.T_s)) + 1;
    for (int i = n; i >= 1; --i) {
        const double tq = -horizon * i / n;
        buffer_.push(tq, xi0 + slope0 * tq);
    }
    buffer_.push(0.0, xi0);
    xi_bar_ = buffer_.sample(-params_.tau_d);
    held_ = xi_bar_;
}

void BroadcastLink::push_truth(double t, const Vec3& xi_o) {
    buffer_.push(t, xi_o);
    buffer_.prune(t - params_.tau_d - params_.T_s);
}

Vec3 BroadcastLink::delayed_sample(double t) const { return buffer_.sample(t - params_.tau_d); }

Vec3 BroadcastLink::tick_sample_hold(double t) {
    const bool lost = canonical_u01(rng_) < params_.theta;
    if (!lost) held_ = delayed_sample(t);
    return held_;
}

void BroadcastLink::advance_expectation(double t, double dt) {
    if (dt <= 0.0) throw std::invalid_argument("advance_expectation: dt must be > 0");
    const Vec3 u0 = delayed_sample(t);
    const Vec3 u1 = delayed_sample(t + dt);
    if (params_.theta == 0.0) {
        // No-loss limit: the gain is infinite, the state tracks the input.
        xi_bar_ = u1;
        return;
    }
    // Exact solution of x' = -k (x - u) for linear u over the step. Stable
    // for any k*dt, unlike an explicit stage scheme at small theta.
    const double k = (1.0 - params_.theta) / (params_.theta * params_.T_s);
    const Vec3 slope = (u1 - u0) / dt;
    const Vec3 lag = slope / k;
    const double decay = std::exp(-k * dt);
    xi_bar_ = u1 - lag + (xi_bar_ - u0 + lag) * decay;
}

LinkEstimate BroadcastLink::estimate(double t, const Vec3& truth_xi_o) const {
    return {xi_bar_ + noise_.at(t), truth_xi_o - xi_bar_};
}

}  // namespace safesep
