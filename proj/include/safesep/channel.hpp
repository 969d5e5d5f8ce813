#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <random>

#include "safesep/params.hpp"
#include "safesep/vec3.hpp"

namespace safesep {

/// Uniform double in [0,1) from the top 53 bits of the generator output.
/// std::generate_canonical is implementation-defined; this is not.
inline double canonical_u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Smooth bounded signal with certified norm and rate bounds: per axis a sum
/// of three sinusoids whose amplitudes sum to at most bound/sqrt(3) and whose
/// amplitude-weighted frequencies keep the derivative below
/// rate_bound/sqrt(3). Deterministic given the seed.
class BoundedNoise {
public:
    BoundedNoise() = default;  // identically zero
    BoundedNoise(std::uint64_t seed, double bound, double rate_bound);

    Vec3 at(double t) const;

    double bound() const { return bound_; }
    double rate_bound() const { return rate_bound_; }

private:
    struct Component {
        double amp = 0.0;
        double omega = 0.0;
        double phase = 0.0;
    };
    std::array<std::array<Component, 3>, 3> comps_{};
    double bound_ = 0.0;
    double rate_bound_ = 0.0;
};

/// Time-indexed history of filtered-position samples with linear
/// interpolation. Lookups before the earliest stored sample return it
/// unchanged, matching the convention that the expectation state starts at
/// the delayed initial value.
class DelayBuffer {
public:
    void push(double t, const Vec3& value);
    Vec3 sample(double t) const;
    /// Drops samples no longer reachable by lookups at or after t_min.
    void prune(double t_min);
    bool empty() const { return samples_.empty(); }
    double earliest_time() const;

private:
    std::deque<std::pair<double, Vec3>> samples_;
};

struct LinkParams {
    double theta = 0.0;        ///< packet-loss probability of this link
    double tau_d = 0.0;        ///< transport delay of this link [s]
    double T_s = 0.01;         ///< receive interval [s]
    double noise_bound = 0.0;  ///< b_o [m]
    double noise_rate = 0.0;   ///< v_bo [m/s]
    std::uint64_t seed = 0;

    void validate() const;
};

struct LinkEstimate {
    Vec3 xi_hat;   ///< expectation-model estimate plus noise
    Vec3 lambda_o; ///< truth minus expectation state (diagnostic)
};

/// One broadcast link: delayed truth samples, Bernoulli sample-hold on the
/// receive grid, and the first-order expectation model of the held value.
class BroadcastLink {
public:
    /// xi0 / slope0 describe the straight-line extrapolation of the truth
    /// before t = 0, used to prefill the delay buffer.
    BroadcastLink(const LinkParams& params, const Vec3& xi0, const Vec3& slope0);

    /// Record the true filtered position at time t. Times must be
    /// non-decreasing.
    void push_truth(double t, const Vec3& xi_o);

    /// xi_o(t - tau_d), linearly interpolated.
    Vec3 delayed_sample(double t) const;

    /// Bernoulli draw on the receive grid: on delivery the held value becomes
    /// the delayed sample, on loss it stays. Returns the held value.
    Vec3 tick_sample_hold(double t);

    /// Advances the expectation state over [t, t+dt] with the exact
    /// exponential update for piecewise-linear input. theta = 0 degenerates
    /// to pass-through of the delayed sample (the infinite-gain limit).
    void advance_expectation(double t, double dt);

    /// Estimated filtered position and the lambda diagnostic.
    LinkEstimate estimate(double t, const Vec3& truth_xi_o) const;

    const Vec3& xi_bar() const { return xi_bar_; }
    const Vec3& held_value() const { return held_; }
    Vec3 noise_at(double t) const { return noise_.at(t); }
    const LinkParams& params() const { return params_; }

private:
    LinkParams params_;
    DelayBuffer buffer_;
    Vec3 held_;
    Vec3 xi_bar_;
    BoundedNoise noise_;
    std::mt19937_64 rng_;
};

}  // namespace safesep
