#pragma once

#include <stdexcept>
#include <string>

namespace safesep {

/// Physical and maneuver parameters of the controlled vehicle.
struct VehicleParams {
    double r_m = 0.0;  ///< physical radius [m]
    double l = 0.0;    ///< maneuver constant [1/s]
    double v_m = 0.0;  ///< velocity-command cap [m/s]

    void validate() const {
        if (r_m <= 0.0) throw std::invalid_argument("VehicleParams: r_m must be > 0");
        if (l <= 0.0) throw std::invalid_argument("VehicleParams: l must be > 0");
        if (v_m <= 0.0) throw std::invalid_argument("VehicleParams: v_m must be > 0");
    }
};

struct ObstacleParams {
    double r_o = 0.0;  ///< obstacle radius [m]
    double v_o = 0.0;  ///< bound on the filtered-velocity norm [m/s]

    void validate() const {
        if (r_o <= 0.0) throw std::invalid_argument("ObstacleParams: r_o must be > 0");
        if (v_o < 0.0) throw std::invalid_argument("ObstacleParams: v_o must be >= 0");
    }
};

/// The six channel bounds plus the receive interval.
struct UncertaintyBudget {
    double b = 0.0;        ///< self position-estimate noise bound [m]
    double v_b = 0.0;      ///< self noise rate bound [m/s]
    double b_o = 0.0;      ///< obstacle-estimate noise bound [m]
    double v_bo = 0.0;     ///< obstacle noise rate bound [m/s]
    double tau_dm = 0.0;   ///< maximum broadcast delay [s]
    double theta_m = 0.0;  ///< maximum packet-loss probability, in [0,1)
    double T_s = 0.01;     ///< receive interval [s]

    void validate() const {
        if (b < 0.0 || v_b < 0.0 || b_o < 0.0 || v_bo < 0.0 || tau_dm < 0.0)
            throw std::invalid_argument("UncertaintyBudget: bounds must be non-negative");
        if (theta_m < 0.0 || theta_m >= 1.0)
            throw std::invalid_argument("UncertaintyBudget: theta_m must be in [0,1)");
        if (T_s <= 0.0) throw std::invalid_argument("UncertaintyBudget: T_s must be > 0");
    }

    bool is_zero() const {
        return b == 0.0 && v_b == 0.0 && b_o == 0.0 && v_bo == 0.0 && tau_dm == 0.0 &&
               theta_m == 0.0;
    }
};

}  // namespace safesep
