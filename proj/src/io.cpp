#include "safesep/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace safesep {

namespace {

using nlohmann::json;

json vec_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 3) {
        throw std::invalid_argument("config: " + path + " must be a 3-element array");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

const json& require(const json& j, const std::string& key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument("config: missing field " + path + key);
    }
    return *it;
}

double num(const json& j, const std::string& key, const std::string& path) {
    const json& v = require(j, key, path);
    if (!v.is_number()) throw std::invalid_argument("config: " + path + key + " must be a number");
    return v.get<double>();
}

}  // namespace

json config_to_json(const ScenarioConfig& c) {
    json j;
    j["name"] = c.name;
    j["duration_s"] = c.duration;
    j["dt_s"] = c.dt;
    j["seed"] = c.seed;
    j["vehicle"] = {{"r_m_m", c.uav.r_m}, {"l_per_s", c.uav.l}, {"v_m_mps", c.uav.v_m}};
    j["p0_m"] = vec_to_json(c.p0);
    j["v0_mps"] = vec_to_json(c.v0);
    j["goal_m"] = vec_to_json(c.goal);
    j["obstacles"] = json::array();
    for (const auto& o : c.obstacles) {
        j["obstacles"].push_back({{"r_o_m", o.params.r_o},
                                  {"v_o_mps", o.params.v_o},
                                  {"p0_m", vec_to_json(o.p0)},
                                  {"v0_mps", vec_to_json(o.v0)},
                                  {"behavior", to_string(o.behavior)},
                                  {"theta", o.theta},
                                  {"tau_d_s", o.tau_d},
                                  {"chase_eps_mps", o.chase_eps},
                                  {"goal_m", vec_to_json(o.goal)}});
    }
    j["budget"] = {{"b_m", c.budget.b},         {"v_b_mps", c.budget.v_b},
                   {"b_o_m", c.budget.b_o},     {"v_bo_mps", c.budget.v_bo},
                   {"tau_dm_s", c.budget.tau_dm}, {"theta_m", c.budget.theta_m},
                   {"T_s_s", c.budget.T_s}};
    j["r_s_m"] = c.r_s;
    j["guard_margin_m"] = c.guard_margin;
    j["blend_margin_m"] = c.blend_margin;
    j["monitor_band_m"] = c.monitor_band;
    return j;
}

ScenarioConfig config_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("config: root must be an object");
    ScenarioConfig c;
    c.name = require(j, "name", "").get<std::string>();
    c.duration = num(j, "duration_s", "");
    c.dt = num(j, "dt_s", "");
    c.seed = require(j, "seed", "").get<std::uint64_t>();

    const json& veh = require(j, "vehicle", "");
    c.uav.r_m = num(veh, "r_m_m", "vehicle.");
    c.uav.l = num(veh, "l_per_s", "vehicle.");
    c.uav.v_m = num(veh, "v_m_mps", "vehicle.");

    c.p0 = vec_from_json(require(j, "p0_m", ""), "p0_m");
    c.v0 = vec_from_json(require(j, "v0_mps", ""), "v0_mps");
    c.goal = vec_from_json(require(j, "goal_m", ""), "goal_m");

    const json& obs = require(j, "obstacles", "");
    if (!obs.is_array()) throw std::invalid_argument("config: obstacles must be an array");
    std::size_t idx = 0;
    for (const auto& jo : obs) {
        const std::string path = "obstacles[" + std::to_string(idx++) + "].";
        ObstacleSpec o;
        o.params.r_o = num(jo, "r_o_m", path);
        o.params.v_o = num(jo, "v_o_mps", path);
        o.p0 = vec_from_json(require(jo, "p0_m", path), path + "p0_m");
        o.v0 = vec_from_json(require(jo, "v0_mps", path), path + "v0_mps");
        o.behavior = behavior_from_string(require(jo, "behavior", path).get<std::string>());
        o.theta = num(jo, "theta", path);
        o.tau_d = num(jo, "tau_d_s", path);
        o.chase_eps = num(jo, "chase_eps_mps", path);
        o.goal = vec_from_json(require(jo, "goal_m", path), path + "goal_m");
        c.obstacles.push_back(o);
    }

    const json& bud = require(j, "budget", "");
    c.budget.b = num(bud, "b_m", "budget.");
    c.budget.v_b = num(bud, "v_b_mps", "budget.");
    c.budget.b_o = num(bud, "b_o_m", "budget.");
    c.budget.v_bo = num(bud, "v_bo_mps", "budget.");
    c.budget.tau_dm = num(bud, "tau_dm_s", "budget.");
    c.budget.theta_m = num(bud, "theta_m", "budget.");
    c.budget.T_s = num(bud, "T_s_s", "budget.");

    c.r_s = num(j, "r_s_m", "");
    c.guard_margin = num(j, "guard_margin_m", "");
    c.blend_margin = num(j, "blend_margin_m", "");
    c.monitor_band = num(j, "monitor_band_m", "");
    return c;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config: " + path + ": " + e.what());
    }
    return config_from_json(j);
}

void save_config(const ScenarioConfig& config, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("config: cannot write " + path);
    out << config_to_json(config).dump(2) << '\n';
}

json radius_report_to_json(const RadiusReport& r) {
    return {{"r_v_m", r.r_v},
            {"r_e_m", r.r_e},
            {"r_s_designed_m", r.r_s_designed},
            {"r_s_practical_m", r.r_s_practical},
            {"r_s_estimated_m", r.r_s_estimated},
            {"speed_condition_ok", r.speed_condition_ok}};
}

json verdict_to_json(const RunVerdict& v) {
    json j;
    j["r_s_m"] = v.r_s;
    j["min_true_distance_m"] = v.min_true_distance;
    j["min_filtered_distance_m"] = v.min_filtered_distance;
    j["min_estimated_distance_m"] = v.min_estimated_distance;
    j["per_obstacle_min_true_m"] = v.per_obstacle_min_true;
    j["per_obstacle_min_estimated_m"] = v.per_obstacle_min_estimated;
    if (v.first_violation_time) {
        j["first_violation_time_s"] = *v.first_violation_time;
    } else {
        j["first_violation_time_s"] = nullptr;
    }
    j["collision"] = v.collision;
    j["monitors"] = {{"shell_evaluations", v.monitors.shell_evaluations},
                     {"shell_violations", v.monitors.shell_violations},
                     {"max_lambda_norm_m", v.monitors.max_lambda_norm},
                     {"max_speed_mps", v.monitors.max_speed}};
    return j;
}

namespace {

std::string g9(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

}  // namespace

std::string verdict_to_text(const RunVerdict& v) {
    std::ostringstream out;
    out << "safety_radius_m: " << g9(v.r_s) << '\n';
    out << "min_true_distance_m: " << g9(v.min_true_distance) << '\n';
    out << "min_filtered_distance_m: " << g9(v.min_filtered_distance) << '\n';
    out << "min_estimated_distance_m: " << g9(v.min_estimated_distance) << '\n';
    for (std::size_t i = 0; i < v.per_obstacle_min_true.size(); ++i) {
        out << "obstacle_" << i << "_min_true_m: " << g9(v.per_obstacle_min_true[i])
            << " min_estimated_m: " << g9(v.per_obstacle_min_estimated[i]) << '\n';
    }
    if (v.first_violation_time) {
        out << "first_violation_time_s: " << g9(*v.first_violation_time) << '\n';
    } else {
        out << "first_violation_time_s: none\n";
    }
    out << "collision: " << (v.collision ? "yes" : "no") << '\n';
    out << "shell_evaluations: " << v.monitors.shell_evaluations << '\n';
    out << "shell_violations: " << v.monitors.shell_violations << '\n';
    out << "max_lambda_norm_m: " << g9(v.monitors.max_lambda_norm) << '\n';
    out << "max_speed_mps: " << g9(v.monitors.max_speed) << '\n';
    out << "verdict: " << (v.first_violation_time || v.collision ? "VIOLATION" : "SAFE") << '\n';
    return out.str();
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace) {
    const std::size_t n_obs = trace.empty() ? 0 : trace.front().obstacles.size();

    out << "t_s";
    const char* veh_cols[] = {"p", "v", "xi", "xi_hat", "v_c"};
    for (const char* c : veh_cols) {
        out << ',' << c << "_x," << c << "_y," << c << "_z";
    }
    const char* obs_cols[] = {"p_o", "v_o", "xi_o", "xi_bar_o", "xi_hat_o", "lambda_o"};
    for (std::size_t i = 0; i < n_obs; ++i) {
        const std::string tag = "o" + std::to_string(i) + "_";
        for (const char* c : obs_cols) {
            out << ',' << tag << c << "_x," << tag << c << "_y," << tag << c << "_z";
        }
        out << ',' << tag << "dist_p," << tag << "dist_xi," << tag << "dist_e";
        out << ',' << tag << "on_shell," << tag << "shell_ok";
    }
    out << ",min_dist_p,min_dist_xi,min_dist_e,est_violation,collision\n";

    auto put = [&out](const Vec3& v) {
        out << ',' << g9(v.x) << ',' << g9(v.y) << ',' << g9(v.z);
    };
    for (const auto& rec : trace) {
        out << g9(rec.t);
        put(rec.p);
        put(rec.v);
        put(rec.xi);
        put(rec.xi_hat);
        put(rec.v_c);
        for (const auto& o : rec.obstacles) {
            put(o.p_o);
            put(o.v_o_vec);
            put(o.xi_o);
            put(o.xi_bar_o);
            put(o.xi_hat_o);
            put(o.lambda_o);
            out << ',' << g9(o.dist_p) << ',' << g9(o.dist_xi) << ',' << g9(o.dist_e);
            out << ',' << (o.monitor != 0 ? 1 : 0) << ',' << (o.monitor >= 0 ? 1 : 0);
        }
        out << ',' << g9(rec.min_dist_p) << ',' << g9(rec.min_dist_xi) << ','
            << g9(rec.min_dist_e);
        out << ',' << (rec.est_violation ? 1 : 0) << ',' << (rec.collision ? 1 : 0) << '\n';
    }
}

void write_trace_csv(const std::string& path, const std::vector<TraceRecord>& trace) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("trace: cannot write " + path);
    write_trace_csv(out, trace);
}

}  // namespace safesep
