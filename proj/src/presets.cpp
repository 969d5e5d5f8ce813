#include "safesep/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace safesep {

namespace {

UncertaintyBudget case_a_budget() {
    UncertaintyBudget b;
    b.T_s = 0.01;
    return b;
}

UncertaintyBudget case_b_budget() {
    return {.b = 3.0, .v_b = 3.0, .b_o = 1.0, .v_bo = 1.0, .tau_dm = 1.0, .theta_m = 0.1,
            .T_s = 0.01};
}

UncertaintyBudget case_c_budget() {
    return {.b = 5.0, .v_b = 6.0, .b_o = 2.0, .v_bo = 5.0, .tau_dm = 2.0, .theta_m = 0.2,
            .T_s = 0.01};
}

// Desk-scale single-obstacle scenario: hovering vehicle, one obstacle
// inbound along -x at 5 m/s.
ScenarioConfig sim1_base() {
    ScenarioConfig c;
    c.duration = 20.0;
    c.dt = 0.01;
    c.uav = {.r_m = 5.0, .l = 5.0, .v_m = 10.0};
    c.p0 = {0, 0, 100};
    c.v0 = {0, 0, 0};
    c.goal = {100, 0, 100};  // waypoint beyond the obstacle on the approach axis
    ObstacleSpec o;
    o.params = {.r_o = 10.0, .v_o = 5.0};
    o.p0 = {40, 0, 100};
    o.v0 = {-5, 0, 0};
    c.obstacles = {o};
    c.guard_margin = 2.0;
    c.blend_margin = 2.0;
    c.monitor_band = 0.1;
    return c;
}

void apply_link_budget(ScenarioConfig& c) {
    for (auto& o : c.obstacles) {
        o.theta = c.budget.theta_m;
        o.tau_d = c.budget.tau_dm;
    }
}

// Three non-cooperative obstacles inbound from the far side, speeds 3/4/5.
ScenarioConfig sim2_base() {
    ScenarioConfig c = sim1_base();
    c.p0 = {0, 40, 100};
    c.goal = {0, -100, 100};
    c.obstacles.clear();
    const Vec3 starts[3] = {{-40, -40, 100}, {0, -40, 100}, {40, -40, 100}};
    for (int i = 0; i < 3; ++i) {
        ObstacleSpec o;
        o.params = {.r_o = 10.0, .v_o = static_cast<double>(i + 3)};
        o.p0 = starts[i];
        o.v0 = (c.p0 - starts[i]).normalized() * o.params.v_o;
        c.obstacles.push_back(o);
    }
    return c;
}

// Crossing square: the vehicle and three cooperative obstacles swap corners
// through the center, all running the same avoidance law.
ScenarioConfig sim3_coop() {
    ScenarioConfig c;
    c.name = "sim3-coop";
    c.duration = 20.0;
    c.dt = 0.01;
    c.uav = {.r_m = 5.0, .l = 5.0, .v_m = 5.0};
    c.p0 = {-40, 40, 100};
    c.goal = {40, -40, 100};
    c.budget = case_b_budget();
    c.r_s = 14.14;
    const Vec3 starts[3] = {{40, 40, 100}, {40, -40, 100}, {-40, -40, 100}};
    const Vec3 goals[3] = {{-40, -40, 100}, {-40, 40, 100}, {40, 40, 100}};
    for (int i = 0; i < 3; ++i) {
        ObstacleSpec o;
        o.params = {.r_o = 10.0, .v_o = static_cast<double>(i + 3)};
        o.p0 = starts[i];
        o.v0 = {0, 0, 0};
        o.behavior = ObstacleBehavior::kCooperative;
        o.goal = goals[i];
        c.obstacles.push_back(o);
    }
    apply_link_budget(c);
    c.guard_margin = 2.0;
    c.blend_margin = 2.0;
    c.monitor_band = 0.1;
    return c;
}

ScenarioConfig lab_base() {
    ScenarioConfig c;
    c.duration = 60.0;
    c.dt = 0.01;
    c.uav = {.r_m = 0.2, .l = 2.0, .v_m = 0.1};
    c.guard_margin = 0.1;
    c.blend_margin = 0.1;
    c.monitor_band = 0.005;
    return c;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"sim1-caseA", "sim1-caseB", "sim1-caseC", "sim1-caseC-adversarial",
            "sim2-caseB", "sim2-caseC", "sim3-coop",  "exp1",
            "exp2",       "exp3"};
}

ScenarioConfig make_preset(const std::string& name) {
    if (name == "sim1-caseA") {
        ScenarioConfig c = sim1_base();
        c.name = name;
        c.budget = case_a_budget();
        c.r_s = 5.30;
        return c;
    }
    if (name == "sim1-caseB") {
        ScenarioConfig c = sim1_base();
        c.name = name;
        c.budget = case_b_budget();
        c.r_s = 14.30;
        apply_link_budget(c);
        return c;
    }
    if (name == "sim1-caseC" || name == "sim1-caseC-adversarial") {
        ScenarioConfig c = sim1_base();
        c.name = name;
        c.budget = case_c_budget();
        c.r_s = 22.31;
        apply_link_budget(c);
        if (name == "sim1-caseC-adversarial") {
            c.obstacles[0].behavior = ObstacleBehavior::kChasing;
            c.obstacles[0].chase_eps = 2.0;
        }
        return c;
    }
    if (name == "sim2-caseB" || name == "sim2-caseC") {
        ScenarioConfig c = sim2_base();
        c.name = name;
        if (name == "sim2-caseB") {
            c.budget = case_b_budget();
            c.r_s = 14.30;
        } else {
            c.budget = case_c_budget();
            c.r_s = 22.31;
        }
        apply_link_budget(c);
        return c;
    }
    if (name == "sim3-coop") return sim3_coop();
    if (name == "exp1") {
        ScenarioConfig c = lab_base();
        c.name = name;
        c.p0 = {1.5, 0, 1};
        c.goal = {-1.5, 0, 1};
        c.budget = {.b = 0.10, .v_b = 0.08, .b_o = 0.03, .v_bo = 0.01, .tau_dm = 1.0,
                    .theta_m = 0.1, .T_s = 0.01};
        // This radius is deliberately larger than the computed lower bound
        // (0.44 m); the run stays safe either way.
        c.r_s = 0.47;
        ObstacleSpec o;
        o.params = {.r_o = 0.2, .v_o = 0.1};
        o.p0 = {-0.2, 0, 1};
        o.v0 = {0, 0, 0};
        c.obstacles = {o};
        apply_link_budget(c);
        return c;
    }
    if (name == "exp2") {
        ScenarioConfig c = lab_base();
        c.name = name;
        c.p0 = {1.5, 0, 1};
        c.goal = {-1.5, 0, 1};
        c.budget = {.b = 0.2, .v_b = 0.08, .b_o = 0.1, .v_bo = 0.01, .tau_dm = 2.0,
                    .theta_m = 0.3, .T_s = 0.01};
        c.r_s = 0.71;
        ObstacleSpec o;
        o.params = {.r_o = 0.2, .v_o = 0.1};
        o.p0 = {-1.5, 0, 1};
        o.v0 = {0, 0, 0};
        o.behavior = ObstacleBehavior::kCooperative;
        o.goal = {1.5, 0, 1};
        c.obstacles = {o};
        apply_link_budget(c);
        return c;
    }
    if (name == "exp3") {
        ScenarioConfig c = lab_base();
        c.name = name;
        c.p0 = {-1, 1, 1};
        c.goal = {1, -1, 1};
        c.budget = {.b = 0.012, .v_b = 0.012, .b_o = 0.01, .v_bo = 0.01, .tau_dm = 0.1,
                    .theta_m = 0.01, .T_s = 0.01};
        c.r_s = 0.23;
        const Vec3 starts[3] = {{1, 1, 1}, {1, -1, 1}, {-1, -1, 1}};
        const Vec3 goals[3] = {{-1, -1, 1}, {-1, 1, 1}, {1, 1, 1}};
        for (int i = 0; i < 3; ++i) {
            ObstacleSpec o;
            o.params = {.r_o = 0.23, .v_o = 0.1};
            o.p0 = starts[i];
            o.v0 = {0, 0, 0};
            o.behavior = ObstacleBehavior::kCooperative;
            o.goal = goals[i];
            c.obstacles.push_back(o);
        }
        apply_link_budget(c);
        return c;
    }
    throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace safesep
