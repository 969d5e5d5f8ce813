#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "safesep/io.hpp"
#include "safesep/presets.hpp"
#include "safesep/sim.hpp"

using namespace safesep;

TEST_CASE("catalog is complete and every preset validates") {
    const auto names = preset_names();
    CHECK(names.size() == 10);
    for (const auto& n : names) {
        const ScenarioConfig c = make_preset(n);
        CHECK(c.name == n);
        CHECK_NOTHROW(c.validate());
        CHECK(c.r_s > 0.0);
    }
    CHECK_THROWS_AS(make_preset("nope"), std::invalid_argument);
}

TEST_CASE("reference radii are wired into the presets") {
    CHECK(make_preset("sim1-caseA").r_s == doctest::Approx(5.30));
    CHECK(make_preset("sim1-caseB").r_s == doctest::Approx(14.30));
    CHECK(make_preset("sim1-caseC").r_s == doctest::Approx(22.31));
    CHECK(make_preset("sim3-coop").r_s == doctest::Approx(14.14));
    CHECK(make_preset("exp2").r_s == doctest::Approx(0.71));
}

TEST_CASE("scenario JSON round trip preserves every field") {
    for (const auto& n : preset_names()) {
        const ScenarioConfig a = make_preset(n);
        const ScenarioConfig b = config_from_json(config_to_json(a));
        CHECK(a.name == b.name);
        CHECK(a.duration == b.duration);
        CHECK(a.dt == b.dt);
        CHECK(a.seed == b.seed);
        CHECK(a.uav.r_m == b.uav.r_m);
        CHECK(a.uav.l == b.uav.l);
        CHECK(a.uav.v_m == b.uav.v_m);
        CHECK(a.p0 == b.p0);
        CHECK(a.v0 == b.v0);
        CHECK(a.goal == b.goal);
        CHECK(a.r_s == b.r_s);
        CHECK(a.guard_margin == b.guard_margin);
        CHECK(a.blend_margin == b.blend_margin);
        CHECK(a.monitor_band == b.monitor_band);
        CHECK(a.budget.b == b.budget.b);
        CHECK(a.budget.v_b == b.budget.v_b);
        CHECK(a.budget.b_o == b.budget.b_o);
        CHECK(a.budget.v_bo == b.budget.v_bo);
        CHECK(a.budget.tau_dm == b.budget.tau_dm);
        CHECK(a.budget.theta_m == b.budget.theta_m);
        CHECK(a.budget.T_s == b.budget.T_s);
        REQUIRE(a.obstacles.size() == b.obstacles.size());
        for (std::size_t i = 0; i < a.obstacles.size(); ++i) {
            CHECK(a.obstacles[i].params.r_o == b.obstacles[i].params.r_o);
            CHECK(a.obstacles[i].params.v_o == b.obstacles[i].params.v_o);
            CHECK(a.obstacles[i].p0 == b.obstacles[i].p0);
            CHECK(a.obstacles[i].v0 == b.obstacles[i].v0);
            CHECK(a.obstacles[i].behavior == b.obstacles[i].behavior);
            CHECK(a.obstacles[i].theta == b.obstacles[i].theta);
            CHECK(a.obstacles[i].tau_d == b.obstacles[i].tau_d);
            CHECK(a.obstacles[i].chase_eps == b.obstacles[i].chase_eps);
            CHECK(a.obstacles[i].goal == b.obstacles[i].goal);
        }
    }
}

TEST_CASE("reloaded preset reproduces the run byte for byte") {
    ScenarioConfig a = make_preset("sim1-caseB");
    a.duration = 5.0;
    const std::string path = "roundtrip_config.json";
    save_config(a, path);
    const ScenarioConfig b = load_config(path);
    std::remove(path.c_str());

    std::ostringstream sa, sb;
    write_trace_csv(sa, run_scenario(a).trace);
    write_trace_csv(sb, run_scenario(b).trace);
    CHECK(sa.str() == sb.str());
}

TEST_CASE("malformed config is reported with the field path") {
    auto j = config_to_json(make_preset("sim1-caseA"));
    j.erase("budget");
    CHECK_THROWS_WITH_AS(config_from_json(j), doctest::Contains("budget"),
                         std::invalid_argument);

    auto j2 = config_to_json(make_preset("sim2-caseB"));
    j2["obstacles"][1].erase("p0_m");
    CHECK_THROWS_WITH_AS(config_from_json(j2), doctest::Contains("obstacles[1]"),
                         std::invalid_argument);

    auto j3 = config_to_json(make_preset("sim1-caseA"));
    j3["p0_m"] = "not a vector";
    CHECK_THROWS_AS(config_from_json(j3), std::invalid_argument);
}

TEST_CASE("behavior names round trip") {
    for (const auto b : {ObstacleBehavior::kConstant, ObstacleBehavior::kChasing,
                         ObstacleBehavior::kCooperative}) {
        CHECK(behavior_from_string(to_string(b)) == b);
    }
    CHECK_THROWS_AS(behavior_from_string("hovering!"), std::invalid_argument);
}
