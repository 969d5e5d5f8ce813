// Release gate: one pass/fail line per acceptance criterion. Exits nonzero
// if any criterion fails. argv[1] is the path to the CLI binary, used where
// a criterion is stated in terms of exit codes or emitted files.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "safesep/controller.hpp"
#include "safesep/io.hpp"
#include "safesep/presets.hpp"
#include "safesep/radius.hpp"
#include "safesep/sim.hpp"
#include "safesep/verify.hpp"

using namespace safesep;

namespace {

int failures = 0;

void report(int idx, const char* title, bool ok, const std::string& detail) {
    std::printf("criterion %2d [%s] %s: %s\n", idx, ok ? "PASS" : "FAIL", title, detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[200];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

double preset_radius(const char* name) {
    const ScenarioConfig c = make_preset(name);
    double r_o = 0, v_o = 0;
    for (const auto& o : c.obstacles) {
        r_o = std::max(r_o, o.params.r_o);
        v_o = std::max(v_o, o.params.v_o);
    }
    return compute_radius_report(c.uav, {r_o, v_o}, c.budget).r_s_designed;
}

int run_cli(const std::string& cli, const std::string& args) {
    const int rc = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    {  // 1: the three reference radii
        const double a = preset_radius("sim1-caseA");
        const double b = preset_radius("sim1-caseB");
        const double c = preset_radius("sim1-caseC");
        const bool ok = std::abs(a - 5.30) <= 0.005 && std::abs(b - 14.30) <= 0.005 &&
                        std::abs(c - 22.31) <= 0.005;
        report(1, "reference radii 5.30 / 14.30 / 22.31", ok,
               fmt("computed %.4f / %.4f / %.4f", a, b, c));
    }
    {  // 2: lab-scale cooperative radius
        const double r = preset_radius("exp2");
        report(2, "lab-scale radius 0.71", std::abs(r - 0.71) <= 0.005, fmt("computed %.4f", r));
    }
    {  // 3: single-obstacle safe run keeps both separations
        const ScenarioConfig c = make_preset("sim1-caseB");
        const RunResult r = run_scenario(c);
        const bool ok = r.verdict.min_estimated_distance >= 24.30 &&
                        r.verdict.min_true_distance >= 15.0;
        report(3, "safe run: min estimated >= 24.30 and min true >= 15", ok,
               fmt("min estimated %.4f, min true %.4f", r.verdict.min_estimated_distance,
                   r.verdict.min_true_distance));
    }
    {  // 4: chasing adversary forces a violation within the horizon (exit 1)
        bool ok = false;
        std::string detail = "no CLI path given";
        if (!cli.empty()) {
            const int rc = run_cli(cli, "run --preset sim1-caseC-adversarial --seed 7");
            const RunVerdict v = run_scenario(make_preset("sim1-caseC-adversarial")).verdict;
            ok = rc == 1 && v.first_violation_time.has_value();
            detail = fmt("exit code %.0f, violation at %.2f s", rc,
                         v.first_violation_time.value_or(-1.0));
        }
        report(4, "chasing adversary violates within 20 s", ok, detail);
    }
    {  // 5: multi-obstacle and cooperative runs stay separated
        const RunVerdict b = run_scenario(make_preset("sim2-caseB")).verdict;
        const ScenarioConfig coop_cfg = make_preset("sim3-coop");
        const RunVerdict coop = run_scenario(coop_cfg).verdict;
        const bool speed_cond = check_speed_condition(
            coop_cfg.uav.v_m, coop_cfg.obstacles.back().params.v_o, coop_cfg.budget.v_b,
            coop_cfg.budget.v_bo);
        const bool ok = b.min_estimated_distance >= 14.30 + 10.0 &&
                        coop.min_estimated_distance >= 14.14 + 10.0 && !speed_cond;
        report(5, "multi-obstacle and cooperative separation", ok,
               fmt("min estimated %.4f (>= 24.30) and %.4f (>= 24.14), speed condition fails "
                   "as expected",
                   b.min_estimated_distance, coop.min_estimated_distance));
    }
    {  // 6: tracking-bound property sweep
        bool ok = true;
        for (std::uint64_t i = 0; i < 100 && ok; ++i) {
            TrackingProfile p = random_tracking_profile(1000 + i, i % 2 == 0);
            ok = verify_tracking_bounds(p).ok;
        }
        report(6, "100 randomized tracking profiles hold both bounds", ok,
               ok ? "all profiles within 1+1e-6" : "a profile violated a bound");
    }
    {  // 7: separation threshold tightness
        const SeparationCurve eq = equality_separation_curve(15, 5, 10, 5, 20, 1e-3);
        const SeparationCurve nec = necessity_separation_curve(15, 5, 10, 5, 2.0, 20, 1e-3);
        const bool ok = std::abs(eq.min_p_norm - 15.0) <= 0.001 * 15.0 && nec.min_p_norm < 15.0;
        report(7, "threshold equality rides the floor; sub-threshold dips", ok,
               fmt("equality min %.5f, sub-threshold min %.5f", eq.min_p_norm, nec.min_p_norm));
    }
    {  // 8: estimation-lag bound across random trajectories
        const UncertaintyBudget budget{.b = 3, .v_b = 3, .b_o = 1, .v_bo = 1, .tau_dm = 1,
                                       .theta_m = 0.1, .T_s = 0.01};
        const LambdaSweepResult s = lambda_bound_sweep(budget, 5.0, 100, 424242);
        report(8, "lag bound holds with factor 1.01 over 100 trajectories", s.ok,
               fmt("worst ratio %.4f of bound %.4f m", s.worst_ratio, s.bound));
    }
    {  // 9: boundary floor certification for every preset plus negative control
        bool ok = true;
        std::string detail = "all presets certified; goal-only law rejected";
        for (const auto& name : preset_names()) {
            const ScenarioConfig c = make_preset(name);
            double r_o = 0;
            for (const auto& o : c.obstacles) r_o = std::max(r_o, o.params.r_o);
            ControllerParams cp;
            cp.r_guard = c.r_s + r_o + c.guard_margin;
            cp.margin = c.blend_margin;
            cp.goal = c.goal;
            cp.v_m = c.uav.v_m;
            const ControlLaw law = [cp](double t, const Vec3& x) { return avoid_one(t, x, x, cp); };
            if (!certify_boundary_floor(law, c.r_s, r_o, c.uav.v_m, 10000).certified) {
                ok = false;
                detail = name + " failed certification";
            }
        }
        const ControlLaw goal_only = [](double, const Vec3& x) {
            return saturate_command((Vec3{100, 0, 100} - x) * 1.0, 10.0);
        };
        if (certify_boundary_floor(goal_only, 14.30, 10.0, 10.0, 10000).certified) {
            ok = false;
            detail = "negative control passed unexpectedly";
        }
        report(9, "escape-law certification on 10^4 sphere samples", ok, detail);
    }
    {  // 10: sample-hold vs expectation-model residual
        LinkParams lp;
        lp.theta = 0.1;
        lp.tau_d = 1.0;
        lp.T_s = 0.01;
        lp.seed = 77;
        const double v_o = 5.0;
        BoundedNoise vel(991, v_o, 2 * v_o);
        Vec3 xi{40, 0, 100};
        BroadcastLink link(lp, xi, vel.at(0.0));
        std::vector<double> res;
        double max_resid = 0;
        for (std::size_t i = 0; res.size() < 10000; ++i) {
            const double t = i * lp.T_s;
            xi += (vel.at(t) + vel.at(t + lp.T_s)) * (lp.T_s / 2);
            link.push_truth(t + lp.T_s, xi);
            link.tick_sample_hold(t + lp.T_s);
            link.advance_expectation(t, lp.T_s);
            const Vec3 d = link.held_value() - link.xi_bar();
            res.push_back(d.x);
            max_resid = std::max(max_resid, d.norm());
        }
        const double cap = v_o * 40.0 * lp.T_s + v_o * lp.theta * lp.T_s / (1 - lp.theta);
        const double ks = ks_statistic(res);
        const double crit = 1.36 / std::sqrt(10000.0);
        const bool normal_ok = ks < crit;
        // Policy: the normality assertion downgrades to boundedness with the
        // statistic logged when the fitted-normal check fails.
        report(10, "channel residual bounded; KS statistic logged", max_resid <= cap,
               fmt("max residual %.4f m (cap %.4f); KS %.4f", max_resid, cap, ks) +
                   (normal_ok ? " < 0.0136 (normality accepted)"
                              : " >= 0.0136 (downgraded to boundedness)"));
    }
    {  // 11: byte-identical trace files on repeated runs
        bool ok = false;
        std::string detail = "no CLI path given";
        if (!cli.empty()) {
            const int r1 = run_cli(cli, "run --preset sim1-caseB --seed 7 --out acc_run1");
            const int r2 = run_cli(cli, "run --preset sim1-caseB --seed 7 --out acc_run2");
            const std::string t1 = slurp("acc_run1/trace.csv");
            const std::string t2 = slurp("acc_run2/trace.csv");
            ok = r1 == 0 && r2 == 0 && !t1.empty() && t1 == t2;
            detail = fmt("two runs, %.0f bytes each, identical: ", (double)t1.size()) +
                     (ok ? "yes" : "no");
        }
        report(11, "repeated runs emit byte-identical traces", ok, detail);
    }

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 11 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
