#include "rdshock/commands.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "rdshock/io.hpp"
#include "rdshock/phase_plane.hpp"
#include "rdshock/stability.hpp"

namespace rdshock {

OutputFormat format_from_string(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw ConfigError("unknown format '" + name + "' (expected csv|json)");
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2) throw ConfigError("grid counts must be at least 2");
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1.0);
    return xs;
}

std::string bool_cell(bool v) { return v ? "1" : "0"; }

void write_profile_csv(const std::filesystem::path& path, const MultiValuedProfile& profile) {
    CsvWriter csv(path, {"x", "u", "branch", "t"});
    for (const ProfileSample& s : profile.samples)
        csv.row({CsvWriter::cell(s.x), CsvWriter::cell(s.u), to_string(s.branch),
                 CsvWriter::cell(profile.t)});
}

void write_profile_csv(const std::filesystem::path& path, const ShockedProfile& profile) {
    CsvWriter csv(path, {"x", "u", "branch", "t"});
    for (const ProfileSample& s : profile.samples)
        csv.row({CsvWriter::cell(s.x), CsvWriter::cell(s.u), to_string(s.branch),
                 CsvWriter::cell(profile.t)});
}

ShockPair solve_pair(const DiffusivityModel& model, ShockRule rule) {
    return rule == ShockRule::Continuity ? shock_by_continuity(model)
                                         : shock_by_equal_area(model);
}

/// Default plot domain: from the u = 1 - 1e-6 clip to the support edge
/// (u = 0), over all requested times, padded by 2%.
std::pair<double, double> default_x_range(const DiffusivityModel& model,
                                          const SolutionParams& params,
                                          const std::vector<double>& times) {
    const double clip_level = model.flux_potential(1.0 - 1e-6);
    const double support_level = model.flux_potential(0.0);
    std::vector<double> xs;
    for (double t : times)
        for (double level : {clip_level, support_level})
            for (double x : level_crossings(params, t, level)) xs.push_back(x);
    if (xs.empty())
        throw ConfigError(
            "cannot infer an x range for the requested times; set x_min and x_max");
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    const double span = std::max(*hi - *lo, 1e-6);
    return {*lo - 0.02 * span, *hi + 0.02 * span};
}

}  // namespace

std::vector<std::string> run_solve(RunConfig& config, const RunOptions& options) {
    ConfigSection& cmd = config.command;
    const SolutionFamily family = family_from_string(cmd.get_string("family"));
    const std::vector<double> times = cmd.get_double_list("times");
    const int x_count = cmd.get_int("x_count", 801);
    const ShockRule rule = rule_from_string(cmd.get_string("rule", "continuity"));
    check_family(config.params, family);
    double x_min, x_max;
    if (cmd.has("x_min") || cmd.has("x_max")) {
        x_min = cmd.get_double("x_min");
        x_max = cmd.get_double("x_max");
    } else {
        std::tie(x_min, x_max) = default_x_range(config.model, config.params, times);
    }
    cmd.reject_unused("command");

    const std::vector<double> grid = linspace(x_min, x_max, x_count);
    const ShockPair pair = solve_pair(config.model, rule);
    const ShockJumpReport jumps = shock_continuity_report(config.model, config.params, pair);

    std::vector<std::string> files;
    ordered_json time_entries = ordered_json::array();
    for (std::size_t i = 0; i < times.size(); ++i) {
        const MultiValuedProfile profile =
            sample_profile(config.model, config.params, times[i], grid);

        const std::string tag = "t" + std::to_string(i);
        if (options.format == OutputFormat::Csv) {
            write_profile_csv(options.out_dir / ("multivalued_" + tag + ".csv"), profile);
            files.push_back("multivalued_" + tag + ".csv");
        } else {
            write_json_file(options.out_dir / ("multivalued_" + tag + ".json"),
                            to_json(profile));
            files.push_back("multivalued_" + tag + ".json");
        }

        ordered_json entry;
        entry["t"] = times[i];
        try {
            const ShockedProfile shocked =
                apply_shock(config.model, config.params, profile, pair);
            if (options.format == OutputFormat::Csv) {
                write_profile_csv(options.out_dir / ("shocked_" + tag + ".csv"), shocked);
                files.push_back("shocked_" + tag + ".csv");
            } else {
                MultiValuedProfile as_profile{shocked.t, shocked.samples, profile.band};
                write_json_file(options.out_dir / ("shocked_" + tag + ".json"),
                                to_json(as_profile));
                files.push_back("shocked_" + tag + ".json");
            }
            entry["shock_locations"] = shocked.shock_locations;
            entry["shocked"] = !shocked.shock_locations.empty();
        } catch (const LevelNotCrossedError&) {
            entry["shock_locations"] = ordered_json::array();
            entry["shocked"] = false;
            entry["note"] = "multi-valued profile does not attain the shock level";
        }
        time_entries.push_back(std::move(entry));
    }

    ordered_json report;
    report["family"] = to_string(family);
    report["pair"] = to_json(pair, jumps);
    report["jump_detail"] = to_json(jumps);
    report["times"] = std::move(time_entries);
    write_json_file(options.out_dir / "shock_report.json", report);
    files.push_back("shock_report.json");
    return files;
}

std::vector<std::string> run_boundary(RunConfig& config, const RunOptions& options) {
    ConfigSection& cmd = config.command;
    const SolutionFamily family = family_from_string(cmd.get_string("family"));
    const double t_min = cmd.get_double("t_min");
    const double t_max = cmd.get_double("t_max");
    const int t_count = cmd.get_int("t_count", 81);
    cmd.reject_unused("command");

    const BoundaryTrack track = track_boundary(config.model, config.params, family,
                                               linspace(t_min, t_max, t_count));

    std::vector<std::string> files;
    if (options.format == OutputFormat::Csv) {
        CsvWriter csv(options.out_dir / "boundary.csv",
                      {"t", "L", "flux", "speed", "stefan_residual"});
        for (const BoundaryPoint& p : track.points)
            csv.row({CsvWriter::cell(p.t), CsvWriter::cell(p.position),
                     CsvWriter::cell(p.flux), CsvWriter::cell(p.speed),
                     CsvWriter::cell(p.stefan_residual)});
        files.push_back("boundary.csv");
    } else {
        ordered_json rows = ordered_json::array();
        for (const BoundaryPoint& p : track.points) rows.push_back(to_json(p));
        ordered_json j;
        j["family"] = to_string(family);
        j["points"] = std::move(rows);
        write_json_file(options.out_dir / "boundary.json", j);
        files.push_back("boundary.json");
    }
    return files;
}

std::vector<std::string> run_shock_compare(RunConfig& config, const RunOptions& options) {
    ConfigSection& cmd = config.command;
    const bool verbose = cmd.get_bool("verbose", false);
    cmd.reject_unused("command");

    ShockPair cont = shock_by_continuity(config.model);
    ShockPair area = shock_by_equal_area(config.model);
    const bool locatable = config.params.c2 == 0.0 && config.params.c1 < 0.0;
    if (locatable) {
        cont.location = travelling_wave_z(config.model, config.params, cont.u_l);
        area.location = travelling_wave_z(config.model, config.params, area.u_l);
    }

    constexpr double tol = 1e-9;
    const auto cont_jumps = shock_continuity_report(config.model, config.params, cont);
    const auto area_jumps = shock_continuity_report(config.model, config.params, area);
    ordered_json j;
    j["continuity"] = to_json(cont, cont_jumps);
    j["continuity_jumps"] = to_json(cont_jumps);
    j["equal_area"] = to_json(area, area_jumps);
    j["equal_area_jumps"] = to_json(area_jumps);
    j["rules_equal"] =
        std::fabs(cont.u_l - area.u_l) <= tol && std::fabs(cont.u_r - area.u_r) <= tol;
    j["u_l_difference"] = area.u_l - cont.u_l;
    j["u_r_difference"] = area.u_r - cont.u_r;
    if (locatable)
        j["location_difference"] = *area.location - *cont.location;
    else
        j["location_difference"] = nullptr;
    if (verbose) {
        ordered_json all = ordered_json::array();
        for (const ShockPair& p : find_all_shock_pairs(config.model, ShockRule::Continuity))
            all.push_back(to_json(p));
        j["all_continuity_pairs"] = std::move(all);
        ordered_json all_ea = ordered_json::array();
        for (const ShockPair& p : find_all_shock_pairs(config.model, ShockRule::EqualArea))
            all_ea.push_back(to_json(p));
        j["all_equal_area_pairs"] = std::move(all_ea);
    }
    write_json_file(options.out_dir / "shock_compare.json", j);
    return {"shock_compare.json"};
}

std::vector<std::string> run_stability(RunConfig& config, const RunOptions& options) {
    ConfigSection& cmd = config.command;
    const double alpha_min = cmd.get_double("alpha_min", -2.0);
    const double alpha_max = cmd.get_double("alpha_max", 2.0);
    const int alpha_count = cmd.get_int("alpha_count", 401);
    const int n_samples = cmd.get_int("n_samples", 200);
    StabilityGridSpec grid;
    grid.a_min = cmd.get_double("a_min", 0.01);
    grid.a_max = cmd.get_double("a_max", 1.0);
    grid.b_min = cmd.get_double("b_min", 0.01);
    grid.b_max = cmd.get_double("b_max", 1.0);
    grid.na = grid.nb = cmd.get_int("grid_count", 100);
    grid.trace_samples = n_samples;
    cmd.reject_unused("command");

    std::vector<std::string> files;

    ordered_json states = ordered_json::array();
    states.push_back(
        to_json(classify_constant_state(config.model, config.params, 0.0)));
    states.push_back(
        to_json(classify_constant_state(config.model, config.params, 1.0)));
    write_json_file(options.out_dir / "constant_states.json", states);
    files.push_back("constant_states.json");

    const DispersionCurve curve = essential_spectrum_curve(
        config.model, config.params, linspace(alpha_min, alpha_max, alpha_count));
    {
        CsvWriter csv(options.out_dir / "dispersion.csv", {"alpha", "re_lambda", "im_lambda"});
        for (std::size_t i = 0; i < curve.alphas.size(); ++i)
            csv.row({CsvWriter::cell(curve.alphas[i]), CsvWriter::cell(curve.lambdas[i].real()),
                     CsvWriter::cell(curve.lambdas[i].imag())});
        files.push_back("dispersion.csv");
    }

    const ShockPair pair = shock_by_continuity(config.model);
    const SturmCriterionTrace trace =
        sturm_criterion_trace(config.model, config.params, pair, n_samples);
    {
        CsvWriter csv(options.out_dir / "sturm_trace.csv", {"u", "criterion"});
        for (std::size_t i = 0; i < trace.u.size(); ++i)
            csv.row({CsvWriter::cell(trace.u[i]), CsvWriter::cell(trace.criterion[i])});
        files.push_back("sturm_trace.csv");
    }

    const StabilityRegionMask mask = stability_region_scan(grid);
    {
        CsvWriter csv(options.out_dir / "region_mask.csv",
                      {"a", "b", "shock_feasible", "sturm_ok", "stable"});
        for (const StabilityCell& c : mask.cells)
            csv.row({CsvWriter::cell(c.a), CsvWriter::cell(c.b), bool_cell(c.shock_feasible),
                     bool_cell(c.sturm_ok), bool_cell(c.stable)});
        files.push_back("region_mask.csv");
    }
    write_json_file(options.out_dir / "region_mask.json", to_json(mask));
    files.push_back("region_mask.json");
    return files;
}

std::vector<std::string> run_phase_plane(RunConfig& config, const RunOptions& options) {
    ConfigSection& cmd = config.command;
    const double k_phi0 = config.params.k * config.phi0;
    const double u_min = cmd.get_double("u_min", 0.0);
    const double u_max = cmd.get_double("u_max", 1.0);
    const int u_count = cmd.get_int("u_count", 40);
    const double q_min = cmd.get_double("q_min", 1.5 * k_phi0);
    const double q_max = cmd.get_double("q_max", -0.3 * k_phi0);
    const int q_count = cmd.get_int("q_count", 40);
    const int traj_count = cmd.get_int("traj_count", 200);
    const int nullcline_count = cmd.get_int("nullcline_count", 400);
    cmd.reject_unused("command");

    std::vector<std::string> files;
    {
        CsvWriter csv(options.out_dir / "field.csv", {"u", "q", "du_dz", "dq_dz", "wall_flag"});
        for (double u : linspace(u_min, u_max, u_count))
            for (double q : linspace(q_min, q_max, q_count)) {
                const FieldSample s = vector_field(config.model, config.params, {u, q});
                csv.row({CsvWriter::cell(s.u), CsvWriter::cell(s.q), CsvWriter::cell(s.du_dz),
                         CsvWriter::cell(s.dq_dz), bool_cell(s.wall)});
            }
        files.push_back("field.csv");
    }
    {
        const ShockPair pair = shock_by_continuity(config.model);
        const TrajectoryBranches traj =
            shock_split_trajectory(config.model, config.params, pair, traj_count);
        CsvWriter csv(options.out_dir / "trajectory.csv", {"u", "q", "branch"});
        for (const PhasePoint& p : traj.lower)
            csv.row({CsvWriter::cell(p.u), CsvWriter::cell(p.q), "lower"});
        for (const PhasePoint& p : traj.upper)
            csv.row({CsvWriter::cell(p.u), CsvWriter::cell(p.q), "upper"});
        files.push_back("trajectory.csv");
    }
    {
        const Nullclines nc = nullclines_and_walls(config.model, config.params, u_min, u_max,
                                                   nullcline_count);
        CsvWriter csv(options.out_dir / "nullclines.csv", {"u", "q", "which"});
        for (const PhasePoint& p : nc.q_nullcline)
            csv.row({CsvWriter::cell(p.u), CsvWriter::cell(p.q), "q_nullcline"});
        for (double u : linspace(u_min, u_max, nullcline_count))
            csv.row({CsvWriter::cell(u), CsvWriter::cell(0.0), "u_nullcline"});
        for (double wall : nc.walls)
            for (double q : linspace(q_min, q_max, q_count))
                csv.row({CsvWriter::cell(wall), CsvWriter::cell(q), "wall"});
        files.push_back("nullclines.csv");
    }
    return files;
}

std::vector<std::string> run_subcommand(const std::string& name, RunConfig& config,
                                        const RunOptions& options) {
    if (name == "solve") return run_solve(config, options);
    if (name == "boundary") return run_boundary(config, options);
    if (name == "shock-compare") return run_shock_compare(config, options);
    if (name == "stability") return run_stability(config, options);
    if (name == "phase-plane") return run_phase_plane(config, options);
    throw ConfigError("unknown subcommand '" + name + "'");
}

}  // namespace rdshock
