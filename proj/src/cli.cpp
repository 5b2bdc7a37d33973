#include "hff/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hff/io_json.hpp"

namespace hff {

namespace {

struct CommonFlags {
    std::string config_path;
    int iters = -1;
    long guard = -1;
    std::vector<std::string> charts;
    int resolution = -1;
    std::string out_dir;
    std::string format;

    void attach(CLI::App* cmd, bool with_grid) {
        cmd->add_option("--config", config_path, "JSON run configuration")->required();
        cmd->add_option("--iters", iters, "iteration count / period override");
        cmd->add_option("--guard", guard, "degree guard override");
        if (with_grid) {
            cmd->add_option("--chart", charts,
                            "chart as cx,cy,halfwidth (repeatable; \"infinity\" for the 1/t chart)");
            cmd->add_option("--resolution", resolution, "grid resolution override");
        }
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--format", format, "stdout payload: json or csv");
    }

    RunConfig load() const {
        RunConfig c = load_run_config(config_path);
        if (iters > 0) {
            c.iters = iters;
            c.fixed_point_period = iters;
        }
        if (guard >= 0) c.guard = guard;
        if (resolution > 0) c.resolution = resolution;
        if (!out_dir.empty()) c.out_dir = out_dir;
        if (!format.empty()) {
            if (format != "json" && format != "csv")
                throw Error(Errc::Config, "format must be json or csv");
            c.format = format;
        }
        if (!charts.empty()) {
            c.charts.clear();
            for (const std::string& s : charts) {
                ChartSpec spec;
                spec.resolution = c.resolution;
                if (s == "infinity" || s == "inf") {
                    spec.at_infinity = true;
                    spec.halfwidth = 0.125;
                } else {
                    double cx, cy, hw;
                    if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &cx, &cy, &hw) != 3 || hw <= 0)
                        throw Error(Errc::Config, "--chart expects cx,cy,halfwidth: " + s);
                    spec.center = {cx, cy};
                    spec.halfwidth = hw;
                }
                c.charts.push_back(spec);
            }
        }
        return c;
    }
};

void ensure_out(const RunConfig& c) { std::filesystem::create_directories(c.out_dir); }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::Config, "cannot write " + path);
    out << text;
}

void require_point(const RunConfig& c) {
    if (!c.has_point) throw Error(Errc::Config, "this command needs a \"point\" in the config");
}

void require_regular(const RunConfig& c) {
    ValidationReport rep = validate_regular(c.family);
    if (!rep.ok) {
        std::string msg = "family is not regular:";
        for (const auto& v : rep.violations) msg += " " + v + ";";
        throw Error(Errc::NotRegular, msg);
    }
}

HeightParams height_params(const RunConfig& c) {
    HeightParams p;
    p.max_iters = c.iters;
    p.degree_cap = c.degree_cap;
    return p;
}

std::vector<ChartSpec> charts_or_default(const RunConfig& c) {
    if (!c.charts.empty()) return c.charts;
    ChartSpec main;
    main.center = {0.0, 0.0};
    main.halfwidth = 8.0;
    main.resolution = c.resolution;
    ChartSpec inf;
    inf.at_infinity = true;
    inf.halfwidth = 0.125;
    inf.resolution = c.resolution;
    return {main, inf};
}

int cmd_height(const CommonFlags& flags) {
    RunConfig c = flags.load();
    require_regular(c);
    require_point(c);
    HeightReport rep = height_report(c.family, c.point, height_params(c));
    ensure_out(c);
    json j = to_json(rep);
    write_file(c.out_dir + "/height.json", j.dump(2) + "\n");
    write_file(c.out_dir + "/degrees.csv", degrees_to_csv(rep));
    std::cout << (c.format == "csv" ? degrees_to_csv(rep) : j.dump(2) + "\n");
    return 0;
}

int cmd_periodic(const CommonFlags& flags) {
    RunConfig c = flags.load();
    require_regular(c);
    json j;
    if (c.has_point) {
        long guard = c.guard >= 0 ? c.guard : default_guard(c.point);
        j["verdict"] = to_json(detect_periodic(c.family, c.point, guard));
    }
    FixedPointsResult fps = fixed_points(c.family, c.fixed_point_period);
    j["fixed_points"] = to_json(fps);
    json cycles = json::array();
    for (const CycleData& cy : cycles_among(c.family, fps.points)) cycles.push_back(to_json(cy));
    j["cycles"] = cycles;
    ensure_out(c);
    write_file(c.out_dir + "/periodic.json", j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_fixed_points(const CommonFlags& flags) {
    RunConfig c = flags.load();
    require_regular(c);
    FixedPointsResult fps = fixed_points(c.family, c.fixed_point_period);
    json j = to_json(fps);
    json cycles = json::array();
    for (const CycleData& cy : cycles_among(c.family, fps.points)) cycles.push_back(to_json(cy));
    j["cycles"] = cycles;
    ensure_out(c);
    write_file(c.out_dir + "/fixed_points.json", j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_green_scan(const CommonFlags& flags) {
    RunConfig c = flags.load();
    require_regular(c);
    require_point(c);
    std::vector<ChartSpec> charts = charts_or_default(c);

    std::vector<GreenGrid> grids;
    grids.reserve(charts.size());
    for (const ChartSpec& spec : charts)
        grids.push_back(green_marked(c.family, c.point, spec, c.escape, c.margin));
    mark_partition(grids);

    ensure_out(c);
    json j;
    json mass_reports = json::array();
    std::vector<double> masses, errs;
    std::string all_csv;
    for (size_t i = 0; i < grids.size(); ++i) {
        std::string csv = grid_to_csv(grids[i]);
        write_file(c.out_dir + "/grid_" + std::to_string(i) + ".csv", csv);
        all_csv += csv;
        MassReport m = bif_mass(grids[i]);
        mass_reports.push_back(to_json(m));
        masses.push_back(m.mass);
        errs.push_back(m.err);
    }
    j["mass_per_chart"] = mass_reports;
    j["mass_total"] = pairwise_sum(masses);
    j["mass_err_total"] = pairwise_sum(errs);
    j["stability"] =
        to_json(stability_probe(c.family, c.point, charts, c.escape, c.tolerances, height_params(c)));
    write_file(c.out_dir + "/green_scan.json", j.dump(2) + "\n");
    std::cout << (c.format == "csv" ? all_csv : j.dump(2) + "\n");
    return 0;
}

int cmd_certify(const CommonFlags& flags) {
    RunConfig c = flags.load();
    require_regular(c);
    json j = to_json(nonisotriviality_certificate(c.family));
    ensure_out(c);
    write_file(c.out_dir + "/certify.json", j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_gap(const CommonFlags& flags) {
    RunConfig c = flags.load();
    require_regular(c);
    GapProbeResult r = height_gap_probe(c.family, c.samples, c.max_height, c.seed, height_params(c));
    json j{{"samples", r.samples},
           {"min_gap", r.min_gap.get_str()},
           {"c_emp", r.c_emp.get_str()},
           {"c_emp_double", to_double(r.c_emp)},
           {"height_bound_ok", r.height_bound_ok},
           {"height_bound_violations", r.height_bound_violations},
           {"worst_deficiency", r.worst_deficiency.get_str()}};
    ensure_out(c);
    write_file(c.out_dir + "/gap.json", j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"canonical heights, periodicity and Green functions for families of plane "
                 "polynomial automorphisms over Q(t)"};
    app.require_subcommand(1);

    CommonFlags f_height, f_periodic, f_fixed, f_green, f_certify, f_gap;
    f_height.attach(app.add_subcommand("height", "degree sequences and canonical heights"), false);
    f_periodic.attach(app.add_subcommand("periodic", "periodicity verdict and fixed points"), false);
    f_fixed.attach(app.add_subcommand("fixed-points", "K-rational periodic points"), false);
    f_green.attach(app.add_subcommand("green-scan", "Green-function grids, bifurcation mass, stability"),
                   true);
    f_certify.attach(app.add_subcommand("certify", "non-isotriviality certificate"), false);
    f_gap.attach(app.add_subcommand("gap", "height-inequality probe on random points"), false);

    std::vector<const char*> argv;
    argv.push_back("hff");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << json{{"error", {{"code", "Usage"}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand("height")) return cmd_height(f_height);
        if (app.got_subcommand("periodic")) return cmd_periodic(f_periodic);
        if (app.got_subcommand("fixed-points")) return cmd_fixed_points(f_fixed);
        if (app.got_subcommand("green-scan")) return cmd_green_scan(f_green);
        if (app.got_subcommand("certify")) return cmd_certify(f_certify);
        if (app.got_subcommand("gap")) return cmd_gap(f_gap);
    } catch (const Error& e) {
        std::cerr << json{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}}.dump()
                  << "\n";
        switch (e.code()) {
            case Errc::Parse:
            case Errc::Config: return 2;
            case Errc::NotRegular: return 3;
            default: return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace hff
