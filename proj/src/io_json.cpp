#include "hff/io_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hff/expr.hpp"

namespace hff {

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
    if (!j.is_object()) throw Error(Errc::Config, where + " must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                ok = true;
                break;
            }
        if (!ok) throw Error(Errc::Config, "unknown key \"" + it.key() + "\" in " + where);
    }
}

RatFunc scalar_field(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_string())
        throw Error(Errc::Config, where + " needs string field \"" + key + "\"");
    return parse_scalar(j[key].get<std::string>());
}

std::vector<RatFunc> henon_coeffs(const std::string& text) {
    BivarPoly p = parse_poly(text);
    if (p.deg_x() > 0)
        throw Error(Errc::Config, "henon factor polynomial must not involve x: " + text);
    int dy = p.deg_y();
    std::vector<RatFunc> c;
    for (int j = 0; j <= std::max(dy, 0); ++j) c.push_back(p.coeff(0, j));
    return c;
}

std::string rat_str(const BigRat& q) { return q.get_str(); }

double fmt_double(double v) { return v; }

}  // namespace

RegularFamily family_from_json(const json& j) {
    check_keys(j, {"parameter", "factors"}, "family");
    if (!j.contains("parameter") || j["parameter"] != "t")
        throw Error(Errc::Config, "family.parameter must be \"t\"");
    if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
        throw Error(Errc::Config, "family.factors must be a nonempty array");
    std::vector<Factor> factors;
    for (const json& fj : j["factors"]) {
        if (!fj.is_object() || !fj.contains("type"))
            throw Error(Errc::Config, "factor entries need a \"type\"");
        std::string type = fj["type"].get<std::string>();
        if (type == "henon") {
            check_keys(fj, {"type", "a", "p"}, "henon factor");
            HenonFactor h;
            h.a = scalar_field(fj, "a", "henon factor");
            if (!fj.contains("p") || !fj["p"].is_string())
                throw Error(Errc::Config, "henon factor needs string field \"p\"");
            h.p = henon_coeffs(fj["p"].get<std::string>());
            factors.emplace_back(std::move(h));
        } else if (type == "affine") {
            check_keys(fj, {"type", "matrix", "translation"}, "affine factor");
            if (!fj.contains("matrix") || !fj["matrix"].is_array() || fj["matrix"].size() != 2 ||
                !fj["matrix"][0].is_array() || fj["matrix"][0].size() != 2 ||
                !fj["matrix"][1].is_array() || fj["matrix"][1].size() != 2)
                throw Error(Errc::Config, "affine factor needs a 2x2 \"matrix\"");
            if (!fj.contains("translation") || !fj["translation"].is_array() ||
                fj["translation"].size() != 2)
                throw Error(Errc::Config, "affine factor needs a length-2 \"translation\"");
            AffineFactor a;
            a.m00 = parse_scalar(fj["matrix"][0][0].get<std::string>());
            a.m01 = parse_scalar(fj["matrix"][0][1].get<std::string>());
            a.m10 = parse_scalar(fj["matrix"][1][0].get<std::string>());
            a.m11 = parse_scalar(fj["matrix"][1][1].get<std::string>());
            a.t0 = parse_scalar(fj["translation"][0].get<std::string>());
            a.t1 = parse_scalar(fj["translation"][1].get<std::string>());
            factors.emplace_back(std::move(a));
        } else {
            throw Error(Errc::Config, "unknown factor type \"" + type + "\"");
        }
    }
    return RegularFamily::compose(std::move(factors));
}

namespace {

ChartSpec chart_from_json(const json& j, int default_resolution) {
    ChartSpec c;
    c.resolution = default_resolution;
    if (j.is_string() && j == "infinity") {
        c.at_infinity = true;
        c.halfwidth = 0.125;
        return c;
    }
    check_keys(j, {"center", "halfwidth", "resolution", "infinity"}, "chart");
    if (j.contains("infinity")) c.at_infinity = j["infinity"].get<bool>();
    if (j.contains("center")) {
        if (!j["center"].is_array() || j["center"].size() != 2)
            throw Error(Errc::Config, "chart.center must be [re, im]");
        c.center = {j["center"][0].get<double>(), j["center"][1].get<double>()};
    }
    if (j.contains("halfwidth")) c.halfwidth = j["halfwidth"].get<double>();
    else if (c.at_infinity) c.halfwidth = 0.125;
    if (j.contains("resolution")) c.resolution = j["resolution"].get<int>();
    if (c.halfwidth <= 0 || c.resolution < 4)
        throw Error(Errc::Config, "chart needs positive halfwidth and resolution >= 4");
    return c;
}

}  // namespace

RunConfig run_config_from_json(const json& j) {
    check_keys(j,
               {"family", "point", "iters", "guard", "degree_cap", "period", "charts",
                "resolution", "margin", "max_iter", "target_eps", "tolerances", "seed", "samples",
                "max_height", "out", "format"},
               "config");
    RunConfig c;
    if (!j.contains("family")) throw Error(Errc::Config, "config needs a \"family\"");
    c.family = family_from_json(j["family"]);
    if (j.contains("point")) {
        if (!j["point"].is_array() || j["point"].size() != 2)
            throw Error(Errc::Config, "point must be [\"x-expr\", \"y-expr\"]");
        c.point = {parse_scalar(j["point"][0].get<std::string>()),
                   parse_scalar(j["point"][1].get<std::string>())};
        c.has_point = true;
    }
    if (j.contains("iters")) c.iters = j["iters"].get<int>();
    if (j.contains("guard")) c.guard = j["guard"].get<long>();
    if (j.contains("degree_cap")) c.degree_cap = j["degree_cap"].get<long>();
    if (j.contains("period")) c.fixed_point_period = j["period"].get<int>();
    if (j.contains("resolution")) c.resolution = j["resolution"].get<int>();
    if (j.contains("charts")) {
        if (!j["charts"].is_array()) throw Error(Errc::Config, "charts must be an array");
        for (const json& cj : j["charts"]) c.charts.push_back(chart_from_json(cj, c.resolution));
    }
    if (j.contains("margin")) c.margin = j["margin"].get<double>();
    if (j.contains("max_iter")) c.escape.max_iter = j["max_iter"].get<int>();
    if (j.contains("target_eps")) c.escape.target_eps = j["target_eps"].get<double>();
    if (j.contains("tolerances")) {
        check_keys(j["tolerances"], {"green_rel", "mass_rel"}, "tolerances");
        if (j["tolerances"].contains("green_rel"))
            c.tolerances.green_rel = j["tolerances"]["green_rel"].get<double>();
        if (j["tolerances"].contains("mass_rel"))
            c.tolerances.mass_rel = j["tolerances"]["mass_rel"].get<double>();
    }
    if (j.contains("seed")) c.seed = j["seed"].get<unsigned>();
    if (j.contains("samples")) c.samples = j["samples"].get<int>();
    if (j.contains("max_height")) c.max_height = j["max_height"].get<int>();
    if (j.contains("out")) c.out_dir = j["out"].get<std::string>();
    if (j.contains("format")) {
        c.format = j["format"].get<std::string>();
        if (c.format != "json" && c.format != "csv")
            throw Error(Errc::Config, "format must be json or csv");
    }
    if (c.iters < 1 || c.resolution < 4) throw Error(Errc::Config, "iters/resolution out of range");
    return c;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::Config, "cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(Errc::Config, std::string("config is not valid JSON: ") + e.what());
    }
    return run_config_from_json(j);
}

json to_json(const HeightValue& v) {
    json j;
    switch (v.kind) {
        case HeightValue::Kind::Exact:
            j["type"] = "exact";
            j["value"] = rat_str(v.lo);
            j["value_double"] = fmt_double(to_double(v.lo));
            break;
        case HeightValue::Kind::Interval:
            j["type"] = "interval";
            j["lo"] = rat_str(v.lo);
            j["hi"] = rat_str(v.hi);
            j["lo_double"] = fmt_double(to_double(v.lo));
            j["hi_double"] = fmt_double(to_double(v.hi));
            break;
        case HeightValue::Kind::LowerBound:
            j["type"] = "lower-bound";
            j["lo"] = rat_str(v.lo);
            j["lo_double"] = fmt_double(to_double(v.lo));
            break;
    }
    j["certificate"] =
        v.cert == Certificate::CertifiedEmpirical ? "certified-empirical" : "empirical";
    return j;
}

json to_json(const HeightReport& r) {
    json j;
    j["degrees_forward"] = r.degrees_forward;
    j["degrees_backward"] = r.degrees_backward;
    j["cap_forward"] = r.cap_forward ? json(*r.cap_forward) : json(nullptr);
    j["cap_backward"] = r.cap_backward ? json(*r.cap_backward) : json(nullptr);
    j["h_plus"] = to_json(r.h_plus);
    j["h_minus"] = to_json(r.h_minus);
    j["h_total"] = to_json(r.h_total);
    j["alpha"] = {{"resolved", r.alpha.resolved},
                  {"value", r.alpha.resolved ? json(r.alpha.value) : json(nullptr)},
                  {"note", r.alpha.note}};
    return j;
}

static json point_json(const PointK& z) { return json::array({z.x.str(), z.y.str()}); }

json to_json(const PeriodicityVerdict& v) {
    json j;
    switch (v.status) {
        case PeriodicityVerdict::Status::Periodic:
            j["status"] = "periodic";
            j["period"] = v.period;
            break;
        case PeriodicityVerdict::Status::NotPeriodic:
            j["status"] = "not-periodic";
            j["reason"] = v.reason;
            break;
        case PeriodicityVerdict::Status::Inconclusive:
            j["status"] = "inconclusive";
            break;
    }
    j["stopped_at"] = v.stopped_at;
    j["degree_guard"] = v.degree_guard;
    j["budget"] = v.budget;
    json w = json::array();
    for (const PointK& p : v.witness) w.push_back(point_json(p));
    j["witness"] = w;
    return j;
}

json to_json(const FixedPointsResult& r) {
    json j;
    json pts = json::array();
    for (const PointK& p : r.points) pts.push_back(point_json(p));
    j["points"] = pts;
    j["residual_degree"] = r.residual_degree;
    j["residual"] = r.residual_text;
    return j;
}

json to_json(const CycleData& c) {
    json pts = json::array();
    for (const PointK& p : c.points) pts.push_back(point_json(p));
    return json{{"points", pts},
                {"period", c.points.size()},
                {"multiplier_trace", c.multiplier_trace.str()},
                {"jacobian_det", c.jacobian_det.str()}};
}

json to_json(const NonIsoCertificate& c) {
    json j;
    j["status"] = c.certified ? "certified-non-isotrivial" : "unknown";
    j["method"] = c.method;
    if (c.certified && c.method == "cycle-trace") {
        j["witness_trace"] = c.witness_trace.str();
        j["witness_period"] = c.witness_period;
    }
    j["detail"] = c.detail;
    return j;
}

json to_json(const MassReport& m) {
    return json{{"mass", m.mass},
                {"err_bound", m.err},
                {"stencil_cells", m.stencil_cells},
                {"excluded_cells", m.excluded_cells},
                {"branch_flux", m.branch_flux},
                {"branch_flux_residual", m.branch_flux_residual}};
}

json to_json(const StabilityReport& r) {
    json j;
    j["degrees_bounded"] = r.degrees_bounded;
    j["degree_seq"] = r.degree_seq;
    j["green_constant"] = r.green_constant;
    j["green_spread"] = r.green_spread;
    j["green_max"] = r.green_max;
    j["green_threshold"] = r.green_threshold;
    j["mass_total"] = r.mass_total;
    j["mass_err"] = r.mass_err;
    j["mass_zero"] = r.mass_zero;
    j["h_plus"] = r.h_plus;
    j["h_plus_exact"] = r.h_plus_exact;
    j["mass_matches_height"] = r.mass_matches_height;
    j["branch_flux_total"] = r.branch_flux_total;
    switch (r.verdict) {
        case StabilityReport::Verdict::ConsistentStable: j["verdict"] = "consistent-stable"; break;
        case StabilityReport::Verdict::ConsistentUnstable:
            j["verdict"] = "consistent-unstable";
            break;
        case StabilityReport::Verdict::Discrepant: j["verdict"] = "discrepant"; break;
    }
    return j;
}

json to_json(const ValidationReport& r) {
    return json{{"ok", r.ok},
                {"degree", r.degree},
                {"expanded_degree", r.expanded_degree},
                {"violations", r.violations},
                {"bad_params", r.bad_params}};
}

std::string grid_to_csv(const GreenGrid& g) {
    std::string out = "re_lambda,im_lambda,g,err_bound,flag\n";
    char buf[160];
    const int res = g.chart.resolution;
    for (int row = 0; row < res; ++row)
        for (int col = 0; col < res; ++col) {
            const GreenValue& c = g.cells[static_cast<size_t>(row) * res + col];
            std::complex<double> lambda = g.cell_lambda(row, col);
            const char* flag = c.flag == CellFlag::Converged
                                   ? "converged"
                                   : (c.flag == CellFlag::Truncated ? "truncated" : "near-bad-param");
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%s\n", lambda.real(),
                          lambda.imag(), c.g, c.err, flag);
            out += buf;
        }
    return out;
}

json grid_to_json(const GreenGrid& g) {
    json j;
    j["chart"] = {{"center", {g.chart.center.real(), g.chart.center.imag()}},
                  {"halfwidth", g.chart.halfwidth},
                  {"resolution", g.chart.resolution},
                  {"infinity", g.chart.at_infinity}};
    j["margin"] = g.margin;
    json cells = json::array();
    for (const GreenValue& c : g.cells)
        cells.push_back(json::array({c.g, c.err, static_cast<int>(c.flag)}));
    j["cells"] = cells;
    return j;
}

std::string degrees_to_csv(const HeightReport& r) {
    std::string out = "n,h_forward,h_backward\n";
    size_t rows = std::max(r.degrees_forward.size(), r.degrees_backward.size());
    for (size_t n = 0; n < rows; ++n) {
        out += std::to_string(n);
        out += ",";
        if (n < r.degrees_forward.size()) out += std::to_string(r.degrees_forward[n]);
        out += ",";
        if (n < r.degrees_backward.size()) out += std::to_string(r.degrees_backward[n]);
        out += "\n";
    }
    return out;
}

}  // namespace hff
