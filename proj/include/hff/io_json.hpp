#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hff/green.hpp"
#include "hff/heights.hpp"
#include "hff/periodic.hpp"

namespace hff {

using json = nlohmann::json;

/// Fully parsed run configuration. Parsing is strict: unknown keys are
/// rejected, and everything is validated before any computation starts.
struct RunConfig {
    RegularFamily family;
    bool has_point = false;
    PointK point;

    int iters = 12;
    long guard = -1;  // -1: derive from the point
    long degree_cap = 4096;
    int fixed_point_period = 1;

    std::vector<ChartSpec> charts;  // empty: default pair of charts
    int resolution = 200;
    double margin = 0.04;
    EscapeParams escape;
    StabilityTolerances tolerances;

    unsigned seed = 1;
    int samples = 200;
    int max_height = 4;

    std::string out_dir = "out";
    std::string format = "json";  // json | csv
};

RegularFamily family_from_json(const json& j);
RunConfig run_config_from_json(const json& j);
RunConfig load_run_config(const std::string& path);

json to_json(const HeightValue& v);
json to_json(const HeightReport& r);
json to_json(const PeriodicityVerdict& v);
json to_json(const FixedPointsResult& r);
json to_json(const CycleData& c);
json to_json(const NonIsoCertificate& c);
json to_json(const MassReport& m);
json to_json(const StabilityReport& r);
json to_json(const ValidationReport& r);

std::string grid_to_csv(const GreenGrid& g);
json grid_to_json(const GreenGrid& g);
std::string degrees_to_csv(const HeightReport& r);

}  // namespace hff
