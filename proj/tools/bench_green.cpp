// Compares the serial reference grid kernel against the OpenMP one on the
// standard quadratic family and checks that they produce identical cells.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hff/green.hpp"

using namespace hff;

static RegularFamily quadratic_family() {
    HenonFactor h;
    h.a = RatFunc(1);
    h.p = {RatFunc::t(), RatFunc(0), RatFunc(1)};  // y^2 + t
    return RegularFamily::compose({h});
}

int main(int argc, char** argv) {
    int resolution = argc > 1 ? std::atoi(argv[1]) : 256;
    RegularFamily f = quadratic_family();
    PointK z{RatFunc(0), RatFunc(0)};
    ChartSpec chart;
    chart.center = {0.0, 0.0};
    chart.halfwidth = 8.0;
    chart.resolution = resolution;
    EscapeParams params;

    auto time_run = [&](bool parallel) {
        auto t0 = std::chrono::steady_clock::now();
        GreenGrid g = green_marked(f, z, chart, params, 0.04, parallel);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return std::make_pair(ms, std::move(g));
    };

    auto [serial_ms, gs] = time_run(false);
    auto [parallel_ms, gp] = time_run(true);

    bool identical = gs.cells.size() == gp.cells.size();
    for (size_t i = 0; identical && i < gs.cells.size(); ++i)
        identical = std::memcmp(&gs.cells[i].g, &gp.cells[i].g, sizeof(double)) == 0 &&
                    std::memcmp(&gs.cells[i].err, &gp.cells[i].err, sizeof(double)) == 0 &&
                    gs.cells[i].flag == gp.cells[i].flag;

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("grid %dx%d, %d thread(s)\n", resolution, resolution, threads);
    std::printf("  serial   %10.1f ms\n", serial_ms);
    std::printf("  openmp   %10.1f ms   speedup %.2fx\n", parallel_ms, serial_ms / parallel_ms);
    std::printf("  cells identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
