#pragma once

#include <string>
#include <vector>

#include "jt/poincare.hpp"

namespace jt {

// Rectangular rotation-number sweep over the (a, b) plane at fixed mu.
struct SweepJob {
    double a_min = 0.0, a_max = 1.0;
    double b_min = 0.0, b_max = 1.0;
    int n_a = 2, n_b = 2;
    double mu = 1.0;

    void validate() const {
        if (n_a < 2 || n_b < 2)
            throw std::invalid_argument("SweepJob: grid counts must be >= 2");
        if (!(a_max > a_min) || !(b_max > b_min))
            throw std::invalid_argument("SweepJob: ranges must be non-degenerate");
        if (!(mu > 0.0)) throw std::invalid_argument("SweepJob: mu must be positive");
    }
};

struct SweepCell {
    double a = 0.0, b = 0.0;
    double rho = 0.0;
    MapClass map_class = MapClass::Identity;
    double fit_residual = 0.0;
};

// Cells in row-major order (a outer, b inner); static work assignment makes
// the result independent of the worker count.
std::vector<SweepCell> run_sweep(const SweepJob& job, int threads);

// 17-significant-digit decimal formatting shared by all CSV writers.
std::string format_double(double v);

std::string sweep_csv(const std::vector<SweepCell>& cells);

// Worker-count resolution: JT_THREADS overrides the flag; a non-positive
// flag falls back to the available parallelism.
int resolve_threads(int flag_value);

const char* tool_version();

}  // namespace jt
