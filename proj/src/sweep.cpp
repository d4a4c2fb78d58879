#include "jt/sweep.hpp"

#include <cstdio>
#include <cstdlib>
#include <thread>

namespace jt {

std::vector<SweepCell> run_sweep(const SweepJob& job, int threads) {
    job.validate();
    const std::size_t total = static_cast<std::size_t>(job.n_a) * job.n_b;
    std::vector<SweepCell> cells(total);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const int ia = static_cast<int>(idx) / job.n_b;
            const int ib = static_cast<int>(idx) % job.n_b;
            SweepCell& c = cells[idx];
            c.a = job.a_min + (job.a_max - job.a_min) * ia / (job.n_a - 1.0);
            c.b = job.b_min + (job.b_max - job.b_min) * ib / (job.n_b - 1.0);
            const Params p{c.a, c.b, job.mu};
            try {
                const MobiusMap m = fit_mobius(p);
                const RotationResult r = rotation_from_map(m);
                c.rho = r.rho;
                c.map_class = r.map_class;
                c.fit_residual = m.fit_residual;
            } catch (const DegenerateFit&) {
                const RotationResult r = rotation_number(p);
                c.rho = r.rho;
                c.map_class = r.map_class;
                c.fit_residual = 0.0;
            }
        }
    };

    const int n_workers = std::max(1, std::min<int>(threads, static_cast<int>(total)));
    if (n_workers == 1) {
        work(0, total);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        const std::size_t chunk = (total + n_workers - 1) / n_workers;
        for (int w = 0; w < n_workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(total, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return cells;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string sweep_csv(const std::vector<SweepCell>& cells) {
    std::string out = "a,b,rho,class,fit_residual\n";
    for (const auto& c : cells) {
        out += format_double(c.a);
        out += ',';
        out += format_double(c.b);
        out += ',';
        out += format_double(c.rho);
        out += ',';
        out += to_string(c.map_class);
        out += ',';
        out += format_double(c.fit_residual);
        out += '\n';
    }
    return out;
}

int resolve_threads(int flag_value) {
    if (const char* env = std::getenv("JT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    if (flag_value > 0) return flag_value;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

const char* tool_version() { return "0.1.0"; }

}  // namespace jt
