#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "jt/sweep.hpp"

using namespace jt;

TEST_SUITE_BEGIN("sweep");

TEST_CASE("job validation") {
    SweepJob job;
    job.n_a = 1;
    CHECK_THROWS_AS(job.validate(), std::invalid_argument);
    job = SweepJob{};
    job.a_max = job.a_min;
    CHECK_THROWS_AS(job.validate(), std::invalid_argument);
    job = SweepJob{};
    job.mu = 0.0;
    CHECK_THROWS_AS(job.validate(), std::invalid_argument);
}

TEST_CASE("b = 0 column of a 3x3 sweep matches the closed form") {
    SweepJob job;
    job.a_min = 1.5;
    job.a_max = 3.0;
    job.b_min = 0.0;
    job.b_max = 1.0;
    job.n_a = 3;
    job.n_b = 3;
    job.mu = 1.0;
    const auto cells = run_sweep(job, 1);
    REQUIRE(cells.size() == 9);
    for (const auto& c : cells) {
        if (c.b != 0.0) continue;
        CHECK(std::fabs(c.rho - std::sqrt(c.a * c.a - 1.0)) < 1e-6);
    }
    // row-major: a outer, b inner
    CHECK(cells[0].a == 1.5);
    CHECK(cells[0].b == 0.0);
    CHECK(cells[1].a == 1.5);
    CHECK(cells[1].b == 0.5);
    CHECK(cells[3].a == 2.25);
}

TEST_CASE("hyperbolic cells carry integer rotation numbers") {
    SweepJob job;
    job.a_min = 0.0;
    job.a_max = 3.0;
    job.b_min = 0.0;
    job.b_max = 3.0;
    job.n_a = 6;
    job.n_b = 6;
    job.mu = 1.0;
    for (const auto& c : run_sweep(job, 2)) {
        if (c.map_class == MapClass::Hyperbolic || c.map_class == MapClass::Parabolic)
            CHECK(c.rho == std::round(c.rho));
        if (c.rho == 0.0) CHECK_FALSE(std::signbit(c.rho));  // locked cells print 0, not -0
    }
}

TEST_CASE("worker count does not change a single byte") {
    SweepJob job;
    job.a_min = 0.3;
    job.a_max = 2.7;
    job.b_min = 0.1;
    job.b_max = 2.3;
    job.n_a = 5;
    job.n_b = 7;
    job.mu = 1.0;
    const std::string csv1 = sweep_csv(run_sweep(job, 1));
    const std::string csv4 = sweep_csv(run_sweep(job, 4));
    const std::string csv9 = sweep_csv(run_sweep(job, 9));
    CHECK(csv1 == csv4);
    CHECK(csv1 == csv9);
    CHECK(csv1.substr(0, csv1.find('\n')) == "a,b,rho,class,fit_residual");
}

TEST_CASE("17 significant digits in the CSV") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(two_pi) == "6.2831853071795862");
}

TEST_CASE("thread resolution order: env, flag, hardware") {
    unsetenv("JT_THREADS");
    CHECK(resolve_threads(3) == 3);
    setenv("JT_THREADS", "5", 1);
    CHECK(resolve_threads(3) == 5);
    unsetenv("JT_THREADS");
    CHECK(resolve_threads(0) >= 1);
}

TEST_SUITE_END();
