#include <doctest.h>

#include <cmath>
#include <random>

#include "jt/integrator.hpp"
#include "oracles.hpp"

using namespace jt;

TEST_SUITE_BEGIN("integrator");

TEST_CASE("config validation") {
    IntegratorConfig bad;
    bad.min_step = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = IntegratorConfig{};
    bad.min_step = 1.0;  // > max_step
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = IntegratorConfig{};
    bad.rel_tol = 2.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_THROWS_AS(integrate({0, 0, 1}, 0.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("rest point of the autonomous field stays put") {
    const auto traj = integrate({0.0, 0.0, 1.0}, pi / 2.0, 0.0, two_pi);
    CHECK(traj.x_end() == doctest::Approx(pi / 2.0).epsilon(1e-12));
}

TEST_CASE("one full revolution per period at a = sqrt(1 + mu^2), b = 0") {
    const double mu = 0.5;
    const double a = std::sqrt(1.0 + mu * mu);
    // quadrature oracle: the revolution time mu * Int dx/(a + cos x) is 2*pi
    const double period = mu * oracle::periodic_trapezoid(
                                   [a](double x) { return 1.0 / (a + std::cos(x)); });
    REQUIRE(period == doctest::Approx(two_pi).epsilon(1e-13));
    const auto traj = integrate({a, 0.0, mu}, 0.0, 0.0, two_pi);
    CHECK(traj.x_end() == doctest::Approx(two_pi).epsilon(1e-9));
}

TEST_CASE("trajectories through (0,0) obey x(-t) = -x(t)") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> uab(0.0, 3.0), umu(0.4, 2.0);
    for (int i = 0; i < 12; ++i) {
        const Params p{uab(rng), uab(rng), umu(rng)};
        const double fwd = integrate(p, 0.0, 0.0, pi).x_end();
        const double bwd = integrate(p, 0.0, 0.0, -pi).x_end();
        CHECK(std::fabs(bwd + fwd) < 10.0 * 1e-10 * std::max(1.0, std::fabs(fwd)));
    }
}

TEST_CASE("dense output matches re-integration") {
    const Params p{1.3, 0.7, 0.8};
    const auto traj = integrate(p, 0.0, 0.0, two_pi);
    for (const double t : {0.3, 1.7, pi, 5.9}) {
        const double direct = integrate(p, 0.0, 0.0, t).x_end();
        CHECK(traj.x(t) == doctest::Approx(direct).epsilon(1e-8));
    }
    CHECK(traj.x(0.0) == 0.0);
    CHECK(traj.x(two_pi) == traj.x_end());
    CHECK_THROWS_AS(traj.x(7.0), std::out_of_range);
}

TEST_CASE("backward integration spans are handled") {
    const Params p{0.7, 0.4, 1.0};
    const auto fwd = integrate(p, 0.0, 0.0, two_pi);
    const auto bwd = integrate(p, fwd.x_end(), two_pi, 0.0);
    CHECK(bwd.t_grid.front() == two_pi);
    CHECK(bwd.t_grid.back() == 0.0);
    CHECK(bwd.x(pi) == doctest::Approx(fwd.x(pi)).epsilon(1e-8));
}

TEST_CASE("variational values against finite differences") {
    const Params p{1.5, 1.0, 0.5};
    const auto traj = integrate_with_variations(p, 0.0, 0.0, pi);

    IntegratorConfig tight;
    tight.rel_tol = tight.abs_tol = 1e-12;
    const double fd_a = oracle::central_diff(
        [&](double a) { return integrate({a, p.b, p.mu}, 0.0, 0.0, pi, tight).x_end(); },
        p.a);
    const double fd_b = oracle::central_diff(
        [&](double b) { return integrate({p.a, b, p.mu}, 0.0, 0.0, pi, tight).x_end(); },
        p.b);
    CHECK(std::fabs(traj.u_a_end() - fd_a) / std::fabs(fd_a) < 1e-4);
    CHECK(std::fabs(traj.u_b_end() - fd_b) / std::fabs(fd_b) < 1e-4);
}

TEST_CASE("u_a grows like t/mu while sin x stays small") {
    const auto traj = integrate_with_variations({2.0, 0.0, 1.0}, 0.0, 0.0, 0.01);
    CHECK(traj.u_a_end() == doctest::Approx(0.01).epsilon(1e-3));
    CHECK(traj.u_b_end() == doctest::Approx(0.01).epsilon(1e-3));  // cos t ~ 1 here
}

TEST_CASE("halving tolerances moves the endpoint by less than the coarse tol") {
    const Params p{1.2, 0.9, 0.7};
    IntegratorConfig coarse;
    coarse.rel_tol = coarse.abs_tol = 1e-8;
    IntegratorConfig fine;
    fine.rel_tol = fine.abs_tol = 5e-9;
    const double xc = integrate(p, 0.0, 0.0, two_pi, coarse).x_end();
    const double xf = integrate(p, 0.0, 0.0, two_pi, fine).x_end();
    CHECK(std::fabs(xc - xf) < 1e-8);
}

TEST_CASE("backward-forward roundtrip") {
    // The roundtrip map has intrinsic condition number exp(max_s Int_s^T
    // sin x / mu); the bound is checked against it. At benign points the
    // estimate is O(1) and the bound reduces to a small multiple of rel_tol.
    std::initializer_list<Params> pts = {
        {0.5, 0.5, 1.0}, {2.0, 0.3, 1.0}, {0.0, 2.0, 1.0}, {1.0, 1.0, 1.0}};
    for (const Params& p : pts) {
        const auto fwd = integrate(p, 0.0, 0.0, two_pi);
        const auto bwd = integrate(p, fwd.x_end(), two_pi, 0.0);
        // amplification of backward-leg errors: exp of the largest tail
        // integral of sin x / mu along the trajectory
        const int n = 512;
        double tail = 0.0, max_tail = 0.0;
        for (int i = n - 1; i >= 0; --i) {
            const double t = two_pi * (i + 0.5) / n;
            tail += std::sin(fwd.x(t)) / p.mu * (two_pi / n);
            max_tail = std::max(max_tail, tail);
        }
        const double kappa = std::exp(max_tail);
        const double bound = 10.0 * 1e-10 * std::max(1.0, kappa);
        CHECK(std::fabs(bwd.x_end() - 0.0) < bound);
    }
}

TEST_CASE("step underflow is reported") {
    IntegratorConfig cramped;
    cramped.rel_tol = cramped.abs_tol = 1e-12;
    cramped.min_step = 0.01;
    cramped.max_step = 0.05;
    CHECK_THROWS_AS(integrate({1.0, 1.0, 0.01}, 0.0, 0.0, two_pi, cramped), StepUnderflow);
}

TEST_SUITE_END();
