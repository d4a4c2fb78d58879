#include <doctest.h>

#include <cmath>
#include <random>

#include "jt/poincare.hpp"
#include "oracles.hpp"

using namespace jt;

TEST_SUITE_BEGIN("poincare");

TEST_CASE("lift basics") {
    CHECK(poincare_lift({0.0, 0.0, 1.0}, pi / 2.0) ==
          doctest::Approx(pi / 2.0).epsilon(1e-12));

    const double mu = 0.5;
    const double a = std::sqrt(1.0 + mu * mu);
    REQUIRE(oracle::rho_b0(a, mu) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(poincare_lift({a, 0.0, mu}, 0.0) == doctest::Approx(two_pi).epsilon(1e-9));
}

TEST_CASE("lift preserves order") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> uab(0.0, 3.0), ux(0.0, two_pi);
    for (int i = 0; i < 10; ++i) {
        const Params p{uab(rng), uab(rng), 1.0};
        double x0 = ux(rng), x1 = ux(rng);
        if (x1 < x0) std::swap(x0, x1);
        if (x1 - x0 < 1e-3) x1 += 1e-3;
        const double l0 = poincare_lift(p, x0);
        const double l1 = poincare_lift(p, x1);
        CHECK(l0 < l1);
        CHECK(l1 < l0 + two_pi);
    }
}

TEST_CASE("autonomous map with fixed points is hyperbolic") {
    const MobiusMap m = fit_mobius({0.0, 0.0, 1.0});
    CHECK(std::fabs(m.trace()) > 2.0);
    CHECK(classify(m) == MapClass::Hyperbolic);
    CHECK(m.det() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rigid full turn at b = 0 reads as identity with winding 1") {
    const double mu = 0.5;
    const Params p{std::sqrt(1.0 + mu * mu), 0.0, mu};
    const MobiusMap m = fit_mobius(p);
    CHECK(m.winding == 1);
    CHECK(classify(m) == MapClass::Identity);
    const RotationResult r = rotation_from_map(m);
    CHECK(r.rho == 1.0);
}

TEST_CASE("fit residual stays below 1e-8 on a 10x10 grid") {
    double worst = 0.0;
    for (int ia = 0; ia < 10; ++ia)
        for (int ib = 0; ib < 10; ++ib) {
            const Params p{3.0 * ia / 9.0, 3.0 * ib / 9.0, 1.0};
            worst = std::max(worst, fit_mobius(p).fit_residual);
        }
    CHECK(worst < 1e-8);
}

TEST_CASE("classification by trace") {
    MobiusMap m;  // identity
    CHECK(classify(m) == MapClass::Identity);

    m.m = {{{2.0, 1.0}, {1.0, 1.0}}};  // trace 3
    CHECK(classify(m) == MapClass::Hyperbolic);

    const double th = 0.3;  // trace 2 cos(0.3) ~ 1.955
    m.m = {{{std::cos(th), -std::sin(th)}, {std::sin(th), std::cos(th)}}};
    CHECK(classify(m) == MapClass::Elliptic);

    m.m = {{{1.0, 1e-3}, {0.0, 1.0}}};  // parabolic shear
    CHECK(classify(m) == MapClass::Parabolic);
}

TEST_CASE("b = 0 closed form for the rotation number") {
    for (const double a : {1.1, 1.5, 2.0, 3.0})
        for (const double mu : {0.5, 1.0}) {
            const double expected = std::sqrt(a * a - 1.0) / mu;
            REQUIRE(oracle::rho_b0(a, mu) == doctest::Approx(expected).epsilon(1e-12));
            const RotationResult r = rotation_number({a, 0.0, mu});
            CHECK(std::fabs(r.rho - expected) < 1e-6);
        }
    for (const double a : {0.0, 0.5, 1.0}) {
        const RotationResult r = rotation_number({a, 0.0, 1.0});
        CHECK(r.rho == 0.0);
    }
}

TEST_CASE("phase lock at (0.5, 0.5, 1)") {
    const RotationResult r = rotation_number({0.5, 0.5, 1.0});
    CHECK(r.rho == 0.0);
    CHECK(r.map_class == MapClass::Hyperbolic);

    // direct iteration oracle: a thousand re-integrated periods
    double x = 0.0;
    for (int i = 0; i < 1000; ++i) x = poincare_lift({0.5, 0.5, 1.0}, x);
    CHECK(std::fabs(x / (two_pi * 1000.0)) < 1.5e-3);
}

TEST_CASE("quantization on a random sample") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(0.0, 4.0);
    int elliptic_fraction_seen = 0;
    for (int i = 0; i < 25; ++i) {
        const Params p{u(rng), u(rng), 1.0};
        const RotationResult r = rotation_number(p);
        if (r.map_class == MapClass::Hyperbolic || r.map_class == MapClass::Parabolic)
            CHECK(std::fabs(r.rho - std::round(r.rho)) < 1e-9);
        else if (r.map_class == MapClass::Elliptic &&
                 std::fabs(r.rho - std::round(r.rho)) > 1e-3)
            ++elliptic_fraction_seen;
    }
    // off the tongues the rotation number moves through non-integer values
    CHECK(elliptic_fraction_seen > 0);
}

TEST_CASE("rho varies continuously through non-integer values across a tongue edge") {
    // walk a in small steps at b = 0.5: inside tongue 1 rho sticks to 1,
    // outside it drifts; adjacent elliptic samples stay close
    double prev = -1.0;
    bool sticky = false, drifting = false;
    for (double a = 1.40; a <= 1.70001; a += 0.01) {
        const RotationResult r = rotation_number({a, 0.5, 1.0});
        if (prev >= 0.0) {
            CHECK(r.rho >= prev - 1e-9);          // monotone in a
            CHECK(std::fabs(r.rho - prev) < 0.1);  // no jumps
            if (r.rho == prev) sticky = true;
            if (r.rho != prev) drifting = true;
        }
        prev = r.rho;
    }
    CHECK(sticky);
    CHECK(drifting);
}

TEST_CASE("mobius and direct methods agree") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int i = 0; i < 8; ++i) {
        const Params p{u(rng), u(rng), 1.0};
        const RotationResult rm = rotation_number(p, RotationMethod::mobius);
        const RotationResult rd = rotation_number(p, RotationMethod::direct);
        CHECK(std::fabs(rm.rho - rd.rho) <= rd.error_bound + 1e-12);
    }
}

TEST_CASE("rotation number survives a change of fit base points") {
    FitOptions alt;
    alt.base_points = {pi / 4.0, pi, 7.0 * pi / 4.0};
    alt.check_point = pi / 2.0;
    for (const Params& p : {Params{2.0, 0.0, 1.0}, Params{1.7, 1.1, 1.0},
                            Params{2.6, 2.9, 1.0}}) {
        const double r0 = rotation_number(p).rho;
        const double r1 = rotation_number(p, RotationMethod::mobius, alt).rho;
        CHECK(r0 == doctest::Approx(r1).epsilon(1e-9));
    }
}

TEST_CASE("strongly contracting maps degrade gracefully") {
    // at mu = 0.02 the three base-point images collapse onto the attractor
    const Params p{0.5, 0.5, 0.02};
    CHECK_THROWS_AS(fit_mobius(p), DegenerateFit);
    const RotationResult r = rotation_number(p);
    CHECK(r.rho == 0.0);
    CHECK(r.rho == std::round(r.rho));
}

TEST_SUITE_END();
