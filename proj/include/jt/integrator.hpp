#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "jt/model.hpp"

namespace jt {

// Raised when step-size control demands a step below min_step. Signals
// near-singular stiffness; callers may retry with a tighter config.
struct StepUnderflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TimeDirection { forward, backward };

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-10;
    double max_step = 0.1;    // radians of t
    double min_step = 1e-12;  // radians of t
    // declared intent; the effective direction always follows sign(t1 - t0)
    TimeDirection direction = TimeDirection::forward;

    void validate() const {
        if (!(min_step > 0.0) || !(min_step <= max_step))
            throw std::invalid_argument("IntegratorConfig: need 0 < min_step <= max_step");
        if (!(rel_tol > 0.0) || !(rel_tol < 1.0) || !(abs_tol > 0.0) || !(abs_tol < 1.0))
            throw std::invalid_argument("IntegratorConfig: tolerances must lie in (0, 1)");
    }
};

// One accepted step of the embedded pair, with the quartic dense-output
// polynomial for each stored component.
struct TrajectorySegment {
    double t_anchor = 0.0;  // step start time (right end for backward runs)
    double h = 0.0;         // signed step actually taken
    // rcont[c][j]: dense coefficients of component c
    std::array<std::array<double, 5>, 3> rcont{};
};

// Lifted solution x(t) on the universal cover, with dense evaluation.
// When produced by integrate_with_variations it also carries the
// parameter sensitivities u_a = dx/da and u_b = dx/db along the way.
class LiftedTrajectory {
public:
    double t_begin = 0.0;  // requested t0
    double t_end = 0.0;    // requested t1 (may be < t_begin)

    // Grid in integration order (monotone; decreasing for backward runs).
    std::vector<double> t_grid;
    std::vector<double> x_values;
    std::vector<double> u_a;  // empty unless variational
    std::vector<double> u_b;

    bool has_variations() const { return !u_a.empty(); }

    double x_start() const { return x_values.front(); }
    double x_end() const { return x_values.back(); }
    double u_a_end() const { return u_a.back(); }
    double u_b_end() const { return u_b.back(); }

    // Dense evaluation; t must lie in the integrated span.
    double x(double t) const { return eval(t, 0); }
    double u_a_at(double t) const { return eval(t, 1); }
    double u_b_at(double t) const { return eval(t, 2); }

    std::vector<TrajectorySegment> segments;

private:
    double eval(double t, int comp) const;
};

// Integrates the Josephson equation from x(t0) = x0 up to t1 (backward in
// time when t1 < t0), tracking the lift. Adaptive embedded 5(4) pair with
// dense output; local error controlled to the configured tolerances.
LiftedTrajectory integrate(const Params& p, double x0, double t0, double t1,
                           const IntegratorConfig& cfg = {});

// Same, co-integrating the variational equations
//   u_a' = (-u_a sin x + 1)/mu,     u_a(t0) = 0
//   u_b' = (-u_b sin x + cos t)/mu, u_b(t0) = 0
// so that u_a(t1) = dx(t1)/da and u_b(t1) = dx(t1)/db.
LiftedTrajectory integrate_with_variations(const Params& p, double x0, double t0,
                                           double t1, const IntegratorConfig& cfg = {});

}  // namespace jt
