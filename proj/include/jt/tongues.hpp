#pragma once

#include <string>
#include <vector>

#include "jt/integrator.hpp"
#include "jt/model.hpp"

namespace jt {

enum class Side { zero, pi_ };

inline double side_base(Side s) { return s == Side::zero ? 0.0 : pi; }
inline const char* to_string(Side s) { return s == Side::zero ? "0" : "pi"; }

enum class TraceDirection { forward, backward, automatic };

struct TraceConfig {
    double h = 0.01;              // b-step
    double newton_tol = 1e-10;    // accepted |defect|
    int max_newton_iters = 8;
    double bisection_bracket = 0.0;  // initial half-width in a; 0 = 5h*|slope|
    TraceDirection time_direction = TraceDirection::automatic;
    IntegratorConfig integ{};

    void validate() const {
        if (!(h > 0.0)) throw std::invalid_argument("TraceConfig: h must be positive");
        if (!(newton_tol > 0.0)) throw std::invalid_argument("TraceConfig: newton_tol > 0");
        if (max_newton_iters < 1) throw std::invalid_argument("TraceConfig: max_newton_iters >= 1");
    }
};

enum class SampleMethod { newton, bisection };

struct BoundarySample {
    double b = 0.0;
    double a = 0.0;
    double residual = 0.0;  // |defect| of the formulation used at acceptance
    int steps_used = 0;     // Newton iterations, or defect evaluations in bisection
    SampleMethod method = SampleMethod::newton;
    bool backward = false;  // solved through the inverted-time formulation
};

// Sampled graph a(b) of one boundary curve of tongue k. b is strictly
// increasing across samples; complete = false flags a lost curve
// (BracketFailure or a residual floor), with the partial data retained.
struct BoundaryCurve {
    int k = 0;
    Side side = Side::zero;
    double mu = 1.0;
    std::vector<BoundarySample> samples;
    bool complete = true;
    std::string failure;

    double a_at_back() const { return samples.back().a; }
};

// Intersection of the two boundary curves of tongue k.
struct Bridge {
    int k = 0;
    double b_star = 0.0;
    double a_star = 0.0;
    double defect_zero = 0.0;  // boundary residuals at the bridge
    double defect_pi = 0.0;
};

// Lifted phase at t = pi of the trajectory through (x0, 0); the tracer's
// objective Q. x0 must be 0 or pi.
double half_period_value(const Params& p, double x0, const IntegratorConfig& cfg = {});

// Half-period defect: x~_0(pi) - pi*k for side zero, x~_pi(pi) - (pi + pi*k)
// for side pi; zero exactly on the boundary curve.
double boundary_condition(const Params& p, int k, Side side,
                          const IntegratorConfig& cfg = {});

// b = 0 starting point sqrt(1 + k^2 mu^2) of tongue k.
double initial_a(int k, double mu);

// Root-finds boundary_condition at b = 0 around the closed-form candidate
// (the candidate with k/2 in place of k is probed as well) and returns the
// validated start ordinate. For k = 0 only side pi admits a root at b = 0.
double validated_initial_a(int k, Side side, double mu, const TraceConfig& cfg = {});

// Newton/bisection solve of the boundary equation in a at fixed b.
struct BoundarySolve {
    double a = 0.0;
    double residual = 0.0;
    int steps_used = 0;
    SampleMethod method = SampleMethod::newton;
    bool backward = false;
    bool ok = false;
    std::string failure;
};

BoundarySolve solve_boundary_at(int k, Side side, double mu, double b, double a_guess,
                                const TraceConfig& cfg, double slope_hint = 0.0);

// Continuation in b per the half-period Newton scheme, stepping b by cfg.h
// from the validated start, with bisection fallback and the region-B
// backward-time formulation under automatic direction.
BoundaryCurve trace_boundary(int k, Side side, double mu, double b_max,
                             const TraceConfig& cfg = {});

// Locates intersections of the side-0 and side-pi curves of tongue k for
// b <= b_max, refining each crossing by bisection in b.
std::vector<Bridge> find_bridges(int k, double mu, double b_max,
                                 const TraceConfig& cfg = {});

// a-distance at fixed b between the nearest boundaries of tongues k and k+1.
double tongue_gap(int k, double mu, double b, const TraceConfig& cfg = {});

}  // namespace jt
