#pragma once

#include <vector>

#include "jt/tongues.hpp"

namespace jt {

struct BesselEval {
    int k = 0;
    double z = 0.0;
    double value = 0.0;
    double quadrature_error = 0.0;
};

// J_k(z) = (1/2pi) Integral_0^{2pi} cos(k t - z sin t) dt, evaluated by
// trapezoid quadrature on the periodic integrand with node doubling until
// successive refinements agree to 1e-12.
BesselEval bessel_j(int k, double z);

// Large-b boundary asymptote: k*mu - J_k(-b/mu) for side 0,
// k*mu + J_k(-b/mu) for side pi.
double boundary_asymptote(int k, double mu, double b, Side side);

struct ScanPoint {
    double b = 0.0;
    double residual_zero = 0.0;
    double residual_pi = 0.0;
};

struct ResidualScan {
    std::vector<ScanPoint> points;
    double fitted_exponent = 0.0;  // slope of log |residual| vs log b, pooled sides
};

// |a_side,k(b) - asymptote| sampled at n_points values of b across
// [b_lo, b_hi], reading the traced curves by linear interpolation, plus the
// least-squares decay exponent.
ResidualScan residual_scan(const BoundaryCurve& side_zero, const BoundaryCurve& side_pi,
                           double b_lo, double b_hi, int n_points);

// Default scan window honoring the Bessel-regime lower bound b >= c/mu with
// the tunable c = 5: [max(20, c/mu), 3 max(20, c/mu)].
std::pair<double, double> default_scan_range(double mu, double c = 5.0);

}  // namespace jt
