#pragma once

// Test-side oracles, independent of the integration/fit code they check:
// quadrature of the b = 0 closed form and finite-difference derivatives.

#include <cmath>
#include <functional>

#include "jt/model.hpp"

namespace oracle {

// trapezoid rule on [0, 2*pi] for a periodic integrand (n equal nodes)
inline double periodic_trapezoid(const std::function<double(double)>& f, int n = 4096) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += f(jt::two_pi * i / n);
    return s * jt::two_pi / n;
}

// trapezoid on [0, pi]; the b = 0 integrand has vanishing odd derivatives at
// both ends, so this converges like the periodic rule
inline double half_interval_trapezoid(const std::function<double(double)>& f, int n = 4096) {
    double s = 0.5 * (f(0.0) + f(jt::pi));
    for (int i = 1; i < n; ++i) s += f(jt::pi * i / n);
    return s * jt::pi / n;
}

// rotation number at b = 0, a > 1, by quadrature of dx/(a + cos x):
// one x-revolution takes t = mu * Integral, so rho = 2*pi / (mu * Integral)
inline double rho_b0(double a, double mu) {
    const double period =
        periodic_trapezoid([a](double x) { return 1.0 / (a + std::cos(x)); });
    return jt::two_pi / (mu * period);
}

// slow time needed for k half-revolutions of x from x0 in {0, pi} at b = 0
inline double half_revolution_time(double a, double mu, int k) {
    const double half =
        half_interval_trapezoid([a](double x) { return 1.0 / (a + std::cos(x)); });
    return mu * k * half;
}

// central finite difference
inline double central_diff(const std::function<double(double)>& f, double at,
                           double delta = 1e-6) {
    return (f(at + delta) - f(at - delta)) / (2.0 * delta);
}

}  // namespace oracle
