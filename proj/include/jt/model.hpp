#pragma once

#include <cmath>
#include <stdexcept>

namespace jt {

// Parameters of the Josephson equation  dx/dt = (cos x + a + b cos t)/mu.
// a is the mean bias, b the forcing amplitude, mu the frequency ratio.
struct Params {
    double a = 0.0;
    double b = 0.0;
    double mu = 1.0;

    void validate() const {
        if (!(mu > 0.0))
            throw std::invalid_argument("Params: mu must be positive");
        if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(mu))
            throw std::invalid_argument("Params: a, b, mu must be finite");
    }
};

// Phase point on the universal cover: x is the lifted phase (unbounded),
// t is torus time in radians.
struct State {
    double x = 0.0;
    double t = 0.0;
};

constexpr double two_pi = 6.283185307179586476925286766559;
constexpr double pi = 3.1415926535897932384626433832795;

// Right-hand side in slow time t (period 2*pi for every mu).
inline double vector_field(const State& s, const Params& p) {
    return (std::cos(s.x) + p.a + p.b * std::cos(s.t)) / p.mu;
}

// Central symmetry (t, x) -> (-t, -x); an involution that preserves
// phase curves of the equation.
inline State reflect(const State& s) {
    return State{-s.x, -s.t};
}

}  // namespace jt
