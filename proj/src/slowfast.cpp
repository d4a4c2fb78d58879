#include "jt/slowfast.hpp"

#include <algorithm>
#include <cmath>

namespace jt {

namespace {

double wrap_2pi(double v) {
    double r = std::fmod(v, two_pi);
    if (r < 0.0) r += two_pi;
    return r;
}

// Symmetries (a, x) -> (-a, x + pi) composed with (b, t) -> (-b, t + pi)
// reduce everything to a, b >= 0; the shifts are applied to outputs.
struct Reduction {
    double a, b, x_shift, t_shift;
};

Reduction reduce(double a, double b) {
    Reduction r{a, b, 0.0, 0.0};
    if (r.a < 0.0) {
        r.a = -r.a;
        r.b = -r.b;
        r.x_shift = pi;
    }
    if (r.b < 0.0) {
        r.b = -r.b;
        r.t_shift = pi;
    }
    return r;
}

}  // namespace

const char* to_string(Region r) {
    switch (r) {
        case Region::A: return "A";
        case Region::B: return "B";
        case Region::C: return "C";
        case Region::CPrime: return "C'";
        case Region::Boundary: return "Boundary";
    }
    return "?";
}

Region classify_region(double a, double b, double tol) {
    const Reduction q = reduce(a, b);
    a = q.a;
    b = q.b;
    if (std::fabs(b - (a - 1.0)) < tol || std::fabs(b - (a + 1.0)) < tol ||
        std::fabs(a + b - 1.0) < tol)
        return Region::Boundary;
    if (b < a - 1.0) return Region::A;
    if (b > a + 1.0) return Region::C;
    if (a + b < 1.0) return Region::CPrime;
    return Region::B;
}

std::vector<CurvePoint> fold_points(double a, double b) {
    const Reduction q = reduce(a, b);
    std::vector<CurvePoint> out;
    // x = pi where a + b cos t = 1, x = 0 where a + b cos t = -1
    const struct { double rhs, x; } cases[2] = {{1.0, pi}, {-1.0, 0.0}};
    for (const auto& c : cases) {
        if (q.b == 0.0) continue;
        const double ct = (c.rhs - q.a) / q.b;
        if (std::fabs(ct) > 1.0) continue;
        const double t0 = std::acos(ct);
        out.push_back({wrap_2pi(t0 + q.t_shift), wrap_2pi(c.x + q.x_shift)});
        if (t0 > 0.0 && t0 < pi)
            out.push_back({wrap_2pi(two_pi - t0 + q.t_shift), wrap_2pi(c.x + q.x_shift)});
    }
    std::sort(out.begin(), out.end(),
              [](const CurvePoint& p, const CurvePoint& r) { return p.t < r.t; });
    return out;
}

namespace {

// One closed loop over the t-band [t1, t2] on which |a + b cos t| <= 1:
// the upper branch x = arccos(-(a + b cos t)) out, the lower branch back.
// The loop crosses x = 0 (winding +-1 in x) exactly when its two band
// endpoints sit on different fold lines, which the caller knows.
SlowCurveComponent band_loop(double a, double b, double t1, double t2, int n,
                             const Reduction& q, int winding_x) {
    SlowCurveComponent comp;
    const int half = std::max(n / 2, 8);
    auto branch_x = [&](double t) {
        const double arg = std::clamp(-(a + b * std::cos(t)), -1.0, 1.0);
        return std::acos(arg);
    };

    comp.points.reserve(2 * half);
    for (int i = 0; i < half; ++i) {
        const double t = t1 + (t2 - t1) * i / (half - 1.0);
        comp.points.push_back({wrap_2pi(t + q.t_shift), wrap_2pi(branch_x(t) + q.x_shift)});
    }
    for (int i = 1; i + 1 < half; ++i) {
        const double t = t2 + (t1 - t2) * i / (half - 1.0);
        comp.points.push_back(
            {wrap_2pi(t + q.t_shift), wrap_2pi(two_pi - branch_x(t) + q.x_shift)});
    }
    comp.winding_x = winding_x;
    comp.winding_t = 0;
    comp.contractible = (winding_x == 0);
    return comp;
}

// Branch winding once around in t (wedge a + b < 1): x stays on one side.
SlowCurveComponent full_circle_branch(double a, double b, int sign, int n,
                                      const Reduction& q) {
    SlowCurveComponent comp;
    comp.points.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = two_pi * i / n;
        double arg = std::clamp(-(a + b * std::cos(t)), -1.0, 1.0);
        const double x = sign * std::acos(arg);
        comp.points.push_back({wrap_2pi(t + q.t_shift), wrap_2pi(x + q.x_shift)});
    }
    comp.winding_t = 1;
    comp.winding_x = 0;
    comp.contractible = false;
    return comp;
}

}  // namespace

SlowCurve slow_curve(double a, double b, int n_samples) {
    SlowCurve out;
    out.region = classify_region(a, b);
    out.folds = fold_points(a, b);
    const Reduction q = reduce(a, b);
    a = q.a;
    b = q.b;
    const int n = std::max(n_samples, 16);

    const double smin = a - b, smax = a + b;  // range of a + b cos t
    if (smin > 1.0) return out;               // region A: no slow curve

    if (smax <= 1.0) {
        // |a + b cos t| <= 1 for all t: two branches over the full circle
        out.components.push_back(full_circle_branch(a, b, +1, n, q));
        out.components.push_back(full_circle_branch(a, b, -1, n, q));
        return out;
    }

    // s(t) = a + b cos t decreases on [0, pi]; the band where s <= 1 starts at
    const double t_hi = std::acos((1.0 - a) / b);
    if (smin >= -1.0) {
        // single band [t_hi, 2*pi - t_hi]: one oval through x = pi
        out.components.push_back(band_loop(a, b, t_hi, two_pi - t_hi, n, q, 0));
    } else {
        // s crosses -1 as well: two bands, each a loop winding in x
        const double t_lo = std::acos((-1.0 - a) / b);
        out.components.push_back(band_loop(a, b, t_hi, t_lo, n, q, -1));
        out.components.push_back(band_loop(a, b, two_pi - t_lo, two_pi - t_hi, n, q, +1));
    }
    return out;
}

}  // namespace jt
