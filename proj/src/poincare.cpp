#include "jt/poincare.hpp"

#include <cmath>
#include <complex>

namespace jt {

namespace {

using Mat2 = std::array<std::array<double, 2>, 2>;
using Vec2 = std::array<double, 2>;

// Homogeneous coordinates of the circle point x under u = tan(x/2):
// (sin(x/2) : cos(x/2)); x = pi maps to the projective point at infinity.
Vec2 homog(double x) { return {std::sin(0.5 * x), std::cos(0.5 * x)}; }

Vec2 apply(const Mat2& m, const Vec2& v) {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

// Matrix sending the three projective points to (1:0), (0:1), (1:1).
// Columns of B are p1 and p2 scaled so that B^{-1} p3 = (1,1).
Mat2 to_standard_frame(const Vec2& p1, const Vec2& p2, const Vec2& p3) {
    const double det = p1[0] * p2[1] - p1[1] * p2[0];
    if (det == 0.0) throw DegenerateFit("fit_mobius: base points collapse");
    // solve [p1 p2] (alpha, beta)^T = p3
    const double alpha = (p3[0] * p2[1] - p3[1] * p2[0]) / det;
    const double beta = (p1[0] * p3[1] - p1[1] * p3[0]) / det;
    const Mat2 b{{{alpha * p1[0], beta * p2[0]}, {alpha * p1[1], beta * p2[1]}}};
    const double bd = b[0][0] * b[1][1] - b[0][1] * b[1][0];
    if (bd == 0.0) throw DegenerateFit("fit_mobius: degenerate point triple");
    return {{{b[1][1] / bd, -b[0][1] / bd}, {-b[1][0] / bd, b[0][0] / bd}}};
}

Mat2 multiply(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Mat2 inverse_unimodularish(const Mat2& m) {
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return {{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

double wrap_2pi(double x) {
    double r = std::fmod(x, two_pi);
    if (r < 0.0) r += two_pi;
    return r;
}

// signed circle distance in (-pi, pi]
double circle_dist(double x, double y) {
    double d = std::fmod(x - y, two_pi);
    if (d <= -pi) d += two_pi;
    if (d > pi) d -= two_pi;
    return d;
}

}  // namespace

double MobiusMap::circle_image(double x) const {
    const Vec2 v = apply(m, homog(x));
    return wrap_2pi(2.0 * std::atan2(v[0], v[1]));
}

double MobiusMap::lift(double x) const {
    const double turns = std::floor(x / two_pi);
    const double xb = x - two_pi * turns;
    if (xb == 0.0) return lift0 + two_pi * turns;
    // representative of the image congruence class in [lift0, lift0 + 2*pi)
    double y = circle_image(xb);
    y += two_pi * std::floor((lift0 - y) / two_pi);
    if (y < lift0) y += two_pi;
    if (y >= lift0 + two_pi) y -= two_pi;
    return y + two_pi * turns;
}

const char* to_string(MapClass c) {
    switch (c) {
        case MapClass::Elliptic: return "Elliptic";
        case MapClass::Parabolic: return "Parabolic";
        case MapClass::Hyperbolic: return "Hyperbolic";
        case MapClass::Identity: return "Identity";
    }
    return "?";
}

double poincare_lift(const Params& p, double x0, const IntegratorConfig& cfg) {
    return integrate(p, x0, 0.0, two_pi, cfg).x_end();
}

MobiusMap fit_mobius(const Params& p, const FitOptions& opts) {
    std::array<double, 3> img{};
    for (int i = 0; i < 3; ++i)
        img[i] = poincare_lift(p, opts.base_points[i], opts.integ);

    // coinciding images cannot pin down a fractional-linear map
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::fabs(circle_dist(img[i], img[j])) < opts.degenerate_tol)
                throw DegenerateFit("fit_mobius: images of base points coincide");

    const Mat2 src = to_standard_frame(homog(opts.base_points[0]), homog(opts.base_points[1]),
                                       homog(opts.base_points[2]));
    const Mat2 dst = to_standard_frame(homog(img[0]), homog(img[1]), homog(img[2]));
    Mat2 t = multiply(inverse_unimodularish(dst), src);

    double det = t[0][0] * t[1][1] - t[0][1] * t[1][0];
    if (!(det > 0.0))
        throw DegenerateFit("fit_mobius: orientation-reversing fit");
    const double s = std::sqrt(det);
    for (auto& row : t)
        for (auto& v : row) v /= s;

    MobiusMap map;
    map.m = t;
    map.lift0 = img[0];
    // snap: an image within integration noise of a 2*pi multiple belongs to it
    map.winding = static_cast<int>(std::floor((img[0] + 1e-9) / two_pi));

    const double lift_check = poincare_lift(p, opts.check_point, opts.integ);
    map.fit_residual = std::fabs(circle_dist(map.circle_image(opts.check_point), lift_check));
    return map;
}

MapClass classify(const MobiusMap& m, double parabolic_tol, double identity_tol) {
    double dev_plus = 0.0, dev_minus = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const double id = (i == j) ? 1.0 : 0.0;
            dev_plus = std::max(dev_plus, std::fabs(m.m[i][j] - id));
            dev_minus = std::max(dev_minus, std::fabs(m.m[i][j] + id));
        }
    if (std::min(dev_plus, dev_minus) < identity_tol) return MapClass::Identity;

    const double tr = std::fabs(m.trace());
    if (std::fabs(tr - 2.0) < parabolic_tol) return MapClass::Parabolic;
    return tr < 2.0 ? MapClass::Elliptic : MapClass::Hyperbolic;
}

namespace {

// rho for a map with a circle fixed point: evaluate the lift there.
double integer_rho(const MobiusMap& m, double x_fixed) {
    return std::round((m.lift(x_fixed) - x_fixed) / two_pi);
}

double hyperbolic_or_parabolic_rho(const MobiusMap& m) {
    const double tr = m.trace();
    double disc = tr * tr - 4.0;
    if (disc < 0.0) disc = 0.0;  // parabolic within tolerance
    const double lam = 0.5 * (tr + (tr >= 0.0 ? 1.0 : -1.0) * std::sqrt(disc));
    // eigenvector of the better-conditioned row
    const Vec2 v1{m.m[0][1], lam - m.m[0][0]};
    const Vec2 v2{lam - m.m[1][1], m.m[1][0]};
    const double n1 = std::fabs(v1[0]) + std::fabs(v1[1]);
    const double n2 = std::fabs(v2[0]) + std::fabs(v2[1]);
    const Vec2 v = (n1 >= n2) ? v1 : v2;
    const double x_fixed = wrap_2pi(2.0 * std::atan2(v[0], v[1]));
    return integer_rho(m, x_fixed);
}

// Elliptic fraction: conjugate to a rigid rotation. The matrix fixes
// z0 = ((a - d) + i sqrt(4 - tr^2))/(2c) in the upper half-plane and acts
// there as rotation; the boundary circle map in x is conjugate to the
// rotation x -> x - 2 arg(c z0 + d), whose rotation number is exact.
double elliptic_fraction(const MobiusMap& m) {
    const double tr = m.trace();
    const double c = m.m[1][0], d = m.m[1][1], a = m.m[0][0];
    const double im = std::sqrt(std::max(4.0 - tr * tr, 0.0));
    // Im z0 > 0 regardless of the sign of c
    const std::complex<double> z0((a - d) / (2.0 * c), im / (2.0 * std::fabs(c)));
    const std::complex<double> w = c * z0 + d;
    double theta = std::fmod(-2.0 * std::arg(w), two_pi);
    if (theta < 0.0) theta += two_pi;
    return theta / two_pi;
}

double iterate_lift(const MobiusMap& m, long n) {
    double x = 0.0;
    for (long i = 0; i < n; ++i) x = m.lift(x);
    return x / (two_pi * static_cast<double>(n));
}

}  // namespace

RotationResult rotation_from_map(const MobiusMap& m, RotationMethod method,
                                 long direct_iterations) {
    RotationResult r;
    r.map_class = classify(m);
    r.method = method;

    if (method == RotationMethod::direct) {
        const long n = std::max<long>(direct_iterations, 1);
        r.rho = iterate_lift(m, n);
        r.error_bound = 1.0 / static_cast<double>(n);
        return r;
    }

    switch (r.map_class) {
        case MapClass::Identity:
            r.rho = std::round(m.lift0 / two_pi);
            break;
        case MapClass::Hyperbolic:
        case MapClass::Parabolic:
            r.rho = hyperbolic_or_parabolic_rho(m);
            break;
        case MapClass::Elliptic: {
            const double frac = elliptic_fraction(m);
            const double est = iterate_lift(m, 64);  // |est - rho| <= 1/64
            r.rho = std::round(est - frac) + frac;
            break;
        }
    }
    r.rho += 0.0;  // round() can hand back -0
    r.error_bound = std::max(10.0 * m.fit_residual, 1e-14);
    return r;
}

RotationResult rotation_number(const Params& p, RotationMethod method,
                               const FitOptions& opts) {
    try {
        return rotation_from_map(fit_mobius(p, opts), method);
    } catch (const DegenerateFit&) {
        // images collapse onto one point x*; the lift value there still
        // determines the (integer) rotation number
        const double img0 = poincare_lift(p, 0.0, opts.integ);
        const double xs = wrap_2pi(img0);
        const double lift_xs = poincare_lift(p, xs, opts.integ);
        RotationResult r;
        r.method = method;
        r.map_class = MapClass::Identity;
        r.rho = std::round((lift_xs - xs) / two_pi) + 0.0;
        r.error_bound = 1e-9;
        return r;
    }
}

}  // namespace jt
