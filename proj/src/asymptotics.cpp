#include "jt/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jt {

namespace {

double trapezoid_mean(int k, double z, int n) {
    // mean of cos(k t - z sin t) over one period; trapezoid = midpoint-free
    // equal-weight sum for a periodic integrand
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = two_pi * i / n;
        s += std::cos(k * t - z * std::sin(t));
    }
    return s / n;
}

double interp_curve(const BoundaryCurve& c, double b) {
    const auto& s = c.samples;
    if (s.empty()) throw std::invalid_argument("residual_scan: empty boundary curve");
    if (b <= s.front().b) return s.front().a;
    if (b >= s.back().b) return s.back().a;
    const auto it = std::lower_bound(
        s.begin(), s.end(), b,
        [](const BoundarySample& smp, double v) { return smp.b < v; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double w = (b - lo.b) / (hi.b - lo.b);
    return lo.a + w * (hi.a - lo.a);
}

}  // namespace

BesselEval bessel_j(int k, double z) {
    BesselEval out;
    out.k = k;
    out.z = z;
    // the integrand oscillates on scale max(|k|, |z|); start resolved
    int n = 16;
    const double scale = std::max({std::fabs(z), std::fabs(static_cast<double>(k)), 1.0});
    while (n < 8.0 * scale) n *= 2;

    double prev = trapezoid_mean(k, z, n);
    for (int iter = 0; iter < 24; ++iter) {
        n *= 2;
        const double cur = trapezoid_mean(k, z, n);
        out.quadrature_error = std::fabs(cur - prev);
        prev = cur;
        if (out.quadrature_error <= 1e-12) break;
    }
    out.value = prev;
    return out;
}

double boundary_asymptote(int k, double mu, double b, Side side) {
    if (!(b > 0.0) || !(mu > 0.0))
        throw std::invalid_argument("boundary_asymptote: need b > 0 and mu > 0");
    const double j = bessel_j(k, -b / mu).value;
    return side == Side::zero ? k * mu - j : k * mu + j;
}

ResidualScan residual_scan(const BoundaryCurve& side_zero, const BoundaryCurve& side_pi,
                           double b_lo, double b_hi, int n_points) {
    if (side_zero.k != side_pi.k || side_zero.mu != side_pi.mu)
        throw std::invalid_argument("residual_scan: mismatched boundary curves");
    if (n_points < 2 || !(b_hi > b_lo))
        throw std::invalid_argument("residual_scan: bad scan window");

    const int k = side_zero.k;
    const double mu = side_zero.mu;
    ResidualScan scan;
    scan.points.reserve(n_points);

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int n_fit = 0;
    for (int i = 0; i < n_points; ++i) {
        const double b = b_lo + (b_hi - b_lo) * i / (n_points - 1.0);
        ScanPoint pt;
        pt.b = b;
        pt.residual_zero =
            std::fabs(interp_curve(side_zero, b) - boundary_asymptote(k, mu, b, Side::zero));
        pt.residual_pi =
            std::fabs(interp_curve(side_pi, b) - boundary_asymptote(k, mu, b, Side::pi_));
        scan.points.push_back(pt);
        for (const double r : {pt.residual_zero, pt.residual_pi}) {
            if (r <= 0.0) continue;
            const double lx = std::log(b), ly = std::log(r);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            ++n_fit;
        }
    }
    if (n_fit >= 2) {
        const double denom = n_fit * sxx - sx * sx;
        scan.fitted_exponent = (denom != 0.0) ? (n_fit * sxy - sx * sy) / denom : 0.0;
    }
    return scan;
}

std::pair<double, double> default_scan_range(double mu, double c) {
    const double lo = std::max(20.0, c / mu);
    return {lo, 3.0 * lo};
}

}  // namespace jt
