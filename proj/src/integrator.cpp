// Adaptive Dormand-Prince 5(4) integration of the Josephson equation and
// its variational system, after the classic DOPRI5 of Hairer, Norsett and
// Wanner (Solving ODEs I, 2nd ed.).

#include "jt/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace jt {

namespace {

// Butcher tableau
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;

// y5 - y4 error weights
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

// dense-output weights
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

constexpr long max_steps = 50'000'000;

template <int N>
using Vec = std::array<double, N>;

struct PhaseSystem {
    Params p;
    void operator()(double t, const Vec<1>& y, Vec<1>& dy) const {
        dy[0] = (std::cos(y[0]) + p.a + p.b * std::cos(t)) / p.mu;
    }
};

struct VariationalSystem {
    Params p;
    void operator()(double t, const Vec<3>& y, Vec<3>& dy) const {
        const double sx = std::sin(y[0]);
        const double ct = std::cos(t);
        dy[0] = (std::cos(y[0]) + p.a + p.b * ct) / p.mu;
        dy[1] = (-y[1] * sx + 1.0) / p.mu;
        dy[2] = (-y[2] * sx + ct) / p.mu;
    }
};

template <int N, class F>
double initial_step(const F& f, double t0, const Vec<N>& y0, const Vec<N>& f0,
                    double posneg, double hmax, double atol, double rtol) {
    double dnf = 0.0, dny = 0.0;
    for (int i = 0; i < N; ++i) {
        const double sk = atol + rtol * std::fabs(y0[i]);
        dnf += (f0[i] / sk) * (f0[i] / sk);
        dny += (y0[i] / sk) * (y0[i] / sk);
    }
    double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : std::sqrt(dny / dnf) * 0.01;
    h = std::min(h, hmax);

    // one explicit Euler step to estimate the second derivative
    Vec<N> y1, f1;
    for (int i = 0; i < N; ++i) y1[i] = y0[i] + h * posneg * f0[i];
    f(t0 + h * posneg, y1, f1);
    double der2 = 0.0;
    for (int i = 0; i < N; ++i) {
        const double sk = atol + rtol * std::fabs(y0[i]);
        der2 += ((f1[i] - f0[i]) / sk) * ((f1[i] - f0[i]) / sk);
    }
    der2 = std::sqrt(der2) / h;

    const double der12 = std::max(std::fabs(der2), std::sqrt(dnf));
    double h1 = (der12 <= 1e-15) ? std::max(1e-6, h * 1e-3)
                                 : std::pow(0.01 / der12, 0.2);
    return std::min({100.0 * h, h1, hmax});
}

template <int N, class F>
void run_dopri5(const F& f, double t0, double t1, Vec<N> y,
                const IntegratorConfig& cfg, LiftedTrajectory& out) {
    const double posneg = (t1 > t0) ? 1.0 : -1.0;
    const double atol = cfg.abs_tol, rtol = cfg.rel_tol;
    const double safe = 0.9, beta = 0.04;
    const double expo1 = 0.2 - beta * 0.75;
    const double facc1 = 1.0 / 0.2, facc2 = 1.0 / 10.0;
    double facold = 1e-4;

    double t = t0;
    Vec<N> k1, k2, k3, k4, k5, k6, k7, ynew, ytmp;
    f(t, y, k1);

    const double hmax = std::min(cfg.max_step, std::fabs(t1 - t0));
    double h = posneg * initial_step<N>(f, t, y, k1, posneg, hmax, atol, rtol);

    auto record = [&](double tcur) {
        out.t_grid.push_back(tcur);
        out.x_values.push_back(y[0]);
        if (N == 3) {
            out.u_a.push_back(y[1]);
            out.u_b.push_back(y[2]);
        }
    };
    record(t);

    bool last = false, rejected = false;
    long nstep = 0;
    while (!last) {
        if (++nstep > max_steps)
            throw StepUnderflow("integrate: step count exceeded");
        if (std::fabs(h) < cfg.min_step)
            throw StepUnderflow("integrate: step size underflow at t = " + std::to_string(t));
        if ((t + 1.01 * h - t1) * posneg > 0.0) {
            h = t1 - t;
            last = true;
        }

        for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        f(t + c2 * h, ytmp, k2);
        for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(t + c3 * h, ytmp, k3);
        for (int i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(t + c4 * h, ytmp, k4);
        for (int i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(t + c5 * h, ytmp, k5);
        for (int i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                  a65 * k5[i]);
        f(t + h, ytmp, k6);
        for (int i = 0; i < N; ++i)
            ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] +
                                  a76 * k6[i]);
        f(t + h, ynew, k7);

        double err = 0.0;
        for (int i = 0; i < N; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
            const double sk = atol + rtol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
            err += (ei / sk) * (ei / sk);
        }
        err = std::sqrt(err / N);

        const double fac11 = std::pow(err, expo1);
        double fac = fac11 / std::pow(facold, beta);
        fac = std::max(facc2, std::min(facc1, fac / safe));
        double hnew = h / fac;

        if (err <= 1.0) {
            facold = std::max(err, 1e-4);

            TrajectorySegment seg;
            seg.t_anchor = t;
            seg.h = h;
            for (int i = 0; i < N; ++i) {
                const double ydiff = ynew[i] - y[i];
                const double bspl = h * k1[i] - ydiff;
                seg.rcont[i][0] = y[i];
                seg.rcont[i][1] = ydiff;
                seg.rcont[i][2] = bspl;
                seg.rcont[i][3] = ydiff - h * k7[i] - bspl;
                seg.rcont[i][4] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                       d6 * k6[i] + d7 * k7[i]);
            }
            out.segments.push_back(seg);

            k1 = k7;  // FSAL
            y = ynew;
            t += h;
            record(t);

            if (rejected) hnew = posneg * std::min(std::fabs(hnew), std::fabs(h));
            rejected = false;
        } else {
            rejected = true;
            last = false;
        }
        h = (std::fabs(hnew) > hmax) ? posneg * hmax : hnew;
    }
}

LiftedTrajectory run(const Params& p, double x0, double t0, double t1,
                     const IntegratorConfig& cfg, bool variational) {
    p.validate();
    cfg.validate();
    if (t0 == t1) throw std::invalid_argument("integrate: t0 == t1");
    if (!std::isfinite(x0)) throw std::invalid_argument("integrate: x0 must be finite");

    LiftedTrajectory out;
    out.t_begin = t0;
    out.t_end = t1;
    if (variational) {
        VariationalSystem sys{p};
        run_dopri5<3>(sys, t0, t1, Vec<3>{x0, 0.0, 0.0}, cfg, out);
    } else {
        PhaseSystem sys{p};
        run_dopri5<1>(sys, t0, t1, Vec<1>{x0}, cfg, out);
    }
    return out;
}

}  // namespace

double LiftedTrajectory::eval(double t, int comp) const {
    if (comp > 0 && !has_variations())
        throw std::logic_error("LiftedTrajectory: no variational data stored");
    const bool fwd = t_end >= t_begin;
    const double lo = fwd ? t_begin : t_end, hi = fwd ? t_end : t_begin;
    if (t < lo - 1e-9 || t > hi + 1e-9)
        throw std::out_of_range("LiftedTrajectory: t outside integrated span");

    // segments are in integration order; binary search on anchor times
    std::size_t n = segments.size();
    std::size_t a = 0, b = n;
    while (b - a > 1) {
        const std::size_t mid = (a + b) / 2;
        const bool before = fwd ? (t < segments[mid].t_anchor) : (t > segments[mid].t_anchor);
        if (before)
            b = mid;
        else
            a = mid;
    }
    const TrajectorySegment& s = segments[a];
    const double th = (t - s.t_anchor) / s.h;
    const double th1 = 1.0 - th;
    const auto& r = s.rcont[comp];
    return r[0] + th * (r[1] + th1 * (r[2] + th * (r[3] + th1 * r[4])));
}

LiftedTrajectory integrate(const Params& p, double x0, double t0, double t1,
                           const IntegratorConfig& cfg) {
    return run(p, x0, t0, t1, cfg, false);
}

LiftedTrajectory integrate_with_variations(const Params& p, double x0, double t0,
                                           double t1, const IntegratorConfig& cfg) {
    return run(p, x0, t0, t1, cfg, true);
}

}  // namespace jt
