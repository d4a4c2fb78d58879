// Arnold-tongue boundary tracer: one Newton step per b-step on the
// half-period condition, with variational derivatives, adaptive bisection
// fallback, and backward-time formulation where the forward trajectory runs
// along the repelling part of the slow curve.

#include "jt/tongues.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jt/slowfast.hpp"

namespace jt {

namespace {

struct Defect {
    double value = 0.0;
    double slope = 0.0;  // d(defect)/da
};

// Forward formulation: Q(a) = x(pi) from x(0) = base, defect Q - target.
// Backward: start at x(pi) = target, integrate to 0, defect x(0) - base.
Defect eval_defect(const Params& p, int k, Side side, bool backward,
                   const IntegratorConfig& cfg) {
    const double base = side_base(side);
    const double target = base + pi * static_cast<double>(k);
    if (!backward) {
        const auto traj = integrate_with_variations(p, base, 0.0, pi, cfg);
        return {traj.x_end() - target, traj.u_a_end()};
    }
    IntegratorConfig bcfg = cfg;
    bcfg.direction = TimeDirection::backward;
    const auto traj = integrate_with_variations(p, target, pi, 0.0, bcfg);
    return {traj.x_end() - base, traj.u_a_end()};
}

bool use_backward(const TraceConfig& cfg, double a, double b) {
    switch (cfg.time_direction) {
        case TraceDirection::forward: return false;
        case TraceDirection::backward: return true;
        case TraceDirection::automatic: break;
    }
    return classify_region(a, b) == Region::B;
}

}  // namespace

double half_period_value(const Params& p, double x0, const IntegratorConfig& cfg) {
    if (std::fabs(x0) > 1e-12 && std::fabs(x0 - pi) > 1e-12)
        throw std::invalid_argument("half_period_value: x0 must be 0 or pi");
    return integrate(p, x0, 0.0, pi, cfg).x_end();
}

double boundary_condition(const Params& p, int k, Side side, const IntegratorConfig& cfg) {
    const double base = side_base(side);
    const double target = base + pi * static_cast<double>(k);
    return integrate(p, base, 0.0, pi, cfg).x_end() - target;
}

double initial_a(int k, double mu) {
    if (k < 0) throw std::invalid_argument("initial_a: k must be >= 0");
    return std::sqrt(1.0 + static_cast<double>(k) * k * mu * mu);
}

namespace {

BoundarySolve solve_boundary_once(int k, Side side, double mu, double b, double a_guess,
                                  const TraceConfig& cfg, double slope_hint,
                                  bool skip_newton) {
    BoundarySolve out;
    out.backward = use_backward(cfg, a_guess, b);

    auto defect = [&](double a) {
        return eval_defect(Params{a, b, mu}, k, side, out.backward, cfg.integ);
    };

    // Newton phase
    double a = a_guess;
    double last_step = std::numeric_limits<double>::infinity();
    for (int it = 1; !skip_newton && it <= cfg.max_newton_iters; ++it) {
        const Defect d = defect(a);
        if (std::fabs(d.value) < cfg.newton_tol) {
            out.a = a;
            out.residual = std::fabs(d.value);
            out.steps_used = it;
            out.method = SampleMethod::newton;
            out.ok = true;
            return out;
        }
        const double step = d.value / d.slope;
        const bool diverging = !std::isfinite(step) || std::fabs(step) > 0.5 ||
                               std::fabs(step) > 1.5 * last_step;
        if (diverging) break;
        last_step = std::fabs(step);
        a -= step;
    }

    // Bisection fallback around the predictor
    double w = cfg.bisection_bracket > 0.0
                   ? cfg.bisection_bracket
                   : std::max(5.0 * cfg.h * std::fabs(slope_hint), cfg.h);
    double lo = 0.0, hi = 0.0, dlo = 0.0, dhi = 0.0;
    bool bracketed = false;
    int evals = 0;
    for (int attempt = 0; attempt < 10; ++attempt) {
        lo = a_guess - w;
        hi = a_guess + w;
        dlo = defect(lo).value;
        dhi = defect(hi).value;
        evals += 2;
        if (std::signbit(dlo) != std::signbit(dhi)) {
            bracketed = true;
            break;
        }
        w *= 2.0;
    }
    if (!bracketed) {
        out.ok = false;
        out.failure = "BracketFailure";
        out.method = SampleMethod::bisection;
        out.steps_used = evals;
        return out;
    }

    double best_a = lo, best_d = dlo;
    if (std::fabs(dhi) < std::fabs(dlo)) best_a = hi, best_d = dhi;
    while (hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(lo))) {
        const double mid = 0.5 * (lo + hi);
        const double dm = defect(mid).value;
        ++evals;
        if (std::fabs(dm) < std::fabs(best_d)) {
            best_d = dm;
            best_a = mid;
        }
        if (std::fabs(dm) < cfg.newton_tol) break;
        if (std::signbit(dm) == std::signbit(dlo)) {
            lo = mid;
            dlo = dm;
        } else {
            hi = mid;
        }
    }

    out.a = best_a;
    out.residual = std::fabs(best_d);
    out.steps_used = evals;
    out.method = SampleMethod::bisection;
    out.ok = out.residual < cfg.newton_tol;
    if (!out.ok) out.failure = "ResidualFloor";
    return out;
}

// Near a canard turn one time direction can leave the root inside a
// transition layer thinner than machine resolution while the other stays
// well conditioned. When the first attempt floors out, retry with tighter
// integration tolerances and (under automatic direction) the inverted
// formulation.
BoundarySolve solve_boundary_impl(int k, Side side, double mu, double b, double a_guess,
                                  const TraceConfig& cfg, double slope_hint,
                                  bool skip_newton) {
    cfg.validate();

    TraceConfig tight = cfg;
    tight.integ.rel_tol = std::max(cfg.integ.rel_tol * 1e-4, 1e-14);
    tight.integ.abs_tol = std::max(cfg.integ.abs_tol * 1e-4, 1e-14);

    std::vector<TraceConfig> ladder{cfg, tight};
    if (cfg.time_direction == TraceDirection::automatic) {
        const bool bwd = use_backward(cfg, a_guess, b);
        TraceConfig flipped = cfg;
        flipped.time_direction = bwd ? TraceDirection::forward : TraceDirection::backward;
        TraceConfig flipped_tight = flipped;
        flipped_tight.integ = tight.integ;
        ladder.push_back(flipped);
        ladder.push_back(flipped_tight);
    }

    BoundarySolve best;
    best.failure = "BracketFailure";
    best.residual = std::numeric_limits<double>::infinity();
    for (const TraceConfig& attempt : ladder) {
        BoundarySolve s =
            solve_boundary_once(k, side, mu, b, a_guess, attempt, slope_hint, skip_newton);
        if (s.ok) return s;
        if (s.failure == "ResidualFloor" && s.residual < best.residual) best = s;
    }
    return best;
}

}  // namespace

BoundarySolve solve_boundary_at(int k, Side side, double mu, double b, double a_guess,
                                const TraceConfig& cfg, double slope_hint) {
    return solve_boundary_impl(k, side, mu, b, a_guess, cfg, slope_hint, false);
}

double validated_initial_a(int k, Side side, double mu, const TraceConfig& cfg) {
    if (k < 0) throw std::invalid_argument("validated_initial_a: k must be >= 0");
    if (k == 0 && side == Side::zero)
        throw std::invalid_argument(
            "validated_initial_a: the side-0 condition of tongue 0 has no root at b = 0");

    // candidates from the two printed formulas; the half-period quadrature
    // fixes the k form, but both are probed and the smaller defect wins
    const double cand_k = initial_a(k, mu);
    const double cand_half = std::sqrt(1.0 + 0.25 * k * k * mu * mu);
    const double dk =
        std::fabs(boundary_condition(Params{cand_k, 0.0, mu}, k, side, cfg.integ));
    const double dh =
        std::fabs(boundary_condition(Params{cand_half, 0.0, mu}, k, side, cfg.integ));
    const double start = (dk <= dh) ? cand_k : cand_half;

    TraceConfig vcfg = cfg;
    vcfg.time_direction = TraceDirection::forward;
    if (vcfg.bisection_bracket <= 0.0) vcfg.bisection_bracket = 1e-4;
    const BoundarySolve s = solve_boundary_at(k, side, mu, 0.0, start, vcfg);
    if (!s.ok)
        throw std::runtime_error("validated_initial_a: no root at b = 0 near candidate");
    return s.a;
}

BoundaryCurve trace_boundary(int k, Side side, double mu, double b_max,
                             const TraceConfig& cfg) {
    cfg.validate();
    if (!(b_max > 0.0)) throw std::invalid_argument("trace_boundary: b_max must be positive");
    if (k < 0) throw std::invalid_argument("trace_boundary: k must be >= 0");

    BoundaryCurve curve;
    curve.k = k;
    curve.side = side;
    curve.mu = mu;

    const bool degenerate_start = (k == 0 && side == Side::zero);
    double a = degenerate_start ? 1.0 : validated_initial_a(k, side, mu, cfg);
    if (!degenerate_start) {
        const double r =
            std::fabs(boundary_condition(Params{a, 0.0, mu}, k, side, cfg.integ));
        curve.samples.push_back({0.0, a, r, 0, SampleMethod::newton, false});
    }

    double prev_b = 0.0, prev_a = a, slope = 0.0;
    double b = 0.0;
    while (b < b_max - 1e-12) {
        b = std::min(b + cfg.h, b_max);
        const bool opening = degenerate_start && curve.samples.empty();
        TraceConfig scfg = cfg;
        if (opening && scfg.bisection_bracket <= 0.0) {
            // initial_a = 1 sits at a parabolic point where Q' can vanish;
            // open with the bracket method instead of Newton
            scfg.bisection_bracket = 0.5;
        }
        BoundarySolve s = solve_boundary_impl(k, side, mu, b, a, scfg, slope, opening);
        if (!s.ok) {
            curve.complete = false;
            curve.failure = s.failure;
            return curve;
        }
        slope = (b > prev_b) ? (s.a - prev_a) / (b - prev_b) : 0.0;
        prev_b = b;
        prev_a = s.a;
        a = s.a;
        curve.samples.push_back({b, s.a, s.residual, s.steps_used, s.method, s.backward});
    }
    return curve;
}

namespace {

// resample one curve at b by a local solve warm-started from the nearest sample
double curve_value_at(const BoundaryCurve& c, double b, const TraceConfig& cfg) {
    const auto it = std::lower_bound(
        c.samples.begin(), c.samples.end(), b,
        [](const BoundarySample& s, double v) { return s.b < v; });
    const BoundarySample& near =
        (it == c.samples.end()) ? c.samples.back()
                                : (it == c.samples.begin() ? *it : *(it - 1));
    const BoundarySolve s = solve_boundary_at(c.k, c.side, c.mu, b, near.a, cfg);
    if (!s.ok) throw std::runtime_error("curve_value_at: lost the boundary while refining");
    return s.a;
}

}  // namespace

std::vector<Bridge> find_bridges(int k, double mu, double b_max, const TraceConfig& cfg) {
    const BoundaryCurve c0 = trace_boundary(k, Side::zero, mu, b_max, cfg);
    const BoundaryCurve cpi = trace_boundary(k, Side::pi_, mu, b_max, cfg);

    // align on the common grid (side-0 curve of tongue 0 starts at b = h)
    std::vector<Bridge> bridges;
    std::size_t i0 = 0, ipi = 0;
    while (i0 < c0.samples.size() && ipi < cpi.samples.size() &&
           std::fabs(c0.samples[i0].b - cpi.samples[ipi].b) > 1e-14) {
        if (c0.samples[i0].b < cpi.samples[ipi].b)
            ++i0;
        else
            ++ipi;
    }

    double prev_b = 0.0, prev_d = 0.0;
    bool have_prev = false;
    for (; i0 < c0.samples.size() && ipi < cpi.samples.size(); ++i0, ++ipi) {
        const double b = c0.samples[i0].b;
        const double d = c0.samples[i0].a - cpi.samples[ipi].a;
        if (have_prev && prev_d != 0.0 && std::signbit(prev_d) != std::signbit(d)) {
            // refine the crossing by bisection in b, re-solving both boundaries
            double lo = prev_b, hi = b, dlo = prev_d;
            double a0 = 0.0, api = 0.0;
            for (int iter = 0; iter < 80 && hi - lo > 1e-13; ++iter) {
                const double mid = 0.5 * (lo + hi);
                a0 = curve_value_at(c0, mid, cfg);
                api = curve_value_at(cpi, mid, cfg);
                const double dm = a0 - api;
                if (std::fabs(dm) < 1e-12) {
                    lo = hi = mid;
                    break;
                }
                if (std::signbit(dm) == std::signbit(dlo)) {
                    lo = mid;
                    dlo = dm;
                } else {
                    hi = mid;
                }
            }
            const double bs = 0.5 * (lo + hi);
            a0 = curve_value_at(c0, bs, cfg);
            api = curve_value_at(cpi, bs, cfg);
            Bridge br;
            br.k = k;
            br.b_star = bs;
            br.a_star = 0.5 * (a0 + api);
            br.defect_zero =
                std::fabs(boundary_condition(Params{br.a_star, bs, mu}, k, Side::zero, cfg.integ));
            br.defect_pi =
                std::fabs(boundary_condition(Params{br.a_star, bs, mu}, k, Side::pi_, cfg.integ));
            bridges.push_back(br);
        }
        prev_b = b;
        prev_d = d;
        have_prev = true;
    }
    return bridges;
}

double tongue_gap(int k, double mu, double b, const TraceConfig& cfg) {
    if (!(b > 0.0)) throw std::invalid_argument("tongue_gap: b must be positive");
    double edge_k = -std::numeric_limits<double>::infinity();
    double edge_k1 = std::numeric_limits<double>::infinity();
    for (const Side side : {Side::zero, Side::pi_}) {
        const BoundaryCurve ck = trace_boundary(k, side, mu, b, cfg);
        if (!ck.complete) throw std::runtime_error("tongue_gap: lost tongue k boundary");
        edge_k = std::max(edge_k, ck.a_at_back());
        const BoundaryCurve ck1 = trace_boundary(k + 1, side, mu, b, cfg);
        if (!ck1.complete) throw std::runtime_error("tongue_gap: lost tongue k+1 boundary");
        edge_k1 = std::min(edge_k1, ck1.a_at_back());
    }
    return edge_k1 - edge_k;
}

}  // namespace jt
