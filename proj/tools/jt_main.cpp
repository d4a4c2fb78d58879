// jt: rotation numbers, Arnold-tongue boundaries, bridges, Bessel
// asymptotics and slow-curve geometry for the Josephson equation
//   dx/dt = (cos x + a + b cos t) / mu.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jt/asymptotics.hpp"
#include "jt/poincare.hpp"
#include "jt/slowfast.hpp"
#include "jt/sweep.hpp"
#include "jt/tongues.hpp"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_numeric = 2;
constexpr int exit_io = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
    bool ok = false;
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot open " + path + " for writing");
        out << content;
        ok = static_cast<bool>(out);
    }
    if (!ok) {
        std::remove(path.c_str());  // no partial outputs
        throw IoError("write failed for " + path);
    }
}

json integrator_json(const jt::IntegratorConfig& cfg) {
    return json{{"rel_tol", cfg.rel_tol},
                {"abs_tol", cfg.abs_tol},
                {"max_step", cfg.max_step},
                {"min_step", cfg.min_step}};
}

// every output file gets a <file>.manifest.json with enough to reproduce it
void write_manifest(const std::string& out_path, const std::string& command,
                    const json& parameters, const jt::IntegratorConfig& integ,
                    double wall_seconds, const json& extra = json::object()) {
    json m{{"command", command},
           {"parameters", parameters},
           {"integrator", integrator_json(integ)},
           {"tool_version", jt::tool_version()},
           {"wall_time_seconds", wall_seconds}};
    if (!extra.empty()) m["extra"] = extra;
    write_file(out_path + ".manifest.json", m.dump(2) + "\n");
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

jt::Side parse_side(const std::string& s) {
    if (s == "0" || s == "zero") return jt::Side::zero;
    if (s == "pi") return jt::Side::pi_;
    throw CLI::ValidationError("--side must be 0 or pi");
}

jt::TraceDirection parse_direction(const std::string& s) {
    if (s == "auto") return jt::TraceDirection::automatic;
    if (s == "forward") return jt::TraceDirection::forward;
    if (s == "backward") return jt::TraceDirection::backward;
    throw CLI::ValidationError("--direction must be auto, forward or backward");
}

std::string trace_csv(const jt::BoundaryCurve& c) {
    std::string out = "b,a,residual,method\n";
    for (const auto& s : c.samples) {
        out += jt::format_double(s.b);
        out += ',';
        out += jt::format_double(s.a);
        out += ',';
        out += jt::format_double(s.residual);
        out += ',';
        out += (s.method == jt::SampleMethod::newton) ? "newton" : "bisection";
        out += '\n';
    }
    return out;
}

json trace_params_json(int k, const std::string& side, double mu, double b_max,
                       const jt::TraceConfig& cfg) {
    return json{{"k", k},
                {"side", side},
                {"mu", mu},
                {"b_max", b_max},
                {"h", cfg.h},
                {"newton_tol", cfg.newton_tol},
                {"max_newton_iters", cfg.max_newton_iters},
                {"bisection_bracket", cfg.bisection_bracket},
                {"time_direction", cfg.time_direction == jt::TraceDirection::automatic
                                       ? "auto"
                                       : (cfg.time_direction == jt::TraceDirection::forward
                                              ? "forward"
                                              : "backward")}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arnold tongues of the Josephson equation"};
    app.require_subcommand(1);

    int threads_flag = 0;
    app.add_option("--threads", threads_flag,
                   "worker count (JT_THREADS overrides; 0 = available parallelism)");

    // ---- rotnum ----
    auto* rotnum = app.add_subcommand("rotnum", "rotation number at one parameter point");
    double rn_a = 0.0, rn_b = 0.0, rn_mu = 1.0;
    std::string rn_method = "mobius";
    rotnum->add_option("--a", rn_a, "mean bias")->required();
    rotnum->add_option("--b", rn_b, "forcing amplitude")->required();
    rotnum->add_option("--mu", rn_mu, "frequency ratio")->required();
    rotnum->add_option("--method", rn_method, "mobius | direct")
        ->check(CLI::IsMember({"mobius", "direct"}));

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "rotation-number grid sweep to CSV");
    jt::SweepJob job;
    std::string sw_config, sw_out;
    sweep->add_option("--config", sw_config, "JSON job description (mirrors SweepJob)");
    sweep->add_option("--a-min", job.a_min);
    sweep->add_option("--a-max", job.a_max);
    sweep->add_option("--b-min", job.b_min);
    sweep->add_option("--b-max", job.b_max);
    sweep->add_option("--na", job.n_a, "grid count in a");
    sweep->add_option("--nb", job.n_b, "grid count in b");
    sweep->add_option("--mu", job.mu);
    sweep->add_option("--out", sw_out, "output CSV path")->required();

    // ---- trace ----
    auto* trace = app.add_subcommand("trace", "trace one tongue boundary a(b)");
    int tr_k = 0;
    std::string tr_side = "0", tr_dir = "auto", tr_out;
    double tr_mu = 1.0, tr_bmax = 5.0;
    jt::TraceConfig tr_cfg;
    trace->add_option("--k", tr_k, "tongue index")->required();
    trace->add_option("--side", tr_side, "base point: 0 | pi")->required();
    trace->add_option("--mu", tr_mu)->required();
    trace->add_option("--b-max", tr_bmax)->required();
    trace->add_option("--step", tr_cfg.h, "b step");
    trace->add_option("--newton-tol", tr_cfg.newton_tol);
    trace->add_option("--max-newton", tr_cfg.max_newton_iters);
    trace->add_option("--bracket", tr_cfg.bisection_bracket,
                      "initial bisection half-width (0 = automatic)");
    trace->add_option("--direction", tr_dir, "auto | forward | backward");
    trace->add_option("--out", tr_out)->required();

    // ---- bridges ----
    auto* bridges = app.add_subcommand("bridges", "intersections of the two boundaries");
    int br_k = 0;
    double br_mu = 1.0, br_bmax = 10.0;
    jt::TraceConfig br_cfg;
    std::string br_out;
    bridges->add_option("--k", br_k)->required();
    bridges->add_option("--mu", br_mu)->required();
    bridges->add_option("--b-max", br_bmax)->required();
    bridges->add_option("--step", br_cfg.h);
    bridges->add_option("--out", br_out)->required();

    // ---- bessel ----
    auto* bessel = app.add_subcommand("bessel", "residuals against the Bessel asymptote");
    int be_k = 0, be_n = 41;
    double be_mu = 1.0, be_blo = 0.0, be_bhi = 0.0;
    jt::TraceConfig be_cfg;
    be_cfg.h = 0.05;
    std::string be_out;
    bessel->add_option("--k", be_k)->required();
    bessel->add_option("--mu", be_mu)->required();
    bessel->add_option("--b-lo", be_blo, "scan start (default max(20, 5/mu))");
    bessel->add_option("--b-hi", be_bhi, "scan end (default 3*b_lo)");
    bessel->add_option("--n-points", be_n);
    bessel->add_option("--step", be_cfg.h);
    bessel->add_option("--out", be_out)->required();

    // ---- slowcurve ----
    auto* slowcurve = app.add_subcommand("slowcurve", "slow-curve components and folds");
    double sc_a = 0.0, sc_b = 0.0;
    int sc_n = 256;
    std::string sc_out;
    slowcurve->add_option("--a", sc_a)->required();
    slowcurve->add_option("--b", sc_b)->required();
    slowcurve->add_option("--n-samples", sc_n);
    slowcurve->add_option("--out", sc_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    }

    const int threads = jt::resolve_threads(threads_flag);
    const auto t0 = std::chrono::steady_clock::now();

    try {
        if (*rotnum) {
            const jt::RotationMethod method = rn_method == "direct"
                                                  ? jt::RotationMethod::direct
                                                  : jt::RotationMethod::mobius;
            const jt::RotationResult r =
                jt::rotation_number(jt::Params{rn_a, rn_b, rn_mu}, method);
            std::cout << "rho = " << jt::format_double(r.rho) << "\n"
                      << "class = " << jt::to_string(r.map_class) << "\n"
                      << "method = " << rn_method << "\n"
                      << "error_bound = " << jt::format_double(r.error_bound) << "\n";
        } else if (*sweep) {
            if (!sw_config.empty()) {
                std::ifstream in(sw_config);
                if (!in) throw IoError("cannot read config " + sw_config);
                json j = json::parse(in);
                job.a_min = j.at("a_min");
                job.a_max = j.at("a_max");
                job.b_min = j.at("b_min");
                job.b_max = j.at("b_max");
                job.n_a = j.at("n_a");
                job.n_b = j.at("n_b");
                job.mu = j.at("mu");
            }
            const auto cells = jt::run_sweep(job, threads);
            write_file(sw_out, jt::sweep_csv(cells));
            write_manifest(sw_out, "sweep",
                           json{{"a_min", job.a_min},
                                {"a_max", job.a_max},
                                {"b_min", job.b_min},
                                {"b_max", job.b_max},
                                {"n_a", job.n_a},
                                {"n_b", job.n_b},
                                {"mu", job.mu}},
                           jt::FitOptions{}.integ, elapsed_s(t0));
        } else if (*trace) {
            tr_cfg.time_direction = parse_direction(tr_dir);
            const jt::BoundaryCurve c =
                jt::trace_boundary(tr_k, parse_side(tr_side), tr_mu, tr_bmax, tr_cfg);
            write_file(tr_out, trace_csv(c));
            write_manifest(tr_out, "trace",
                           trace_params_json(tr_k, tr_side, tr_mu, tr_bmax, tr_cfg),
                           tr_cfg.integ, elapsed_s(t0),
                           json{{"complete", c.complete}, {"failure", c.failure}});
            if (!c.complete) {
                std::cerr << "trace incomplete: " << c.failure << " after "
                          << c.samples.size() << " samples\n";
                return exit_numeric;
            }
        } else if (*bridges) {
            const auto found = jt::find_bridges(br_k, br_mu, br_bmax, br_cfg);
            std::string csv = "k,b_star,a_star,defect_0,defect_pi\n";
            for (const auto& br : found) {
                csv += std::to_string(br.k);
                csv += ',';
                csv += jt::format_double(br.b_star);
                csv += ',';
                csv += jt::format_double(br.a_star);
                csv += ',';
                csv += jt::format_double(br.defect_zero);
                csv += ',';
                csv += jt::format_double(br.defect_pi);
                csv += '\n';
            }
            write_file(br_out, csv);
            write_manifest(br_out, "bridges",
                           json{{"k", br_k}, {"mu", br_mu}, {"b_max", br_bmax}, {"h", br_cfg.h}},
                           br_cfg.integ, elapsed_s(t0), json{{"count", found.size()}});
        } else if (*bessel) {
            if (be_blo <= 0.0) be_blo = jt::default_scan_range(be_mu).first;
            if (be_bhi <= 0.0) be_bhi = 3.0 * be_blo;
            jt::BoundaryCurve c0, cpi;
            if (threads >= 2) {
                auto f0 = std::async(std::launch::async, [&] {
                    return jt::trace_boundary(be_k, jt::Side::zero, be_mu, be_bhi, be_cfg);
                });
                cpi = jt::trace_boundary(be_k, jt::Side::pi_, be_mu, be_bhi, be_cfg);
                c0 = f0.get();
            } else {
                c0 = jt::trace_boundary(be_k, jt::Side::zero, be_mu, be_bhi, be_cfg);
                cpi = jt::trace_boundary(be_k, jt::Side::pi_, be_mu, be_bhi, be_cfg);
            }
            if (!c0.complete || !cpi.complete) {
                std::cerr << "bessel: boundary tracing incomplete\n";
                return exit_numeric;
            }
            const jt::ResidualScan scan = jt::residual_scan(c0, cpi, be_blo, be_bhi, be_n);
            std::string csv = "b,residual_0,residual_pi,parity_check\n";
            for (const auto& pt : scan.points) {
                const double jneg = jt::bessel_j(be_k, -pt.b / be_mu).value;
                const double jpos = jt::bessel_j(be_k, pt.b / be_mu).value;
                const double parity = std::fabs(jneg - (be_k % 2 == 0 ? jpos : -jpos));
                csv += jt::format_double(pt.b);
                csv += ',';
                csv += jt::format_double(pt.residual_zero);
                csv += ',';
                csv += jt::format_double(pt.residual_pi);
                csv += ',';
                csv += jt::format_double(parity);
                csv += '\n';
            }
            write_file(be_out, csv);
            write_manifest(be_out, "bessel",
                           json{{"k", be_k},
                                {"mu", be_mu},
                                {"b_lo", be_blo},
                                {"b_hi", be_bhi},
                                {"n_points", be_n},
                                {"h", be_cfg.h}},
                           be_cfg.integ, elapsed_s(t0),
                           json{{"fitted_exponent", scan.fitted_exponent}});
        } else if (*slowcurve) {
            const jt::SlowCurve sc = jt::slow_curve(sc_a, sc_b, sc_n);
            auto on_curve = [&](double t, double x) {
                return std::fabs(std::cos(x) + sc_a + sc_b * std::cos(t));
            };
            std::string csv = "region,kind,component,contractible,t,x,residual\n";
            const std::string region = jt::to_string(sc.region);
            for (std::size_t ci = 0; ci < sc.components.size(); ++ci) {
                for (const auto& pt : sc.components[ci].points) {
                    csv += region;
                    csv += ",point,";
                    csv += std::to_string(ci);
                    csv += ',';
                    csv += sc.components[ci].contractible ? "1" : "0";
                    csv += ',';
                    csv += jt::format_double(pt.t);
                    csv += ',';
                    csv += jt::format_double(pt.x);
                    csv += ',';
                    csv += jt::format_double(on_curve(pt.t, pt.x));
                    csv += '\n';
                }
            }
            for (const auto& f : sc.folds) {
                csv += region;
                csv += ",fold,-1,0,";
                csv += jt::format_double(f.t);
                csv += ',';
                csv += jt::format_double(f.x);
                csv += ',';
                csv += jt::format_double(on_curve(f.t, f.x));
                csv += '\n';
            }
            write_file(sc_out, csv);
            write_manifest(sc_out, "slowcurve",
                           json{{"a", sc_a}, {"b", sc_b}, {"n_samples", sc_n}},
                           jt::IntegratorConfig{}, elapsed_s(t0),
                           json{{"region", region},
                                {"components", sc.components.size()},
                                {"folds", sc.folds.size()}});
        }
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return exit_io;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return exit_numeric;
    }
    return exit_ok;
}
