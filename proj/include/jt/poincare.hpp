#pragma once

#include <array>
#include <stdexcept>

#include "jt/integrator.hpp"
#include "jt/model.hpp"

namespace jt {

// Raised by fit_mobius when the images of the base points coincide within
// tolerance, so no fractional-linear map can be resolved (near-identity
// behaviour of the fitted data; callers fall back to Identity handling).
struct DegenerateFit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The Poincare map over one period, represented as a real 2x2 matrix with
// det = +1 acting on u = tan(x/2) by fractional-linear action, plus the
// integer winding of the lift: the continuous lift sends 0 to a value in
// [2*pi*winding, 2*pi*(winding + 1)).
struct MobiusMap {
    std::array<std::array<double, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};
    int winding = 0;
    double fit_residual = 0.0;
    // measured lift of 0 (anchors the continuous lift; winding = floor(lift0/2pi))
    double lift0 = 0.0;

    double trace() const { return m[0][0] + m[1][1]; }
    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

    // Image angle of circle point x under the matrix action, in [0, 2*pi).
    double circle_image(double x) const;
    // Continuous monotone lift anchored at lift0; L(x + 2*pi) = L(x) + 2*pi.
    double lift(double x) const;
};

enum class MapClass { Elliptic, Parabolic, Hyperbolic, Identity };

const char* to_string(MapClass c);

enum class RotationMethod { mobius, direct };

struct RotationResult {
    double rho = 0.0;
    RotationMethod method = RotationMethod::mobius;
    double error_bound = 0.0;
    MapClass map_class = MapClass::Identity;
};

struct FitOptions {
    std::array<double, 3> base_points{0.0, pi / 2.0, pi};
    double check_point = 3.0 * pi / 2.0;
    double degenerate_tol = 1e-12;  // circle distance between coinciding images
    IntegratorConfig integ{1e-12, 1e-12, 0.1, 1e-12};
};

// Lift of the Poincare map from the section t = 0: returns x~(2*pi) for the
// trajectory with x~(0) = x0 on the universal cover.
double poincare_lift(const Params& p, double x0, const IntegratorConfig& cfg = {});

// Fits the fractional-linear representation from the images of three base
// points (homogeneous coordinates throughout, so x = pi <-> u = infinity is
// unremarkable), normalizes det to +1, sets the winding from the lift of 0,
// and validates at a fourth point.
MobiusMap fit_mobius(const Params& p, const FitOptions& opts = {});

// |trace| rule: < 2 elliptic, within parabolic_tol of 2 parabolic, > 2
// hyperbolic; matrices within identity_tol of +-I are Identity first.
MapClass classify(const MobiusMap& m, double parabolic_tol = 1e-7,
                  double identity_tol = 1e-6);

// Rotation number with the convention rho = lim (x~(2*pi*n) - x~(0))/(2*pi*n):
// x-revolutions per t-period. Non-elliptic classes give exact integers; the
// elliptic fraction comes from conjugating the matrix to a rigid rotation.
RotationResult rotation_number(const Params& p,
                               RotationMethod method = RotationMethod::mobius,
                               const FitOptions& opts = {});

// Same, reusing an already fitted map (avoids refitting in parameter sweeps).
RotationResult rotation_from_map(const MobiusMap& m,
                                 RotationMethod method = RotationMethod::mobius,
                                 long direct_iterations = 100000);

}  // namespace jt
