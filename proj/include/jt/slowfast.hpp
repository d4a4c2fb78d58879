#pragma once

#include <vector>

#include "jt/model.hpp"

namespace jt {

// Parameter wedges governing the slow-curve shape (a, b >= 0 after the
// quadrant reduction): A has no slow curve, B one contractible oval, C two
// curves winding in x. CPrime is the wedge a + b < 1 where both branches
// exist for every t, giving two curves winding in t.
enum class Region { A, B, C, CPrime, Boundary };

const char* to_string(Region r);

struct CurvePoint {
    double t = 0.0;
    double x = 0.0;
};

struct SlowCurveComponent {
    std::vector<CurvePoint> points;  // closed polyline (first point not repeated)
    bool contractible = false;
    int winding_t = 0;  // signed turns of the component in t
    int winding_x = 0;  // signed turns in x
};

struct SlowCurve {
    Region region = Region::A;
    std::vector<SlowCurveComponent> components;
    std::vector<CurvePoint> folds;
};

Region classify_region(double a, double b, double tol = 1e-12);

// Samples the zero set of cos x + a + b cos t with roughly n_samples points
// per component; empty in region A.
SlowCurve slow_curve(double a, double b, int n_samples = 256);

// Points of the slow curve with sin x = 0: solutions of a + b cos t = -1
// (x = 0) and a + b cos t = 1 (x = pi).
std::vector<CurvePoint> fold_points(double a, double b);

}  // namespace jt
