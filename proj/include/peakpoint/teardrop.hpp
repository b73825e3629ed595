#pragma once

#include <vector>

#include "peakpoint/cxmath.hpp"

namespace pk {

// The alpha-teardrop T_alpha: image of clD(1/2;1/2) under the alpha-root.
// Its boundary t_alpha is {0} u { (cos t)^alpha e^{i alpha t} : |t| < pi/2 }.
struct Teardrop {
    double alpha;

    explicit Teardrop(double a);

    // Boundary samples as a closed loop: 0, then the parametrized branch
    // swept from t = -pi/2 to +pi/2 (CCW around the interior).
    std::vector<Cx> boundary_loop(std::size_t count = 4096) const;

    bool contains(Cx z) const; // membership in T_alpha = t_alpha u int(t_alpha)
};

// (cos theta)^alpha * exp(i alpha theta), |theta| < pi/2.
Cx teardrop_boundary_point(double alpha, double theta);

bool teardrop_contains(double alpha, Cx z);

// (2.2.6): largest safe alpha* such that the alpha-root maps
// clD(1/2;1/2) \ clD(0;rho) into D(1;delta) for every alpha <= alpha*.
// Bisection against a dense boundary-sampling oracle, then a 0.9 safety
// factor so the monotone claim survives sampling gaps.
double alpha_for_collapse(double rho, double delta);

// (2.2.7): additionally bounds |arg| of the whole teardrop by theta via
// the cone inclusion t_alpha subset C_{alpha/2}.
double alpha_for_angle(double rho, double delta, double theta);

// Max over >= `samples` boundary points of clD(1/2;1/2) \ clD(0;rho) of
// |Z^alpha(z) - 1|.  Exposed for the soundness re-checks in tests.
double collapse_defect(double alpha, double rho, std::size_t samples = 2048);

} // namespace pk
