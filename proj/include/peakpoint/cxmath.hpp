#pragma once

#include <complex>
#include <span>
#include <vector>

#include "peakpoint/errors.hpp"

namespace pk {

using Cx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

bool is_finite(Cx z);
void require_finite(Cx z, const char* where);

// Distance from z to the closed ray (-inf, 0].
double dist_to_cut(Cx z);

// Branch tolerance: points closer than this to the cut are rejected.
inline double branch_tol(Cx z) { return 1e-12 * std::max(1.0, std::abs(z)); }

// Principal logarithm on the cut plane, Im in (-pi, pi).
Cx principal_log(Cx z);

// arg(z) = Im(log z), continuous off the cut.
double arg_principal(Cx z);

// Open cone C_alpha = { w != 0 : |arg w| < alpha*pi }.  C_1 is the cut plane.
struct Cone {
    double alpha;

    explicit Cone(double a);
    bool contains(Cx w) const;        // strict membership, w != 0
    bool contains_closure0(Cx w) const; // membership of {0} plus cone
};

// The alpha-th root map exp(alpha*log z), fixing 0 and 1.  alpha in (0,1]
// for the forward map; the inverse uses exponent 1/alpha on the cone.
struct RootMap {
    double alpha;

    explicit RootMap(double a);
    Cx forward(Cx z) const;  // {0} u cut plane -> {0} u C_alpha
    Cx inverse(Cx z) const;  // {0} u C_alpha  -> {0} u cut plane
};

Cx root_alpha(double alpha, Cx z);
Cx root_alpha_inv(double alpha, Cx z);

// Winding number of a sampled closed curve about p, by summed signed angle
// increments.  Requires >= 512 samples; a rounding residue above 0.1 means
// the curve is undersampled and raises Err::Undersampled.  Points closer to
// the polyline than `clearance` raise Err::PointOnCurve.
int winding_number(std::span<const Cx> loop, Cx p, double clearance = 1e-9);

// Minimum distance from p to the closed polyline through `loop`.
double polyline_distance(std::span<const Cx> loop, Cx p);

} // namespace pk
