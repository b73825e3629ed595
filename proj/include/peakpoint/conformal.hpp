#pragma once

#include <memory>
#include <vector>

#include "peakpoint/jordan.hpp"

namespace pk {

// One unzip step: the Moebius m(w) = w/(1 - w/x0) carrying the geodesic
// through 0 and omega onto the imaginary axis, then the vertical slit map
// sqrt(w^2 + b^2) on the (0,2pi) branch.
struct ZipStep {
    double x0 = 0.0;
    double b = 0.0;
    bool vertical = false;
};

// Numerical Riemann map with boundary correspondence, built by the geodesic
// variant of the slit-composition (zipper family) method over boundary
// samples.  Maps the Jordan interior onto D(0;1), basepoint to 0; the
// boundary data points carry strictly increasing circle angles.
class DiscreteConformalMap {
public:
    // points: boundary samples in counterclockwise order; basepoint strictly
    // inside.  Raises Err::NumericalBreakdown when the composition degrades;
    // callers resample denser and retry.
    static DiscreteConformalMap build(std::vector<Cx> points, Cx basepoint);

    Cx evaluate(Cx z) const; // interior evaluation, rotation applied
    Cx basepoint() const { return base_; }

    std::size_t size() const { return pts_.size(); }
    const std::vector<Cx>& points() const { return pts_; }

    // unit-circle image of data point j, rotation applied
    Cx boundary_value(std::size_t j) const;
    // raw angles in [0, 2pi), one per data point, before rotation
    const std::vector<double>& boundary_angles() const { return angles_; }

    // post-rotation so the data point nearest z0 maps to 1
    DiscreteConformalMap normalized_at(Cx z0, double tol = 1e-9) const;
    std::size_t nearest_index(Cx z0) const;

private:
    std::vector<Cx> pts_;
    std::vector<ZipStep> steps_;
    Cx pH_{0.0, 1.0}; // basepoint image in the half-plane
    Cx rot_{1.0, 0.0};
    Cx cutRot_{1.0, 0.0};    // rotation aligning the retired arc with the sqrt cut
    Cx cutBranch_{1.0, 0.0}; // branch sign putting the interior in H
    std::vector<double> angles_;
    Cx base_{0.0, 0.0};
};

using ConformalPtr = std::shared_ptr<const DiscreteConformalMap>;

// Builds the map for a Jordan curve at increasing sample counts (1024 up to
// 8192) until the composition stays finite and monotone.
DiscreteConformalMap riemann_map(const JordanCurve& curve, Cx basepoint,
                                 std::size_t initialSamples = 1024);

} // namespace pk
