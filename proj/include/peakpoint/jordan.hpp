#pragma once

#include <vector>

#include "peakpoint/geometry.hpp"

namespace pk {

// Piecewise circular-arc simple closed curve.  Arcs join end to end within
// 1e-9; the sampled parametrization is near-uniform in arc length and always
// includes every arc endpoint.
class JordanCurve {
public:
    JordanCurve(std::vector<CircleArc> arcs, std::vector<Cx> contacts, std::size_t minSamples = 1024);

    static JordanCurve circle(Cx center, double radius, std::size_t samples = 1024);

    const std::vector<CircleArc>& arcs() const { return arcs_; }
    const std::vector<Cx>& contacts() const { return contacts_; }
    const std::vector<Cx>& samples() const { return samples_; }
    double length() const { return length_; }
    double sample_pitch() const { return length_ / static_cast<double>(samples_.size()); }

    int winding(Cx p) const { return winding_number(samples_, p); }
    double distance(Cx p) const { return polyline_distance(samples_, p); }

    // simplicity at a given oversampling of the arc list
    bool is_simple_at(std::size_t sampleCount) const;

    std::vector<Cx> resample(std::size_t count) const;

private:
    std::vector<CircleArc> arcs_;
    std::vector<Cx> contacts_;
    std::vector<Cx> samples_;
    double length_ = 0.0;
};

} // namespace pk
