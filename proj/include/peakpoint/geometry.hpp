#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "peakpoint/cxmath.hpp"

namespace pk {

enum class Orientation { CCW, CW };

struct Disk {
    Cx center;
    double radius = 1.0;
    bool closed = true;

    Disk(Cx c, double r, bool cl = true);
    bool contains(Cx p) const; // closed disks include the circle
};

// Arc of C(center; radius) from startAngle to endAngle.  For CCW arcs the
// sweep endAngle - startAngle is taken in (0, 2*pi]; for CW in [-2*pi, 0).
struct CircleArc {
    Cx center;
    double radius = 1.0;
    double startAngle = 0.0;
    double endAngle = 0.0;
    Orientation orientation = Orientation::CCW;

    CircleArc(Cx c, double r, double a0, double a1, Orientation o);

    double sweep() const;  // signed, |sweep| <= 2*pi
    double length() const { return radius * std::abs(sweep()); }
    Cx point_at(double t) const; // t in [0,1] along the arc
    Cx start() const { return point_at(0.0); }
    Cx end() const { return point_at(1.0); }
};

// Both intersection points of C(c1;r1) and C(c2;r2), or nullopt when the
// circles are disjoint, nested, or tangent within tolerance.
std::optional<std::pair<Cx, Cx>> circle_circle_intersection(Cx c1, double r1, Cx c2, double r2);

// Segment-circle crossing parameters t in [0,1] with |a+t(b-a)-c| = r.
std::vector<double> segment_circle_params(Cx a, Cx b, Cx c, double r);

double signed_area(std::span<const Cx> loop);

bool segments_intersect(Cx a, Cx b, Cx c, Cx d);

} // namespace pk
