#include "peakpoint/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace pk {

Disk::Disk(Cx c, double r, bool cl) : center(c), radius(r), closed(cl) {
    require_finite(c, "Disk");
    if (!(r > 0.0)) fail(Err::ParameterOutOfRange, "disk radius must be positive");
}

bool Disk::contains(Cx p) const {
    const double d = std::abs(p - center);
    return closed ? d <= radius : d < radius;
}

namespace {
double normalize_sweep(double a0, double a1, Orientation o) {
    double s = a1 - a0;
    const double twoPi = 2.0 * kPi;
    if (o == Orientation::CCW) {
        while (s <= 0.0) s += twoPi;
        while (s > twoPi) s -= twoPi;
    } else {
        while (s >= 0.0) s -= twoPi;
        while (s < -twoPi) s += twoPi;
    }
    return s;
}
} // namespace

CircleArc::CircleArc(Cx c, double r, double a0, double a1, Orientation o)
    : center(c), radius(r), startAngle(a0), endAngle(a1), orientation(o) {
    require_finite(c, "CircleArc");
    if (!(r > 0.0)) fail(Err::ParameterOutOfRange, "arc radius must be positive");
}

double CircleArc::sweep() const { return normalize_sweep(startAngle, endAngle, orientation); }

Cx CircleArc::point_at(double t) const {
    return center + std::polar(radius, startAngle + t * sweep());
}

std::optional<std::pair<Cx, Cx>> circle_circle_intersection(Cx c1, double r1, Cx c2, double r2) {
    const double d = std::abs(c2 - c1);
    const double eps = 1e-13 * std::max({1.0, r1, r2, d});
    if (d <= eps) return std::nullopt;
    if (d >= r1 + r2 - eps) return std::nullopt;
    if (d <= std::abs(r1 - r2) + eps) return std::nullopt;
    const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    const double h2 = r1 * r1 - a * a;
    if (h2 <= 0.0) return std::nullopt;
    const double h = std::sqrt(h2);
    const Cx u = (c2 - c1) / d;
    const Cx m = c1 + a * u;
    const Cx n = Cx(-u.imag(), u.real()) * h;
    return std::make_pair(m + n, m - n);
}

std::vector<double> segment_circle_params(Cx a, Cx b, Cx c, double r) {
    const Cx d = b - a;
    const Cx f = a - c;
    const double A = std::norm(d);
    const double B = 2.0 * (f.real() * d.real() + f.imag() * d.imag());
    const double C = std::norm(f) - r * r;
    std::vector<double> out;
    if (A == 0.0) return out;
    const double disc = B * B - 4.0 * A * C;
    if (disc < 0.0) return out;
    const double s = std::sqrt(disc);
    for (double t : {(-B - s) / (2.0 * A), (-B + s) / (2.0 * A)}) {
        if (t >= 0.0 && t <= 1.0) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    if (out.size() == 2 && out[1] - out[0] < 1e-14) out.pop_back();
    return out;
}

double signed_area(std::span<const Cx> loop) {
    double a = 0.0;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Cx p = loop[i];
        const Cx q = loop[(i + 1) % n];
        a += p.real() * q.imag() - q.real() * p.imag();
    }
    return 0.5 * a;
}

namespace {
double cross(Cx o, Cx a, Cx b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}
} // namespace

bool segments_intersect(Cx a, Cx b, Cx c, Cx d) {
    const double d1 = cross(c, d, a);
    const double d2 = cross(c, d, b);
    const double d3 = cross(a, b, c);
    const double d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    return false;
}

} // namespace pk
