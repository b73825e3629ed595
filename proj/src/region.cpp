#include "peakpoint/region.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace pk {

namespace {
double point_segment_distance(Cx p, Cx a, Cx b, Cx* nearest) {
    const Cx ab = b - a;
    const double len2 = std::norm(ab);
    double t = 0.0;
    if (len2 > 0.0) {
        t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
        t = std::clamp(t, 0.0, 1.0);
    }
    const Cx q = a + t * ab;
    if (nearest) *nearest = q;
    return std::abs(p - q);
}
} // namespace

bool Polygon::contains_closed(Cx p) const {
    if (boundary_distance(p) <= 1e-13) return true;
    // crossing parity
    bool inside = false;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Cx& vi = vertices[i];
        const Cx& vj = vertices[j];
        if ((vi.imag() > p.imag()) != (vj.imag() > p.imag())) {
            const double x =
                vj.real() + (p.imag() - vj.imag()) / (vi.imag() - vj.imag()) * (vi.real() - vj.real());
            if (p.real() < x) inside = !inside;
        }
    }
    return inside;
}

double Polygon::boundary_distance(Cx p, Cx* nearest) const {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        Cx q;
        const double d = point_segment_distance(p, vertices[i], vertices[(i + 1) % n], &q);
        if (d < best) {
            best = d;
            if (nearest) *nearest = q;
        }
    }
    return best;
}

double Polygon::perimeter() const {
    double len = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) len += std::abs(vertices[(i + 1) % n] - vertices[i]);
    return len;
}

double Segment::distance(Cx p, Cx* nearest) const { return point_segment_distance(p, a, b, nearest); }

double Piece::distance(Cx p, Cx* nearest) const {
    switch (kind) {
        case Kind::Polygon:
            if (poly.contains_closed(p)) {
                if (nearest) *nearest = p;
                return 0.0;
            }
            return poly.boundary_distance(p, nearest);
        case Kind::Disk: {
            const double d = std::abs(p - disk.center);
            if (d <= disk.radius) {
                if (nearest) *nearest = p;
                return 0.0;
            }
            if (nearest) *nearest = disk.center + disk.radius * (p - disk.center) / d;
            return d - disk.radius;
        }
        case Kind::Segment:
            return seg.distance(p, nearest);
        case Kind::Point:
            if (nearest) *nearest = point;
            return std::abs(p - point);
    }
    fail(Err::Internal, "unreachable piece kind");
}

double Piece::boundary_distance(Cx p, Cx* nearest) const {
    switch (kind) {
        case Kind::Polygon:
            return poly.boundary_distance(p, nearest);
        case Kind::Disk: {
            const double d = std::abs(p - disk.center);
            if (d == 0.0) {
                if (nearest) *nearest = disk.center + Cx(disk.radius, 0.0);
                return disk.radius;
            }
            if (nearest) *nearest = disk.center + disk.radius * (p - disk.center) / d;
            return std::abs(d - disk.radius);
        }
        case Kind::Segment:
            return seg.distance(p, nearest);
        case Kind::Point:
            if (nearest) *nearest = point;
            return std::abs(p - point);
    }
    fail(Err::Internal, "unreachable piece kind");
}

Region::Region(std::vector<Piece> pieces, double resolution) : pieces_(std::move(pieces)), h_(resolution) {
    if (pieces_.empty()) fail(Err::InvalidRegion, "region has no pieces");
    if (!(h_ > 0.0)) fail(Err::InvalidRegion, "resolution must be positive");

    double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
    double x1 = -x0, y1 = -x0;
    auto expand = [&](Cx p) {
        require_finite(p, "Region");
        x0 = std::min(x0, p.real());
        y0 = std::min(y0, p.imag());
        x1 = std::max(x1, p.real());
        y1 = std::max(y1, p.imag());
    };

    for (auto& pc : pieces_) {
        switch (pc.kind) {
            case Piece::Kind::Polygon: {
                auto& poly = pc.poly;
                if (poly.vertices.size() < 3) fail(Err::InvalidRegion, "polygon needs >= 3 vertices");
                const double area = signed_area(poly.vertices);
                if (std::abs(area) < 1e-14) fail(Err::InvalidRegion, "polygon has no area");
                if (area < 0.0) std::reverse(poly.vertices.begin(), poly.vertices.end());
                const std::size_t n = poly.vertices.size();
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = i + 1; j < n; ++j) {
                        if (i == 0 && j == n - 1) continue;
                        if (j == i + 1) continue;
                        if (segments_intersect(poly.vertices[i], poly.vertices[(i + 1) % n],
                                               poly.vertices[j], poly.vertices[(j + 1) % n]))
                            fail(Err::InvalidRegion, "polygon is self-intersecting");
                    }
                }
                for (const Cx& v : poly.vertices) expand(v);
                break;
            }
            case Piece::Kind::Disk:
                expand(pc.disk.center - Cx(pc.disk.radius, pc.disk.radius));
                expand(pc.disk.center + Cx(pc.disk.radius, pc.disk.radius));
                break;
            case Piece::Kind::Segment:
                expand(pc.seg.a);
                expand(pc.seg.b);
                break;
            case Piece::Kind::Point:
                expand(pc.point);
                break;
        }
    }
    lo_ = Cx(x0, y0);
    hi_ = Cx(x1, y1);

    // non-overlapping solid interiors, checked at grid resolution
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
            if (!pieces_[i].solid() || !pieces_[j].solid()) continue;
            for (double x = x0; x <= x1; x += h_) {
                for (double y = y0; y <= y1; y += h_) {
                    const Cx p(x, y);
                    Cx q;
                    const bool ini = pieces_[i].distance(p, &q) == 0.0 &&
                                     pieces_[i].boundary_distance(p) > boundary_tol();
                    if (!ini) continue;
                    const bool inj = pieces_[j].distance(p, &q) == 0.0 &&
                                     pieces_[j].boundary_distance(p) > boundary_tol();
                    if (inj) fail(Err::InvalidRegion, "solid pieces overlap");
                }
            }
        }
    }

    certify_complement_connected();
}

void Region::certify_complement_connected() const {
    const double margin = 2.0 * h_;
    const double x0 = lo_.real() - margin, y0 = lo_.imag() - margin;
    const double x1 = hi_.real() + margin, y1 = hi_.imag() + margin;
    const long nx = std::lround((x1 - x0) / h_) + 1;
    const long ny = std::lround((y1 - y0) / h_) + 1;
    if (nx * ny > 16'000'000) fail(Err::InvalidRegion, "resolution too fine to certify connectivity");

    std::vector<uint8_t> state(static_cast<std::size_t>(nx * ny), 0); // 0 blocked, 1 free, 2 seen
    auto at = [&](long i, long j) -> uint8_t& { return state[static_cast<std::size_t>(j * nx + i)]; };
    for (long j = 0; j < ny; ++j)
        for (long i = 0; i < nx; ++i)
            if (contains(Cx(x0 + i * h_, y0 + j * h_)) == PointClass::Exterior) at(i, j) = 1;

    std::deque<std::pair<long, long>> queue;
    auto push = [&](long i, long j) {
        if (i < 0 || j < 0 || i >= nx || j >= ny) return;
        if (at(i, j) != 1) return;
        at(i, j) = 2;
        queue.emplace_back(i, j);
    };
    for (long i = 0; i < nx; ++i) {
        push(i, 0);
        push(i, ny - 1);
    }
    for (long j = 0; j < ny; ++j) {
        push(0, j);
        push(nx - 1, j);
    }
    if (queue.empty()) fail(Err::InvalidRegion, "bounding frame is not exterior");
    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        push(i + 1, j);
        push(i - 1, j);
        push(i, j + 1);
        push(i, j - 1);
    }
    for (long j = 0; j < ny; ++j)
        for (long i = 0; i < nx; ++i)
            if (at(i, j) == 1)
                fail(Err::InvalidRegion, "complement is disconnected at the stated resolution");
}

PointClass Region::contains(Cx p) const {
    require_finite(p, "Region::contains");
    const double tol = boundary_tol();

    bool insideSolid = false;
    double solidBoundary = std::numeric_limits<double>::infinity();
    double anyDist = std::numeric_limits<double>::infinity();
    for (const auto& pc : pieces_) {
        anyDist = std::min(anyDist, pc.distance(p));
        if (pc.solid()) {
            solidBoundary = std::min(solidBoundary, pc.boundary_distance(p));
            if (!insideSolid && pc.distance(p) == 0.0) insideSolid = true;
        }
    }
    if (insideSolid) return solidBoundary <= tol ? PointClass::Boundary : PointClass::Interior;
    return anyDist <= tol ? PointClass::Boundary : PointClass::Exterior;
}

std::pair<double, Cx> Region::distance(Cx p) const {
    require_finite(p, "Region::distance");
    double best = std::numeric_limits<double>::infinity();
    Cx bestPoint = p;
    for (const auto& pc : pieces_) {
        Cx q;
        const double d = pc.distance(p, &q);
        if (d < best) {
            best = d;
            bestPoint = q;
        }
    }
    return {best, bestPoint};
}

std::pair<double, Cx> Region::boundary_distance(Cx p) const {
    double best = std::numeric_limits<double>::infinity();
    Cx bestPoint = p;
    for (const auto& pc : pieces_) {
        Cx q;
        const double d = pc.boundary_distance(p, &q);
        if (d < best) {
            best = d;
            bestPoint = q;
        }
    }
    return {best, bestPoint};
}

bool Region::interior_near(Cx z, double radius, double step) const {
    for (double dx = -radius; dx <= radius; dx += step) {
        for (double dy = -radius; dy <= radius; dy += step) {
            if (dx * dx + dy * dy > radius * radius) continue;
            if (contains(z + Cx(dx, dy)) == PointClass::Interior) return true;
        }
    }
    return false;
}

BoundaryType Region::classify_boundary_point(Cx z) const {
    if (contains(z) != PointClass::Boundary)
        fail(Err::DomainViolation, "classify_boundary_point needs a boundary point");
    const bool coarse = interior_near(z, h_, h_ / 8.0);
    const bool fine = interior_near(z, h_ / 2.0, h_ / 16.0);
    if (coarse != fine)
        fail(Err::ResolutionDisagreement, "boundary classification differs between h and h/2");
    return coarse ? BoundaryType::TypeI : BoundaryType::TypeII;
}

bool Region::is_isolated_point(Cx z) const {
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto& pc = pieces_[i];
        if (pc.kind != Piece::Kind::Point) continue;
        if (std::abs(pc.point - z) > boundary_tol()) continue;
        double other = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < pieces_.size(); ++j)
            if (j != i) other = std::min(other, pieces_[j].distance(pc.point));
        return other > 10.0 * boundary_tol();
    }
    return false;
}

bool Region::has_interior() const {
    for (const auto& pc : pieces_)
        if (pc.solid()) return true;
    return false;
}

bool Region::kissing_disk_check(Cx z, Cx c, double r) const {
    if (!(r > 0.0)) return false;
    const double tol = 1e-9;
    if (std::abs(std::abs(c - z) - r) > tol) return false;
    for (const auto& pc : pieces_) {
        Cx q;
        const double d = pc.distance(c, &q);
        if (d < r - tol) return false;
        if (d <= r + tol && std::abs(q - z) > tol) return false;
    }
    const auto [d, q] = distance(c);
    return d >= r - tol && std::abs(q - z) <= tol;
}

std::pair<Cx, KissingDisk> Region::find_ca_near(Cx z, double delta) const {
    if (!(delta > 0.0)) fail(Err::ParameterOutOfRange, "find_ca_near needs delta > 0");
    // Sweep 64 directions x 8 radii in D(z;delta/2) and keep the exterior
    // probe with the largest clearance; ties resolve in sweep order, so runs
    // are reproducible.  First-hit probes tend to hug edges and force
    // needlessly small kissing disks on everything downstream.
    bool found = false;
    Cx bestProbe;
    double bestClear = 0.0;
    for (int ai = 0; ai < 64; ++ai) {
        const double ang = 2.0 * kPi * ai / 64.0;
        for (int ri = 1; ri <= 8; ++ri) {
            const double rad = 0.5 * delta * ri / 8.0;
            const Cx z1 = z + std::polar(rad, ang);
            if (contains(z1) != PointClass::Exterior) continue;
            const double d1 = distance(z1).first;
            if (d1 > bestClear) {
                bestClear = d1;
                bestProbe = z1;
                found = true;
            }
        }
    }
    if (!found)
        fail(Err::NoExteriorPointFound, "no exterior probe found in D(z;delta/2); refine the resolution");

    const auto [d1, z2] = distance(bestProbe);
    // midpoint of (z1, z2) kisses K at z2; cap the radius per Def 4.8
    const double r = std::min(0.5 * d1, 0.9);
    const Cx u = (bestProbe - z2) / d1;
    const Cx c = z2 + r * u;
    if (!kissing_disk_check(z2, c, r))
        fail(Err::SearchFailed, "kissing disk certification failed at the best probe");
    if (std::abs(z2 - z) >= delta) fail(Err::SearchFailed, "contact escaped D(z;delta)");
    KissingDisk kd;
    kd.contact = z2;
    kd.center = c;
    kd.radius = r;
    kd.direction = u;
    kd.radius_at_floor = r <= 10.0 * boundary_tol();
    return {z2, kd};
}

std::vector<BoundarySample> Region::sample_boundary(double spacing) const {
    if (!(spacing > 0.0)) fail(Err::ParameterOutOfRange, "spacing must be positive");
    std::vector<BoundarySample> out;
    auto emit = [&](Cx p, std::size_t pieceIdx) {
        if (contains(p) != PointClass::Boundary) return; // swallowed by another piece
        out.push_back({p, classify_boundary_point(p), pieceIdx});
    };
    for (std::size_t pi = 0; pi < pieces_.size(); ++pi) {
        const auto& pc = pieces_[pi];
        switch (pc.kind) {
            case Piece::Kind::Polygon: {
                const auto& vs = pc.poly.vertices;
                const std::size_t n = vs.size();
                for (std::size_t i = 0; i < n; ++i) {
                    const Cx a = vs[i], b = vs[(i + 1) % n];
                    const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / spacing)));
                    for (int k = 0; k < steps; ++k)
                        emit(a + (b - a) * (static_cast<double>(k) / steps), pi);
                }
                break;
            }
            case Piece::Kind::Disk: {
                const double r = pc.disk.radius;
                const int steps = std::max(8, static_cast<int>(std::ceil(2.0 * kPi * r / spacing)));
                for (int k = 0; k < steps; ++k)
                    emit(pc.disk.center + std::polar(r, 2.0 * kPi * k / steps), pi);
                break;
            }
            case Piece::Kind::Segment: {
                const double len = std::abs(pc.seg.b - pc.seg.a);
                const int steps = std::max(1, static_cast<int>(std::ceil(len / spacing)));
                for (int k = 0; k <= steps; ++k)
                    emit(pc.seg.a + (pc.seg.b - pc.seg.a) * (static_cast<double>(k) / steps), pi);
                break;
            }
            case Piece::Kind::Point:
                emit(pc.point, pi);
                break;
        }
    }
    return out;
}

std::vector<Cx> Region::interior_grid(double pitch) const {
    if (!(pitch > 0.0)) fail(Err::ParameterOutOfRange, "pitch must be positive");
    std::vector<Cx> out;
    for (double y = lo_.imag(); y <= hi_.imag() + 1e-12; y += pitch) {
        for (double x = lo_.real(); x <= hi_.real() + 1e-12; x += pitch) {
            const Cx p(x, y);
            if (contains(p) == PointClass::Interior) out.push_back(p);
        }
    }
    return out;
}

} // namespace pk
