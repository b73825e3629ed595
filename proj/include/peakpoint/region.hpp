#pragma once

#include <memory>
#include <string>
#include <vector>

#include "peakpoint/geometry.hpp"

namespace pk {

enum class PointClass { Interior, Boundary, Exterior };
enum class BoundaryType { TypeI, TypeII };

struct Polygon {
    std::vector<Cx> vertices; // simple, CCW

    bool contains_closed(Cx p) const;
    double boundary_distance(Cx p, Cx* nearest = nullptr) const;
    double perimeter() const;
};

struct Segment {
    Cx a, b;
    double distance(Cx p, Cx* nearest = nullptr) const;
};

// One piece of K.  Polygons and disks are solid; segments and points are
// thin (empty interior).
struct Piece {
    enum class Kind { Polygon, Disk, Segment, Point } kind;
    Polygon poly;
    Disk disk{Cx(0.0), 1.0};
    Segment seg{Cx(0.0), Cx(0.0)};
    Cx point{0.0, 0.0};

    bool solid() const { return kind == Kind::Polygon || kind == Kind::Disk; }
    // distance to the piece as a set (0 inside solid pieces)
    double distance(Cx p, Cx* nearest = nullptr) const;
    // distance to the piece's topological boundary
    double boundary_distance(Cx p, Cx* nearest = nullptr) const;
};

struct KissingDisk {
    Cx contact;     // z
    Cx center;      // c_z = z + r_z u_z
    double radius;  // r_z in (0,1)
    Cx direction;   // u_z, unit
    bool radius_at_floor = false; // radius hit the 10*tol_b floor
};

struct BoundarySample {
    Cx point;
    BoundaryType type;
    std::size_t piece;
};

// The compact set K with connected complement.  Immutable once built; the
// constructor certifies complement connectedness by flood fill over a grid
// at the stated resolution.
class Region {
public:
    Region(std::vector<Piece> pieces, double resolution);

    const std::vector<Piece>& pieces() const { return pieces_; }
    double resolution() const { return h_; }
    double boundary_tol() const { return h_ / 100.0; }

    Cx bbox_min() const { return lo_; }
    Cx bbox_max() const { return hi_; }
    double diameter() const { return std::abs(hi_ - lo_); }

    PointClass contains(Cx p) const;
    // exact distance to K with one achieving point
    std::pair<double, Cx> distance(Cx p) const;
    // exact distance to the boundary of K (piece boundaries)
    std::pair<double, Cx> boundary_distance(Cx p) const;

    BoundaryType classify_boundary_point(Cx z) const;
    bool is_isolated_point(Cx z) const;
    bool has_interior() const;

    bool kissing_disk_check(Cx z, Cx c, double r) const;
    // Thm 4.9 proof procedure: returns a ca point within delta of z plus a
    // certified kissing disk at it.
    std::pair<Cx, KissingDisk> find_ca_near(Cx z, double delta) const;

    std::vector<BoundarySample> sample_boundary(double spacing) const;

    // Interior grid points of K at the given pitch (boundary band excluded),
    // row-major and deterministic.
    std::vector<Cx> interior_grid(double pitch) const;

private:
    std::vector<Piece> pieces_;
    double h_;
    Cx lo_, hi_;

    bool interior_near(Cx z, double radius, double step) const;
    void certify_complement_connected() const;
};

using RegionPtr = std::shared_ptr<const Region>;

} // namespace pk
