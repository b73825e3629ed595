#pragma once

#include "peakpoint/jordan.hpp"
#include "peakpoint/region.hpp"

namespace pk {

// Simple polyline from w1 to w2 through the complement of K, found by
// breadth-first search on a uniform grid and then chord-shortcut smoothed.
// Every vertex and edge midpoint keeps clearance >= pitch/2 from K.  The
// default pitch is the region resolution; kissing-path construction passes
// a finer pitch when the kissing disks are smaller than the raster.
std::vector<Cx> complement_path(const Region& K, Cx w1, Cx w2, double pitch = 0.0);

struct KissingPathResult {
    JordanCurve curve;
    double delta = 0.0;        // cover radius actually used
    double clearance = 0.0;    // min distance of off-contact samples to K
    KissingDisk kd1, kd2;      // possibly shrunk copies of the inputs
};

// Thm 6.2(a): Jordan curve through z1 and z2 whose remaining points and
// interior avoid K.  The construction follows the proof: diameter endpoints
// w_i = z_i + 2 r_i u_i, a complement path, truncation at the last/first
// kissing-circle crossings, a delta-cover of the truncated path, weak chain
// -> simple chain, and a counterclockwise arc walk through the chain circles
// closed through the two kissing circles.  delta is halved and the build
// retried (up to 6 times) if the assembly self-intersects.
KissingPathResult build_kissing_path(const Region& K, const KissingDisk& kd1, const KissingDisk& kd2);

// Def 6.1 certification: contacts on curve, off-contact clearance positive,
// interior samples exterior to K, winding +1 inside and 0 about K samples.
struct KissingPathCertificate {
    bool contacts_on_curve = false;
    double min_off_contact_clearance = 0.0;
    bool interior_avoids_K = false;
    bool winding_plus_one_inside = false;
    bool winding_zero_about_K = false;
    bool simple_at_4x = false;

    bool all_pass() const {
        return contacts_on_curve && min_off_contact_clearance > 0.0 && interior_avoids_K &&
               winding_plus_one_inside && winding_zero_about_K && simple_at_4x;
    }
};

KissingPathCertificate certify_kissing_path(const Region& K, const KissingPathResult& path);

// deterministic max-clearance interior point of the curve
Cx interior_anchor(const JordanCurve& curve);

} // namespace pk
