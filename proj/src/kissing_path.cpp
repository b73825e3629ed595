#include "peakpoint/kissing_path.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "peakpoint/chains.hpp"

namespace pk {

namespace {

bool chord_clear(const Region& K, Cx a, Cx b, double clearance, double step) {
    const double len = std::abs(b - a);
    const int n = std::max(1, static_cast<int>(std::ceil(len / step)));
    for (int k = 0; k <= n; ++k) {
        const Cx p = a + (b - a) * (static_cast<double>(k) / n);
        if (K.distance(p).first < clearance) return false;
    }
    return true;
}

bool polyline_simple(const std::vector<Cx>& pts) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        for (std::size_t j = i + 2; j + 1 < pts.size(); ++j)
            if (segments_intersect(pts[i], pts[i + 1], pts[j], pts[j + 1])) return false;
    return true;
}

std::vector<Cx> bfs_grid_path(const Region& K, Cx w1, Cx w2, double pitch, double x0, double y0,
                              double x1, double y1) {
    const long nx = std::lround((x1 - x0) / pitch) + 1;
    const long ny = std::lround((y1 - y0) / pitch) + 1;
    if (nx * ny > 30'000'000) fail(Err::NoPath, "path grid too large at this pitch");

    auto node = [&](long i, long j) { return Cx(x0 + i * pitch, y0 + j * pitch); };
    auto nearest = [&](Cx p) {
        return std::make_pair(std::lround((p.real() - x0) / pitch), std::lround((p.imag() - y0) / pitch));
    };

    std::vector<int32_t> parent(static_cast<std::size_t>(nx * ny), -2);
    std::vector<int8_t> freeCell(static_cast<std::size_t>(nx * ny), -1); // lazy
    auto idx = [&](long i, long j) { return static_cast<std::size_t>(j * nx + i); };
    auto isFree = [&](long i, long j) {
        if (i < 0 || j < 0 || i >= nx || j >= ny) return false;
        int8_t& f = freeCell[idx(i, j)];
        if (f < 0) f = K.distance(node(i, j)).first >= pitch ? 1 : 0;
        return f == 1;
    };

    const auto [si, sj] = nearest(w1);
    const auto [ti, tj] = nearest(w2);
    if (!isFree(si, sj) || !isFree(ti, tj))
        fail(Err::NoPath, "path endpoints land on blocked grid nodes");

    std::deque<std::pair<long, long>> queue;
    parent[idx(si, sj)] = -1;
    queue.emplace_back(si, sj);
    bool found = false;
    while (!queue.empty() && !found) {
        const auto [ci, cj] = queue.front();
        queue.pop_front();
        const long dirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const auto& d : dirs) {
            const long ni = ci + d[0], nj = cj + d[1];
            if (!isFree(ni, nj)) continue;
            if (parent[idx(ni, nj)] != -2) continue;
            parent[idx(ni, nj)] = static_cast<int32_t>(idx(ci, cj));
            if (ni == ti && nj == tj) {
                found = true;
                break;
            }
            queue.emplace_back(ni, nj);
        }
    }
    if (!found && !(si == ti && sj == tj)) fail(Err::NoPath, "no grid path in the complement");

    std::vector<Cx> pts;
    long ci = ti, cj = tj;
    while (true) {
        pts.push_back(node(ci, cj));
        const int32_t p = parent[idx(ci, cj)];
        if (p < 0) break;
        ci = static_cast<long>(p) % nx;
        cj = static_cast<long>(p) / nx;
    }
    std::reverse(pts.begin(), pts.end());
    pts.insert(pts.begin(), w1);
    pts.push_back(w2);
    return pts;
}

} // namespace

std::vector<Cx> complement_path(const Region& K, Cx w1, Cx w2, double pitch) {
    if (pitch <= 0.0) pitch = K.resolution();
    if (K.contains(w1) != PointClass::Exterior || K.contains(w2) != PointClass::Exterior)
        fail(Err::DomainViolation, "complement_path endpoints must be exterior to K");
    if (K.distance(w1).first < 2.0 * pitch || K.distance(w2).first < 2.0 * pitch)
        fail(Err::DomainViolation, "complement_path endpoints need clearance >= 2*pitch");
    if (std::abs(w1 - w2) < 1e-15) return {w1};

    // local box first, expanding on failure; keeps fine-pitch searches cheap
    std::vector<Cx> raw;
    const double gx0 = std::min({K.bbox_min().real(), w1.real(), w2.real()}) - 8.0 * pitch;
    const double gy0 = std::min({K.bbox_min().imag(), w1.imag(), w2.imag()}) - 8.0 * pitch;
    const double gx1 = std::max({K.bbox_max().real(), w1.real(), w2.real()}) + 8.0 * pitch;
    const double gy1 = std::max({K.bbox_max().imag(), w1.imag(), w2.imag()}) + 8.0 * pitch;
    double margin = std::max(20.0 * pitch, 0.5 * std::abs(w1 - w2));
    for (int attempt = 0;; ++attempt) {
        const double x0 = std::max(gx0, std::min(w1.real(), w2.real()) - margin);
        const double x1 = std::min(gx1, std::max(w1.real(), w2.real()) + margin);
        const double y0 = std::max(gy0, std::min(w1.imag(), w2.imag()) - margin);
        const double y1 = std::min(gy1, std::max(w1.imag(), w2.imag()) + margin);
        const bool global = x0 == gx0 && x1 == gx1 && y0 == gy0 && y1 == gy1;
        try {
            raw = bfs_grid_path(K, w1, w2, pitch, x0, y0, x1, y1);
            break;
        } catch (const PkError& e) {
            if (e.code() != Err::NoPath || global || attempt >= 16) throw;
            margin *= 2.0;
        }
    }

    // chord-shortcut smoothing, clearance-preserving
    std::vector<Cx> out;
    out.push_back(raw.front());
    std::size_t i = 0;
    while (i + 1 < raw.size()) {
        std::size_t best = i + 1;
        for (std::size_t j = raw.size() - 1; j > i + 1; --j) {
            if (chord_clear(K, raw[i], raw[j], pitch / 2.0, pitch / 4.0)) {
                best = j;
                break;
            }
        }
        out.push_back(raw[best]);
        i = best;
    }
    if (!polyline_simple(out)) return raw;
    return out;
}

namespace {

struct TruncatedPath {
    std::vector<Cx> pts; // from zeta1 to zeta2
    Cx zeta1, zeta2;
};

// Cut the path at the last crossing of circle 1 and the first crossing of
// circle 2 not before it (the sup/inf of the proof, ordered).
TruncatedPath truncate_at_circles(const std::vector<Cx>& path, Cx c1, double r1, Cx c2, double r2) {
    struct Crossing {
        double g; // global parameter seg + t
        std::size_t seg;
        Cx p;
    };
    auto crossings = [&](Cx c, double r) {
        std::vector<Crossing> out;
        for (std::size_t s = 0; s + 1 < path.size(); ++s)
            for (double t : segment_circle_params(path[s], path[s + 1], c, r))
                out.push_back({static_cast<double>(s) + t, s, path[s] + t * (path[s + 1] - path[s])});
        return out;
    };

    const auto x1 = crossings(c1, r1);
    const auto x2 = crossings(c2, r2);
    if (x2.empty()) fail(Err::IntersectionNotFound, "path never reaches the second kissing circle");

    Crossing l{0.0, 0, path.front()};
    if (!x1.empty()) l = x1.back();
    const Crossing* u = nullptr;
    for (const auto& c : x2)
        if (c.g >= l.g) {
            u = &c;
            break;
        }
    if (!u) fail(Err::IntersectionNotFound, "kissing circles cross the path out of order");

    TruncatedPath out;
    out.zeta1 = l.p;
    out.zeta2 = u->p;
    out.pts.push_back(l.p);
    for (std::size_t s = l.seg + 1; s <= u->seg; ++s) out.pts.push_back(path[s]);
    out.pts.push_back(u->p);
    // drop duplicate consecutive points
    std::vector<Cx> clean;
    for (const Cx& p : out.pts)
        if (clean.empty() || std::abs(p - clean.back()) > 1e-13) clean.push_back(p);
    out.pts = std::move(clean);
    return out;
}

std::vector<Cx> greedy_centers(const std::vector<Cx>& path, double hop) {
    std::vector<Cx> centers;
    centers.push_back(path.front());
    double carried = 0.0;
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
        Cx a = path[s];
        const Cx b = path[s + 1];
        double segLen = std::abs(b - a);
        while (carried + segLen >= hop) {
            const double need = hop - carried;
            a = a + (b - a) * (need / segLen);
            centers.push_back(a);
            segLen -= need;
            carried = 0.0;
        }
        carried += segLen;
    }
    if (std::abs(centers.back() - path.back()) > 1e-13) centers.push_back(path.back());
    return centers;
}

// CCW angular offset from `from` to `to` in (eps, 2*pi]
double ccw_offset(double from, double to) {
    double d = to - from;
    const double twoPi = 2.0 * kPi;
    while (d <= 1e-10) d += twoPi;
    while (d > twoPi) d -= twoPi;
    return d;
}

struct UCircle {
    Cx c;
    double r;
};

// Neighbor lookup over circle centers so the boundary walk stays near-linear.
class CircleIndex {
public:
    explicit CircleIndex(const std::vector<UCircle>& circles) : circles_(circles) {
        double rmax = 0.0;
        for (const auto& u : circles) rmax = std::max(rmax, u.r);
        cell_ = 2.0 * rmax;
        for (std::size_t i = 0; i < circles.size(); ++i)
            grid_.emplace_back(key(circles[i].c), i);
        std::sort(grid_.begin(), grid_.end());
    }

    // indices of circles whose centers lie within 2*rmax-ish of p
    void near(Cx p, std::vector<std::size_t>& out) const {
        out.clear();
        const auto k = key(p);
        for (long dx = -1; dx <= 1; ++dx) {
            for (long dy = -1; dy <= 1; ++dy) {
                const auto nk = std::make_pair(k.first + dx, k.second + dy);
                auto it = std::lower_bound(grid_.begin(), grid_.end(),
                                           std::make_pair(nk, std::size_t(0)));
                for (; it != grid_.end() && it->first == nk; ++it) out.push_back(it->second);
            }
        }
    }

private:
    const std::vector<UCircle>& circles_;
    double cell_;
    std::vector<std::pair<std::pair<long, long>, std::size_t>> grid_;

    std::pair<long, long> key(Cx p) const {
        return {static_cast<long>(std::floor(p.real() / cell_)),
                static_cast<long>(std::floor(p.imag() / cell_))};
    }
};

// Trace the outer boundary of the union of disks counterclockwise starting
// from `start` on circle 0, splitting arcs at `mark` (which lies on the
// boundary) so it becomes an explicit vertex.  Arc walk of the proof: each
// emitted arc runs CCW along one circle between junction points.
std::vector<CircleArc> walk_union_boundary(const std::vector<UCircle>& circles, Cx start, Cx mark) {
    const std::size_t n = circles.size();
    std::vector<CircleArc> arcs;
    std::size_t cur = 0;
    double angle = std::arg(start - circles[0].c);
    const CircleIndex index(circles);
    std::vector<std::size_t> nearCur, nearQ;

    auto strictly_inside = [&](Cx q, std::size_t skipA, std::size_t skipB) {
        index.near(q, nearQ);
        for (std::size_t k : nearQ) {
            if (k == skipA || k == skipB) continue;
            if (std::abs(q - circles[k].c) < circles[k].r - 1e-11) return true;
        }
        return false;
    };

    Cx prevQ(std::numeric_limits<double>::quiet_NaN(), 0.0);
    const std::size_t limit = 4 * n + 64;
    for (std::size_t step = 0; step < limit; ++step) {
        double bestOff = std::numeric_limits<double>::infinity();
        Cx bestQ;
        std::size_t bestJ = cur;
        index.near(circles[cur].c, nearCur);
        for (std::size_t j : nearCur) {
            if (j == cur) continue;
            // canonical argument order: both walk directions must compute a
            // junction to identical bits, or the arrival point re-triggers
            const std::size_t a = std::min(cur, j), b = std::max(cur, j);
            const auto hit =
                circle_circle_intersection(circles[a].c, circles[a].r, circles[b].c, circles[b].r);
            if (!hit) continue;
            for (const Cx& q : {hit->first, hit->second}) {
                if (strictly_inside(q, cur, j)) continue;
                const double off = ccw_offset(angle, std::arg(q - circles[cur].c));
                if (off < bestOff) {
                    bestOff = off;
                    bestQ = q;
                    bestJ = j;
                }
            }
        }

        // closing event: back to the start point on circle 0
        if (cur == 0) {
            const double offStart = ccw_offset(angle, std::arg(start - circles[0].c));
            if (offStart <= bestOff && step > 0) {
                arcs.emplace_back(circles[cur].c, circles[cur].r, angle,
                                  std::arg(start - circles[0].c), Orientation::CCW);
                return arcs;
            }
        }
        // mark event: pass through the marked contact point
        if (cur == n - 1) {
            const double offMark = ccw_offset(angle, std::arg(mark - circles[cur].c));
            if (offMark < bestOff) {
                arcs.emplace_back(circles[cur].c, circles[cur].r, angle,
                                  std::arg(mark - circles[cur].c), Orientation::CCW);
                angle = std::arg(mark - circles[cur].c);
                continue;
            }
        }
        if (bestJ == cur) fail(Err::IntersectionNotFound, "boundary walk found no junction");
        if (is_finite(prevQ) && std::abs(bestQ - prevQ) < 1e-11)
            fail(Err::IntersectionNotFound, "boundary walk stuck at a degenerate junction");
        arcs.emplace_back(circles[cur].c, circles[cur].r, angle, std::arg(bestQ - circles[cur].c),
                          Orientation::CCW);
        prevQ = bestQ;
        cur = bestJ;
        angle = std::arg(bestQ - circles[cur].c);
    }
    fail(Err::IntersectionNotFound, "boundary walk failed to close");
}

KissingDisk shrink_disk(const KissingDisk& kd, double newRadius) {
    KissingDisk out = kd;
    out.radius = newRadius;
    out.center = kd.contact + newRadius * kd.direction;
    return out;
}

} // namespace

KissingPathResult build_kissing_path(const Region& K, const KissingDisk& kd1in, const KissingDisk& kd2in) {
    if (std::abs(kd1in.contact - kd2in.contact) < 1e-12)
        fail(Err::ParameterOutOfRange, "kissing path needs distinct contact points");

    const Cx z1 = kd1in.contact, z2 = kd2in.contact;
    const double gap = std::abs(z1 - z2);

    // shrink so the closed kissing disks are disjoint
    KissingDisk kd1 = shrink_disk(kd1in, std::min(kd1in.radius, gap / 8.0));
    KissingDisk kd2 = shrink_disk(kd2in, std::min(kd2in.radius, gap / 8.0));
    if (!K.kissing_disk_check(kd1.contact, kd1.center, kd1.radius) ||
        !K.kissing_disk_check(kd2.contact, kd2.center, kd2.radius))
        fail(Err::ParameterOutOfRange, "kissing disks failed certification after shrinking");

    const double pitch = std::min({K.resolution(), kd1.radius / 2.0, kd2.radius / 2.0});

    const Cx w1 = z1 + 2.0 * kd1.radius * kd1.direction;
    const Cx w2 = z2 + 2.0 * kd2.radius * kd2.direction;
    const auto path = complement_path(K, w1, w2, pitch);
    const auto trunc = truncate_at_circles(path, kd1.center, kd1.radius, kd2.center, kd2.radius);

    double clearance = std::numeric_limits<double>::infinity();
    for (const Cx& p : trunc.pts) clearance = std::min(clearance, K.distance(p).first);

    double delta = std::min({pitch / 2.0, clearance / 3.0, kd1.radius / 4.0, kd2.radius / 4.0});
    if (std::abs(trunc.zeta1 - trunc.zeta2) < 2.0 * delta)
        delta = std::abs(trunc.zeta1 - trunc.zeta2) / 2.5;
    if (!(delta > 0.0)) fail(Err::DegenerateChain, "no room for a cover between the kissing circles");

    PkError lastErr(Err::Internal, "unreachable");
    for (int attempt = 0; attempt < 6; ++attempt, delta *= 0.5) {
        try {
            const auto centers = greedy_centers(trunc.pts, 1.2 * delta);
            std::vector<Disk> disks;
            disks.reserve(centers.size());
            for (const Cx& c : centers) disks.emplace_back(c, delta);
            DiskCover cover(std::move(disks));
            Chain chain = simplify_chain(cover, weak_chain(cover, trunc.zeta1, trunc.zeta2));

            // circles for the arc walk: kissing circle 1, the chain circles,
            // kissing circle 2; the walk closes through z1 and passes z2
            std::vector<UCircle> circles;
            circles.push_back({kd1.center, kd1.radius});
            for (std::size_t idx : chain.indices)
                circles.push_back({cover.disks()[idx].center, delta});
            circles.push_back({kd2.center, kd2.radius});

            // hyper-degenerate tangencies defeat the junction arithmetic;
            // shrink delta and rebuild instead of walking through them
            for (std::size_t i = 0; i < circles.size(); ++i) {
                for (std::size_t j = i + 1; j < circles.size(); ++j) {
                    const double d = std::abs(circles[i].c - circles[j].c);
                    const double sum = circles[i].r + circles[j].r;
                    if (std::abs(d - sum) < 1e-4 * std::min(circles[i].r, circles[j].r))
                        fail(Err::IntersectionNotFound, "near-tangent circle pair in the cover");
                }
            }

            auto arcs = walk_union_boundary(circles, z1, z2);

            const std::size_t sampleBudget = std::max<std::size_t>(2048, 8 * arcs.size());
            JordanCurve curve(std::move(arcs), {z1, z2}, sampleBudget);

            KissingPathResult result{std::move(curve), delta, 0.0, kd1, kd2};
            // off-contact clearance of the assembled curve
            double minClear = std::numeric_limits<double>::infinity();
            for (const Cx& s : result.curve.samples()) {
                if (std::abs(s - z1) < 1e-12 || std::abs(s - z2) < 1e-12) continue;
                minClear = std::min(minClear, K.distance(s).first);
            }
            result.clearance = minClear;
            if (!(minClear > 0.0))
                fail(Err::NumericalBreakdown, "curve sample touches K away from the contacts");
            return result;
        } catch (const PkError& e) {
            lastErr = e;
            if (e.code() == Err::NotLinked || e.code() == Err::NoPath) throw;
        }
    }
    throw lastErr;
}

KissingPathCertificate certify_kissing_path(const Region& K, const KissingPathResult& path) {
    KissingPathCertificate cert;
    const auto& curve = path.curve;
    const Cx z1 = path.kd1.contact, z2 = path.kd2.contact;

    cert.contacts_on_curve = curve.distance(z1) <= 1e-9 && curve.distance(z2) <= 1e-9;

    double minClear = std::numeric_limits<double>::infinity();
    for (const Cx& s : curve.samples()) {
        if (std::abs(s - z1) < 1e-12 || std::abs(s - z2) < 1e-12) continue;
        minClear = std::min(minClear, K.distance(s).first);
    }
    cert.min_off_contact_clearance = minClear;

    // a coarser loop is enough for winding probes and much cheaper
    const auto loop = curve.resample(std::max<std::size_t>(
        4096, static_cast<std::size_t>(curve.length() / (0.25 * path.delta))));

    // interior probes: points with winding +1 must be exterior to K
    cert.winding_plus_one_inside = true;
    cert.interior_avoids_K = true;
    int interiorSeen = 0;
    const std::size_t n = loop.size();
    for (std::size_t k = 8; k + 8 < n; k += std::max<std::size_t>(16, n / 256)) {
        const Cx tang = loop[k + 1] - loop[k - 1];
        const double tl = std::abs(tang);
        if (tl == 0.0) continue;
        const Cx normal = Cx(-tang.imag(), tang.real()) / tl;
        const Cx probe = loop[k] + normal * (path.delta * 0.5);
        int w;
        try {
            w = winding_number(loop, probe);
        } catch (const PkError&) {
            continue;
        }
        if (w == 0) continue;
        ++interiorSeen;
        if (w != 1) cert.winding_plus_one_inside = false;
        if (K.contains(probe) != PointClass::Exterior) cert.interior_avoids_K = false;
    }
    if (interiorSeen == 0) cert.winding_plus_one_inside = false;

    // K stays exterior: winding 0 about boundary samples of K off the contacts
    cert.winding_zero_about_K = true;
    int kchecked = 0;
    for (const auto& bs : K.sample_boundary(std::max(K.resolution() * 4.0, K.diameter() / 64.0))) {
        if (std::abs(bs.point - z1) < 4.0 * K.resolution() ||
            std::abs(bs.point - z2) < 4.0 * K.resolution())
            continue;
        try {
            if (winding_number(loop, bs.point) != 0) cert.winding_zero_about_K = false;
            ++kchecked;
        } catch (const PkError&) {
            continue;
        }
    }
    if (kchecked == 0) cert.winding_zero_about_K = false;

    cert.simple_at_4x = curve.is_simple_at(curve.samples().size() * 4);
    return cert;
}

Cx interior_anchor(const JordanCurve& curve) {
    // Probe inward-normal offsets of curve samples; a thin tube interior
    // would slip through any bounding-box grid.
    const auto loop = curve.resample(std::max<std::size_t>(2048, curve.arcs().size() * 4));
    const std::size_t n = loop.size();
    Cx best(0.0, 0.0);
    double bestClear = -1.0;
    for (std::size_t k = 0; k < n; k += std::max<std::size_t>(1, n / 256)) {
        const Cx tang = loop[(k + 1) % n] - loop[(k + n - 1) % n];
        const double tl = std::abs(tang);
        if (tl == 0.0) continue;
        const Cx normal = Cx(-tang.imag(), tang.real()) / tl;
        for (double frac : {0.3, 0.6, 1.2, 2.5}) {
            const Cx p = loop[k] + normal * (frac * curve.sample_pitch() * 4.0);
            const double clear = polyline_distance(loop, p);
            if (clear <= bestClear) continue;
            try {
                if (winding_number(loop, p) == 1) {
                    best = p;
                    bestClear = clear;
                }
            } catch (const PkError&) {
            }
        }
    }
    if (bestClear <= 0.0) fail(Err::Degenerate, "no interior anchor found");
    return best;
}

} // namespace pk
