#include "peakpoint/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pk {

namespace {

// sqrt on the branch with argument in (0, 2pi): maps C \ [0,inf) into H
inline Cx sqrt_upper(Cx w) {
    const Cx r = std::sqrt(-w); // principal
    return Cx(0.0, 1.0) * r;
}

// vertical slit map H \ [0, ib] -> H for interior points, ~z at infinity
inline Cx slit_interior(Cx z, double b) { return sqrt_upper(z * z + b * b); }

// real-axis image under the slit map, by the boundary limit from H
inline double slit_real(double x, double b) {
    const double v = std::sqrt(x * x + b * b);
    return x >= 0.0 ? v : -v;
}

struct TrackedReal {
    bool inf = false;
    double x = 0.0;
};

} // namespace

DiscreteConformalMap DiscreteConformalMap::build(std::vector<Cx> points, Cx basepoint) {
    const std::size_t n = points.size();
    if (n < 8) fail(Err::ParameterOutOfRange, "conformal map needs at least 8 boundary points");
    require_finite(basepoint, "DiscreteConformalMap");

    DiscreteConformalMap map;
    map.pts_ = std::move(points);
    map.base_ = basepoint;
    const Cx z0 = map.pts_[0];
    const Cx z1 = map.pts_[1];

    // Initial map sqrt((z - z1)/(z - z0)) with the branch cut along the
    // image ray of the retired boundary arc between z0 and z1, oriented so
    // the interior lands in the upper half-plane.
    const Cx mid = 0.5 * (z0 + z1);
    const double mu = std::arg((mid - z1) / (mid - z0));
    map.cutRot_ = std::polar(1.0, -mu);
    map.cutBranch_ = std::polar(1.0, 0.5 * mu);
    {
        const Cx probe = map.cutBranch_ * std::sqrt(map.cutRot_ * (basepoint - z1) / (basepoint - z0));
        if (probe.imag() < 0.0) map.cutBranch_ = -map.cutBranch_;
    }
    auto phi1 = [&map, z0, z1](Cx z) {
        return map.cutBranch_ * std::sqrt(map.cutRot_ * (z - z1) / (z - z0));
    };

    // unzipped images in H for k >= 2
    std::vector<Cx> w(n);
    for (std::size_t k = 2; k < n; ++k) w[k] = phi1(map.pts_[k]);
    Cx wb = phi1(basepoint);

    // flattened boundary images; index 0 stays at infinity until a step
    // moves it onto the real axis
    std::vector<TrackedReal> flat(n);
    flat[0].inf = true;
    flat[1] = {false, 0.0};

    map.steps_.reserve(n - 2);
    for (std::size_t k = 2; k < n; ++k) {
        const Cx omega = w[k];
        if (!is_finite(omega) || !(omega.imag() > 0.0))
            fail(Err::NumericalBreakdown, "unzip target left the upper half-plane");

        ZipStep st;
        if (std::abs(omega.real()) <= 1e-13 * std::abs(omega)) {
            st.vertical = true;
            st.b = omega.imag();
        } else {
            st.x0 = std::norm(omega) / omega.real();
            const Cx m = omega / (1.0 - omega / st.x0);
            st.b = std::abs(m);
        }
        if (!(st.b > 0.0) || !std::isfinite(st.b))
            fail(Err::NumericalBreakdown, "degenerate slit height");
        map.steps_.push_back(st);

        auto apply_interior = [&](Cx z) {
            const Cx zeta = st.vertical ? z : z / (1.0 - z / st.x0);
            return slit_interior(zeta, st.b);
        };
        auto apply_real = [&](TrackedReal t) -> TrackedReal {
            double m;
            if (t.inf) {
                if (st.vertical) return t; // infinity stays put
                m = -st.x0;
            } else if (st.vertical) {
                m = t.x;
            } else {
                const double den = 1.0 - t.x / st.x0;
                if (std::abs(den) < 1e-300) return {true, 0.0};
                m = t.x / den;
            }
            return {false, slit_real(m, st.b)};
        };

        for (std::size_t j = k + 1; j < n; ++j) w[j] = apply_interior(w[j]);
        wb = apply_interior(wb);
        if (!is_finite(wb) || !(wb.imag() > 0.0))
            fail(Err::NumericalBreakdown, "basepoint image left the upper half-plane");

        for (std::size_t j = 0; j < k; ++j) {
            if (!flat[j].inf && flat[j].x == 0.0) {
                // base of the current slit: splits toward the already
                // flattened side, which is the left prong
                flat[j] = {false, -st.b};
            } else {
                flat[j] = apply_real(flat[j]);
            }
        }
        flat[k] = {false, 0.0}; // the freshly unzipped point
    }

    map.pH_ = wb;

    // Cayley transform to the disk; angles from the real images
    auto angle_of = [&](const TrackedReal& t) {
        if (t.inf) return 0.0;
        const Cx c = (Cx(t.x, 0.0) - map.pH_) / (Cx(t.x, 0.0) - std::conj(map.pH_));
        double a = std::arg(c);
        if (a < 0.0) a += 2.0 * kPi;
        return a;
    };
    map.angles_.resize(n);
    for (std::size_t j = 0; j < n; ++j) map.angles_[j] = angle_of(flat[j]);

    // boundary homeomorphism surrogate: the cyclic angle sequence must have
    // exactly one descent
    int descents = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (map.angles_[j] >= map.angles_[(j + 1) % n]) ++descents;
    }
    if (descents != 1)
        fail(Err::NumericalBreakdown, "boundary correspondence is not monotone");

    return map;
}

Cx DiscreteConformalMap::evaluate(Cx z) const {
    require_finite(z, "DiscreteConformalMap::evaluate");
    Cx w = cutBranch_ * std::sqrt(cutRot_ * (z - pts_[1]) / (z - pts_[0]));
    for (const ZipStep& st : steps_) {
        const Cx zeta = st.vertical ? w : w / (1.0 - w / st.x0);
        w = slit_interior(zeta, st.b);
        if (!is_finite(w)) fail(Err::NumericalBreakdown, "non-finite slit composition");
    }
    return rot_ * (w - pH_) / (w - std::conj(pH_));
}

Cx DiscreteConformalMap::boundary_value(std::size_t j) const {
    return rot_ * std::polar(1.0, angles_[j]);
}

std::size_t DiscreteConformalMap::nearest_index(Cx z0) const {
    std::size_t best = 0;
    double bestD = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < pts_.size(); ++j) {
        const double d = std::abs(pts_[j] - z0);
        if (d < bestD) {
            bestD = d;
            best = j;
        }
    }
    return best;
}

DiscreteConformalMap DiscreteConformalMap::normalized_at(Cx z0, double tol) const {
    const std::size_t j = nearest_index(z0);
    if (std::abs(pts_[j] - z0) > tol)
        fail(Err::NotOnCurve, "normalization point is not a curve sample");
    DiscreteConformalMap out = *this;
    out.rot_ = std::polar(1.0, -angles_[j]);
    return out;
}

DiscreteConformalMap riemann_map(const JordanCurve& curve, Cx basepoint, std::size_t initialSamples) {
    const double pitch = curve.length() / static_cast<double>(initialSamples);
    if (curve.winding(basepoint) != 1)
        fail(Err::ParameterOutOfRange, "basepoint must lie inside the curve");
    if (curve.distance(basepoint) <= 10.0 * pitch)
        fail(Err::ParameterOutOfRange, "basepoint too close to the curve");

    for (std::size_t n = initialSamples;; n *= 2) {
        try {
            return DiscreteConformalMap::build(curve.resample(n), basepoint);
        } catch (const PkError& e) {
            if (e.code() != Err::NumericalBreakdown || n >= 8192) throw;
        }
    }
}

} // namespace pk
