#include "peakpoint/teardrop.hpp"

#include <cmath>

namespace pk {

Teardrop::Teardrop(double a) : alpha(a) {
    if (!(a > 0.0 && a < 1.0)) fail(Err::ParameterOutOfRange, "teardrop exponent outside (0,1)");
}

Cx teardrop_boundary_point(double alpha, double theta) {
    if (!(alpha > 0.0 && alpha < 1.0))
        fail(Err::ParameterOutOfRange, "teardrop exponent outside (0,1)");
    if (!(std::abs(theta) < kPi / 2.0))
        fail(Err::ParameterOutOfRange, "teardrop parameter |theta| must be < pi/2");
    return std::polar(std::pow(std::cos(theta), alpha), alpha * theta);
}

std::vector<Cx> Teardrop::boundary_loop(std::size_t count) const {
    std::vector<Cx> loop;
    loop.reserve(count + 1);
    loop.emplace_back(0.0, 0.0);
    // Sweep from -pi/2 to pi/2; the two parameter ends both limit to 0, so
    // prepending the origin closes the Jordan curve.
    for (std::size_t i = 0; i < count; ++i) {
        const double t = -kPi / 2.0 + kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(count);
        loop.push_back(teardrop_boundary_point(alpha, t));
    }
    return loop;
}

bool Teardrop::contains(Cx z) const {
    const auto loop = boundary_loop();
    // Membership on t_alpha is decided at sampling resolution: the root map
    // stretches the parametrization near 0, so use the largest chord.
    double maxStep = 0.0;
    for (std::size_t i = 0; i < loop.size(); ++i)
        maxStep = std::max(maxStep, std::abs(loop[(i + 1) % loop.size()] - loop[i]));
    if (polyline_distance(loop, z) <= 0.5 * maxStep) return true;
    try {
        return winding_number(loop, z) != 0;
    } catch (const PkError& e) {
        if (e.code() == Err::PointOnCurve) return true;
        throw;
    }
}

bool teardrop_contains(double alpha, Cx z) { return Teardrop(alpha).contains(z); }

double collapse_defect(double alpha, double rho, std::size_t samples) {
    // The maximum of |Z^alpha - 1| over clD(1/2;1/2) \ clD(0;rho) sits on the
    // boundary: the outer circle piece with |z| >= rho and the inner arc of
    // C(0;rho) inside the half-disk.  Both pieces subtend |t| <= acos(rho).
    const double tmax = std::acos(std::min(1.0, rho));
    double worst = 0.0;
    const std::size_t half = samples / 2;
    for (std::size_t i = 0; i <= half; ++i) {
        const double t = tmax * (2.0 * static_cast<double>(i) / static_cast<double>(half) - 1.0);
        const Cx outer = std::polar(std::cos(t), t); // thales point of C(1/2;1/2)
        if (std::abs(outer) > 0.0)
            worst = std::max(worst, std::abs(root_alpha(alpha, outer) - 1.0));
        const Cx inner = std::polar(rho, t);
        worst = std::max(worst, std::abs(root_alpha(alpha, inner) - 1.0));
    }
    return worst;
}

double alpha_for_collapse(double rho, double delta) {
    if (!(rho > 0.0 && rho < 0.5)) fail(Err::ParameterOutOfRange, "rho outside (0,1/2)");
    if (!(delta > 0.0 && delta < 0.5)) fail(Err::ParameterOutOfRange, "delta outside (0,1/2)");
    double lo = 1e-6;
    double hi = 1.0 - 1e-6;
    if (collapse_defect(lo, rho) >= delta)
        fail(Err::SearchFailed, "no alpha >= 1e-6 satisfies the collapse target");
    if (collapse_defect(hi, rho) < delta) return 0.9 * hi;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (collapse_defect(mid, rho) < delta)
            lo = mid;
        else
            hi = mid;
    }
    return 0.9 * lo;
}

double alpha_for_angle(double rho, double delta, double theta) {
    if (!(theta > 0.0 && theta < kPi / 2.0))
        fail(Err::ParameterOutOfRange, "theta outside (0,pi/2)");
    const double cap = 0.9 * (2.0 * theta / kPi); // t_alpha subset C_{alpha/2}
    return std::min(alpha_for_collapse(rho, delta), cap);
}

} // namespace pk
