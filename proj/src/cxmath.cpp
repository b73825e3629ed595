#include "peakpoint/cxmath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pk {

const char* err_name(Err e) {
    switch (e) {
        case Err::BranchCutViolation: return "BranchCutViolation";
        case Err::DomainViolation: return "DomainViolation";
        case Err::PointOnCurve: return "PointOnCurve";
        case Err::Undersampled: return "Undersampled";
        case Err::Degenerate: return "Degenerate";
        case Err::ParameterOutOfRange: return "ParameterOutOfRange";
        case Err::CoincidentPoints: return "CoincidentPoints";
        case Err::SearchFailed: return "SearchFailed";
        case Err::NotInDomain: return "NotInDomain";
        case Err::ResolutionDisagreement: return "ResolutionDisagreement";
        case Err::NoExteriorPointFound: return "NoExteriorPointFound";
        case Err::NotLinked: return "NotLinked";
        case Err::NotWeakChain: return "NotWeakChain";
        case Err::NoPath: return "NoPath";
        case Err::DegenerateChain: return "DegenerateChain";
        case Err::IntersectionNotFound: return "IntersectionNotFound";
        case Err::NumericalBreakdown: return "NumericalBreakdown";
        case Err::NotOnCurve: return "NotOnCurve";
        case Err::BetaSearchFailed: return "BetaSearchFailed";
        case Err::RhoSearchFailed: return "RhoSearchFailed";
        case Err::ScheduleInvalid: return "ScheduleInvalid";
        case Err::TypeIIUnsupported: return "TypeIIUnsupported";
        case Err::ConePrecondViolated: return "ConePrecondViolated";
        case Err::RhoNotBelowOne: return "RhoNotBelowOne";
        case Err::SurrogateFailed: return "SurrogateFailed";
        case Err::CounterexampleFound: return "CounterexampleFound";
        case Err::ParseError: return "ParseError";
        case Err::InvalidRegion: return "InvalidRegion";
        case Err::PoleEvaluation: return "PoleEvaluation";
        case Err::NonFinite: return "NonFinite";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

bool is_finite(Cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(Cx z, const char* where) {
    if (!is_finite(z)) fail(Err::NonFinite, std::string("non-finite value in ") + where);
}

double dist_to_cut(Cx z) {
    if (z.real() >= 0.0) return std::abs(z);
    return std::abs(z.imag());
}

Cx principal_log(Cx z) {
    require_finite(z, "principal_log");
    if (dist_to_cut(z) <= branch_tol(z))
        fail(Err::BranchCutViolation, "log argument on or near (-inf,0]");
    return std::log(z);
}

double arg_principal(Cx z) {
    require_finite(z, "arg");
    if (dist_to_cut(z) <= branch_tol(z))
        fail(Err::BranchCutViolation, "arg undefined on (-inf,0]");
    return std::atan2(z.imag(), z.real());
}

Cone::Cone(double a) : alpha(a) {
    if (!(a > 0.0 && a <= 1.0)) fail(Err::ParameterOutOfRange, "cone exponent outside (0,1]");
}

bool Cone::contains(Cx w) const {
    if (w == Cx(0.0, 0.0)) return false;
    if (dist_to_cut(w) <= branch_tol(w)) return false;
    return std::abs(std::atan2(w.imag(), w.real())) < alpha * kPi;
}

bool Cone::contains_closure0(Cx w) const {
    return w == Cx(0.0, 0.0) || contains(w);
}

RootMap::RootMap(double a) : alpha(a) {
    if (!(a > 0.0)) fail(Err::ParameterOutOfRange, "root exponent must be positive");
}

Cx RootMap::forward(Cx z) const { return root_alpha(alpha, z); }
Cx RootMap::inverse(Cx z) const { return root_alpha_inv(alpha, z); }

Cx root_alpha(double alpha, Cx z) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        fail(Err::ParameterOutOfRange, "root_alpha exponent outside (0,1]");
    require_finite(z, "root_alpha");
    if (z == Cx(0.0, 0.0)) return z;
    const double r = std::abs(z);
    const double th = arg_principal(z);
    return std::polar(std::pow(r, alpha), alpha * th);
}

Cx root_alpha_inv(double alpha, Cx z) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        fail(Err::ParameterOutOfRange, "root_alpha_inv exponent outside (0,1]");
    require_finite(z, "root_alpha_inv");
    if (z == Cx(0.0, 0.0)) return z;
    if (dist_to_cut(z) <= branch_tol(z))
        fail(Err::DomainViolation, "root_alpha_inv argument outside {0} u C_alpha");
    const double th = std::atan2(z.imag(), z.real());
    if (!(std::abs(th) < alpha * kPi))
        fail(Err::DomainViolation, "root_alpha_inv argument outside {0} u C_alpha");
    return std::polar(std::pow(std::abs(z), 1.0 / alpha), th / alpha);
}

int winding_number(std::span<const Cx> loop, Cx p, double clearance) {
    const std::size_t n = loop.size();
    if (n < 512) fail(Err::Undersampled, "winding_number needs >= 512 samples");
    if (polyline_distance(loop, p) <= clearance)
        fail(Err::PointOnCurve, "winding_number probe on the curve");
    double total = 0.0;
    Cx prev = loop[n - 1] - p;
    for (std::size_t i = 0; i < n; ++i) {
        const Cx cur = loop[i] - p;
        // Angle increment in (-pi, pi]; the curve never jumps a half turn
        // between samples at adequate resolution.
        total += std::arg(cur / prev);
        prev = cur;
    }
    const double turns = total / (2.0 * kPi);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > 0.1)
        fail(Err::Undersampled, "winding residue above 0.1, resample the curve");
    return static_cast<int>(rounded);
}

double polyline_distance(std::span<const Cx> loop, Cx p) {
    const std::size_t n = loop.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Cx a = loop[i];
        const Cx b = loop[(i + 1) % n];
        const Cx ab = b - a;
        const double len2 = std::norm(ab);
        double t = 0.0;
        if (len2 > 0.0) {
            t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
            t = std::clamp(t, 0.0, 1.0);
        }
        best = std::min(best, std::abs(p - (a + t * ab)));
    }
    return best;
}

} // namespace pk
