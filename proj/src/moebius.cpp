#include "peakpoint/moebius.hpp"

#include <algorithm>
#include <cmath>

namespace pk {

namespace {
void check_nondegenerate(Cx a, Cx b, Cx c, Cx d) {
    const double det = std::abs(a * d - b * c);
    const double scale = std::abs(a) * std::abs(d) + std::abs(b) * std::abs(c) + 1.0;
    if (det <= 1e-14 * scale) fail(Err::Degenerate, "degenerate Moebius coefficients");
}
} // namespace

Moebius::Moebius() : a_(1.0), b_(0.0), c_(0.0), d_(1.0) {}

Moebius::Moebius(Cx a, Cx b, Cx c, Cx d) : a_(a), b_(b), c_(c), d_(d) {
    require_finite(a, "Moebius");
    require_finite(b, "Moebius");
    require_finite(c, "Moebius");
    require_finite(d, "Moebius");
    check_nondegenerate(a, b, c, d);
    normalize();
}

void Moebius::normalize() {
    const double m = std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
    a_ /= m;
    b_ /= m;
    c_ /= m;
    d_ /= m;
}

Cx Moebius::operator()(Cx z) const {
    require_finite(z, "Moebius::operator()");
    const Cx den = c_ * z + d_;
    const double scale = std::max(1.0, std::abs(z));
    if (std::abs(den) <= 1e-14 * scale)
        fail(Err::PoleEvaluation, "Moebius evaluated at its pole");
    return (a_ * z + b_) / den;
}

Moebius Moebius::inverse() const { return Moebius(d_, -b_, -c_, a_); }

bool Moebius::is_identity(double tol) const {
    // Projective comparison against (1,0,0,1).
    const Cx s = (std::abs(a_) >= std::abs(d_)) ? a_ : d_;
    return std::abs(a_ / s - 1.0) <= tol && std::abs(d_ / s - 1.0) <= tol &&
           std::abs(b_ / s) <= tol && std::abs(c_ / s) <= tol;
}

Moebius compose(const Moebius& m1, const Moebius& m2) {
    return Moebius(m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
                   m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d());
}

Moebius disk_automorphism(Cx c, Cx alpha) {
    if (std::abs(std::abs(c) - 1.0) > 1e-12)
        fail(Err::ParameterOutOfRange, "disk_automorphism needs |c| = 1");
    if (!(std::abs(alpha) < 1.0))
        fail(Err::ParameterOutOfRange, "disk_automorphism needs |alpha| < 1");
    return Moebius(c, -c * alpha, std::conj(alpha), Cx(-1.0));
}

Cx rotation_fixing_one(Cx alpha) { return -(1.0 - std::conj(alpha)) / (1.0 - alpha); }

Cx rotation_fixing_minus_one(Cx alpha) { return -(1.0 + std::conj(alpha)) / (1.0 + alpha); }

Moebius normalize_pair(Cx v1, Cx v2) {
    if (std::abs(std::abs(v1) - 1.0) > 1e-10 || std::abs(std::abs(v2) - 1.0) > 1e-10)
        fail(Err::ParameterOutOfRange, "normalize_pair points must lie on the unit circle");
    if (std::abs(v1 - v2) < 1e-9) fail(Err::CoincidentPoints, "normalize_pair needs distinct points");

    // Rotate v1 to 1 first, then treat v = v2/v1.
    const Moebius rot(Cx(1.0) / v1, Cx(0.0), Cx(0.0), Cx(1.0));
    const Cx v = v2 / v1;
    if (std::abs(v + 1.0) < 1e-9) return rot; // antipodal case: the rotation already suffices

    // Lemma 3.1 closed form: cross ratio through {1,v,-1} -> {1,-1,conj(v)}.
    const Cx d = 2.0 * (1.0 + v) / (v - std::conj(v));
    const Cx vd = std::conj(v) * d;
    const Moebius fcc(1.0 - vd, 1.0 + vd, 1.0 - d, 1.0 + d);
    return compose(fcc, rot);
}

Moebius cross_ratio_map(Cx z1, Cx z2, Cx z3, Cx w1, Cx w2, Cx w3) {
    const double tol = 1e-12;
    if (std::abs(z1 - z2) < tol || std::abs(z2 - z3) < tol || std::abs(z1 - z3) < tol ||
        std::abs(w1 - w2) < tol || std::abs(w2 - w3) < tol || std::abs(w1 - w3) < tol)
        fail(Err::CoincidentPoints, "cross_ratio_map triples must be pairwise distinct");
    // S(z) = (z - z1)(z2 - z3) / ((z1 - z2)(z3 - z)) sends (z1,z2,z3) to (0,1,inf).
    auto standard = [](Cx p1, Cx p2, Cx p3) {
        return Moebius(p2 - p3, -p1 * (p2 - p3), -(p1 - p2), (p1 - p2) * p3);
    };
    return compose(standard(w1, w2, w3).inverse(), standard(z1, z2, z3));
}

Moebius half_disk_slide(double beta) {
    if (!(beta > 0.0 && beta < 1.0))
        fail(Err::ParameterOutOfRange, "half_disk_slide needs beta in (0,1)");
    return Moebius(Cx(beta), Cx(0.0), Cx(-(1.0 - 2.0 * beta)), Cx(1.0 - beta));
}

Cx half_disk_slide_eval(double beta, Cx z) {
    // (1-beta) - (1-2beta) z rewritten as (1-z) + beta (2z-1).
    const Cx den = (1.0 - z) + beta * (2.0 * z - 1.0);
    if (std::abs(den) == 0.0) fail(Err::PoleEvaluation, "half_disk_slide pole");
    return beta * z / den;
}

Moebius to_half_disk() { return Moebius(Cx(0.5), Cx(0.5), Cx(0.0), Cx(1.0)); }

} // namespace pk
