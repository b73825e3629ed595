#include "peakpoint/products.hpp"

#include <cmath>
#include <limits>

namespace pk {

RudinChain rudin_chain(std::span<const Cx> us) {
    RudinChain out;
    Cx prod(1.0, 0.0);
    double absProd = 1.0;
    double absSum = 0.0;
    for (const Cx& u : us) {
        require_finite(u, "rudin_chain");
        prod *= (1.0 + u);
        absProd *= (1.0 + std::abs(u));
        absSum += std::abs(u);
    }
    out.lhs = std::abs(prod - 1.0);
    out.mid = absProd - 1.0;
    out.rhs = std::expm1(absSum);
    return out;
}

Cx euler_partial(Cx z, int n) {
    require_finite(z, "euler_partial");
    Cx prod(1.0, 0.0);
    Cx zpow(1.0, 0.0);
    for (int j = 1; j <= n; ++j) {
        zpow *= z;
        prod *= (1.0 - zpow);
    }
    return prod;
}

double euler_tail_log(double r, int n) {
    if (r <= 0.0) return -std::numeric_limits<double>::infinity();
    const double head = r / (1.0 - r);
    const double x = std::exp(std::log(r) * (n + 1)) / (1.0 - r); // r^{n+1}/(1-r)
    // log(exp(head) * expm1(x)) without forming either factor.
    if (x > 700.0) return head + x;
    const double e = std::expm1(x);
    if (e <= 0.0) return -std::numeric_limits<double>::infinity();
    return head + std::log(e);
}

double euler_tail_bound(double r, int n) { return std::exp(euler_tail_log(r, n)); }

EulerEval euler_limit(Cx z, double tol) {
    require_finite(z, "euler_limit");
    const double r = std::abs(z);
    if (r > 0.999) fail(Err::NotInDomain, "euler_limit needs |z| <= 0.999");
    if (!(tol > 0.0)) fail(Err::ParameterOutOfRange, "euler_limit tolerance must be positive");
    const double logTol = std::log(tol);
    int n = 1;
    // The log-tail drops by log(r) per step; jump close first, then refine.
    if (r > 0.0) {
        while (euler_tail_log(r, n) >= logTol) {
            const double gap = euler_tail_log(r, n) - logTol;
            const int jump = std::max(1, static_cast<int>(gap / -std::log(r) * 0.5));
            n += jump;
            if (n > 20'000'000) fail(Err::SearchFailed, "euler_limit truncation exploded");
        }
        while (n > 1 && euler_tail_log(r, n - 1) < logTol) --n;
    }
    EulerEval out;
    out.z = z;
    out.r = r;
    out.n = n;
    out.value = euler_partial(z, n);
    out.tailBound = euler_tail_bound(r, n);
    return out;
}

Cx euler_via_series(Cx z, double tol) {
    require_finite(z, "euler_via_series");
    const double r = std::abs(z);
    if (r > 0.999) fail(Err::NotInDomain, "euler_via_series needs |z| <= 0.999");
    if (!(tol > 0.0)) fail(Err::ParameterOutOfRange, "tolerance must be positive");
    if (z == Cx(0.0, 0.0)) return Cx(1.0, 0.0);

    const double om = 1.0 - r;
    Cx sum(0.0, 0.0);
    Cx zpow(1.0, 0.0);
    int j = 0;
    while (true) {
        ++j;
        zpow *= z;
        sum += zpow / (static_cast<double>(j) * (1.0 - zpow));
        // Majorant for the dropped tail: r^{j+1} / ((j+1) (1-r)^2).
        const double tail = std::exp(std::log(r) * (j + 1)) / ((j + 1) * om * om);
        if (tail < tol) break;
        if (j > 20'000'000) fail(Err::SearchFailed, "euler_via_series truncation exploded");
    }
    return std::exp(-sum);
}

} // namespace pk
