#pragma once

#include <span>
#include <vector>

#include "peakpoint/cxmath.hpp"

namespace pk {

// Rudin's estimate on finite products: returns
//   lhs = |prod(1+u_j) - 1|, mid = prod(1+|u_j|) - 1, rhs = exp(sum|u_j|) - 1
// with lhs <= mid <= rhs guaranteed.
struct RudinChain {
    double lhs = 0.0;
    double mid = 0.0;
    double rhs = 0.0;
};

RudinChain rudin_chain(std::span<const Cx> us);

// Truncated Euler product with its Cauchy-tail certificate
//   tailBound = exp(r/(1-r)) * (exp(r^{n+1}/(1-r)) - 1),  r = |z|.
struct EulerEval {
    Cx z;
    double r = 0.0;
    int n = 1;
    Cx value{1.0, 0.0};
    double tailBound = 0.0;
};

Cx euler_partial(Cx z, int n);

// log of the tail bound, usable even where the bound itself overflows.
double euler_tail_log(double r, int n);
double euler_tail_bound(double r, int n);

// Smallest truncation whose certificate beats tol; |z| <= 0.999.
EulerEval euler_limit(Cx z, double tol);

// Thm 4.6 identity route: exp(-sum z^j / (j (1-z^j))) with the series
// truncated once the geometric majorant |z|^{N+1}/((N+1)(1-|z|)^2) < tol.
Cx euler_via_series(Cx z, double tol);

} // namespace pk
