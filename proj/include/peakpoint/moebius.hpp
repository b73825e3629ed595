#pragma once

#include "peakpoint/cxmath.hpp"

namespace pk {

// Linear fractional transformation z -> (a z + b)/(c z + d), stored
// projectively and normalized so the largest coefficient modulus is 1.
class Moebius {
public:
    Moebius(); // identity
    Moebius(Cx a, Cx b, Cx c, Cx d);

    Cx a() const { return a_; }
    Cx b() const { return b_; }
    Cx c() const { return c_; }
    Cx d() const { return d_; }

    Cx operator()(Cx z) const; // raises PoleEvaluation near c z + d = 0
    Moebius inverse() const;
    bool is_identity(double tol = 1e-12) const;

private:
    Cx a_, b_, c_, d_;
    void normalize();
};

// result(z) = m1(m2(z))
Moebius compose(const Moebius& m1, const Moebius& m2);

// (3.2.1): z -> c (z - alpha)/(conj(alpha) z - 1), |c| = 1, |alpha| < 1.
Moebius disk_automorphism(Cx c, Cx alpha);

// The rotation coefficient that makes (3.2.1) fix 1, per (3.2.2).
Cx rotation_fixing_one(Cx alpha);
// Likewise for fixing -1.
Cx rotation_fixing_minus_one(Cx alpha);

// Disk automorphism with f(v1) = 1 and f(v2) = -1 for distinct v1, v2 on
// the unit circle (Lemma 3.1 closed form after rotating v1 to 1).
Moebius normalize_pair(Cx v1, Cx v2);

// Unique LFT with z_i -> w_i for two pairwise-distinct triples.
Moebius cross_ratio_map(Cx z1, Cx z2, Cx z3, Cx w1, Cx w2, Cx w3);

// (3.2.5): self-map of clD(1/2;1/2) fixing 0 and 1, beta in (0,1).
Moebius half_disk_slide(double beta);

// Stable evaluation of half_disk_slide for very small beta; the naive
// denominator (1-beta)-(1-2beta)z cancels catastrophically near z = 1.
Cx half_disk_slide_eval(double beta, Cx z);

// h(z) = (1+z)/2, the map clD(0;1) -> clD(1/2;1/2) of Thm 6.2(c).
Moebius to_half_disk();

} // namespace pk
