#include "doctest.h"

#include <cmath>
#include <random>

#include "peakpoint/moebius.hpp"

using namespace pk;

TEST_CASE("compose basics") {
    const Moebius id;
    const Moebius doubler(Cx(2.0), Cx(0.0), Cx(0.0), Cx(1.0));
    const Moebius shift(Cx(1.0), Cx(1.0), Cx(0.0), Cx(1.0));
    CHECK(compose(id, doubler)(Cx(3.0, 1.0)) == doubler(Cx(3.0, 1.0)));
    CHECK(compose(doubler, doubler.inverse()).is_identity());
    const Moebius both = compose(doubler, shift); // 2(z+1) = 2z+2
    CHECK(std::abs(both(Cx(0.5, 0.0)) - Cx(3.0, 0.0)) < 1e-14);
}

TEST_CASE("disk automorphism maps disk onto itself") {
    // c = -1, alpha = 0 gives the identity: -(z-0)/(0-1) = z
    CHECK(disk_automorphism(Cx(-1.0), Cx(0.0)).is_identity());

    // (3.2.2): the rotation that fixes 1
    const Cx alpha(0.3, 0.0);
    const Moebius f = disk_automorphism(rotation_fixing_one(alpha), alpha);
    CHECK(std::abs(f(Cx(1.0, 0.0)) - Cx(1.0, 0.0)) < 1e-12);

    // (3.2.3): complex alpha fixes 1 but not -1
    const Cx ac(0.3, 0.2);
    const Moebius g = disk_automorphism(rotation_fixing_one(ac), ac);
    CHECK(std::abs(g(Cx(1.0, 0.0)) - Cx(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(g(Cx(-1.0, 0.0)) + Cx(1.0, 0.0)) > 1e-3);

    // boundary stays on the boundary, interior stays inside
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi), rad(0.0, 0.999);
    for (int i = 0; i < 1000; ++i) {
        const Cx bd = g(std::polar(1.0, ang(rng)));
        CHECK(std::abs(std::abs(bd) - 1.0) <= 1e-10);
        const Cx in = g(std::polar(rad(rng), ang(rng)));
        CHECK(std::abs(in) < 1.0);
    }
}

TEST_CASE("fixed-point criteria against direct evaluation") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-0.9, 0.9), ang(0.0, 2.0 * kPi);
    for (int i = 0; i < 1000; ++i) {
        Cx alpha(u(rng), u(rng));
        if (std::abs(alpha) >= 0.95) alpha *= 0.5;
        const Cx c = std::polar(1.0, ang(rng));
        const Moebius f = disk_automorphism(c, alpha);
        const bool fixes1 = std::abs(f(Cx(1.0, 0.0)) - 1.0) <= 1e-10;
        const bool predicted1 = std::abs(c - rotation_fixing_one(alpha)) <= 1e-10;
        CHECK(fixes1 == predicted1);
        const bool fixesM1 = std::abs(f(Cx(-1.0, 0.0)) + 1.0) <= 1e-10;
        const bool predictedM1 = std::abs(c - rotation_fixing_minus_one(alpha)) <= 1e-10;
        CHECK(fixesM1 == predictedM1);
        if (fixes1 && fixesM1) CHECK(std::abs(alpha.imag()) <= 1e-10);
    }
    // (3.2.3) positive direction: real alpha with the fixing rotation fixes both
    for (int i = 0; i < 100; ++i) {
        const Cx alpha(u(rng), 0.0);
        const Moebius f = disk_automorphism(rotation_fixing_one(alpha), alpha);
        CHECK(std::abs(f(Cx(1.0, 0.0)) - 1.0) <= 1e-10);
        CHECK(std::abs(f(Cx(-1.0, 0.0)) + 1.0) <= 1e-10);
    }
}

TEST_CASE("normalize_pair closed form") {
    // antipodal: plain rotation
    const Moebius r = normalize_pair(Cx(1.0, 0.0), Cx(-1.0, 0.0));
    CHECK(std::abs(r(Cx(1.0, 0.0)) - 1.0) < 1e-12);
    CHECK(std::abs(r(Cx(-1.0, 0.0)) + 1.0) < 1e-12);

    // v = i: the Lemma 3.1 proof gives alpha = (1+2i)/5
    const Moebius f = normalize_pair(Cx(1.0, 0.0), Cx(0.0, 1.0));
    CHECK(std::abs(f(Cx(1.0, 0.0)) - 1.0) < 1e-10);
    CHECK(std::abs(f(Cx(0.0, 1.0)) + 1.0) < 1e-10);
    // its zero must be at the predicted alpha
    const Cx alphaPred = Cx(1.0, 2.0) / 5.0;
    CHECK(std::abs(f(alphaPred)) < 1e-10);

    const Moebius g = normalize_pair(Cx(0.0, 1.0), Cx(0.0, -1.0));
    CHECK(std::abs(g(Cx(0.0, 1.0)) - 1.0) < 1e-10);
    CHECK(std::abs(g(Cx(0.0, -1.0)) + 1.0) < 1e-10);

    CHECK_THROWS_AS(normalize_pair(Cx(1.0, 0.0), Cx(1.0, 0.0)), PkError);
}

TEST_CASE("normalize_pair random boundary pairs stay automorphisms") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi), rad(0.0, 0.999);
    for (int i = 0; i < 1000; ++i) {
        const Cx v1 = std::polar(1.0, ang(rng));
        Cx v2 = std::polar(1.0, ang(rng));
        if (std::abs(v1 - v2) < 1e-6) continue;
        const Moebius f = normalize_pair(v1, v2);
        CHECK(std::abs(f(v1) - 1.0) <= 1e-10);
        CHECK(std::abs(f(v2) + 1.0) <= 1e-10);
        const Cx inside = f(std::polar(rad(rng), ang(rng)));
        CHECK(std::abs(inside) <= 1.0 + 1e-12);
    }
}

TEST_CASE("cross_ratio_map interpolation") {
    const Moebius id = cross_ratio_map(Cx(0.0), Cx(1.0), Cx(2.0), Cx(0.0), Cx(1.0), Cx(2.0));
    CHECK(id.is_identity(1e-10));

    // {1,i,-1} -> {1,-1,conj(i)}: the Lemma 3.1 choice for v = i
    const Moebius f = cross_ratio_map(Cx(1, 0), Cx(0, 1), Cx(-1, 0), Cx(1, 0), Cx(-1, 0), Cx(0, -1));
    CHECK(std::abs(f(Cx(1, 0)) - Cx(1, 0)) < 1e-10);
    CHECK(std::abs(f(Cx(0, 1)) - Cx(-1, 0)) < 1e-10);
    CHECK(std::abs(f(Cx(-1, 0)) - Cx(0, -1)) < 1e-10);

    const Moebius dbl = cross_ratio_map(Cx(0.0), Cx(1.0), Cx(2.0), Cx(0.0), Cx(2.0), Cx(4.0));
    CHECK(std::abs(dbl(Cx(3.0, 0.5)) - Cx(6.0, 1.0)) < 1e-10);

    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int done = 0;
    while (done < 1000) {
        const Cx z1(u(rng), u(rng)), z2(u(rng), u(rng)), z3(u(rng), u(rng));
        const Cx w1(u(rng), u(rng)), w2(u(rng), u(rng)), w3(u(rng), u(rng));
        if (std::abs(z1 - z2) < 1e-2 || std::abs(z2 - z3) < 1e-2 || std::abs(z1 - z3) < 1e-2)
            continue;
        if (std::abs(w1 - w2) < 1e-2 || std::abs(w2 - w3) < 1e-2 || std::abs(w1 - w3) < 1e-2)
            continue;
        const Moebius m = cross_ratio_map(z1, z2, z3, w1, w2, w3);
        CHECK(std::abs(m(z1) - w1) <= 1e-10 * std::max(1.0, std::abs(w1)));
        CHECK(std::abs(m(z2) - w2) <= 1e-10 * std::max(1.0, std::abs(w2)));
        CHECK(std::abs(m(z3) - w3) <= 1e-10 * std::max(1.0, std::abs(w3)));
        ++done;
    }
}

TEST_CASE("half disk slide") {
    for (double beta : {0.1, 0.25, 0.5, 0.9}) {
        const Moebius g = half_disk_slide(beta);
        CHECK(std::abs(g(Cx(0.0))) < 1e-14);
        CHECK(std::abs(g(Cx(1.0)) - 1.0) < 1e-13);
    }
    // direct substitution: g(1/2) = beta
    CHECK(half_disk_slide(0.25)(Cx(0.5)).real() == doctest::Approx(0.25));
    // (3.2.6): g(w) -> 0 monotonically as beta decreases
    double prev = 1.0;
    for (double beta : {0.1, 0.01, 0.001}) {
        const double v = std::abs(half_disk_slide(beta)(Cx(0.7, 0.0)));
        CHECK(v < prev);
        prev = v;
    }
    // self-map of clD(1/2;1/2)
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi), rad(0.0, 1.0);
    const Moebius g = half_disk_slide(0.3);
    for (int i = 0; i < 1000; ++i) {
        const Cx z = Cx(0.5, 0.0) + std::polar(0.5 * rad(rng), ang(rng));
        CHECK(std::abs(g(z) - Cx(0.5, 0.0)) <= 0.5 + 1e-10);
    }
    CHECK_THROWS_AS(half_disk_slide(0.0), PkError);
    CHECK_THROWS_AS(half_disk_slide(1.0), PkError);
}

TEST_CASE("half disk slide stable eval matches Moebius at moderate beta") {
    const double beta = 0.37;
    const Moebius g = half_disk_slide(beta);
    for (const Cx z : {Cx(0.2, 0.1), Cx(0.9, -0.2), Cx(0.5, 0.4)}) {
        CHECK(std::abs(g(z) - half_disk_slide_eval(beta, z)) < 1e-13);
    }
    // tiny beta: z = 1 must still map exactly to 1
    CHECK(std::abs(half_disk_slide_eval(1e-200, Cx(1.0, 0.0)) - 1.0) < 1e-14);
}

TEST_CASE("to_half_disk") {
    const Moebius h = to_half_disk();
    CHECK(std::abs(h(Cx(1.0, 0.0)) - 1.0) < 1e-14);
    CHECK(std::abs(h(Cx(-1.0, 0.0))) < 1e-14);
    CHECK(std::abs(h(Cx(0.0, 1.0)) - Cx(0.5, 0.5)) < 1e-14);
}
