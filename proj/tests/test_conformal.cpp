#include "doctest.h"

#include <cmath>
#include <random>

#include "peakpoint/conformal.hpp"

using namespace pk;

TEST_CASE("riemann map calibration on the unit circle") {
    const JordanCurve circle = JordanCurve::circle(Cx(0, 0), 1.0, 1024);
    const DiscreteConformalMap f = riemann_map(circle, Cx(0, 0));

    CHECK(std::abs(f.evaluate(Cx(0, 0))) < 1e-12);

    // exact map is a rotation; fit the phase at one probe
    const Cx u = f.evaluate(Cx(0.5, 0.0)) / Cx(0.5, 0.0);
    CHECK(std::abs(std::abs(u) - 1.0) < 2e-3);
    const Cx rot = u / std::abs(u);

    std::mt19937 rng(53);
    std::uniform_real_distribution<double> rad(0.05, 0.9), ang(0.0, 2.0 * kPi);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Cx z = std::polar(rad(rng), ang(rng));
        worst = std::max(worst, std::abs(f.evaluate(z) - rot * z));
    }
    CHECK(worst <= 1e-3);
}

TEST_CASE("riemann map on a translated circle") {
    const JordanCurve circle = JordanCurve::circle(Cx(2.0, 0.0), 1.0, 1024);
    const DiscreteConformalMap f = riemann_map(circle, Cx(2.0, 0.0));
    const Cx u = f.evaluate(Cx(2.5, 0.0)) / Cx(0.5, 0.0);
    const Cx rot = u / std::abs(u);
    for (const Cx z : {Cx(2.3, 0.2), Cx(1.7, -0.4), Cx(2.0, 0.6)}) {
        CHECK(std::abs(f.evaluate(z) - rot * (z - Cx(2.0, 0.0))) <= 1e-3);
    }
}

TEST_CASE("boundary correspondence is monotone and normalization works") {
    const JordanCurve circle = JordanCurve::circle(Cx(0, 0), 1.0, 1024);
    const DiscreteConformalMap f = riemann_map(circle, Cx(0, 0));
    const auto& angles = f.boundary_angles();
    int descents = 0;
    for (std::size_t j = 0; j < angles.size(); ++j)
        if (angles[j] >= angles[(j + 1) % angles.size()]) ++descents;
    CHECK(descents == 1);

    const Cx z0 = f.points()[17];
    const DiscreteConformalMap g = f.normalized_at(z0);
    CHECK(std::abs(g.boundary_value(17) - Cx(1.0, 0.0)) < 1e-12);
    // idempotent
    const DiscreteConformalMap g2 = g.normalized_at(z0);
    CHECK(std::abs(g2.boundary_value(17) - Cx(1.0, 0.0)) < 1e-12);
    // re-normalizing at another point moves 1 there
    const Cx z1 = f.points()[99];
    const DiscreteConformalMap h = g.normalized_at(z1);
    CHECK(std::abs(h.boundary_value(99) - Cx(1.0, 0.0)) < 1e-12);

    CHECK_THROWS_AS(f.normalized_at(Cx(5.0, 5.0)), PkError);
}

TEST_CASE("conformality probe: cross ratios approximately preserved") {
    const JordanCurve circle = JordanCurve::circle(Cx(0, 0), 1.0, 1024);
    const DiscreteConformalMap f = riemann_map(circle, Cx(0, 0));
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> rad(0.1, 0.85), ang(0.0, 2.0 * kPi);
    auto crossRatio = [](Cx a, Cx b, Cx c, Cx d) { return ((a - c) * (b - d)) / ((a - d) * (b - c)); };
    for (int trial = 0; trial < 100; ++trial) {
        Cx z[4];
        bool ok = true;
        for (auto& zz : z) zz = std::polar(rad(rng), ang(rng));
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (std::abs(z[i] - z[j]) < 0.1) ok = false;
        if (!ok) continue;
        const Cx before = crossRatio(z[0], z[1], z[2], z[3]);
        const Cx after =
            crossRatio(f.evaluate(z[0]), f.evaluate(z[1]), f.evaluate(z[2]), f.evaluate(z[3]));
        CHECK(std::abs(before - after) <= 1e-2 * std::max(1.0, std::abs(before)));
    }
}

TEST_CASE("determinism: identical inputs give identical correspondences") {
    const JordanCurve circle = JordanCurve::circle(Cx(0.3, -0.1), 0.8, 1024);
    const DiscreteConformalMap f1 = riemann_map(circle, Cx(0.3, -0.1));
    const DiscreteConformalMap f2 = riemann_map(circle, Cx(0.3, -0.1));
    REQUIRE(f1.boundary_angles().size() == f2.boundary_angles().size());
    for (std::size_t j = 0; j < f1.boundary_angles().size(); ++j)
        CHECK(f1.boundary_angles()[j] == f2.boundary_angles()[j]);
}

TEST_CASE("riemann map rejects bad basepoints") {
    const JordanCurve circle = JordanCurve::circle(Cx(0, 0), 1.0, 1024);
    CHECK_THROWS_AS(riemann_map(circle, Cx(2.0, 0.0)), PkError);
    CHECK_THROWS_AS(riemann_map(circle, Cx(0.9999, 0.0)), PkError);
}
