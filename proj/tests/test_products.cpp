#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "peakpoint/products.hpp"

using namespace pk;

TEST_CASE("rudin chain examples") {
    const RudinChain empty = rudin_chain(std::vector<Cx>{});
    CHECK(empty.lhs == 0.0);
    CHECK(empty.mid == 0.0);
    CHECK(empty.rhs == 0.0);

    const std::vector<Cx> one = {Cx(0.0, 1.0)};
    const RudinChain rc = rudin_chain(one);
    CHECK(rc.lhs == doctest::Approx(1.0));
    CHECK(rc.mid == doctest::Approx(1.0));
    CHECK(rc.rhs == doctest::Approx(std::exp(1.0) - 1.0));

    const std::vector<Cx> two = {Cx(1.0), Cx(1.0)};
    const RudinChain rc2 = rudin_chain(two);
    CHECK(rc2.lhs == doctest::Approx(3.0));
    CHECK(rc2.mid == doctest::Approx(3.0));
    CHECK(rc2.rhs == doctest::Approx(std::exp(2.0) - 1.0));
}

TEST_CASE("rudin chain ordering on random lists") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> mag(0.0, 2.0), ang(0.0, 2.0 * kPi);
    std::uniform_int_distribution<int> len(0, 20);
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<Cx> us(len(rng));
        for (auto& u : us) u = std::polar(mag(rng), ang(rng));
        const RudinChain rc = rudin_chain(us);
        CHECK(rc.lhs <= rc.mid * (1.0 + 1e-12) + 1e-12);
        CHECK(rc.mid <= rc.rhs * (1.0 + 1e-12) + 1e-12);
    }
}

TEST_CASE("euler partial products") {
    CHECK(euler_partial(Cx(0.0), 5) == Cx(1.0));
    CHECK(euler_partial(Cx(0.5), 3).real() == doctest::Approx(21.0 / 64.0));
    const Cx z = std::polar(0.3, kPi / 4.0);
    CHECK(std::abs(euler_partial(z, 20) - euler_partial(z, 200)) <= euler_tail_bound(0.3, 20));
    CHECK(std::abs(euler_partial(z, 30) - euler_partial(z, 200)) < 1e-12);
}

TEST_CASE("euler limit with certificate") {
    const EulerEval e = euler_limit(Cx(0.5), 1e-10);
    // oracle: iterate partial products until successive difference < 1e-14
    Cx prev = euler_partial(Cx(0.5), 1);
    Cx cur;
    int n = 1;
    while (true) {
        ++n;
        cur = euler_partial(Cx(0.5), n);
        if (std::abs(cur - prev) < 1e-14) break;
        prev = cur;
    }
    CHECK(std::abs(e.value - cur) < 1e-10);
    CHECK(e.value.real() == doctest::Approx(0.2887880951).epsilon(1e-8));
    CHECK(e.tailBound < 1e-10);
    CHECK(euler_tail_bound(0.5, e.n - 1) >= 1e-10);

    const EulerEval z0 = euler_limit(Cx(0.0), 1e-6);
    CHECK(z0.value == Cx(1.0));
    CHECK(z0.n == 1);

    // tail-bound arithmetic oracle at r = 1/2, n = 10
    const double direct = std::exp(0.5 / 0.5) * std::expm1(std::pow(0.5, 11) / 0.5);
    CHECK(euler_tail_bound(0.5, 10) == doctest::Approx(direct).epsilon(1e-12));

    CHECK_THROWS_AS(euler_limit(Cx(0.9995, 0.0), 1e-6), PkError);
}

TEST_CASE("cauchy certificate on random pairs") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> mag(0.0, 0.9), ang(0.0, 2.0 * kPi);
    std::uniform_int_distribution<int> nd(1, 40), kd(1, 20);
    for (int trial = 0; trial < 10000; ++trial) {
        const Cx z = std::polar(mag(rng), ang(rng));
        const int n = nd(rng), k = kd(rng);
        const double gap = std::abs(euler_partial(z, n + k) - euler_partial(z, n));
        CHECK(gap <= euler_tail_bound(std::abs(z), n) * (1.0 + 1e-9) + 1e-15);
    }
}

TEST_CASE("series identity and positivity") {
    CHECK(euler_via_series(Cx(0.0), 1e-10) == Cx(1.0));
    CHECK(std::abs(euler_limit(Cx(0.5), 1e-10).value - euler_via_series(Cx(0.5), 1e-10)) < 2e-10);

    for (int i = 0; i < 20; ++i) {
        const Cx z = std::polar(0.9 * (i + 1) / 20.0, 2.0 * kPi * i / 20.0);
        const Cx a = euler_limit(z, 1e-10).value;
        const Cx b = euler_via_series(z, 1e-10);
        CHECK(std::abs(a - b) <= 5e-10);
    }

    for (double x : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99}) {
        const Cx v = euler_limit(Cx(x, 0.0), 1e-10).value;
        CHECK(v.real() > 0.0);
        CHECK(v.real() <= 1.0);
        CHECK(std::abs(v.imag()) < 1e-12);
    }
}
