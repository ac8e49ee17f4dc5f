#include "doctest.h"

#include <cmath>
#include <numbers>
#include <set>

#include "filament/zgen.hpp"

using namespace filament;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("circle_params") {
    FamilyConfig hyp{Family::PlanarHyperbolic, 5, 0, 0.0, 0.0};
    auto c0 = circle_params(hyp);
    CHECK(c0.center.imag() == Approx(1.0));
    CHECK(std::abs(c0.radius) < 1e-15);

    FamilyConfig euc{Family::EuclideanHelical, 5, 0, 0.0, kPi / 4};
    auto c1 = circle_params(euc);
    CHECK(c1.center.imag() == Approx(0.5));
    CHECK(c1.radius == Approx(0.5));

    hyp.rho = 0.5;
    auto c2 = circle_params(hyp);
    CHECK(c2.center.imag() == Approx(std::cosh(0.5) * std::cosh(0.5)));
    CHECK(c2.radius == Approx(std::sinh(0.5) * std::sinh(0.5)));
}

TEST_CASE("z_point planar example") {
    FamilyConfig cfg{Family::PlanarHyperbolic, 5, 0, 0.0, 0.5};
    auto pt = z_point(cfg, 1);
    const double sh2 = std::sinh(0.5) * std::sinh(0.5);
    const double ch2 = std::cosh(0.5) * std::cosh(0.5);
    CHECK(pt.z.real() == Approx(sh2 * std::sin(8 * kPi / 5)));
    CHECK(pt.z.imag() == Approx(ch2 + sh2 * std::cos(8 * kPi / 5)));
}

TEST_CASE("z_point degenerate radius") {
    FamilyConfig cfg{Family::HyperbolicHelical, 7, 0, 0.0, 0.0};
    for (int64_t p : {1, 2, 3}) {
        auto pt = z_point(cfg, p);
        CHECK(std::abs(pt.z.real()) < 1e-15);
        CHECK(pt.z.imag() == Approx(1.0));
    }
}

TEST_CASE("euclidean z with vanishing angle hits i*cos(2 rho)") {
    // vartheta = 0 corresponds to z = i(cos^2 - sin^2) = i cos(2 rho)
    FamilyConfig cfg{Family::EuclideanHelical, 5, 0, 0.0, 0.3};
    const Circle circ = circle_params(cfg);
    const std::complex<double> z = circ.center - std::complex<double>{0, 1} * circ.radius;
    CHECK(z.imag() == Approx(std::cos(0.6)));
}

TEST_CASE("z_point validates inputs") {
    FamilyConfig cfg{Family::PlanarHyperbolic, 6, 1, 0.0, 0.5};
    CHECK_THROWS_AS(z_point(cfg, 2), std::invalid_argument);  // gcd(2,6) != 1
    FamilyConfig bad{Family::PlanarHyperbolic, 5, 0, 0.7, 0.5};
    CHECK_THROWS_AS(z_point(bad, 1), std::invalid_argument);  // planar with torsion
}

TEST_CASE("circular helical aliases hyperbolic helical") {
    FamilyConfig a{Family::HyperbolicHelical, 12, 0, 0.7, 0.4};
    FamilyConfig b{Family::CircularHelical, 12, 0, 0.7, 0.4};
    for (int64_t p : units(12)) {
        CHECK(z_point(a, p).z == z_point(b, p).z);
    }
}

TEST_CASE("stream emits totient(q) points on the circle") {
    FamilyConfig cfg{Family::PlanarHyperbolic, 7, 0, 0.0, 0.5};
    auto set = generate(cfg, true);
    REQUIRE(set.points.size() == 6);
    for (const auto& pt : set.points) {
        CHECK(std::abs(std::abs(pt.z - set.circle.center) - set.circle.radius) <
              1e-12 * set.circle.radius);
        REQUIRE(pt.u.has_value());
    }
}

TEST_CASE("stream includes p = 0 for powers of two") {
    FamilyConfig cfg{Family::EuclideanHelical, 8, 0, 0.7, 0.3};
    auto set = generate(cfg, true);
    REQUIRE(set.points.size() == 5);
    CHECK(set.points.front().p == 0);
    for (const auto& pt : set.points) {
        CHECK(std::abs(std::abs(pt.z - set.circle.center) - set.circle.radius) <
              1e-12 * set.circle.radius);
    }

    FamilyConfig q4{Family::EuclideanHelical, 4, 0, 0.0, 0.3};
    CHECK(generate(q4, true).points.size() == 3);  // p in {0, 1, 3}
}

TEST_CASE("stream without u works for any q") {
    FamilyConfig cfg{Family::PlanarHyperbolic, 9, 0, 0.0, 0.5};
    CHECK_THROWS_AS(generate(cfg, true), UnsupportedModulusError);
    auto set = generate(cfg, false);
    CHECK(set.points.size() == 6);  // totient(9)
    for (const auto& pt : set.points) CHECK_FALSE(pt.u.has_value());
}

TEST_CASE("distinct z count equals totient for non-degenerate m") {
    for (int64_t q : {7, 9, 8, 6, 25}) {
        FamilyConfig cfg{Family::PlanarHyperbolic, q, default_m(q), 0.0, 0.5};
        auto set = generate(cfg, false);
        std::set<std::pair<long long, long long>> distinct;
        for (const auto& pt : set.points) {
            distinct.insert({std::llround(pt.z.real() * 1e12), std::llround(pt.z.imag() * 1e12)});
        }
        CHECK(distinct.size() == set.points.size());
    }
}

TEST_CASE("stream order is ascending p") {
    FamilyConfig cfg{Family::PlanarHyperbolic, 12, 0, 0.0, 0.5};
    auto set = generate(cfg, false);
    for (std::size_t i = 1; i < set.points.size(); ++i) {
        CHECK(set.points[i - 1].p < set.points[i].p);
    }
}
