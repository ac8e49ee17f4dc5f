#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "filament/gauss.hpp"

using namespace filament;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent oracle: same sum evaluated without integer reduction tricks,
// term by term in long double.
std::complex<double> brute_gauss(int64_t p, int64_t m, int64_t q) {
    long double re = 0, im = 0;
    for (int64_t n = 0; n < q; ++n) {
        long double e = (long double)(-p * n * n + m * n) / q;
        re += std::cos(2 * (long double)kPi * e);
        im += std::sin(2 * (long double)kPi * e);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace

TEST_CASE("gauss_sum small cases") {
    auto g = gauss_sum(1, 0, 3);
    CHECK(std::abs(g.real()) < 1e-12);
    CHECK(g.imag() == Approx(-std::sqrt(3.0)));

    auto z = gauss_sum(1, 1, 4);
    CHECK(std::abs(std::abs(z)) < 1e-12);

    auto g4 = gauss_sum(1, 0, 4);
    CHECK(g4.real() == Approx(2.0));
    CHECK(g4.imag() == Approx(-2.0));
    CHECK(std::abs(g4) == Approx(std::sqrt(8.0)));

    CHECK(gauss_sum(1, 0, 1).real() == Approx(1.0));
    CHECK_THROWS_AS(gauss_sum(2, 0, 4), std::invalid_argument);
}

TEST_CASE("gauss_sum agrees with brute force") {
    for (int64_t q : {3, 5, 7, 8, 12, 17, 30, 49}) {
        for (int64_t p : units(q)) {
            for (int64_t m = 0; m < q; ++m) {
                auto a = gauss_sum(p, m, q);
                auto b = brute_gauss(p, m, q);
                REQUIRE(std::abs(a - b) < 1e-9 * std::sqrt((double)q));
            }
        }
    }
}

TEST_CASE("gauss_sum_all_m matches single evaluation") {
    for (int64_t q : {5, 6, 8, 13}) {
        for (int64_t p : units(q)) {
            auto row = gauss_sum_all_m(p, q);
            REQUIRE(row.size() == static_cast<std::size_t>(q));
            for (int64_t m = 0; m < q; ++m) {
                REQUIRE(std::abs(row[m] - gauss_sum(p, m, q)) < 1e-10 * std::sqrt((double)q));
            }
        }
    }
}

TEST_CASE("magnitude law") {
    CHECK(magnitude_class(1, 0, 5) == MagnitudeClass::SqrtQ);
    CHECK(magnitude_class(1, 0, 4) == MagnitudeClass::Sqrt2Q);
    CHECK(magnitude_class(1, 1, 4) == MagnitudeClass::Zero);
    CHECK(magnitude_class(1, 1, 6) == MagnitudeClass::Sqrt2Q);
    for (int64_t q = 2; q <= 80; ++q) {
        for (int64_t p : units(q)) {
            for (int64_t m = 0; m < q; ++m) {
                const double mag = std::abs(gauss_sum(p, m, q));
                const double want = magnitude_of(magnitude_class(p, m, q), q);
                REQUIRE(std::abs(mag - want) <= 1e-9 * std::sqrt((double)q));
            }
        }
    }
}

TEST_CASE("index periodicity") {
    for (int64_t q : {5, 6, 8}) {
        for (int64_t m = 0; m < q; ++m) {
            auto a = gauss_sum(1, m, q);
            auto b = gauss_sum(1, m + q, q);
            REQUIRE(a == b);  // exact: index reduced before evaluation
        }
    }
}

TEST_CASE("phase") {
    CHECK(phase(1, 0, 3) == Approx(3 * kPi / 2));
    CHECK(std::abs(phase(1, 0, 1)) < 1e-12);
    CHECK_THROWS_AS(phase(1, 1, 4), PhaseUndefinedError);
}

TEST_CASE("phase_increment examples") {
    CHECK(phase_increment(1, 0, 5) == Approx(8 * kPi / 5));
    CHECK(phase_increment(1, 0, 3) == Approx(2 * kPi / 3));
    CHECK(phase_increment(1, 0, 4) == Approx(kPi / 2));
    // q = 6 corner at m = 1 pairs indices 1 -> 3
    CHECK(phase_increment(1, 1, 6) == Approx(2 * kPi / 3));
}

TEST_CASE("increment indices per parity class") {
    CHECK(increment_indices(ParityClass::OddQ, 2) == std::pair<int64_t, int64_t>{2, 3});
    CHECK(increment_indices(ParityClass::HalfOdd, 1) == std::pair<int64_t, int64_t>{1, 3});
    CHECK(increment_indices(ParityClass::HalfEven, 0) == std::pair<int64_t, int64_t>{0, 2});
}
