#include "doctest.h"

#include <numeric>

#include "filament/ring.hpp"

using namespace filament;

TEST_CASE("gcd basics") {
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(1, 97) == 1);
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(7, 0) == 7);
    CHECK_THROWS_AS(gcd(0, 0), std::invalid_argument);
}

TEST_CASE("mod_inverse examples and errors") {
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(1, 12345) == 1);
    CHECK_THROWS_AS(mod_inverse(4, 8), NoInverseError);
    CHECK_THROWS_AS(mod_inverse(0, 7), NoInverseError);
    CHECK_THROWS_AS(mod_inverse(3, 1), std::invalid_argument);
    // negative arguments reduce first
    CHECK(mod_inverse(-1, 8) == 7);
}

TEST_CASE("totient") {
    CHECK(totient(7) == 6);
    CHECK(totient(12) == 4);
    CHECK(totient(1) == 1);
    CHECK(totient(2) == 1);
    CHECK(totient(9973) == 9972);  // prime
}

TEST_CASE("parity_class") {
    CHECK(parity_class(7) == ParityClass::OddQ);
    CHECK(parity_class(6) == ParityClass::HalfOdd);
    CHECK(parity_class(8) == ParityClass::HalfEven);
    CHECK(parity_class(2) == ParityClass::HalfOdd);
}

TEST_CASE("units") {
    CHECK(units(8) == std::vector<int64_t>{1, 3, 5, 7});
    CHECK(units(12) == std::vector<int64_t>{1, 5, 7, 11});
    CHECK(units(7).size() == 6);
}

TEST_CASE("inverse law and involution across moduli") {
    // a * inv(a) == 1 and inv(inv(a)) == a for every unit; |units| == phi.
    for (int64_t q = 2; q <= 2000; ++q) {
        const auto us = units(q);
        REQUIRE(static_cast<int64_t>(us.size()) == totient(q));
        for (int64_t a : us) {
            const int64_t inv = mod_inverse(a, q);
            REQUIRE(a * inv % q == 1);
            REQUIRE(mod_inverse(inv, q) == a);
        }
    }
    // spot-check the upper end of the documented range
    for (int64_t q : {9999, 10000, 9973, 8192}) {
        for (int64_t a : units(q)) {
            REQUIRE(mul_mod(a, mod_inverse(a, q), q) == 1);
        }
    }
}

TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK(is_prime(10007));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(10005));
    CHECK(is_prime(2147483647));  // 2^31 - 1
    CHECK_FALSE(is_prime(3215031751LL));  // strong pseudoprime to bases 2,3,5,7
}
