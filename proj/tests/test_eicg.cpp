#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "filament/eicg.hpp"
#include "filament/theta.hpp"

using namespace filament;
using doctest::Approx;

TEST_CASE("lcg_seq") {
    CHECK(lcg_seq(8, 5, 1, 0, 4) == std::vector<int64_t>{1, 6, 7, 4});
    CHECK(lcg_seq(97, 1, 0, 42, 3) == std::vector<int64_t>{42, 42, 42});
    CHECK(lcg_seq(7, 3, 0, 1, 6) == std::vector<int64_t>{3, 2, 6, 4, 5, 1});
    CHECK(lcg_seq(7, 3, 0, 1, 0).empty());
}

TEST_CASE("eicg_seq") {
    CHECK(eicg_seq(7, 1, 0, 0, 7) == std::vector<int64_t>{0, 1, 4, 5, 2, 3, 6});
    CHECK(eicg_seq(7, 2, 3, 2, 1) == std::vector<int64_t>{0});  // 2*2+3 = 0 mod 7
    CHECK_THROWS_AS(eicg_seq(9, 1, 0, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(eicg_seq(7, 7, 0, 0, 3), std::invalid_argument);
}

TEST_CASE("eicg full period is a permutation of Z_q") {
    for (int64_t q : {5, 7, 11, 101, 1009}) {
        for (auto [a, b] : {std::pair<int64_t, int64_t>{1, 0}, {4, 0}, {3, 5}}) {
            auto seq = eicg_seq(q, a, b, 0, q);
            std::sort(seq.begin(), seq.end());
            bool perm = true;
            for (int64_t i = 0; i < q; ++i) perm = perm && seq[i] == i;
            CHECK(perm);
        }
    }
}

TEST_CASE("eicg power-of-two odd-argument mode") {
    // a*n + b = 2n - 1 stays odd: the q = 2^w generator of the u_p table
    auto seq = eicg_seq(8, 2, -1, 0, 4);
    CHECK(seq == std::vector<int64_t>{7, 1, 3, 5});
    // an even nonzero argument is rejected
    CHECK_THROWS_AS(eicg_seq(8, 2, 0, 1, 1), NoInverseError);
}

TEST_CASE("theta_gen matches eicg with (a,b) = (4,0)") {
    for (int64_t q : {5, 7, 13, 101}) {
        const auto us = u_seq(q);
        const auto es = eicg_seq(q, 4, 0, 1, q - 1);
        REQUIRE(us.size() == es.size());
        for (std::size_t i = 0; i < us.size(); ++i) {
            CHECK(us[i].numerator == es[i]);
        }
    }
}

TEST_CASE("icg_seq runs and stays in range") {
    auto seq = icg_seq(101, 3, 7, 1, 200);
    REQUIRE(seq.size() == 200);
    for (int64_t x : seq) {
        CHECK(x >= 0);
        CHECK(x < 101);
    }
    CHECK_THROWS_AS(icg_seq(8, 3, 7, 1, 2), std::invalid_argument);
}

TEST_CASE("compound_u examples") {
    CHECK(compound_u({5, 7}, 1) == Approx(3.0 / 35));
    CHECK(compound_u({5, 7}, 2) == Approx(19.0 / 35));
    CHECK(compound_u({5}, 3) == Approx(u_seq(5)[2].u()));
    CHECK_THROWS_AS(compound_u({5, 5}, 1), std::invalid_argument);
    CHECK_THROWS_AS(compound_u({4, 7}, 1), std::invalid_argument);
    CHECK_THROWS_AS(compound_u({5, 7}, 5), std::invalid_argument);
}

TEST_CASE("compound over the full {5,7} period is injective") {
    std::set<int64_t> values;  // numerators over the common denominator 35
    int64_t admissible = 0;
    for (int64_t p = 1; p < 35; ++p) {
        if (p % 5 == 0 || p % 7 == 0) continue;
        ++admissible;
        values.insert(std::llround(compound_u({5, 7}, p) * 35));
    }
    CHECK(admissible == 24);
    CHECK(values.size() == 24);
}
