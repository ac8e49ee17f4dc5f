#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "filament/zgen.hpp"

namespace filament {

// Documented caps for the exact discrepancy computations.
inline constexpr std::size_t kStarDiscrepancyCap = 1'000'000;
inline constexpr std::size_t kSerialPairCap = 5'000;

// Exact 1-D star discrepancy D*_N over sorted points:
// max_i max(i/N - x_(i), x_(i) - (i-1)/N). Points must lie in [0, 1).
double star_discrepancy(std::span<const double> points);

// Exact 2-D star discrepancy of the overlapping pairs (u_i, u_{i+1})
// (non-overlapping pairs when overlapping = false), by corner scan over
// the grid of observed coordinates. N is capped at kSerialPairCap.
double serial_pairs_discrepancy(std::span<const double> points, bool overlapping = true);

// Exact 2-D star discrepancy of explicit pairs; the serial test above is
// a thin wrapper over this.
double star_discrepancy_2d(std::span<const double> xs, std::span<const double> ys);

struct ChiSquareResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

// Equal-width-bin chi-square against the uniform law on [0, 1);
// p-value = Q((bins-1)/2, statistic/2) via the regularized upper
// incomplete gamma. Requires bins >= 2 and N >= 5*bins.
ChiSquareResult chi_square_uniform(std::span<const double> points, int bins);

// Regularized upper incomplete gamma Q(a, x), series/continued-fraction.
double gamma_q(double a, double x);

// True iff the u_seq numerators for q form exactly the expected residue
// set with no repeats ({1..q-1} for an odd prime, {1..q/2-1} for twice a
// prime); the 2^w shape always fails this by its period-q/2 collision.
bool permutation_check(int64_t q);

struct CircleTestResult {
    bool pass = false;
    double max_radial_err = 0.0;    // max | |z-center| - radius |, absolute
    double angle_discrepancy = 0.0; // D*_N of the pulled-back angles
};

// Membership of every point on the configured circumference within
// tol*radius, plus the equidistribution of the pulled-back angles.
CircleTestResult circle_test(std::span<const CirclePoint> points, const Circle& circle,
                             double tol);

struct TestReport {
    std::string name;
    std::size_t sample_size = 0;
    double statistic = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string detail;
};

}  // namespace filament
