#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "filament/theta.hpp"

namespace filament {

enum class Family {
    PlanarHyperbolic,
    HyperbolicHelical,
    CircularHelical,
    EuclideanHelical,
};

const char* to_string(Family f);
std::optional<Family> family_from_string(const std::string& name);

struct FamilyConfig {
    Family family = Family::PlanarHyperbolic;
    int64_t q = 0;
    int64_t m = 0;
    double theta0 = 0.0;  // must be 0 for the planar family
    double rho = 0.5;     // corner angle parameter, >= 0

    void validate() const;  // throws std::invalid_argument
};

struct Circle {
    std::complex<double> center;
    double radius = 0.0;
};

// Hyperbolic families: center i*cosh^2(rho), radius sinh^2(rho).
// Euclidean helical:   center i*cos^2(rho),  radius sin^2(rho).
Circle circle_params(const FamilyConfig& config);

struct CirclePoint {
    int64_t p = 0;
    std::complex<double> z;
    std::optional<UPoint> u;  // set when the modulus shape supports u_p
};

// z_{q,m}(p); requires gcd(p, q) = 1.
//   hyperbolic families: z = i*cosh^2(rho) + i*sinh^2(rho)*exp(-i*vartheta)
//   Euclidean helical:   z = i*cos^2(rho)  - i*sin^2(rho) *exp(+i*vartheta)
CirclePoint z_point(const FamilyConfig& config, int64_t p);

// Single-pass stream over admissible p in ascending order. When with_u is
// set the modulus must have a supported shape and the 2^w case also emits
// p = 0; otherwise z alone is produced for any q >= 3.
class ZStream {
public:
    ZStream(FamilyConfig config, bool with_u);

    const Circle& circle() const { return circle_; }
    std::size_t size() const { return seeds_.size(); }
    std::optional<CirclePoint> next();

private:
    FamilyConfig config_;
    bool with_u_;
    Circle circle_;
    std::vector<int64_t> seeds_;
    std::vector<UPoint> u_points_;  // aligned with seeds_ when with_u_
    std::size_t pos_ = 0;
};

struct PointSet {
    FamilyConfig config;
    Circle circle;
    std::vector<CirclePoint> points;
};

PointSet generate(const FamilyConfig& config, bool with_u);

}  // namespace filament
