#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "filament/zgen.hpp"

namespace filament {

enum class Geometry { Euclidean, Minkowski };

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b);
Vec3 first_row(const Mat3& m);

// Frame transition across one corner of weight rho*e^{i*theta}:
// H = exp(rho*K) with K the frame-equation generator. First row is
// (cos rho, sin rho cos theta, sin rho sin theta) in the Euclidean case
// and (cosh rho, sinh rho cos theta, sinh rho sin theta) in the
// Minkowski one; H is orthogonal resp. eta-orthogonal with
// eta = diag(1, -1, -1).
Mat3 corner_matrix(Geometry geom, double rho, double theta);

// Tangents along the chain of corners: starts with T = (1,0,0), then for
// each theta_k the first row of H(theta_k) * ... * H(theta_0).
std::vector<Vec3> tangent_chain(Geometry geom, double rho, std::span<const double> thetas);

// Euclidean dot, or Minkowski a o_- b = a1*b1 - a2*b2 - a3*b3.
double scalar_product(Geometry geom, const Vec3& a, const Vec3& b);

// Euclidean cross, or a ^_- b = eta * (a x b).
Vec3 cross_product(Geometry geom, const Vec3& a, const Vec3& b);

// (a ^ b) o c; in both geometries this equals det[a; b; c].
double triple_product(Geometry geom, const Vec3& a, const Vec3& b, const Vec3& c);

// The from-first-principles evaluation of (x_{q,m}, y_{q,m}): Gauss-sum
// phases at the two successor indices (plus per-index torsion offsets
// k*theta0/q for helical families) feed two corner matrices; x is the
// triple product of the three consecutive tangents, y the scalar product
// of the outer two.
std::pair<double, double> oracle_xy(const FamilyConfig& config, int64_t p);

struct CrossCheckReport {
    double x_closed = 0.0, y_closed = 0.0;
    double x_oracle = 0.0, y_oracle = 0.0;
    double max_abs_err = 0.0;
    bool pass = false;
};

CrossCheckReport cross_check(const FamilyConfig& config, int64_t p, double tol);

}  // namespace filament
