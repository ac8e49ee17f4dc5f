#pragma once

#include <cstdint>
#include <vector>

#include "filament/ring.hpp"

namespace filament {

// Modulus shapes for which the normalized sequence u_p is defined.
enum class ModulusShape { OddPrime, TwicePrime, PowerOfTwo, Unsupported };

ModulusShape modulus_shape(int64_t q);

struct ThetaParams {
    int64_t q = 0;
    int64_t m = 0;        // vertex index
    double theta0 = 0.0;  // torsion angle, >= 0
};

// The ring inverse that drives the angle: (4p)^{-1} mod q for odd q,
// p^{-1} mod (q/2) for q == 2 mod 4, p^{-1} mod q for q == 0 mod 4.
int64_t phi_of_p(int64_t p, int64_t q);

// Closed-form corner angle (radians, not reduced):
//   odd q:        (2*pi*phi*(2m+1) + theta0) / q
//   q == 2 mod 4: (2*pi*phi*m + theta0) / (q/2)
//   q == 0 mod 4: (2*pi*phi*(2m+1) + 2*theta0) / q
// With theta0 = 0 this is the planar angle.
double vartheta(const ThetaParams& params, int64_t p);

// Default vertex index: 1 for q == 2 mod 4, else 0.
int64_t default_m(int64_t q);

// Vertex index violating the maximum-period gcd condition; the sequence
// is still defined but its value count drops.
bool is_degenerate_m(int64_t q, int64_t m);

struct UPoint {
    int64_t p = 0;
    int64_t numerator = 0;    // x_p, the ring inverse
    int64_t denominator = 1;  // q or q/2
    double u() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

// Normalized sequence over all admissible p, ascending:
//   q odd prime:   u_p = ((4p)^{-1} mod q) / q,        p in [1, q)
//   q/2 odd prime: u_p = (p^{-1} mod (q/2)) / (q/2),   p in units(q)
//   q = 2^w, w>=2: u_p = ((2p-1)^{-1} mod q) / q,      p in {0} + units(q)
// Throws UnsupportedModulusError for any other q.
std::vector<UPoint> u_seq(int64_t q);

}  // namespace filament
