#pragma once

#include <cstdint>
#include <vector>

#include "filament/ring.hpp"

namespace filament {

// x_{n+1} = a*x_n + b mod q, returning x_1 .. x_count.
std::vector<int64_t> lcg_seq(int64_t q, int64_t a, int64_t b, int64_t x0, int64_t count);

// Explicit inversive generator x_n = inv(a*n + b) mod q for n = n0 ..
// n0+count-1, with the EICG convention inv(0) := 0. Requires prime q and
// a != 0 mod q. For q = 2^w the generator is also defined as long as
// every evaluated argument a*n + b is odd or zero.
std::vector<int64_t> eicg_seq(int64_t q, int64_t a, int64_t b, int64_t n0, int64_t count);

// Recurrent inversive generator x_{n+1} = a*inv(x_n) + b mod q, prime q.
// Provided for reference only; no statistical claims attach to it here.
std::vector<int64_t> icg_seq(int64_t q, int64_t a, int64_t b, int64_t x0, int64_t count);

// frac( sum_i ((4p)^{-1} mod q_i) / q_i ) over pairwise distinct primes
// q_i >= 5 with gcd(p, q_i) = 1; the compound combination of the
// odd-prime parameterizations. Computed as an exact rational before the
// final division.
double compound_u(const std::vector<int64_t>& moduli, int64_t p);

}  // namespace filament
