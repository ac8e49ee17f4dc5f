#pragma once

#include <cstdint>
#include <vector>

#include "filament/errors.hpp"

namespace filament {

using std::int64_t;

// Parity regime of the modulus q; drives the index bookkeeping everywhere.
enum class ParityClass {
    OddQ,      // q odd
    HalfOdd,   // q == 2 mod 4
    HalfEven,  // q == 0 mod 4
};

const char* to_string(ParityClass pc);

// gcd with the convention gcd(0, n) = n; both arguments zero is an error.
int64_t gcd(int64_t a, int64_t b);

// x in [1, q) with a*x == 1 mod q. Throws NoInverseError when
// gcd(a mod q, q) != 1 (in particular for a == 0 mod q).
int64_t mod_inverse(int64_t a, int64_t q);

// Euler's totient.
int64_t totient(int64_t q);

ParityClass parity_class(int64_t q);

// All p in [1, q) coprime to q, ascending.
std::vector<int64_t> units(int64_t q);

bool is_prime(int64_t n);

// (a * b) mod q through a 128-bit intermediate; a, b in [0, q).
int64_t mul_mod(int64_t a, int64_t b, int64_t q);

}  // namespace filament
