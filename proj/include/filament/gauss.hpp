#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "filament/ring.hpp"

namespace filament {

enum class MagnitudeClass { SqrtQ, Sqrt2Q, Zero };

const char* to_string(MagnitudeClass mc);

// G(-p, m, q) = sum_{n=0}^{q-1} exp(2*pi*i*(-p*n^2 + m*n)/q), evaluated by
// direct summation. The exponent is reduced mod q in exact integer
// arithmetic before any trigonometry. Requires gcd(p, q) = 1, q >= 1;
// m is reduced mod q.
std::complex<double> gauss_sum(int64_t p, int64_t m, int64_t q);

// G(-p, m, q) for all m in [0, q) in one O(q^2) pass over a shared root
// table; used by the sweep harnesses.
std::vector<std::complex<double>> gauss_sum_all_m(int64_t p, int64_t q);

// |G(-p, m, q)| is sqrt(q) for odd q, sqrt(2q) when q is even and
// q/2 == m mod 2, and 0 otherwise.
MagnitudeClass magnitude_class(int64_t p, int64_t m, int64_t q);

double magnitude_of(MagnitudeClass mc, int64_t q);

// arg G(-p, m, q) in [0, 2*pi). Throws PhaseUndefinedError for the zero
// magnitude class.
double phase(int64_t p, int64_t m, int64_t q);

// Successor pair of Gauss-sum indices for the corner at vertex index m:
// (m, m+1) for odd q, (2m-1, 2m+1) for q == 2 mod 4, (2m, 2m+2) for
// q == 0 mod 4. Both indices land in the nonzero magnitude class.
std::pair<int64_t, int64_t> increment_indices(ParityClass pc, int64_t m);

// arg( G(-p, succ, q) * conj(G(-p, base, q)) ) in [0, 2*pi); the
// phase step theta_succ - theta_base across one corner.
double phase_increment(int64_t p, int64_t m, int64_t q);

}  // namespace filament
