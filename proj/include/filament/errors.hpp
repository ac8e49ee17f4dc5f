#pragma once

#include <stdexcept>
#include <string>

namespace filament {

/// Requested a multiplicative inverse of an element that has none.
struct NoInverseError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Modulus is not one of the supported shapes (odd prime, twice an odd
/// prime, or a power of two >= 4).
struct UnsupportedModulusError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Phase of a Gauss sum whose magnitude class is zero.
struct PhaseUndefinedError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace filament
