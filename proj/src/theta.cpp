#include "filament/theta.hpp"

#include <numbers>
#include <stdexcept>

namespace filament {

ModulusShape modulus_shape(int64_t q) {
    if (q < 3) return ModulusShape::Unsupported;
    if (q % 2 != 0) {
        return is_prime(q) ? ModulusShape::OddPrime : ModulusShape::Unsupported;
    }
    if ((q & (q - 1)) == 0) return ModulusShape::PowerOfTwo;
    if (q % 4 == 2 && is_prime(q / 2)) return ModulusShape::TwicePrime;
    return ModulusShape::Unsupported;
}

int64_t phi_of_p(int64_t p, int64_t q) {
    switch (parity_class(q)) {
        case ParityClass::OddQ: {
            // q odd => 4 is a unit, so (4p) is a unit iff p is.
            const int64_t fourp = (4 * (((p % q) + q) % q)) % q;
            return mod_inverse(fourp, q);
        }
        case ParityClass::HalfOdd:
            return mod_inverse(p, q / 2);
        case ParityClass::HalfEven:
            return mod_inverse(p, q);
    }
    throw std::logic_error("phi_of_p: bad parity class");
}

double vartheta(const ThetaParams& params, int64_t p) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const int64_t q = params.q;
    const double phi = static_cast<double>(phi_of_p(p, q));
    const double m = static_cast<double>(params.m);
    switch (parity_class(q)) {
        case ParityClass::OddQ:
            return (two_pi * phi * (2.0 * m + 1.0) + params.theta0) / static_cast<double>(q);
        case ParityClass::HalfOdd:
            return (two_pi * phi * m + params.theta0) / static_cast<double>(q / 2);
        case ParityClass::HalfEven:
            return (two_pi * phi * (2.0 * m + 1.0) + 2.0 * params.theta0) / static_cast<double>(q);
    }
    throw std::logic_error("vartheta: bad parity class");
}

int64_t default_m(int64_t q) {
    return parity_class(q) == ParityClass::HalfOdd ? 1 : 0;
}

bool is_degenerate_m(int64_t q, int64_t m) {
    if (parity_class(q) == ParityClass::HalfOdd) {
        return gcd(q / 2, ((m % (q / 2)) + q / 2) % (q / 2)) != 1;
    }
    return gcd(q, ((2 * m + 1) % q + q) % q) != 1;
}

std::vector<UPoint> u_seq(int64_t q) {
    const ModulusShape shape = modulus_shape(q);
    std::vector<UPoint> out;
    switch (shape) {
        case ModulusShape::OddPrime:
            out.reserve(q - 1);
            for (int64_t p = 1; p < q; ++p) {
                out.push_back({p, mod_inverse(4 * p % q, q), q});
            }
            return out;
        case ModulusShape::TwicePrime: {
            const int64_t half = q / 2;
            for (int64_t p : units(q)) {
                out.push_back({p, mod_inverse(p, half), half});
            }
            return out;
        }
        case ModulusShape::PowerOfTwo:
            // p = 0 is admissible here: x_0 = (-1)^{-1} = q - 1.
            out.push_back({0, q - 1, q});
            for (int64_t p = 1; p < q; p += 2) {
                out.push_back({p, mod_inverse(2 * p - 1, q), q});
            }
            return out;
        case ModulusShape::Unsupported:
            break;
    }
    throw UnsupportedModulusError(
        "u_seq: q must be an odd prime, twice an odd prime, or 2^w (w >= 2)");
}

}  // namespace filament
