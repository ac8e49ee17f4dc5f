#include "filament/eicg.hpp"

#include <numeric>
#include <stdexcept>

namespace filament {

namespace {

int64_t reduce(int64_t a, int64_t q) {
    int64_t r = a % q;
    return r < 0 ? r + q : r;
}

int64_t inv_or_zero(int64_t a, int64_t q) {
    const int64_t r = reduce(a, q);
    return r == 0 ? 0 : mod_inverse(r, q);
}

}  // namespace

std::vector<int64_t> lcg_seq(int64_t q, int64_t a, int64_t b, int64_t x0, int64_t count) {
    if (q < 2) throw std::invalid_argument("lcg_seq: q must be >= 2");
    if (count < 0) throw std::invalid_argument("lcg_seq: count must be >= 0");
    std::vector<int64_t> out;
    out.reserve(count);
    int64_t x = reduce(x0, q);
    const int64_t ar = reduce(a, q), br = reduce(b, q);
    for (int64_t i = 0; i < count; ++i) {
        x = reduce(mul_mod(ar, x, q) + br, q);
        out.push_back(x);
    }
    return out;
}

std::vector<int64_t> eicg_seq(int64_t q, int64_t a, int64_t b, int64_t n0, int64_t count) {
    if (count < 0) throw std::invalid_argument("eicg_seq: count must be >= 0");
    const bool power_of_two = q >= 4 && (q & (q - 1)) == 0;
    if (!power_of_two && !is_prime(q)) {
        throw std::invalid_argument("eicg_seq: q must be prime (or a power of two)");
    }
    if (reduce(a, q) == 0) throw std::invalid_argument("eicg_seq: a must be nonzero mod q");
    std::vector<int64_t> out;
    out.reserve(count);
    for (int64_t n = n0; n < n0 + count; ++n) {
        const int64_t arg = reduce(reduce(a, q) * reduce(n, q) % q + b, q);
        if (power_of_two && arg != 0 && arg % 2 == 0) {
            throw NoInverseError("eicg_seq: even argument has no inverse mod 2^w");
        }
        out.push_back(inv_or_zero(arg, q));
    }
    return out;
}

std::vector<int64_t> icg_seq(int64_t q, int64_t a, int64_t b, int64_t x0, int64_t count) {
    if (!is_prime(q)) throw std::invalid_argument("icg_seq: q must be prime");
    if (count < 0) throw std::invalid_argument("icg_seq: count must be >= 0");
    std::vector<int64_t> out;
    out.reserve(count);
    int64_t x = reduce(x0, q);
    for (int64_t i = 0; i < count; ++i) {
        x = reduce(mul_mod(reduce(a, q), inv_or_zero(x, q), q) + b, q);
        out.push_back(x);
    }
    return out;
}

double compound_u(const std::vector<int64_t>& moduli, int64_t p) {
    if (moduli.empty()) throw std::invalid_argument("compound_u: need at least one modulus");
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        const int64_t q = moduli[i];
        if (q < 5 || !is_prime(q)) {
            throw std::invalid_argument("compound_u: moduli must be primes >= 5");
        }
        if (std::gcd(reduce(p, q), q) != 1) {
            throw std::invalid_argument("compound_u: gcd(p, q_i) must be 1");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (moduli[j] == q) {
                throw std::invalid_argument("compound_u: moduli must be pairwise distinct");
            }
        }
    }
    // Sum x_i/q_i exactly over the common denominator, then take the
    // fractional part.
    __int128 den = 1;
    for (int64_t q : moduli) den *= q;
    __int128 num = 0;
    for (int64_t q : moduli) {
        const int64_t x = mod_inverse(4 * reduce(p, q) % q, q);
        num += static_cast<__int128>(x) * (den / q);
    }
    num %= den;
    return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace filament
