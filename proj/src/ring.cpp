#include "filament/ring.hpp"

#include <numeric>
#include <stdexcept>

namespace filament {

const char* to_string(ParityClass pc) {
    switch (pc) {
        case ParityClass::OddQ: return "odd";
        case ParityClass::HalfOdd: return "half-odd";
        case ParityClass::HalfEven: return "half-even";
    }
    return "?";
}

int64_t gcd(int64_t a, int64_t b) {
    if (a == 0 && b == 0) {
        throw std::invalid_argument("gcd(0, 0) is undefined");
    }
    return std::gcd(a, b);
}

int64_t mod_inverse(int64_t a, int64_t q) {
    if (q < 2) {
        throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    }
    int64_t r = a % q;
    if (r < 0) r += q;

    // Extended Euclid on (r, q); works for composite q as long as
    // gcd(r, q) = 1.
    int64_t old_r = r, cur_r = q;
    int64_t old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        const int64_t quot = old_r / cur_r;
        int64_t tmp = old_r - quot * cur_r;
        old_r = cur_r;
        cur_r = tmp;
        tmp = old_s - quot * cur_s;
        old_s = cur_s;
        cur_s = tmp;
    }
    if (old_r != 1) {
        throw NoInverseError("mod_inverse: argument not a unit mod q");
    }
    int64_t inv = old_s % q;
    if (inv < 0) inv += q;
    return inv;
}

int64_t totient(int64_t q) {
    if (q < 1) {
        throw std::invalid_argument("totient: q must be >= 1");
    }
    int64_t result = q;
    int64_t n = q;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

ParityClass parity_class(int64_t q) {
    if (q < 2) {
        throw std::invalid_argument("parity_class: q must be >= 2");
    }
    if (q % 2 != 0) return ParityClass::OddQ;
    return ((q / 2) % 2 != 0) ? ParityClass::HalfOdd : ParityClass::HalfEven;
}

std::vector<int64_t> units(int64_t q) {
    if (q < 2) {
        throw std::invalid_argument("units: q must be >= 2");
    }
    std::vector<int64_t> out;
    for (int64_t p = 1; p < q; ++p) {
        if (std::gcd(p, q) == 1) out.push_back(p);
    }
    return out;
}

int64_t mul_mod(int64_t a, int64_t b, int64_t q) {
    return static_cast<int64_t>(static_cast<__int128>(a) * b % q);
}

namespace {

int64_t pow_mod(int64_t base, int64_t exp, int64_t mod) {
    int64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    int64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        int64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace filament
