#include "filament/gauss.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace filament {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_args(int64_t p, int64_t q) {
    if (q < 1) {
        throw std::invalid_argument("gauss_sum: q must be >= 1");
    }
    if (std::gcd(((p % q) + q) % q, q) != 1 && q > 1) {
        throw std::invalid_argument("gauss_sum: gcd(p, q) must be 1");
    }
}

// ((q - p)*n^2 + m*n) mod q with p, m already reduced to [0, q).
int64_t exponent(int64_t p_red, int64_t m_red, int64_t q, int64_t n) {
    __int128 e = static_cast<__int128>((q - p_red) % q) * n % q;
    e = (e * n + static_cast<__int128>(m_red) * n) % q;
    return static_cast<int64_t>(e);
}

}  // namespace

const char* to_string(MagnitudeClass mc) {
    switch (mc) {
        case MagnitudeClass::SqrtQ: return "sqrt(q)";
        case MagnitudeClass::Sqrt2Q: return "sqrt(2q)";
        case MagnitudeClass::Zero: return "zero";
    }
    return "?";
}

std::complex<double> gauss_sum(int64_t p, int64_t m, int64_t q) {
    check_args(p, q);
    const int64_t pr = ((p % q) + q) % q;
    const int64_t mr = ((m % q) + q) % q;
    double re = 0.0, im = 0.0;
    for (int64_t n = 0; n < q; ++n) {
        const double ang = kTwoPi * static_cast<double>(exponent(pr, mr, q, n)) / static_cast<double>(q);
        re += std::cos(ang);
        im += std::sin(ang);
    }
    return {re, im};
}

std::vector<std::complex<double>> gauss_sum_all_m(int64_t p, int64_t q) {
    check_args(p, q);
    const int64_t pr = ((p % q) + q) % q;

    std::vector<double> root_re(q), root_im(q);
    for (int64_t k = 0; k < q; ++k) {
        const double ang = kTwoPi * static_cast<double>(k) / static_cast<double>(q);
        root_re[k] = std::cos(ang);
        root_im[k] = std::sin(ang);
    }

    // idx[n] tracks ((q - p)*n^2 + m*n) mod q; stepping m -> m+1 adds n.
    std::vector<int64_t> idx(q);
    for (int64_t n = 0; n < q; ++n) {
        idx[n] = exponent(pr, 0, q, n);
    }

    std::vector<std::complex<double>> out(q);
    for (int64_t m = 0; m < q; ++m) {
        double re = 0.0, im = 0.0;
        for (int64_t n = 0; n < q; ++n) {
            re += root_re[idx[n]];
            im += root_im[idx[n]];
            idx[n] += n;
            if (idx[n] >= q) idx[n] -= q;
        }
        out[m] = {re, im};
    }
    return out;
}

MagnitudeClass magnitude_class(int64_t p, int64_t m, int64_t q) {
    check_args(p, q);
    if (q % 2 != 0) return MagnitudeClass::SqrtQ;
    const int64_t mr = ((m % q) + q) % q;
    return ((q / 2) % 2 == mr % 2) ? MagnitudeClass::Sqrt2Q : MagnitudeClass::Zero;
}

double magnitude_of(MagnitudeClass mc, int64_t q) {
    switch (mc) {
        case MagnitudeClass::SqrtQ: return std::sqrt(static_cast<double>(q));
        case MagnitudeClass::Sqrt2Q: return std::sqrt(2.0 * static_cast<double>(q));
        case MagnitudeClass::Zero: return 0.0;
    }
    return 0.0;
}

namespace {

double arg_in_two_pi(std::complex<double> z) {
    double a = std::arg(z);
    if (a < 0) a += kTwoPi;
    if (a >= kTwoPi) a -= kTwoPi;
    return a;
}

}  // namespace

double phase(int64_t p, int64_t m, int64_t q) {
    if (magnitude_class(p, m, q) == MagnitudeClass::Zero) {
        throw PhaseUndefinedError("phase: Gauss sum vanishes for this (m, q)");
    }
    return arg_in_two_pi(gauss_sum(p, m, q));
}

std::pair<int64_t, int64_t> increment_indices(ParityClass pc, int64_t m) {
    switch (pc) {
        case ParityClass::OddQ: return {m, m + 1};
        case ParityClass::HalfOdd: return {2 * m - 1, 2 * m + 1};
        case ParityClass::HalfEven: return {2 * m, 2 * m + 2};
    }
    throw std::logic_error("increment_indices: bad parity class");
}

double phase_increment(int64_t p, int64_t m, int64_t q) {
    const ParityClass pc = q == 1 ? ParityClass::OddQ : parity_class(q);
    const auto [base, succ] = increment_indices(pc, m);
    const auto g0 = gauss_sum(p, base, q);
    const auto g1 = gauss_sum(p, succ, q);
    const double floor_mag = 0.5 * std::sqrt(static_cast<double>(q));
    if (std::abs(g0) < floor_mag || std::abs(g1) < floor_mag) {
        throw std::logic_error("phase_increment: zero Gauss sum; parity-class successor is wrong");
    }
    return arg_in_two_pi(g1 * std::conj(g0));
}

}  // namespace filament
