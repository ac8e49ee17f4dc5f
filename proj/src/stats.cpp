#include "filament/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "filament/theta.hpp"

namespace filament {

double star_discrepancy(std::span<const double> points) {
    if (points.empty()) throw std::invalid_argument("star_discrepancy: empty input");
    if (points.size() > kStarDiscrepancyCap) {
        throw std::invalid_argument("star_discrepancy: sample exceeds documented cap");
    }
    std::vector<double> xs(points.begin(), points.end());
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double best = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double hi = static_cast<double>(i + 1) / n - xs[i];
        const double lo = xs[i] - static_cast<double>(i) / n;
        best = std::max({best, hi, lo});
    }
    return best;
}

double star_discrepancy_2d(std::span<const double> xs, std::span<const double> ys) {
    if (xs.empty() || xs.size() != ys.size()) {
        throw std::invalid_argument("star_discrepancy_2d: bad input sizes");
    }
    const std::size_t n = xs.size();
    if (n > kSerialPairCap) {
        throw std::invalid_argument("star_discrepancy_2d: sample exceeds documented cap");
    }

    // Grid of observed coordinates plus the outer corner 1.
    std::vector<double> gx(xs.begin(), xs.end()), gy(ys.begin(), ys.end());
    gx.push_back(1.0);
    gy.push_back(1.0);
    std::sort(gx.begin(), gx.end());
    gx.erase(std::unique(gx.begin(), gx.end()), gx.end());
    std::sort(gy.begin(), gy.end());
    gy.erase(std::unique(gy.begin(), gy.end()), gy.end());

    auto rank = [](const std::vector<double>& grid, double v) {
        return static_cast<std::size_t>(std::lower_bound(grid.begin(), grid.end(), v) - grid.begin());
    };

    // Bucket points by x-rank; y-rank stored per point.
    std::vector<std::vector<std::size_t>> by_x(gx.size());
    for (std::size_t i = 0; i < n; ++i) {
        by_x[rank(gx, xs[i])].push_back(rank(gy, ys[i]));
    }

    // Sweep x corners; closed counts include points with x == gx[i],
    // strict counts lag by one corner.
    std::vector<double> closed(gy.size(), 0.0), strict(gy.size(), 0.0);
    const double nd = static_cast<double>(n);
    double best = 0.0;
    for (std::size_t i = 0; i < gx.size(); ++i) {
        for (std::size_t r : by_x[i]) closed[r] += 1.0;
        if (i > 0) {
            for (std::size_t r : by_x[i - 1]) strict[r] += 1.0;
        }
        double acc_closed = 0.0, acc_strict = 0.0;
        for (std::size_t j = 0; j < gy.size(); ++j) {
            // strict prefix excludes y == gy[j]
            const double vol = gx[i] * gy[j];
            best = std::max(best, vol - acc_strict / nd);
            acc_closed += closed[j];
            acc_strict += strict[j];
            best = std::max(best, acc_closed / nd - vol);
        }
    }
    return best;
}

double serial_pairs_discrepancy(std::span<const double> points, bool overlapping) {
    if (points.size() < 2) {
        throw std::invalid_argument("serial_pairs_discrepancy: need at least 2 points");
    }
    std::vector<double> xs, ys;
    if (overlapping) {
        for (std::size_t i = 0; i + 1 < points.size(); ++i) {
            xs.push_back(points[i]);
            ys.push_back(points[i + 1]);
        }
    } else {
        for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
            xs.push_back(points[i]);
            ys.push_back(points[i + 1]);
        }
    }
    return star_discrepancy_2d(xs, ys);
}

namespace {

// Lower regularized gamma by series, for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 1000; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized gamma by Lentz continued fraction, for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

ChiSquareResult chi_square_uniform(std::span<const double> points, int bins) {
    if (bins < 2) throw std::invalid_argument("chi_square_uniform: bins must be >= 2");
    if (points.size() < static_cast<std::size_t>(5 * bins)) {
        throw std::invalid_argument("chi_square_uniform: need at least 5 samples per bin");
    }
    std::vector<int64_t> counts(bins, 0);
    for (double v : points) {
        if (v < 0.0 || v >= 1.0) throw std::invalid_argument("chi_square_uniform: point outside [0,1)");
        auto b = static_cast<std::size_t>(v * bins);
        if (b >= static_cast<std::size_t>(bins)) b = bins - 1;
        ++counts[b];
    }
    const double expected = static_cast<double>(points.size()) / bins;
    double stat = 0.0;
    for (int64_t c : counts) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return {stat, gamma_q(0.5 * (bins - 1), 0.5 * stat)};
}

bool permutation_check(int64_t q) {
    const auto seq = u_seq(q);  // throws UnsupportedModulusError
    std::set<int64_t> seen;
    for (const auto& up : seq) {
        if (!seen.insert(up.numerator).second) return false;
    }
    const int64_t den = seq.front().denominator;
    if (static_cast<int64_t>(seen.size()) != den - 1) return false;
    return *seen.begin() == 1 && *seen.rbegin() == den - 1;
}

CircleTestResult circle_test(std::span<const CirclePoint> points, const Circle& circle,
                             double tol) {
    if (points.empty()) throw std::invalid_argument("circle_test: empty input");
    CircleTestResult res;
    res.pass = true;
    std::vector<double> angles;
    angles.reserve(points.size());
    constexpr double two_pi = 2.0 * 3.14159265358979323846;
    for (const auto& pt : points) {
        const double r = std::abs(pt.z - circle.center);
        const double err = std::abs(r - circle.radius);
        res.max_radial_err = std::max(res.max_radial_err, err);
        const double thresh = circle.radius > 0.0 ? tol * circle.radius : tol;
        if (err > thresh) res.pass = false;
        if (circle.radius > 0.0) {
            double a = std::arg(pt.z - circle.center);
            if (a < 0) a += two_pi;
            angles.push_back(a / two_pi);
        }
    }
    if (!angles.empty()) res.angle_discrepancy = star_discrepancy(angles);
    return res;
}

}  // namespace filament
