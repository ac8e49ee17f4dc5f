#include "filament/zgen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace filament {

const char* to_string(Family f) {
    switch (f) {
        case Family::PlanarHyperbolic: return "planar-hyperbolic";
        case Family::HyperbolicHelical: return "hyperbolic-helical";
        case Family::CircularHelical: return "circular-helical";
        case Family::EuclideanHelical: return "euclidean-helical";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& name) {
    if (name == "planar-hyperbolic") return Family::PlanarHyperbolic;
    if (name == "hyperbolic-helical") return Family::HyperbolicHelical;
    if (name == "circular-helical") return Family::CircularHelical;
    if (name == "euclidean-helical") return Family::EuclideanHelical;
    return std::nullopt;
}

void FamilyConfig::validate() const {
    if (q < 3) throw std::invalid_argument("FamilyConfig: q must be >= 3");
    if (rho < 0.0) throw std::invalid_argument("FamilyConfig: rho must be >= 0");
    if (theta0 < 0.0) throw std::invalid_argument("FamilyConfig: theta0 must be >= 0");
    if (m < 0) throw std::invalid_argument("FamilyConfig: m must be >= 0");
    if (family == Family::PlanarHyperbolic && theta0 != 0.0) {
        throw std::invalid_argument("FamilyConfig: planar family requires theta0 = 0");
    }
}

Circle circle_params(const FamilyConfig& config) {
    if (config.family == Family::EuclideanHelical) {
        const double c = std::cos(config.rho);
        const double s = std::sin(config.rho);
        return {{0.0, c * c}, s * s};
    }
    const double c = std::cosh(config.rho);
    const double s = std::sinh(config.rho);
    return {{0.0, c * c}, s * s};
}

namespace {

std::complex<double> z_from_angle(const FamilyConfig& config, double angle) {
    const Circle circ = circle_params(config);
    const std::complex<double> i{0.0, 1.0};
    if (config.family == Family::EuclideanHelical) {
        return circ.center - i * circ.radius * std::exp(i * angle);
    }
    return circ.center + i * circ.radius * std::exp(-i * angle);
}

}  // namespace

CirclePoint z_point(const FamilyConfig& config, int64_t p) {
    config.validate();
    if (gcd(((p % config.q) + config.q) % config.q, config.q) != 1) {
        throw std::invalid_argument("z_point: gcd(p, q) must be 1");
    }
    const double angle = vartheta({config.q, config.m, config.theta0}, p);
    return {p, z_from_angle(config, angle), std::nullopt};
}

ZStream::ZStream(FamilyConfig config, bool with_u)
    : config_(config), with_u_(with_u), circle_(circle_params(config)) {
    config_.validate();
    if (with_u_) {
        u_points_ = u_seq(config_.q);  // throws for unsupported shapes
        seeds_.reserve(u_points_.size());
        for (const auto& up : u_points_) seeds_.push_back(up.p);
    } else {
        seeds_ = units(config_.q);
    }
}

std::optional<CirclePoint> ZStream::next() {
    if (pos_ >= seeds_.size()) return std::nullopt;
    const std::size_t i = pos_++;
    const int64_t p = seeds_[i];
    double angle;
    if (p == 0) {
        // 2^w stream only: phi(0) := (-1)^{-1} = q - 1 stands in for the
        // nonexistent p^{-1}.
        constexpr double two_pi = 2.0 * std::numbers::pi;
        const double phi = static_cast<double>(config_.q - 1);
        angle = (two_pi * phi * (2.0 * static_cast<double>(config_.m) + 1.0) +
                 2.0 * config_.theta0) /
                static_cast<double>(config_.q);
    } else {
        angle = vartheta({config_.q, config_.m, config_.theta0}, p);
    }
    CirclePoint pt{p, z_from_angle(config_, angle), std::nullopt};
    if (with_u_) pt.u = u_points_[i];
    return pt;
}

PointSet generate(const FamilyConfig& config, bool with_u) {
    ZStream stream(config, with_u);
    PointSet out{config, stream.circle(), {}};
    out.points.reserve(stream.size());
    while (auto pt = stream.next()) out.points.push_back(*pt);
    return out;
}

}  // namespace filament
