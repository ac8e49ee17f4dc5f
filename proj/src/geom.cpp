#include "filament/geom.hpp"

#include <cmath>

#include "filament/gauss.hpp"

namespace filament {

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) {
            const double aik = a[i][k];
            for (int j = 0; j < 3; ++j) {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    return out;
}

Vec3 first_row(const Mat3& m) {
    return {m[0][0], m[0][1], m[0][2]};
}

Mat3 corner_matrix(Geometry geom, double rho, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    if (geom == Geometry::Euclidean) {
        const double cr = std::cos(rho);
        const double sr = std::sin(rho);
        const double v = 1.0 - cr;  // versine
        return {{{cr, sr * c, sr * s},
                 {-sr * c, 1.0 - v * c * c, -v * c * s},
                 {-sr * s, -v * c * s, 1.0 - v * s * s}}};
    }
    const double ch = std::cosh(rho);
    const double sh = std::sinh(rho);
    const double v = ch - 1.0;
    return {{{ch, sh * c, sh * s},
             {sh * c, 1.0 + v * c * c, v * c * s},
             {sh * s, v * c * s, 1.0 + v * s * s}}};
}

std::vector<Vec3> tangent_chain(Geometry geom, double rho, std::span<const double> thetas) {
    std::vector<Vec3> out;
    out.reserve(thetas.size() + 1);
    out.push_back({1.0, 0.0, 0.0});
    Mat3 acc{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (double theta : thetas) {
        acc = mat_mul(corner_matrix(geom, rho, theta), acc);
        out.push_back(first_row(acc));
    }
    return out;
}

double scalar_product(Geometry geom, const Vec3& a, const Vec3& b) {
    if (geom == Geometry::Euclidean) {
        return a.x * b.x + a.y * b.y + a.z * b.z;
    }
    return a.x * b.x - a.y * b.y - a.z * b.z;
}

Vec3 cross_product(Geometry geom, const Vec3& a, const Vec3& b) {
    const Vec3 e{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    if (geom == Geometry::Euclidean) return e;
    return {e.x, -e.y, -e.z};
}

double triple_product(Geometry geom, const Vec3& a, const Vec3& b, const Vec3& c) {
    return scalar_product(geom, cross_product(geom, a, b), c);
}

std::pair<double, double> oracle_xy(const FamilyConfig& config, int64_t p) {
    config.validate();
    const auto [base, succ] = increment_indices(parity_class(config.q), config.m);
    const double torsion_step = config.theta0 / static_cast<double>(config.q);
    const double t0 = phase(p, base, config.q) + static_cast<double>(base) * torsion_step;
    const double t1 = phase(p, succ, config.q) + static_cast<double>(succ) * torsion_step;
    const Geometry geom = config.family == Family::EuclideanHelical ? Geometry::Euclidean
                                                                    : Geometry::Minkowski;
    const std::array<double, 2> thetas{t0, t1};
    const auto chain = tangent_chain(geom, config.rho, thetas);
    const double x = triple_product(geom, chain[0], chain[1], chain[2]);
    const double y = scalar_product(geom, chain[0], chain[2]);
    return {x, y};
}

CrossCheckReport cross_check(const FamilyConfig& config, int64_t p, double tol) {
    const auto closed = z_point(config, p);
    const auto [xo, yo] = oracle_xy(config, p);
    CrossCheckReport rep;
    rep.x_closed = closed.z.real();
    rep.y_closed = closed.z.imag();
    rep.x_oracle = xo;
    rep.y_oracle = yo;
    rep.max_abs_err = std::max(std::abs(rep.x_closed - xo), std::abs(rep.y_closed - yo));
    rep.pass = rep.max_abs_err <= tol;
    return rep;
}

}  // namespace filament
