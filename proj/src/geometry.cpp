#include "airis/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace airis {
namespace geom {

Position3D operator-(const Position3D& a, const Position3D& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

double norm(const Position3D& p) { return std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z); }

double dot(const Position3D& a, const Position3D& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

SphericalCoord to_spherical(const Position3D& p) {
    SphericalCoord s;
    s.d = norm(p);
    if (s.d == 0.0) return s;  // theta = phi = 0 at the origin
    double ratio = std::abs(p.z) / s.d;
    if (ratio > 1.0) ratio = 1.0;
    s.theta = std::asin(ratio);
    s.phi = std::atan2(p.y, p.x);
    if (s.phi >= M_PI) s.phi -= 2.0 * M_PI;
    return s;
}

double rician_k_factor(double theta, double k1, double k2) {
    if (theta < 0.0 || theta > M_PI / 2.0 + 1e-12) {
        throw std::domain_error("rician_k_factor: theta outside [0, pi/2]");
    }
    return k1 * std::exp(k2 * theta);
}

double k2_from_calibration(double k0_linear, double k_pi_linear) {
    if (k0_linear <= 0.0 || k_pi_linear <= 0.0) {
        throw std::domain_error("k2_from_calibration: K values must be positive");
    }
    return (2.0 / M_PI) * std::log(k_pi_linear / k0_linear);
}

double path_loss_gain(PathKind kind, double d, double f_c_hz, double g_t_dbi, double g_r_dbi) {
    if (d <= 0.0) throw std::domain_error("path_loss_gain: distance must be positive");
    if (f_c_hz <= 0.0) throw std::domain_error("path_loss_gain: carrier must be positive");
    const double f_ghz = f_c_hz / 1e9;
    const double dist_freq = 26.0 * std::log10(f_ghz) + 36.7 * std::log10(d);
    double gain_db;
    switch (kind) {
        case PathKind::g2a_a2g:
            gain_db = g_t_dbi + g_r_dbi - (22.7 + dist_freq);
            break;
        case PathKind::ris_reflected:
            gain_db = g_t_dbi + g_r_dbi + 37.3 - dist_freq;
            break;
        default:
            throw std::logic_error("path_loss_gain: unknown kind");
    }
    return std::pow(10.0, gain_db / 10.0);
}

DopplerTerms doppler_terms(const MobilityState& m, const Position3D& p) {
    const double speed = std::sqrt(m.velocity[0] * m.velocity[0] + m.velocity[1] * m.velocity[1] +
                                   m.velocity[2] * m.velocity[2]);
    if (speed == 0.0) return {0.0, 0.0};
    const double pn = norm(p);
    if (pn == 0.0) {
        throw std::domain_error("doppler_terms: AoA undefined for zero-length direction");
    }
    DopplerTerms t;
    t.f_d_max = m.carrier_hz * speed / kLightSpeed;
    t.cos_aoa = (m.velocity[0] * p.x + m.velocity[1] * p.y + m.velocity[2] * p.z) / (speed * pn);
    return t;
}

}  // namespace geom
}  // namespace airis
