#ifndef AIRIS_GEOMETRY_HPP
#define AIRIS_GEOMETRY_HPP

#include <array>

// 3D node placement, spherical conversion, elevation-dependent Rician
// K-factor, the UMi-style path loss pair, and Doppler/AoA terms.

namespace airis {
namespace geom {

constexpr double kLightSpeed = 299792458.0;  // m/s

struct Position3D {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

Position3D operator-(const Position3D& a, const Position3D& b);
double norm(const Position3D& p);
double dot(const Position3D& a, const Position3D& b);

struct SphericalCoord {
    double d = 0.0;      // radial distance
    double theta = 0.0;  // elevation, rad, in [0, pi/2]
    double phi = 0.0;    // azimuth, rad, in [-pi, pi)
};

struct MobilityState {
    std::array<double, 3> velocity{0.0, 0.0, 0.0};  // m/s
    double carrier_hz = 0.0;
};

// d = |p|; theta = asin(|z|/d); phi = atan2(y, x).
// Degenerate origin maps to theta = phi = 0 by convention.
SphericalCoord to_spherical(const Position3D& p);

// K = k1 * exp(k2 * theta), theta in [0, pi/2].
double rician_k_factor(double theta, double k1, double k2);

// Calibration of k2 so that K(pi/2) lands exactly on k_pi:
// k2 = (2/pi) * ln(k_pi / k0), natural log, linear arguments.
double k2_from_calibration(double k0_linear, double k_pi_linear);

enum class PathKind { g2a_a2g, ris_reflected };

// Linear channel power gain. Distances in meters, carrier in Hz, antenna
// gains in dBi. The dB gain is
//   g2a_a2g:       Gt + Gr - (22.7 + 26 log10(fc_GHz) + 36.7 log10(d))
//   ris_reflected: Gt + Gr + 37.3 - (26 log10(fc_GHz) + 36.7 log10(d))
double path_loss_gain(PathKind kind, double d, double f_c_hz, double g_t_dbi, double g_r_dbi);

struct DopplerTerms {
    double f_d_max = 0.0;  // Hz
    double cos_aoa = 0.0;
};

// f_d_max = fc |v| / c; cos_aoa = v.p / (|v||p|). Zero velocity gives (0,0);
// zero-length p with nonzero velocity is a domain error.
DopplerTerms doppler_terms(const MobilityState& m, const Position3D& p);

}  // namespace geom
}  // namespace airis

#endif
