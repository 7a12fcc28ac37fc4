#ifndef AIRIS_SCENARIO_HPP
#define AIRIS_SCENARIO_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "airis/geometry.hpp"
#include "airis/system_model.hpp"

// Scenario ingestion: JSON config files, defaults, physical validation,
// and derivation of the full SystemModel (gains, K-factors, mean SNRs).

namespace airis {
namespace scenario {

struct BlockageSpec {
    std::optional<double> beta;
    std::optional<double> tau;
    std::optional<std::array<std::array<double, 2>, 2>> transition;
};

struct ScenarioConfig {
    geom::Position3D pos_s{0.0, 0.0, 0.0};
    geom::Position3D pos_u{0.5, 0.5, 1.0};
    geom::Position3D pos_d{0.5, 0.5, 0.0};
    geom::Position3D pos_r{1.0, 1.0, 0.0};
    std::vector<geom::Position3D> aerial_interferers;
    std::vector<geom::Position3D> ground_interferers;

    int antennas = 2;  // M
    int n_x = 4;
    int n_y = 4;
    bool ris_enabled = true;
    double ris_amplitude = 1.0;  // kappa

    double p_source_dbm = 23.0;
    double p_uav_dbm = 23.0;
    double p_aerial_dbm = 0.0;
    double p_ground_dbm = 0.0;

    double noise_density_dbm_hz = -174.0;
    double bandwidth_hz = 1.0e7;
    double carrier_hz = 3.0e9;
    std::array<double, 3> velocity_mps{30.0, 0.0, 0.0};

    double g_t_dbi = 0.0;
    double g_r_dbi = 0.0;

    double k1_db = 0.0;
    double k_pi_db = 5.0;

    BlockageSpec blockage;  // empty -> beta = 0

    int psi_g2a = 4;
    int psi_a2g = 4;
    int a2g_fit_order = 0;
    bool strict_paper_alpha = false;

    double scene_scale_m = 100.0;
    double rate_se = 0.5;

    int elements() const { return n_x * n_y; }
    double noise_power_dbm() const;
};

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Parse + validate; unknown keys are rejected so typos cannot silently
// fall back to defaults.
ScenarioConfig load_scenario(const std::string& path);
ScenarioConfig scenario_from_json_text(const std::string& text);
std::string scenario_to_json_text(const ScenarioConfig& cfg);

// The measurement setup of the numerical study: normalized unit-cube
// geometry entered directly into the loss model (scene_scale_m = 1), two
// aerial and two ground interferers at 0 dBm, 23 dBm transmitters.
ScenarioConfig section4_preset();

// Resolve geometry, fading and powers into the physical model.
SystemModel derive(const ScenarioConfig& cfg);

}  // namespace scenario
}  // namespace airis

#endif
