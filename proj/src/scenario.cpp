#include "airis/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace airis {
namespace scenario {

using nlohmann::json;

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

geom::Position3D parse_pos(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 3) {
        throw ConfigError("config field '" + field + "' must be an [x,y,z] array");
    }
    for (const auto& v : j) {
        if (!v.is_number()) throw ConfigError("config field '" + field + "' must be numeric");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

void reject_unknown(const json& j, const std::set<std::string>& known,
                    const std::string& scope) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!known.count(key)) {
            throw ConfigError("unknown config field '" + scope + key + "'");
        }
    }
}

double require_number(const json& j, const std::string& field) {
    if (!j.is_number()) throw ConfigError("config field '" + field + "' must be numeric");
    return j.get<double>();
}

}  // namespace

double ScenarioConfig::noise_power_dbm() const {
    return noise_density_dbm_hz + 10.0 * std::log10(bandwidth_hz);
}

ScenarioConfig scenario_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    ScenarioConfig cfg = section4_preset();
    reject_unknown(j, {"positions", "antennas", "ris", "powers_dbm", "noise", "carrier_hz",
                       "velocity_mps", "antenna_gains_dbi", "fading", "blockage", "fit",
                       "scene_scale_m", "rate_se"},
                   "");
    if (j.contains("positions")) {
        const auto& p = j["positions"];
        reject_unknown(p, {"s", "u", "d", "r", "aerial_interferers", "ground_interferers"},
                       "positions.");
        if (p.contains("s")) cfg.pos_s = parse_pos(p["s"], "positions.s");
        if (p.contains("u")) cfg.pos_u = parse_pos(p["u"], "positions.u");
        if (p.contains("d")) cfg.pos_d = parse_pos(p["d"], "positions.d");
        if (p.contains("r")) cfg.pos_r = parse_pos(p["r"], "positions.r");
        if (p.contains("aerial_interferers")) {
            cfg.aerial_interferers.clear();
            for (const auto& q : p["aerial_interferers"]) {
                cfg.aerial_interferers.push_back(parse_pos(q, "positions.aerial_interferers[]"));
            }
        }
        if (p.contains("ground_interferers")) {
            cfg.ground_interferers.clear();
            for (const auto& q : p["ground_interferers"]) {
                cfg.ground_interferers.push_back(parse_pos(q, "positions.ground_interferers[]"));
            }
        }
    }
    if (j.contains("antennas")) {
        if (!j["antennas"].is_number_integer()) throw ConfigError("config field 'antennas' must be an integer");
        cfg.antennas = j["antennas"].get<int>();
    }
    if (j.contains("ris")) {
        const auto& r = j["ris"];
        reject_unknown(r, {"n_x", "n_y", "amplitude", "enabled"}, "ris.");
        if (r.contains("n_x")) cfg.n_x = r["n_x"].get<int>();
        if (r.contains("n_y")) cfg.n_y = r["n_y"].get<int>();
        if (r.contains("amplitude")) cfg.ris_amplitude = require_number(r["amplitude"], "ris.amplitude");
        if (r.contains("enabled")) cfg.ris_enabled = r["enabled"].get<bool>();
    }
    if (j.contains("powers_dbm")) {
        const auto& p = j["powers_dbm"];
        reject_unknown(p, {"source", "uav", "aerial_interferer", "ground_interferer"},
                       "powers_dbm.");
        if (p.contains("source")) cfg.p_source_dbm = require_number(p["source"], "powers_dbm.source");
        if (p.contains("uav")) cfg.p_uav_dbm = require_number(p["uav"], "powers_dbm.uav");
        if (p.contains("aerial_interferer")) {
            cfg.p_aerial_dbm = require_number(p["aerial_interferer"], "powers_dbm.aerial_interferer");
        }
        if (p.contains("ground_interferer")) {
            cfg.p_ground_dbm = require_number(p["ground_interferer"], "powers_dbm.ground_interferer");
        }
    }
    if (j.contains("noise")) {
        const auto& nz = j["noise"];
        reject_unknown(nz, {"density_dbm_hz", "bandwidth_hz"}, "noise.");
        if (nz.contains("density_dbm_hz")) {
            cfg.noise_density_dbm_hz = require_number(nz["density_dbm_hz"], "noise.density_dbm_hz");
        }
        if (nz.contains("bandwidth_hz")) {
            cfg.bandwidth_hz = require_number(nz["bandwidth_hz"], "noise.bandwidth_hz");
        }
    }
    if (j.contains("carrier_hz")) cfg.carrier_hz = require_number(j["carrier_hz"], "carrier_hz");
    if (j.contains("velocity_mps")) {
        const auto v = parse_pos(j["velocity_mps"], "velocity_mps");
        cfg.velocity_mps = {v.x, v.y, v.z};
    }
    if (j.contains("antenna_gains_dbi")) {
        const auto& g = j["antenna_gains_dbi"];
        reject_unknown(g, {"tx", "rx"}, "antenna_gains_dbi.");
        if (g.contains("tx")) cfg.g_t_dbi = require_number(g["tx"], "antenna_gains_dbi.tx");
        if (g.contains("rx")) cfg.g_r_dbi = require_number(g["rx"], "antenna_gains_dbi.rx");
    }
    if (j.contains("fading")) {
        const auto& f = j["fading"];
        reject_unknown(f, {"k1_db", "k_pi_db"}, "fading.");
        if (f.contains("k1_db")) cfg.k1_db = require_number(f["k1_db"], "fading.k1_db");
        if (f.contains("k_pi_db")) cfg.k_pi_db = require_number(f["k_pi_db"], "fading.k_pi_db");
    }
    if (j.contains("blockage")) {
        const auto& b = j["blockage"];
        reject_unknown(b, {"beta", "tau", "transition"}, "blockage.");
        cfg.blockage = BlockageSpec{};
        if (b.contains("beta")) cfg.blockage.beta = require_number(b["beta"], "blockage.beta");
        if (b.contains("tau")) cfg.blockage.tau = require_number(b["tau"], "blockage.tau");
        if (b.contains("transition")) {
            const auto& m = b["transition"];
            if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
                !m[1].is_array() || m[1].size() != 2) {
                throw ConfigError("config field 'blockage.transition' must be a 2x2 matrix");
            }
            cfg.blockage.transition = {{{m[0][0].get<double>(), m[0][1].get<double>()},
                                        {m[1][0].get<double>(), m[1][1].get<double>()}}};
        }
    }
    if (j.contains("fit")) {
        const auto& f = j["fit"];
        reject_unknown(f, {"psi_g2a", "psi_a2g", "a2g_fit_order", "strict_paper_alpha"}, "fit.");
        if (f.contains("psi_g2a")) cfg.psi_g2a = f["psi_g2a"].get<int>();
        if (f.contains("psi_a2g")) cfg.psi_a2g = f["psi_a2g"].get<int>();
        if (f.contains("a2g_fit_order")) cfg.a2g_fit_order = f["a2g_fit_order"].get<int>();
        if (f.contains("strict_paper_alpha")) cfg.strict_paper_alpha = f["strict_paper_alpha"].get<bool>();
    }
    if (j.contains("scene_scale_m")) cfg.scene_scale_m = require_number(j["scene_scale_m"], "scene_scale_m");
    if (j.contains("rate_se")) cfg.rate_se = require_number(j["rate_se"], "rate_se");

    // Physical validation.
    if (cfg.antennas < 1) throw ConfigError("antennas must be >= 1");
    if (cfg.n_x < 1 || cfg.n_y < 1) throw ConfigError("ris.n_x and ris.n_y must be >= 1");
    if (!(cfg.ris_amplitude > 0.0 && cfg.ris_amplitude <= 1.0)) {
        throw ConfigError("ris.amplitude must lie in (0, 1]");
    }
    if (!(cfg.bandwidth_hz > 0.0)) throw ConfigError("noise.bandwidth_hz must be positive");
    if (!(cfg.carrier_hz > 0.0)) throw ConfigError("carrier_hz must be positive");
    if (!(cfg.scene_scale_m > 0.0)) throw ConfigError("scene_scale_m must be positive");
    if (!(cfg.rate_se > 0.0)) throw ConfigError("rate_se must be positive");
    if (!std::isfinite(cfg.p_source_dbm) || !std::isfinite(cfg.p_uav_dbm) ||
        !std::isfinite(cfg.p_aerial_dbm) || !std::isfinite(cfg.p_ground_dbm)) {
        throw ConfigError("powers_dbm entries must be finite");
    }
    if (cfg.blockage.beta && (*cfg.blockage.beta < 0.0 || *cfg.blockage.beta > 1.0)) {
        throw ConfigError("blockage.beta must lie in [0, 1]");
    }
    if (cfg.blockage.tau && *cfg.blockage.tau < 0.0) {
        throw ConfigError("blockage.tau must be >= 0");
    }
    if (cfg.psi_g2a < 2 || cfg.psi_a2g < 2) throw ConfigError("fit.psi_* must be integers >= 2");
    return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return scenario_from_json_text(ss.str());
}

std::string scenario_to_json_text(const ScenarioConfig& cfg) {
    json j;
    auto pos = [](const geom::Position3D& p) { return json::array({p.x, p.y, p.z}); };
    j["positions"]["s"] = pos(cfg.pos_s);
    j["positions"]["u"] = pos(cfg.pos_u);
    j["positions"]["d"] = pos(cfg.pos_d);
    j["positions"]["r"] = pos(cfg.pos_r);
    j["positions"]["aerial_interferers"] = json::array();
    for (const auto& p : cfg.aerial_interferers) j["positions"]["aerial_interferers"].push_back(pos(p));
    j["positions"]["ground_interferers"] = json::array();
    for (const auto& p : cfg.ground_interferers) j["positions"]["ground_interferers"].push_back(pos(p));
    j["antennas"] = cfg.antennas;
    j["ris"] = {{"n_x", cfg.n_x}, {"n_y", cfg.n_y}, {"amplitude", cfg.ris_amplitude},
                {"enabled", cfg.ris_enabled}};
    j["powers_dbm"] = {{"source", cfg.p_source_dbm},
                       {"uav", cfg.p_uav_dbm},
                       {"aerial_interferer", cfg.p_aerial_dbm},
                       {"ground_interferer", cfg.p_ground_dbm}};
    j["noise"] = {{"density_dbm_hz", cfg.noise_density_dbm_hz}, {"bandwidth_hz", cfg.bandwidth_hz}};
    j["carrier_hz"] = cfg.carrier_hz;
    j["velocity_mps"] = json::array({cfg.velocity_mps[0], cfg.velocity_mps[1], cfg.velocity_mps[2]});
    j["antenna_gains_dbi"] = {{"tx", cfg.g_t_dbi}, {"rx", cfg.g_r_dbi}};
    j["fading"] = {{"k1_db", cfg.k1_db}, {"k_pi_db", cfg.k_pi_db}};
    json b;
    if (cfg.blockage.beta) b["beta"] = *cfg.blockage.beta;
    if (cfg.blockage.tau) b["tau"] = *cfg.blockage.tau;
    if (cfg.blockage.transition) {
        const auto& t = *cfg.blockage.transition;
        b["transition"] = json::array({json::array({t[0][0], t[0][1]}),
                                       json::array({t[1][0], t[1][1]})});
    }
    j["blockage"] = b.is_null() ? json::object() : b;
    j["fit"] = {{"psi_g2a", cfg.psi_g2a},
                {"psi_a2g", cfg.psi_a2g},
                {"a2g_fit_order", cfg.a2g_fit_order},
                {"strict_paper_alpha", cfg.strict_paper_alpha}};
    j["scene_scale_m"] = cfg.scene_scale_m;
    j["rate_se"] = cfg.rate_se;
    return j.dump(2);
}

ScenarioConfig section4_preset() {
    ScenarioConfig cfg;
    cfg.pos_s = {0.0, 0.0, 0.0};
    cfg.pos_u = {0.5, 0.5, 1.0};
    cfg.pos_d = {0.5, 0.5, 0.0};
    cfg.pos_r = {1.0, 1.0, 0.0};
    cfg.aerial_interferers = {{0.2, 0.2, 0.6}, {0.4, 0.8, 0.4}};
    cfg.ground_interferers = {{0.4, 0.4, 0.0}, {0.4, 0.8, 0.0}};
    cfg.antennas = 2;
    cfg.n_x = 4;
    cfg.n_y = 4;
    cfg.ris_enabled = true;
    cfg.ris_amplitude = 1.0;
    cfg.p_source_dbm = 23.0;
    cfg.p_uav_dbm = 23.0;
    cfg.p_aerial_dbm = 0.0;
    cfg.p_ground_dbm = 0.0;
    cfg.noise_density_dbm_hz = -174.0;
    cfg.bandwidth_hz = 1.0e7;
    cfg.carrier_hz = 3.0e9;
    cfg.velocity_mps = {30.0, 0.0, 0.0};
    cfg.g_t_dbi = 0.0;
    cfg.g_r_dbi = 0.0;
    cfg.k1_db = 0.0;
    cfg.k_pi_db = 5.0;
    cfg.blockage = BlockageSpec{};  // beta = 0 until a sweep sets it
    cfg.psi_g2a = 4;
    cfg.psi_a2g = 4;
    cfg.a2g_fit_order = 0;
    cfg.strict_paper_alpha = false;
    // Normalized coordinates enter the loss model directly; the study's
    // link budget only reproduces with unit scale.
    cfg.scene_scale_m = 1.0;
    cfg.rate_se = 0.5;
    return cfg;
}

SystemModel derive(const ScenarioConfig& cfg) {
    SystemModel m;
    m.antennas = cfg.antennas;
    m.elements = cfg.elements();
    m.ris_enabled = cfg.ris_enabled;

    const double k1 = db_to_linear(cfg.k1_db);
    const double k_pi = db_to_linear(cfg.k_pi_db);
    const double k2 = geom::k2_from_calibration(k1, k_pi);

    auto link = [&](const geom::Position3D& from, const geom::Position3D& to,
                    geom::PathKind kind) {
        const auto sph = geom::to_spherical(to - from);
        if (sph.d <= 0.0) throw ConfigError("two scenario nodes coincide");
        const double k = geom::rician_k_factor(sph.theta, k1, k2);
        const double gain = geom::path_loss_gain(kind, sph.d * cfg.scene_scale_m,
                                                 cfg.carrier_hz, cfg.g_t_dbi, cfg.g_r_dbi);
        return std::pair<double, double>(k, gain);
    };

    const double sigma2_mw = db_to_linear(cfg.noise_power_dbm());
    const double p_s = db_to_linear(cfg.p_source_dbm);
    const double p_u = db_to_linear(cfg.p_uav_dbm);
    const double p_i = db_to_linear(cfg.p_aerial_dbm);
    const double p_j = db_to_linear(cfg.p_ground_dbm);

    const auto [k_su, l_su] = link(cfg.pos_s, cfg.pos_u, geom::PathKind::g2a_a2g);
    const auto [k_ur, l_ur] = link(cfg.pos_u, cfg.pos_r, geom::PathKind::g2a_a2g);
    const auto [k_rd, l_rd] = link(cfg.pos_r, cfg.pos_d, geom::PathKind::ris_reflected);
    const auto [k_ud, l_ud] = link(cfg.pos_u, cfg.pos_d, geom::PathKind::g2a_a2g);
    m.k_su = k_su;
    m.k_ur = k_ur;
    m.k_rd = k_rd;
    m.k_ud = k_ud;
    m.ell_ud = l_ud;
    m.lambda_ud = (k_ud + 1.0) / l_ud;

    m.g2a_mean_snr = p_s * l_su / sigma2_mw;
    m.cas_mean_snr = p_u * l_ur * l_rd * cfg.ris_amplitude * cfg.ris_amplitude / sigma2_mw;
    m.dir_mean_snr = p_u * l_ud / sigma2_mw;

    auto interferers_at = [&](const geom::Position3D& node) {
        interference::InterfererSet set;
        for (const auto& p : cfg.aerial_interferers) {
            const auto [k, gain] = link(p, node, geom::PathKind::g2a_a2g);
            set.aerial.push_back({k, p_i * gain / sigma2_mw});
        }
        for (const auto& p : cfg.ground_interferers) {
            const auto [k, gain] = link(p, node, geom::PathKind::g2a_a2g);
            set.ground.push_back({k, p_j * gain / sigma2_mw});
        }
        return set;
    };
    m.interferers_u = interferers_at(cfg.pos_u);
    m.interferers_u.node = interference::Node::U;
    m.interferers_d = interferers_at(cfg.pos_d);
    m.interferers_d.node = interference::Node::D;

    if (cfg.blockage.transition) {
        // User-supplied chain; tau defaults to the steady-state-consistent
        // threshold when not given.
        const auto& t = *cfg.blockage.transition;
        double tau;
        if (cfg.blockage.tau) {
            tau = *cfg.blockage.tau;
        } else {
            const auto [pi0, pi1] = analytic::markov_steady_state(t);
            (void)pi1;
            tau = analytic::threshold_for_beta(m.k_ud, m.lambda_ud, pi0);
        }
        m.blockage = analytic::blockage_from_transition(t, m.k_ud, m.lambda_ud, tau);
        m.explicit_chain = true;
    } else if (cfg.blockage.tau) {
        m.blockage = analytic::blockage_from_tau(m.k_ud, m.lambda_ud, *cfg.blockage.tau);
    } else {
        m.blockage = analytic::blockage_from_beta(m.k_ud, m.lambda_ud,
                                                  cfg.blockage.beta.value_or(0.0));
    }

    m.psi_g2a = cfg.psi_g2a;
    m.psi_a2g = cfg.psi_a2g;
    m.a2g_fit_order = cfg.a2g_fit_order;
    m.strict_paper_alpha = cfg.strict_paper_alpha;
    m.rate_se = cfg.rate_se;
    m.pos_u = cfg.pos_u;
    m.pos_r = cfg.pos_r;
    m.pos_d = cfg.pos_d;
    m.mobility.velocity = cfg.velocity_mps;
    m.mobility.carrier_hz = cfg.carrier_hz;
    return m;
}

}  // namespace scenario
}  // namespace airis
