#include "airis/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "airis/channel.hpp"

namespace airis {
namespace mc {

namespace {

// Stream lanes; fixed so every simulation quantity has a stable identity.
constexpr std::uint64_t kLaneG2a = 0;
constexpr std::uint64_t kLaneA2g = 1;
constexpr std::uint64_t kLaneChain = 2;
constexpr std::uint64_t kLaneAlign = 3;

double interference_draw(const interference::InterfererSet& set, rng::Stream& s) {
    double w = 1.0;
    for (const auto& l : set.aerial) w += l.mean_inr * channel::sample_fading_power(l.k_factor, s);
    for (const auto& l : set.ground) w += l.mean_inr * channel::sample_fading_power(l.k_factor, s);
    return w;
}

double g2a_trial(const SystemModel& m, rng::Stream& s) {
    double g = 0.0;
    for (int a = 0; a < m.antennas; ++a) g += channel::sample_fading_power(m.k_su, s);
    return m.g2a_mean_snr * g / interference_draw(m.interferers_u, s);
}

// One A2G trial given the resolved blockage state of its slot.
double a2g_trial(const SystemModel& m, bool unblocked, rng::Stream& s) {
    double cas_amp = 0.0;
    if (m.ris_enabled) {
        for (int n = 0; n < m.elements; ++n) {
            const double a1 = std::sqrt(channel::sample_fading_power(m.k_ur, s));
            const double a2 = std::sqrt(channel::sample_fading_power(m.k_rd, s));
            cas_amp += a1 * a2;
        }
    }
    double dir_amp = 0.0;
    if (unblocked) {
        // Conditioned on the unblocked state the direct power gain exceeds
        // tau; rejection keeps the censored law exact.
        double g2;
        do {
            g2 = channel::sample_fading_power(m.k_ud, s) * m.ell_ud;
        } while (g2 < m.blockage.tau);
        dir_amp = std::sqrt(m.dir_mean_snr * g2 / m.ell_ud);
    }
    const double amp = std::sqrt(m.cas_mean_snr) * cas_amp + dir_amp;
    return amp * amp / interference_draw(m.interferers_d, s);
}

// Resolve the slot state. With the threshold-driven chain (identical rows)
// a fresh fading draw realizes the blockage event and the censored density
// at once; the drawn power is reused in the trial through the stream.
bool slot_state(const SystemModel& m, rng::Stream& s) {
    if (std::isinf(m.blockage.tau)) return false;
    if (m.blockage.tau <= 0.0) return true;
    const double g2 = channel::sample_fading_power(m.k_ud, s) * m.ell_ud;
    return g2 >= m.blockage.tau;
}

}  // namespace

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
    if (sorted_.empty()) throw std::invalid_argument("EmpiricalCdf: empty sample");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::query(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::mean() const {
    double s = 0.0;
    for (double v : sorted_) s += v;
    return s / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::moment(double k) const {
    double s = 0.0;
    for (double v : sorted_) s += std::pow(v, k);
    return s / static_cast<double>(sorted_.size());
}

EmpiricalCdf empirical_cdf(std::vector<double> samples) { return EmpiricalCdf(std::move(samples)); }

double ks_distance(const EmpiricalCdf& e, const std::function<double(double)>& analytic_cdf,
                   std::size_t max_evals) {
    const auto& s = e.sorted();
    const std::size_t n = s.size();
    if (n == 0) throw std::invalid_argument("ks_distance: empty sample");
    double d = 0.0;
    const std::size_t m = std::min(n, max_evals);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t i = (m == n) ? j : (j * (n - 1)) / (m - 1);
        const double f = analytic_cdf(s[i]);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
        const double lo = static_cast<double>(i) / static_cast<double>(n);
        d = std::max(d, std::max(std::abs(hi - f), std::abs(f - lo)));
    }
    // Uniform grid over the sample range catches gaps between wide order
    // statistics.
    const std::size_t grid = 256;
    const double x0 = s.front();
    const double x1 = s.back();
    for (std::size_t j = 0; j <= grid; ++j) {
        const double x = x0 + (x1 - x0) * static_cast<double>(j) / static_cast<double>(grid);
        d = std::max(d, std::abs(e.query(x) - analytic_cdf(x)));
    }
    return d;
}

unsigned worker_count() {
    if (const char* env = std::getenv("AIRIS_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_trials(const SimRun& run, std::uint64_t lane,
                     const std::function<double(std::uint64_t, rng::Stream&)>& body,
                     std::vector<double>& out) {
    out.resize(run.trials);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(run.trials, 1)));
    const std::uint64_t chunk = (run.trials + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min<std::uint64_t>(run.trials, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::uint64_t t = lo; t < hi; ++t) {
                rng::Stream s(run.seed, lane, t);
                out[t] = body(t, s);
            }
        });
    }
    for (auto& th : pool) th.join();
}

EmpiricalCdf simulate_g2a_sinr(const SystemModel& model, const SimRun& run) {
    std::vector<double> samples;
    parallel_trials(run, kLaneG2a,
                    [&](std::uint64_t, rng::Stream& s) { return g2a_trial(model, s); }, samples);
    return EmpiricalCdf(std::move(samples));
}

EmpiricalCdf simulate_a2g_sinr(const SystemModel& model, const SimRun& run) {
    std::vector<std::uint8_t> trace;
    if (model.explicit_chain) {
        trace = simulate_markov_chain(model.blockage.transition, run.trials,
                                      run.seed ^ 0xb10cca6eULL, run.chain_burn_in);
    }
    std::vector<double> samples;
    parallel_trials(run, kLaneA2g,
                    [&](std::uint64_t t, rng::Stream& s) {
                        const bool unblocked =
                            model.explicit_chain ? (trace[t] != 0) : slot_state(model, s);
                        return a2g_trial(model, unblocked, s);
                    },
                    samples);
    return EmpiricalCdf(std::move(samples));
}

EmpiricalCdf simulate_e2e_sinr(const SystemModel& model, const SimRun& run) {
    std::vector<std::uint8_t> trace;
    if (model.explicit_chain) {
        trace = simulate_markov_chain(model.blockage.transition, run.trials,
                                      run.seed ^ 0xb10cca6eULL, run.chain_burn_in);
    }
    std::vector<double> g2a;
    parallel_trials(run, kLaneG2a,
                    [&](std::uint64_t, rng::Stream& s) { return g2a_trial(model, s); }, g2a);
    std::vector<double> samples;
    parallel_trials(run, kLaneA2g,
                    [&](std::uint64_t t, rng::Stream& s) {
                        const bool unblocked =
                            model.explicit_chain ? (trace[t] != 0) : slot_state(model, s);
                        return std::min(g2a[t], a2g_trial(model, unblocked, s));
                    },
                    samples);
    return EmpiricalCdf(std::move(samples));
}

std::vector<std::uint8_t> simulate_markov_chain(const std::array<std::array<double, 2>, 2>& p,
                                                std::uint64_t steps, std::uint64_t seed,
                                                std::uint32_t burn_in) {
    for (int i = 0; i < 2; ++i) {
        if (std::abs(p[i][0] + p[i][1] - 1.0) > 1e-9) {
            throw std::domain_error("simulate_markov_chain: matrix is not row-stochastic");
        }
    }
    rng::Stream s(seed, kLaneChain, 0);
    std::vector<std::uint8_t> trace(steps);
    std::uint8_t state = 1;
    for (std::uint32_t b = 0; b < burn_in; ++b) {
        state = (s.next_double() < p[state][1]) ? 1 : 0;
    }
    for (std::uint64_t t = 0; t < steps; ++t) {
        state = (s.next_double() < p[state][1]) ? 1 : 0;
        trace[t] = state;
    }
    return trace;
}

double max_alignment_error(const SystemModel& model, std::uint64_t trials, std::uint64_t seed) {
    using cplx = std::complex<double>;
    const auto p_ur = model.pos_r - model.pos_u;
    const auto p_ud = model.pos_d - model.pos_u;
    const double wavelength = geom::kLightSpeed / model.mobility.carrier_hz;
    auto geom_phase = [&](const geom::Position3D& rel) {
        return 2.0 * M_PI * geom::norm(rel) / wavelength;
    };
    auto doppler_phase = [&](const geom::Position3D& rel) {
        const auto d = geom::doppler_terms(model.mobility, rel);
        return 2.0 * M_PI * d.f_d_max * d.cos_aoa;  // t = 1 slot
    };
    const double ph_ur = geom_phase(p_ur) + doppler_phase(p_ur);
    const double ph_rd = geom_phase(model.pos_d - model.pos_r);  // static endpoints
    const double ph_ud = geom_phase(p_ud) + doppler_phase(p_ud);

    double worst = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        rng::Stream s(seed, kLaneAlign, t);
        const bool unblocked = slot_state(model, s);
        cplx dir(0.0, 0.0);
        if (unblocked) {
            double g2;
            cplx h;
            do {
                h = channel::sample_fading({model.k_ud, model.ell_ud}, s, ph_ud);
                g2 = std::norm(h);
            } while (g2 < model.blockage.tau);
            dir = std::sqrt(model.dir_mean_snr / model.ell_ud) * h;
        }
        const double target = std::arg(dir == cplx(0.0, 0.0) ? cplx(1.0, 0.0) : dir);
        cplx combined = dir;
        double aligned = std::abs(dir);
        for (int n = 0; n < model.elements; ++n) {
            const cplx h1 = channel::sample_fading({model.k_ur, 1.0}, s, ph_ur);
            const cplx h2 = channel::sample_fading({model.k_rd, 1.0}, s, ph_rd);
            // Phase-shift chosen so each reflected term lands on the
            // direct-path phase (or zero when blocked).
            const double theta_n = target - std::arg(h1) - std::arg(h2);
            combined += std::sqrt(model.cas_mean_snr) * h1 * h2 * std::polar(1.0, theta_n);
            aligned += std::sqrt(model.cas_mean_snr) * std::abs(h1) * std::abs(h2);
        }
        const double gap = std::abs(std::abs(combined) - aligned) / std::max(aligned, 1e-300);
        worst = std::max(worst, gap);
    }
    return worst;
}

}  // namespace mc
}  // namespace airis
