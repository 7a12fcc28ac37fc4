#ifndef AIRIS_MONTECARLO_HPP
#define AIRIS_MONTECARLO_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "airis/system_model.hpp"

// Ground-truth oracle: samples the full physical model (MRT beamforming,
// ideal phase alignment, Markov blockage, non-IID interference) and builds
// empirical SINR statistics. Identical (seed, trials) give identical
// results regardless of worker count: every trial draws from its own
// counter-derived stream.

namespace airis {
namespace mc {

struct SimRun {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::uint32_t chain_burn_in = 1000;
    std::uint32_t parallel_chunks = 0;  // 0 = one chunk per worker
};

class EmpiricalCdf {
  public:
    EmpiricalCdf() = default;
    explicit EmpiricalCdf(std::vector<double> samples);

    double query(double x) const;  // rank / n
    const std::vector<double>& sorted() const { return sorted_; }
    std::size_t size() const { return sorted_.size(); }
    double mean() const;
    double moment(double k) const;

  private:
    std::vector<double> sorted_;
};

EmpiricalCdf empirical_cdf(std::vector<double> samples);

// sup |ECDF - F| evaluated on both sides of every subsampled order
// statistic plus a uniform grid over the sample range.
double ks_distance(const EmpiricalCdf& e, const std::function<double(double)>& analytic_cdf,
                   std::size_t max_evals = 4096);

// Worker count: AIRIS_THREADS when set, hardware concurrency otherwise.
unsigned worker_count();

// Per-trial map over [0, trials) with counter-based streams; out[t] is
// written by exactly one worker.
void parallel_trials(const SimRun& run, std::uint64_t lane,
                     const std::function<double(std::uint64_t, rng::Stream&)>& body,
                     std::vector<double>& out);

// Optimal-beamformed G2A SINR samples.
EmpiricalCdf simulate_g2a_sinr(const SystemModel& model, const SimRun& run);

// Adaptive phase-shift A2G SINR samples under the blockage process.
EmpiricalCdf simulate_a2g_sinr(const SystemModel& model, const SimRun& run);

// min(G2A, A2G) per trial.
EmpiricalCdf simulate_e2e_sinr(const SystemModel& model, const SimRun& run);

// State trace of a two-state chain (1 = unblocked).
std::vector<std::uint8_t> simulate_markov_chain(
    const std::array<std::array<double, 2>, 2>& p, std::uint64_t steps, std::uint64_t seed,
    std::uint32_t burn_in = 0);

// Diagnostic: apply the explicit per-element phase configuration, Doppler
// terms included, and return the largest relative gap between the coherent
// combined magnitude and the aligned magnitude sum.
double max_alignment_error(const SystemModel& model, std::uint64_t trials, std::uint64_t seed);

}  // namespace mc
}  // namespace airis

#endif
