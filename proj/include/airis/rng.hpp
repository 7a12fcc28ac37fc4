#ifndef AIRIS_RNG_HPP
#define AIRIS_RNG_HPP

#include <cmath>
#include <cstdint>

// Counter-based random streams: each (seed, lane, index) triple opens an
// independent stream, so trial t always sees the same draws no matter how
// trials are split across workers. No global state anywhere.

namespace airis {
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Stream {
  public:
    Stream(std::uint64_t seed, std::uint64_t lane, std::uint64_t index) {
        // Mix the triple into a well-separated starting state.
        std::uint64_t s = seed;
        std::uint64_t a = splitmix64(s);
        s = a ^ (lane * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
        a = splitmix64(s);
        s = a ^ (index * 0x9e3779b97f4a7c15ULL + 1ULL);
        state_ = splitmix64(s) | 1ULL;
        have_normal_ = false;
        cached_normal_ = 0.0;
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // Uniform in (0, 1), 53-bit resolution, never exactly 0.
    double next_double() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }

    // Standard normal via the polar method (two per round, one cached).
    double next_normal() {
        if (have_normal_) {
            have_normal_ = false;
            return cached_normal_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_double() - 1.0;
            v = 2.0 * next_double() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        cached_normal_ = v * f;
        have_normal_ = true;
        return u * f;
    }

    // Gamma(shape, scale) by Marsaglia-Tsang, shape >= 1.
    double next_gamma(double shape, double scale) {
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = next_normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = next_double();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
        }
    }

  private:
    std::uint64_t state_;
    bool have_normal_;
    double cached_normal_;
};

}  // namespace rng
}  // namespace airis

#endif
