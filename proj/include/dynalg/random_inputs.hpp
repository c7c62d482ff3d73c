#pragma once

#include <cstdint>
#include <utility>

#include "dynalg/functionals.hpp"

namespace dynalg {

// splitmix64 stream: portable across compilers and standard libraries, so
// seeded runs are reproducible everywhere.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + int(next() % std::uint64_t(hi - lo + 1));
    }
};

// Independent per-scenario stream.
inline Rng substream(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0x5851f42d4c957f2dull * (index + 1)));
    mix.next();
    return mix;
}

struct ProfileOptions {
    int max_pieces = 4;
    int max_degree = 3;
    double t_lo = -3.0;
    double t_hi = 3.0;
    double amplitude = 1.0;
    bool smooth = false; // C1 bump trains (clean convergence constants)
};

// C1 window: cubic smoothstep up over [a, a+ramp), flat, smoothstep down.
PiecewisePoly smooth_bump(double a, double b, double ramp, double height);

PiecewisePoly random_profile(Rng& rng, const ProfileOptions& opt);
Density random_density(Rng& rng, int dim, const ProfileOptions& opt);

// Density rescaled so every |∫f| and |∫tf| stays within cap.
Density cap_moments(Density f, double cap);

// Second density with identical first two moments, plus the loop closing
// the pair.
struct MatchedPair {
    Density f;
    Density f_prime;
};
MatchedPair random_matched_pair(Rng& rng, int dim, const ProfileOptions& opt);

// Loop with max |x0| about the requested size.
LoopPath random_loop(Rng& rng, const ProfileOptions& opt, double size = 0.3);

// Continuous piecewise-cubic test path on [t_lo, t_hi].
SampledPath random_path(Rng& rng, int dim, double t_lo, double t_hi);

} // namespace dynalg
