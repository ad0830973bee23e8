#pragma once

#include <cstdint>
#include <vector>

#include "core/tiling.hpp"

namespace cuthex {

// Single-site Metropolis dynamics on the interlacing array. The proposal picks
// a movable dot (level 1..N-1), an index and a direction uniformly; a unit move
// that keeps the interlacing is accepted with ratio 1 (uniform measure) or
// q^{-+1} (q-measure). The RNG is cuthex-sm64-v1, a SplitMix64 stream, so equal
// seeds give identical trajectories on every platform.
class Chain {
  public:
    Chain(const PolygonData& P, Measure m, uint64_t seed);

    void step();
    void run(long long steps);
    const Tiling& current() const { return state_; }
    long long steps_taken() const { return steps_; }

    static Tiling sample(const PolygonData& P, const Measure& m, long long steps, uint64_t seed);
    // The documented default budget: 20 * (movable dots)^2 proposals (a
    // heuristic, not a mixing guarantee).
    static long long default_steps(const PolygonData& P);

  private:
    uint64_t next_u64();
    uint64_t bounded(uint64_t n);  // rejection-sampled uniform in [0, n)

    const PolygonData* P_;
    Measure m_;
    Rat q_;
    bool has_accept_threshold_ = false;
    uint64_t accept_threshold_ = 0;  // floor(q * 2^64) for the q-measure down-moves
    uint64_t rng_;
    Tiling state_;
    long long steps_ = 0;
};

// Per-line statistics of a batch of tilings. Red counts per level are the
// deterministic d + k; blue counts per oblique line are tiling-independent
// and recorded per sample so that invariance is observable.
struct LineStats {
    std::vector<long> eta_lines;                 // the eta values covered
    std::vector<std::vector<long>> blue_counts;  // [sample][line]
    std::vector<long> red_counts;                // per level, = d + k
};
LineStats blue_line_stats(const PolygonData& P, const std::vector<Tiling>& samples);

}  // namespace cuthex
