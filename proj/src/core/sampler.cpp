#include "core/sampler.hpp"

#include <algorithm>

namespace cuthex {

Chain::Chain(const PolygonData& P, Measure m, uint64_t seed)
    : P_(&P), m_(std::move(m)), rng_(seed) {
    state_ = minimal_tiling(P);
    if (m_.kind == Measure::Kind::Q) {
        q_ = m_.q;
        if (!(q_ > 0 && q_ <= 1)) throw std::domain_error("sampler requires 0 < q <= 1");
        if (q_ < 1) {
            // accept threshold floor(q * 2^64) for down-moves
            Int num = q_.get_num() << 64;
            Int thr = num / q_.get_den();
            has_accept_threshold_ = true;
            accept_threshold_ = thr.get_ui();
            // get_ui truncates to the low bits; q < 1 keeps the value below 2^64
            if (thr >= (Int(1) << 64)) accept_threshold_ = ~0ull;
        }
    }
}

uint64_t Chain::next_u64() {
    // SplitMix64 (cuthex-sm64-v1)
    rng_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = rng_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint64_t Chain::bounded(uint64_t n) {
    uint64_t limit = ~0ull - (~0ull % n + 1) % n;  // largest multiple of n minus 1
    uint64_t u;
    do {
        u = next_u64();
    } while (u > limit);
    return u % n;
}

void Chain::step() {
    ++steps_;
    long N = P_->N;
    if (N < 2) return;
    long k = 1 + static_cast<long>(bounded(N - 1));
    long sz = P_->d + k;
    long i = static_cast<long>(bounded(sz));
    long dir = (next_u64() & 1) ? 1 : -1;
    auto& lv = state_.levels[k];
    long cur = lv[i];
    long cand = cur + dir;
    const auto& below = state_.levels[k - 1];
    const auto& above = state_.levels[k + 1];
    // interlacing against both neighbours plus strict monotonicity in-level
    if (i > 0 && cand >= lv[i - 1]) return;
    if (i + 1 < sz && cand <= lv[i + 1]) return;
    // below (size sz-1): below[j+1] < lv[j] <= ... pattern x^{k-1} < ... :
    //   lv[i] >= below[i] (when i < sz-1) and lv[i] > below[i] is not required;
    //   constraints: below[i] <= lv[i] (i < sz-1), lv[i] < below[i-1] (i >= 1)
    if (i < sz - 1 && cand < below[i]) return;
    if (i >= 1 && cand >= below[i - 1]) return;
    // above (size sz+1): above[i+1] < lv[i] <= above[i]
    if (cand > above[i]) return;
    if (cand <= above[i + 1]) return;
    if (m_.kind == Measure::Kind::Q && q_ < 1 && dir == -1) {
        // weight ratio q for shrinking the volume by one
        if (next_u64() >= accept_threshold_) return;
    }
    lv[i] = cand;
}

void Chain::run(long long steps) {
    for (long long s = 0; s < steps; ++s) step();
}

Tiling Chain::sample(const PolygonData& P, const Measure& m, long long steps, uint64_t seed) {
    Chain c(P, m, seed);
    c.run(steps);
    return c.current();
}

long long Chain::default_steps(const PolygonData& P) {
    long long movable = 0;
    for (long k = 1; k <= P.N - 1; ++k) movable += P.d + k;
    return 20 * movable * movable;
}

LineStats blue_line_stats(const PolygonData& P, const std::vector<Tiling>& samples) {
    LineStats st;
    long lo = -P.d + 1, hi = P.sum_m + P.d + P.N;  // generous eta window
    for (long e = lo; e <= hi; ++e) st.eta_lines.push_back(e);
    for (long k = 0; k <= P.N; ++k) st.red_counts.push_back(P.d + k);
    for (const auto& t : samples) {
        auto dots = blue_dots(P, t);
        std::vector<long> counts(st.eta_lines.size(), 0);
        for (const auto& b : dots) {
            long idx = b.eta - lo;
            if (idx >= 0 && idx < static_cast<long>(counts.size())) ++counts[idx];
        }
        st.blue_counts.push_back(std::move(counts));
    }
    return st;
}

}  // namespace cuthex
