#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/geometry.hpp"
#include "core/symfunc.hpp"

namespace cuthex {

// One red-dot configuration: levels[k] holds the d+k dot positions on line
// n = k, strictly decreasing; levels[0] is the lower-cut list and levels[N]
// the full top list.
struct Tiling {
    std::vector<std::vector<long>> levels;
    bool operator==(const Tiling&) const = default;
};

struct Measure {
    enum class Kind { Uniform, Q } kind = Kind::Uniform;
    Rat q{1};
    static Measure uniform() { return {}; }
    static Measure q_measure(Rat q) { return {Kind::Q, std::move(q)}; }
};

bool tiling_valid(const PolygonData& P, const Tiling& t);
Tiling minimal_tiling(const PolygonData& P);

// Partitions of the top/bottom boundary (lambda_i = x_i + i, mu_i = y_i + i).
Partition lambda_of(const PolygonData& P);
Partition mu_of(const PolygonData& P);

// Exact tiling count via the Jacobi-Trudi determinant, Eq-independent of the
// explicit enumeration below.
Int tiling_count(const PolygonData& P);

// Volume statistic sum_{k=1}^{N-1} |x^{(k)}|; the q-weight of a tiling is
// proportional to q^{-volume}.
long tiling_volume(const Tiling& t);

// Blue dots of a tiling: the hole trajectories between consecutive levels take
// steps 0 (blue tile) or -1 (green tile); a stay at x in strip k is the blue
// dot (eta, xi) = (k + x + 1, k - x).
std::vector<BluePoint> blue_dots(const PolygonData& P, const Tiling& t);
// Deterministic per-line blue count for the two-cut model (the piecewise
// linear 0..b..r..b..0 profile).
long expected_blue_count_two_cut(const PolygonData& P, long eta);

// Skew semistandard tableau of shape lambda/mu: entry(i, j) for
// mu_i < j <= lambda_i, weakly increasing rows, strictly increasing columns.
struct SkewTableau {
    Partition lambda, mu;
    std::vector<std::vector<long>> rows;  // rows[i][j - mu_i - 1]
    bool operator==(const SkewTableau&) const = default;
};
SkewTableau to_skew_tableau(const PolygonData& P, const Tiling& t);
Tiling from_skew_tableau(const PolygonData& P, const SkewTableau& tab);

// Exhaustive enumeration with exact weights; the ground truth the kernels are
// validated against.
class Enumeration {
  public:
    explicit Enumeration(const PolygonData& P, size_t cap = 5'000'000);

    const PolygonData& polygon() const { return *P_; }
    const std::vector<Tiling>& tilings() const { return tilings_; }
    Int count() const { return Int(static_cast<unsigned long>(tilings_.size())); }

    // Normalized probability of one tiling under the measure.
    Rat weight(const Tiling& t, const Measure& m) const;
    // Partition function sum_t q^{-volume(t)} of the relative q-weights.
    Rat q_partition(const Rat& q) const;

    Rat red_correlation(const Measure& m, std::span<const LatticePoint> pts) const;
    Rat blue_correlation(const Measure& m, std::span<const BluePoint> pts) const;

    // All blue sites occupied in at least one tiling.
    std::vector<BluePoint> blue_support() const;

  private:
    const PolygonData* P_;
    std::vector<Tiling> tilings_;
};

std::string tiling_to_csv(const Tiling& t);
Tiling tiling_from_csv(const PolygonData& P, const std::string& csv);

}  // namespace cuthex
