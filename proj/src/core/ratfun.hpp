#pragma once

#include <map>
#include <variant>
#include <vector>

#include "core/unipoly.hpp"

namespace cuthex {

// Rational function num / (den_scale * prod (z - root)^mult). Every denominator
// in this artifact factors into linear terms with rational roots known by
// construction, so residues are exact (higher-order poles included, via series
// expansion of numerator and co-factors around the pole).
class RatFun {
  public:
    RatFun() : num_(UniPoly::one()) {}
    explicit RatFun(UniPoly num) : num_(std::move(num)) {}

    RatFun& mul_num(const UniPoly& p) {
        num_ *= p;
        return *this;
    }
    RatFun& mul_scalar(const Rat& s) {
        num_ = num_ * s;
        return *this;
    }
    // Multiplies denominator by (z - root)^mult; mult < 0 cancels against an
    // existing denominator factor (or, if absent, multiplies the numerator).
    RatFun& mul_den_root(const Rat& root, int mult = 1);

    const UniPoly& num() const { return num_; }
    const std::map<Rat, int>& den_roots() const { return den_; }

    bool has_pole_at(const Rat& p) const { return den_.count(p) > 0; }

    // Residue at z = p (0 if p is not a pole of the written form).
    Rat residue_at(const Rat& p) const;
    // Residue at infinity: -[z^{-1}] of the Laurent expansion at infinity.
    Rat residue_at_infinity() const;
    // Sum of residues at all finite poles, cross-checked against -Res_inf.
    // Throws std::logic_error if the two exact routes disagree.
    Rat sum_residues_all_checked() const;
    Rat sum_residues_at(std::span<const Rat> points) const;

    Rat eval(const Rat& z) const;  // z must not be a pole

  private:
    UniPoly num_;
    std::map<Rat, int> den_;
};

// The contour dictionary used by the kernels. `finite_points` encloses exactly
// the listed points; `all_poles` is the very large contour enclosing every
// finite pole of the integrand (evaluated as the full residue sum with the
// -Res_inf cross-check); `x_plus_n` encloses the integer lattice {x, x+1, ...}.
struct ContourFinite {
    std::vector<Rat> points;
};
struct ContourAllPoles {};
struct ContourXPlusN {
    Rat x;
};
using ContourSpec = std::variant<ContourFinite, ContourAllPoles, ContourXPlusN>;

// Points of Gamma_tau for the pair (n, y) against the top cut point y1:
// empty when tau = (y+n) - (y1+1) >= 0, else {y+n-N, ..., min(y1-N, y)}.
std::vector<long> gamma_tau_points(long y, long n, long y1, long N);

// Points of gamma_y (the truncated contour in the h-integral identity):
// {B(y), ..., y} with B(y) = max(y+n, y1+1) - N, empty when B(y) > y.
std::vector<long> gamma_y_points(long y, long n, long y1, long N);

Rat residue_sum(const RatFun& f, const ContourSpec& contour);

}  // namespace cuthex
