#pragma once

#include <span>
#include <vector>

#include "core/kernel_red.hpp"

namespace cuthex {

// The blue-dot kernel, obtained from the red kernel by the half-step shift
// L(eta,xi; eta',xi') = -K_red(m - 1/2, x; m' + 1/2, x').
class BlueKernel {
  public:
    explicit BlueKernel(const PolygonData& P) : red_(P) {}

    const RedKernel& red() const { return red_; }

    Rat eval(const BluePoint& p1, const BluePoint& p2, RedForm form = RedForm::R) const;
    Rat correlation(std::span<const BluePoint> pts, RedForm form = RedForm::R) const;

    // Sum of the one-point values over every blue site of the oblique line
    // eta = k inside the parallelogram (the expected dot count on that line).
    Rat line_sum(long eta, RedForm form = RedForm::R) const;
    std::vector<BluePoint> line_sites(long eta) const;

  private:
    RedKernel red_;
};

}  // namespace cuthex
