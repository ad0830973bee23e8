#pragma once

#include <span>
#include <vector>

#include "core/unipoly.hpp"

namespace cuthex {

// Dense recursive multivariate polynomial over Rat: a polynomial in x_0 whose
// coefficients are polynomials in the remaining variables. Sized for the gap
// polynomial computation (few variables, small per-variable degree).
class MultiPoly {
  public:
    MultiPoly() : nv_(0), val_(0) {}
    static MultiPoly constant(int nvars, Rat v);
    static MultiPoly variable(int nvars, int i);  // x_i, 0-based
    static MultiPoly from_unipoly(int nvars, int i, const UniPoly& p);  // p(x_i)

    int nvars() const { return nv_; }
    bool is_zero() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& s) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const;

    Rat eval(std::span<const Rat> xs) const;
    // Evaluate all variables except x_0, which stays symbolic.
    UniPoly eval_partial(std::span<const Rat> rest) const;

    // Exact division by (x_i - x_j), i < j; throws std::domain_error when the
    // division leaves a remainder.
    MultiPoly divexact_diff(int i, int j) const;

    Rat coeff(std::span<const long> exponents) const;
    long degree_in(int i) const;

  private:
    MultiPoly(int nv, std::vector<MultiPoly> c) : nv_(nv), val_(0), c_(std::move(c)) { trim(); }
    void trim();
    MultiPoly mul_by_var(int i) const;  // * x_i

    int nv_;
    Rat val_;                  // used when nv_ == 0
    std::vector<MultiPoly> c_;  // used when nv_ > 0; c_[k] multiplies x_0^k
};

}  // namespace cuthex
