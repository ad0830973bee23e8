#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "core/rational.hpp"

namespace cuthex {

// Dense univariate polynomial over Rat, coefficient i multiplying z^i.
// The zero polynomial has an empty coefficient vector.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(Rat constant);
    explicit UniPoly(std::vector<Rat> coeffs);

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(Rat(1)); }
    // z + shift
    static UniPoly linear(const Rat& shift);
    static UniPoly monomial(long degree, const Rat& coeff = Rat(1));
    // prod over roots (z - root_i)
    static UniPoly from_roots(std::span<const Rat> roots);
    static UniPoly from_roots(std::span<const long> roots);
    // (z + a)(z + a + 1)...(z + a + n - 1), the rising factorial in z
    static UniPoly pochhammer_poly(const Rat& a, long n);

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(long i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& z) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly derivative() const;
    // p(z + a)
    UniPoly shifted(const Rat& a) const;
    // Exact division; throws std::domain_error if the remainder is nonzero.
    UniPoly divexact(const UniPoly& divisor) const;
    // Exact division by (z - root).
    UniPoly divexact_root(const Rat& root) const;

    // First `order` Taylor coefficients of 1/p at z=0 (p(0) != 0 required).
    std::vector<Rat> inverse_series(long order) const;

  private:
    void trim();
    std::vector<Rat> c_;
};

}  // namespace cuthex
