#include "core/unipoly.hpp"

#include <algorithm>

namespace cuthex {

UniPoly::UniPoly(Rat constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::linear(const Rat& shift) {
    UniPoly p;
    p.c_ = {shift, Rat(1)};
    return p;
}

UniPoly UniPoly::monomial(long degree, const Rat& coeff) {
    UniPoly p;
    if (coeff == 0) return p;
    p.c_.assign(degree + 1, Rat(0));
    p.c_[degree] = coeff;
    return p;
}

UniPoly UniPoly::from_roots(std::span<const Rat> roots) {
    UniPoly p = one();
    for (const Rat& r : roots) p *= linear(-r);
    return p;
}

UniPoly UniPoly::from_roots(std::span<const long> roots) {
    UniPoly p = one();
    for (long r : roots) p *= linear(rat(-r));
    return p;
}

UniPoly UniPoly::pochhammer_poly(const Rat& a, long n) {
    UniPoly p = one();
    for (long i = 0; i < n; ++i) p *= linear(a + i);
    return p;
}

const Rat& UniPoly::coeff(long i) const {
    static const Rat kZero(0);
    if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
    return c_[i];
}

Rat UniPoly::eval(const Rat& z) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    UniPoly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    if (s == 0) return zero();
    UniPoly p = *this;
    for (auto& x : p.c_) x *= s;
    return p;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::shifted(const Rat& a) const {
    // Horner in (z + a).
    UniPoly acc;
    UniPoly za = linear(a);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * za + UniPoly(*it);
    return acc;
}

UniPoly UniPoly::divexact(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rat> rem = c_;
    long dd = divisor.degree();
    long qd = degree() - dd;
    if (qd < 0) {
        if (is_zero()) return zero();
        throw std::domain_error("non-exact polynomial division (degree)");
    }
    std::vector<Rat> q(qd + 1, Rat(0));
    const Rat& lead = divisor.c_.back();
    for (long k = qd; k >= 0; --k) {
        Rat f = rem[k + dd] / lead;
        q[k] = f;
        if (f == 0) continue;
        for (long j = 0; j <= dd; ++j) rem[k + j] -= f * divisor.c_[j];
    }
    for (const Rat& r : rem)
        if (r != 0) throw std::domain_error("non-exact polynomial division (remainder)");
    return UniPoly(std::move(q));
}

UniPoly UniPoly::divexact_root(const Rat& root) const { return divexact(linear(-root)); }

std::vector<Rat> UniPoly::inverse_series(long order) const {
    if (is_zero() || c_[0] == 0) throw std::domain_error("series inversion at a zero constant term");
    std::vector<Rat> inv(order, Rat(0));
    Rat a0 = 1 / c_[0];
    for (long k = 0; k < order; ++k) {
        Rat s = (k == 0) ? Rat(1) : Rat(0);
        for (long j = 1; j <= k; ++j) s -= coeff(j) * inv[k - j];
        inv[k] = s * a0;
    }
    return inv;
}

}  // namespace cuthex
