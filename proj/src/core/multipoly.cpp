#include "core/multipoly.hpp"

#include <stdexcept>

namespace cuthex {

void MultiPoly::trim() {
    if (nv_ == 0) return;
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool MultiPoly::is_zero() const {
    if (nv_ == 0) return val_ == 0;
    return c_.empty();
}

MultiPoly MultiPoly::constant(int nvars, Rat v) {
    MultiPoly p;
    p.nv_ = nvars;
    if (nvars == 0) {
        p.val_ = std::move(v);
    } else if (v != 0) {
        p.c_.push_back(constant(nvars - 1, std::move(v)));
    }
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("MultiPoly::variable index");
    MultiPoly p;
    p.nv_ = nvars;
    if (i == 0) {
        p.c_.push_back(constant(nvars - 1, Rat(0)));
        p.c_.push_back(constant(nvars - 1, Rat(1)));
        p.trim();
        // x_0 = 0*1 + 1*x_0; the zero coefficient must survive as placeholder
        p.c_[0] = constant(nvars - 1, Rat(0));
    } else {
        p.c_.push_back(variable(nvars - 1, i - 1));
    }
    return p;
}

MultiPoly MultiPoly::from_unipoly(int nvars, int i, const UniPoly& u) {
    MultiPoly p;
    p.nv_ = nvars;
    if (u.is_zero()) return p;
    if (i == 0) {
        for (long k = 0; k <= u.degree(); ++k) p.c_.push_back(constant(nvars - 1, u.coeff(k)));
        p.trim();
        return p;
    }
    p.c_.push_back(from_unipoly(nvars - 1, i - 1, u));
    p.trim();
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nv_ != o.nv_) throw std::logic_error("MultiPoly arity mismatch");
    if (nv_ == 0) return constant(0, val_ + o.val_);
    MultiPoly r;
    r.nv_ = nv_;
    size_t n = std::max(c_.size(), o.c_.size());
    for (size_t k = 0; k < n; ++k) {
        if (k < c_.size() && k < o.c_.size())
            r.c_.push_back(c_[k] + o.c_[k]);
        else if (k < c_.size())
            r.c_.push_back(c_[k]);
        else
            r.c_.push_back(o.c_[k]);
    }
    r.trim();
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    if (nv_ == 0) {
        r.val_ = -r.val_;
        return r;
    }
    for (auto& x : r.c_) x = -x;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nv_ != o.nv_) throw std::logic_error("MultiPoly arity mismatch");
    if (nv_ == 0) return constant(0, val_ * o.val_);
    MultiPoly r;
    r.nv_ = nv_;
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, constant(nv_ - 1, Rat(0)));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    r.trim();
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& s) const {
    if (nv_ == 0) return constant(0, val_ * s);
    MultiPoly r;
    r.nv_ = nv_;
    if (s == 0) return r;
    for (const auto& x : c_) r.c_.push_back(x * s);
    r.trim();
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const { return (*this - o).is_zero(); }

Rat MultiPoly::eval(std::span<const Rat> xs) const {
    if (nv_ == 0) return val_;
    if (static_cast<int>(xs.size()) != nv_) throw std::logic_error("MultiPoly::eval arity");
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * xs[0] + it->eval(xs.subspan(1));
    return acc;
}

UniPoly MultiPoly::eval_partial(std::span<const Rat> rest) const {
    if (nv_ == 0) return UniPoly(val_);
    if (static_cast<int>(rest.size()) != nv_ - 1) throw std::logic_error("MultiPoly::eval_partial arity");
    std::vector<Rat> coeffs;
    coeffs.reserve(c_.size());
    for (const auto& ck : c_) coeffs.push_back(ck.eval(rest));
    return UniPoly(std::move(coeffs));
}

MultiPoly MultiPoly::mul_by_var(int i) const {
    if (nv_ == 0) throw std::logic_error("mul_by_var on constant");
    MultiPoly r;
    r.nv_ = nv_;
    if (c_.empty()) return r;
    if (i == 0) {
        r.c_.push_back(constant(nv_ - 1, Rat(0)));
        for (const auto& x : c_) r.c_.push_back(x);
        r.trim();
        return r;
    }
    for (const auto& x : c_) r.c_.push_back(x.mul_by_var(i - 1));
    r.trim();
    return r;
}

MultiPoly MultiPoly::divexact_diff(int i, int j) const {
    if (!(0 <= i && i < j && j < nv_)) throw std::out_of_range("divexact_diff indices");
    if (i > 0) {
        MultiPoly r;
        r.nv_ = nv_;
        for (const auto& x : c_) r.c_.push_back(x.divexact_diff(i - 1, j - 1));
        r.trim();
        return r;
    }
    // Synthetic division of sum c_k x_0^k by (x_0 - x_j): quotient coefficients
    // q_{k-1} = c_k + x_j * q_k descending; remainder c_0 + x_j * q_0 must vanish.
    if (c_.empty()) {
        MultiPoly r;
        r.nv_ = nv_;
        return r;
    }
    long deg = static_cast<long>(c_.size()) - 1;
    if (deg == 0) throw std::domain_error("non-exact MultiPoly division (degree)");
    std::vector<MultiPoly> q(deg);
    MultiPoly carry = c_[deg];
    for (long k = deg - 1; k >= 0; --k) {
        q[k] = carry;
        carry = c_[k] + carry.mul_by_var(j - 1);
    }
    if (!carry.is_zero()) throw std::domain_error("non-exact MultiPoly division (remainder)");
    MultiPoly r;
    r.nv_ = nv_;
    r.c_ = std::move(q);
    r.trim();
    return r;
}

Rat MultiPoly::coeff(std::span<const long> exponents) const {
    if (nv_ == 0) {
        return val_;
    }
    if (static_cast<int>(exponents.size()) != nv_) throw std::logic_error("MultiPoly::coeff arity");
    long e = exponents[0];
    if (e < 0 || e >= static_cast<long>(c_.size())) return Rat(0);
    return c_[e].coeff(exponents.subspan(1));
}

long MultiPoly::degree_in(int i) const {
    if (is_zero()) return -1;
    if (nv_ == 0) return 0;
    if (i == 0) return static_cast<long>(c_.size()) - 1;
    long d = -1;
    for (const auto& x : c_) d = std::max(d, x.degree_in(i - 1));
    return d;
}

}  // namespace cuthex
