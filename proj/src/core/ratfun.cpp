#include "core/ratfun.hpp"

#include <algorithm>

namespace cuthex {

RatFun& RatFun::mul_den_root(const Rat& root, int mult) {
    if (mult == 0) return *this;
    auto it = den_.find(root);
    int have = (it == den_.end()) ? 0 : it->second;
    int now = have + mult;
    if (now > 0) {
        den_[root] = now;
    } else {
        if (it != den_.end()) den_.erase(it);
        for (int k = 0; k < -now; ++k) num_ *= UniPoly::linear(-root);
    }
    return *this;
}

Rat RatFun::residue_at(const Rat& p) const {
    auto it = den_.find(p);
    if (it == den_.end()) return Rat(0);
    long k = it->second;
    // Shift to w = z - p and expand num(w+p) / prod over other roots (w + p - q)^m
    // as a series in w up to order k-1; the residue is the w^{k-1} coefficient.
    UniPoly numsh = num_.shifted(p);
    UniPoly densh = UniPoly::one();
    for (const auto& [q, m] : den_) {
        if (q == p) continue;
        UniPoly f = UniPoly::linear(p - q);
        for (int i = 0; i < m; ++i) densh *= f;
    }
    std::vector<Rat> dinv = densh.inverse_series(k);
    Rat res(0);
    for (long j = 0; j < k; ++j) res += numsh.coeff(j) * dinv[k - 1 - j];
    return res;
}

Rat RatFun::residue_at_infinity() const {
    // Res_inf = -[t^1] of (1/t)^? ... computed via the reversal N~(t)/D~(t):
    // with n = deg num, m = deg den, f(1/t) = t^{m-n} N~(t)/D~(t), and the
    // z-Laurent coefficient of z^{-1} equals the t^1 coefficient of t^{m-n-...}
    // series; concretely we need the series of N~/D~ to order n-m+1.
    if (num_.is_zero()) return Rat(0);
    long n = num_.degree();
    UniPoly den = UniPoly::one();
    for (const auto& [q, m] : den_)
        for (int i = 0; i < m; ++i) den *= UniPoly::linear(-q);
    long m = den.degree();
    long order = n - m + 2;  // need t^{n-m+1}
    if (order <= 0) return Rat(0);
    std::vector<Rat> nr(n + 1), dr(m + 1);
    for (long i = 0; i <= n; ++i) nr[i] = num_.coeff(n - i);
    for (long i = 0; i <= m; ++i) dr[i] = den.coeff(m - i);
    UniPoly nrev{std::vector<Rat>(nr)}, drev{std::vector<Rat>(dr)};
    std::vector<Rat> dinv = drev.inverse_series(order);
    Rat c(0);  // coefficient of t^{n-m+1} in N~/D~
    for (long j = 0; j <= std::min(n, order - 1); ++j) c += nrev.coeff(j) * dinv[order - 1 - j];
    return -c;
}

Rat RatFun::sum_residues_all_checked() const {
    Rat s(0);
    for (const auto& [p, m] : den_) s += residue_at(p);
    Rat check = -residue_at_infinity();
    if (s != check)
        throw std::logic_error("residue engine self-check failed: finite residues != -Res_inf");
    return s;
}

Rat RatFun::sum_residues_at(std::span<const Rat> points) const {
    Rat s(0);
    for (const Rat& p : points) s += residue_at(p);
    return s;
}

Rat RatFun::eval(const Rat& z) const {
    Rat d(1);
    for (const auto& [q, m] : den_)
        for (int i = 0; i < m; ++i) d *= (z - q);
    if (d == 0) throw std::domain_error("evaluating rational function at a pole");
    return num_.eval(z) / d;
}

std::vector<long> gamma_tau_points(long y, long n, long y1, long N) {
    long tau = (y + n) - (y1 + 1);
    if (tau >= 0) return {};
    long lo = y + n - N;
    long hi = std::min(y1 - N, y);
    std::vector<long> pts;
    for (long z = lo; z <= hi; ++z) pts.push_back(z);
    return pts;
}

std::vector<long> gamma_y_points(long y, long n, long y1, long N) {
    long B = std::max(y + n, y1 + 1) - N;
    if (B > y) return {};
    std::vector<long> pts;
    for (long z = B; z <= y; ++z) pts.push_back(z);
    return pts;
}

Rat residue_sum(const RatFun& f, const ContourSpec& contour) {
    if (std::holds_alternative<ContourAllPoles>(contour)) return f.sum_residues_all_checked();
    if (const auto* fin = std::get_if<ContourFinite>(&contour))
        return f.sum_residues_at(fin->points);
    const auto& xn = std::get<ContourXPlusN>(contour);
    Rat s(0);
    for (const auto& [p, m] : f.den_roots())
        if (p >= xn.x) s += f.residue_at(p);
    return s;
}

}  // namespace cuthex
