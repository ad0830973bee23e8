#include "core/kernel_red.hpp"

#include <algorithm>
#include <functional>

#include "core/linalg.hpp"

namespace cuthex {

RedForm red_form_from_string(const std::string& s) {
    if (s == "d2") return RedForm::d2;
    if (s == "R") return RedForm::R;
    if (s == "L") return RedForm::L;
    if (s == "r3") return RedForm::r3;
    throw std::invalid_argument("unknown kernel form: " + s + " (expected d2|R|L|r3)");
}

std::string to_string(RedForm f) {
    switch (f) {
        case RedForm::d2: return "d2";
        case RedForm::R: return "R";
        case RedForm::L: return "L";
        case RedForm::r3: return "r3";
    }
    return "?";
}

namespace {

std::vector<std::vector<long>> combinations(const std::vector<long>& set, long k) {
    std::vector<std::vector<long>> out;
    if (k < 0) return out;
    std::vector<long> idx(k);
    std::function<void(long, long)> rec = [&](long start, long depth) {
        if (depth == k) {
            std::vector<long> vals(k);
            for (long i = 0; i < k; ++i) vals[i] = set[idx[i]];
            out.push_back(std::move(vals));
            return;
        }
        for (long i = start; i < static_cast<long>(set.size()); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

Rat vandermonde(std::span<const long> vals) {
    Rat v(1);
    for (size_t i = 0; i < vals.size(); ++i)
        for (size_t j = i + 1; j < vals.size(); ++j) v *= (vals[i] - vals[j]);
    return v;
}

Rat vandermonde_with_head(const Rat& head, std::span<const long> vals) {
    Rat v(1);
    for (size_t j = 0; j < vals.size(); ++j) v *= (head - vals[j]);
    for (size_t i = 0; i < vals.size(); ++i)
        for (size_t j = i + 1; j < vals.size(); ++j) v *= (vals[i] - vals[j]);
    return v;
}

Rat prod_diff(const Rat& v, std::span<const long> vals) {
    Rat p(1);
    for (long s : vals) p *= (v - s);
    return p;
}

// Residue sum of num(z) / ((z-y)_{N-n+1} * optional extra pole) either over all
// poles (tau_pts == nullptr, with the Res_inf cross-check) or over tau_pts.
Rat zint(const UniPoly& num, long y, long nn1, const Rat* extra_pole,
         const std::vector<long>* tau_pts) {
    RatFun f(num);
    for (long j = 0; j < nn1; ++j) f.mul_den_root(rat(y - j));
    if (extra_pole) f.mul_den_root(*extra_pole);
    if (tau_pts == nullptr) return f.sum_residues_all_checked();
    Rat s(0);
    for (long p : *tau_pts) s += f.residue_at(rat(p));
    return s;
}

}  // namespace

RedKernel::RedKernel(const PolygonData& P) : P_(P) {
    long d = P_.d, N = P_.N, r = P_.r;
    eg_ = compute_Eg(P_.ycut, N);
    if (d > 0) tL_ = power_sums(P_.L, d);

    UniPoly Qpoly = UniPoly::from_roots(std::span<const long>(P_.Q_roots));
    UniPoly Ppoly = UniPoly::from_roots(std::span<const long>(P_.P_roots));
    qrqc_poly_ = UniPoly::from_roots(std::span<const long>(P_.R)) *
                 UniPoly::from_roots(std::span<const long>(P_.C));

    auto dy_det = [&](std::span<const long> vals) {
        size_t k = vals.size();
        Mat a(k, std::vector<Rat>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
                a[i][j] = pochhammer(rat(vals[i] - P_.ycut[j] + 1), N - 1) * inv_factorial(N - 1);
        return mat_det(std::move(a));
    };

    auto build_d = [&](const std::vector<long>& X, std::vector<Subset>* delta_route,
                       std::vector<Subset>& eg_route, std::vector<UniPoly>& qov_out) {
        for (auto& vals : combinations(X, d)) {
            UniPoly qov = Qpoly;
            for (long s : vals) qov = qov.divexact_root(rat(s));
            Rat qprod(1), pprod(1);
            for (long s : vals) {
                qprod *= Q_deriv(s);
                pprod *= Ppoly.eval(rat(s));
            }
            Rat vdm = vandermonde(vals);
            if (delta_route) {
                Subset sd{vals, vdm * dy_det(vals) / qprod};
                delta_route->push_back(std::move(sd));
            }
            std::vector<Rat> xs_r(vals.begin(), vals.end());
            Subset se{vals, pprod / qprod * eg_.eval(xs_r) * vdm * vdm};
            eg_route.push_back(std::move(se));
            qov_out.push_back(std::move(qov));
        }
    };
    build_d(P_.R, &subsR_delta_, subsR_eg_, qovR_);
    build_d(P_.L, nullptr, subsL_eg_, qovL_);

    auto build_d1 = [&](const std::vector<long>& X, std::vector<Subset>* delta_route,
                        std::vector<Subset>& eg_route, std::vector<UniPoly>& zp_out,
                        std::vector<UniPoly>& egz_out) {
        for (auto& vals : combinations(X, d - 1)) {
            Rat qprod(1), pprod(1);
            for (long s : vals) {
                qprod *= Q_deriv(s);
                pprod *= Ppoly.eval(rat(s));
            }
            if (delta_route) delta_route->push_back(Subset{vals, 1 / qprod});
            Rat vdm = vandermonde(vals);
            eg_route.push_back(Subset{vals, pprod / qprod * vdm * vdm});
            std::vector<Rat> rest(vals.begin(), vals.end());
            UniPoly egz = d == 0 ? UniPoly::one() : eg_.poly.eval_partial(rest);
            zp_out.push_back(Ppoly * egz * UniPoly::from_roots(std::span<const long>(vals)));
            egz_out.push_back(std::move(egz));
        }
    };
    build_d1(P_.R, &subsR_delta1_, subsR_eg1_, zpolyR_, egzR_);
    build_d1(P_.L, nullptr, subsL_eg1_, zpolyL_, egzL_);

    auto hres = [&](long u) -> Rat {
        Rat qr(1), pg(1), qlp(1);
        for (long s : P_.R) qr *= (u - s);
        for (long s : P_.G) pg *= (u - s);
        for (long s : P_.L)
            if (s != u) qlp *= (u - s);
        return qr / (pg * qlp);
    };
    for (auto& vals : combinations(P_.L, r)) {
        Rat w(1);
        for (long u : vals) w *= hres(u);
        Rat vdm = vandermonde(vals);
        std::vector<Rat> us(vals.begin(), vals.end());
        subsL_plus_.push_back(Subset{vals, w * vdm * vdm * eval_complementary(eg_.pbasis, tL_, us)});
        plus_polyz_.push_back(UniPoly::from_roots(std::span<const long>(vals)));
    }
    for (auto& vals : combinations(P_.L, r + 1)) {
        Rat w(1);
        for (long u : vals) w *= hres(u);
        Rat vdm = vandermonde(vals);
        subsL_minus_.push_back(Subset{vals, w * vdm * vdm});
        std::vector<long> rest;
        for (long u : P_.L)
            if (std::find(vals.begin(), vals.end(), u) == vals.end()) rest.push_back(u);
        std::vector<Rat> us(vals.begin(), vals.end());
        UniPoly ez = eval_complementary_z(eg_.pbasis, tL_, us);
        minus_zpoly_.push_back(Ppoly * UniPoly::from_roots(std::span<const long>(rest)) * ez);
    }

    Rat fd = Rat(factorial(d)), frf = Rat(factorial(r));
    for (const auto& s : subsR_delta_) om00_d2_ += s.weight;
    om00_d2_ *= fd;
    for (const auto& s : subsR_eg_) om00_R_ += s.weight;
    om00_R_ *= fd;
    for (const auto& s : subsL_eg_) om00_L_ += s.weight;
    om00_L_ *= fd;
    for (const auto& s : subsL_plus_) om00_plus_ += s.weight;
    om00_plus_ *= frf;
    if (om00_d2_ == 0 || om00_R_ == 0 || om00_L_ == 0 || om00_plus_ == 0)
        throw std::domain_error("kernel normalizer vanishes (degenerate polygon data)");
}

Rat RedKernel::Q_deriv(long root) const {
    Rat p(1);
    for (long s : P_.Q_roots)
        if (s != root) p *= (root - s);
    return p;
}

Rat RedKernel::QRQC_at(const Rat& v) const {
    Rat p(1);
    for (long s : P_.R) p *= (v - s);
    for (long s : P_.C) p *= (v - s);
    return p;
}

Rat RedKernel::QRQC_deriv(long root) const {
    Rat p(1);
    for (long s : P_.R)
        if (s != root) p *= (root - s);
    for (long s : P_.C)
        if (s != root) p *= (root - s);
    return p;
}

Rat RedKernel::K0(long m, long x, long n, long y) const {
    if (n > m && y >= x) return -pochhammer(rat(y - x + 1), n - m - 1) * inv_factorial(n - m - 1);
    return Rat(0);
}

Rat RedKernel::eval_d2(long m, long x, long n, long y) const {
    long d = P_.d, N = P_.N;
    Rat K = K0(m, x, n, y);
    if (m >= N) return K;
    Rat fd = Rat(factorial(d));
    Rat fd1d = d >= 1 ? Rat(factorial(d - 1)) * d : Rat(0);
    UniPoly fnn{Rat(factorial(N - n))};

    // The K_2 block per (d-1)-subset is independent of the outer pole.
    std::vector<Rat> dtn(subsR_delta1_.size());
    for (size_t si = 0; si < subsR_delta1_.size(); ++si) {
        const auto& S = subsR_delta1_[si];
        Mat a(d, std::vector<Rat>(d));
        for (long b = 0; b < d; ++b) a[0][b] = Rat(h_ones(y - P_.ycut[b], n));
        for (long i = 1; i < d; ++i)
            for (long b = 0; b < d; ++b)
                a[i][b] =
                    pochhammer(rat(S.vals[i - 1] - P_.ycut[b] + 1), N - 1) * inv_factorial(N - 1);
        dtn[si] = mat_det(std::move(a));
    }

    for (long p : P_.Q_roots) {
        if (p < x) continue;
        Rat vp = rat(p);
        Rat ap = pochhammer(rat(p - x + 1), N - m - 1) * inv_factorial(N - m - 1) / Q_deriv(p);
        Rat inner1(0);
        for (size_t si = 0; si < subsR_delta_.size(); ++si) {
            Rat zi = zint(qovR_[si] * fnn, y, N - n + 1, &vp, nullptr);
            inner1 += subsR_delta_[si].weight * prod_diff(vp, subsR_delta_[si].vals) * zi;
        }
        inner1 *= fd;
        Rat inner2(0);
        for (size_t si = 0; si < subsR_delta1_.size(); ++si)
            inner2 += subsR_delta1_[si].weight * vandermonde_with_head(vp, subsR_delta1_[si].vals) *
                      dtn[si];
        inner2 *= fd1d;
        K += ap * (inner1 + inner2) / om00_d2_;
    }
    return K;
}

Rat RedKernel::eval_RL(long m, long x, long n, long y, bool left) const {
    long d = P_.d, N = P_.N;
    Rat K = K0(m, x, n, y);
    if (m >= N) return K;
    const auto& subs = left ? subsL_eg_ : subsR_eg_;
    const auto& qov = left ? qovL_ : qovR_;
    const auto& subs1 = left ? subsL_eg1_ : subsR_eg1_;
    const auto& zp1 = left ? zpolyL_ : zpolyR_;
    const Rat& om00 = left ? om00_L_ : om00_R_;
    std::vector<long> taupts = d > 0 ? gamma_tau_points(y, n, P_.ycut[0], N) : std::vector<long>{};
    Rat fd = Rat(factorial(d));
    Rat fd1d = d >= 1 ? Rat(factorial(d - 1)) * d : Rat(0);
    Rat fnn = Rat(factorial(N - n));

    // z-integrals without the z = v pole are independent of the outer pole.
    std::vector<Rat> zinf1(subs1.size(), Rat(0)), ztau1(subs1.size(), Rat(0));
    for (size_t si = 0; si < subs1.size(); ++si) {
        if (!left) zinf1[si] = zint(zp1[si], y, N - n + 1, nullptr, nullptr);
        if (!taupts.empty()) ztau1[si] = zint(zp1[si], y, N - n + 1, nullptr, &taupts);
    }

    for (long p : P_.Q_roots) {
        if (p < x) continue;
        Rat vp = rat(p);
        Rat ap = pochhammer(rat(p - x + 1), N - m - 1) * inv_factorial(N - m - 1) / Q_deriv(p);
        Rat piece1(0);
        for (size_t si = 0; si < subs.size(); ++si) {
            Rat zi = zint(qov[si], y, N - n + 1, &vp, nullptr);
            piece1 += subs[si].weight * prod_diff(vp, subs[si].vals) * zi;
        }
        piece1 *= fd;
        Rat piece2(0), piecetau(0);
        for (size_t si = 0; si < subs1.size(); ++si) {
            Rat pd = prod_diff(vp, subs1[si].vals);
            if (!left) piece2 += subs1[si].weight * pd * zinf1[si];
            piecetau += subs1[si].weight * pd * ztau1[si];
        }
        piece2 *= fd1d;
        piecetau *= fd1d;
        Rat inner = left ? Rat(piece1 + piecetau) : Rat(piece1 + piece2 - piecetau);
        K += ap * fnn * inner / om00;
    }
    return K;
}

Rat RedKernel::eval_r3(long m, long x, long n, long y) const {
    long d = P_.d, N = P_.N, r = P_.r;
    Rat K = K0(m, x, n, y);
    if (m >= N) return K;
    std::vector<long> taupts = d > 0 ? gamma_tau_points(y, n, P_.ycut[0], N) : std::vector<long>{};
    Rat cmn = Rat(factorial(N - n)) * inv_factorial(N - m - 1);
    Rat fr = Rat(factorial(r));
    Rat fr1 = Rat(factorial(r + 1));

    // The Gamma_tau z-integrals are independent of the outer pole.
    std::vector<Rat> ztau(subsL_minus_.size(), Rat(0));
    if (!taupts.empty())
        for (size_t ti = 0; ti < subsL_minus_.size(); ++ti)
            ztau[ti] = zint(minus_zpoly_[ti], y, N - n + 1, nullptr, &taupts);

    Rat total(0);
    for (long p : P_.Q_roots) {  // roots of Q_R Q_C in x + N
        if (p < x) continue;
        if (std::find(P_.L.begin(), P_.L.end(), p) != P_.L.end()) continue;
        Rat vp = rat(p);
        Rat ap = pochhammer(rat(p - x + 1), N - m - 1) / QRQC_deriv(p);
        Rat tinf(0);
        for (size_t ti = 0; ti < subsL_plus_.size(); ++ti) {
            const auto& T = subsL_plus_[ti];
            Rat zi = zint(qrqc_poly_ * plus_polyz_[ti], y, N - n + 1, &vp, nullptr);
            tinf += T.weight / prod_diff(vp, T.vals) * zi;
        }
        tinf *= fr;
        Rat ttau(0);
        for (size_t ti = 0; ti < subsL_minus_.size(); ++ti)
            ttau += subsL_minus_[ti].weight / prod_diff(vp, subsL_minus_[ti].vals) * ztau[ti];
        ttau *= fr1;
        total += ap * (tinf + ttau / (r + 1));
    }
    for (long l : P_.L) {  // simple v-poles brought in by the Omega ratios
        if (l < x) continue;
        Rat bl = pochhammer(rat(l - x + 1), N - m - 1) / QRQC_at(rat(l));
        Rat winf(0);
        for (size_t ti = 0; ti < subsL_plus_.size(); ++ti) {
            const auto& T = subsL_plus_[ti];
            if (std::find(T.vals.begin(), T.vals.end(), l) == T.vals.end()) continue;
            Rat coef(1);
            UniPoly polyz = UniPoly::one();
            for (long u : T.vals) {
                if (u == l) continue;
                coef /= rat(l - u);
                polyz *= UniPoly::linear(rat(-u));
            }
            // (z - l) from prod(z - u) cancels the residue's 1/(z - l) pole.
            Rat zi = zint(qrqc_poly_ * polyz, y, N - n + 1, nullptr, nullptr);
            winf += T.weight * coef * zi;
        }
        winf *= fr;
        Rat wtau(0);
        for (size_t ti = 0; ti < subsL_minus_.size(); ++ti) {
            const auto& T = subsL_minus_[ti];
            if (std::find(T.vals.begin(), T.vals.end(), l) == T.vals.end()) continue;
            Rat coef(1);
            for (long u : T.vals)
                if (u != l) coef /= rat(l - u);
            wtau += T.weight * coef * ztau[ti];
        }
        wtau *= fr1;
        total += bl * (winf + wtau / (r + 1));
    }
    return K + cmn * total / om00_plus_;
}

Rat RedKernel::eval(long m, long x, long n, long y, RedForm form) const {
    if (m < 0 || m > P_.N || n < 0 || n > P_.N)
        throw std::domain_error("kernel point outside the level range 0..N");
    switch (form) {
        case RedForm::d2: return eval_d2(m, x, n, y);
        case RedForm::R: return eval_RL(m, x, n, y, false);
        case RedForm::L: return eval_RL(m, x, n, y, true);
        case RedForm::r3: return eval_r3(m, x, n, y);
    }
    throw std::logic_error("unreachable");
}

Rat RedKernel::correlation(std::span<const LatticePoint> pts, RedForm form) const {
    size_t k = pts.size();
    Mat a(k, std::vector<Rat>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            a[i][j] = eval(pts[i].n, pts[i].x, pts[j].n, pts[j].x, form);
    return mat_det(std::move(a));
}

Rat RedKernel::omega_R(const Rat& v, const Rat& z) const {
    Rat s(0);
    for (const auto& S : subsR_eg_) {
        Rat term = S.weight;
        for (long u : S.vals) term *= (v - u) / (z - u);
        s += term;
    }
    return s * Rat(factorial(P_.d));
}

Rat RedKernel::omega_L(const Rat& v, const Rat& z) const {
    Rat s(0);
    for (const auto& S : subsL_eg_) {
        Rat term = S.weight;
        for (long u : S.vals) term *= (v - u) / (z - u);
        s += term;
    }
    return s * Rat(factorial(P_.d));
}

Rat RedKernel::omega_tilde_R(const Rat& v, const Rat& z) const {
    if (P_.d == 0) throw std::domain_error("omega_tilde needs d >= 1");
    Rat s(0);
    for (size_t si = 0; si < subsR_eg1_.size(); ++si) {
        Rat term = subsR_eg1_[si].weight * egzR_[si].eval(z);
        for (long u : subsR_eg1_[si].vals) term *= (v - u) * (z - u);
        s += term;
    }
    return s * Rat(factorial(P_.d - 1));
}

Rat RedKernel::omega_tilde_L(const Rat& v, const Rat& z) const {
    if (P_.d == 0) throw std::domain_error("omega_tilde needs d >= 1");
    Rat s(0);
    for (size_t si = 0; si < subsL_eg1_.size(); ++si) {
        Rat term = subsL_eg1_[si].weight * egzL_[si].eval(z);
        for (long u : subsL_eg1_[si].vals) term *= (v - u) * (z - u);
        s += term;
    }
    return s * Rat(factorial(P_.d - 1));
}

Rat RedKernel::omega_plus(long k, const Rat& v, const Rat& z) const {
    if (k == 0 && P_.d == 0) return Rat(1);
    if (k != P_.r) throw std::domain_error("omega_plus is defined for k = r");
    Rat s(0);
    for (const auto& T : subsL_plus_) {
        Rat term = T.weight;
        for (long u : T.vals) term *= (z - u) / (v - u);
        s += term;
    }
    return s * Rat(factorial(P_.r));
}

Rat RedKernel::omega_minus(long k, const Rat& v, const Rat& z) const {
    if (k != P_.r + 1) throw std::domain_error("omega_minus is defined for k = r + 1");
    Rat s(0);
    for (const auto& T : subsL_minus_) {
        Rat term = T.weight;
        for (long u : T.vals) term *= 1 / ((v - u) * (z - u));
        std::vector<Rat> us(T.vals.begin(), T.vals.end());
        Rat ez(0);
        for (const auto& [mu, c] : eg_.pbasis) {
            Rat t = c;
            for (long a : mu) {
                Rat arg = rat_pow(z, a) + tL_[a - 1];
                for (const Rat& u : us) arg -= rat_pow(u, a);
                t *= arg;
            }
            ez += t;
        }
        s += term * ez;
    }
    return s * Rat(factorial(P_.r + 1));
}

}  // namespace cuthex
