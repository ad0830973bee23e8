#include "core/tacnode.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cuthex {

namespace {
const double kTwoPi = 6.283185307179586476925286766559;

double heaviside_power(double z, long m) {
    if (m < 1 || z < 0) return 0.0;
    double v = 1.0;
    for (long i = 1; i < m; ++i) v *= z / i;
    return v;
}

Cplx ipow(const Cplx& z, long e) {
    if (e == 0) return Cplx(1.0, 0.0);
    bool inv = e < 0;
    long k = inv ? -e : e;
    Cplx b = z, acc(1.0, 0.0);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return inv ? 1.0 / acc : acc;
}
}  // namespace

TacnodeKernel::TacnodeKernel(const TacParams& p, const QuadConfig& qc) : p_(p), qc_(qc) {
    if (p_.r < 0 || p_.rho < 0) throw std::domain_error("tacnode parameters require r, rho >= 0");
    if (p_.r > qc_.r_cap)
        throw std::domain_error("tacnode r exceeds the configured cap");
    if (p_.r > 2)
        throw std::domain_error("tacnode r > 2 is not supported by the separable L3 evaluation");
    if (!(qc_.a > qc_.eps && qc_.eps > 0))
        throw std::domain_error("quadrature requires a > eps > 0");

    long steps = static_cast<long>(std::llround(2 * qc_.T / qc_.h));
    for (long i = 0; i <= steps; ++i) {
        Cplx w(qc_.a, -qc_.T + i * qc_.h);
        wline_.push_back(w);
        fline_.push_back(weight(w));
    }
    for (int j = 0; j < qc_.circle_n; ++j) {
        double ang = kTwoPi * j / qc_.circle_n;
        circle_.push_back(Cplx(qc_.eps * std::cos(ang), qc_.eps * std::sin(ang)));
    }

    int nm = 2 * p_.r + 3;
    mom_.assign(nm, Cplx(0, 0));
    double lw = qc_.h / kTwoPi;
    for (size_t t = 0; t < wline_.size(); ++t) {
        Cplx pw = fline_[t] * lw;
        for (int k = 0; k < nm; ++k) {
            mom_[k] += pw;
            pw *= wline_[t];
        }
    }

    if (p_.r == 0) {
        theta00_ = Cplx(1, 0);
    } else {
        std::vector<Cplx> m(mom_.begin(), mom_.begin() + 2 * p_.r - 1);
        theta00_ = moment_det(m, p_.r);
        for (int k = 2; k <= p_.r; ++k) theta00_ *= k;  // r! factor
    }
    if (std::abs(theta00_) < 1e-300) throw std::runtime_error("Theta_r(0,0) vanished numerically");

    // E_k(V) for circle nodes, then the Theta caches.
    ek_circle_.assign(circle_.size(), std::vector<Cplx>(std::max(nm, 1), Cplx(0, 0)));
    for (size_t v = 0; v < circle_.size(); ++v) {
        for (size_t t = 0; t < wline_.size(); ++t) {
            Cplx base = fline_[t] * lw / (circle_[v] - wline_[t]);
            for (int k = 0; k < nm; ++k) {
                ek_circle_[v][k] += base;
                base *= wline_[t];
            }
        }
    }
    theta_vc_zl_.assign(circle_.size(), std::vector<Cplx>(wline_.size(), Cplx(1, 0)));
    if (p_.r >= 1) {
        std::vector<Cplx> dk(2 * p_.r - 1);
        for (size_t v = 0; v < circle_.size(); ++v)
            for (size_t z = 0; z < wline_.size(); ++z) {
                for (int k = 0; k < 2 * p_.r - 1; ++k)
                    dk[k] = wline_[z] * ek_circle_[v][k] - ek_circle_[v][k + 1];
                Cplx th = moment_det(dk, p_.r);
                for (int k = 2; k <= p_.r; ++k) th *= k;
                theta_vc_zl_[v][z] = th;
            }
    }
    // Theta^-_{r+1} on circle pairs from the G-moments.
    thetam_cc_.assign(circle_.size(), std::vector<Cplx>(circle_.size(), Cplx(0, 0)));
    std::vector<Cplx> gk(2 * p_.r + 1);
    for (size_t v = 0; v < circle_.size(); ++v)
        for (size_t z = 0; z < circle_.size(); ++z) {
            std::fill(gk.begin(), gk.end(), Cplx(0, 0));
            for (size_t t = 0; t < wline_.size(); ++t) {
                Cplx base = fline_[t] * lw / ((circle_[z] - wline_[t]) * (circle_[v] - wline_[t]));
                for (size_t k = 0; k < gk.size(); ++k) {
                    gk[k] += base;
                    base *= wline_[t];
                }
            }
            Cplx th = moment_det(gk, p_.r + 1);
            for (int k = 2; k <= p_.r + 1; ++k) th *= k;
            thetam_cc_[v][z] = th;
        }
}

Cplx TacnodeKernel::weight(const Cplx& W) const {
    return std::exp(2.0 * W * W + p_.beta * W) / ipow(W, p_.rho);
}

Cplx TacnodeKernel::moment_det(const std::vector<Cplx>& mom, int size) const {
    if (size == 0) return Cplx(1, 0);
    std::vector<std::vector<Cplx>> a(size, std::vector<Cplx>(size));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) a[i][j] = mom[i + j];
    // Gaussian elimination with partial pivoting.
    Cplx det(1, 0);
    for (int c = 0; c < size; ++c) {
        int piv = c;
        for (int rr = c + 1; rr < size; ++rr)
            if (std::abs(a[rr][c]) > std::abs(a[piv][c])) piv = rr;
        if (std::abs(a[piv][c]) == 0.0) return Cplx(0, 0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int rr = c + 1; rr < size; ++rr) {
            Cplx f = a[rr][c] / a[c][c];
            for (int k = c; k < size; ++k) a[rr][k] -= f * a[c][k];
        }
    }
    return det;
}

Cplx TacnodeKernel::theta(const Cplx& V, const Cplx& Z) const {
    if (p_.r == 0) return Cplx(1, 0);
    double lw = qc_.h / kTwoPi;
    std::vector<Cplx> ek(2 * p_.r, Cplx(0, 0));
    for (size_t t = 0; t < wline_.size(); ++t) {
        Cplx base = fline_[t] * lw / (V - wline_[t]);
        for (size_t k = 0; k < ek.size(); ++k) {
            ek[k] += base;
            base *= wline_[t];
        }
    }
    std::vector<Cplx> dk(2 * p_.r - 1);
    for (int k = 0; k < 2 * p_.r - 1; ++k) dk[k] = Z * ek[k] - ek[k + 1];
    Cplx th = moment_det(dk, p_.r);
    for (int k = 2; k <= p_.r; ++k) th *= k;
    return th;
}

Cplx TacnodeKernel::theta_plus(const Cplx& V, const Cplx& Z) const {
    if (p_.r < 1) throw std::domain_error("theta_plus requires r >= 1");
    if (p_.r == 1) return Cplx(1, 0);
    std::vector<Cplx> pk(2 * p_.r - 3);
    for (size_t k = 0; k < pk.size(); ++k)
        pk[k] = V * Z * mom_[k] - (V + Z) * mom_[k + 1] + mom_[k + 2];
    Cplx th = moment_det(pk, p_.r - 1);
    for (int k = 2; k <= p_.r - 1; ++k) th *= k;
    return th;
}

Cplx TacnodeKernel::theta_minus(const Cplx& V, const Cplx& Z) const {
    double lw = qc_.h / kTwoPi;
    std::vector<Cplx> gk(2 * p_.r + 1, Cplx(0, 0));
    for (size_t t = 0; t < wline_.size(); ++t) {
        Cplx base = fline_[t] * lw / ((Z - wline_[t]) * (V - wline_[t]));
        for (size_t k = 0; k < gk.size(); ++k) {
            gk[k] += base;
            base *= wline_[t];
        }
    }
    Cplx th = moment_det(gk, p_.r + 1);
    for (int k = 2; k <= p_.r + 1; ++k) th *= k;
    return th;
}

Cplx TacnodeKernel::L1(long tau1, double th1, long tau2, double th2) const {
    Cplx acc(0, 0);
    double lw = qc_.h / kTwoPi;
    for (size_t v = 0; v < circle_.size(); ++v) {
        const Cplx& V = circle_[v];
        Cplx vpart = ipow(V, p_.rho - tau1) * std::exp(-V * V - th1 * V) * V / double(qc_.circle_n);
        Cplx zacc(0, 0);
        for (size_t z = 0; z < wline_.size(); ++z) {
            const Cplx& Z = wline_[z];
            zacc += ipow(Z, tau2 - p_.rho) * std::exp(Z * Z + th2 * Z) / (Z - V) *
                    theta_vc_zl_[v][z];
        }
        acc += vpart * zacc * lw;
    }
    return acc / theta00_;
}

Cplx TacnodeKernel::L2(long tau1, double th1, long tau2, double th2) const {
    Cplx acc(0, 0);
    double lw = qc_.h / kTwoPi;
    for (size_t v = 0; v < circle_.size(); ++v) {
        const Cplx& V = circle_[v];
        Cplx vpart =
            ipow(V, tau2) * std::exp(-V * V + (th2 - p_.beta) * V) * V / double(qc_.circle_n);
        Cplx zacc(0, 0);
        for (size_t z = 0; z < wline_.size(); ++z) {
            const Cplx& Z = wline_[z];
            zacc += ipow(Z, -tau1) * std::exp(Z * Z - (th1 - p_.beta) * Z) / (Z - V) *
                    theta_vc_zl_[v][z];
        }
        acc += vpart * zacc * lw;
    }
    return acc / theta00_;
}

Cplx TacnodeKernel::L3(long tau1, double th1, long tau2, double th2) const {
    if (p_.r == 0) return Cplx(0, 0);
    double lw = qc_.h / kTwoPi;
    // Separable evaluation through the moment expansion of Theta^+_{r-1}.
    auto vmoment = [&](int k) {
        Cplx s(0, 0);
        for (const Cplx& V : wline_)
            s += ipow(V, -tau1 + k) * std::exp(V * V - (th1 - p_.beta) * V);
        return s * lw;
    };
    auto zmoment = [&](int k) {
        Cplx s(0, 0);
        for (const Cplx& Z : wline_) s += ipow(Z, tau2 - p_.rho + k) * std::exp(Z * Z + th2 * Z);
        return s * lw;
    };
    Cplx acc(0, 0);
    if (p_.r == 1) {
        acc = vmoment(0) * zmoment(0);
    } else if (p_.r == 2) {
        // Theta^+_1(V,Z) = M_0 V Z - M_1 (V + Z) + M_2
        acc = mom_[0] * vmoment(1) * zmoment(1) - mom_[1] * (vmoment(1) * zmoment(0) + vmoment(0) * zmoment(1)) +
              mom_[2] * vmoment(0) * zmoment(0);
    } else {
        throw std::domain_error("L3 separable evaluation implemented for r <= 2");
    }
    return double(p_.r) * acc / theta00_;
}

Cplx TacnodeKernel::L4(long tau1, double th1, long tau2, double th2) const {
    Cplx acc(0, 0);
    for (size_t v = 0; v < circle_.size(); ++v) {
        const Cplx& V = circle_[v];
        Cplx vpart = ipow(V, p_.rho - tau1) * std::exp(-V * V - th1 * V) * V;
        for (size_t z = 0; z < circle_.size(); ++z) {
            const Cplx& Z = circle_[z];
            Cplx zpart = ipow(Z, tau2) * std::exp(-Z * Z + (th2 - p_.beta) * Z) * Z;
            acc += vpart * zpart * thetam_cc_[v][z];
        }
    }
    acc /= double(qc_.circle_n) * double(qc_.circle_n);
    return -acc / (double(p_.r + 1) * theta00_);
}

std::vector<Cplx> TacnodeKernel::eval_terms(long tau1, double th1, long tau2, double th2) const {
    Cplx hterm(-heaviside_power(th2 - th1, tau1 - tau2), 0);
    return {hterm, L1(tau1, th1, tau2, th2), L2(tau1, th1, tau2, th2), L3(tau1, th1, tau2, th2),
            L4(tau1, th1, tau2, th2)};
}

Cplx TacnodeKernel::eval_complex(long tau1, double th1, long tau2, double th2) const {
    Cplx s(0, 0);
    for (const Cplx& t : eval_terms(tau1, th1, tau2, th2)) s += t;
    return s;
}

double TacnodeKernel::eval(long tau1, double th1, long tau2, double th2) const {
    Cplx v = eval_complex(tau1, th1, tau2, th2);
    if (std::abs(v.imag()) > qc_.im_tol)
        throw std::runtime_error("tacnode kernel: imaginary part exceeds tolerance (quadrature failure)");
    return v.real();
}

double TacnodeKernel::involution_residual(long tau1, double th1, long tau2, double th2) const {
    double a = eval(tau1, th1, tau2, th2);
    double b = eval(p_.rho - tau2, p_.beta - th2, p_.rho - tau1, p_.beta - th1);
    return std::abs(a - b);
}

}  // namespace cuthex
