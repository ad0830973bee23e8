#include "core/kernel_q.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "core/kernel_red.hpp"

namespace cuthex {

namespace {

std::vector<std::vector<long>> index_combinations(long n, long k) {
    std::vector<std::vector<long>> out;
    if (k < 0) return out;
    std::vector<long> idx(k);
    std::function<void(long, long)> rec = [&](long start, long depth) {
        if (depth == k) {
            out.push_back(idx);
            return;
        }
        for (long i = start; i < n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

QKernel::QKernel(const PolygonData& P, Rat q) : P_(P), q_(std::move(q)) {
    if (!(q_ > 0 && q_ < 1)) throw std::domain_error("QKernel requires 0 < q < 1");
    long d = P_.d, N = P_.N, DN = d + N;

    H_.assign(DN, std::vector<Rat>(DN));
    for (long i = 0; i < DN; ++i)
        for (long j = 0; j < DN; ++j) H_[i][j] = h_q(P_.xs[i] - P_.y[j], d, N - 1, q_);
    detH_ = mat_det(H_);
    if (detH_ == 0) throw std::domain_error("H is singular (polygon degeneracy)");

    // T = diag(1_d, T_N) with T_N built from the q-Vandermonde, the reversal
    // permutation and the calP coefficient diagonal.
    UniPoly calp = UniPoly::one();
    for (long i = 1; i <= N - 1; ++i)
        calp *= (UniPoly(Rat(1)) + UniPoly::monomial(1, -qpow(i))) * (1 / (1 - qpow(i)));
    Mat dq(N, std::vector<Rat>(N, Rat(0)));  // Delta^{(q)}_N
    for (long k = 0; k < N; ++k)
        for (long j = 0; j < N; ++j) dq[k][j] = rat_pow(qpow(-k), N - 1 - j);
    Mat dqinv = mat_inverse(dq);
    Mat pi(N, std::vector<Rat>(N, Rat(0)));
    for (long i = 0; i < N; ++i) pi[i][N - 1 - i] = 1;
    Mat dninv(N, std::vector<Rat>(N, Rat(0)));
    for (long i = 0; i < N; ++i) {
        const Rat& e = calp.coeff(N - 1 - i);  // D_N = diag(e_{N-1}, ..., e_0)
        if (e == 0) throw std::logic_error("calP coefficient vanished");
        dninv[i][i] = 1 / e;
    }
    Mat tn = mat_mul(mat_mul(dqinv, pi), dninv);
    Mat left(N, std::vector<Rat>(N, Rat(0))), right(N, std::vector<Rat>(N, Rat(0)));
    for (long j = 0; j < N; ++j) {
        left[j][j] = qpow((N - 1 - j) * d);
        right[j][j] = qpow(-(d + N) * (d + N - 1 - j));
    }
    tn = mat_mul(mat_mul(left, tn), right);
    T_ = mat_identity(DN);
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) T_[d + i][d + j] = tn[i][j];
    Ht_ = mat_mul(H_, T_);
    HtInv_ = mat_inverse(Ht_);

    long cR = static_cast<long>(P_.R.size());
    subsR_ = index_combinations(cR, d);
    for (const auto& idx : subsR_) {
        Rat vdm(1);
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b) vdm *= (qx(idx[a]) - qx(idx[b]));
        Rat qprod(1);
        for (long i : idx) qprod *= Qq_deriv(i);
        std::vector<long> iv(idx.begin(), idx.end());
        wq_.push_back(vdm * delta_q_y_det(iv) / qprod);
    }
    subsR1_ = index_combinations(cR, d - 1);
    for (const auto& idx : subsR1_) {
        Rat qprod(1);
        for (long i : idx) qprod *= Qq_deriv(i);
        wq1_.push_back(1 / qprod);
    }
    om00_ = 0;
    for (const Rat& w : wq_) om00_ += w;
    om00_ *= Rat(factorial(d));
    if (om00_ == 0) throw std::domain_error("Omega_q(0,0) vanishes (degenerate polygon data)");
}

Rat QKernel::Qq_deriv(long i) const {
    Rat p(1);
    for (long r = 0; r < P_.d + P_.N; ++r)
        if (r != i) p *= (qx(i) - qx(r));
    return p;
}

Rat QKernel::delta_q_y_det(std::span<const long> idx) const {
    size_t k = idx.size();
    Mat a(k, std::vector<Rat>(k));
    for (size_t al = 0; al < k; ++al)
        for (size_t be = 0; be < k; ++be)
            a[al][be] = calP_tilde(P_.N - 1, P_.d, P_.ycut[be], qx(idx[al]), q_);
    return mat_det(std::move(a));
}

bool QKernel::htilde_block_shape_ok() const {
    long d = P_.d, N = P_.N, DN = d + N;
    long cR = static_cast<long>(P_.R.size());
    for (long i = 0; i < DN; ++i) {
        for (long j = 0; j < d; ++j)
            if (i >= cR && Ht_[i][j] != 0) return false;
        for (long j = 0; j < N; ++j)
            if (Ht_[i][d + j] != qpow(P_.xs[i] * (d + N - 1 - j))) return false;
    }
    return true;
}

Mat QKernel::mtilde_inverse_closed() const {
    long d = P_.d, N = P_.N, DN = d + N;
    Mat m(DN, std::vector<Rat>(DN, Rat(0)));
    for (long i = 0; i < d; ++i) m[i][i] = 1;
    for (long i = d + 1; i <= DN; ++i) {
        long j = 2 * d + N - i + 1;  // 1-based column
        Rat qq(1);
        for (long t = 1; t <= i - d - 1; ++t) qq *= (1 - qpow(t));
        m[i - 1][j - 1] = qq;
    }
    return m;
}

Mat QKernel::M_from_closed_convolutions() const {
    long d = P_.d, N = P_.N, DN = d + N;
    Mat Hinv = mat_inverse(H_);
    Mat m(DN, std::vector<Rat>(DN, Rat(0)));
    for (long k = 0; k < d; ++k)
        for (long l = 0; l < DN; ++l) {
            Rat s(0);
            for (long j = 0; j < DN; ++j) s += Hinv[l][j] * H_[j][k];
            m[k][l] = s;
        }
    for (long k = d; k < DN; ++k) {
        Rat c(1);
        for (long t = 1; t <= DN - (k + 1); ++t) c /= (1 - qpow(t));
        for (long l = 0; l < DN; ++l) {
            Rat s(0);
            for (long j = 0; j < DN; ++j) s += Hinv[l][j] * qpow(k * P_.xs[j]);
            m[k][l] = c * s;
        }
    }
    return m;
}

Rat QKernel::htilde_det_identity_lhs() const {
    Rat vdm(1);
    long DN = P_.d + P_.N;
    for (long i = 0; i < DN; ++i)
        for (long j = i + 1; j < DN; ++j) vdm *= (qx(i) - qx(j));
    return mat_det(Ht_) / vdm;
}

Rat QKernel::htilde_det_identity_rhs() const {
    long d = P_.d, DN = P_.d + P_.N;
    Rat sgn = (d * (d - 1) / 2) % 2 ? Rat(-1) : Rat(1);
    Rat px(1);
    for (long i = 0; i < DN; ++i) px *= qpow(d * P_.xs[i]);
    return sgn * px * om00_ / Rat(factorial(d));
}

Rat QKernel::psi_tilde(long k, long m, long x) const {
    long N = P_.N, d = P_.d, DN = d + N;
    Rat s(0);
    for (long l = 0; l < DN; ++l) {
        long r = P_.xs[l] - x;
        if (r < 0) continue;
        Rat h;
        if (m == N)
            h = (r == 0) ? Rat(1) : Rat(0);
        else
            h = qpow(r * (d + m)) * calP_at_qpow(N - m - 1, r, q_);
        if (h != 0) s += HtInv_[k][l] * h;
    }
    return s;
}

Rat QKernel::eval_matrix(long m, long x, long n, long y) const {
    long N = P_.N, d = P_.d;
    if (m < 0 || m > N || n < 0 || n > N)
        throw std::domain_error("kernel point outside the level range 0..N");
    Rat t1(0);
    if (n > m && y >= x) t1 = -qpow((y - x) * (d + m)) * calP_at_qpow(n - m - 1, y - x, q_);
    Rat t2(0);
    for (long k = 1; k <= n; ++k) {
        Rat prod(1);
        for (long i = n + 1; i <= N; ++i) prod *= (1 - qpow(i - k));
        if (prod == 0) continue;
        t2 += psi_tilde(d + N - k, m, x) * qpow((k - 1) * y) * prod;
    }
    t2 *= qpow(d * y);
    Rat t3(0);
    for (long k = 0; k < d; ++k) {
        long r = y - P_.ycut[k];
        if (r < 0 || (n == 0 && r != 0)) continue;
        Rat h = (n == 0) ? Rat(1) : qpow(r * d) * calP_at_qpow(n - 1, r, q_);
        t3 += psi_tilde(k, m, x) * h;
    }
    return t1 + t2 + t3;
}

Rat QKernel::omega_tilde_q(const Rat& v, long n, long y) const {
    long d = P_.d, N = P_.N;
    Rat s(0);
    for (size_t si = 0; si < subsR1_.size(); ++si) {
        const auto& idx = subsR1_[si];
        // Delta_d(v, q-values)
        Rat vdm(1);
        for (long i : idx) vdm *= (v - qx(i));
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b) vdm *= (qx(idx[a]) - qx(idx[b]));
        // Delta~_{q,d,n}(q^y; values): h-row over the cut points, calP~ rows.
        Mat a(d, std::vector<Rat>(d));
        for (long be = 0; be < d; ++be) {
            long r = y - P_.ycut[be];
            if (n == 0)
                a[0][be] = (r == 0) ? Rat(1) : Rat(0);
            else
                a[0][be] = (r < 0) ? Rat(0) : qpow(r * d) * calP_at_qpow(n - 1, r, q_);
        }
        for (long al = 1; al < d; ++al)
            for (long be = 0; be < d; ++be)
                a[al][be] = calP_tilde(N - 1, d, P_.ycut[be], qx(idx[al - 1]), q_);
        s += wq1_[si] * vdm * mat_det(std::move(a));
    }
    return s * Rat(factorial(d - 1));
}

Rat QKernel::eval_integral(long m, long x, long n, long y) const {
    long N = P_.N, d = P_.d, DN = d + N;
    if (m < 0 || m > N - 1 || n < 0 || n > N)
        throw std::domain_error("integral route requires 0 <= m <= N-1");
    // K^(0)
    Rat k0(0);
    if (n > m && y >= x) k0 = -calP_at_qpow(n - m - 1, y - x, q_);
    // K^(1): [z^0] of sum_j R_j(z), all Laurent polynomials.
    std::vector<Rat> ck(n + 1, Rat(0));  // Phi coefficients c_k, k = 1..n
    for (long k = 1; k <= n; ++k) {
        Rat prod(1);
        for (long r = n + 1; r <= N; ++r) prod *= (1 - qpow(r - k));
        ck[k] = prod;
    }
    Rat k1(0);
    Rat fd = Rat(factorial(d));
    for (long j = 0; j < DN; ++j) {
        if (P_.xs[j] < x) continue;
        Rat base = qpow(m * (P_.xs[j] - y)) * calP_at_qpow(N - m - 1, P_.xs[j] - x, q_) /
                   (qpow(-y * (DN - 1)) * Qq_deriv(j));
        if (base == 0) continue;
        for (size_t si = 0; si < subsR_.size(); ++si) {
            const auto& idx = subsR_[si];
            if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
            Rat om = fd * wq_[si] * qpow(-y * d);
            for (long i : idx) om *= (qx(j) - qx(i));
            if (om == 0) continue;
            // polynomial prod over r not in S u {j} of (z - q^{x_r - y})
            UniPoly zp = UniPoly::one();
            for (long rr = 0; rr < DN; ++rr) {
                if (rr == j) continue;
                if (std::find(idx.begin(), idx.end(), rr) != idx.end()) continue;
                zp *= UniPoly::linear(-qpow(P_.xs[rr] - y));
            }
            Rat coef(0);
            for (long k = 1; k <= n; ++k)
                if (ck[k] != 0) coef += ck[k] * zp.coeff(k - 1);
            k1 += base * om * coef;
        }
    }
    k1 /= om00_;
    // K^(2)
    Rat k2(0);
    if (d >= 1) {
        for (long j = 0; j < DN; ++j) {
            if (P_.xs[j] < x) continue;
            Rat base = qpow(m * (P_.xs[j] - y)) * calP_at_qpow(N - m - 1, P_.xs[j] - x, q_) /
                       Qq_deriv(j);
            if (base == 0) continue;
            k2 += base * omega_tilde_q(qx(j), n, y);
        }
        k2 *= Rat(d) * qpow(-d * y) / om00_;
    }
    return qpow((d + m) * (y - x)) * (k0 + k1 + k2);
}

Rat QKernel::conjugated(long m, long x, long n, long y) const {
    return qpow((P_.d + m) * (x - y)) * eval_matrix(m, x, n, y);
}

Rat QKernel::correlation(std::span<const LatticePoint> pts) const {
    size_t k = pts.size();
    Mat a(k, std::vector<Rat>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            a[i][j] = eval_matrix(pts[i].n, pts[i].x, pts[j].n, pts[j].x);
    return mat_det(std::move(a));
}

Rat QKernel::kmcg_weight(const Tiling& t) const {
    long N = P_.N, d = P_.d, DN = d + N;
    // C_{N,d,q} = q^{dN(d+N) + N(N^2-1)/3}
    Rat C = qpow(d * N * (d + N) + N * (N * N - 1) / 3);
    // det(chi_i(x_j^(0)))
    Mat chi(d, std::vector<Rat>(d, Rat(0)));
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) chi[i][j] = (t.levels[0][j] == P_.ycut[i]) ? 1 : 0;
    Rat w = C * (d > 0 ? mat_det(std::move(chi)) : Rat(1));
    // per-level phi determinants with the virtual row
    for (long m = 1; m <= N; ++m) {
        long sz = d + m;
        Mat a(sz, std::vector<Rat>(sz));
        long kk = d + m;  // phi_{d+m}
        for (long i = 0; i < sz; ++i)
            for (long j = 0; j < sz; ++j) {
                long zj = t.levels[m][j];
                if (i < sz - 1) {
                    long xi = t.levels[m - 1][i];
                    a[i][j] = (xi <= zj) ? qpow((kk - 1) * (zj - xi)) : Rat(0);
                } else {
                    a[i][j] = qpow((kk - 1) * zj);  // virtual point row
                }
            }
        w *= mat_det(std::move(a));
    }
    // det(psi_i(x_j^(N))) = det(H^{-1}) when the top line matches
    for (long j = 0; j < DN; ++j)
        if (t.levels[N][j] != P_.xs[j]) return Rat(0);
    return w / detH_;
}

QtoOneReport q_to_one_probe(const PolygonData& P, const RedKernel& red,
                            std::span<const std::pair<LatticePoint, LatticePoint>> pairs,
                            std::span<const Rat> eps_grid) {
    QtoOneReport rep;
    for (const Rat& e : eps_grid) rep.eps.push_back(e);
    for (const Rat& e : eps_grid) {
        QKernel qk(P, 1 - e);
        std::vector<Rat> diffs;
        for (const auto& [p1, p2] : pairs) {
            Rat kq = qk.conjugated(p1.n, p1.x, p2.n, p2.x);
            Rat kr = red.eval(p1.n, p1.x, p2.n, p2.x, RedForm::R);
            Rat dd = kq - kr;
            diffs.push_back(dd < 0 ? -dd : dd);
        }
        rep.abs_diff.push_back(std::move(diffs));
    }
    rep.monotone = true;
    for (size_t e = 1; e < rep.abs_diff.size(); ++e)
        for (size_t i = 0; i < rep.abs_diff[e].size(); ++i)
            if (rep.abs_diff[e][i] > rep.abs_diff[e - 1][i]) rep.monotone = false;
    for (size_t i = 0; i < pairs.size(); ++i) {
        double acc = 0;
        int cnt = 0;
        for (size_t e = 1; e < rep.abs_diff.size(); ++e) {
            double d0 = rat_to_double(rep.abs_diff[e - 1][i]);
            double d1 = rat_to_double(rep.abs_diff[e][i]);
            double r0 = rat_to_double(rep.eps[e - 1]) / rat_to_double(rep.eps[e]);
            if (d0 > 0 && d1 > 0) {
                acc += std::log(d0 / d1) / std::log(r0);
                ++cnt;
            }
        }
        rep.order.push_back(cnt ? acc / cnt : 0.0);
    }
    return rep;
}

}  // namespace cuthex
