#pragma once

#include <span>
#include <vector>

#include "core/geometry.hpp"
#include "core/linalg.hpp"
#include "core/symfunc.hpp"
#include "core/tiling.hpp"

namespace cuthex {

// The q-deformed kernel. The primary route inverts the transformed boundary
// matrix H~ = H T exactly and assembles the kernel from the psi~ functions; the
// multiple-integral route is kept as an independent residue-sum path, and the
// boundary-matrix structure identities are exposed for direct verification.
class QKernel {
  public:
    QKernel(const PolygonData& P, Rat q);

    const PolygonData& polygon() const { return P_; }
    const Rat& q() const { return q_; }

    Rat eval_matrix(long m, long x, long n, long y) const;
    Rat eval_integral(long m, long x, long n, long y) const;  // requires m <= N-1
    // q^{(d+m)(x-y)} K_q, the conjugation under which the q->1 limit is taken.
    Rat conjugated(long m, long x, long n, long y) const;

    Rat correlation(std::span<const LatticePoint> pts) const;  // det, matrix route

    // Structure data.
    const Mat& H() const { return H_; }
    const Mat& T() const { return T_; }
    const Mat& Htilde() const { return Ht_; }
    Rat detH() const { return detH_; }
    bool htilde_block_shape_ok() const;
    Mat mtilde_inverse_closed() const;      // the block/antidiagonal closed form
    Mat M_from_closed_convolutions() const; // M of the Eynard-Mehta kernel
    // det H~ / Vandermonde = (-1)^{d(d-1)/2}/d! * prod q^{d x_i} * Omega_q(0,0)
    Rat omega_q00() const { return om00_; }
    Rat htilde_det_identity_lhs() const;
    Rat htilde_det_identity_rhs() const;

    // Karlin-McGregor product of N+2 determinants for one tiling, built
    // literally from the chi / phi / psi determinant blocks.
    Rat kmcg_weight(const Tiling& t) const;

  private:
    Rat qpow(long e) const { return rat_pow(q_, e); }
    Rat qx(long i) const { return qpow(P_.xs[i]); }  // q^{x_{i+1}}
    Rat Qq_deriv(long i) const;                      // Q_q'(q^{x_{i+1}})
    Rat psi_tilde(long k, long m, long x) const;     // psi~_k^{(m+1)}(x), k 0-based
    Rat delta_q_y_det(std::span<const long> idx) const;
    Rat omega_tilde_q(const Rat& v, long n, long y) const;

    PolygonData P_;
    Rat q_;
    Mat H_, T_, Ht_, HtInv_;
    Rat detH_{0};
    std::vector<std::vector<long>> subsR_;  // d-subsets of R indices (0-based)
    std::vector<Rat> wq_;                   // Delta * Delta_q^{(y)} / prod Qq'
    std::vector<std::vector<long>> subsR1_; // (d-1)-subsets
    std::vector<Rat> wq1_;                  // 1 / prod Qq'
    Rat om00_{1};
};

// |K_q(1-eps) - K_red| at sample points for a decreasing epsilon grid.
struct QtoOneReport {
    std::vector<Rat> eps;
    std::vector<std::vector<Rat>> abs_diff;  // [eps][point]
    bool monotone = false;
    // empirical order per point: mean of log(d_i/d_{i+1}) / log(eps_i/eps_{i+1})
    std::vector<double> order;
};
class RedKernel;
QtoOneReport q_to_one_probe(const PolygonData& P, const RedKernel& red,
                            std::span<const std::pair<LatticePoint, LatticePoint>> pairs,
                            std::span<const Rat> eps_grid);

}  // namespace cuthex
