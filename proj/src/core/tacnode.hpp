#pragma once

#include <complex>
#include <vector>

namespace cuthex {

using Cplx = std::complex<double>;

struct TacParams {
    int r = 0;
    int rho = 0;
    double beta = 0.0;
};

struct QuadConfig {
    double a = 0.5;       // vertical-line abscissa, must exceed the circle radius
    double eps = 0.25;    // Gamma_0 circle radius
    double T = 8.0;       // half-length of the truncated vertical lines
    double h = 1.0 / 64;  // vertical-line step
    int circle_n = 64;    // Gamma_0 sample count
    int r_cap = 2;        // reject larger r (cost grows with the moment count)
    double im_tol = 1e-8; // kernel values are asserted real to this tolerance
};

// Numerical evaluator of the discrete tacnode kernel. The Theta integrals are
// evaluated through their W-moments (Andreief reduction of the Vandermonde
// square), so one evaluator instance precomputes every W-dependent quantity.
class TacnodeKernel {
  public:
    TacnodeKernel(const TacParams& p, const QuadConfig& qc = {});

    const TacParams& params() const { return p_; }
    const QuadConfig& config() const { return qc_; }

    Cplx theta(const Cplx& V, const Cplx& Z) const;        // Theta_r(V, Z)
    Cplx theta_plus(const Cplx& V, const Cplx& Z) const;   // Theta^+_{r-1}
    Cplx theta_minus(const Cplx& V, const Cplx& Z) const;  // Theta^-_{r+1}
    Cplx theta00() const { return theta00_; }

    // Kernel value; throws std::runtime_error when |Im| exceeds im_tol.
    double eval(long tau1, double theta1, long tau2, double theta2) const;
    Cplx eval_complex(long tau1, double theta1, long tau2, double theta2) const;
    // The five pieces -H, L1..L4 (for the term-level involution checks).
    std::vector<Cplx> eval_terms(long tau1, double theta1, long tau2, double theta2) const;

    double involution_residual(long tau1, double theta1, long tau2, double theta2) const;

  private:
    Cplx weight(const Cplx& W) const;  // e^{2W^2 + beta W} / W^rho
    Cplx moment_det(const std::vector<Cplx>& mom, int size) const;
    Cplx L1(long tau1, double th1, long tau2, double th2) const;
    Cplx L2(long tau1, double th1, long tau2, double th2) const;
    Cplx L3(long tau1, double th1, long tau2, double th2) const;
    Cplx L4(long tau1, double th1, long tau2, double th2) const;

    TacParams p_;
    QuadConfig qc_;
    std::vector<Cplx> wline_;    // line nodes a + i t
    std::vector<Cplx> fline_;    // weight(W) at the nodes
    std::vector<Cplx> circle_;   // circle nodes
    std::vector<Cplx> mom_;      // M_k = line moments of the weight
    // E_k(V) = (1/2pi i) int weight(W) W^k / (V - W) dW for circle nodes V
    std::vector<std::vector<Cplx>> ek_circle_;
    // cached Theta_r(V, Z) for V on the circle, Z on the line
    std::vector<std::vector<Cplx>> theta_vc_zl_;
    // cached Theta^-_{r+1}(V, Z) for V, Z both on the circle
    std::vector<std::vector<Cplx>> thetam_cc_;
    Cplx theta00_;
};

}  // namespace cuthex
