#pragma once

#include <span>
#include <string>
#include <vector>

#include "core/geometry.hpp"
#include "core/ratfun.hpp"
#include "core/symfunc.hpp"

namespace cuthex {

enum class RedForm { d2, R, L, r3 };
RedForm red_form_from_string(const std::string& s);
std::string to_string(RedForm f);

// Exact evaluator for the limiting red-dot kernel. Construction precomputes
// the per-polygon residue data (gap polynomial, subset weights over the R and
// L pole sets, normalizing constants); evaluation is a finite iterated residue
// sum, exactly equal across the four algebraic forms.
class RedKernel {
  public:
    explicit RedKernel(const PolygonData& P);

    const PolygonData& polygon() const { return P_; }

    Rat eval(long m, long x, long n, long y, RedForm form = RedForm::r3) const;
    // det[K(p_i; p_j)] over the point set.
    Rat correlation(std::span<const LatticePoint> pts, RedForm form = RedForm::r3) const;

    // Nested residue-sum building blocks (exposed for the identity tests).
    Rat omega_R(const Rat& v, const Rat& z) const;  // E_g-factored route
    Rat omega_L(const Rat& v, const Rat& z) const;
    Rat omega_tilde_R(const Rat& v, const Rat& z) const;  // (d-1)-fold companion
    Rat omega_tilde_L(const Rat& v, const Rat& z) const;
    Rat omega_R00() const { return om00_R_; }
    Rat omega_L00() const { return om00_L_; }
    Rat omega_plus(long k, const Rat& v, const Rat& z) const;
    Rat omega_minus(long k, const Rat& v, const Rat& z) const;
    Rat omega_plus00() const { return om00_plus_; }

    const EgData& eg() const { return eg_; }

  private:
    struct Subset {
        std::vector<long> vals;  // descending point values
        Rat weight;              // route-dependent scalar factor
    };

    Rat K0(long m, long x, long n, long y) const;
    Rat eval_d2(long m, long x, long n, long y) const;
    Rat eval_RL(long m, long x, long n, long y, bool left) const;
    Rat eval_r3(long m, long x, long n, long y) const;

    Rat Q_deriv(long root) const;
    Rat QRQC_at(const Rat& v) const;
    Rat QRQC_deriv(long root) const;

    PolygonData P_;
    EgData eg_;
    std::vector<Rat> tL_;  // power sums of the set L, alpha = 1..d

    // d-subsets of R carry the Delta-determinant weight (first route) and the
    // E_g-factored weight (second route); d-subsets of L only the latter.
    std::vector<Subset> subsR_delta_;  // w = Delta * Delta^{(y)} / prod Q'
    std::vector<Subset> subsR_eg_;     // w = prod P/Q' * E_g * Delta^2
    std::vector<Subset> subsL_eg_;
    std::vector<UniPoly> qovR_, qovL_;  // Q(z) / prod_{s in S} (z - s)

    // (d-1)-subsets with the z-symbolic factor P(z) E_g(z,u) prod(z-u).
    std::vector<Subset> subsR_delta1_;  // w = 1 / prod Q'
    std::vector<Subset> subsR_eg1_;     // w = prod P/Q' * Delta^2
    std::vector<Subset> subsL_eg1_;
    std::vector<UniPoly> zpolyR_, zpolyL_;   // P(z) E_g(z,u) prod(z-u)
    std::vector<UniPoly> egzR_, egzL_;       // E_g(z,u) alone

    // r- and (r+1)-subsets of L for the reduced form.
    std::vector<Subset> subsL_plus_;   // w = prod hres * Delta^2 * E~(u)
    std::vector<Subset> subsL_minus_;  // w = prod hres * Delta^2
    std::vector<UniPoly> plus_polyz_;   // prod_{u in T} (z - u)
    std::vector<UniPoly> minus_zpoly_;  // P(z) * prod_{u in L\T}(z-u) * E~(z; T)

    UniPoly qrqc_poly_;
    Rat om00_d2_{0}, om00_R_{0}, om00_L_{0}, om00_plus_{0};
};

}  // namespace cuthex
