#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "core/multipoly.hpp"
#include "core/rational.hpp"
#include "core/unipoly.hpp"

namespace cuthex {

using Partition = std::vector<long>;  // weakly decreasing, positive parts

// Complete homogeneous h_r(1^n): binom(r+n-1, n-1) for r >= 0, else 0.
Int h_ones(long r, long n);

// Product formula for boxed plane partitions / lozenge tilings of the a,b,c hexagon.
Int macmahon_count(long a, long b, long c);

// calP_n(z) = prod_{i=1}^n (1 - z q^i)/(1 - q^i), exact for rational q not a
// root of unity in the range of the product (0 < q < 1 in all uses).
Rat calP(long n, const Rat& z, const Rat& q);
// calP_n(q^x); at q = 1 dispatches to the limit (x+1)_n / n!.
Rat calP_at_qpow(long n, long x, const Rat& q);
// calP~_n^y(z) = q^{-dy} calP_n(z q^{-y}); at q = 1 (z = q^u) the limit (u-y+1)_n/n!.
Rat calP_tilde(long n, long d, long y, const Rat& z, const Rat& q);

// h_r(q^d, ..., q^{d+n}) = q^{rd} calP_n(q^r) 1_{r>=0}; q = 1 gives h_r(1^{n+1}).
Rat h_q(long r, long d, long n, const Rat& q);

// Finite q-hypergeometric sum: Phi(w) = sum_{k=1}^n w^{k-1} prod_{r=n+1}^N (1 - q^{r-k}).
Rat phi_q(const Rat& w, long n, long N, const Rat& q);

// Jacobi-Trudi determinant det(h_{lambda_i - i - mu_j + j}(x)) for x = (1^N).
Int skew_schur_ones(const Partition& lambda, const Partition& mu, long N);
// Same determinant at x = (q^{1-N}, ..., q^{-1}, q^0).
Rat skew_schur_q_geom(const Partition& lambda, const Partition& mu, long N, const Rat& q);

// Power sums t_alpha = sum p^alpha for alpha = 1..amax.
std::vector<Rat> power_sums(std::span<const long> pts, long amax);

// Symmetric polynomial carried in the elementary basis (s_k = e_k of its
// variables). Partitions key products e_{mu_1} e_{mu_2} ...; the empty
// partition keys the constant term.
struct SymPoly {
    int nvars = 0;
    std::map<Partition, Rat> e_coeffs;

    Rat eval(std::span<const Rat> xs) const;
    std::map<Partition, Rat> to_power_basis() const;
    static SymPoly from_power_basis(int nvars, const std::map<Partition, Rat>& p_coeffs);
    std::string to_text() const;  // canonical "s4 - s3 + 11*s1 - 49" form
};

// Elementary/power-sum monomial evaluation helpers.
Rat e_monomial_eval(const Partition& mu, std::span<const Rat> xs);
Rat p_monomial_eval(const Partition& mu, std::span<const Rat> xs);

// Fits f (a symmetric polynomial of total degree <= maxdeg in nvars variables)
// in the 'e' or 'p' monomial basis by exact evaluation and linear solve.
std::map<Partition, Rat> fit_symmetric_basis(const std::function<Rat(std::span<const Rat>)>& f,
                                             int nvars, long maxdeg, char basis);

// The gap polynomial E_g^{(y_cut)} of a strictly decreasing integer list
// y_1 > ... > y_d with g = y_1 - y_d - d + 1, normalized so that the top
// monomial (x_1 ... x_d)^g has coefficient 1. The construction divides the
// Pochhammer determinant exactly; a failed division throws std::domain_error.
struct EgData {
    long d = 0, g = 0;
    MultiPoly poly;                    // d variables
    std::map<Partition, Rat> pbasis;   // power-sum coordinates, parts <= d
    SymPoly sym;                       // elementary-basis view
    Rat eval(std::span<const Rat> xs) const { return poly.eval(xs); }
};
EgData compute_Eg(std::span<const long> y_cut, long N);

// Complementary substitution t_alpha -> t_alpha(L) - sum x'^alpha applied to a
// power-sum representation. `tL` holds t_1(L)..t_amax(L).
Rat eval_complementary(const std::map<Partition, Rat>& pbasis, std::span<const Rat> tL,
                       std::span<const Rat> us);
// Variant with one symbolic argument z (returns a polynomial in z).
UniPoly eval_complementary_z(const std::map<Partition, Rat>& pbasis, std::span<const Rat> tL,
                             std::span<const Rat> us);

// Public transform: S in k variables, |L_points| = k + ell, result in ell
// variables with S(x) = S~(x') for every split of L_points.
SymPoly complementary_transform(const SymPoly& S, std::span<const long> L_points, int ell);

}  // namespace cuthex
