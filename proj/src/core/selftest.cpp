#include "core/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "core/kernel_q.hpp"
#include "core/kernel_red.hpp"
#include "core/lkernel.hpp"
#include "core/linalg.hpp"
#include "core/ratfun.hpp"
#include "core/render.hpp"
#include "core/sampler.hpp"
#include "core/tacnode.hpp"
#include "core/tiling.hpp"

namespace cuthex {

namespace {

PolygonSpec two_cut_small_spec() {
    PolygonSpec s;
    s.lower_cuts = {1};
    s.lower_gaps = {2, 2};
    s.upper_cuts = {1};
    s.upper_gaps = {2, 2};
    s.b0 = 2;
    s.bu = 2;
    s.d0 = 2;
    return s;
}

PolygonSpec multicut_g1_spec() {
    PolygonSpec s;
    s.lower_cuts = {1, 1};
    s.lower_gaps = {1, 1, 2};
    s.upper_cuts = {1};
    s.upper_gaps = {1, 3};
    s.b0 = 3;
    s.bu = 2;
    s.d0 = 1;
    return s;
}

// Asymmetric-cut polygon whose set L contains an upper-cut point, so the
// reduced form picks up v-residues at L inside Gamma(x + N).
PolygonSpec lbranch_spec() {
    PolygonSpec s;
    s.lower_cuts = {2};
    s.lower_gaps = {6, 1};
    s.upper_cuts = {1};
    s.upper_gaps = {1, 6};
    s.b0 = 2;
    s.bu = 3;
    s.d0 = 2;
    return s;
}

PolygonSpec two_cut_r0_spec() {  // |L| = d, r = 0
    PolygonSpec s;
    s.lower_cuts = {1};
    s.lower_gaps = {2, 2};
    s.upper_cuts = {1};
    s.upper_gaps = {2, 2};
    s.b0 = 1;
    s.bu = 2;
    s.d0 = 2;
    return s;
}

PolygonSpec simulation_scale_spec() {
    PolygonSpec s;
    s.lower_cuts = {20};
    s.lower_gaps = {100, 100};
    s.upper_cuts = {20};
    s.upper_gaps = {105, 95};
    s.b0 = 25;
    s.bu = 30;
    s.d0 = 30;
    return s;
}

struct SampleGen {
    uint64_t state;
    explicit SampleGen(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long pick(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

std::vector<std::vector<LatticePoint>> point_subsets(const std::vector<LatticePoint>& pts,
                                                     size_t k) {
    std::vector<std::vector<LatticePoint>> out;
    std::vector<size_t> idx(k);
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
        if (depth == k) {
            std::vector<LatticePoint> s;
            for (size_t i : idx) s.push_back(pts[i]);
            out.push_back(std::move(s));
            return;
        }
        for (size_t i = start; i < pts.size(); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

// 99% chi-square quantiles for df = 1..19.
const double kChi99[] = {6.635,  9.210,  11.345, 13.277, 15.086, 16.812, 18.475,
                         20.090, 21.666, 23.209, 24.725, 26.217, 27.688, 29.141,
                         30.578, 32.000, 33.409, 34.805, 36.191};

bool chi_square_ok(const std::vector<long>& counts, const std::vector<double>& probs,
                   std::string& detail) {
    long total = 0;
    for (long c : counts) total += c;
    // merge cells with expected count below 10 into one bucket
    std::vector<double> exp_counts;
    std::vector<long> obs;
    double small_e = 0;
    long small_o = 0;
    for (size_t i = 0; i < counts.size(); ++i) {
        double e = probs[i] * total;
        if (e < 10.0) {
            small_e += e;
            small_o += counts[i];
        } else {
            exp_counts.push_back(e);
            obs.push_back(counts[i]);
        }
    }
    if (small_e > 0) {
        exp_counts.push_back(small_e);
        obs.push_back(small_o);
    }
    if (exp_counts.size() < 2) {
        detail = "too few cells";
        return false;
    }
    double chi2 = 0;
    for (size_t i = 0; i < exp_counts.size(); ++i) {
        double d = obs[i] - exp_counts[i];
        chi2 += d * d / exp_counts[i];
    }
    size_t df = exp_counts.size() - 1;
    if (df > 19) df = 19;
    std::ostringstream os;
    os << "chi2 = " << chi2 << " (df " << df << ", 1% cutoff " << kChi99[df - 1] << ")";
    detail = os.str();
    return chi2 < kChi99[df - 1];
}

using Clock = std::chrono::steady_clock;

struct Runner {
    std::vector<CheckResult> results;
    std::ostream* live;

    void check(const std::string& name, const std::function<bool(std::string&)>& body) {
        CheckResult r;
        r.name = name;
        auto t0 = Clock::now();
        try {
            r.pass = body(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (live)
            (*live) << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.seconds << " s)"
                    << (r.detail.empty() ? "" : "  -- " + r.detail) << "\n"
                    << std::flush;
        results.push_back(std::move(r));
    }
};

}  // namespace

std::vector<CheckResult> run_acceptance(std::ostream* live) {
    Runner run;
    run.live = live;

    // 1. Counting against Jacobi-Trudi and MacMahon.
    run.check("counting: enumeration = skew Schur = MacMahon", [&](std::string& detail) {
        bool ok = true;
        for (auto [a, b, c] :
             {std::make_tuple(1L, 1L, 1L), std::make_tuple(2L, 2L, 2L), std::make_tuple(3L, 3L, 3L)}) {
            PolygonData P = build_polygon(hexagon_spec(a, b, c));
            Enumeration en(P);
            Int mc = macmahon_count(a, b, c);
            ok = ok && en.count() == mc && tiling_count(P) == mc;
        }
        PolygonData tc = build_polygon(two_cut_small_spec());
        Enumeration en(tc);
        ok = ok && en.count() == tiling_count(tc);
        detail = "(1,1,1)=2 (2,2,2)=20 (3,3,3)=" + macmahon_count(3, 3, 3).get_str();
        return ok && macmahon_count(1, 1, 1) == 2 && macmahon_count(2, 2, 2) == 20;
    });

    // 2. Determinantal law, uniform measure.
    run.check("determinantal law (uniform): det K_red = enumeration", [&](std::string& detail) {
        long checked = 0;
        for (const PolygonSpec& spec : {hexagon_spec(2, 2, 2), two_cut_small_spec()}) {
            PolygonData P = build_polygon(spec);
            Enumeration en(P);
            RedKernel K(P);
            auto pts = P.p_points();
            Mat km(pts.size(), std::vector<Rat>(pts.size()));
            for (size_t i = 0; i < pts.size(); ++i)
                for (size_t j = 0; j < pts.size(); ++j)
                    km[i][j] = K.eval(pts[i].n, pts[i].x, pts[j].n, pts[j].x, RedForm::r3);
            Measure uni = Measure::uniform();
            for (size_t k = 1; k <= 3; ++k)
                for (const auto& sub : point_subsets(pts, k)) {
                    Mat a(k, std::vector<Rat>(k));
                    std::vector<size_t> loc;
                    for (const auto& p : sub)
                        loc.push_back(std::find(pts.begin(), pts.end(), p) - pts.begin());
                    for (size_t i = 0; i < k; ++i)
                        for (size_t j = 0; j < k; ++j) a[i][j] = km[loc[i]][loc[j]];
                    if (mat_det(a) != en.red_correlation(uni, sub)) return false;
                    ++checked;
                }
        }
        detail = std::to_string(checked) + " point sets, exact";
        return true;
    });

    // 3. Form equivalence on all lattice point pairs.
    run.check("form equivalence: d2 = R = L = r3", [&](std::string& detail) {
        long checked = 0;
        for (const PolygonSpec& spec : {hexagon_spec(2, 2, 2), two_cut_small_spec(),
                                        multicut_g1_spec(), lbranch_spec()}) {
            PolygonData P = build_polygon(spec);
            RedKernel K(P);
            auto pts = P.p_points();
            for (const auto& p1 : pts)
                for (const auto& p2 : pts) {
                    Rat v = K.eval(p1.n, p1.x, p2.n, p2.x, RedForm::d2);
                    for (RedForm f : {RedForm::R, RedForm::L, RedForm::r3})
                        if (K.eval(p1.n, p1.x, p2.n, p2.x, f) != v) return false;
                    ++checked;
                }
        }
        detail = std::to_string(checked) + " point pairs x 4 forms, exact";
        return true;
    });

    // 4. Determinantal law for the q-measure.
    run.check("determinantal law (q): det K_q = q-enumeration", [&](std::string& detail) {
        PolygonData P = build_polygon(hexagon_spec(2, 2, 2));
        Enumeration en(P);
        auto pts = P.p_points();
        long checked = 0;
        for (const Rat& q : {rat(1, 2), rat(2, 3)}) {
            QKernel K(P, q);
            Measure mq = Measure::q_measure(q);
            Mat km(pts.size(), std::vector<Rat>(pts.size()));
            for (size_t i = 0; i < pts.size(); ++i)
                for (size_t j = 0; j < pts.size(); ++j)
                    km[i][j] = K.eval_matrix(pts[i].n, pts[i].x, pts[j].n, pts[j].x);
            for (size_t k = 1; k <= 2; ++k)
                for (const auto& sub : point_subsets(pts, k)) {
                    Mat a(k, std::vector<Rat>(k));
                    std::vector<size_t> loc;
                    for (const auto& p : sub)
                        loc.push_back(std::find(pts.begin(), pts.end(), p) - pts.begin());
                    for (size_t i = 0; i < k; ++i)
                        for (size_t j = 0; j < k; ++j) a[i][j] = km[loc[i]][loc[j]];
                    if (mat_det(a) != en.red_correlation(mq, sub)) return false;
                    ++checked;
                }
        }
        detail = std::to_string(checked) + " point sets at q = 1/2, 2/3, exact";
        return true;
    });

    // 5. Structure theorems.
    run.check("structure: H~ blocks, M~^{-1}, Karlin-McGregor", [&](std::string& detail) {
        for (const PolygonSpec& spec : {two_cut_small_spec(), hexagon_spec(2, 2, 2)}) {
            PolygonData P = build_polygon(spec);
            QKernel K(P, rat(1, 2));
            if (!K.htilde_block_shape_ok()) return false;
            Mat Mconv = K.M_from_closed_convolutions();
            Mat Mtilde = mat_mul(Mconv, mat_inverse(mat_transpose(K.T())));
            if (mat_mul(Mtilde, K.mtilde_inverse_closed()) != mat_identity(Mtilde.size()))
                return false;
            if (K.htilde_det_identity_lhs() != K.htilde_det_identity_rhs()) return false;
            Enumeration en(P);
            Measure mq = Measure::q_measure(rat(1, 2));
            for (const auto& t : en.tilings())
                if (K.kmcg_weight(t) != en.weight(t, mq)) return false;
        }
        detail = "block shape, closed inverse, det identity, KMcG = P_q on every tiling";
        return true;
    });

    // 6. Exact identity suite.
    run.check("identity suite: integral and determinant identities", [&](std::string& detail) {
        // Truncated-contour representation of h over the admissible grid, N <= 8.
        for (long N = 2; N <= 8; ++N) {
            std::vector<long> ylist;
            for (long v = N - 1; v >= 0; v -= 2) ylist.push_back(v);  // spread inside [0, N-1]
            long y1 = ylist.front(), yd = ylist.back();
            for (long yj : ylist)
                for (long n = 0; n <= N - 1; ++n)
                    for (long y = yd - N; y <= y1 + N; ++y) {
                        if (!(0 <= y1 - yj && y1 - yj <= N - 1)) continue;
                        Rat lhs(h_ones(y - yj, n));
                        RatFun f(UniPoly::pochhammer_poly(rat(-yj + 1), N - 1));
                        for (long i = 0; i <= N - n; ++i) f.mul_den_root(rat(y - i));
                        Rat rhs(0);
                        for (long p : gamma_y_points(y, n, y1, N)) rhs += f.residue_at(rat(p));
                        rhs *= rat(factorial(N - n), factorial(N - 1));
                        if (lhs != rhs) return false;
                    }
        }
        SampleGen gen(0xacce55);
        // Vandermonde quotient identity, 100 instances.
        for (int it = 0; it < 100; ++it) {
            long m = gen.pick(1, 3), n = gen.pick(1, 4);
            std::vector<long> xs, ys;
            std::map<long, bool> used;
            while (static_cast<long>(xs.size()) < m) {
                long v = gen.pick(-12, 12);
                if (!used[v]) used[v] = true, xs.push_back(v);
            }
            while (static_cast<long>(ys.size()) < n) {
                long v = gen.pick(-12, 12);
                if (!used[v]) used[v] = true, ys.push_back(v);
            }
            auto vdm = [](std::span<const long> v) {
                Rat p(1);
                for (size_t i = 0; i < v.size(); ++i)
                    for (size_t j = i + 1; j < v.size(); ++j) p *= (v[i] - v[j]);
                return p;
            };
            std::vector<long> both = xs;
            both.insert(both.end(), ys.begin(), ys.end());
            Rat lhs = vdm(ys) / vdm(both);
            Rat rhs = vdm(xs);
            for (long xl : xs) {
                Rat qp(1);
                for (long o : both)
                    if (o != xl) qp *= (xl - o);
                rhs /= qp;
            }
            if ((m * (m - 1) / 2) % 2) rhs = -rhs;
            if (lhs != rhs) return false;
        }
        // Removed-variable elementary symmetric function as a residue sum.
        for (int it = 0; it < 100; ++it) {
            long DN = gen.pick(4, 7), d = gen.pick(1, 2);
            std::vector<long> qs;
            std::map<long, bool> used;
            while (static_cast<long>(qs.size()) < DN) {
                long v = gen.pick(1, 18);
                if (!used[v]) used[v] = true, qs.push_back(v);
            }
            long N = DN - d;
            long r = gen.pick(1, N);
            long k = gen.pick(0, DN - 1);
            std::vector<long> removed = {k};
            while (static_cast<long>(removed.size()) < d + 1) {
                long i = gen.pick(0, DN - 1);
                if (std::find(removed.begin(), removed.end(), i) == removed.end())
                    removed.push_back(i);
            }
            std::vector<Rat> rest;
            for (long i = 0; i < DN; ++i)
                if (std::find(removed.begin(), removed.end(), i) == removed.end())
                    rest.push_back(rat(qs[i]));
            Partition mu = r > 1 ? Partition{r - 1} : Partition{};
            Rat lhs = (r % 2 == 0 ? Rat(-1) : Rat(1)) * e_monomial_eval(mu, rest);
            std::vector<Rat> qroots;
            for (long v : qs) qroots.push_back(rat(v));
            RatFun f(UniPoly::from_roots(std::span<const Rat>(qroots)));
            f.mul_den_root(Rat(0), static_cast<int>(N - r + 1));
            for (long i : removed) f.mul_den_root(rat(qs[i]));
            if (lhs != f.sum_residues_all_checked()) return false;
        }
        // Contour-split identity for l <= 3, 20 instances.
        for (int it = 0; it < 20; ++it) {
            long ell = gen.pick(1, 3);
            long npoles = gen.pick(2, 4);
            std::vector<long> poles;
            std::map<long, bool> used;
            while (static_cast<long>(poles.size()) < npoles) {
                long v = gen.pick(-8, 8);
                if (!used[v]) used[v] = true, poles.push_back(v);
            }
            long z = 0;
            do {
                z = gen.pick(-10, 10);
            } while (used[z]);
            std::vector<Rat> numc(3);
            for (auto& c : numc) c = rat(gen.pick(-5, 5));
            UniPoly num(numc);
            if (num.is_zero()) num = UniPoly::one();
            SymPoly S;
            S.nvars = static_cast<int>(ell);
            for (const Partition& mu :
                 std::vector<Partition>{{}, {1}, {2}, {1, 1}})
                if (mu.empty() || mu[0] <= ell) S.e_coeffs[mu] = rat(gen.pick(-4, 4));
            auto res_weight = [&](long p, int mode) {
                // mode 0: R(u)/(u-z); mode 1: R(u)(u-z)
                Rat w = num.eval(rat(p));
                for (long o : poles)
                    if (o != p) w /= rat(p - o);
                if (mode == 0) w /= rat(p - z);
                else w *= rat(p - z);
                return w;
            };
            Rat Rz = num.eval(rat(z));
            for (long o : poles) Rz /= rat(z - o);
            auto tuple_sum = [&](bool include_z, long arity) {
                std::vector<long> choice(arity, 0);
                std::vector<long> opts = poles;
                if (include_z) opts.push_back(z);
                Rat acc(0);
                std::function<void(long)> rec = [&](long i) {
                    if (i == arity) {
                        Rat w(1);
                        std::vector<Rat> vals;
                        for (long c : choice) {
                            if (c == z && include_z)
                                w *= Rz;
                            else
                                w *= res_weight(c, 0);
                            vals.push_back(rat(c));
                        }
                        Rat vdm(1);
                        for (size_t a = 0; a < vals.size(); ++a)
                            for (size_t b = a + 1; b < vals.size(); ++b)
                                vdm *= (vals[a] - vals[b]);
                        acc += w * vdm * vdm * S.eval(vals);
                        return;
                    }
                    for (long c : opts) {
                        choice[i] = c;
                        rec(i + 1);
                    }
                };
                rec(0);
                return acc;
            };
            Rat lhs = tuple_sum(true, ell) - tuple_sum(false, ell);
            // RHS: l R(z) (prod over Gamma of R(u)(u-z)) Delta^2 S(z, u...)
            Rat rhs(0);
            {
                std::vector<long> choice(ell - 1, 0);
                std::function<void(long)> rec = [&](long i) {
                    if (i == ell - 1) {
                        Rat w(1);
                        std::vector<Rat> vals;
                        vals.push_back(rat(z));
                        for (long c : choice) {
                            w *= res_weight(c, 1);
                            vals.push_back(rat(c));
                        }
                        Rat vdm(1);
                        for (size_t a = 1; a < vals.size(); ++a)
                            for (size_t b = a + 1; b < vals.size(); ++b)
                                vdm *= (vals[a] - vals[b]);
                        rhs += w * vdm * vdm * S.eval(vals);
                        return;
                    }
                    for (long c : poles) {
                        choice[i] = c;
                        rec(i + 1);
                    }
                };
                rec(0);
                rhs *= Rat(ell) * Rz;
            }
            if (lhs != rhs) return false;
        }
        // |L| = d specialization: Omega_L(v,z)/Omega_L(0,0) = Q_L(v)/Q_L(z).
        {
            PolygonData P = build_polygon(two_cut_r0_spec());
            if (static_cast<long>(P.L.size()) != P.d) return false;
            RedKernel K(P);
            for (int it = 0; it < 5; ++it) {
                Rat v = rat(gen.pick(30, 60), 7), z = rat(gen.pick(61, 99), 7);
                Rat lhs = K.omega_L(v, z) / K.omega_L00();
                Rat ql_v(1), ql_z(1);
                for (long u : P.L) {
                    ql_v *= (v - u);
                    ql_z *= (z - u);
                }
                if (lhs != ql_v / ql_z) return false;
            }
            // Omega_L(0,0) = (-1)^d Omega_R(0,0)
            Rat sgn = P.d % 2 ? Rat(-1) : Rat(1);
            if (K.omega_L00() != sgn * K.omega_R00()) return false;
        }
        // The two reference gap polynomials.
        {
            std::vector<long> y1 = {6, 5, 4, 2};
            EgData e1 = compute_Eg(y1, 8);
            if (e1.sym.to_text() != "s4 - s3 - s2 + 11*s1 - 49") return false;
            std::vector<long> y2 = {7, 6, 5, 3, 2};
            EgData e2 = compute_Eg(y2, 8);
            if (e2.sym.to_text() != "s5 - 4/5*s4 - 4/5*s3 + 4*s2 + 4*s1 - 604/5") return false;
        }
        detail = "h-integral grids (N <= 8), 100x Vandermonde quotient, 100x removed-variable residue, 20x contour split, |L| = d ratio, gap polynomials";
        return true;
    });

    // 7. q -> 1 convergence of the conjugated q-kernel.
    run.check("q->1: conjugated K_q approaches K_red", [&](std::string& detail) {
        PolygonData P = build_polygon(two_cut_small_spec());
        RedKernel red(P);
        auto pts = P.p_points();
        std::vector<std::pair<LatticePoint, LatticePoint>> pairs;
        for (size_t i = 0; i + 1 < pts.size() && pairs.size() < 10; i += 2)
            pairs.push_back({pts[i], pts[i + 1]});
        std::vector<Rat> eps = {rat(1, 8), rat(1, 16), rat(1, 32)};
        QtoOneReport rep = q_to_one_probe(P, red, pairs, eps);
        if (!rep.monotone) {
            detail = "differences not monotone";
            return false;
        }
        Rat bound = 10 * eps.back();
        for (const Rat& dd : rep.abs_diff.back())
            if (dd >= bound) {
                detail = "final error " + rat_to_string(dd) + " >= 10 eps";
                return false;
            }
        detail = "monotone over eps = 1/8, 1/16, 1/32; final error < 10 eps at 10 pairs";
        return true;
    });

    // 8. Blue-kernel shift relation against blue-dot enumeration.
    run.check("blue kernel: det L_blue = blue enumeration", [&](std::string& detail) {
        PolygonData P = build_polygon(two_cut_small_spec());
        Enumeration en(P);
        BlueKernel L(P);
        Measure uni = Measure::uniform();
        auto sites = en.blue_support();
        long checked = 0;
        for (size_t i = 0; i < sites.size(); ++i) {
            std::vector<BluePoint> s1 = {sites[i]};
            if (L.correlation(s1) != en.blue_correlation(uni, s1)) return false;
            ++checked;
            for (size_t j = i + 1; j < sites.size(); ++j) {
                std::vector<BluePoint> s2 = {sites[i], sites[j]};
                if (L.correlation(s2) != en.blue_correlation(uni, s2)) return false;
                ++checked;
            }
        }
        detail = std::to_string(checked) + " blue point sets, exact";
        return true;
    });

    // 9. Tacnode kernel: involution, supports, quadrature stability.
    run.check("tacnode: involution, supports, halving stability", [&](std::string& detail) {
        const long taus[5] = {-1, 0, 1, 2, 3};
        const double thetas[5] = {-0.9, -0.4, 0.3, 0.8, 1.3};
        for (auto [r, rho, beta] :
             {std::make_tuple(0, 0, 0.0), std::make_tuple(1, 2, 0.0), std::make_tuple(1, 2, 1.0)}) {
            TacnodeKernel K({r, rho, beta});
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) {
                    double res = K.involution_residual(taus[i], thetas[i], taus[j], thetas[j]);
                    if (!(res < 1e-8)) {
                        detail = "involution residual " + std::to_string(res);
                        return false;
                    }
                    auto terms = K.eval_terms(taus[i], thetas[i], taus[j], thetas[j]);
                    if (taus[i] <= rho && std::abs(terms[1]) > 1e-10) return false;
                    if (taus[j] >= 0 && std::abs(terms[2]) > 1e-10) return false;
                    if (!(taus[i] > rho && taus[j] < 0) && std::abs(terms[4]) > 1e-10)
                        return false;
                }
            // halving stability at reference points
            QuadConfig half;
            half.h = half.h / 2;
            TacnodeKernel Kh({r, rho, beta}, half);
            for (auto [t1, h1, t2, h2] :
                 {std::make_tuple(0L, 0.2, 1L, -0.3), std::make_tuple(long(rho) + 1, 0.5, -1L, 0.1)}) {
                double a = K.eval(t1, h1, t2, h2), b = Kh.eval(t1, h1, t2, h2);
                if (!(std::abs(a - b) < 1e-10)) {
                    detail = "halving drift " + std::to_string(std::abs(a - b));
                    return false;
                }
            }
        }
        detail = "3 parameter sets, 25-point grids, supports < 1e-10, halving < 1e-10";
        return true;
    });

    // 10. Sampler: goodness of fit, strip invariant, large simulation.
    run.check("sampler: chi-square, strip counts, large run renders", [&](std::string& detail) {
        PolygonData hex = build_polygon(hexagon_spec(2, 2, 2));
        Enumeration en(hex);
        std::map<std::vector<std::vector<long>>, size_t> index;
        for (size_t i = 0; i < en.tilings().size(); ++i) index[en.tilings()[i].levels] = i;
        std::string chidetail;
        for (const Measure& m : {Measure::uniform(), Measure::q_measure(rat(1, 2))}) {
            Chain chain(hex, m, 20260314);
            chain.run(4000);  // burn-in
            std::vector<long> counts(en.tilings().size(), 0);
            const long samples = 40000, thin = 30;
            for (long s = 0; s < samples; ++s) {
                chain.run(thin);
                ++counts[index.at(chain.current().levels)];
            }
            std::vector<double> probs;
            for (const auto& t : en.tilings()) probs.push_back(rat_to_double(en.weight(t, m)));
            std::string cd;
            if (!chi_square_ok(counts, probs, cd)) {
                detail = cd;
                return false;
            }
            chidetail += (chidetail.empty() ? "" : "; ") + cd;
        }
        // strip invariant on sampled two-cut tilings
        PolygonData tc = build_polygon(two_cut_small_spec());
        {
            Chain chain(tc, Measure::uniform(), 7);
            for (int s = 0; s < 200; ++s) {
                chain.run(50);
                const Tiling& t = chain.current();
                auto dots = blue_dots(tc, t);
                long m1 = tc.spec.lower_gaps[0];
                for (long eta = m1; eta <= m1 + tc.rho; ++eta) {
                    long cnt = 0;
                    for (const auto& b : dots)
                        if (b.eta == eta) ++cnt;
                    if (cnt != tc.r) return false;
                }
            }
        }
        // the large simulation completes, keeps the strip invariant, renders
        PolygonData big_poly = build_polygon(simulation_scale_spec());
        Tiling big = Chain::sample(big_poly, Measure::uniform(), Chain::default_steps(big_poly), 1);
        if (!tiling_valid(big_poly, big)) return false;
        if (big == minimal_tiling(big_poly)) return false;  // the chain must have moved
        {
            auto dots = blue_dots(big_poly, big);
            long m1 = big_poly.spec.lower_gaps[0];
            for (long eta = m1; eta <= m1 + big_poly.rho; ++eta) {
                long cnt = 0;
                for (const auto& b : dots)
                    if (b.eta == eta) ++cnt;
                if (cnt != big_poly.r) return false;
            }
        }
        std::string svg = render_svg(big_poly, big);
        if (svg.size() < 10000) return false;
        detail = chidetail + "; strip count = r on 200 samples; simulation-scale run rendered";
        return true;
    });

    return run.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace cuthex
