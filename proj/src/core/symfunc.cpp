#include "core/symfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cuthex {

Int h_ones(long r, long n) {
    if (r < 0) return Int(0);
    if (n == 0) return Int(r == 0 ? 1 : 0);
    return binomial(r + n - 1, n - 1);
}

Int macmahon_count(long a, long b, long c) {
    Rat acc(1);
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j)
            for (long k = 1; k <= c; ++k) acc *= rat(i + j + k - 1, i + j + k - 2);
    if (!is_int(acc)) throw std::logic_error("MacMahon product is not an integer");
    return acc.get_num();
}

Rat calP(long n, const Rat& z, const Rat& q) {
    Rat acc(1), qi(1);
    for (long i = 1; i <= n; ++i) {
        qi *= q;
        Rat den = 1 - qi;
        if (den == 0) throw std::domain_error("calP at a vanishing q-factor");
        acc *= (1 - z * qi) / den;
    }
    return acc;
}

Rat calP_at_qpow(long n, long x, const Rat& q) {
    if (q == 1) return pochhammer(rat(x + 1), n) * inv_factorial(n);
    return calP(n, rat_pow(q, x), q);
}

Rat calP_tilde(long n, long d, long y, const Rat& z, const Rat& q) {
    return rat_pow(q, -d * y) * calP(n, z * rat_pow(q, -y), q);
}

Rat h_q(long r, long d, long n, const Rat& q) {
    if (r < 0) return Rat(0);
    if (q == 1) return Rat(h_ones(r, n + 1));
    return rat_pow(q, r * d) * calP_at_qpow(n, r, q);
}

Rat phi_q(const Rat& w, long n, long N, const Rat& q) {
    Rat acc(0), wk(1);
    for (long k = 1; k <= n; ++k) {
        Rat prod(1);
        for (long r = n + 1; r <= N; ++r) prod *= (1 - rat_pow(q, r - k));
        acc += wk * prod;
        wk *= w;
    }
    return acc;
}

namespace {

Rat det_rat(std::vector<std::vector<Rat>> a) {
    size_t n = a.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            Rat f = a[row][col] / a[col][col];
            for (size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
        }
    }
    return det;
}

long part_at(const Partition& p, size_t i) { return i < p.size() ? p[i] : 0; }

}  // namespace

Int skew_schur_ones(const Partition& lambda, const Partition& mu, long N) {
    for (size_t i = 0; i < mu.size(); ++i)
        if (part_at(mu, i) > part_at(lambda, i)) throw std::domain_error("skew Schur: mu not inside lambda");
    size_t n = std::max(lambda.size(), mu.size());
    if (n == 0) return Int(1);
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            a[i][j] = Rat(h_ones(part_at(lambda, i) - (long)i + (long)j - part_at(mu, j), N));
    Rat d = det_rat(std::move(a));
    if (!is_int(d)) throw std::logic_error("skew Schur count is not an integer");
    return d.get_num();
}

Rat skew_schur_q_geom(const Partition& lambda, const Partition& mu, long N, const Rat& q) {
    for (size_t i = 0; i < mu.size(); ++i)
        if (part_at(mu, i) > part_at(lambda, i)) throw std::domain_error("skew Schur: mu not inside lambda");
    size_t n = std::max(lambda.size(), mu.size());
    if (n == 0) return Rat(1);
    // h_r(q^{1-N},...,q^0) = q^{r(1-N)} calP_{N-1}(q^r) 1_{r>=0}
    auto h = [&](long r) -> Rat {
        if (r < 0) return Rat(0);
        if (q == 1) return Rat(h_ones(r, N));
        return rat_pow(q, r * (1 - N)) * calP_at_qpow(N - 1, r, q);
    };
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            a[i][j] = h(part_at(lambda, i) - (long)i + (long)j - part_at(mu, j));
    return det_rat(std::move(a));
}

std::vector<Rat> power_sums(std::span<const long> pts, long amax) {
    std::vector<Rat> t(amax, Rat(0));
    for (long p : pts) {
        Rat pw(1);
        for (long a = 0; a < amax; ++a) {
            pw *= p;
            t[a] += pw;
        }
    }
    return t;
}

Rat e_monomial_eval(const Partition& mu, std::span<const Rat> xs) {
    // elementary symmetric values from the coefficient expansion of prod (t + x_i)
    long n = static_cast<long>(xs.size());
    std::vector<Rat> e(n + 1, Rat(0));
    e[0] = 1;
    for (long i = 0; i < n; ++i)
        for (long k = std::min<long>(i + 1, n); k >= 1; --k) e[k] += xs[i] * e[k - 1];
    Rat acc(1);
    for (long part : mu) {
        if (part > n) return Rat(0);
        acc *= e[part];
    }
    return acc;
}

Rat p_monomial_eval(const Partition& mu, std::span<const Rat> xs) {
    Rat acc(1);
    for (long part : mu) {
        Rat s(0);
        for (const Rat& x : xs) s += rat_pow(x, part);
        acc *= s;
    }
    return acc;
}

namespace {

void gen_partitions(long maxsum, long maxpart, Partition& cur, std::vector<Partition>& out) {
    out.push_back(cur);
    long start = cur.empty() ? maxpart : std::min(maxpart, cur.back());
    long used = 0;
    for (long p : cur) used += p;
    for (long p = start; p >= 1; --p) {
        if (used + p > maxsum) continue;
        cur.push_back(p);
        gen_partitions(maxsum, maxpart, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_up_to(long maxsum, long maxpart) {
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(maxsum, maxpart, cur, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        long sa = 0, sb = 0;
        for (long x : a) sa += x;
        for (long x : b) sb += x;
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
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
    Rat small_rat() {
        long num = static_cast<long>(next() % 41) - 20;
        return rat(num);
    }
};

}  // namespace

std::map<Partition, Rat> fit_symmetric_basis(const std::function<Rat(std::span<const Rat>)>& f,
                                             int nvars, long maxdeg, char basis) {
    std::vector<Partition> mus = partitions_up_to(maxdeg, basis == 'e' ? nvars : nvars);
    size_t k = mus.size();
    SampleGen gen(0x5eedu + static_cast<uint64_t>(basis));
    for (int attempt = 0; attempt < 4; ++attempt) {
        size_t rows = k + 6;
        std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(k + 1));
        for (size_t r = 0; r < rows; ++r) {
            std::vector<Rat> xs(nvars);
            for (auto& x : xs) x = gen.small_rat();
            for (size_t c = 0; c < k; ++c)
                A[r][c] = basis == 'e' ? e_monomial_eval(mus[c], xs) : p_monomial_eval(mus[c], xs);
            A[r][k] = f(xs);
        }
        // Gaussian elimination on the augmented system.
        size_t row = 0;
        std::vector<size_t> pivot_of_col(k, SIZE_MAX);
        for (size_t col = 0; col < k && row < rows; ++col) {
            size_t piv = row;
            while (piv < rows && A[piv][col] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(A[piv], A[row]);
            for (size_t rr = 0; rr < rows; ++rr) {
                if (rr == row || A[rr][col] == 0) continue;
                Rat fctr = A[rr][col] / A[row][col];
                for (size_t cc = col; cc <= k; ++cc) A[rr][cc] -= fctr * A[row][cc];
            }
            pivot_of_col[col] = row;
            ++row;
        }
        bool full_rank = true;
        for (size_t col = 0; col < k; ++col)
            if (pivot_of_col[col] == SIZE_MAX) full_rank = false;
        bool consistent = true;
        for (size_t rr = row; rr < rows; ++rr)
            if (A[rr][k] != 0) consistent = false;
        if (!full_rank || !consistent) continue;
        std::map<Partition, Rat> out;
        for (size_t col = 0; col < k; ++col) {
            Rat v = A[pivot_of_col[col]][k] / A[pivot_of_col[col]][col];
            if (v != 0) out[mus[col]] = v;
        }
        return out;
    }
    throw std::logic_error("fit_symmetric_basis: could not fit (rank or consistency failure)");
}

Rat SymPoly::eval(std::span<const Rat> xs) const {
    Rat acc(0);
    for (const auto& [mu, c] : e_coeffs) acc += c * e_monomial_eval(mu, xs);
    return acc;
}

std::map<Partition, Rat> SymPoly::to_power_basis() const {
    long deg = 0;
    for (const auto& [mu, c] : e_coeffs) {
        long s = 0;
        for (long p : mu) s += p;
        deg = std::max(deg, s);
    }
    auto self = *this;
    return fit_symmetric_basis([&](std::span<const Rat> xs) { return self.eval(xs); }, nvars, deg,
                               'p');
}

SymPoly SymPoly::from_power_basis(int nvars, const std::map<Partition, Rat>& p_coeffs) {
    long deg = 0;
    for (const auto& [mu, c] : p_coeffs) {
        long s = 0;
        for (long p : mu) s += p;
        deg = std::max(deg, s);
    }
    SymPoly out;
    out.nvars = nvars;
    out.e_coeffs = fit_symmetric_basis(
        [&](std::span<const Rat> xs) {
            Rat acc(0);
            for (const auto& [mu, c] : p_coeffs) acc += c * p_monomial_eval(mu, xs);
            return acc;
        },
        nvars, deg, 'e');
    return out;
}

std::string SymPoly::to_text() const {
    if (e_coeffs.empty()) return "0";
    // descending by (degree, partition) to put the leading term first
    std::vector<std::pair<Partition, Rat>> terms(e_coeffs.begin(), e_coeffs.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        long sa = 0, sb = 0;
        for (long x : a.first) sa += x;
        for (long x : b.first) sb += x;
        if (sa != sb) return sa > sb;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : terms) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        size_t i = 0;
        while (i < mu.size()) {
            size_t j = i;
            while (j < mu.size() && mu[j] == mu[i]) ++j;
            if (!mono.empty()) mono += "*";
            mono += "s" + std::to_string(mu[i]);
            if (j - i > 1) mono += "^" + std::to_string(j - i);
            i = j;
        }
        if (mono.empty()) {
            os << rat_to_string(a);
        } else if (a == 1) {
            os << mono;
        } else {
            os << rat_to_string(a) << "*" << mono;
        }
    }
    return os.str();
}

EgData compute_Eg(std::span<const long> y_cut, long N) {
    long d = static_cast<long>(y_cut.size());
    if (d == 0) {
        EgData out;
        out.poly = MultiPoly::constant(0, Rat(1));
        out.pbasis[{}] = 1;
        out.sym.nvars = 0;
        out.sym.e_coeffs[{}] = 1;
        return out;
    }
    for (long i = 0; i + 1 < d; ++i)
        if (y_cut[i] <= y_cut[i + 1]) throw std::domain_error("y_cut must be strictly decreasing");
    long y1 = y_cut[0], yd = y_cut[d - 1];
    if (N - 1 + yd - y1 < 0) throw std::domain_error("compute_Eg requires y1 - yd <= N - 1");
    long g = y1 - yd - d + 1;

    // Entry (a, b) = (x_a - y_b + 1)_{N-1} = P(x_a) * R_b(x_a) with
    // P(z) = (z - yd + 1)_{N - (y1 - yd + 1)}; the quotient roots are
    // {yd, ..., y_b - 1} (above P's root window) and {y_b - N + 1, ..., y1 - N}.
    std::vector<UniPoly> Rb(d);
    for (long b = 0; b < d; ++b) {
        std::vector<long> roots;
        for (long z = yd; z <= y_cut[b] - 1; ++z) roots.push_back(z);
        for (long z = y_cut[b] - N + 1; z <= y1 - N; ++z) roots.push_back(z);
        Rb[b] = UniPoly::from_roots(std::span<const long>(roots));
    }

    // det over permutations; d stays small (the configurable variable cap).
    const long kMaxVars = 6;
    if (d > kMaxVars) throw std::domain_error("compute_Eg: more than 6 cut points is not supported");
    MultiPoly det = MultiPoly::constant(d, Rat(0));
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    do {
        int inv = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (perm[i] > perm[j]) ++inv;
        MultiPoly term = MultiPoly::constant(d, Rat(inv % 2 ? -1 : 1));
        for (int a = 0; a < d; ++a) term = term * MultiPoly::from_unipoly(d, a, Rb[perm[a]]);
        det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    // The Vandermonde division is the falsifiable step of the construction.
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) det = det.divexact_diff(i, j);

    // det(R) = c1 * C'' * Delta(x) * E with c1 = prod_j (N-1)!/(N-j)! and
    // C'' = Delta(y) / prod_j (d-j)!.
    Rat c1(1);
    for (long j = 1; j <= d; ++j) c1 *= rat(factorial(N - 1), factorial(N - j));
    Rat dy(1);
    for (long i = 0; i < d; ++i)
        for (long j = i + 1; j < d; ++j) dy *= (y_cut[i] - y_cut[j]);
    Rat cpp = dy;
    for (long j = 1; j <= d; ++j) cpp /= Rat(factorial(d - j));
    EgData out;
    out.d = d;
    out.g = g;
    out.poly = det * (1 / (c1 * cpp));

    for (int i = 0; i < d; ++i)
        if (out.poly.degree_in(i) > g)
            throw std::logic_error("compute_Eg: per-variable degree exceeds the gap count");
    std::vector<long> lead(d, g);
    if (out.poly.coeff(lead) != 1)
        throw std::logic_error("compute_Eg: leading (x_1...x_d)^g coefficient is not 1");

    auto eval_poly = [&](std::span<const Rat> xs) { return out.poly.eval(xs); };
    out.pbasis = fit_symmetric_basis(eval_poly, d, d * g, 'p');
    out.sym.nvars = d;
    out.sym.e_coeffs = fit_symmetric_basis(eval_poly, d, d * g, 'e');
    return out;
}

Rat eval_complementary(const std::map<Partition, Rat>& pbasis, std::span<const Rat> tL,
                       std::span<const Rat> us) {
    Rat acc(0);
    for (const auto& [mu, c] : pbasis) {
        Rat term = c;
        for (long a : mu) {
            Rat arg = tL[a - 1];
            for (const Rat& u : us) arg -= rat_pow(u, a);
            term *= arg;
        }
        acc += term;
    }
    return acc;
}

UniPoly eval_complementary_z(const std::map<Partition, Rat>& pbasis, std::span<const Rat> tL,
                             std::span<const Rat> us) {
    UniPoly acc;
    for (const auto& [mu, c] : pbasis) {
        UniPoly term{Rat(c)};
        for (long a : mu) {
            Rat cst = tL[a - 1];
            for (const Rat& u : us) cst -= rat_pow(u, a);
            UniPoly arg = UniPoly::monomial(a) + UniPoly(cst);
            term *= arg;
        }
        acc += term;
    }
    return acc;
}

SymPoly complementary_transform(const SymPoly& S, std::span<const long> L_points, int ell) {
    int k = S.nvars;
    if (static_cast<int>(L_points.size()) != k + ell)
        throw std::domain_error("complementary_transform: |L| must equal k + ell");
    long deg = 0;
    for (const auto& [mu, c] : S.e_coeffs) {
        long s = 0;
        for (long p : mu) s += p;
        deg = std::max(deg, s);
    }
    std::map<Partition, Rat> pb =
        fit_symmetric_basis([&](std::span<const Rat> xs) { return S.eval(xs); }, k, deg, 'p');
    long amax = 0;
    for (const auto& [mu, c] : pb)
        if (!mu.empty()) amax = std::max(amax, mu[0]);
    std::vector<Rat> tL = [&] {
        std::vector<Rat> t;
        auto ps = power_sums(L_points, std::max<long>(amax, 1));
        return ps;
    }();
    SymPoly out;
    out.nvars = ell;
    out.e_coeffs = fit_symmetric_basis(
        [&](std::span<const Rat> xs) { return eval_complementary(pb, tL, xs); }, ell, deg, 'e');
    return out;
}

}  // namespace cuthex
