#include "core/tiling.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cuthex {

bool tiling_valid(const PolygonData& P, const Tiling& t) {
    if (static_cast<long>(t.levels.size()) != P.N + 1) return false;
    if (t.levels[0] != P.ycut) return false;
    if (t.levels[P.N] != P.xs) return false;
    for (long k = 0; k <= P.N; ++k) {
        const auto& lv = t.levels[k];
        if (static_cast<long>(lv.size()) != P.d + k) return false;
        for (size_t i = 0; i + 1 < lv.size(); ++i)
            if (lv[i] <= lv[i + 1]) return false;
        if (!lv.empty() && (lv.back() < P.level_min(k) || lv.front() > P.level_max())) return false;
    }
    for (long k = 1; k <= P.N; ++k) {
        const auto& lo = t.levels[k - 1];
        const auto& hi = t.levels[k];
        for (size_t i = 0; i < lo.size(); ++i) {
            if (!(lo[i] <= hi[i])) return false;
            if (!(hi[i + 1] < lo[i])) return false;
        }
    }
    return true;
}

Tiling minimal_tiling(const PolygonData& P) {
    Tiling t;
    t.levels.assign(P.N + 1, {});
    t.levels[P.N] = P.xs;
    for (long k = P.N - 1; k >= 0; --k) {
        const auto& up = t.levels[k + 1];
        std::vector<long> lv(P.d + k);
        for (long i = 0; i < P.d + k; ++i) {
            long v = up[i + 1] + 1;
            if (i < P.d) v = std::max(v, P.ycut[i]);
            lv[i] = v;
        }
        t.levels[k] = std::move(lv);
    }
    if (!tiling_valid(P, t))
        throw std::logic_error("minimal tiling construction failed (inconsistent polygon data)");
    return t;
}

Partition lambda_of(const PolygonData& P) {
    Partition lam;
    for (size_t i = 0; i < P.xs.size(); ++i) lam.push_back(P.xs[i] + static_cast<long>(i) + 1);
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    return lam;
}

Partition mu_of(const PolygonData& P) {
    Partition mu;
    for (size_t i = 0; i < P.y.size(); ++i) mu.push_back(P.y[i] + static_cast<long>(i) + 1);
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    return mu;
}

Int tiling_count(const PolygonData& P) { return skew_schur_ones(lambda_of(P), mu_of(P), P.N); }

long tiling_volume(const Tiling& t) {
    long s = 0;
    for (size_t k = 1; k + 1 < t.levels.size(); ++k)
        for (long v : t.levels[k]) s += v;
    return s;
}

namespace {

std::vector<long> holes_at_level(const PolygonData& P, const Tiling& t, long k) {
    std::vector<long> holes;
    const auto& lv = t.levels[k];
    size_t idx = 0;
    for (long x = P.level_max(); x >= P.level_min(k); --x) {
        if (idx < lv.size() && lv[idx] == x) {
            ++idx;
        } else {
            holes.push_back(x);
        }
    }
    return holes;
}

}  // namespace

std::vector<BluePoint> blue_dots(const PolygonData& P, const Tiling& t) {
    std::vector<BluePoint> dots;
    std::vector<long> cur = holes_at_level(P, t, 0);
    for (long k = 0; k + 1 <= P.N; ++k) {
        std::vector<long> nxt = holes_at_level(P, t, k + 1);
        if (cur.size() != nxt.size() || cur.size() != static_cast<size_t>(P.sum_m))
            throw std::logic_error("hole count mismatch (invalid tiling)");
        for (size_t i = 0; i < cur.size(); ++i) {
            long step = nxt[i] - cur[i];
            if (step != 0 && step != -1)
                throw std::logic_error("hole trajectory took an illegal step");
            if (step == 0) dots.push_back({k + cur[i] + 1, k - cur[i]});
        }
        cur = std::move(nxt);
    }
    std::sort(dots.begin(), dots.end());
    return dots;
}

long expected_blue_count_two_cut(const PolygonData& P, long eta) {
    if (!P.two_cut) throw std::logic_error("expected_blue_count_two_cut needs the two-cut model");
    long m1 = P.spec.lower_gaps[0];
    long b = P.b, d = P.d, r = P.r, rho = P.rho;
    long n1 = P.spec.upper_gaps[0], n2 = P.spec.upper_gaps[1];
    // ramp 0 -> b on [-d, b-d], b on [b-d, m1-d], down to r at m1, r across the
    // strip, back up to b at n1+b, b until n1+n2, down to 0 at n1+n2+b.
    if (eta <= -d || eta >= n1 + n2 + b) return 0;
    if (eta <= b - d) return eta + d;
    if (eta <= m1 - d) return b;
    if (eta <= m1) return b - (eta - (m1 - d));
    if (eta <= m1 + rho) return r;
    if (eta <= n1 + b) return r + (eta - (m1 + rho));
    if (eta <= n1 + n2) return b;
    return n1 + n2 + b - eta;
}

SkewTableau to_skew_tableau(const PolygonData& P, const Tiling& t) {
    SkewTableau tab;
    tab.lambda = lambda_of(P);
    tab.mu = mu_of(P);
    size_t rows = tab.lambda.size();
    tab.rows.resize(rows);
    auto nu = [&](long k, size_t i) -> long {
        const auto& lv = t.levels[k];
        if (i >= lv.size()) return 0;
        return lv[i] + static_cast<long>(i) + 1;
    };
    for (size_t i = 0; i < rows; ++i) {
        long mu_i = i < tab.mu.size() ? tab.mu[i] : 0;
        for (long j = mu_i + 1; j <= tab.lambda[i]; ++j) {
            long k = 1;
            while (k <= P.N && nu(k, i) < j) ++k;
            tab.rows[i].push_back(k);
        }
    }
    return tab;
}

Tiling from_skew_tableau(const PolygonData& P, const SkewTableau& tab) {
    Tiling t;
    t.levels.assign(P.N + 1, {});
    for (long k = 0; k <= P.N; ++k) {
        std::vector<long> lv(P.d + k);
        for (long i = 0; i < P.d + k; ++i) {
            long mu_i = i < static_cast<long>(tab.mu.size()) ? tab.mu[i] : 0;
            long cnt = 0;
            if (i < static_cast<long>(tab.rows.size()))
                for (long e : tab.rows[i])
                    if (e <= k) ++cnt;
            lv[i] = mu_i + cnt - i - 1;
        }
        t.levels[k] = std::move(lv);
    }
    if (!tiling_valid(P, t)) throw std::domain_error("tableau does not encode a valid tiling");
    return t;
}

Enumeration::Enumeration(const PolygonData& P, size_t cap) : P_(&P) {
    Tiling t;
    t.levels.assign(P.N + 1, {});
    t.levels[0] = P.ycut;
    // DFS over levels; position i at level k must stay <= xs[i] and reach the
    // top list, which bounds it below by xs[i + N - k] + (N - k).
    std::vector<long> cur = P.ycut;
    std::vector<long> nxt;
    std::function<void(long)> extend_level = [&](long k) {
        if (k == P.N) {
            tilings_.push_back(t);
            if (tilings_.size() > cap) throw std::runtime_error("enumeration cap exceeded");
            return;
        }
        const auto& lo = t.levels[k];
        long size = P.d + k + 1;
        std::vector<long> pick(size);
        std::function<void(long)> choose = [&](long i) {
            if (i == size) {
                t.levels[k + 1] = pick;
                extend_level(k + 1);
                return;
            }
            long hi = (i == 0) ? P.xs[0] : std::min(lo[i - 1] - 1, P.xs[i]);
            long lo_bound;
            if (i < static_cast<long>(lo.size()))
                lo_bound = lo[i];
            else
                lo_bound = P.xs[i + (P.N - k - 1)] + (P.N - k - 1);
            lo_bound = std::max(lo_bound, P.xs[i + (P.N - k - 1)] + (P.N - k - 1));
            for (long v = lo_bound; v <= hi; ++v) {
                pick[i] = v;
                choose(i + 1);
            }
        };
        choose(0);
    };
    extend_level(0);
    std::sort(tilings_.begin(), tilings_.end(),
              [](const Tiling& a, const Tiling& b) { return a.levels < b.levels; });
}

Rat Enumeration::q_partition(const Rat& q) const {
    Rat z(0);
    for (const auto& t : tilings_) z += rat_pow(q, -tiling_volume(t));
    return z;
}

Rat Enumeration::weight(const Tiling& t, const Measure& m) const {
    if (m.kind == Measure::Kind::Uniform)
        return rat(Int(1), Int(static_cast<unsigned long>(tilings_.size())));
    return rat_pow(m.q, -tiling_volume(t)) / q_partition(m.q);
}

Rat Enumeration::red_correlation(const Measure& m, std::span<const LatticePoint> pts) const {
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw std::domain_error("red correlation: repeated point");
    Rat z(0), acc(0);
    for (const auto& t : tilings_) {
        Rat w = (m.kind == Measure::Kind::Uniform) ? Rat(1) : rat_pow(m.q, -tiling_volume(t));
        z += w;
        bool all = true;
        for (const auto& p : pts) {
            if (p.n < 0 || p.n > P_->N) {
                all = false;
                break;
            }
            const auto& lv = t.levels[p.n];
            if (!std::binary_search(lv.rbegin(), lv.rend(), p.x)) {
                all = false;
                break;
            }
        }
        if (all) acc += w;
    }
    return acc / z;
}

Rat Enumeration::blue_correlation(const Measure& m, std::span<const BluePoint> pts) const {
    for (const auto& p : pts)
        if (((p.eta + p.xi) % 2 + 2) % 2 != 1)
            throw std::domain_error("blue correlation: eta + xi must be odd");
    Rat z(0), acc(0);
    for (const auto& t : tilings_) {
        Rat w = (m.kind == Measure::Kind::Uniform) ? Rat(1) : rat_pow(m.q, -tiling_volume(t));
        z += w;
        auto dots = blue_dots(*P_, t);
        bool all = true;
        for (const auto& p : pts)
            if (!std::binary_search(dots.begin(), dots.end(), p)) {
                all = false;
                break;
            }
        if (all) acc += w;
    }
    return acc / z;
}

std::vector<BluePoint> Enumeration::blue_support() const {
    std::set<BluePoint> s;
    for (const auto& t : tilings_) {
        auto dots = blue_dots(*P_, t);
        s.insert(dots.begin(), dots.end());
    }
    return {s.begin(), s.end()};
}

std::string tiling_to_csv(const Tiling& t) {
    std::ostringstream os;
    for (size_t k = 0; k < t.levels.size(); ++k) {
        os << k;
        for (long v : t.levels[k]) os << "," << v;
        os << "\n";
    }
    return os.str();
}

Tiling tiling_from_csv(const PolygonData& P, const std::string& csv) {
    Tiling t;
    t.levels.assign(P.N + 1, {});
    std::istringstream is(csv);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        std::vector<long> vals;
        while (std::getline(ls, tok, ',')) vals.push_back(std::stol(tok));
        if (vals.empty()) continue;
        long k = vals[0];
        if (k < 0 || k > P.N) throw std::domain_error("tiling CSV: level out of range");
        t.levels[k].assign(vals.begin() + 1, vals.end());
    }
    if (!tiling_valid(P, t)) throw std::domain_error("tiling CSV does not satisfy interlacing");
    return t;
}

}  // namespace cuthex
