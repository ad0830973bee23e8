#include "cuthex.h"

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>

#include "core/kernel_q.hpp"
#include "core/kernel_red.hpp"
#include "core/lkernel.hpp"
#include "core/render.hpp"
#include "core/sampler.hpp"
#include "core/selftest.hpp"
#include "core/tacnode.hpp"
#include "core/tiling.hpp"

using namespace cuthex;

struct cuthex_polygon {
    PolygonData data;
    std::mutex lock;
    std::unique_ptr<RedKernel> red;
    std::map<std::string, std::unique_ptr<QKernel>> qkernels;
    std::unique_ptr<BlueKernel> blue;

    const RedKernel& red_kernel() {
        std::scoped_lock g(lock);
        if (!red) red = std::make_unique<RedKernel>(data);
        return *red;
    }
    const BlueKernel& blue_kernel() {
        std::scoped_lock g(lock);
        if (!blue) blue = std::make_unique<BlueKernel>(data);
        return *blue;
    }
    const QKernel& q_kernel(const Rat& q) {
        std::scoped_lock g(lock);
        std::string key = rat_to_string(q);
        auto it = qkernels.find(key);
        if (it == qkernels.end())
            it = qkernels.emplace(key, std::make_unique<QKernel>(data, q)).first;
        return *it->second;
    }
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
char* wrap_string(F&& f) {
    try {
        return dup_string(f());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

std::vector<std::pair<long, long>> parse_point_pairs(const char* csv) {
    std::vector<std::pair<long, long>> pts;
    if (!csv) return pts;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ';')) {
        if (tok.empty()) continue;
        auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("point must be 'a:b', got: " + tok);
        pts.push_back({std::stol(tok.substr(0, colon)), std::stol(tok.substr(colon + 1))});
    }
    return pts;
}

Measure measure_of(const char* q_or_null) {
    if (!q_or_null || !*q_or_null) return Measure::uniform();
    Rat q = parse_rat(q_or_null);
    if (q == 1) return Measure::uniform();
    return Measure::q_measure(q);
}

}  // namespace

extern "C" {

const char* cuthex_version(void) { return "cuthex 1.0.0"; }

const char* cuthex_last_error(void) { return g_last_error.c_str(); }

void cuthex_free(char* s) { std::free(s); }

cuthex_polygon* cuthex_polygon_parse(const char* spec_json) {
    try {
        if (!spec_json) throw SpecError("null specification");
        auto* p = new cuthex_polygon();
        try {
            p->data = build_polygon(spec_from_json(spec_json));
        } catch (...) {
            delete p;
            throw;
        }
        return p;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

void cuthex_polygon_free(cuthex_polygon* p) { delete p; }

char* cuthex_polygon_describe(const cuthex_polygon* p) {
    return wrap_string([&] { return describe(p->data); });
}

char* cuthex_count_tilings(const cuthex_polygon* p) {
    return wrap_string([&] { return tiling_count(p->data).get_str(); });
}

char* cuthex_enumerate_csv(const cuthex_polygon* p, long cap) {
    return wrap_string([&] {
        Enumeration en(p->data, cap > 0 ? static_cast<size_t>(cap) : 5'000'000);
        std::ostringstream os;
        for (size_t i = 0; i < en.tilings().size(); ++i)
            for (size_t k = 0; k < en.tilings()[i].levels.size(); ++k) {
                os << i << "," << k;
                for (long v : en.tilings()[i].levels[k]) os << "," << v;
                os << "\n";
            }
        return os.str();
    });
}

char* cuthex_red_correlation(const cuthex_polygon* p, const char* points_csv,
                             const char* q_or_null) {
    return wrap_string([&] {
        std::vector<LatticePoint> pts;
        for (auto [a, b] : parse_point_pairs(points_csv)) pts.push_back({a, b});
        Enumeration en(p->data);
        return rat_to_string(en.red_correlation(measure_of(q_or_null), pts));
    });
}

char* cuthex_blue_correlation(const cuthex_polygon* p, const char* points_csv,
                              const char* q_or_null) {
    return wrap_string([&] {
        std::vector<BluePoint> pts;
        for (auto [a, b] : parse_point_pairs(points_csv)) pts.push_back({a, b});
        Enumeration en(p->data);
        return rat_to_string(en.blue_correlation(measure_of(q_or_null), pts));
    });
}

char* cuthex_kernel_red(const cuthex_polygon* p, const char* form, long m, long x, long n,
                        long y) {
    return wrap_string([&] {
        RedForm f = red_form_from_string(form ? form : "r3");
        auto* self = const_cast<cuthex_polygon*>(p);
        return rat_to_string(self->red_kernel().eval(m, x, n, y, f));
    });
}

char* cuthex_kernel_q(const cuthex_polygon* p, const char* q, const char* route, long m, long x,
                      long n, long y) {
    return wrap_string([&] {
        if (!q) throw std::invalid_argument("missing q");
        auto* self = const_cast<cuthex_polygon*>(p);
        const QKernel& K = self->q_kernel(parse_rat(q));
        std::string rt = route ? route : "matrix";
        if (rt == "matrix") return rat_to_string(K.eval_matrix(m, x, n, y));
        if (rt == "integral") return rat_to_string(K.eval_integral(m, x, n, y));
        throw std::invalid_argument("route must be matrix or integral");
    });
}

char* cuthex_kernel_blue(const cuthex_polygon* p, long eta, long xi, long eta2, long xi2) {
    return wrap_string([&] {
        auto* self = const_cast<cuthex_polygon*>(p);
        return rat_to_string(self->blue_kernel().eval({eta, xi}, {eta2, xi2}));
    });
}

char* cuthex_verify_thm2(const cuthex_polygon* p) {
    return wrap_string([&] {
        auto* self = const_cast<cuthex_polygon*>(p);
        Enumeration en(p->data);
        const BlueKernel& L = self->blue_kernel();
        Measure uni = Measure::uniform();
        auto sites = en.blue_support();
        Rat worst(0);
        auto update = [&](const std::vector<BluePoint>& s) {
            Rat d = L.correlation(s) - en.blue_correlation(uni, s);
            if (d < 0) d = -d;
            if (d > worst) worst = d;
        };
        for (size_t i = 0; i < sites.size(); ++i) {
            update({sites[i]});
            for (size_t j = i + 1; j < sites.size(); ++j) update({sites[i], sites[j]});
        }
        return rat_to_string(worst);
    });
}

int cuthex_tacnode(int r, int rho, double beta, double a, double T, double h, int circle_n,
                   long tau1, double theta1, long tau2, double theta2, double* re, double* im) {
    try {
        QuadConfig qc;
        if (a > 0) qc.a = a;
        if (T > 0) qc.T = T;
        if (h > 0) qc.h = h;
        if (circle_n > 0) qc.circle_n = circle_n;
        TacnodeKernel K({r, rho, beta}, qc);
        Cplx v = K.eval_complex(tau1, theta1, tau2, theta2);
        if (re) *re = v.real();
        if (im) *im = v.imag();
        return CUTHEX_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CUTHEX_SPEC_ERROR;
    }
}

int cuthex_tacnode_involution(int r, int rho, double beta, double a, double T, double h,
                              int circle_n, long tau1, double theta1, long tau2, double theta2,
                              double* residual) {
    try {
        QuadConfig qc;
        if (a > 0) qc.a = a;
        if (T > 0) qc.T = T;
        if (h > 0) qc.h = h;
        if (circle_n > 0) qc.circle_n = circle_n;
        TacnodeKernel K({r, rho, beta}, qc);
        if (residual) *residual = K.involution_residual(tau1, theta1, tau2, theta2);
        return CUTHEX_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CUTHEX_SPEC_ERROR;
    }
}

long long cuthex_default_steps(const cuthex_polygon* p) { return Chain::default_steps(p->data); }

char* cuthex_sample_csv(const cuthex_polygon* p, unsigned long long seed, long long steps,
                        const char* q_or_null) {
    return wrap_string([&] {
        Tiling t = Chain::sample(p->data, measure_of(q_or_null), steps, seed);
        return tiling_to_csv(t);
    });
}

char* cuthex_render_svg(const cuthex_polygon* p, const char* tiling_csv, int scale, int flags) {
    return wrap_string([&] {
        Tiling t = tiling_csv ? tiling_from_csv(p->data, tiling_csv) : minimal_tiling(p->data);
        RenderStyle style;
        if (scale > 0) style.scale = scale;
        style.show_red_dots = flags & 1;
        style.show_blue_dots = flags & 2;
        style.show_strips = flags & 4;
        return render_svg(p->data, t, style);
    });
}

int cuthex_selftest(char** report) {
    try {
        std::ostringstream os;
        auto results = run_acceptance(nullptr);
        for (const auto& r : results)
            os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.seconds << " s)"
               << (r.detail.empty() ? "" : "  -- " + r.detail) << "\n";
        bool ok = all_passed(results);
        os << (ok ? "ALL CHECKS PASSED\n" : "CHECKS FAILED\n");
        if (report) *report = dup_string(os.str());
        return ok ? CUTHEX_OK : CUTHEX_FAIL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CUTHEX_FAIL;
    }
}

}  // extern "C"
