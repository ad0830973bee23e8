// cuthex command line: validation, enumeration, exact correlation tables,
// kernel evaluation, tacnode quadrature, sampling and SVG rendering. Talks to
// the shared library strictly through the C API in cuthex.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <atomic>
#include <memory>
#include <thread>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuthex.h"

namespace {

struct CStr {
    char* p = nullptr;
    ~CStr() { cuthex_free(p); }
    explicit operator bool() const { return p != nullptr; }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct Polygon {
    cuthex_polygon* p = nullptr;
    ~Polygon() { cuthex_polygon_free(p); }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << content;
}

int fail_spec(const std::string& context) {
    std::cerr << "error: " << context << ": " << cuthex_last_error() << "\n";
    return CUTHEX_SPEC_ERROR;
}

cuthex_polygon* parse_polygon(const std::string& spec_path) {
    std::string text = read_input(spec_path);
    return cuthex_polygon_parse(text.c_str());
}

std::vector<std::array<long, 2>> parse_pairs(const std::string& arg) {
    std::vector<std::array<long, 2>> out;
    std::istringstream is(arg);
    std::string tok;
    while (std::getline(is, tok, ';')) {
        if (tok.empty()) continue;
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw std::runtime_error("expected a:b, got " + tok);
        out.push_back({std::stol(tok.substr(0, colon)), std::stol(tok.substr(colon + 1))});
    }
    return out;
}

// All lattice points of the polygon, read back from the describe() JSON window.
std::vector<std::array<long, 2>> polygon_points(cuthex_polygon* poly) {
    CStr desc{cuthex_polygon_describe(poly)};
    auto j = nlohmann::json::parse(desc.str());
    long N = j["N"], d = j["d"], sum_m = j["sum_m"];
    std::vector<std::array<long, 2>> pts;
    for (long n = 0; n <= N; ++n)
        for (long x = -d - n; x <= sum_m - 1; ++x) pts.push_back({n, x});
    return pts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cuthex: exact determinantal analysis of lozenge tilings of cut hexagons"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 1;
    if (const char* e = std::getenv("CUTHEX_THREADS")) threads = std::max(1, std::atoi(e));
    app.add_option("--threads", threads, "worker thread cap for table generation");

    std::string spec_path = "-", out_path, points, form = "r3", qstr, route = "matrix";
    std::string tiling_path, grid;
    bool blue = false, all_pairs = false, verify_thm2 = false, count_only = false;
    bool red_dots = false, blue_dots = false, strips = false, limit_trend = false;
    long cap = 1'000'000;
    unsigned long long seed = 1;
    long long steps = -1;
    int scale = 24, tac_r = 0, tac_rho = 0, circle_n = 0;
    double tac_beta = 0, qa = 0, qT = 0, qh = 0;

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("spec", spec_path, "polygon spec JSON file ('-' for stdin)");
    };

    auto* validate = app.add_subcommand("validate", "check a polygon spec and print derived data");
    add_spec(validate);

    auto* enumerate = app.add_subcommand("enumerate", "list all tilings as level CSV");
    add_spec(enumerate);
    enumerate->add_option("--cap", cap, "enumeration size cap");
    enumerate->add_flag("--count-only", count_only, "print only the exact count");
    enumerate->add_option("--out", out_path, "output file (default stdout)");

    auto* correlate = app.add_subcommand("correlate", "exact correlation of a point set");
    add_spec(correlate);
    correlate->add_option("--points", points, "semicolon list level:x (or eta:xi with --blue)")
        ->required();
    correlate->add_option("--q", qstr, "q for the q-weighted measure (default uniform)");
    correlate->add_flag("--blue", blue, "interpret points as blue dots");

    auto* kernel = app.add_subcommand("kernel", "red kernel values as CSV");
    add_spec(kernel);
    kernel->add_option("--form", form, "d2 | R | L | r3 (default r3)");
    kernel->add_option("--points", points, "pair list m:x;n:y;m:x;n:y;... (consecutive pairs)");
    kernel->add_flag("--all-pairs", all_pairs, "emit the kernel over every point pair of the parallelogram window");
    kernel->add_option("--out", out_path, "output file");

    auto* qkernel = app.add_subcommand("qkernel", "q-deformed kernel values as CSV");
    add_spec(qkernel);
    qkernel->add_option("--q", qstr, "rational q in (0,1), e.g. 1/2")->required();
    qkernel->add_option("--route", route, "matrix | integral (default matrix)");
    qkernel->add_option("--points", points, "pair list m:x;n:y;...");
    qkernel->add_flag("--all-pairs", all_pairs, "emit the kernel over every point pair of the parallelogram window");
    qkernel->add_option("--out", out_path, "output file");

    auto* lkernel = app.add_subcommand("lkernel", "blue kernel values as CSV");
    add_spec(lkernel);
    lkernel->add_option("--points", points, "pair list eta:xi;eta:xi;... (consecutive pairs)");
    lkernel->add_flag("--verify-thm2", verify_thm2,
                      "print the max discrepancy of det L_blue against enumeration");
    lkernel->add_option("--out", out_path, "output file");

    auto* tacnode = app.add_subcommand("tacnode", "discrete tacnode kernel values as CSV");
    tacnode->add_option("--r", tac_r, "number of strip paths r >= 0")->required();
    tacnode->add_option("--rho", tac_rho, "strip width rho >= 0")->required();
    tacnode->add_option("--beta", tac_beta, "asymmetry parameter beta");
    tacnode->add_option("--grid", grid, "list tau1:theta1:tau2:theta2;... (default demo grid)");
    tacnode->add_option("--abscissa", qa, "vertical line abscissa (default 0.5)");
    tacnode->add_option("--T", qT, "line truncation half-length (default 8)");
    tacnode->add_option("--hstep", qh, "line step (default 1/64)");
    tacnode->add_option("--circle-n", circle_n, "circle sample count (default 64)");
    tacnode->add_flag("--limit-trend", limit_trend,
                      "compare scaled finite-polygon blue kernels against the tacnode kernel");
    tacnode->add_option("--out", out_path, "output file");

    auto* sample = app.add_subcommand("sample", "Metropolis sample of a random tiling");
    add_spec(sample);
    sample->add_option("--steps", steps, "proposal count (default 20*(movable dots)^2)");
    sample->add_option("--seed", seed, "64-bit seed of the cuthex-sm64-v1 generator");
    sample->add_option("--q", qstr, "q-measure parameter (default uniform)");
    sample->add_option("--out", out_path, "output file");

    auto* render = app.add_subcommand("render", "SVG picture of a tiling");
    add_spec(render);
    render->add_option("--tiling", tiling_path, "tiling CSV (default: minimal tiling)");
    render->add_option("--scale", scale, "pixels per lattice unit");
    render->add_flag("--red-dots", red_dots, "overlay red dots");
    render->add_flag("--blue-dots", blue_dots, "overlay blue dots");
    render->add_flag("--strips", strips, "overlay the {rho}/{sigma} strip guides");
    render->add_option("--out", out_path, "output file");

    auto* selftest = app.add_subcommand("selftest", "run the exact verification suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            Polygon poly{parse_polygon(spec_path)};
            if (!poly.p) return fail_spec("validate");
            CStr desc{cuthex_polygon_describe(poly.p)};
            std::cout << desc.str() << "\n";
            return 0;
        }

        if (enumerate->parsed()) {
            Polygon poly{parse_polygon(spec_path)};
            if (!poly.p) return fail_spec("enumerate");
            CStr count{cuthex_count_tilings(poly.p)};
            if (count_only) {
                std::cout << count.str() << "\n";
                return 0;
            }
            CStr csv{cuthex_enumerate_csv(poly.p, cap)};
            if (!csv) return fail_spec("enumerate");
            write_output(out_path, "count," + count.str() + "\n" + csv.str());
            return 0;
        }

        if (correlate->parsed()) {
            Polygon poly{parse_polygon(spec_path)};
            if (!poly.p) return fail_spec("correlate");
            std::string pts_api;
            for (auto [a, b] : parse_pairs(points))
                pts_api += (pts_api.empty() ? "" : ";") + std::to_string(a) + ":" +
                           std::to_string(b);
            CStr v{blue ? cuthex_blue_correlation(poly.p, pts_api.c_str(),
                                                  qstr.empty() ? nullptr : qstr.c_str())
                        : cuthex_red_correlation(poly.p, pts_api.c_str(),
                                                 qstr.empty() ? nullptr : qstr.c_str())};
            if (!v) return fail_spec("correlate");
            std::cout << points << "," << v.str() << "\n";
            return 0;
        }

        if (kernel->parsed() || qkernel->parsed()) {
            Polygon poly{parse_polygon(spec_path)};
            if (!poly.p) return fail_spec("kernel");
            std::ostringstream os;
            os << "m,x,n,y,value_num,value_den\n";
            auto emit = [&](long m, long x, long n, long y) -> bool {
                CStr v{kernel->parsed()
                           ? cuthex_kernel_red(poly.p, form.c_str(), m, x, n, y)
                           : cuthex_kernel_q(poly.p, qstr.c_str(), route.c_str(), m, x, n, y)};
                if (!v) return false;
                std::string s = v.str();
                auto slash = s.find('/');
                os << m << "," << x << "," << n << "," << y << ","
                   << (slash == std::string::npos ? s : s.substr(0, slash)) << ","
                   << (slash == std::string::npos ? "1" : s.substr(slash + 1)) << "\n";
                return true;
            };
            if (all_pairs) {
                auto pts = polygon_points(poly.p);
                if (threads <= 1) {
                    for (const auto& p1 : pts)
                        for (const auto& p2 : pts)
                            if (!emit(p1[0], p1[1], p2[0], p2[1])) return fail_spec("kernel");
                } else {
                    // Each worker owns a private handle; rows are sharded.
                    std::string spec_text = read_input(spec_path);
                    std::vector<std::string> rows(pts.size());
                    std::vector<std::thread> pool;
                    std::atomic<bool> failed{false};
                    for (int w = 0; w < threads; ++w)
                        pool.emplace_back([&, w] {
                            Polygon mine{cuthex_polygon_parse(spec_text.c_str())};
                            if (!mine.p) {
                                failed = true;
                                return;
                            }
                            for (size_t i = w; i < pts.size(); i += threads) {
                                std::ostringstream ro;
                                for (const auto& p2 : pts) {
                                    CStr v{kernel->parsed()
                                               ? cuthex_kernel_red(mine.p, form.c_str(), pts[i][0],
                                                                   pts[i][1], p2[0], p2[1])
                                               : cuthex_kernel_q(mine.p, qstr.c_str(),
                                                                 route.c_str(), pts[i][0],
                                                                 pts[i][1], p2[0], p2[1])};
                                    if (!v) {
                                        failed = true;
                                        return;
                                    }
                                    std::string s = v.str();
                                    auto slash = s.find('/');
                                    ro << pts[i][0] << "," << pts[i][1] << "," << p2[0] << ","
                                       << p2[1] << ","
                                       << (slash == std::string::npos ? s : s.substr(0, slash))
                                       << ","
                                       << (slash == std::string::npos ? "1" : s.substr(slash + 1))
                                       << "\n";
                                }
                                rows[i] = ro.str();
                            }
                        });
                    for (auto& t : pool) t.join();
                    if (failed) return fail_spec("kernel");
                    for (const auto& r : rows) os << r;
                }
            } else {
                auto pairs = parse_pairs(points);
                if (pairs.size() % 2 != 0)
                    throw std::runtime_error("--points needs an even number of a:b entries");
                for (size_t i = 0; i + 1 < pairs.size(); i += 2)
                    if (!emit(pairs[i][0], pairs[i][1], pairs[i + 1][0], pairs[i + 1][1]))
                        return fail_spec("kernel");
            }
            write_output(out_path, os.str());
            return 0;
        }

        if (lkernel->parsed()) {
            Polygon poly{parse_polygon(spec_path)};
            if (!poly.p) return fail_spec("lkernel");
            if (verify_thm2) {
                CStr worst{cuthex_verify_thm2(poly.p)};
                if (!worst) return fail_spec("lkernel");
                std::cout << "max_discrepancy," << worst.str() << "\n";
                return worst.str() == "0" ? 0 : 1;
            }
            std::ostringstream os;
            os << "eta,xi,eta2,xi2,value\n";
            auto pairs = parse_pairs(points);
            if (pairs.size() % 2 != 0)
                throw std::runtime_error("--points needs an even number of eta:xi entries");
            for (size_t i = 0; i + 1 < pairs.size(); i += 2) {
                CStr v{cuthex_kernel_blue(poly.p, pairs[i][0], pairs[i][1], pairs[i + 1][0],
                                          pairs[i + 1][1])};
                if (!v) return fail_spec("lkernel");
                os << pairs[i][0] << "," << pairs[i][1] << "," << pairs[i + 1][0] << ","
                   << pairs[i + 1][1] << "," << v.str() << "\n";
            }
            write_output(out_path, os.str());
            return 0;
        }

        if (tacnode->parsed()) {
            std::ostringstream os;
            if (limit_trend) {
                // Shape comparison: scaled two-cut polygons against the tacnode
                // kernel along the strip, ratios against the (0,.;1,.) entry.
                os << "d,tau1,tau2,finite_ratio,tacnode_ratio\n";
                int r = tac_r, rho = tac_rho;
                for (long dd : {2L, 3L, 4L}) {
                    long m = 3 * dd;  // gamma = 2 scaling of the gaps
                    long n1 = m + (rho - r), n2 = m - (rho - r);
                    nlohmann::json j;
                    j["lower_cuts"] = {dd};
                    j["lower_gaps"] = {m, m};
                    j["upper_cuts"] = {dd};
                    j["upper_gaps"] = {n1, n2};
                    j["b0"] = dd + r;
                    j["bu"] = 2 * dd;
                    j["d0"] = 2 * dd;
                    Polygon poly{cuthex_polygon_parse(j.dump().c_str())};
                    if (!poly.p) return fail_spec("tacnode --limit-trend");
                    long N = 3 * dd + r, eta0 = m, xi0 = N - m - 1;
                    // blue sites need eta + xi odd; nudge xi when the strip
                    // origin lands on the wrong parity
                    auto xi_of = [&](long t) { return (eta0 + t + xi0) % 2 == 0 ? xi0 + 1 : xi0; };
                    double gam = 2.0, aa = 2 * std::sqrt(gam / (gam - 1));
                    auto theta_of = [&](long t) {
                        return (xi_of(t) - xi0) * aa / ((gam + 1) * std::sqrt(double(dd)));
                    };
                    auto lval = [&](long t1, long t2) {
                        CStr v{cuthex_kernel_blue(poly.p, eta0 + t1, xi_of(t1), eta0 + t2,
                                                  xi_of(t2))};
                        if (!v) throw std::runtime_error(cuthex_last_error());
                        std::string s = v.str();
                        auto slash = s.find('/');
                        double num = std::stod(s.substr(0, slash));
                        double den = slash == std::string::npos ? 1 : std::stod(s.substr(slash + 1));
                        return num / den;
                    };
                    double fref = lval(0, 1);
                    double tref = 0, t00 = 0;
                    cuthex_tacnode(r, rho, tac_beta, qa, qT, qh, circle_n, 0, theta_of(0), 1,
                                   theta_of(1), &tref, nullptr);
                    for (long t1 : {0L, 1L})
                        for (long t2 : {0L, 1L}) {
                            double fv = lval(t1, t2);
                            cuthex_tacnode(r, rho, tac_beta, qa, qT, qh, circle_n, t1,
                                           theta_of(t1), t2, theta_of(t2), &t00, nullptr);
                            os << dd << "," << t1 << "," << t2 << "," << fv / fref << ","
                               << t00 / tref << "\n";
                        }
                }
                write_output(out_path, os.str());
                return 0;
            }
            os << "tau1,theta1,tau2,theta2,re,im,involution_residual\n";
            std::vector<std::array<double, 4>> pts;
            if (!grid.empty()) {
                std::istringstream is(grid);
                std::string tok;
                while (std::getline(is, tok, ';')) {
                    std::istringstream ts(tok);
                    std::string f;
                    std::array<double, 4> row{};
                    for (int i = 0; i < 4 && std::getline(ts, f, ':'); ++i) row[i] = std::stod(f);
                    pts.push_back(row);
                }
            } else {
                for (long t1 : {-1L, 0L, 1L, 2L})
                    for (long t2 : {-1L, 0L, 1L, 2L})
                        pts.push_back({double(t1), 0.25, double(t2), -0.25});
            }
            for (const auto& row : pts) {
                double re = 0, im = 0, resid = 0;
                if (cuthex_tacnode(tac_r, tac_rho, tac_beta, qa, qT, qh, circle_n, (long)row[0],
                                   row[1], (long)row[2], row[3], &re, &im) != CUTHEX_OK)
                    return fail_spec("tacnode");
                if (cuthex_tacnode_involution(tac_r, tac_rho, tac_beta, qa, qT, qh, circle_n,
                                              (long)row[0], row[1], (long)row[2], row[3],
                                              &resid) != CUTHEX_OK)
                    return fail_spec("tacnode");
                os << (long)row[0] << "," << row[1] << "," << (long)row[2] << "," << row[3] << ","
                   << re << "," << im << "," << resid << "\n";
            }
            write_output(out_path, os.str());
            return 0;
        }

        if (sample->parsed()) {
            Polygon poly{parse_polygon(spec_path)};
            if (!poly.p) return fail_spec("sample");
            long long n = steps >= 0 ? steps : cuthex_default_steps(poly.p);
            CStr csv{cuthex_sample_csv(poly.p, seed, n, qstr.empty() ? nullptr : qstr.c_str())};
            if (!csv) return fail_spec("sample");
            write_output(out_path, csv.str());
            return 0;
        }

        if (render->parsed()) {
            Polygon poly{parse_polygon(spec_path)};
            if (!poly.p) return fail_spec("render");
            std::string tiling_csv;
            if (!tiling_path.empty()) tiling_csv = read_input(tiling_path);
            int flags = (red_dots ? 1 : 0) | (blue_dots ? 2 : 0) | (strips ? 4 : 0);
            CStr svg{cuthex_render_svg(poly.p, tiling_path.empty() ? nullptr : tiling_csv.c_str(),
                                       scale, flags)};
            if (!svg) return fail_spec("render");
            write_output(out_path, svg.str());
            return 0;
        }

        if (selftest->parsed()) {
            char* report = nullptr;
            int rc = cuthex_selftest(&report);
            if (report) {
                std::cout << report;
                cuthex_free(report);
            }
            return rc == CUTHEX_OK ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
