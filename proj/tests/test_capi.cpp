#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "cuthex.h"

namespace {
const char* kHex222 =
    "{\"lower_cuts\":[],\"lower_gaps\":[2],\"upper_cuts\":[],\"upper_gaps\":[2],"
    "\"b0\":2,\"bu\":2,\"d0\":2}";
const char* kTwoCut =
    "{\"lower_cuts\":[1],\"lower_gaps\":[2,2],\"upper_cuts\":[1],\"upper_gaps\":[2,2],"
    "\"b0\":2,\"bu\":2,\"d0\":2}";
}  // namespace

TEST_CASE("parse errors set status and message") {
    cuthex_polygon* p = cuthex_polygon_parse("{\"lower_gaps\":[2]}");
    CHECK(p == nullptr);
    CHECK(std::string(cuthex_last_error()).find("upper_gaps") != std::string::npos);
    p = cuthex_polygon_parse(
        "{\"lower_cuts\":[2],\"lower_gaps\":[4,7],\"upper_cuts\":[2],\"upper_gaps\":[5,5],"
        "\"b0\":3,\"bu\":7,\"d0\":7}");
    CHECK(p == nullptr);
    CHECK(std::string(cuthex_last_error()) == "sum(lower_gaps) != sum(upper_gaps)");
}

TEST_CASE("describe, count, kernels through the C surface") {
    cuthex_polygon* p = cuthex_polygon_parse(kHex222);
    REQUIRE(p != nullptr);
    char* desc = cuthex_polygon_describe(p);
    REQUIRE(desc != nullptr);
    CHECK(std::string(desc).find("\"N\":4") != std::string::npos);
    cuthex_free(desc);
    char* cnt = cuthex_count_tilings(p);
    REQUIRE(cnt != nullptr);
    CHECK(std::string(cnt) == "20");
    cuthex_free(cnt);
    char* corr = cuthex_red_correlation(p, "2:0", nullptr);
    REQUIRE(corr != nullptr);
    char* kr = cuthex_kernel_red(p, "r3", 2, 0, 2, 0);
    REQUIRE(kr != nullptr);
    CHECK(std::string(corr) == std::string(kr));  // 1-point law
    cuthex_free(corr);
    cuthex_free(kr);
    char* kq = cuthex_kernel_q(p, "1/2", "matrix", 2, 0, 2, 0);
    REQUIRE(kq != nullptr);
    char* kq_corr = cuthex_red_correlation(p, "2:0", "1/2");
    REQUIRE(kq_corr != nullptr);
    CHECK(std::string(kq) == std::string(kq_corr));
    cuthex_free(kq);
    cuthex_free(kq_corr);
    cuthex_polygon_free(p);
}

TEST_CASE("blue kernel shift relation holds through the C surface") {
    cuthex_polygon* p = cuthex_polygon_parse(kTwoCut);
    REQUIRE(p != nullptr);
    char* worst = cuthex_verify_thm2(p);
    REQUIRE(worst != nullptr);
    CHECK(std::string(worst) == "0");
    cuthex_free(worst);
    cuthex_polygon_free(p);
}

TEST_CASE("tacnode and sampling entry points") {
    double re = 0, im = 0, resid = 0;
    CHECK(cuthex_tacnode(0, 0, 0.0, 0, 0, 0, 0, 1, 0.3, 0, -0.2, &re, &im) == CUTHEX_OK);
    CHECK(std::abs(im) < 1e-8);
    CHECK(cuthex_tacnode_involution(0, 0, 0.0, 0, 0, 0, 0, 1, 0.3, 0, -0.2, &resid) == CUTHEX_OK);
    CHECK(resid < 1e-8);
    cuthex_polygon* p = cuthex_polygon_parse(kTwoCut);
    REQUIRE(p != nullptr);
    char* csv = cuthex_sample_csv(p, 42, 2000, nullptr);
    REQUIRE(csv != nullptr);
    char* svg = cuthex_render_svg(p, csv, 20, 7);
    REQUIRE(svg != nullptr);
    CHECK(std::string(svg).find("<svg") == 0);
    cuthex_free(csv);
    cuthex_free(svg);
    CHECK(cuthex_default_steps(p) > 0);
    cuthex_polygon_free(p);
}
