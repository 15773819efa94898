#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sumsq/sumsq.h>

#include <string>

#include "json.hpp"

namespace {

std::string take(char* p) {
    std::string s = p ? p : "";
    sumsq_string_free(p);
    return s;
}

}  // namespace

TEST_CASE("counts through the C interface") {
    char* out = nullptr;
    REQUIRE(sumsq_rs(24, 1, "formula", &out) == SUMSQ_OK);
    CHECK(take(out) == "48");
    REQUIRE(sumsq_rs(4, 1, "oracle", &out) == SUMSQ_OK);
    CHECK(take(out) == "8");
    for (const char* m : {"oracle", "formula", "theta", "schur"}) {
        REQUIRE(sumsq_rs(16, 3, m, &out) == SUMSQ_OK);
        CHECK(take(out) == "4480");
    }
    for (const char* m : {"oracle", "theta", "schur"}) {
        REQUIRE(sumsq_ts(8, 2, m, &out) == SUMSQ_OK);
        CHECK(take(out) == "28");
    }
    REQUIRE(sumsq_tau(7, "eta", &out) == SUMSQ_OK);
    CHECK(take(out) == "-16744");
}

TEST_CASE("errors map to status codes") {
    char* out = nullptr;
    CHECK(sumsq_rs(5, 3, "formula", &out) == SUMSQ_ERR_DOMAIN);
    CHECK(out == nullptr);
    CHECK(std::string(sumsq_last_error()).find("r_formula") != std::string::npos);
    CHECK(sumsq_rs(20, 3, "schur", &out) == SUMSQ_ERR_DOMAIN);
    CHECK(sumsq_rs(4, 3, "abacus", &out) == SUMSQ_ERR_DOMAIN);
    CHECK(sumsq_tau(4, "eq_1_29", &out) != SUMSQ_OK);
    CHECK(sumsq_rs(4, 3, "oracle", nullptr) == SUMSQ_ERR_ARGUMENT);
    sumsq_reports* r = nullptr;
    CHECK(sumsq_verify_id("BOGUS", 1, 200, &r) == SUMSQ_ERR_REGISTRY);
    CHECK(sumsq_verify_suite("s99", 1, 200, 1, &r) == SUMSQ_ERR_REGISTRY);
    CHECK(sumsq_verify_id("EQ_5_84", 1, 2, &r) == SUMSQ_ERR_DOMAIN);
    CHECK(r == nullptr);
    sumsq_series* s = nullptr;
    CHECK(sumsq_series_theta("theta9", 1, "plain", 40, &s) == SUMSQ_ERR_DOMAIN);
    CHECK(std::string(sumsq_status_name(SUMSQ_ERR_GRID)) == "GridError");
    CHECK(sumsq_cfrac_level("sn", 0, &out) != SUMSQ_OK);
    sumsq_reports_free(nullptr);
    sumsq_series_free(nullptr);
    sumsq_string_free(nullptr);
}

TEST_CASE("series handles") {
    sumsq_series* s = nullptr;
    REQUIRE(sumsq_series_theta("theta3", 4, "plain", 24, &s) == SUMSQ_OK);
    CHECK(sumsq_series_order(s) == 24);
    const char* want[] = {"1", "8", "24", "32", "24", "48"};
    char* out = nullptr;
    for (long q = 0; q < 6; ++q) {
        REQUIRE(sumsq_series_coeff(s, 4 * q, &out) == SUMSQ_OK);
        CHECK(take(out) == want[q]);
    }
    CHECK(sumsq_series_coeff(s, 24, &out) == SUMSQ_ERR_ARGUMENT);
    REQUIRE(sumsq_series_to_json(s, &out) == SUMSQ_OK);
    std::string json = take(out);
    sumsq_series* back = nullptr;
    REQUIRE(sumsq_series_from_json(json.c_str(), &back) == SUMSQ_OK);
    REQUIRE(sumsq_series_to_json(back, &out) == SUMSQ_OK);
    CHECK(take(out) == json);
    sumsq_series_free(back);
    sumsq_series_free(s);

    REQUIRE(sumsq_series_theta("theta2", 1, nullptr, 40, &s) == SUMSQ_OK);
    REQUIRE(sumsq_series_coeff(s, 1, &out) == SUMSQ_OK);
    CHECK(take(out) == "2");
    sumsq_series_free(s);

    REQUIRE(sumsq_series_family("V", 3, "plain", 16, &s) == SUMSQ_OK);
    REQUIRE(sumsq_series_coeff(s, 8, &out) == SUMSQ_OK);
    CHECK(take(out) == "9");  // 1^3 + 2^3
    sumsq_series_free(s);
}

TEST_CASE("verification reports") {
    sumsq_reports* r = nullptr;
    REQUIRE(sumsq_verify_suite("s5_19", 2, 200, 2, &r) == SUMSQ_OK);
    CHECK(sumsq_reports_count(r) == 24);
    CHECK(sumsq_reports_all_pass(r) == 1);
    std::string prev;
    for (size_t i = 0; i < sumsq_reports_count(r); ++i) {
        char* out = nullptr;
        REQUIRE(sumsq_reports_json(r, i, &out) == SUMSQ_OK);
        auto j = nlohmann::json::parse(take(out));
        CHECK(j["status"] == "pass");
        std::string id = j["id"];
        CHECK(prev < id);
        prev = id;
    }
    int pass = 0;
    CHECK(sumsq_reports_pass(r, 99, &pass) == SUMSQ_ERR_ARGUMENT);
    sumsq_reports_free(r);

    for (const char* id : {"EQ_5_84", "EQ_2_80", "EQ_4_1", "EQ_4_69", "COR_7_13", "COR_8_2"}) {
        REQUIRE_MESSAGE(sumsq_verify_id(id, 2, 400, &r) == SUMSQ_OK, id);
        CHECK_MESSAGE(sumsq_reports_all_pass(r) == 1, id);
        char* line = nullptr;
        REQUIRE(sumsq_reports_line(r, 0, &line) == SUMSQ_OK);
        CHECK(take(line).rfind("PASS ", 0) == 0);
        sumsq_reports_free(r);
    }

    char* names = nullptr;
    REQUIRE(sumsq_suite_names(&names) == SUMSQ_OK);
    CHECK(take(names) == "s1\ns2\ns4\ns5_19\ns5_20_21\ns5_chi\ns5_hankel\ns7\ns8\n");
    REQUIRE(sumsq_verify_suite("s2", 2, 200, 1, &r) == SUMSQ_OK);
    CHECK(sumsq_reports_count(r) == 11);
    CHECK(sumsq_reports_all_pass(r) == 1);
    sumsq_reports_free(r);
}

TEST_CASE("continued fraction levels") {
    char* out = nullptr;
    REQUIRE(sumsq_cfrac_level("sn", 2, &out) == SUMSQ_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["alpha"] == "12*K");
    CHECK(j["beta"] == "9 + 9*K");
    CHECK(j["numerator"] == "-12*K*x^4");
    REQUIRE(sumsq_cfrac_families(&out) == SUMSQ_OK);
    CHECK(take(out).rfind("sn\ncn\ndn\n", 0) == 0);
}
