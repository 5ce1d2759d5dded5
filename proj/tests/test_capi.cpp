#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "cacti.h"

namespace {

struct Opts {
    cacti_options* o = cacti_options_new();
    ~Opts() { cacti_options_free(o); }
};

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out = s;
    cacti_free_string(s);
    return out;
}

}  // namespace

TEST_CASE("options accept known keys only") {
    Opts opts;
    CHECK(cacti_options_set(opts.o, "threads", "2") == 0);
    CHECK(cacti_options_set(opts.o, "variant", "printed") == 0);
    CHECK(cacti_options_set(opts.o, "variant", "bogus") == 2);
    CHECK(cacti_options_set(opts.o, "nonsense", "1") == 2);
    CHECK(cacti_options_set(opts.o, "budget", "abc") == 2);
}

TEST_CASE("counting cacti through the api") {
    Opts opts;
    char* result = nullptr;
    CHECK(cacti_count_cacti(opts.o, "3;4;5", &result) == 0);
    std::string json = take(result);
    CHECK(json.find("\"formula\":\"10/1\"") != std::string::npos);
    CHECK(json.find("\"oracle\":\"10/1\"") != std::string::npos);
    CHECK(json.find("\"agree\":true") != std::string::npos);
}

TEST_CASE("the printed variant reports the documented disagreement") {
    Opts opts;
    REQUIRE(cacti_options_set(opts.o, "variant", "printed") == 0);
    char* result = nullptr;
    CHECK(cacti_count_cacti(opts.o, "2,2;3", &result) == 1);
    std::string json = take(result);
    CHECK(json.find("\"agree\":false") != std::string::npos);
    CHECK(std::string(cacti_last_error()).find("disagree") != std::string::npos);
}

TEST_CASE("malformed passports yield usage errors") {
    Opts opts;
    char* result = nullptr;
    CHECK(cacti_count_cacti(opts.o, "2,;3", &result) == 2);
    CHECK(result == nullptr);
    CHECK(std::string(cacti_last_error()).size() > 0);
}

TEST_CASE("constellation counts need genus and faces") {
    Opts opts;
    cacti_options_set(opts.o, "genus", "0");
    cacti_options_set(opts.o, "faces", "2");
    char* result = nullptr;
    CHECK(cacti_count_constellations(opts.o, "2;2", &result) == 0);
    CHECK(take(result).find("\"oracle\":\"1/2\"") != std::string::npos);
}

TEST_CASE("one-n counts") {
    Opts opts;
    char* result = nullptr;
    CHECK(cacti_count_one_n(opts.o, "2,2,2", &result) == 0);
    std::string json = take(result);
    CHECK(json.find("\"formula\":\"4/1\"") != std::string::npos);
    CHECK(json.find("\"agree\":true") != std::string::npos);
    CHECK(cacti_count_one_n(opts.o, "2", &result) == 2);
}

TEST_CASE("volumes, numeric and symbolic") {
    Opts opts;
    char* result = nullptr;
    CHECK(cacti_volume(opts.o, "1:2;2:3", &result) == 0);
    // two circles, one face: the closed form at l=2, s=3 is 1
    CHECK(take(result).find("\"agree\":true") != std::string::npos);

    cacti_options_set(opts.o, "faces", "2");
    CHECK(cacti_volume(opts.o, "1:2;2:3", &result) == 0);
    CHECK(take(result).find("\"volume\":\"3/1\"") != std::string::npos);

    cacti_options_set(opts.o, "faces", "1");
    cacti_options_set(opts.o, "symbolic", "1");
    CHECK(cacti_volume(opts.o, "1:l1;2:l2;3:l3", &result) == 0);
    std::string json = take(result);
    CHECK(json.find("\"vars\"") != std::string::npos);
    CHECK(json.find("l1") != std::string::npos);
}

TEST_CASE("series expansion") {
    Opts opts;
    cacti_options_set(opts.o, "max_degree", "2");
    char* result = nullptr;
    CHECK(cacti_expand_f(opts.o, "1:l;2:s", &result) == 0);
    std::string f = take(result);
    CHECK(f.find("\"1/2\"") != std::string::npos);  // coefficient of ls

    cacti_options_set(opts.o, "with_n", "1");
    CHECK(cacti_expand_f(opts.o, "1:l;2:s", &result) == 0);
    CHECK(take(result).find("\"N\"") != std::string::npos);
}

TEST_CASE("verification suites run through the api") {
    Opts opts;
    cacti_options_set(opts.o, "budget", "5");
    char* result = nullptr;
    CHECK(cacti_verify(opts.o, "thm1circ", &result) == 0);
    std::string json = take(result);
    CHECK(json.find("\"suite\":\"thm1circ\"") != std::string::npos);
    CHECK(json.find("\"pass\":true") != std::string::npos);
    CHECK(cacti_verify(opts.o, "no-such-suite", &result) == 2);
}
