#include "cacti.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "closed_forms.hpp"
#include "factorization.hpp"
#include "json_io.hpp"
#include "matrix_model.hpp"
#include "parallel.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

struct Options {
    int threads = 0;
    int budget = 30;
    int genus = 0;
    int faces = 1;
    int max_degree = 2;
    bool symbolic = false;
    bool with_n = false;
    cacti::PassportVariant variant = cacti::PassportVariant::corrected;
};

char* dup_string(const std::string& s) {
    char* out = (char*)std::malloc(s.size() + 1);
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const Options& opts_of(const cacti_options* o);

// Runs the body with the options applied; maps exceptions to code 2.
template <typename Fn>
int guarded(const cacti_options* opts, char** result, Fn&& body) {
    if (result) *result = nullptr;
    try {
        g_last_error.clear();
        const Options& o = opts_of(opts);
        cacti::set_thread_count(o.threads);
        return body(o);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return 2;
    }
}

std::vector<int> parse_sizes(const std::string& text) {
    cacti::Passport p = cacti::parse_passport(text);  // "a,b,c" = one color
    if (p.k() != 1) throw std::invalid_argument("sizes must be a comma-separated list");
    return p.colors[0].parts;
}

}  // namespace

struct cacti_options {
    Options o;
};

namespace {
const Options& opts_of(const cacti_options* o) {
    static const Options defaults;
    return o ? o->o : defaults;
}
}  // namespace

extern "C" {

cacti_options* cacti_options_new(void) { return new cacti_options(); }

void cacti_options_free(cacti_options* opts) { delete opts; }

int cacti_options_set(cacti_options* opts, const char* key, const char* value) {
    if (!opts || !key || !value) return 2;
    try {
        std::string k = key, v = value;
        auto as_int = [&] { return std::stoi(v); };
        if (k == "threads")
            opts->o.threads = as_int();
        else if (k == "budget")
            opts->o.budget = as_int();
        else if (k == "genus")
            opts->o.genus = as_int();
        else if (k == "faces")
            opts->o.faces = as_int();
        else if (k == "max_degree")
            opts->o.max_degree = as_int();
        else if (k == "symbolic")
            opts->o.symbolic = (v == "1" || v == "true");
        else if (k == "with_n")
            opts->o.with_n = (v == "1" || v == "true");
        else if (k == "variant") {
            if (v == "printed")
                opts->o.variant = cacti::PassportVariant::printed;
            else if (v == "corrected")
                opts->o.variant = cacti::PassportVariant::corrected;
            else
                return 2;
        } else
            return 2;
        return 0;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return 2;
    }
}

int cacti_count_cacti(const cacti_options* opts, const char* passport, char** result_json) {
    return guarded(opts, result_json, [&](const Options& o) {
        if (!passport || !result_json) throw std::invalid_argument("null argument");
        cacti::Passport x = cacti::parse_passport(passport);
        cacti::Rational formula = cacti::cacti_passport(x, o.variant);
        cacti::Rational oracle = cacti::weighted_cactus_count(x);
        bool agree = formula == oracle;
        nlohmann::json j = {{"formula", cacti::rat_to_string(formula)},
                            {"oracle", cacti::rat_to_string(oracle)},
                            {"agree", agree}};
        *result_json = dup_string(j.dump());
        if (!agree) g_last_error = "closed form and oracle disagree";
        return agree ? 0 : 1;
    });
}

int cacti_count_constellations(const cacti_options* opts, const char* passport,
                               char** result_json) {
    return guarded(opts, result_json, [&](const Options& o) {
        if (!passport || !result_json) throw std::invalid_argument("null argument");
        cacti::Passport x = cacti::parse_passport(passport);
        cacti::Rational oracle = cacti::weighted_constellation_count(x, o.genus, o.faces);
        nlohmann::json j = {{"oracle", cacti::rat_to_string(oracle)}};
        *result_json = dup_string(j.dump());
        return 0;
    });
}

int cacti_count_one_n(const cacti_options* opts, const char* sizes, char** result_json) {
    return guarded(opts, result_json, [&](const Options&) {
        if (!sizes || !result_json) throw std::invalid_argument("null argument");
        std::vector<int> s = parse_sizes(sizes);
        int k = (int)s.size();
        long n = -k - 1;
        for (int x : s) n += x;
        if (k < 2 || n < 1) throw std::invalid_argument("no such constellation");
        cacti::Rational formula(cacti::constellations_1n_closed(k, n));
        cacti::Rational oracle = cacti::weighted_1n_count(s);
        bool agree = formula == oracle;
        nlohmann::json j = {{"formula", cacti::rat_to_string(formula)},
                            {"oracle", cacti::rat_to_string(oracle)},
                            {"agree", agree}};
        *result_json = dup_string(j.dump());
        if (!agree) g_last_error = "closed form and oracle disagree";
        return agree ? 0 : 1;
    });
}

int cacti_volume(const cacti_options* opts, const char* circles, char** result_json) {
    return guarded(opts, result_json, [&](const Options& o) {
        if (!circles || !result_json) throw std::invalid_argument("null argument");
        cacti::CircleSet c = cacti::parse_circles(circles);
        cacti::MVPolynomial vol =
            cacti::stratum_volume(c.as_circles(), o.genus, o.faces);
        nlohmann::json j;
        if (o.symbolic || !vol.is_constant())
            j["volume"] = nlohmann::json::parse(cacti::poly_to_json(vol));
        else
            j["volume"] = cacti::rat_to_string(vol.as_constant());
        int code = 0;
        if (o.genus == 0 && o.faces == 1 && c.k() >= 2) {
            cacti::MVPolynomial closed = cacti::circle_cacti_multi(c);
            bool agree = closed == vol;
            if (o.symbolic || !closed.is_constant())
                j["closed"] = nlohmann::json::parse(cacti::poly_to_json(closed));
            else
                j["closed"] = cacti::rat_to_string(closed.as_constant());
            j["agree"] = agree;
            if (!agree) {
                g_last_error = "type enumeration and closed form disagree";
                code = 1;
            }
        }
        *result_json = dup_string(j.dump());
        return code;
    });
}

int cacti_expand_f(const cacti_options* opts, const char* circles, char** result_json) {
    return guarded(opts, result_json, [&](const Options& o) {
        if (!circles || !result_json) throw std::invalid_argument("null argument");
        cacti::CircleSet c = cacti::parse_circles(circles);
        cacti::MVPolynomial p = o.with_n ? cacti::F_series(c, o.max_degree)
                                         : cacti::f_series(c, o.max_degree);
        *result_json = dup_string(cacti::poly_to_json(p));
        return 0;
    });
}

int cacti_verify(const cacti_options* opts, const char* suite, char** report_json) {
    return guarded(opts, report_json, [&](const Options& o) {
        if (!suite || !report_json) throw std::invalid_argument("null argument");
        cacti::SuiteReport r = cacti::run_suite(suite, o.budget);
        *report_json = dup_string(r.to_json());
        if (!r.pass) g_last_error = "verification suite failed";
        return r.pass ? 0 : 1;
    });
}

void cacti_free_string(char* s) { std::free(s); }

const char* cacti_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
