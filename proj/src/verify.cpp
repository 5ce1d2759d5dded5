#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "closed_forms.hpp"
#include "factorization.hpp"
#include "json_io.hpp"
#include "matrix_model.hpp"
#include "plane_cactus.hpp"
#include "topology.hpp"

namespace cacti {

namespace {

std::string sizes_label(const std::vector<int>& sizes) {
    std::string s;
    for (size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
    return s;
}

void add(SuiteReport& r, const std::string& name, const std::string& lhs, const std::string& rhs) {
    bool pass = lhs == rhs;
    r.checks.push_back({name, lhs, rhs, pass});
    if (!pass) r.pass = false;
}

void add_bool(SuiteReport& r, const std::string& name, bool ok) {
    r.checks.push_back({name, ok ? "true" : "false", "true", ok});
    if (!ok) r.pass = false;
}

Passport distinct_passport(const std::vector<int>& sizes) {
    std::vector<Partition> colors;
    for (int s : sizes) colors.push_back(Partition({s}));
    return Passport(colors);
}

std::vector<CircleSpec> distinct_symbol_circles(int k) {
    std::vector<CircleSpec> out;
    for (int i = 1; i <= k; ++i) out.push_back({i, "l" + std::to_string(i)});
    return out;
}

// All partitions with parts >= 2 and n_i - p_i <= excess, sum <= cap.
std::vector<Partition> partition_pool(int cap, int excess) {
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int, int)> go = [&](int maxpart, int sum) {
        if (!parts.empty()) {
            Partition p(parts);
            if (p.sum() - (int)p.size() <= excess) out.push_back(p);
        }
        for (int next = 2; next <= maxpart; ++next) {
            if (sum + next > cap) break;
            parts.push_back(next);
            go(next, sum + next);
            parts.pop_back();
        }
    };
    go(cap, 0);
    for (auto& p : out) std::sort(p.parts.begin(), p.parts.end(), std::greater<int>());
    return out;
}

void suite_thm1polyg(SuiteReport& r, int budget) {
    std::vector<std::vector<int>> cases = {{2, 2}, {2, 3}, {2, 2, 2}, {3, 4, 5}, {2, 2, 2, 2}};
    if (budget >= 120) cases.push_back({2, 2, 3, 3});
    for (const auto& sizes : cases) {
        Rational closed = cacti_distinct(sizes);
        add(r, "closed_vs_factorization " + sizes_label(sizes), rat_to_string(closed),
            rat_to_string(weighted_cactus_count(distinct_passport(sizes))));

        auto cacti_list = enumerate_plane_cacti(sizes);
        Rational weighted = 0;
        for (const auto& c : cacti_list) weighted += Rational(1) / Rational(c.symmetry_order());
        add(r, "enumeration_vs_closed " + sizes_label(sizes), rat_to_string(weighted),
            rat_to_string(closed));

        bool roundtrip = true;
        std::set<std::vector<std::vector<int>>> images;
        for (const auto& c : cacti_list) {
            MarkedPolygon m = encode_cactus(c);
            images.insert(m.canonical().marks);
            if (!(decode_cactus(m, sizes) == c)) roundtrip = false;
        }
        add_bool(r, "merge_bijection_roundtrip " + sizes_label(sizes), roundtrip);
        add(r, "merge_bijection_injective " + sizes_label(sizes), std::to_string(images.size()),
            std::to_string(cacti_list.size()));
    }
}

void suite_thm2polyg(SuiteReport& r, int budget) {
    add(r, "passport 3;4;5", rat_to_string(cacti_passport(parse_passport("3;4;5"))), "10/1");
    add(r, "passport 2,2;3", rat_to_string(cacti_passport(parse_passport("2,2;3"))), "1/1");
    add(r, "passport 2,2 vanishes", rat_to_string(cacti_passport(parse_passport("2,2"))), "0/1");
    add_bool(r, "printed_variant_differs (documented typo)",
             cacti_passport(parse_passport("2,2;3"), PassportVariant::printed) !=
                 weighted_cactus_count(parse_passport("2,2;3")));

    int max_n = budget >= 120 ? 7 : 6;
    int max_k = 6;
    auto pool = partition_pool(2 * (max_n - 1), max_n - 1);
    long checked = 0;
    bool all_agree = true;
    std::function<void(std::vector<Partition>&, size_t)> go = [&](std::vector<Partition>& acc,
                                                                  size_t from) {
        if (!acc.empty()) {
            Passport x(acc);
            int excess = 1;
            for (const auto& p : x.colors) excess += p.sum() - (int)p.size();
            if (excess <= max_n) {
                Rational formula = cacti_passport(x);
                Rational oracle = weighted_cactus_count(x);
                ++checked;
                if (formula != oracle) all_agree = false;
            }
        }
        if (acc.size() == (size_t)max_k) return;
        for (size_t i = from; i < pool.size(); ++i) {
            acc.push_back(pool[i]);
            go(acc, i);
            acc.pop_back();
        }
    };
    std::vector<Partition> acc;
    go(acc, 0);
    add(r, "exhaustive corrected_vs_oracle n<=" + std::to_string(max_n),
        all_agree ? "all " + std::to_string(checked) + " agree" : "disagreement found",
        "all " + std::to_string(checked) + " agree");
}

void suite_thm3polyg(SuiteReport& r, int budget) {
    std::vector<std::vector<int>> cases = {{2, 2}, {2, 2, 2}, {3, 3, 3}, {2, 3, 4}, {2, 2, 2, 2}};
    if (budget >= 120) cases.push_back({2, 2, 2, 3});
    for (const auto& sizes : cases) {
        int k = (int)sizes.size();
        long n = -k - 1;
        for (int s : sizes) n += s;
        Rational closed = Rational(constellations_1n_closed(k, n));
        add(r, "oracle_vs_closed " + sizes_label(sizes),
            rat_to_string(weighted_1n_count(sizes)), rat_to_string(closed));
        add(r, "double_sum " + sizes_label(sizes), rat_to_string(constellations_1n_sum(sizes)),
            rat_to_string(closed));
        add(r, "reduced_sum " + sizes_label(sizes),
            rat_to_string(constellations_1n_reduced(k, n)), rat_to_string(closed));
    }
    add(r, "sum_depends_only_on_totals", rat_to_string(constellations_1n_sum({2, 2, 4})),
        rat_to_string(constellations_1n_sum({2, 3, 3})));
}

void suite_thm1circ(SuiteReport& r, int budget) {
    int max_k = budget >= 120 ? 6 : 5;
    for (int k = 2; k <= max_k; ++k) {
        std::vector<std::string> lengths;
        for (int i = 1; i <= k; ++i) lengths.push_back("l" + std::to_string(i));
        MVPolynomial closed = circle_cacti_distinct(lengths);
        MVPolynomial vol = stratum_volume(distinct_symbol_circles(k), 0, 1);
        add(r, "volume_vs_closed k=" + std::to_string(k), poly_to_json(vol),
            poly_to_json(closed));
    }
}

void suite_thm2circ(SuiteReport& r, int budget) {
    auto check_set = [&](const std::string& label, const CircleSet& c) {
        MVPolynomial closed = circle_cacti_multi(c);
        MVPolynomial vol = stratum_volume(c.as_circles(), 0, 1);
        add(r, "volume_vs_closed " + label, poly_to_json(vol), poly_to_json(closed));
    };
    check_set("1:a,b;2:c", parse_circles("1:a,b;2:c"));
    check_set("1:u,u;2:v", parse_circles("1:u,u;2:v"));
    check_set("1:l1,l2;2:s1", parse_circles("1:l1,l2;2:s1"));
    if (budget >= 120) check_set("1:l1,l2;2:s1,s2", parse_circles("1:l1,l2;2:s1,s2"));
    check_set("1:a;2:b;3:c", parse_circles("1:a;2:b;3:c"));
}

void suite_asymptotic(SuiteReport& r, int budget) {
    {
        MVPolynomial p = fit_P({1, 1, 1}, 0, 1);
        MVPolynomial expected = MVPolynomial::variable("n_1_1") + MVPolynomial::variable("n_2_1") +
                                MVPolynomial::variable("n_3_1") + MVPolynomial::constant(-2);
        add(r, "three_polygons_P", poly_to_json(p), poly_to_json(expected));
        std::vector<CircleSpec> circles = {{1, "l_1_1"}, {2, "l_2_1"}, {3, "l_3_1"}};
        add_bool(r, "three_polygons_top_part",
                 asymptotic_check(p, stratum_volume(circles, 0, 1)));
    }
    {
        MVPolynomial p = fit_P({1, 1}, 0, 2);
        add(r, "two_polygons_two_faces_degree", std::to_string(p.total_degree()),
            std::to_string(stratum_dimension(0, 2, 2)));
        std::vector<CircleSpec> circles = {{1, "l_1_1"}, {2, "l_2_1"}};
        add_bool(r, "two_polygons_two_faces_top_part",
                 asymptotic_check(p, stratum_volume(circles, 0, 2)));
    }
    {
        MVPolynomial p = fit_P({1, 1}, 0, 1);
        add(r, "two_polygons_constant_P", poly_to_json(p),
            poly_to_json(MVPolynomial::constant(1)));
    }
    if (budget >= 120) {
        MVPolynomial p = fit_P({2, 1}, 0, 1);
        std::vector<CircleSpec> circles = {{1, "l_1_1"}, {1, "l_1_2"}, {2, "l_2_1"}};
        add_bool(r, "multi_color_top_part", asymptotic_check(p, stratum_volume(circles, 0, 1)));
    }
}

void suite_matrixmodel(SuiteReport& r, int budget) {
    int max_n = budget >= 120 ? 3 : 2;
    int max_k = budget >= 120 ? 5 : 4;
    for (int N = 1; N <= max_n; ++N)
        for (int k = 2; k <= max_k; ++k) {
            auto [h, h_inv] = model_forms(N, k);
            std::string tag = " N=" + std::to_string(N) + " k=" + std::to_string(k);
            add_bool(r, "H_positive_definite" + tag, is_positive_definite(h));
            add_bool(r, "H_inv_positive_definite" + tag, is_positive_definite(h_inv));
            add_bool(r, "forms_mutually_inverse" + tag,
                     forms_mutually_inverse(h, h_inv, N, k));
        }
    {
        auto [h, h_inv] = model_forms(1, 3);
        (void)h_inv;
        std::vector<Rational> lam(h.mat.size(), 0);
        lam[0] = 1;
        lam[1] = 2;
        Rational second = wick(h, {lam, lam});
        add(r, "fourth_moment", rat_to_string(wick(h, {lam, lam, lam, lam})),
            rat_to_string(3 * second * second));
        add_bool(r, "moment_generating_identity", gaussian_shift_check(h, lam, 4));
    }
    {
        CircleSet pair = parse_circles("1:l;2:s");
        MVPolynomial f = f_series(pair, 4);
        MVPolynomial expected = MVPolynomial::constant(1);
        MVPolynomial ls = MVPolynomial::variable("l") * MVPolynomial::variable("s");
        expected += ls * Rational(1, 2);
        expected += ls * ls * Rational(1, 6);
        add(r, "single_pair_series", poly_to_json(f), poly_to_json(expected));
        add(r, "single_pair_N1_identity", poly_to_json(f_series(pair, 2)),
            poly_to_json(F_series(pair, 2).substitute("N", Rational(1))));
        add_bool(r, "single_pair_wick N=1", wick_F_check(pair, 2, 1));
        if (budget >= 120) add_bool(r, "single_pair_wick N=2", wick_F_check(pair, 2, 2));
    }
    {
        CircleSet two = parse_circles("1:l1,l2;2:s1,s2");
        MVPolynomial f = f_series(two, 2);
        add(r, "two_by_two_constant", rat_to_string(f.coefficient({})), "2/1");
        add(r, "two_by_two_l1s1", rat_to_string(f.coefficient({{"l1", 1}, {"s1", 1}})), "3/2");
        add(r, "two_by_two_N1_identity", poly_to_json(f),
            poly_to_json(F_series(two, 2).substitute("N", Rational(1))));
        if (budget >= 120) {
            MVPolynomial f4 = f_series(two, 4);
            add(r, "two_by_two_l1l1s1s1",
                rat_to_string(f4.coefficient({{"l1", 2}, {"s1", 2}})), "2/3");
            add(r, "two_by_two_N1_identity_deg4", poly_to_json(f4),
                poly_to_json(F_series(two, 4).substitute("N", Rational(1))));
        }
    }
}

}  // namespace

std::string SuiteReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back(
            {{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    j["pass"] = pass;
    return j.dump();
}

std::vector<std::string> suite_names() {
    return {"thm1polyg", "thm2polyg", "thm3polyg", "thm1circ",
            "thm2circ",  "asymptotic", "matrixmodel"};
}

SuiteReport run_suite(const std::string& name, int budget_seconds) {
    SuiteReport r;
    r.suite = name;
    if (name == "thm1polyg")
        suite_thm1polyg(r, budget_seconds);
    else if (name == "thm2polyg")
        suite_thm2polyg(r, budget_seconds);
    else if (name == "thm3polyg")
        suite_thm3polyg(r, budget_seconds);
    else if (name == "thm1circ")
        suite_thm1circ(r, budget_seconds);
    else if (name == "thm2circ")
        suite_thm2circ(r, budget_seconds);
    else if (name == "asymptotic")
        suite_asymptotic(r, budget_seconds);
    else if (name == "matrixmodel")
        suite_matrixmodel(r, budget_seconds);
    else if (name == "all") {
        for (const auto& sub : suite_names()) {
            SuiteReport part = run_suite(sub, budget_seconds);
            for (auto& c : part.checks) {
                c.name = sub + ": " + c.name;
                r.checks.push_back(c);
            }
            if (!part.pass) r.pass = false;
        }
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return r;
}

}  // namespace cacti
