#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permutation.hpp"

using namespace cacti;

TEST_CASE("passport grammar") {
    Passport x = parse_passport("2,2;3");
    REQUIRE(x.k() == 2);
    CHECK(x.colors[0].parts == std::vector<int>{2, 2});
    CHECK(x.colors[1].parts == std::vector<int>{3});
    CHECK(x.to_string() == "2,2;3");
    CHECK_THROWS(parse_passport(""));
    CHECK_THROWS(parse_passport("2,;3"));
    CHECK_THROWS(parse_passport("1;2"));   // parts must be >= 2
    CHECK_THROWS(parse_passport("a;2"));
}

TEST_CASE("permutation products compose left to right on points") {
    // (a*b)(x) = a(b(x))
    Permutation a({1, 0, 2});  // swap 0,1
    Permutation b({0, 2, 1});  // swap 1,2
    Permutation ab = a * b;
    CHECK(ab(1) == 2);
    CHECK(ab(2) == 0);
    CHECK(ab(0) == 1);
    CHECK(a * a.inverse() == Permutation::identity(3));
}

TEST_CASE("cycle structure") {
    Permutation c = Permutation::forward_cycle(5, 5);
    CHECK(c.cycle_count() == 1);
    CHECK(cycle_type(c).parts == std::vector<int>{5});
    Permutation d = Permutation::forward_cycle(5, 3);  // (0 1 2), two fixed points
    CHECK(d.cycle_count() == 3);
    CHECK(cycle_type(d).parts == std::vector<int>{3, 1, 1});
    CHECK(d.fixed_points() == 2);
}

TEST_CASE("transitivity") {
    MonodromyTuple t{4, {Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})}};
    CHECK_FALSE(is_transitive(t));
    t.sigma.push_back(Permutation({0, 2, 1, 3}));
    CHECK(is_transitive(t));
}

TEST_CASE("euler data on three 3-cycles") {
    // three copies of (0 1 2): transitive, chi = 2 - 2g gives genus 1 and
    // sigma_inf = identity gives 3 faces
    Permutation c = Permutation::forward_cycle(3, 3);
    MonodromyTuple t{3, {c, c, c}};
    EulerData e = euler_data(t);
    CHECK(e.genus == 1);
    CHECK(e.faces == 3);
}

TEST_CASE("euler data on a planar factorization") {
    // (0 1) * (1 2) = (0 1 2): a path-like tree of two digons
    Permutation a({1, 0, 2});
    Permutation b({0, 2, 1});
    MonodromyTuple t{3, {b, a}};  // b then a multiplies to the 3-cycle
    REQUIRE((a * b)(0) == 1);
    EulerData e = euler_data(t);
    CHECK(e.genus == 0);
    CHECK(e.faces == 1);
}

TEST_CASE("euler data rejects non-transitive tuples") {
    Permutation id = Permutation::identity(4);
    MonodromyTuple t{4, {id, id}};
    CHECK_THROWS(euler_data(t));
}

TEST_CASE("permutations of a cycle type") {
    // transpositions in S_4: 6 of them
    auto transpositions = permutations_of_cycle_type(4, Partition({2, 1, 1}));
    CHECK(transpositions.size() == 6);
    // count matches n!/z_lambda
    Partition lambda({2, 2});
    auto perms = permutations_of_cycle_type(4, lambda);
    CHECK(BigInt(perms.size()) * centralizer_size(lambda) == factorial(4));
    for (const auto& p : perms) CHECK(cycle_type(p) == lambda);
    // emitted sorted and unique
    for (size_t i = 1; i < perms.size(); ++i) CHECK(perms[i - 1].images < perms[i].images);
}

TEST_CASE("centralizer sizes") {
    CHECK(centralizer_size(Partition({3})) == 3);
    CHECK(centralizer_size(Partition({2, 2})) == 8);
    CHECK(centralizer_size(Partition({1, 1, 1})) == 6);
}

TEST_CASE("passport helpers") {
    CHECK(passport_aut(Partition({2, 2})) == 2);
    CHECK(passport_aut(Partition({3, 2, 2})) == 2);
    CHECK(passport_aut(Partition({4})) == 1);

    // degree of a cactus passport: 2 - 2g - p + sum(n_i - p_i) at g=0, p=1
    CHECK(constellation_degree(parse_passport("3;4;5"), 0, 1) == 10);
    CHECK(constellation_degree(parse_passport("2,2;3"), 0, 1) == 5);
    CHECK(constellation_degree(parse_passport("2,2"), 0, 1) == 3);
}

TEST_CASE("padded types") {
    CHECK(padded_type(Partition({3}), 5).parts == std::vector<int>{3, 1, 1});
    CHECK(padded_type(Partition({2, 2}), 4).parts == std::vector<int>{2, 2});
    CHECK_THROWS(padded_type(Partition({4}), 3));
}
