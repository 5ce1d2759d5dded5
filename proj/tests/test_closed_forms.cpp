#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "closed_forms.hpp"
#include "factorization.hpp"
#include "json_io.hpp"

using namespace cacti;

TEST_CASE("distinct color cactus counts") {
    CHECK(cacti_distinct({3, 4, 5}) == 10);
    CHECK(cacti_distinct({2, 2, 2, 2}) == 25);
    CHECK(cacti_distinct({5}) == Rational(1, 5));
    CHECK(cacti_distinct({4, 7}) == 1);

    MVPolynomial p = cacti_distinct_symbolic(3);
    CHECK(p == MVPolynomial::variable("n_1_1") + MVPolynomial::variable("n_2_1") +
                   MVPolynomial::variable("n_3_1") + MVPolynomial::constant(-2));
}

TEST_CASE("passport formula, corrected variant") {
    CHECK(cacti_passport(parse_passport("3;4;5")) == 10);
    CHECK(cacti_passport(parse_passport("2,2;3")) == 1);
    CHECK(cacti_passport(parse_passport("2,2")) == 0);
    // specializes to the distinct-color count at one polygon per color
    CHECK(cacti_passport(parse_passport("2;3;4")) == cacti_distinct({2, 3, 4}));
}

TEST_CASE("passport formula, printed variant disagrees by design") {
    Rational printed = cacti_passport(parse_passport("2,2;3"), PassportVariant::printed);
    CHECK(printed == 0);
    CHECK(printed != weighted_cactus_count(parse_passport("2,2;3")));
    // and it breaks the one-polygon-per-color specialization
    CHECK(cacti_passport(parse_passport("3;4;5"), PassportVariant::printed) != 10);
}

TEST_CASE("corrected variant matches the oracle exhaustively") {
    // all passports on up to two colors with small excess
    std::vector<Partition> pool = {Partition({2}), Partition({3}), Partition({4}),
                                   Partition({2, 2}), Partition({3, 2})};
    for (size_t i = 0; i < pool.size(); ++i) {
        Passport single({pool[i]});
        CHECK(cacti_passport(single) == weighted_cactus_count(single));
        for (size_t j = i; j < pool.size(); ++j) {
            Passport x({pool[i], pool[j]});
            CHECK(cacti_passport(x) == weighted_cactus_count(x));
        }
    }
}

TEST_CASE("one-n closed forms") {
    CHECK(constellations_1n_closed(3, 2) == 4);
    CHECK(constellations_1n_closed(2, 9) == 1);
    CHECK(constellations_1n_closed(4, 3) == 27);

    CHECK(constellations_1n_sum({2, 2, 2}) == 4);
    CHECK(constellations_1n_reduced(3, 5) == 10);
    CHECK(constellations_1n_reduced(5, 7) == 1372);

    // the double sum depends only on k and the total
    CHECK(constellations_1n_sum({2, 2, 4}) == constellations_1n_sum({2, 3, 3}));
    CHECK(constellations_1n_sum({2, 5, 5}) == constellations_1n_sum({4, 4, 4}));

    // all three forms agree with the oracle on a nontrivial case
    std::vector<int> sizes = {3, 2, 4};
    long n = 3 + 2 + 4 - 3 - 1;
    CHECK(weighted_1n_count(sizes) == Rational(constellations_1n_closed(3, n)));
    CHECK(constellations_1n_sum(sizes) == Rational(constellations_1n_closed(3, n)));
    CHECK(constellations_1n_reduced(3, n) == Rational(constellations_1n_closed(3, n)));
}

TEST_CASE("circle cactus volumes") {
    CHECK(circle_cacti_distinct({"l1", "l2"}) == MVPolynomial::constant(1));
    MVPolynomial sum = MVPolynomial::variable("l1") + MVPolynomial::variable("l2") +
                       MVPolynomial::variable("l3");
    CHECK(circle_cacti_distinct({"l1", "l2", "l3"}) == sum);
    CHECK(circle_cacti_distinct({"l1", "l2", "l3", "l4"}).total_degree() == 2);

    CircleSet c;
    c.lengths = {{"a", "b"}, {"c"}};
    CHECK(circle_cacti_multi(c) == MVPolynomial::variable("c"));

    CircleSet eq;
    eq.lengths = {{"u", "u"}, {"v"}};
    CHECK(circle_cacti_multi(eq) == MVPolynomial::variable("v") * Rational(1, 2));

    // multiplicity one reduces to the distinct-color formula
    CircleSet ones;
    ones.lengths = {{"l1"}, {"l2"}, {"l3"}};
    CHECK(circle_cacti_multi(ones) == circle_cacti_distinct({"l1", "l2", "l3"}));
}

TEST_CASE("volume degree matches the stratum dimension") {
    CircleSet c;
    c.lengths = {{"l1", "l2"}, {"s1"}};
    CHECK(circle_cacti_multi(c).total_degree() == stratum_dimension(0, 3, 1));
}

TEST_CASE("cayley numbers") {
    CHECK(cayley(1) == 1);
    CHECK(cayley(2) == 1);
    CHECK(cayley(3) == 3);
    CHECK(cayley(5) == 125);
}

TEST_CASE("stratum dimension") {
    CHECK(stratum_dimension(0, 4, 1) == 2);
    CHECK(stratum_dimension(0, 2, 2) == 2);
    CHECK(stratum_dimension(1, 1, 1) == 3);
}

TEST_CASE("interpolated counting polynomials") {
    MVPolynomial p = fit_P({1, 1, 1}, 0, 1);
    MVPolynomial expected = MVPolynomial::variable("n_1_1") + MVPolynomial::variable("n_2_1") +
                            MVPolynomial::variable("n_3_1") + MVPolynomial::constant(-2);
    CHECK(p == expected);

    std::vector<CircleSpec> circles = {{1, "l_1_1"}, {2, "l_2_1"}, {3, "l_3_1"}};
    CHECK(asymptotic_check(p, stratum_volume(circles, 0, 1)));

    CHECK(fit_P({1, 1}, 0, 1) == MVPolynomial::constant(1));
}

TEST_CASE("two polygons with two faces") {
    MVPolynomial p = fit_P({1, 1}, 0, 2);
    CHECK(p.total_degree() == 2);
    std::vector<CircleSpec> circles = {{1, "l_1_1"}, {2, "l_2_1"}};
    CHECK(asymptotic_check(p, stratum_volume(circles, 0, 2)));
}
