#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "json_io.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

using namespace cacti;

TEST_CASE("rational strings round trip") {
    CHECK(rat_to_string(Rational(10)) == "10/1");
    CHECK(rat_to_string(Rational(-3, 6)) == "-1/2");
    CHECK(rat_from_string("22/7") == Rational(22, 7));
    CHECK(rat_from_string(rat_to_string(Rational(-1234, 99))) == Rational(-1234, 99));
}

TEST_CASE("integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 7) == 0);
    CHECK(double_factorial_odd(2) == 3);   // (2m-1)!! at m=2
    CHECK(double_factorial_odd(4) == 105);
    CHECK(int_pow(3, 4) == 81);
    CHECK(rat_pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("complex rationals") {
    ComplexRational i{0, 1};
    CHECK((i * i).re == -1);
    CHECK((i * i).im == 0);
    ComplexRational z{1, 2};
    CHECK((z * ComplexRational{3, -1}).re == 5);
    CHECK((z * ComplexRational{3, -1}).im == 5);
}

TEST_CASE("polynomial arithmetic and canonical order") {
    MVPolynomial x = MVPolynomial::variable("x");
    MVPolynomial y = MVPolynomial::variable("y");
    MVPolynomial p = (x + y).pow(2);
    CHECK(p.coefficient({{"x", 2}}) == 1);
    CHECK(p.coefficient({{"x", 1}, {"y", 1}}) == 2);
    CHECK(p.total_degree() == 2);

    auto terms = p.canonical_terms();
    REQUIRE(terms.size() == 3);
    // graded lexicographic, leading first: x^2, xy, y^2
    CHECK(terms[0].first == std::vector<int>{2, 0});
    CHECK(terms[1].first == std::vector<int>{1, 1});
    CHECK(terms[2].first == std::vector<int>{0, 2});

    CHECK((p - p).is_zero());
    CHECK(p.substitute("x", Rational(1)).substitute("y", Rational(2)).as_constant() == 9);
    CHECK(p.evaluate({{"x", Rational(3)}, {"y", Rational(-3)}}) == 0);
}

TEST_CASE("laurent exponents are reserved for N") {
    MVPolynomial n = MVPolynomial::monomial("N", 1);
    MVPolynomial inv = n.pow(-2);
    CHECK(inv * n.pow(2) == MVPolynomial::constant(1));
    CHECK_THROWS(MVPolynomial::variable("x").pow(-1));
}

TEST_CASE("truncated exponential") {
    MVPolynomial t = MVPolynomial::variable("t");
    MVPolynomial e = truncated_exp(t, 3);
    CHECK(e.coefficient({}) == 1);
    CHECK(e.coefficient({{"t", 2}}) == Rational(1, 2));
    CHECK(e.coefficient({{"t", 3}}) == Rational(1, 6));
    CHECK(e.coefficient({{"t", 4}}) == 0);
    CHECK_THROWS(truncated_exp(t + MVPolynomial::constant(1), 3));
}

TEST_CASE("monomial division") {
    MVPolynomial x = MVPolynomial::variable("x");
    MVPolynomial y = MVPolynomial::variable("y");
    MVPolynomial p = x * y + x * x * y;
    MVPolynomial q = p.divide_by_monomial({{"x", 1}, {"y", 1}});
    CHECK(q == MVPolynomial::constant(1) + x);
    CHECK_THROWS(p.divide_by_monomial({{"x", 2}}));
}

TEST_CASE("top homogeneous part and renaming") {
    MVPolynomial x = MVPolynomial::variable("x");
    MVPolynomial y = MVPolynomial::variable("y");
    MVPolynomial p = x * x + x * y + y + MVPolynomial::constant(5);
    MVPolynomial top = p.top_homogeneous_part();
    CHECK(top == x * x + x * y);
    MVPolynomial renamed = top.rename_vars({{"x", "a"}, {"y", "b"}});
    CHECK(renamed.coefficient({{"a", 1}, {"b", 1}}) == 1);
}

TEST_CASE("exact linear solving") {
    // x + 2y = 5, 3x - y = 1 -> x = 1, y = 2
    RationalMatrix a = {{1, 2}, {3, -1}};
    auto sol = solve_exact(a, {Rational(5), Rational(1)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 1);
    CHECK((*sol)[1] == 2);

    // inconsistent system
    RationalMatrix b = {{1, 1}, {2, 2}};
    CHECK_FALSE(solve_exact(b, {Rational(1), Rational(3)}).has_value());
}

TEST_CASE("exact inversion") {
    RationalMatrix a = {{2, 1}, {1, 1}};
    auto inv = invert_exact(a);
    REQUIRE(inv.has_value());
    CHECK((*inv)[0][0] == 1);
    CHECK((*inv)[0][1] == -1);
    CHECK((*inv)[1][0] == -1);
    CHECK((*inv)[1][1] == 2);
    CHECK_FALSE(invert_exact(RationalMatrix{{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("leading minors decide positivity") {
    CHECK(leading_minors_positive({{2, 0}, {0, Rational(1, 3)}}));
    CHECK_FALSE(leading_minors_positive({{1, 0}, {0, -1}}));
    CHECK_FALSE(leading_minors_positive({{0, 1}, {1, 0}}));
}

TEST_CASE("interpolation recovers polynomials") {
    // f(x, y) = x^2 + 3y - 2
    std::vector<std::pair<std::vector<long>, Rational>> samples;
    for (long x = 0; x <= 2; ++x)
        for (long y = 0; y <= 2; ++y)
            samples.push_back({{x, y}, Rational(x * x + 3 * y - 2)});
    MVPolynomial p = interpolate({"x", "y"}, samples, 2);
    CHECK(p.coefficient({{"x", 2}}) == 1);
    CHECK(p.coefficient({{"y", 1}}) == 3);
    CHECK(p.coefficient({}) == -2);
    // degree bound 1 cannot fit the same data
    CHECK_THROWS(interpolate({"x", "y"}, samples, 1));
}

TEST_CASE("polynomial json round trip") {
    MVPolynomial x = MVPolynomial::variable("x");
    MVPolynomial y = MVPolynomial::variable("y");
    MVPolynomial p = x * y * Rational(3, 2) - y.pow(3) + MVPolynomial::constant(Rational(1, 7));
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_to_json(MVPolynomial::constant(0)) == "{\"terms\":[],\"vars\":[]}");
}

TEST_CASE("circle grammar") {
    CircleSet c = parse_circles("1:l1,l2;2:s1");
    REQUIRE(c.k() == 2);
    CHECK(c.lengths[0] == std::vector<std::string>{"l1", "l2"});
    CHECK(c.lengths[1] == std::vector<std::string>{"s1"});
    CHECK_NOTHROW(parse_circles("1:2;2:3/4"));
    CHECK_THROWS(parse_circles("1:l1;3:l2"));     // colors must be 1..k
    CHECK_THROWS(parse_circles("1:L1;2:l2"));     // bad symbol
    CHECK_THROWS(parse_circles("1:l1;1:l2"));     // duplicate color
    CHECK_THROWS(parse_circles(""));
}
