#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "json_io.hpp"
#include "matrix_model.hpp"

using namespace cacti;

TEST_CASE("state space dimensions") {
    CHECK(StateSpace(1, 2).dim() == 2);
    CHECK(StateSpace(1, 3).dim() == 3);
    CHECK(StateSpace(2, 2).dim() == 8);
    CHECK(StateSpace(3, 4).dim() == 36);
    CHECK_THROWS(StateSpace(1, 1));
}

TEST_CASE("N=1 k=2 model in coordinates") {
    auto [h, h_inv] = model_forms(1, 2);
    // E = {(x+iy, x-iy)}; both forms are diag(2,2) on (x, y)
    REQUIRE(h.mat.size() == 2);
    CHECK(h.mat[0][0] == 2);
    CHECK(h.mat[1][1] == 2);
    CHECK(h.mat[0][1] == 0);
    CHECK(h_inv.mat[0][0] == 2);
    CHECK(h_inv.mat[1][1] == 2);
}

TEST_CASE("model forms are positive definite and mutually inverse") {
    for (int N = 1; N <= 2; ++N)
        for (int k = 2; k <= 4; ++k) {
            auto [h, h_inv] = model_forms(N, k);
            CHECK(is_positive_definite(h));
            CHECK(is_positive_definite(h_inv));
            CHECK(forms_mutually_inverse(h, h_inv, N, k));
        }
}

TEST_CASE("positivity test rejects indefinite forms") {
    QuadForm q;
    q.mat = {{1, 0}, {0, -1}};
    CHECK_FALSE(is_positive_definite(q));
}

TEST_CASE("wick moments") {
    auto [h, h_inv] = model_forms(1, 3);
    (void)h_inv;
    std::vector<Rational> lam(h.mat.size(), 0);
    lam[0] = 1;
    lam[1] = Rational(1, 2);
    lam[2] = -2;
    Rational second = wick(h, {lam, lam});
    CHECK(wick(h, {lam, lam, lam}) == 0);
    CHECK(wick(h, {lam, lam, lam, lam}) == 3 * second * second);
    std::vector<std::vector<Rational>> eight(8, lam);
    CHECK(wick(h, eight) == Rational(double_factorial_odd(4)) * rat_pow(second, 4));
}

TEST_CASE("complex entry moments at N=1 k=2") {
    StateSpace ss(1, 2);
    auto [h, h_inv] = model_forms(1, 2);
    (void)h_inv;
    auto a1 = ss.entry_form(1, 0, 0);  // x + iy
    auto a2 = ss.entry_form(2, 0, 0);  // x - iy
    CHECK(wick_complex(h, {a1, a1}) == ComplexRational{0, 0});
    CHECK(wick_complex(h, {a2, a2}) == ComplexRational{0, 0});
    CHECK(wick_complex(h, {a1, a2}) == ComplexRational{1, 0});
    CHECK(wick_complex(h, {a1, a1, a2, a2}) == ComplexRational{2, 0});
}

TEST_CASE("moment generating identity") {
    auto [h, h_inv] = model_forms(1, 2);
    (void)h_inv;
    std::vector<Rational> lam = {1, 1};
    CHECK(gaussian_shift_check(h, lam, 4));
    std::vector<Rational> zero = {0, 0};
    CHECK(gaussian_shift_check(h, zero, 3));
}

TEST_CASE("inclusion-exclusion terms for one circle per color") {
    CircleSet pair = parse_circles("1:l;2:s");
    auto terms = f_closed(pair);
    REQUIRE(terms.size() == 4);
    // +e^{ls}, -1, -1, +1
    int plus_ls = 0, constant_sum = 0;
    for (const auto& [sign, expo] : terms) {
        if (expo.is_zero())
            constant_sum += sign;
        else {
            CHECK(sign == 1);
            CHECK(expo == MVPolynomial::variable("l") * MVPolynomial::variable("s"));
            ++plus_ls;
        }
    }
    CHECK(plus_ls == 1);
    CHECK(constant_sum == -1);
}

TEST_CASE("f series for one circle per color") {
    CircleSet pair = parse_circles("1:l;2:s");
    MVPolynomial f = f_series(pair, 4);
    MVPolynomial ls = MVPolynomial::variable("l") * MVPolynomial::variable("s");
    CHECK(f == MVPolynomial::constant(1) + ls * Rational(1, 2) + ls * ls * Rational(1, 6));
    CHECK_THROWS(f_series(parse_circles("1:2;2:s"), 2));   // numeric length
    CHECK_THROWS(f_series(parse_circles("1:u,u;2:v"), 2)); // repeated symbol
}

TEST_CASE("f series of the 2x2 set matches the known coefficients") {
    CircleSet two = parse_circles("1:l1,l2;2:s1,s2");
    MVPolynomial f = f_series(two, 2);
    CHECK(f.coefficient({}) == 2);
    for (const char* l : {"l1", "l2"})
        for (const char* s : {"s1", "s2"})
            CHECK(f.coefficient({{l, 1}, {s, 1}}) == Rational(3, 2));
    MVPolynomial f4 = f_series(two, 4);
    CHECK(f4.coefficient({{"l1", 2}, {"s1", 2}}) == Rational(2, 3));
    CHECK(f4.coefficient({{"l1", 1}, {"l2", 1}, {"s1", 2}}) == 1);
    CHECK(f4.coefficient({{"l1", 2}, {"s1", 1}, {"s2", 1}}) == 1);
    CHECK(f4.coefficient({{"l1", 1}, {"l2", 1}, {"s1", 1}, {"s2", 1}}) == Rational(3, 2));
}

TEST_CASE("F series grades by N") {
    CircleSet pair = parse_circles("1:l;2:s");
    MVPolynomial F = F_series(pair, 2);
    // the one-tangency type contributes N^2, the two-tangency sphere (ls/2)N^2
    CHECK(F.coefficient({{"N", 2}}) == 1);
    CHECK(F.coefficient({{"N", 2}, {"l", 1}, {"s", 1}}) == Rational(1, 2));
    CHECK(F.substitute("N", Rational(1)) == f_series(pair, 2));
}

TEST_CASE("N=1 identity for the 2x2 set") {
    CircleSet two = parse_circles("1:l1,l2;2:s1,s2");
    CHECK(F_series(two, 2).substitute("N", Rational(1)) == f_series(two, 2));
}

TEST_CASE("wick expansion reproduces the type sum") {
    CircleSet pair = parse_circles("1:l;2:s");
    CHECK(wick_F_check(pair, 2, 1));
    CHECK(wick_F_check(pair, 2, 2));
    CircleSet two = parse_circles("1:l1,l2;2:s1,s2");
    CHECK(wick_F_check(two, 1, 1));
}
