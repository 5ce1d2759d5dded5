#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "factorization.hpp"
#include "parallel.hpp"
#include "plane_cactus.hpp"
#include "topology.hpp"

using namespace cacti;

TEST_CASE("weighted cactus counts") {
    CHECK(weighted_cactus_count(parse_passport("2;2")) == 1);
    CHECK(weighted_cactus_count(parse_passport("2;2;2")) == 4);
    CHECK(weighted_cactus_count(parse_passport("2,2;3")) == 1);
    CHECK(weighted_cactus_count(parse_passport("3;4;5")) == 10);
    CHECK(weighted_cactus_count(parse_passport("5")) == Rational(1, 5));
    CHECK(weighted_cactus_count(parse_passport("2,2")) == 0);
}

TEST_CASE("weighted constellation counts") {
    CHECK(weighted_constellation_count(parse_passport("3;4;5"), 0, 1) == 10);
    CHECK(weighted_constellation_count(parse_passport("2;2"), 0, 2) == Rational(1, 2));
    CHECK(weighted_constellation_count(parse_passport("2"), 0, 1) == Rational(1, 2));
}

TEST_CASE("one-n constellation counts") {
    CHECK(weighted_1n_count({2, 2, 2}) == 4);
    CHECK(weighted_1n_count({3, 3, 3}) == 10);
    CHECK(weighted_1n_count({2, 2}) == 1);
    CHECK_THROWS(weighted_1n_count({2}));
}

TEST_CASE("independent of thread count") {
    set_thread_count(1);
    Rational one = weighted_cactus_count(parse_passport("2;3;4"));
    set_thread_count(4);
    Rational four = weighted_cactus_count(parse_passport("2;3;4"));
    set_thread_count(0);
    CHECK(one == four);
    CHECK(one == 7);  // n^{k-2} with n = 7
}

TEST_CASE("plane cactus enumeration") {
    CHECK(enumerate_plane_cacti({2, 2}).size() == 1);
    CHECK(enumerate_plane_cacti({2, 2, 2}).size() == 4);
    CHECK(enumerate_plane_cacti({3, 4, 5}).size() == 10);
    CHECK(enumerate_plane_cacti({2, 2, 2, 2}).size() == 25);
}

TEST_CASE("enumeration carries trivial symmetries for distinct colors") {
    for (const auto& c : enumerate_plane_cacti({2, 3, 4})) CHECK(c.symmetry_order() == 1);
}

TEST_CASE("merge bijection round trip and image size") {
    for (const std::vector<int>& sizes :
         {std::vector<int>{2, 2}, {2, 2, 2}, {3, 4, 5}, {2, 2, 2, 2}, {2, 2, 3}}) {
        auto all = enumerate_plane_cacti(sizes);
        std::set<std::vector<std::vector<int>>> images;
        int before = 0, after = 0;
        for (const auto& c : all) {
            MarkedPolygon m = encode_cactus(c);
            before = c.vertex_count();
            after = m.size;
            images.insert(m.canonical().marks);
            CHECK(decode_cactus(m, sizes) == c);
        }
        CHECK(images.size() == all.size());
        CHECK(before == after);  // merging preserves the vertex count
    }
}

TEST_CASE("decode validates its input") {
    MarkedPolygon m;
    m.size = 4;
    m.marks.resize(4);
    CHECK_THROWS(decode_cactus(m, {2, 2, 2}));  // missing marks
    m.marks[0] = {2, 3};
    CHECK_NOTHROW(decode_cactus(m, {2, 2, 2}));
    CHECK_THROWS(decode_cactus(m, {2, 2}));     // size mismatch
}

TEST_CASE("two circles yield one type per face count") {
    std::vector<CircleSpec> circles = {{1, "l"}, {2, "s"}};
    TypeFilter f;
    f.genus = 0;
    f.faces = 1;
    auto types = enumerate_topological_types(circles, f);
    REQUIRE(types.size() == 1);  // figure-eight
    CHECK(types[0].sym == 1);
    CHECK(types[0].total_contacts() == 2);
    CHECK(type_volume(types[0]) == MVPolynomial::constant(1));

    f.faces = 2;
    types = enumerate_topological_types(circles, f);
    REQUIRE(types.size() == 1);  // two tangencies
    CHECK(types[0].sym == 2);
    MVPolynomial expected =
        MVPolynomial::variable("l") * MVPolynomial::variable("s") * Rational(1, 2);
    CHECK(type_volume(types[0]) == expected);
}

TEST_CASE("three circle chains") {
    std::vector<CircleSpec> circles = {{1, "l1"}, {2, "l2"}, {3, "l3"}};
    TypeFilter f;
    f.genus = 0;
    f.faces = 1;
    auto types = enumerate_topological_types(circles, f);
    REQUIRE(types.size() == 3);  // one per choice of middle circle
    MVPolynomial total = MVPolynomial::constant(0);
    for (const auto& t : types) {
        CHECK(t.sym == 1);
        total += type_volume(t);
    }
    MVPolynomial expected = MVPolynomial::variable("l1") + MVPolynomial::variable("l2") +
                            MVPolynomial::variable("l3");
    CHECK(total == expected);
}

TEST_CASE("face tracing satisfies the dimension relation") {
    std::vector<CircleSpec> circles = {{1, "a"}, {2, "b"}, {3, "c"}};
    for (int p = 1; p <= 2; ++p)
        for (int g = 0; g <= 1; ++g) {
            TypeFilter f;
            f.genus = g;
            f.faces = p;
            for (const auto& t : enumerate_topological_types(circles, f)) {
                CHECK(t.components() == 1);
                CHECK(t.component_genus[0] == g);
                CHECK(t.total_faces() == p);
                // arcs minus circles equals the stratum dimension
                CHECK(t.total_contacts() - 3 == 4 * g - 4 + 3 + 2 * p);
            }
        }
}

TEST_CASE("types serialize to json") {
    std::vector<CircleSpec> circles = {{1, "l"}, {2, "s"}};
    TypeFilter f;
    f.genus = 0;
    f.faces = 1;
    auto types = enumerate_topological_types(circles, f);
    REQUIRE(types.size() == 1);
    std::string j = types[0].to_json();
    CHECK(j.find("\"matching\"") != std::string::npos);
    CHECK(j.find("\"sym\":1") != std::string::npos);
}

TEST_CASE("interchangeable circles divide the volume") {
    std::vector<CircleSpec> circles = {{1, "u"}, {1, "u"}, {2, "v"}};
    MVPolynomial vol = stratum_volume(circles, 0, 1);
    MVPolynomial expected = MVPolynomial::variable("v") * Rational(1, 2);
    CHECK(vol == expected);
}
