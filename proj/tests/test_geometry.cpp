#include <doctest.h>

#include "amalgam/classify.hpp"
#include "amalgam/geometry.hpp"
#include "helpers.hpp"

using namespace amalgam;
using namespace amalgam::testing;

TEST_CASE("biregular ball level sizes") {
    auto b = biregular_ball(2, 3, 2);
    CHECK(b.level_sizes() == std::vector<int>{1, 2, 4});

    auto star = biregular_ball(1, 4, 2);
    CHECK(star.level_sizes() == std::vector<int>{1, 1, 3});

    auto point = biregular_ball(5, 7, 0);
    CHECK(point.size() == 1);

    // Recurrence: level 0 = 1, level 1 = m, then multiply by valence - 1.
    auto t34 = biregular_ball(3, 4, 5);
    auto ls = t34.level_sizes();
    CHECK(ls[0] == 1);
    CHECK(ls[1] == 3);
    for (std::size_t i = 1; i + 1 < ls.size(); ++i) {
        int valence = (i % 2 == 1) ? 4 : 3;
        CHECK(ls[i + 1] == ls[i] * (valence - 1));
    }
}

TEST_CASE("ball distance oracle") {
    auto b = biregular_ball(3, 3, 4);
    CHECK(b.distance(0, 0) == 0);
    for (int v = 1; v < b.size(); ++v) CHECK(b.distance(0, v) == b.depth[v]);
    int u = b.children[0][0];
    int w = b.children[0][1];
    CHECK(b.distance(u, w) == 2);
    CHECK(b.distance(b.children[u][0], b.children[w][0]) == 4);
}

TEST_CASE("size limit throws") {
    CHECK_THROWS_AS(biregular_ball(3, 3, 20, 1000), std::length_error);
}

TEST_CASE("model space types") {
    CHECK(model_space_type_of(mk(2, 2, 2, 3)) == ModelSpaceType{2, 3, 2, 1, false});
    CHECK(model_space_type_of(th({1, 1, 2, 2, 2, 3})) == ModelSpaceType{2, 2, 4, 1, false});
    CHECK(model_space_type_of(th({1, 1, 1})) == ModelSpaceType{3, 3, 0, 1, false});
}

TEST_CASE("standard representatives") {
    CHECK(standard_representative({5, 7, 2, 1, false}) == ModelSpaceType{3, 3, 1, 1, false});
    CHECK(standard_representative({2, 2, 4, 1, false}) == ModelSpaceType{2, 2, 1, 1, false});
    CHECK(standard_representative({2, 3, 0, 1, false}) == ModelSpaceType{2, 3, 0, 1, false});
    auto hyp = standard_representative({1, 4, 2, 1, false});
    CHECK(hyp.hyperbolic);
    // Idempotent.
    for (auto t : {ModelSpaceType{5, 7, 2, 1, false}, ModelSpaceType{2, 2, 4, 1, false},
                   ModelSpaceType{3, 3, 0, 1, false}}) {
        auto once = standard_representative(t);
        CHECK(standard_representative(once) == once);
    }
}

TEST_CASE("standard representative is constant on non-hyperbolic QI classes") {
    for (const auto& a : c_box())
        for (int m = 2; m <= 3; ++m) {
            auto b = mk(2, 2, m, 3);
            if (is_hyperbolic_C(a) || is_hyperbolic_C(b)) continue;
            bool same_class = qi_equivalent_C(a, b);
            bool same_rep = standard_representative(model_space_type_of(a)) ==
                            standard_representative(model_space_type_of(b));
            CHECK(same_class == same_rep);
        }
}

TEST_CASE("distortion measurement basics") {
    CHECK_THROWS_AS(measure_distortion({}), std::invalid_argument);
    auto ident = measure_distortion({{1, 1}, {2, 2}, {5, 5}});
    CHECK(ident.L == Rational{1});
    CHECK(ident.C == Rational{0});
}

TEST_CASE("line collapse map and distortion") {
    auto lc = collapse_map_line(3, 9);
    std::vector<int> img;
    for (int i = 0; i <= 8; ++i) img.push_back(lc.map(i));
    CHECK(img == std::vector<int>{0, 0, 0, 1, 1, 1, 2, 2, 2});
    CHECK(lc.map(-1) == -1);
    CHECK(lc.map(-3) == -1);
    CHECK(lc.map(-4) == -2);

    CHECK_THROWS_AS(collapse_map_line(3, 2), std::domain_error);

    auto one = collapse_map_line(1, 6);
    auto d1 = measure_distortion(one.interior_pairs());
    CHECK(d1.L == Rational{1});
    CHECK(d1.C == Rational{0});

    auto d3 = measure_distortion(lc.interior_pairs());
    CHECK(d3.L <= Rational{3});
    CHECK(d3.C <= Rational{3});
}

TEST_CASE("tree collapse structure") {
    CHECK_THROWS_AS(collapse_map_tree(3, 2), std::domain_error);

    auto tc = collapse_map_tree(1, 5);
    // s = 1 collapses nothing: quotient is the ball itself.
    CHECK(tc.qmembers.size() == static_cast<std::size_t>(tc.ball.size()));

    auto tc4 = collapse_map_tree(4, 10);
    for (const auto& members : tc4.qmembers) CHECK(members.size() <= 4);
    for (int v = 0; v < tc4.ball.size(); ++v) CHECK(tc4.path_of[v] >= 0);
    for (int val : tc4.interior_quotient_valences(4)) CHECK(val == 6);
}

TEST_CASE("tree collapse distortion and order-independence") {
    for (int s = 2; s <= 3; ++s) {
        auto fwd = collapse_map_tree(s, 4 * s, kDefaultMaxVertices, ChildOrder::Forward);
        auto rev = collapse_map_tree(s, 4 * s, kDefaultMaxVertices, ChildOrder::Reversed);
        for (auto* tc : {&fwd, &rev}) {
            auto d = measure_distortion(tc->interior_pairs(s));
            CHECK(d.L <= Rational{s});
            CHECK(d.C <= Rational{s});
            for (int val : tc->interior_quotient_valences(s)) CHECK(val == s + 2);
        }
    }
}
