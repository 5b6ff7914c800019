#include <doctest.h>

#include "amalgam/specs.hpp"
#include "helpers.hpp"

using namespace amalgam;
using namespace amalgam::testing;

TEST_CASE("normalization swaps sides so that m <= n") {
    SurfaceAmalgamSpec raw;
    raw.g = 2;
    raw.h = 3;
    raw.m = 3;
    raw.n = 2;
    auto v = validate_spec(raw);
    REQUIRE(v.ok());
    CHECK(v.spec->g == 3);
    CHECK(v.spec->h == 2);
    CHECK(v.spec->m == 2);
    CHECK(v.spec->n == 3);
}

TEST_CASE("normalization carries the curve data with its side") {
    SurfaceAmalgamSpec raw;
    raw.g = 2;
    raw.h = 3;
    raw.m = 5;
    raw.n = 1;
    raw.curve_a = CurveSpec::separating(1, 1);
    raw.curve_b = CurveSpec::non_separating();
    auto v = validate_spec(raw);
    REQUIRE(v.ok());
    CHECK(v.spec->g == 3);
    CHECK(v.spec->curve_a == CurveSpec::non_separating());
    CHECK(v.spec->curve_b == CurveSpec::separating(1, 1));
}

TEST_CASE("separating splits validate against the ambient genus") {
    SurfaceAmalgamSpec raw;
    raw.g = 2;
    raw.h = 2;
    raw.curve_a = CurveSpec::separating(1, 1);
    CHECK(validate_spec(raw).ok());

    raw.curve_a = CurveSpec::separating(0, 2);
    auto bad = validate_spec(raw);
    CHECK(!bad.ok());
    CHECK(std::count(bad.errors.begin(), bad.errors.end(), SpecError::BadSplit) == 1);

    raw.curve_a = CurveSpec::separating(1, 2);
    CHECK(!validate_spec(raw).ok());
}

TEST_CASE("split order is canonicalized to g1 <= g2") {
    SurfaceAmalgamSpec raw;
    raw.g = 3;
    raw.h = 2;
    raw.curve_a = CurveSpec::separating(2, 1);
    auto v = validate_spec(raw);
    REQUIRE(v.ok());
    CHECK(v.spec->curve_a == CurveSpec::separating(1, 2));
}

TEST_CASE("genus and winding bounds") {
    SurfaceAmalgamSpec raw;
    raw.g = 1;
    raw.h = 2;
    auto v = validate_spec(raw);
    CHECK(!v.ok());
    CHECK(std::count(v.errors.begin(), v.errors.end(), SpecError::GenusTooSmall) == 1);

    raw.g = 2;
    raw.m = 0;
    CHECK(!validate_spec(raw).ok());
}

TEST_CASE("theta validation sorts arms and enforces bounds") {
    ThetaGraphSpec raw;
    raw.arms = {3, 1, 2};
    auto v = validate_spec(raw);
    REQUIRE(v.ok());
    CHECK(v.spec->arms == std::vector<int>{1, 2, 3});
    CHECK(v.spec->linear_degree() == 1);
    CHECK(v.spec->hyperbolic_degree() == 2);

    raw.arms = {1, 2};
    auto short_v = validate_spec(raw);
    CHECK(!short_v.ok());
    CHECK(std::count(short_v.errors.begin(), short_v.errors.end(), SpecError::ArmCount) == 1);

    raw.arms = {0, 1, 2};
    auto neg = validate_spec(raw);
    CHECK(!neg.ok());
    CHECK(std::count(neg.errors.begin(), neg.errors.end(), SpecError::NonPositiveArm) == 1);
}

TEST_CASE("validation is idempotent") {
    for (const auto& s : c_box()) {
        auto again = validate_spec(s);
        REQUIRE(again.ok());
        CHECK(*again.spec == s);
    }
    for (const auto& t : w_box()) {
        auto again = validate_spec(t);
        REQUIRE(again.ok());
        CHECK(*again.spec == t);
    }
}

TEST_CASE("euler vector canonical form and serialization") {
    EulerVector v;
    v.quarters = {-2, 0, -1, 0};
    EulerVector sorted = v.sorted_desc();
    CHECK(sorted.quarters == std::vector<long long>{0, 0, -1, -2});
    CHECK(sorted.to_strings() ==
          std::vector<std::string>{"0/4", "0/4", "-1/4", "-2/4"});
    CHECK(v.sum_quarters() == -3);
}
