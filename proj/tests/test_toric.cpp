#include "discpot/toric.hpp"
#include "doctest.h"

using namespace discpot;

namespace {

ToricCYData kp2() {
    return build_toric_data({{0, 0}, {1, 0}, {0, 1}, {-1, -1}}, {0, 1, 2});
}

}  // namespace

TEST_CASE("local plane combinatorics") {
    ToricCYData d = kp2();
    CHECK(d.n == 3);
    CHECK(d.m() == 4);
    CHECK(d.generators == std::vector<int>{3});
    // v_4 = 3 v_1 - v_2 - v_3 on the height-1 lift.
    CHECK(d.a_matrix[3] == std::vector<long>{3, -1, -1});
    // D . C = (-3, 1, 1, 1): the anticanonical degree of the line in P^2.
    CHECK(d.pairing[0][0] == -3);
    CHECK(d.pairing[1][0] == 1);
    CHECK(d.pairing[2][0] == 1);
    CHECK(d.pairing[3][0] == 1);
    CHECK(d.kahler_names == std::vector<std::string>{"q"});
}

TEST_CASE("local 3-space pairing") {
    ToricCYData d = build_toric_data(
        {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, {0, 1, 2, 3});
    CHECK(d.pairing[0][0] == -4);
    for (int j = 1; j <= 4; ++j) CHECK(d.pairing[j][0] == 1);
}

TEST_CASE("affine space has no curve classes") {
    ToricCYData d = build_toric_data({{0, 0}, {1, 0}, {0, 1}}, {0, 1, 2});
    CHECK(d.num_generators() == 0);
    CHECK(d.kahler_names.empty());
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(build_toric_data({{0, 0}, {2, 0}, {0, 1}}, {0, 1, 2}), ToricError);
    CHECK_THROWS_AS(build_toric_data({{0, 0}, {1, 0}, {1, 0}}, {0, 1, 2}), ToricError);
    CHECK_THROWS_AS(build_toric_data({{0, 0}, {1, 0}, {0, 1}}, {0, 1}), ToricError);
    CHECK_THROWS_AS(build_toric_data({{0, 0}, {1, 0}, {0, 1}}, {0, 1, 5}), ToricError);
}

TEST_CASE("frame validation and coordinates") {
    ToricCYData d = kp2();
    Frame inner{0, {{1, 0}, {0, 1}}};
    validate_frame(d, inner);
    CHECK(frame_coordinates(d, inner, 3) == std::vector<long>{-1, -1});

    Frame outer{2, {{1, -1}, {0, -1}}};
    validate_frame(d, outer);
    CHECK(frame_coordinates(d, outer, 0) == std::vector<long>{0, 1});
    CHECK(frame_coordinates(d, outer, 1) == std::vector<long>{1, 0});
    CHECK(frame_coordinates(d, outer, 2) == std::vector<long>{0, 0});
    CHECK(frame_coordinates(d, outer, 3) == std::vector<long>{-1, 3});

    CHECK_THROWS_AS(validate_frame(d, Frame{3, {{1, 0}, {0, 1}}}), ToricError);
    CHECK_THROWS_AS(validate_frame(d, Frame{0, {{2, 0}, {0, 1}}}), ToricError);
}

TEST_CASE("effective class enumeration") {
    ToricCYData d = kp2();
    auto classes = enumerate_effective(d, 5);
    CHECK(classes.size() == 6);
    CHECK(classes[0].degree == 0);
    CHECK(classes[5].multiplicities == std::vector<int>{5});
    EffectiveClass alpha{{2}, 2};
    CHECK(pair_divisor(d, 0, alpha) == -6);
    CHECK(pair_divisor(d, 1, alpha) == 2);
}
