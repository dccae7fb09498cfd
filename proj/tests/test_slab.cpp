#include "discpot/geometries.hpp"
#include "discpot/slab.hpp"
#include "doctest.h"

using namespace discpot;

namespace {

Truncation trunc(int total, int window, std::map<std::string, int> caps = {}) {
    Truncation t;
    t.small_total_max = total;
    t.z_window = window;
    t.per_small_max = std::move(caps);
    return t;
}

}  // namespace

TEST_CASE("affine space slab function") {
    GeometryCase g = builtin_geometry("c3");
    SlabFunction f = slab_function(g.data, g.frame, trunc(3, 3));
    TruncatedSeries expect = TruncatedSeries::constant(f.series.spec(), f.series.trunc(), 1);
    expect = expect + TruncatedSeries::variable(f.series.spec(), f.series.trunc(), "z1");
    expect = expect + TruncatedSeries::variable(f.series.spec(), f.series.trunc(), "z2");
    CHECK(f.series == expect);
}

TEST_CASE("inner brane slab of the local plane") {
    GeometryCase g = builtin_geometry("kp2-inner");
    SlabFunction f = slab_function(g.data, g.frame, trunc(4, 4, {{"uv", 1}}));
    // f = (1 + delta(q)) + z1 + z2 + q / (z1 z2)
    CHECK(f.series.coeff_named({{"z1", 1}}) == 1);
    CHECK(f.series.coeff_named({{"z2", 1}}) == 1);
    CHECK(f.series.coeff_named({{"q", 1}, {"z1", -1}, {"z2", -1}}) == 1);
    CHECK(f.series.coeff_named({{"q", 1}}) == -2);
    CHECK(f.series.coeff_named({{"q", 2}}) == 5);
    CHECK(f.series.coeff_named({{"q", 3}}) == -32);
    CHECK(f.series.coeff_named({{"uv", 1}}) == 0);
    CHECK(small_free_part(f.series).terms().size() == 3);

    REQUIRE(f.provenance.size() == 4);
    CHECK(f.provenance[3].w == std::vector<long>{-1, -1});
    CHECK(f.provenance[3].q_charge == std::vector<int>{1});
    CHECK(f.provenance[0].q_charge.empty());
}

TEST_CASE("outer brane slab of the local plane") {
    GeometryCase g = builtin_geometry("kp2-outer");
    SlabFunction f = slab_function(g.data, g.frame, trunc(4, 4, {{"uv", 1}}));
    // f = 1 + z1 + (1 + delta(q)) z2 + q z2^3 / z1
    CHECK(f.series.coeff_named({{"z2", 1}}) == 1);
    CHECK(f.series.coeff_named({{"q", 1}, {"z2", 1}}) == -2);
    CHECK(f.series.coeff_named({{"q", 1}, {"z1", -1}, {"z2", 3}}) == 1);
    TruncatedSeries qfree = small_free_part(f.series);
    CHECK(qfree.constant_term() == 1);
    CHECK(qfree.terms().size() == 3);
}

TEST_CASE("slab construction rejects bad inputs") {
    GeometryCase g = builtin_geometry("kp2-outer");
    // The window cannot hold w = (-1, 3).
    CHECK_THROWS_AS(slab_function(g.data, g.frame, trunc(4, 2)), ToricError);
    // A frame flipping z1 breaks the 1 + z1 + ... shape.
    Frame flipped{0, {{-1, 0}, {0, 1}}};
    try {
        slab_function(g.data, flipped, trunc(4, 4));
        CHECK(false);
    } catch (const ToricError& e) {
        CHECK(std::string(e.what()).find("unsupported framing") != std::string::npos);
    }
}
