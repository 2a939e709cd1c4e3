#include "chowforge/selfcheck.hpp"

#include "doctest.h"

using namespace chowforge;

TEST_CASE("Macaulay oracle") {
    RingPtr R = RingBuilder().vars({"x", "y"}).build();
    std::vector<Polynomial> g{R->parse("x^2 - y"), R->parse("x*y - 1")};
    CHECK(macaulay_member(g, R->parse("x^3 - x*y"), 3));
    CHECK_FALSE(macaulay_member(g, R->parse("x"), 4));
    CHECK_FALSE(macaulay_member(g, R->parse("x^3 - x*y"), 2));
    // y^2 - x = y(x^2 - y) - x(xy - 1) ... needs degree 3
    CHECK(macaulay_member(g, R->parse("y^2 - x"), 3));
    CHECK(Ideal(R, g).contains(R->parse("y^2 - x")));
}

TEST_CASE("engine self-check cases pass") {
    auto rep = run_cases(engine_cases(), RunOptions{});
    for (const auto& r : rep.records) CHECK_MESSAGE(r.verdict == Verdict::Pass, r.case_id << ": " << r.witness);
}
