#include "chowforge/exactpoly.hpp"

#include "doctest.h"

#include <random>

using namespace chowforge;

namespace {

RingPtr xyz() { return RingBuilder().vars({"x", "y", "z"}).build(); }

Polynomial random_poly(const RingPtr& R, std::mt19937_64& rng, int terms = 4, int deg = 3) {
    std::uniform_int_distribution<int> c(-5, 5), e(0, deg);
    Polynomial p = R->zero();
    for (int k = 0; k < terms; ++k) {
        Polynomial m = R->constant(c(rng));
        for (std::size_t v = 0; v < R->nvars(); ++v) m *= R->var(v).pow(e(rng));
        p += m;
    }
    return p;
}

}  // namespace

TEST_CASE("parse and print round-trip") {
    RingPtr R = xyz();
    Polynomial p = R->parse("3*x^2*y - 1/2*z + 7");
    CHECK(R->parse(p.str()) == p);
    CHECK(p.total_degree() == 3);
    CHECK(p.size() == 3);
    CHECK(R->parse("(x + y)^2") == R->parse("x^2 + 2*x*y + y^2"));
}

TEST_CASE("ring axioms on random polynomials") {
    RingPtr R = xyz();
    std::mt19937_64 rng(7);
    for (int it = 0; it < 25; ++it) {
        Polynomial a = random_poly(R, rng), b = random_poly(R, rng), c = random_poly(R, rng);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
        CHECK(a.pow(2) == a * a);
    }
}

TEST_CASE("derivative obeys the product rule") {
    RingPtr R = xyz();
    std::mt19937_64 rng(11);
    for (int it = 0; it < 20; ++it) {
        Polynomial a = random_poly(R, rng), b = random_poly(R, rng);
        CHECK((a * b).derivative("x") == a.derivative("x") * b + a * b.derivative("x"));
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    RingPtr R = xyz();
    std::mt19937_64 rng(3);
    std::vector<Polynomial> im{R->parse("y + z"), R->parse("x*z"), R->parse("1 - x")};
    for (int it = 0; it < 15; ++it) {
        Polynomial a = random_poly(R, rng), b = random_poly(R, rng);
        CHECK((a * b).substitute(im) == a.substitute(im) * b.substitute(im));
        CHECK((a + b).substitute(im) == a.substitute(im) + b.substitute(im));
    }
}

TEST_CASE("evaluation matches specialization") {
    RingPtr R = xyz();
    std::mt19937_64 rng(5);
    for (int it = 0; it < 10; ++it) {
        Polynomial a = random_poly(R, rng);
        std::vector<Rational> pt{Rational(1, 2), Rational(-3), Rational(2, 7)};
        auto c = a.specialize({{"x", pt[0]}, {"y", pt[1]}, {"z", pt[2]}}).constant_value();
        REQUIRE(c.has_value());
        CHECK(*c == a.evaluate(pt));
    }
}

TEST_CASE("simplex coordinates are eliminated") {
    RingPtr R = RingBuilder().var("x").simplex({"t_0", "t_1", "t_2"}).build();
    CHECK(R->nvars() == 3);
    CHECK(R->has_alias("t_0"));
    CHECK(R->var("t_0") + R->var("t_1") + R->var("t_2") == R->one());
}

TEST_CASE("relations are recorded") {
    RingPtr R = RingBuilder().vars({"a", "abar"}).relation("a*abar - 1").build();
    REQUIRE(R->relation_count() == 1);
    CHECK(R->relations().front() == R->parse("a*abar - 1"));
}

TEST_CASE("to_ring maps by variable name") {
    RingPtr A = RingBuilder().vars({"x", "y"}).build();
    RingPtr B = RingBuilder().vars({"y", "w", "x"}).build();
    Polynomial p = A->parse("x^2 - 3*y");
    CHECK(p.to_ring(B) == B->parse("x^2 - 3*y"));
    RingPtr E = RingBuilder().build();
    CHECK(E->constant(5).to_ring(B) == B->constant(5));
}

TEST_CASE("unknown variables are rejected") {
    RingPtr R = xyz();
    CHECK_THROWS(R->parse("x + q"));
    CHECK_THROWS(R->var("w"));
}
