#include "chowforge/groebner.hpp"
#include "chowforge/selfcheck.hpp"

#include "doctest.h"

#include <random>

using namespace chowforge;

TEST_CASE("reduced basis is idempotent") {
    RingPtr R = RingBuilder().vars({"x", "y", "z"}).build();
    std::mt19937_64 rng(17);
    for (int it = 0; it < 15; ++it) {
        Ideal I(R, {random_polynomial(R, rng), random_polynomial(R, rng)});
        auto G = I.groebner();
        Ideal J(R, G->elements());
        CHECK(J.groebner()->elements() == G->elements());
    }
}

TEST_CASE("membership agrees with explicit combinations") {
    RingPtr R = RingBuilder().vars({"x", "y", "z"}).build();
    std::mt19937_64 rng(23);
    for (int it = 0; it < 15; ++it) {
        Polynomial f = random_polynomial(R, rng), g = random_polynomial(R, rng);
        Ideal I(R, {f, g});
        Polynomial comb = random_polynomial(R, rng) * f + random_polynomial(R, rng) * g;
        CHECK(I.contains(comb));
        CHECK(I.normal_form(comb).is_zero());
    }
}

TEST_CASE("unit and zero ideals") {
    RingPtr R = RingBuilder().vars({"x", "y"}).build();
    CHECK(Ideal(R, {R->parse("x"), R->parse("x - 1")}).is_unit());
    CHECK(Ideal(R, {}).is_zero());
    CHECK_FALSE(Ideal(R, {R->parse("x*y")}).is_unit());
}

TEST_CASE("krull dimension of small ideals") {
    RingPtr R = RingBuilder().vars({"x", "y", "z"}).build();
    CHECK(krull_dim(Ideal(R, {})) == 3);
    CHECK(krull_dim(Ideal(R, {R->parse("x*y")})) == 2);
    CHECK(krull_dim(Ideal(R, {R->parse("x"), R->parse("y")})) == 1);
    CHECK(krull_dim(Ideal(R, {R->one()})) == -1);
}

TEST_CASE("monomial dimension matches brute force") {
    std::mt19937_64 rng(29);
    for (std::size_t n = 1; n <= 8; ++n)
        for (int it = 0; it < 10; ++it) {
            std::uniform_int_distribution<int> e(0, 1), count(1, 4);
            std::vector<Monomial> gens;
            int k = count(rng);
            for (int g = 0; g < k; ++g) {
                Monomial m(n);
                for (std::size_t v = 0; v < n; ++v) m.set(v, e(rng));
                gens.push_back(m);
            }
            CHECK(monomial_dimension(gens, n) == brute_monomial_dimension(gens, n));
        }
}

TEST_CASE("intersection and saturation") {
    RingPtr R = RingBuilder().vars({"x", "y"}).build();
    Ideal a(R, {R->parse("x")}), b(R, {R->parse("y")});
    CHECK(ideals_equal(ideal_intersection(a, b), Ideal(R, {R->parse("x*y")})));
    Ideal I(R, {R->parse("x^2*y"), R->parse("x^3")});
    CHECK(ideals_equal(saturation(I, R->parse("x")), Ideal(R, {R->one()})));
    CHECK(ideals_equal(saturation(Ideal(R, {R->parse("x*y")}), R->parse("x")), b));
}

TEST_CASE("elimination") {
    RingPtr R = RingBuilder().vars({"t", "x", "y"}).build();
    Ideal I(R, {R->parse("x - t^2"), R->parse("y - t^3")});
    Ideal E = eliminate(I, {"t"});
    CHECK(E.contains(E.ring()->parse("x^3 - y^2")));
    CHECK(krull_dim(E) == 1);
}

TEST_CASE("relations are appended") {
    RingPtr R = RingBuilder().vars({"a", "abar", "x"}).relation("a*abar - 1").build();
    CHECK(Ideal(R, {R->parse("a*x")}).contains(R->parse("x")));
}

TEST_CASE("exchange format round-trip") {
    RingPtr R = RingBuilder().vars({"x", "y"}).simplex({"t_0", "t_1"}).build();
    Ideal I(R, {R->parse("x*t_1 - y"), R->parse("t_0*x^2")});
    Ideal J = import_ideal(export_ideal(I));
    CHECK(J.generators().size() == 2);
    CHECK(export_ideal(J) == export_ideal(I));
}

TEST_CASE("budget exhaustion throws") {
    RingPtr R = RingBuilder().vars({"a", "b", "c", "d"}).build();
    BudgetScope scope(Budget{1, 300});
    // cyclic-4: leading terms overlap, so reductions are unavoidable
    Ideal I(R, {R->parse("a + b + c + d"), R->parse("a*b + b*c + c*d + d*a"),
                R->parse("a*b*c + b*c*d + c*d*a + d*a*b"), R->parse("a*b*c*d - 1")});
    CHECK_THROWS_AS(I.groebner(), BudgetExceeded);
}
