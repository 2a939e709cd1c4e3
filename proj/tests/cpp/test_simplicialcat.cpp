#include "chowforge/simplicialcat.hpp"

#include "chowforge/matdet.hpp"

#include "doctest.h"

using namespace chowforge;

TEST_CASE("cosimplicial identities") {
    for (std::size_t r = 2; r <= 4; ++r)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j <= r; ++j)
                // ∂_j ∂_i = ∂_i ∂_{j-1}
                CHECK(compose(coface(r, j), coface(r - 1, i)) == compose(coface(r, i), coface(r - 1, j - 1)));
    for (std::size_t r = 1; r <= 4; ++r)
        for (std::size_t j = 0; j <= r - 1; ++j) {
            CHECK(compose(codegeneracy(r - 1, j), coface(r, j)) == Morphism::identity(Shape{r - 1}));
            CHECK(compose(codegeneracy(r - 1, j), coface(r, j + 1)) == Morphism::identity(Shape{r - 1}));
        }
}

TEST_CASE("boundary squares to zero") {
    for (std::size_t r = 2; r <= 5; ++r) CHECK(compose(dhat(r), dhat(r - 1)).is_zero());
}

TEST_CASE("shuffle term counts are binomial") {
    for (std::size_t l = 0; l <= 4; ++l)
        for (std::size_t a = 0; a <= l; ++a) CHECK(ez_psi(a, l - a).size() == index_subsets(l, a).size());
}

TEST_CASE("diagonal approximation is a chain map") {
    for (std::size_t l = 1; l <= 3; ++l) CHECK(compose(diag_approx(l), dhat(l)) == compose(nabla(l), diag_approx(l - 1)));
}

TEST_CASE("vertex maps round-trip") {
    Morphism m = from_vertex_map(2, {2, 1}, {{0, 0}, {1, 1}, {2, 1}});
    auto vm = vertex_map(m);
    CHECK(vm == std::vector<std::vector<std::size_t>>{{0, 0}, {1, 1}, {2, 1}});
}

TEST_CASE("operator parser") {
    CHECK(parse_operator("compose(d(2,1), d(1,0))") == FormalSum(compose(coface(2, 1), coface(1, 0))));
    CHECK(parse_operator("diff(dhat(3), dhat(3))").is_zero());
    CHECK_THROWS(parse_operator("frobnicate(2)"));
}

TEST_CASE("prism homotopy at low degree") {
    for (std::size_t l = 0; l <= 2; ++l) {
        PrismResult r = prism(l);
        CHECK(r.verified);
    }
}

TEST_CASE("pullback of ideals along a face") {
    RingPtr R = simplex_ring({2});
    Ideal I(R, {R->var("t_1")});
    Ideal J = pullback_ideal(coface(2, 1), I);
    CHECK(J.is_zero());
}
