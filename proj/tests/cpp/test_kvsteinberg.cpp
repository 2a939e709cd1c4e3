#include "chowforge/kvsteinberg.hpp"

#include "chowforge/cherncycles.hpp"

#include "doctest.h"

using namespace chowforge;

TEST_CASE("quadruples carry 2n(n-1) variables") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(quadruple_variable_names(n, "q").size() == 2 * n * (n - 1));
}

TEST_CASE("products of unipotent generics have det 1") {
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t m = 1; m <= (n == 2 ? 3u : 1u); ++m) {
            RingPtr R = lulu_ring(n, m);
            CHECK(det(mu_m(generic_quadruples(R, n, m))) == R->one());
        }
}

TEST_CASE("identity quadruples give the identity") {
    RingPtr R = lulu_ring(3, 1);
    CHECK(mu(identity_quadruple(R, 3)).is_identity());
    CHECK_THROWS(mu_m({}));
}

TEST_CASE("contracting homotopy at T = 0") {
    PolyMatrix h = contracting_h(2);
    CHECK(h.specialize({{"T", 0}}).is_identity());
    CHECK(det(h) == h.ring()->one());
    RingPtr R = contracting_ring(3);
    CHECK(contracting_h(generic_quadruples(R, 3, 8), R->zero()).is_identity());
}

TEST_CASE("sampled SL points have det 1") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        RationalMatrix g = sample_sl(s, 2);
        Rational d = g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0);
        CHECK(d == 1);
    }
}

TEST_CASE("word normalization") {
    RingPtr R = x_simplex_ring({"c"}, 1);
    Polynomial c = R->var("c");
    PolyMatrix E(R, 2, 2, {R->one(), c, R->zero(), R->one()});
    PolyMatrix Einv(R, 2, 2, {R->one(), -c, R->zero(), R->one()});
    MatWord w = MatWord::concrete(E) * MatWord::h(R, 2, 1, R->zero()) * MatWord::concrete(Einv);
    CHECK(w.is_identity());
    MatWord h = MatWord::h(R, 2, 1, R->var("t_1"));
    CHECK(MatWord::concrete(E) * h != h * MatWord::concrete(E));
    CHECK(MatWord::concrete(E) * h == MatWord::concrete(E) * h);
}

TEST_CASE("diagonal faces satisfy the simplicial identity") {
    // d_i d_j = d_{j-1} d_i for i < j on a generic 3-simplex element.
    auto xv = qform_symbols("g", 3);
    MatTuple G = qform_element(xv, "g", 3, {1, 2, 3, 0});
    for (std::size_t j = 1; j <= 3; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            MatTuple lhs = diagonal_face(diagonal_face(G, xv, 3, j), xv, 2, i);
            MatTuple rhs = diagonal_face(diagonal_face(G, xv, 3, i), xv, 2, j - 1);
            CHECK(tuples_equal(lhs, rhs));
        }
}

TEST_CASE("Q-form elements with no kept face lie in the boundary-trivial set") {
    auto xv = qform_symbols("a", 2);
    std::size_t none = static_cast<std::size_t>(-1);
    MatTuple a = qform_element(xv, "a", 2, {none, none, none});
    for (std::size_t j = 0; j <= 2; ++j)
        for (const auto& w : diagonal_face(a, xv, 2, j)) CHECK(w.is_identity());
}

TEST_CASE("lambda restricts to a on facets") {
    auto xv = qform_symbols("a", 1);
    std::size_t none = static_cast<std::size_t>(-1);
    MatTuple a = qform_element(xv, "a", 1, {none, none});
    MatTuple lam = lambda_words(a, 1);
    for (std::size_t j = 0; j <= 1; ++j) {
        Morphism f = x_coface(xv, 1, j);
        CHECK(lam.front().pullback(f) == a.front().pullback(f));
    }
}

TEST_CASE("appendix witnesses") {
    for (std::size_t r = 1; r <= 2; ++r) {
        CHECK(check_extension_witness(extension_witness(ExtensionItem::Degenerate, r), 1).verdict == Verdict::Pass);
        CHECK(check_extension_witness(extension_witness(ExtensionItem::Homotopy, r), 1).verdict == Verdict::Pass);
    }
    CHECK(check_extension_witness(extension_witness(ExtensionItem::Horn, 2), 1).verdict == Verdict::Pass);
    CHECK(check_extension_witness(extension_witness(ExtensionItem::Homotopy, 2, false), 1).verdict == Verdict::Fail);
    CHECK_THROWS(extension_witness(ExtensionItem::Horn, 1));
}

TEST_CASE("Steinberg identities") {
    CHECK(verify_comm().ok());
    CHECK(p_alpha_suite().ok());
    RingPtr R = symbol_ring();
    CHECK(det(steinberg_A(R, R->var("alpha"))) == R->var("alpha"));
}

TEST_CASE("symbol ring carries the unit relations") {
    RingPtr R = symbol_ring();
    CHECK(R->relation_count() == 2);
    CHECK(Ideal(R, {}).contains(R->parse("alpha*alphabar - 1")));
    CHECK(symbol_ring(true)->relation_count() == 3);
}

TEST_CASE("fiber probe reports empty fibers") {
    RingPtr R = RingBuilder().vars({"u"}).build();
    PolyMatrix M(R, 2, 2, {R->one(), R->var("u"), R->zero(), R->one()});
    RationalMatrix g = RationalMatrix::identity(2);
    g.at(1, 0) = 1;
    auto rep = fiber_dim_probe(M, {RationalMatrix::identity(2), g}, 0);
    REQUIRE(rep.records.size() == 2);
    CHECK(rep.records[0].verdict == Verdict::Pass);
    CHECK(rep.records[1].verdict == Verdict::Fail);
    CHECK(rep.records[1].witness.find("empty fiber") != std::string::npos);
}
