#include "chowforge/matdet.hpp"

#include "doctest.h"

#include <random>

using namespace chowforge;

TEST_CASE("determinant methods agree up to size 5") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> c(-4, 4);
    for (std::size_t n = 1; n <= 5; ++n) {
        PolyMatrix g = generic_matrix(n, n, "x");
        Polynomial d1 = det_cofactor(g), d2 = det_bareiss(g);
        CHECK(d1 == d2);
        CHECK(det(g) == d1);
        RingPtr R = g.ring();
        for (int it = 0; it < 5; ++it) {
            PolyMatrix m(R, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) = R->constant(c(rng));
            CHECK(det_cofactor(m) == det_bareiss(m));
        }
    }
}

TEST_CASE("det is multiplicative and adjugate inverts") {
    PolyMatrix a = generic_matrix(3, 3, "a");
    RingPtr R = a.ring();
    PolyMatrix b = a.map([&](const Polynomial& p) { return p * p - R->one(); });
    CHECK(det(a * b) == det(a) * det(b));
    CHECK(a * adjugate(a) == PolyMatrix::identity(R, 3).scaled(det(a)));
}

TEST_CASE("minors and index sets") {
    CHECK(index_subsets(4, 2).size() == 6);
    CHECK(complement({1, 3}, 4) == IndexSet{2, 4});
    PolyMatrix x = generic_matrix(3, 3, "x");
    CHECK(minor(x, {1, 2, 3}, {1, 2, 3}) == det(x));
    CHECK(m_pI(x, 3, {2}) == x.at(1, 2));
}

TEST_CASE("determinantal ideal dimension") {
    // 2 x 3 matrices of rank <= 1 form a 4-dimensional variety.
    CHECK(krull_dim(determinantal_ideal(2, 3, 1)) == 4);
    // n x n singular matrices: codimension 1.
    CHECK(krull_dim(determinantal_ideal(3, 3, 2)) == 8);
}

TEST_CASE("jacobian of a linear map") {
    RingPtr R = RingBuilder().vars({"x", "y"}).build();
    PolyMatrix J = jacobian({R->parse("x + 2*y"), R->parse("x*y")}, {"x", "y"});
    CHECK(J.at(0, 1) == R->constant(2));
    CHECK(J.at(1, 0) == R->parse("y"));
}

TEST_CASE("bordered matrix is singular") {
    for (std::size_t n = 2; n <= 3; ++n) {
        RingBuilder b;
        b.vars(matrix_variable_names(n, n, "x"));
        for (std::size_t i = 1; i <= n; ++i) b.var("u_" + std::to_string(i));
        RingPtr R = b.build();
        PolyMatrix x = matrix_of_variables(R, n, n, "x");
        std::vector<Polynomial> u;
        for (std::size_t i = 1; i <= n; ++i) u.push_back(R->var("u_" + std::to_string(i)));
        for (std::size_t p = 1; p < n; ++p)
            for (const auto& I : index_subsets(n, n - p)) CHECK(det(build_M_pI(x, u, p, I)).is_zero());
    }
}

TEST_CASE("inverse via adjugate needs a unit determinant") {
    RingPtr R = RingBuilder().vars({"a", "d"}).relation("a*d - 1").build();
    PolyMatrix m(R, 2, 2, {R->parse("a"), R->zero(), R->zero(), R->one()});
    PolyMatrix inv = matrix_inverse_via_adjugate(m);
    Ideal rel(R, {});
    PolyMatrix prod = m * inv;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(rel.normal_form(prod.at(i, j) - (i == j ? R->one() : R->zero())).is_zero());
}
