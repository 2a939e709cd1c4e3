#pragma once

#include "chowforge/exactpoly.hpp"
#include "chowforge/groebner.hpp"
#include "chowforge/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chowforge {

// Dimensions of the simplex factors of Δ^{d0} × Δ^{d1} × ...
using Shape = std::vector<std::size_t>;

// Factor k uses the coordinate prefix t, s, v, w, y, z (in that order);
// coordinate 0 of every factor is eliminated. Rings are cached per shape.
RingPtr simplex_ring(const Shape& shape);
std::string coordinate_name(std::size_t factor, std::size_t i);
std::string shape_str(const Shape& shape);

class Morphism {
public:
    Morphism() = default;
    // images[i] is the image of free target variable i, over the source ring.
    Morphism(RingPtr source, RingPtr target, std::vector<Polynomial> images);
    Morphism(const Shape& source, const Shape& target, std::vector<Polynomial> images);

    static Morphism identity(const RingPtr& ring);
    static Morphism identity(const Shape& shape);

    const RingPtr& source() const { return src_; }
    const RingPtr& target() const { return tgt_; }
    const std::vector<Polynomial>& images() const { return images_; }
    const std::optional<Shape>& source_shape() const { return src_shape_; }
    const std::optional<Shape>& target_shape() const { return tgt_shape_; }

    // Pull back a polynomial on the target.
    Polynomial pullback(const Polynomial& f) const;
    // Image of a target variable or eliminated coordinate.
    Polynomial image(const std::string& target_var) const;
    // Every target relation maps into the ideal of source relations.
    bool respects_relations() const;

    const std::string& key() const { return key_; }
    bool operator==(const Morphism& o) const;
    bool operator!=(const Morphism& o) const { return !(*this == o); }
    std::string str() const;

private:
    void finish();

    RingPtr src_, tgt_;
    std::vector<Polynomial> images_;
    std::optional<Shape> src_shape_, tgt_shape_;
    std::string key_;
};

// g ∘ f.
Morphism compose(const Morphism& g, const Morphism& f);
// f × g : X × X' -> Y × Y' on simplex products.
Morphism product_morphism(const Morphism& f, const Morphism& g);
// (f, g) : X -> Y × Y' on simplex products with a common source.
Morphism pairing(const Morphism& f, const Morphism& g);

// Affine map Δ^k -> target shape determined by vertices:
// vmap[m][factor] is the vertex hit by source vertex m.
Morphism from_vertex_map(std::size_t k, const Shape& target, const std::vector<std::vector<std::size_t>>& vmap);
// Inverse of from_vertex_map; throws when a vertex does not go to a vertex.
std::vector<std::vector<std::size_t>> vertex_map(const Morphism& m);
// Two-sided inverse of an invertible affine-linear morphism.
std::optional<Morphism> affine_inverse(const Morphism& m);

// Integer combination of morphisms with common source and target, kept in
// canonical form: equal morphisms merged, zero coefficients dropped, terms
// sorted by the serialized images.
class FormalSum {
public:
    using TermT = std::pair<Integer, Morphism>;

    FormalSum() = default;
    FormalSum(const Morphism& m, Integer c = 1);
    static FormalSum zero(const Morphism& like);
    static FormalSum zero(const Shape& source, const Shape& target);

    const std::vector<TermT>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const RingPtr& source() const { return src_; }
    const RingPtr& target() const { return tgt_; }
    const std::optional<Shape>& source_shape() const { return src_shape_; }
    const std::optional<Shape>& target_shape() const { return tgt_shape_; }
    Integer coefficient_sum() const;

    FormalSum operator+(const FormalSum& o) const;
    FormalSum operator-(const FormalSum& o) const;
    FormalSum operator-() const { return scaled(-1); }
    FormalSum& operator+=(const FormalSum& o) { return *this = *this + o; }
    FormalSum scaled(const Integer& c) const;
    bool operator==(const FormalSum& o) const;
    bool operator!=(const FormalSum& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_compatible(const FormalSum& o) const;
    void canonicalize();

    RingPtr src_, tgt_;
    std::optional<Shape> src_shape_, tgt_shape_;
    std::vector<TermT> terms_;
};

FormalSum compose(const FormalSum& g, const FormalSum& f);
FormalSum product(const FormalSum& f, const FormalSum& g);

// ∂_j : Δ^{r-1} -> Δ^r, 0 <= j <= r, r >= 1.
Morphism coface(std::size_t r, std::size_t j);
// s_j : Δ^{r+1} -> Δ^r, 0 <= j <= r.
Morphism codegeneracy(std::size_t r, std::size_t j);
// s_{j1} ∘ ... ∘ s_{jk} on Δ^l, largest index applied first.
Morphism codegeneracy_composite(std::size_t l, const std::vector<std::size_t>& J);
// Σ (-1)^i ∂_i : Δ^{r-1} -> Δ^r.
FormalSum dhat(std::size_t r);

int shuffle_sign(const std::vector<std::size_t>& I, const std::vector<std::size_t>& Ic);
// Δ^{a+b} -> Δ^a × Δ^b.
FormalSum ez_psi(std::size_t a, std::size_t b);
// Δ^a × Δ^b -> Δ^l × Δ^l, front face times back face.
Morphism aw_E(std::size_t a, std::size_t b);
// Σ (-1)^j ∂_j × ∂_j : Δ^{l-1} × Δ^{l-1} -> Δ^l × Δ^l, l >= 1.
FormalSum nabla(std::size_t l);
// Σ_{a+b=l} E_{a,b} ∘ ψ_{a,b} : Δ^l -> Δ^l × Δ^l.
FormalSum diag_approx(std::size_t l);
Morphism diagonal(std::size_t l);

// Candidate prism on Δ^1 × Δ^l interpolating from diag (vertex 0) to the
// terms of Φ_l, padded with diag so the coefficients sum to one.
FormalSum candidate_H(std::size_t l);
// Candidate P_{k} = H_{k-1} ∘ ψ_{1,k-1}, k >= 1.
FormalSum candidate_P(std::size_t k);
// Restriction of a Δ^1 × Δ^l sum to the Δ^1 vertex e.
FormalSum restrict_to_vertex(const FormalSum& h, std::size_t e);
// P_0..P_{l_max+1} solved degreewise by coning off the residual at the
// initial vertex of [l] × [l]; P_0 and P_1 are zero.
std::vector<FormalSum> cone_solve_P(std::size_t l_max);

struct PrismResult {
    std::size_t l = 0;
    std::string route;  // "candidate-H", "cone-solve" or "none"
    bool candidate_e0 = false;
    bool candidate_e1 = false;
    bool candidate_htpy = false;
    bool verified = false;
    FormalSum H;
    FormalSum P;  // P_{l+1} of the successful route
    std::string detail;
};

// Checks Φ_l − diag_l = P_{l+1} ∘ ∂̂_{l+1} + ∇_l ∘ P_l for the given family.
bool htpy_holds(std::size_t l, const FormalSum& P_next, const std::optional<FormalSum>& P_cur, std::string* why);
PrismResult prism(std::size_t l);

// First term on which two sums differ, for witnesses.
std::string first_difference(const FormalSum& a, const FormalSum& b);

// Pullback of an ideal on the target of f.
Ideal pullback_ideal(const Morphism& f, const Ideal& I);
// Substitutes the A^1 coordinate; with no value the ideal is returned as is.
Ideal prism_slice(const Ideal& gamma, const std::string& coordinate, const std::optional<Rational>& value);
// Simplex-face pullback of γ_r equals group-face pullback of γ_{r-1}.
bool special_condition_holds(const Ideal& gamma_r, const Ideal& gamma_prev, const Morphism& simplex_face,
                             const Morphism& group_face);

// Operator expressions, e.g. compose(ez(1,1), dhat(2)). Constructors:
// id(d..), d(r,j), s(r,j), dhat(r), ez(a,b), aw(a,b), nabla(l), phi(l),
// diag(l), H(l), P(k); combinators compose, prod, sum, diff, neg, scale(c,x).
FormalSum parse_operator(const std::string& text);

// Case lists for the runner.
std::vector<CaseSpec> simplicial_cases(std::size_t l_max);
VerificationReport verify_ez_aw_identities(std::size_t l_max, const RunOptions& opt = {});
VerificationReport verify_htpy(std::size_t l_max, const RunOptions& opt = {});

}  // namespace chowforge
