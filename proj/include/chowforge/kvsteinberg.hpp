#pragma once

#include "chowforge/exactpoly.hpp"
#include "chowforge/groebner.hpp"
#include "chowforge/matdet.hpp"
#include "chowforge/report.hpp"
#include "chowforge/simplicialcat.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace chowforge {

// Lower, upper, lower, upper unitriangular factors.
struct UnipotentQuadruple {
    PolyMatrix l1, u1, l2, u2;

    std::vector<PolyMatrix> factors() const { return {l1, u1, l2, u2}; }
    std::size_t n() const { return l1.rows(); }
};

// prefix + "l1_{i,j}", "u1_{i,j}", "l2_{i,j}", "u2_{i,j}": 2n(n-1) names.
std::vector<std::string> quadruple_variable_names(std::size_t n, const std::string& prefix);
UnipotentQuadruple generic_quadruple(const RingPtr& ring, std::size_t n, const std::string& prefix);
UnipotentQuadruple identity_quadruple(const RingPtr& ring, std::size_t n);
// Quadruple k uses the prefix prefix + k, k = 0..m-1.
std::vector<UnipotentQuadruple> generic_quadruples(const RingPtr& ring, std::size_t n, std::size_t m,
                                                   const std::string& prefix = "q");
// Q[X_n^m] with prefix "q".
RingPtr lulu_ring(std::size_t n, std::size_t m);

PolyMatrix mu(const UnipotentQuadruple& q);
PolyMatrix mu_m(const std::vector<UnipotentQuadruple>& quads);

// I + t(A - I) on every factor, kept as a factor list of length 4m.
std::vector<PolyMatrix> contracting_h_factors(const std::vector<UnipotentQuadruple>& quads, const Polynomial& t);
PolyMatrix contracting_h(const std::vector<UnipotentQuadruple>& quads, const Polynomial& t);
// Q[F_n] x A^1 with coordinate T; m = 0 means n^2 - 1 quadruples.
RingPtr contracting_ring(std::size_t n, std::size_t m = 0);
PolyMatrix contracting_h(std::size_t n, std::size_t m = 0);

// Exact rational square matrices, row-major.
struct RationalMatrix {
    std::size_t n = 0;
    std::vector<Rational> e;

    static RationalMatrix identity(std::size_t n);
    Rational& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
    RationalMatrix operator*(const RationalMatrix& o) const;
    bool operator==(const RationalMatrix& o) const { return n == o.n && e == o.e; }
    std::string str() const;
};

// Seeded element of SL_n(Q): a product of elementary matrices with small
// entries times a diagonal of small height.
RationalMatrix sample_sl(std::uint64_t seed, std::size_t n);

// For every target g: krull_dim of <entries of map - g> (plus the ring
// relations). A case passes when the fiber is nonempty of the expected
// dimension; an empty fiber is reported as such.
std::vector<CaseSpec> fiber_probe_cases(const std::string& suite, const std::string& id_head, const PolyMatrix& map,
                                        const std::vector<RationalMatrix>& targets, int expected);
VerificationReport fiber_dim_probe(const PolyMatrix& map, const std::vector<RationalMatrix>& targets, int expected,
                                   const RunOptions& opt = {});

// Matrix product with the contracting-homotopy factors h(A_k; tau) kept
// unexpanded. Normal form: zero-parameter h factors dropped, adjacent
// concrete factors multiplied out, identity concretes dropped.
class MatWord {
public:
    struct Factor {
        bool is_h = false;
        PolyMatrix m;           // concrete factor
        std::size_t copy = 0;   // h factor: index k of A_k
        Polynomial tau;         // h factor: parameter
    };

    MatWord() = default;
    static MatWord identity(const RingPtr& ring, std::size_t n);
    static MatWord concrete(const PolyMatrix& m);
    static MatWord h(const RingPtr& ring, std::size_t n, std::size_t copy, const Polynomial& tau);

    const RingPtr& ring() const { return ring_; }
    std::size_t n() const { return n_; }
    const std::vector<Factor>& factors() const { return f_; }

    MatWord operator*(const MatWord& o) const;
    // Pull back along a morphism whose target is this word's ring.
    MatWord pullback(const Morphism& m) const;
    MatWord normalized() const;
    bool is_identity() const { return normalized().f_.empty(); }
    // Structural equality of normal forms.
    bool operator==(const MatWord& o) const;
    bool operator!=(const MatWord& o) const { return !(*this == o); }

    // Value at a rational point of the ring with rational quadruples for each copy.
    RationalMatrix evaluate(const std::vector<Rational>& point,
                            const std::vector<std::vector<RationalMatrix>>& copies) const;
    // Full expansion with h factors replaced by the given matrices.
    PolyMatrix expand(const std::function<PolyMatrix(std::size_t copy, const Polynomial& tau)>& h_value) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::size_t n_ = 0;
    std::vector<Factor> f_;
};

// Element of SL_n^{x r} over X x Δ^m.
using MatTuple = std::vector<MatWord>;

// Ring Q[xvars] x Δ^dim with coordinates t_0..t_dim (t_0 eliminated). Cached.
RingPtr x_simplex_ring(const std::vector<std::string>& xvars, std::size_t dim);
// 1 x ∂_j : X x Δ^{dim-1} -> X x Δ^dim, and 1 x s_j : X x Δ^{dim+1} -> X x Δ^dim.
Morphism x_coface(const std::vector<std::string>& xvars, std::size_t dim, std::size_t j);
Morphism x_codegeneracy(const std::vector<std::string>& xvars, std::size_t dim, std::size_t j);
// t_0 ... t_dim without t_skip (skip > dim gives the full product).
Polynomial rho(const RingPtr& ring, std::size_t dim, std::size_t skip = static_cast<std::size_t>(-1));

// Diagonal face d_j = δ_j(Γ ∘ ∂_j): drop the first component (j = 0), merge
// components j, j+1, or drop the last one (j = r).
MatTuple diagonal_face(const MatTuple& g, const std::vector<std::string>& xvars, std::size_t dim, std::size_t j);
bool tuples_equal(const MatTuple& a, const MatTuple& b, std::string* why = nullptr);

// λ_a = (a_1 h(A_1, ρ(t)) | ... | a_r h(A_r, ρ(t))) over X x F_{n,r} x Δ^r.
MatTuple lambda_words(const MatTuple& a, std::size_t r);
// Same with every h expanded: h_n(A_k; T) of copy k with prefix "A{k}q",
// over a ring extending the ring of a by the F_{n,r} variables.
std::vector<PolyMatrix> lambda_build(const std::vector<PolyMatrix>& a, std::size_t r, std::size_t m = 0);

// Element of SL_2^{x dim} over X x Δ^dim of the form
// (Q_0 Q_1^{-1}, ..., Q_{dim-1} Q_dim^{-1}), Q_k = e12(c_k π_k) e21(c'_k π_k)
// with π_k the product of t_i over i not in {k, keep[k]}. Its face d_j is
// trivial unless keep[k] = j for some k != j. xvars of the result:
// qform_symbols(prefix, dim).
std::vector<std::string> qform_symbols(const std::string& prefix, std::size_t dim);
MatTuple qform_element(const std::vector<std::string>& xvars, const std::string& prefix, std::size_t dim,
                       const std::vector<std::size_t>& keep);

enum class ExtensionItem { Degenerate, Homotopy, Horn };
// Γ̃ of the three constructions; corrected = false gives the displayed
// formulas verbatim (the homotopy item then misses h(A_i, ρ_{r+1}) on the
// components i <= r-1).
struct ExtensionWitness {
    MatTuple gamma_tilde;
    std::vector<std::pair<std::size_t, MatTuple>> expected_faces;  // face index, expected value
    std::vector<std::string> xvars;
    std::size_t r = 0;
};
ExtensionWitness extension_witness(ExtensionItem item, std::size_t r, bool corrected = true);
CaseOutcome check_extension_witness(const ExtensionWitness& w, std::uint64_t seed);

// Steinberg matrices over the symbol ring.
struct SteinbergMatrices {
    PolyMatrix A, U, V, W;
};

// Symbol ring: alpha, alphabar, beta, betabar, x, y, y_1, y_2, T, simplices
// s_0,s_1 and t_0,t_1, relations alpha*alphabar - 1, beta*betabar - 1; the
// Milnor variant adds gamma with gamma*(1 - alpha) - 1.
RingPtr symbol_ring(bool milnor = false);
// A_alpha over the symbol ring; alpha may be any polynomial there.
PolyMatrix steinberg_A(const RingPtr& ring, const Polynomial& alpha);
// (A_alpha, U_beta, V_beta, W_beta) with beta^{-1} given explicitly.
SteinbergMatrices steinberg_matrices(const RingPtr& ring, const Polynomial& alpha, const Polynomial& beta,
                                     const Polynomial& beta_inv);
// p_alpha(t) = t_0^2 + x t_0 t_1 + alpha t_1^2.
Polynomial p_alpha(const RingPtr& ring, const Polynomial& alpha);

std::vector<CaseSpec> lulu_cases(std::size_t n_max = 2);
std::vector<CaseSpec> steinberg_cases();
std::vector<CaseSpec> gamma_cases();
std::vector<CaseSpec> sk1_cases(std::size_t r_max = 2);

VerificationReport verify_comm(const RunOptions& opt = {});
VerificationReport p_alpha_suite(const RunOptions& opt = {});
VerificationReport gamma_suite(const RunOptions& opt = {});
VerificationReport sk1_homotopy_suite(std::size_t n = 2, const RunOptions& opt = {});
VerificationReport verify_appendixB2_homotopies(std::size_t n = 2, std::size_t r = 2, const RunOptions& opt = {});

}  // namespace chowforge
