#pragma once

#include "chowforge/exactpoly.hpp"
#include "chowforge/groebner.hpp"
#include "chowforge/matdet.hpp"
#include "chowforge/report.hpp"
#include "chowforge/simplicialcat.hpp"

#include <string>
#include <vector>

namespace chowforge {

// GL adds d_k*det(A_k) - 1, SL adds det(A_k) - 1 for every group factor.
enum class Localization { None, GL, SL };

std::string localization_name(Localization loc);
Localization parse_localization(const std::string& s);

struct FamilyParams {
    std::size_t n = 2;
    std::size_t r = 1;
    std::size_t p = 1;  // also used as q for theta families
    Localization loc = Localization::None;

    // Throws std::invalid_argument when out of range.
    void validate(bool theta = false) const;
};

// Per-r components gamma_0, gamma_1, ... of an element of the weight-p complex.
struct CycleFamily {
    FamilyParams params;
    bool theta = false;
    std::vector<Ideal> components;
};

// Q[x_{i,j}] and Q[x_{i,j}, u_1..u_n].
RingPtr x_ring(std::size_t n);
RingPtr ux_ring(std::size_t n);
PolyMatrix x_matrix(const RingPtr& ring, std::size_t n);
std::vector<Polynomial> u_vector(const RingPtr& ring, std::size_t n);

// a_p = <m_{p,I}>, 1 <= p <= n; over Q[x] or extended to Q[x,u].
Ideal ideal_a(std::size_t n, std::size_t p, bool with_u = false);
// b_p = <u.x^{p+1}, ..., u.x^n>, 0 <= p <= n.
Ideal ideal_b(std::size_t n, std::size_t p);
// Sigma_p = a_p + b_{p-1}; p = 0 and p = n+1 give the unit ideal.
Ideal ideal_Sigma(std::size_t n, std::size_t p);
// A_p = a_p + b_p, 1 <= p <= n.
Ideal ideal_Afrak(std::size_t n, std::size_t p);

// Ring of (u) x G^r x Δ^s: entries a{k}_{i,j} of A_1..A_r, optional d_k
// for GL, simplex t_0..t_s with t_0 eliminated. Cached.
RingPtr group_simplex_ring(std::size_t n, std::size_t r, std::size_t simplex_dim, Localization loc, bool with_u);
std::vector<PolyMatrix> group_matrices(const RingPtr& ring, std::size_t n, std::size_t r);

// t_0 I + Σ t_s A_1...A_s on the ring of G^r x Δ^r.
PolyMatrix L_matrix(std::size_t n, std::size_t r, Localization loc = Localization::None, bool with_u = false);
// Same formula over any ring carrying A_1..A_r and t_1..t_r.
PolyMatrix L_matrix_over(const RingPtr& ring, std::size_t n, std::size_t r);

// Wedge condition on columns p..n of L (p = 0 gives the zero ideal).
Ideal chern_cycle_ideal(std::size_t n, std::size_t r, std::size_t p, Localization loc = Localization::None);
// <u.L^j : j = n-q+1..n> in the ring with u (q = 0 gives the zero ideal).
Ideal theta_cycle_ideal(std::size_t n, std::size_t r, std::size_t q, Localization loc = Localization::None);
CycleFamily chern_family(std::size_t n, std::size_t p, std::size_t r_max, Localization loc = Localization::None);
CycleFamily theta_family(std::size_t n, std::size_t q, std::size_t r_max, Localization loc = Localization::None);

// (δ_j x 1) : G^r x Δ^{r-1} -> G^{r-1} x Δ^{r-1}; δ_0 also sends u to u.A_1.
Morphism group_face_morphism(std::size_t n, std::size_t r, std::size_t j, Localization loc, bool with_u);
// (1 x ∂_j) : G^r x Δ^{r-1} -> G^r x Δ^r.
Morphism simplex_face_morphism(std::size_t n, std::size_t r, std::size_t j, Localization loc, bool with_u);
// (σ_j x 1) : G^{r-1} x Δ^r -> G^r x Δ^r, inserting I after the j-th factor.
Morphism group_degeneracy_morphism(std::size_t n, std::size_t r, std::size_t j, Localization loc);
// (1 x s_j) : G^{r-1} x Δ^r -> G^{r-1} x Δ^{r-1}.
Morphism simplex_degeneracy_morphism(std::size_t n, std::size_t r, std::size_t j, Localization loc);
// (1 x L) : (u) x G^r x Δ^r -> matrix space (with u).
Morphism L_morphism(std::size_t n, std::size_t r, Localization loc, bool with_u);
// j_n^{x r} x 1 : G_n^r x Δ^r -> G_{n+1}^r x Δ^r.
Morphism stabilization_morphism(std::size_t n, std::size_t r, Localization loc);
// [[A, 0], [0, 1]].
PolyMatrix block_embed(const PolyMatrix& a);

// Ideal by name: a(n,p), b(n,p), Sigma(n,p), Afrak(n,p), C(n,r,p[,loc]),
// theta(n,r,q[,loc]). Throws std::invalid_argument on an unknown name.
Ideal named_ideal(const std::string& id);
std::vector<std::string> named_ideal_examples();

// Case lists.
std::vector<CaseSpec> intersection_cases(std::size_t n_max);
std::vector<CaseSpec> tricky_cases(std::size_t n_max, std::size_t det_n_max = 4);
std::vector<CaseSpec> coherent_cases(std::size_t n_max);
std::vector<CaseSpec> L_relation_cases(std::size_t n, std::size_t r_max);
std::vector<CaseSpec> special_cases(std::size_t n, std::size_t r_max, std::size_t p);
std::vector<CaseSpec> codim_cases(std::size_t n, std::size_t r_max);
std::vector<CaseSpec> whitney_cases(std::size_t n, std::size_t r_max);
std::vector<CaseSpec> jacobian_cases(std::size_t n, std::size_t r);

VerificationReport verify_intersection_identity(std::size_t n, const RunOptions& opt = {});
VerificationReport verify_tricky_and_multiplicity(std::size_t n, const RunOptions& opt = {});
VerificationReport verify_coherent_family(std::size_t n_max, const RunOptions& opt = {});
VerificationReport verify_L_relations(std::size_t n, std::size_t r, const RunOptions& opt = {});
VerificationReport verify_special_cycle(std::size_t n, std::size_t r_max, std::size_t p, const RunOptions& opt = {});
VerificationReport verify_codim_and_dominance(std::size_t n, std::size_t r, std::size_t p, const RunOptions& opt = {});
VerificationReport verify_whitney_relation(std::size_t n, std::size_t r_max, const RunOptions& opt = {});
VerificationReport verify_L_jacobians(std::size_t n, std::size_t r, const RunOptions& opt = {});

// Jacobian determinants of the smoothness charts: the GL chart for
// (n, r, l0) and the SL chart for (n, r, l0, I) with 1-based I.
Polynomial gl_chart_jacobian_det(std::size_t n, std::size_t r, std::size_t l0);
Polynomial sl_chart_jacobian_det(std::size_t n, std::size_t r, std::size_t l0, const std::vector<std::size_t>& I);

}  // namespace chowforge
