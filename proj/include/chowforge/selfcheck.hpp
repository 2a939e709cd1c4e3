#pragma once

#include "chowforge/exactpoly.hpp"
#include "chowforge/groebner.hpp"
#include "chowforge/report.hpp"

#include <random>
#include <vector>

namespace chowforge {

// Sum of `terms` random monomials with coefficients in [-3, 3] and every
// exponent in [0, deg].
Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, int terms = 3, int deg = 2);

// Largest set of variables containing the support of no generator, by
// enumerating all subsets; -1 for the unit ideal. At most 20 variables.
int brute_monomial_dimension(const std::vector<Monomial>& gens, std::size_t nvars);

// True when f = Σ h_i g_i with deg(h_i g_i) <= degree, found by exact
// linear algebra on the Macaulay matrix. Independent of the Groebner engine.
bool macaulay_member(const std::vector<Polynomial>& gens, const Polynomial& f, std::uint32_t degree);

// Engine self-checks: GB idempotence, membership against the Macaulay
// oracle on <= 3-variable random ideals, monomial dimension against brute
// force for <= 8 variables, and determinant method agreement up to size 5.
std::vector<CaseSpec> engine_cases();

}  // namespace chowforge
