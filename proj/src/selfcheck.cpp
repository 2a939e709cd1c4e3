#include "chowforge/selfcheck.hpp"

#include "chowforge/matdet.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chowforge {

Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, int terms, int deg) {
    std::uniform_int_distribution<int> c(-3, 3), e(0, deg);
    Polynomial p = ring->zero();
    for (int k = 0; k < terms; ++k) {
        Polynomial m = ring->constant(c(rng));
        for (std::size_t v = 0; v < ring->nvars(); ++v) m *= ring->var(v).pow(e(rng));
        p += m;
    }
    return p;
}

int brute_monomial_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
    if (nvars > 20) throw std::invalid_argument("brute_monomial_dimension: at most 20 variables");
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        bool ok = true;
        for (const auto& g : gens) {
            bool inside = true;
            for (std::size_t v = 0; v < nvars && inside; ++v)
                if (g[v] > 0 && !(mask & (1u << v))) inside = false;
            if (inside) ok = false;
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

namespace {

using Exps = std::vector<std::uint32_t>;
using SparseRow = std::map<Exps, Rational>;

Exps exps_of(const Monomial& m) {
    Exps e(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i];
    return e;
}

std::uint32_t degree_of(const Exps& e) {
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    return d;
}

// Exponent vectors of total degree <= d in n variables.
void monomials_upto(std::size_t n, std::uint32_t d, Exps& cur, std::size_t v, std::vector<Exps>& out) {
    if (v == n) {
        out.push_back(cur);
        return;
    }
    std::uint32_t used = 0;
    for (std::size_t i = 0; i < v; ++i) used += cur[i];
    for (std::uint32_t k = 0; used + k <= d; ++k) {
        cur[v] = k;
        monomials_upto(n, d, cur, v + 1, out);
    }
    cur[v] = 0;
}

SparseRow shifted(const Polynomial& g, const Exps& m) {
    SparseRow r;
    for (const auto& t : g.terms()) {
        Exps e = exps_of(t.m);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += m[i];
        r[e] = t.c;
    }
    return r;
}

// Reduce `row` by an echelon basis keyed by pivot (largest exponent).
void reduce(SparseRow& row, const std::map<Exps, SparseRow>& basis) {
    while (!row.empty()) {
        auto piv = std::prev(row.end());
        auto it = basis.find(piv->first);
        if (it == basis.end()) return;
        Rational f = piv->second / it->second.rbegin()->second;
        for (const auto& [e, c] : it->second) {
            Rational& x = row[e];
            x -= f * c;
            if (x == 0) row.erase(e);
        }
    }
}

}  // namespace

bool macaulay_member(const std::vector<Polynomial>& gens, const Polynomial& f, std::uint32_t degree) {
    if (f.is_zero()) return true;
    const std::size_t n = f.ring()->nvars();
    std::map<Exps, SparseRow> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        std::uint32_t dg = static_cast<std::uint32_t>(g.total_degree());
        if (dg > degree) continue;
        std::vector<Exps> shifts;
        Exps cur(n, 0);
        monomials_upto(n, degree - dg, cur, 0, shifts);
        for (const auto& m : shifts) {
            SparseRow r = shifted(g, m);
            reduce(r, basis);
            if (!r.empty()) {
                Exps piv = std::prev(r.end())->first;
                basis.emplace(piv, std::move(r));
            }
        }
    }
    SparseRow target;
    for (const auto& t : f.terms()) {
        if (degree_of(exps_of(t.m)) > degree) return false;
        target[exps_of(t.m)] = t.c;
    }
    reduce(target, basis);
    return target.empty();
}

namespace {

CaseSpec engine_case(std::string id, Params params, std::function<CaseOutcome(std::uint64_t)> run) {
    return CaseSpec{"engine", std::move(id), std::move(params), std::move(run)};
}

CaseOutcome gb_idempotence(std::uint64_t seed) {
    RingPtr R = RingBuilder().vars({"x", "y", "z"}).build();
    std::mt19937_64 rng(seed);
    for (int it = 0; it < 15; ++it) {
        Ideal I(R, {random_polynomial(R, rng), random_polynomial(R, rng)});
        auto G = I.groebner();
        auto H = Ideal(R, G->elements()).groebner();
        if (H->elements() != G->elements()) return CaseOutcome::fail("basis changed on recomputation: " + I.str());
        for (const auto& g : I.generators())
            if (!G->contains(g)) return CaseOutcome::fail("generator not reduced to zero: " + g.str());
    }
    return CaseOutcome::pass("15 random ideals in 3 variables");
}

CaseOutcome membership_oracle(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::size_t checked = 0;
    for (std::size_t nv = 1; nv <= 3; ++nv) {
        std::vector<std::string> names{"x", "y", "z"};
        names.resize(nv);
        RingPtr R = RingBuilder().vars(names).build();
        for (int it = 0; it < 6; ++it) {
            std::vector<Polynomial> gens{random_polynomial(R, rng, 3, 1), random_polynomial(R, rng, 2, 1)};
            Ideal I(R, gens);
            auto G = I.groebner();
            // A combination of the generators is a member with a certificate in its own degree.
            Polynomial member = R->zero();
            std::uint32_t bound = 0;
            for (const auto& g : gens) {
                Polynomial h = random_polynomial(R, rng, 2, 1);
                member += h * g;
                bound = std::max<std::uint32_t>(bound, static_cast<std::uint32_t>(h.total_degree() + g.total_degree()));
            }
            if (!I.contains(member)) return CaseOutcome::fail("combination not recognized: " + member.str());
            if (!macaulay_member(gens, member, bound)) return CaseOutcome::fail("oracle missed combination");
            // p - NF(p) is a member; NF(p) is nonzero exactly when p is not.
            for (int k = 0; k < 3; ++k) {
                Polynomial p = random_polynomial(R, rng, 3, 2);
                Polynomial r = G->normal_form(p);
                Polynomial d = p - r;
                std::uint32_t deg = static_cast<std::uint32_t>(std::max(d.total_degree(), p.total_degree())) + 4;
                if (!macaulay_member(gens, d, deg))
                    return CaseOutcome::fail("p - NF(p) not certified for p = " + p.str() + " in " + I.str());
                bool member_gb = r.is_zero();
                bool member_lin = macaulay_member(gens, p, deg);
                if (member_lin && !member_gb) return CaseOutcome::fail("oracle member rejected: " + p.str());
                ++checked;
            }
        }
    }
    return CaseOutcome::pass(std::to_string(checked) + " normal forms certified, 18 combinations recognized");
}

CaseOutcome monomial_dimension_brute(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 8; ++n)
        for (int it = 0; it < 20; ++it) {
            std::uniform_int_distribution<int> e(0, 2), count(1, 5);
            std::vector<Monomial> gens;
            int k = count(rng);
            for (int g = 0; g < k; ++g) {
                Monomial m(n);
                for (std::size_t v = 0; v < n; ++v) m.set(v, e(rng) == 2 ? 1 : 0);
                gens.push_back(m);
            }
            int a = monomial_dimension(gens, n), b = brute_monomial_dimension(gens, n);
            if (a != b)
                return CaseOutcome::fail("n=" + std::to_string(n) + ": " + std::to_string(a) + " vs brute force " +
                                         std::to_string(b));
            ++checked;
        }
    return CaseOutcome::pass(std::to_string(checked) + " monomial ideals, up to 8 variables");
}

CaseOutcome determinant_agreement(std::uint64_t seed, std::size_t size) {
    RingPtr R = RingBuilder().vars({"x", "y"}).build();
    std::mt19937_64 rng(seed);
    for (int it = 0; it < 3; ++it) {
        PolyMatrix M(R, size, size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) M.at(i, j) = random_polynomial(R, rng, 2, 1);
        Polynomial a = det_cofactor(M), b = det_bareiss(M);
        if (a != b) return CaseOutcome::fail("cofactor " + a.str() + " vs Bareiss " + b.str());
        std::map<std::string, Rational> pt{{"x", Rational(2, 3)}, {"y", Rational(-5, 7)}};
        if (det(M.specialize(pt)) != a.specialize(pt)) return CaseOutcome::fail("det does not commute with evaluation");
    }
    return CaseOutcome::pass("3 random matrices");
}

}  // namespace

std::vector<CaseSpec> engine_cases() {
    std::vector<CaseSpec> out;
    out.push_back(engine_case("gb_idempotence", {}, gb_idempotence));
    out.push_back(engine_case("membership_oracle", {{"nvars", "<=3"}}, membership_oracle));
    out.push_back(engine_case("monomial_dim_brute", {{"nvars", "<=8"}}, monomial_dimension_brute));
    for (std::size_t k = 1; k <= 5; ++k)
        out.push_back(engine_case("det_agree/size=" + std::to_string(k), {{"size", std::to_string(k)}},
                                  [k](std::uint64_t s) { return determinant_agreement(s, k); }));
    return out;
}

}  // namespace chowforge
