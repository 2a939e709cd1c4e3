#pragma once

#include "chowforge/exactpoly.hpp"

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowforge {

struct Budget {
    std::uint64_t steps = 10'000'000;
    double seconds = 300.0;
};

struct GbStats {
    std::uint64_t pairs = 0;
    std::uint64_t reductions = 0;
    std::uint64_t zero_reductions = 0;
    std::size_t max_basis = 0;
    double seconds = 0.0;

    GbStats& operator+=(const GbStats& o);
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, GbStats s) : std::runtime_error(what), stats(s) {}
    GbStats stats;
};

// Per-thread budget shared by every Groebner computation made while the
// scope is alive. Nested scopes replace the outer one until destroyed.
class BudgetScope {
public:
    explicit BudgetScope(Budget b);
    ~BudgetScope();
    BudgetScope(const BudgetScope&) = delete;
    BudgetScope& operator=(const BudgetScope&) = delete;

    static GbStats accumulated();

    struct State;

private:
    std::unique_ptr<State> state_;
    State* previous_ = nullptr;
};

struct GbInternal;

class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, MonomialOrder ord, std::vector<Polynomial> elements, GbStats stats);

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return ord_; }
    // Reduced, monic, ascending by leading monomial.
    const std::vector<Polynomial>& elements() const { return elems_; }
    const GbStats& stats() const { return stats_; }
    bool is_unit() const;
    bool is_zero() const { return elems_.empty(); }
    std::vector<Monomial> leading_monomials() const;

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

private:
    RingPtr ring_;
    MonomialOrder ord_;
    std::vector<Polynomial> elems_;
    GbStats stats_;
    std::shared_ptr<const GbInternal> internal_;
};

enum class GbStatus { Ok, Timeout };

struct GbResult {
    GbStatus status = GbStatus::Ok;
    std::shared_ptr<const GroebnerBasis> basis;
    GbStats stats;
};

// Buchberger with sugar selection, Gebauer-Moeller pair criteria and
// fraction-free reduction. Never returns a partial basis as complete.
GbResult buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                    const Budget& budget);

// Same, but draws on the thread's BudgetScope and throws BudgetExceeded.
std::shared_ptr<const GroebnerBasis> groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                                    const MonomialOrder& ord);

class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> generators);
    Ideal(const Ideal& o);
    Ideal& operator=(const Ideal& o);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    // Generators together with the ring's carried relations.
    std::vector<Polynomial> full_generators() const;
    bool has_no_generators() const { return gens_.empty(); }

    std::shared_ptr<const GroebnerBasis> groebner(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

    bool contains(const Polynomial& f) const;
    Polynomial normal_form(const Polynomial& f) const;
    bool is_unit() const;
    // True when generators plus relations generate the zero ideal.
    bool is_zero() const;

    Ideal operator+(const Ideal& o) const;
    Ideal operator*(const Ideal& o) const;
    Ideal with(const std::vector<Polynomial>& extra) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::mutex mu_;
    mutable std::vector<std::pair<MonomialOrder, std::shared_ptr<const GroebnerBasis>>> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal saturation(const Ideal& a, const Polynomial& f);
// I : J^infinity as the intersection of saturations by the generators of J.
Ideal saturation(const Ideal& a, const Ideal& j);
// Eliminates the named variables; the result lives in the subring of the
// remaining variables (no carried relations).
Ideal eliminate(const Ideal& a, const std::vector<std::string>& front_vars);
int krull_dim(const Ideal& a);
bool ideals_equal(const Ideal& a, const Ideal& b);
bool is_unit_ideal(const Ideal& a);

// Krull dimension of a monomial ideal given by its generators: size of a
// largest variable subset containing the support of no generator.
int monomial_dimension(const std::vector<Monomial>& gens, std::size_t nvars);

// Ring of the kept variables of r (simplices kept when all their free
// coordinates are kept); relations dropped.
RingPtr subring(const Ring& r, const std::vector<std::string>& keep);
// Ring with one fresh leading variable.
RingPtr with_leading_variable(const Ring& r, const std::string& base, std::string* chosen);

// Exchange format.
std::string export_ideal(const Ideal& a);
Ideal import_ideal(const std::string& text);

}  // namespace chowforge
