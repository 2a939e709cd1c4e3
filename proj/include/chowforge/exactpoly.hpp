#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace chowforge {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr std::uint64_t kExponentCap = 2147483647ULL;

// Exponent vector with cached total degree.
class Monomial {
public:
    using Storage = boost::container::small_vector<std::uint32_t, 16>;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(Storage e);

    std::size_t size() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, std::uint32_t v);
    std::uint64_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }
    const Storage& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Requires divides(o).
    Monomial quotient_of(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;
    Monomial pow(std::uint64_t k) const;

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    std::size_t hash() const;

private:
    Storage e_;
    std::uint64_t deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { Lex, GrevLex, BlockElim };

// Total order on monomials. BlockElim(k) compares the first k variables by
// grevlex first, then the remaining variables by grevlex.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::size_t block = 0;

    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder elimination(std::size_t k) { return {OrderKind::BlockElim, k}; }

    // <0, 0, >0 as a is smaller, equal, larger than b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    std::string key() const;
    bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
};

struct Term {
    Monomial m;
    Rational c;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;
class Polynomial;

// Free polynomial ring over QQ plus bookkeeping for quotient relations.
// Simplex coordinates t0 + ... + tr = 1 are eliminated eagerly: the first
// coordinate of every simplex is an alias for 1 - (the others). All other
// relations are carried and appended to ideals built over the ring.
class Ring {
public:
    struct Alias {
        std::string name;
        Rational constant;
        std::vector<std::pair<std::size_t, Rational>> linear;
    };
    struct Simplex {
        std::string first;                 // eliminated coordinate
        std::vector<std::size_t> coords;   // indices of the free coordinates
    };

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& name(std::size_t i) const { return vars_.at(i); }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index(std::string_view name) const;
    bool has_alias(std::string_view name) const;
    const std::vector<Alias>& aliases() const { return aliases_; }
    const std::vector<Simplex>& simplices() const { return simplices_; }

    std::vector<Polynomial> relations() const;
    std::size_t relation_count() const { return relations_.size(); }

    // Variable or alias as a polynomial.
    Polynomial var(std::string_view name) const;
    Polynomial var(std::size_t i) const;
    Polynomial constant(const Rational& c) const;
    Polynomial zero() const;
    Polynomial one() const;
    Polynomial parse(std::string_view text) const;

    bool same_as(const Ring& o) const;
    std::string describe() const;

    RingPtr self() const { return self_.lock(); }

private:
    friend class RingBuilder;
    std::vector<std::string> vars_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Alias> aliases_;
    std::vector<Simplex> simplices_;
    std::vector<std::vector<Term>> relations_;
    std::weak_ptr<const Ring> self_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

class RingBuilder {
public:
    RingBuilder& var(std::string name);
    RingBuilder& vars(const std::vector<std::string>& names);
    // Coordinates of a simplex; names[0] becomes the eliminated alias.
    RingBuilder& simplex(const std::vector<std::string>& names);
    // Relation text in the polynomial syntax, parsed after all variables exist.
    RingBuilder& relation(std::string text);
    // Copy variables, simplices and relations of an existing ring.
    RingBuilder& extend(const Ring& r);
    RingPtr build() const;

private:
    struct Item {
        bool is_simplex = false;
        std::vector<std::string> names;
    };
    struct CopiedRelation {
        std::vector<std::string> names;
        std::vector<Term> terms;
    };
    std::vector<Item> items_;
    std::vector<std::string> relation_text_;
    std::vector<CopiedRelation> copied_;
};

// Sparse polynomial; terms kept in descending grevlex order, no zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);  // canonicalizes

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Rational> constant_value() const;
    std::uint64_t total_degree() const;
    std::uint32_t degree_in(std::size_t var) const;
    bool uses(std::size_t var) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m, const Rational& c) const;
    Polynomial pow(std::uint64_t k) const;

    // Structural equality of canonical term lists in the same ring.
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // images[i] is the image of ring variable i; all images share one ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    // Partial assignment by name; unassigned variables map to themselves.
    Polynomial substitute(const std::map<std::string, Polynomial>& assignment) const;
    // Assign constants to some variables, staying in the same ring.
    Polynomial specialize(const std::map<std::string, Rational>& values) const;
    Polynomial derivative(std::size_t var) const;
    Polynomial derivative(std::string_view var) const;
    // Coefficient polynomial of var^k.
    Polynomial coefficient_of(std::size_t var, std::uint32_t k) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    // Map into another ring by variable name (names must exist there).
    Polynomial to_ring(const RingPtr& target) const;

    // Leading term under a chosen order.
    const Term& leading(const MonomialOrder& ord) const;

    // Integer content normalization: positive leading coefficient, coprime
    // integer coefficients. Returns the scale factor applied.
    Polynomial primitive() const;
    Polynomial monic(const MonomialOrder& ord) const;

    std::string str() const;
    std::size_t hash() const;

private:
    void canonicalize();
    RingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// Descending grevlex comparison used for canonical storage.
bool canonical_greater(const Monomial& a, const Monomial& b);

std::string rational_str(const Rational& q);
Rational parse_rational(std::string_view text);

// Check a list of polynomials shares one ring; throws on mismatch.
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what);

}  // namespace chowforge
