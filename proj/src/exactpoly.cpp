#include "chowforge/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chowforge {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Storage e) : e_(std::move(e)) {
    for (auto v : e_) deg_ += v;
}

void Monomial::set(std::size_t i, std::uint32_t v) {
    deg_ = deg_ - e_[i] + v;
    e_[i] = v;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.resize(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        std::uint64_t s = std::uint64_t(e_[i]) + o.e_[i];
        if (s > kExponentCap) throw std::overflow_error("exponent overflow");
        r.e_[i] = static_cast<std::uint32_t>(s);
    }
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    Monomial r;
    r.e_.resize(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = o.e_[i] - e_[i];
    r.deg_ = o.deg_ - deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    r.e_.resize(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] = std::max(e_[i], o.e_[i]);
        r.deg_ += r.e_[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

Monomial Monomial::pow(std::uint64_t k) const {
    Monomial r;
    r.e_.resize(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        std::uint64_t v = std::uint64_t(e_[i]) * k;
        if (e_[i] && v / e_[i] != k) throw std::overflow_error("exponent overflow");
        if (v > kExponentCap) throw std::overflow_error("exponent overflow");
        r.e_[i] = static_cast<std::uint32_t>(v);
        r.deg_ += v;
    }
    return r;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : e_) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// ---------------------------------------------------------------- orders

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
    case OrderKind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    case OrderKind::GrevLex: {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        return 0;
    }
    case OrderKind::BlockElim: {
        std::size_t k = std::min(block, a.size());
        int c = grevlex_range(a, b, 0, k);
        if (c) return c;
        return grevlex_range(a, b, k, a.size());
    }
    }
    return 0;
}

std::string MonomialOrder::key() const {
    switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrevLex: return "grevlex";
    case OrderKind::BlockElim: return "elim" + std::to_string(block);
    }
    return "?";
}

bool canonical_greater(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// ---------------------------------------------------------------- rationals

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(text));
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
public:
    Parser(const Ring& ring, std::string_view text) : ring_(ring), s_(text) {}

    Polynomial run() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + why +
                                    " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected digits");
        return std::string(s_.substr(b, pos_ - b));
    }

    Polynomial expr() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Polynomial acc = product();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc = acc + product();
            else if (eat('-')) acc = acc - product();
            else break;
        }
        return acc;
    }

    Polynomial product() {
        Polynomial acc = power();
        while (eat('*')) acc = acc * power();
        return acc;
    }

    Polynomial power() {
        Polynomial b = primary();
        if (eat('^')) {
            std::string d = digits();
            Integer e(d);
            if (e > Integer(static_cast<unsigned long>(kExponentCap))) throw std::overflow_error("exponent overflow");
            b = b.pow(e.get_ui());
        }
        return b;
    }

    Polynomial primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(digits());
            Integer den(1);
            std::size_t save = pos_;
            if (eat('/')) {
                skip();
                if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    den = Integer(digits());
                    if (den == 0) fail("zero denominator");
                } else {
                    pos_ = save;
                }
            }
            Rational q(num, den);
            q.canonicalize();
            return ring_.constant(q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t b = pos_;
            while (pos_ < s_.size()) {
                char d = s_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.') {
                    ++pos_;
                } else if (d == '{') {
                    int depth = 0;
                    while (pos_ < s_.size()) {
                        if (s_[pos_] == '{') ++depth;
                        if (s_[pos_] == '}') --depth;
                        ++pos_;
                        if (depth == 0) break;
                    }
                    if (depth != 0) fail("unbalanced brace");
                } else {
                    break;
                }
            }
            std::string name(s_.substr(b, pos_ - b));
            return ring_.var(name);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const Ring& ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

// Merge two descending term lists with coefficient scale on the second.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (canonical_greater(a[i].m, b[j].m)) {
            out.push_back(a[i++]);
        } else if (canonical_greater(b[j].m, a[i].m)) {
            out.push_back(b[j]);
            if (subtract) out.back().c = -out.back().c;
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].c - b[j].c) : Rational(a[i].c + b[j].c);
            if (c != 0) out.push_back(Term{a[i].m, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        out.push_back(b[j]);
        if (subtract) out.back().c = -out.back().c;
    }
    return out;
}

// Sum of many sorted term lists by pairwise merging.
std::vector<Term> sum_lists(std::vector<std::vector<Term>> lists) {
    if (lists.empty()) return {};
    while (lists.size() > 1) {
        std::vector<std::vector<Term>> next;
        next.reserve((lists.size() + 1) / 2);
        for (std::size_t k = 0; k + 1 < lists.size(); k += 2) {
            next.push_back(merge_terms(lists[k], lists[k + 1], false));
        }
        if (lists.size() % 2) next.push_back(std::move(lists.back()));
        lists.swap(next);
    }
    return std::move(lists.front());
}

}  // namespace

// ---------------------------------------------------------------- Ring

std::optional<std::size_t> Ring::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Ring::index(std::string_view name) const {
    auto i = find(name);
    if (!i) throw std::invalid_argument("unknown variable: " + std::string(name));
    return *i;
}

bool Ring::has_alias(std::string_view name) const {
    for (const auto& a : aliases_)
        if (a.name == name) return true;
    return false;
}

std::vector<Polynomial> Ring::relations() const {
    std::vector<Polynomial> out;
    for (const auto& r : relations_) out.emplace_back(self(), r);
    return out;
}

Polynomial Ring::var(std::size_t i) const {
    if (i >= vars_.size()) throw std::out_of_range("variable index");
    Monomial m(vars_.size());
    m.set(i, 1);
    return Polynomial(self(), {Term{m, Rational(1)}});
}

Polynomial Ring::var(std::string_view name) const {
    if (auto i = find(name)) return var(*i);
    for (const auto& a : aliases_) {
        if (a.name != name) continue;
        std::vector<Term> t;
        if (a.constant != 0) t.push_back(Term{Monomial(vars_.size()), a.constant});
        for (const auto& [v, c] : a.linear) {
            Monomial m(vars_.size());
            m.set(v, 1);
            t.push_back(Term{m, c});
        }
        return Polynomial(self(), std::move(t));
    }
    throw std::invalid_argument("unknown variable: " + std::string(name));
}

Polynomial Ring::constant(const Rational& c) const {
    if (c == 0) return zero();
    return Polynomial(self(), {Term{Monomial(vars_.size()), c}});
}

Polynomial Ring::zero() const { return Polynomial(self()); }
Polynomial Ring::one() const { return constant(Rational(1)); }

Polynomial Ring::parse(std::string_view text) const { return Parser(*this, text).run(); }

bool Ring::same_as(const Ring& o) const {
    if (this == &o) return true;
    if (vars_ != o.vars_ || aliases_.size() != o.aliases_.size() || relations_.size() != o.relations_.size())
        return false;
    for (std::size_t i = 0; i < aliases_.size(); ++i)
        if (aliases_[i].name != o.aliases_[i].name) return false;
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        const auto& a = relations_[i];
        const auto& b = o.relations_[i];
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].m != b[k].m || a[k].c != b[k].c) return false;
    }
    return true;
}

std::string Ring::describe() const {
    std::ostringstream os;
    os << "QQ[";
    for (std::size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i];
    os << "]";
    for (const auto& s : simplices_) {
        os << " " << s.first << "=1";
        for (auto c : s.coords) os << "-" << vars_[c];
    }
    for (const auto& r : relations()) os << " ; " << r.str() << "=0";
    return os.str();
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
    if (!same_ring(a, b)) throw std::invalid_argument(std::string("ring mismatch in ") + what);
}

// ---------------------------------------------------------------- RingBuilder

RingBuilder& RingBuilder::var(std::string name) {
    items_.push_back(Item{false, {std::move(name)}});
    return *this;
}

RingBuilder& RingBuilder::vars(const std::vector<std::string>& names) {
    for (const auto& n : names) var(n);
    return *this;
}

RingBuilder& RingBuilder::simplex(const std::vector<std::string>& names) {
    if (names.empty()) throw std::invalid_argument("simplex needs at least one coordinate");
    items_.push_back(Item{true, names});
    return *this;
}

RingBuilder& RingBuilder::relation(std::string text) {
    relation_text_.push_back(std::move(text));
    return *this;
}

RingBuilder& RingBuilder::extend(const Ring& r) {
    std::vector<bool> in_simplex(r.nvars(), false);
    std::map<std::size_t, std::size_t> simplex_start;
    for (std::size_t k = 0; k < r.simplices().size(); ++k) {
        const auto& s = r.simplices()[k];
        for (auto c : s.coords) in_simplex[c] = true;
        std::size_t start = s.coords.empty() ? r.nvars() + k : s.coords.front();
        simplex_start[start] = k;
    }
    auto push_simplex = [&](std::size_t k) {
        const auto& s = r.simplices()[k];
        std::vector<std::string> names{s.first};
        for (auto c : s.coords) names.push_back(r.name(c));
        simplex(names);
    };
    for (std::size_t i = 0; i < r.nvars(); ++i) {
        if (auto it = simplex_start.find(i); it != simplex_start.end()) push_simplex(it->second);
        if (!in_simplex[i]) var(r.name(i));
    }
    for (const auto& [start, k] : simplex_start)
        if (start >= r.nvars()) push_simplex(k);
    for (const auto& rel : r.relations_) copied_.push_back(CopiedRelation{r.vars_, rel});
    return *this;
}

RingPtr RingBuilder::build() const {
    auto ring = std::make_shared<Ring>();
    std::set<std::string> seen;
    auto claim = [&](const std::string& n) {
        if (n.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
    };
    for (const auto& it : items_) {
        if (!it.is_simplex) {
            claim(it.names[0]);
            ring->index_[it.names[0]] = ring->vars_.size();
            ring->vars_.push_back(it.names[0]);
            continue;
        }
        claim(it.names[0]);
        Ring::Simplex sx;
        sx.first = it.names[0];
        Ring::Alias al;
        al.name = it.names[0];
        al.constant = 1;
        for (std::size_t k = 1; k < it.names.size(); ++k) {
            claim(it.names[k]);
            std::size_t idx = ring->vars_.size();
            ring->index_[it.names[k]] = idx;
            ring->vars_.push_back(it.names[k]);
            sx.coords.push_back(idx);
            al.linear.emplace_back(idx, Rational(-1));
        }
        ring->simplices_.push_back(sx);
        ring->aliases_.push_back(al);
    }
    ring->self_ = ring;
    std::size_t nv = ring->vars_.size();
    for (const auto& cr : copied_) {
        std::vector<Term> terms;
        for (const auto& t : cr.terms) {
            Monomial m(nv);
            for (std::size_t i = 0; i < cr.names.size(); ++i)
                if (t.m[i]) m.set(ring->index(cr.names[i]), t.m[i]);
            terms.push_back(Term{m, t.c});
        }
        Polynomial p(ring, std::move(terms));
        ring->relations_.push_back(p.terms());
    }
    for (const auto& txt : relation_text_) {
        Polynomial p = ring->parse(txt);
        if (p.is_zero()) continue;
        ring->relations_.push_back(p.terms());
    }
    return ring;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    canonicalize();
}

void Polynomial::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return canonical_greater(a.m, b.m); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c += t.c;
        } else {
            if (!out.empty() && out.back().c == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().c == 0) out.pop_back();
    terms_ = std::move(out);
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

std::optional<Rational> Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].m.is_one()) return terms_[0].c;
    return std::nullopt;
}

std::uint64_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().m.degree(); }

std::uint32_t Polynomial::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m[var]);
    return d;
}

bool Polynomial::uses(std::size_t var) const {
    for (const auto& t : terms_)
        if (t.m[var]) return true;
    return false;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "add");
    Polynomial r(ring_);
    r.terms_ = merge_terms(terms_, o.terms_, false);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "sub");
    Polynomial r(ring_);
    r.terms_ = merge_terms(terms_, o.terms_, true);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.m * m, t.c * c});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "mul");
    if (terms_.empty() || o.terms_.empty()) return Polynomial(ring_);
    const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
    const Polynomial& big = terms_.size() <= o.terms_.size() ? o : *this;
    // Multiplying a sorted list by a monomial keeps it sorted.
    std::vector<std::vector<Term>> lists;
    lists.reserve(small.terms_.size());
    for (const auto& s : small.terms_) {
        std::vector<Term> l;
        l.reserve(big.terms_.size());
        for (const auto& b : big.terms_) l.push_back(Term{b.m * s.m, b.c * s.c});
        lists.push_back(std::move(l));
    }
    Polynomial r(ring_);
    r.terms_ = sum_lists(std::move(lists));
    return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
    if (k == 0) {
        if (!ring_) throw std::invalid_argument("pow on ringless polynomial");
        return ring_->one();
    }
    if (terms_.size() == 1) {
        Polynomial r(ring_);
        Rational c;
        mpz_pow_ui(c.get_num_mpz_t(), terms_[0].c.get_num_mpz_t(), k);
        mpz_pow_ui(c.get_den_mpz_t(), terms_[0].c.get_den_mpz_t(), k);
        c.canonicalize();
        r.terms_.push_back(Term{terms_[0].m.pow(k), c});
        return r;
    }
    Polynomial result = ring_->one();
    Polynomial base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    if (!terms_.empty() || !o.terms_.empty()) require_same_ring(ring_, o.ring_, "compare");
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (!ring_) throw std::invalid_argument("substitute on ringless polynomial");
    if (images.size() != ring_->nvars())
        throw std::invalid_argument("substitute: expected " + std::to_string(ring_->nvars()) + " images");
    RingPtr target;
    for (const auto& im : images) {
        if (!im.ring()) throw std::invalid_argument("substitute: unassigned variable");
        if (!target) target = im.ring();
        else require_same_ring(target, im.ring(), "substitute images");
    }
    if (!target) target = ring_;
    if (terms_.empty()) return Polynomial(target);
    std::size_t nv = ring_->nvars();
    // Powers cache per variable.
    std::vector<std::vector<Polynomial>> powers(nv);
    auto power_of = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) {
            cache.push_back(target->one());
            cache.push_back(images[v]);
        }
        while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    };
    std::vector<std::vector<Term>> parts;
    parts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Polynomial acc = target->constant(t.c);
        for (std::size_t v = 0; v < nv && !acc.is_zero(); ++v) {
            if (t.m[v]) acc = acc * power_of(v, t.m[v]);
        }
        parts.push_back(std::move(acc.terms_));
    }
    Polynomial r(target);
    r.terms_ = sum_lists(std::move(parts));
    return r;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& assignment) const {
    if (!ring_) throw std::invalid_argument("substitute on ringless polynomial");
    RingPtr target;
    for (const auto& [name, im] : assignment) {
        if (!ring_->find(name)) {
            if (ring_->has_alias(name)) throw std::invalid_argument("cannot assign eliminated coordinate " + name);
            throw std::invalid_argument("substitute: unknown variable " + name);
        }
        if (!target) target = im.ring();
        else require_same_ring(target, im.ring(), "substitute images");
    }
    if (!target) return *this;
    std::vector<Polynomial> images;
    images.reserve(ring_->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        auto it = assignment.find(ring_->name(i));
        if (it != assignment.end()) images.push_back(it->second);
        else images.push_back(target->var(ring_->name(i)));
    }
    return substitute(images);
}

Polynomial Polynomial::specialize(const std::map<std::string, Rational>& values) const {
    std::vector<std::optional<Rational>> val(ring_->nvars());
    for (const auto& [n, q] : values) val[ring_->index(n)] = q;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term u{t.m, t.c};
        for (std::size_t v = 0; v < val.size(); ++v) {
            if (!val[v] || !t.m[v]) continue;
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), val[v]->get_num_mpz_t(), t.m[v]);
            mpz_pow_ui(p.get_den_mpz_t(), val[v]->get_den_mpz_t(), t.m[v]);
            p.canonicalize();
            u.c *= p;
            u.m.set(v, 0);
        }
        if (u.c != 0) out.push_back(std::move(u));
    }
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (!ring_ || var >= ring_->nvars()) throw std::invalid_argument("derivative: unknown variable");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (!t.m[var]) continue;
        Term u{t.m, t.c * t.m[var]};
        u.m.set(var, t.m[var] - 1);
        out.push_back(std::move(u));
    }
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::derivative(std::string_view var) const { return derivative(ring_->index(var)); }

Polynomial Polynomial::coefficient_of(std::size_t var, std::uint32_t k) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.m[var] != k) continue;
        Term u{t.m, t.c};
        u.m.set(var, 0);
        out.push_back(std::move(u));
    }
    return Polynomial(ring_, std::move(out));
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != ring_->nvars()) throw std::invalid_argument("evaluate: point size");
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational v = t.c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (std::uint32_t e = 0; e < t.m[i]; ++e) v *= point[i];
        }
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::to_ring(const RingPtr& target) const {
    if (same_ring(ring_, target)) return *this;
    if (ring_->nvars() == 0) return is_zero() ? target->zero() : target->constant(terms_.front().c);
    std::vector<Polynomial> images;
    images.reserve(ring_->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (!uses(i)) {
            images.push_back(target->zero());
            continue;
        }
        images.push_back(target->var(ring_->name(i)));
    }
    return substitute(images);
}

const Term& Polynomial::leading(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
    if (ord.kind == OrderKind::GrevLex) return terms_.front();
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (ord.greater(terms_[i].m, terms_[best].m)) best = i;
    return terms_[best];
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty()) return *this;
    Integer g = 0, l = 1;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
    }
    Rational f(l, g);
    f.canonicalize();
    if (terms_.front().c < 0) f = -f;
    return scaled(f);
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    Rational c = leading(ord).c;
    return scaled(1 / c);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational a = abs(t.c);
        bool neg = t.c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = (a == 1);
        bool wrote = false;
        if (!unit || t.m.is_one()) {
            os << rational_str(a);
            wrote = true;
        }
        for (std::size_t v = 0; v < t.m.size(); ++v) {
            if (!t.m[v]) continue;
            if (wrote) os << "*";
            os << ring_->name(v);
            if (t.m[v] > 1) os << "^" << t.m[v];
            wrote = true;
        }
    }
    return os.str();
}

std::size_t Polynomial::hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
        h ^= t.m.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= mpz_get_ui(t.c.get_num_mpz_t()) * 31 + mpz_get_ui(t.c.get_den_mpz_t());
    }
    return h;
}

}  // namespace chowforge
