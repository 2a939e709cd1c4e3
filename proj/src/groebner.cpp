#include "chowforge/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace chowforge {

GbStats& GbStats::operator+=(const GbStats& o) {
    pairs += o.pairs;
    reductions += o.reductions;
    zero_reductions += o.zero_reductions;
    max_basis = std::max(max_basis, o.max_basis);
    seconds += o.seconds;
    return *this;
}

// ---------------------------------------------------------------- budgets

using Clock = std::chrono::steady_clock;

struct BudgetScope::State {
    Budget budget;
    Clock::time_point start;
    std::uint64_t used = 0;
    GbStats total;
};

namespace {
thread_local BudgetScope::State* g_scope = nullptr;
}

BudgetScope::BudgetScope(Budget b) : state_(std::make_unique<State>()) {
    state_->budget = b;
    state_->start = Clock::now();
    previous_ = g_scope;
    g_scope = state_.get();
}

BudgetScope::~BudgetScope() { g_scope = previous_; }

GbStats BudgetScope::accumulated() { return g_scope ? g_scope->total : GbStats{}; }

namespace {

// Step accounting for one Buchberger run, optionally tied to the scope.
class Meter {
    using State = BudgetScope::State;

public:
    Meter(const Budget& b, bool use_scope) {
        if (use_scope && g_scope) {
            scope_ = g_scope;
            budget_ = scope_->budget;
            start_ = scope_->start;
            used0_ = scope_->used;
        } else {
            budget_ = b;
            start_ = Clock::now();
        }
        own_start_ = Clock::now();
    }
    // False when the budget is exhausted.
    bool step() {
        ++steps_;
        if (scope_) ++scope_->used;
        if (used0_ + steps_ > budget_.steps) return false;
        if ((steps_ & 63) == 0) {
            double s = std::chrono::duration<double>(Clock::now() - start_).count();
            if (s > budget_.seconds) return false;
        }
        return true;
    }
    bool time_ok() const {
        return std::chrono::duration<double>(Clock::now() - start_).count() <= budget_.seconds;
    }
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - own_start_).count(); }
    void finish(const GbStats& s) {
        if (scope_) scope_->total += s;
    }

private:
    Budget budget_;
    Clock::time_point start_, own_start_;
    State* scope_ = nullptr;
    std::uint64_t used0_ = 0;
    std::uint64_t steps_ = 0;
};

struct Exhausted {};

// ---------------------------------------------------------------- internal polys

struct ITerm {
    Monomial m;
    Integer c;
};

struct IPoly {
    std::vector<ITerm> t;  // descending under the active order
    std::uint64_t sugar = 0;
    std::uint64_t mask = 0;  // support mask of the leading monomial
};

std::uint64_t support_mask(const Monomial& m) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) k |= (std::uint64_t(1) << (i & 63));
    return k;
}

void set_mask(IPoly& p) { p.mask = p.t.empty() ? 0 : support_mask(p.t.front().m); }

// Integer primitive form of a rational polynomial; returns factor s with
// poly = s * result.
IPoly to_internal(const Polynomial& f, const MonomialOrder& ord, Rational* factor) {
    IPoly p;
    Integer l = 1, g = 0;
    for (const auto& t : f.terms()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
    }
    if (f.is_zero()) {
        if (factor) *factor = 1;
        return p;
    }
    p.t.reserve(f.size());
    for (const auto& t : f.terms()) {
        Integer c = t.c.get_num() * (l / t.c.get_den());
        c /= g;
        p.t.push_back(ITerm{t.m, std::move(c)});
    }
    if (ord.kind != OrderKind::GrevLex)
        std::sort(p.t.begin(), p.t.end(), [&](const ITerm& a, const ITerm& b) { return ord.greater(a.m, b.m); });
    Rational s(g, l);
    s.canonicalize();
    if (p.t.front().c < 0) {
        for (auto& t : p.t) t.c = -t.c;
        s = -s;
    }
    if (factor) *factor = s;
    p.sugar = 0;
    for (const auto& t : p.t) p.sugar = std::max<std::uint64_t>(p.sugar, t.m.degree());
    set_mask(p);
    return p;
}

Polynomial to_polynomial(const IPoly& p, const RingPtr& ring) {
    std::vector<Term> t;
    t.reserve(p.t.size());
    for (const auto& x : p.t) t.push_back(Term{x.m, Rational(x.c)});
    return Polynomial(ring, std::move(t));
}

Integer content(const std::vector<ITerm>& a, std::size_t from = 0) {
    Integer g = 0;
    for (std::size_t i = from; i < a.size(); ++i) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[i].c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// out = ca * a[ia..] - cb * m * b[ib..]
void combine(const std::vector<ITerm>& a, std::size_t ia, const Integer& ca, const std::vector<ITerm>& b,
             std::size_t ib, const Integer& cb, const Monomial& m, const MonomialOrder& ord, std::vector<ITerm>& out) {
    out.clear();
    out.reserve(a.size() - ia + b.size() - ib);
    bool ca_one = (ca == 1);
    Integer tmp;
    while (ia < a.size() && ib < b.size()) {
        Monomial bm = b[ib].m * m;
        int c = ord.compare(a[ia].m, bm);
        if (c > 0) {
            out.push_back(ITerm{a[ia].m, ca_one ? a[ia].c : Integer(a[ia].c * ca)});
            ++ia;
        } else if (c < 0) {
            out.push_back(ITerm{std::move(bm), Integer(-(b[ib].c * cb))});
            ++ib;
        } else {
            tmp = a[ia].c * ca;
            tmp -= b[ib].c * cb;
            if (tmp != 0) out.push_back(ITerm{std::move(bm), tmp});
            ++ia;
            ++ib;
        }
    }
    for (; ia < a.size(); ++ia) out.push_back(ITerm{a[ia].m, ca_one ? a[ia].c : Integer(a[ia].c * ca)});
    for (; ib < b.size(); ++ib) out.push_back(ITerm{b[ib].m * m, Integer(-(b[ib].c * cb))});
}

class Reducer {
public:
    Reducer(const MonomialOrder& ord, Meter& meter, GbStats& stats) : ord_(ord), meter_(meter), stats_(stats) {}

    // Fully reduces h by the polynomials in G selected by idx. scale, when
    // given, is multiplied by the factor applied to h (result = scale*h_in).
    IPoly reduce(IPoly h, const std::vector<IPoly>& G, const std::vector<std::size_t>& idx, Rational* scale,
                 bool tail = true) {
        std::vector<ITerm> rem;
        std::vector<ITerm> work = std::move(h.t), next;
        std::size_t pos = 0;
        std::uint64_t sugar = h.sugar;
        std::size_t since_content = 0;
        while (pos < work.size()) {
            const ITerm& lt = work[pos];
            std::uint64_t mk = support_mask(lt.m);
            const IPoly* best = nullptr;
            for (std::size_t k : idx) {
                const IPoly& g = G[k];
                if (g.mask & ~mk) continue;
                if (!g.t.front().m.divides(lt.m)) continue;
                if (!best || g.t.size() < best->t.size()) best = &g;
            }
            if (!best) {
                if (!tail) break;
                rem.push_back(std::move(work[pos]));
                ++pos;
                continue;
            }
            if (!meter_.step()) throw Exhausted{};
            ++stats_.reductions;
            Monomial q = best->t.front().m.quotient_of(lt.m);
            Integer d;
            mpz_gcd(d.get_mpz_t(), lt.c.get_mpz_t(), best->t.front().c.get_mpz_t());
            Integer ca = best->t.front().c / d;
            Integer cb = lt.c / d;
            if (ca < 0) {
                ca = -ca;
                cb = -cb;
            }
            sugar = std::max(sugar, best->sugar + q.degree());
            combine(work, pos + 1, ca, best->t, 1, cb, q, ord_, next);
            work.swap(next);
            pos = 0;
            if (ca != 1) {
                for (auto& r : rem) r.c *= ca;
                if (scale) *scale *= ca;
            }
            if (++since_content >= 8) {
                since_content = 0;
                Integer g = content(rem);
                if (g != 1) {
                    for (std::size_t i = 0; i < work.size() && g != 1; ++i)
                        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), work[i].c.get_mpz_t());
                }
                if (g > 1) {
                    for (auto& r : rem) r.c /= g;
                    for (auto& w : work) w.c /= g;
                    if (scale) *scale /= g;
                }
            }
        }
        IPoly out;
        out.t = std::move(rem);
        for (std::size_t i = pos; i < work.size(); ++i) out.t.push_back(std::move(work[i]));
        out.sugar = sugar;
        if (!out.t.empty()) {
            Integer g = content(out.t);
            if (out.t.front().c < 0) g = -g;
            if (g != 1) {
                for (auto& r : out.t) r.c /= g;
                if (scale) *scale /= g;
            }
        }
        set_mask(out);
        return out;
    }

private:
    const MonomialOrder& ord_;
    Meter& meter_;
    GbStats& stats_;
};

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t sugar;
};

IPoly spoly(const IPoly& f, const IPoly& g, const Monomial& l, const MonomialOrder& ord) {
    Monomial qf = f.t.front().m.quotient_of(l);
    Monomial qg = g.t.front().m.quotient_of(l);
    Integer d;
    mpz_gcd(d.get_mpz_t(), f.t.front().c.get_mpz_t(), g.t.front().c.get_mpz_t());
    Integer cf = g.t.front().c / d;
    Integer cg = f.t.front().c / d;
    // cf * qf * f - cg * qg * g, leading terms cancel
    std::vector<ITerm> fq;
    fq.reserve(f.t.size());
    for (std::size_t k = 1; k < f.t.size(); ++k) fq.push_back(ITerm{f.t[k].m * qf, f.t[k].c});
    IPoly s;
    combine(fq, 0, cf, g.t, 1, cg, qg, ord, s.t);
    s.sugar = std::max(f.sugar + qf.degree(), g.sugar + qg.degree());
    if (!s.t.empty()) {
        Integer c = content(s.t);
        if (s.t.front().c < 0) c = -c;
        if (c != 1)
            for (auto& x : s.t) x.c /= c;
    }
    set_mask(s);
    return s;
}

}  // namespace

struct GbInternal {
    std::vector<IPoly> polys;
    std::vector<std::size_t> idx;
};

// ---------------------------------------------------------------- Buchberger

namespace {

GbResult run_buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                        const Budget& budget, bool use_scope) {
    Meter meter(budget, use_scope);
    GbResult res;
    GbStats& st = res.stats;
    Reducer red(ord, meter, st);

    auto unit_basis = [&]() {
        res.basis = std::make_shared<GroebnerBasis>(ring, ord, std::vector<Polynomial>{ring->one()}, st);
    };

    std::vector<IPoly> G;
    std::vector<std::size_t> alive;
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = ord.compare(a.lcm, b.lcm);
        if (c) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };
    std::set<Pair, decltype(pair_less)> P(pair_less);

    auto lead = [&](std::size_t k) -> const Monomial& { return G[k].t.front().m; };

    auto update = [&](IPoly h) {
        std::size_t k = G.size();
        G.push_back(std::move(h));
        const Monomial& hl = lead(k);
        // New pairs with Gebauer-Moeller pruning.
        std::vector<Pair> C;
        C.reserve(alive.size());
        for (std::size_t i : alive) C.push_back(Pair{i, k, lead(i).lcm(hl), 0});
        std::vector<bool> keep(C.size(), false);
        std::vector<bool> coprime(C.size(), false);
        for (std::size_t a = 0; a < C.size(); ++a) coprime[a] = lead(C[a].i).coprime(hl);
        for (std::size_t a = 0; a < C.size(); ++a) {
            if (coprime[a]) {
                keep[a] = true;
                continue;
            }
            bool dominated = false;
            for (std::size_t b = 0; b < C.size() && !dominated; ++b) {
                if (b == a) continue;
                if (!C[b].lcm.divides(C[a].lcm)) continue;
                if (C[b].lcm != C[a].lcm) dominated = true;
                else if (b > a ? false : keep[b]) dominated = true;  // equal lcm: keep first
                else if (b > a && coprime[b]) dominated = true;
            }
            keep[a] = !dominated;
        }
        // Old pairs killed by the chain criterion.
        for (auto it = P.begin(); it != P.end();) {
            if (hl.divides(it->lcm) && lead(it->i).lcm(hl) != it->lcm && lead(it->j).lcm(hl) != it->lcm)
                it = P.erase(it);
            else
                ++it;
        }
        for (std::size_t a = 0; a < C.size(); ++a) {
            if (!keep[a] || coprime[a]) continue;
            const IPoly& gi = G[C[a].i];
            std::uint64_t s = std::max(gi.sugar + C[a].lcm.degree() - lead(C[a].i).degree(),
                                       G[k].sugar + C[a].lcm.degree() - hl.degree());
            C[a].sugar = s;
            P.insert(C[a]);
        }
        std::vector<std::size_t> next;
        for (std::size_t i : alive)
            if (!hl.divides(lead(i))) next.push_back(i);
        next.push_back(k);
        alive.swap(next);
        st.max_basis = std::max(st.max_basis, alive.size());
    };

    try {
        std::vector<IPoly> input;
        for (const auto& g : gens) {
            require_same_ring(ring, g.ring(), "groebner input");
            if (g.is_zero()) continue;
            input.push_back(to_internal(g, ord, nullptr));
        }
        std::sort(input.begin(), input.end(), [&](const IPoly& a, const IPoly& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            return ord.compare(a.t.front().m, b.t.front().m) < 0;
        });
        for (auto& f : input) {
            IPoly h = red.reduce(std::move(f), G, alive, nullptr);
            if (h.t.empty()) continue;
            if (h.t.front().m.is_one()) {
                st.seconds = meter.elapsed();
                meter.finish(st);
                unit_basis();
                return res;
            }
            update(std::move(h));
        }
        while (!P.empty()) {
            Pair p = *P.begin();
            P.erase(P.begin());
            ++st.pairs;
            if (!meter.time_ok()) throw Exhausted{};
            IPoly s = spoly(G[p.i], G[p.j], p.lcm, ord);
            IPoly h = red.reduce(std::move(s), G, alive, nullptr);
            if (h.t.empty()) {
                ++st.zero_reductions;
                continue;
            }
            if (h.t.front().m.is_one()) {
                st.seconds = meter.elapsed();
                meter.finish(st);
                unit_basis();
                return res;
            }
            update(std::move(h));
        }
        // Interreduce the minimal basis.
        std::vector<IPoly> fin;
        for (std::size_t a = 0; a < alive.size(); ++a) {
            std::vector<std::size_t> others;
            for (std::size_t b = 0; b < alive.size(); ++b)
                if (b != a) others.push_back(alive[b]);
            IPoly rr = red.reduce(G[alive[a]], G, others, nullptr);
            fin.push_back(std::move(rr));
        }
        std::sort(fin.begin(), fin.end(),
                  [&](const IPoly& a, const IPoly& b) { return ord.compare(a.t.front().m, b.t.front().m) < 0; });
        std::vector<Polynomial> elems;
        for (const auto& f : fin) elems.push_back(to_polynomial(f, ring).monic(ord));
        st.seconds = meter.elapsed();
        meter.finish(st);
        res.basis = std::make_shared<GroebnerBasis>(ring, ord, std::move(elems), st);
    } catch (const Exhausted&) {
        res.status = GbStatus::Timeout;
        st.seconds = meter.elapsed();
        meter.finish(st);
        res.basis.reset();
    }
    return res;
}

}  // namespace

GbResult buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                    const Budget& budget) {
    return run_buchberger(ring, gens, ord, budget, false);
}

std::shared_ptr<const GroebnerBasis> groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                                    const MonomialOrder& ord) {
    GbResult r = run_buchberger(ring, gens, ord, Budget{}, true);
    if (r.status == GbStatus::Timeout)
        throw BudgetExceeded("groebner budget exhausted after " + std::to_string(r.stats.reductions) + " reductions",
                             r.stats);
    return r.basis;
}

// ---------------------------------------------------------------- GroebnerBasis

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder ord, std::vector<Polynomial> elements, GbStats stats)
    : ring_(std::move(ring)), ord_(ord), elems_(std::move(elements)), stats_(stats) {
    auto in = std::make_shared<GbInternal>();
    for (std::size_t k = 0; k < elems_.size(); ++k) {
        in->polys.push_back(to_internal(elems_[k], ord_, nullptr));
        in->idx.push_back(k);
    }
    internal_ = in;
}

bool GroebnerBasis::is_unit() const { return elems_.size() == 1 && elems_[0].is_constant(); }

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& e : elems_) out.push_back(e.leading(ord_).m);
    return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
    require_same_ring(ring_, f.ring(), "normal_form");
    if (f.is_zero()) return f;
    if (is_unit()) return Polynomial(f.ring());
    Rational s0;
    IPoly p = to_internal(f, ord_, &s0);
    Budget unlimited{~std::uint64_t(0), 1e18};
    Meter meter(unlimited, false);
    GbStats st;
    Reducer red(ord_, meter, st);
    Rational scale = 1;
    IPoly r = red.reduce(std::move(p), internal_->polys, internal_->idx, &scale);
    Polynomial out = to_polynomial(r, f.ring());
    return out.scaled(s0 / scale);
}

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) {
        require_same_ring(ring_, g.ring(), "ideal generator");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal::Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {
    std::lock_guard<std::mutex> lk(o.mu_);
    cache_ = o.cache_;
}

Ideal& Ideal::operator=(const Ideal& o) {
    if (this == &o) return *this;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const GroebnerBasis>>> c;
    {
        std::lock_guard<std::mutex> lk(o.mu_);
        c = o.cache_;
    }
    std::lock_guard<std::mutex> lk(mu_);
    ring_ = o.ring_;
    gens_ = o.gens_;
    cache_ = std::move(c);
    return *this;
}

std::vector<Polynomial> Ideal::full_generators() const {
    std::vector<Polynomial> all = gens_;
    for (auto& r : ring_->relations()) all.push_back(std::move(r));
    return all;
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner(const MonomialOrder& ord) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        for (const auto& [o, gb] : cache_)
            if (o == ord) return gb;
    }
    auto gb = groebner_basis(ring_, full_generators(), ord);
    std::lock_guard<std::mutex> lk(mu_);
    for (const auto& [o, g] : cache_)
        if (o == ord) return g;
    cache_.emplace_back(ord, gb);
    return gb;
}

bool Ideal::contains(const Polynomial& f) const { return groebner()->contains(f); }
Polynomial Ideal::normal_form(const Polynomial& f) const { return groebner()->normal_form(f); }
bool Ideal::is_unit() const { return groebner()->is_unit(); }

bool Ideal::is_zero() const {
    for (const auto& g : full_generators())
        if (!g.is_zero()) return false;
    return true;
}

Ideal Ideal::operator+(const Ideal& o) const { return ideal_sum(*this, o); }
Ideal Ideal::operator*(const Ideal& o) const { return ideal_product(*this, o); }

Ideal Ideal::with(const std::vector<Polynomial>& extra) const {
    std::vector<Polynomial> g = gens_;
    g.insert(g.end(), extra.begin(), extra.end());
    return Ideal(ring_, std::move(g));
}

std::string Ideal::str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].str();
    return s + ">";
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal_sum");
    return a.with(b.generators());
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal_product");
    // Relations are carried by the ring, so products only involve generators.
    std::vector<Polynomial> g;
    for (const auto& x : a.generators())
        for (const auto& y : b.generators()) g.push_back(x * y);
    return Ideal(a.ring(), std::move(g));
}

RingPtr with_leading_variable(const Ring& r, const std::string& base, std::string* chosen) {
    std::string name = base;
    int k = 0;
    while (r.find(name) || r.has_alias(name)) name = base + std::to_string(++k);
    if (chosen) *chosen = name;
    return RingBuilder().var(name).extend(r).build();
}

namespace {

// Elements of the block-elimination basis free of variable 0, mapped back.
std::vector<Polynomial> drop_leading(const std::shared_ptr<const GroebnerBasis>& gb, const RingPtr& back) {
    std::vector<Polynomial> out;
    for (const auto& e : gb->elements()) {
        if (e.uses(0)) continue;
        out.push_back(e.to_ring(back));
    }
    return out;
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal_intersection");
    std::string w;
    RingPtr ext = with_leading_variable(*a.ring(), "w", &w);
    Polynomial wv = ext->var(w);
    Polynomial one_minus = ext->one() - wv;
    std::vector<Polynomial> g;
    for (const auto& x : a.generators()) g.push_back(wv * x.to_ring(ext));
    for (const auto& y : b.generators()) g.push_back(one_minus * y.to_ring(ext));
    if (a.generators().empty() || b.generators().empty()) {
        // The zero ideal intersected with anything is the relation ideal.
        return Ideal(a.ring(), {});
    }
    for (auto& r : ext->relations()) g.push_back(std::move(r));
    auto gb = groebner_basis(ext, g, MonomialOrder::elimination(1));
    return Ideal(a.ring(), drop_leading(gb, a.ring()));
}

Ideal saturation(const Ideal& a, const Polynomial& f) {
    require_same_ring(a.ring(), f.ring(), "saturation");
    if (f.is_zero()) throw std::invalid_argument("saturation by zero");
    std::string w;
    RingPtr ext = with_leading_variable(*a.ring(), "w", &w);
    std::vector<Polynomial> g;
    for (const auto& x : a.generators()) g.push_back(x.to_ring(ext));
    for (auto& r : ext->relations()) g.push_back(std::move(r));
    g.push_back(ext->var(w) * f.to_ring(ext) - ext->one());
    auto gb = groebner_basis(ext, g, MonomialOrder::elimination(1));
    return Ideal(a.ring(), drop_leading(gb, a.ring()));
}

Ideal saturation(const Ideal& a, const Ideal& j) {
    require_same_ring(a.ring(), j.ring(), "saturation");
    if (j.generators().empty()) return a;
    Ideal acc = saturation(a, j.generators().front());
    for (std::size_t k = 1; k < j.generators().size(); ++k)
        acc = ideal_intersection(acc, saturation(a, j.generators()[k]));
    return acc;
}

RingPtr subring(const Ring& r, const std::vector<std::string>& keep) {
    std::set<std::string> k(keep.begin(), keep.end());
    RingBuilder b;
    std::vector<int> simplex_of(r.nvars(), -1);
    for (std::size_t s = 0; s < r.simplices().size(); ++s)
        for (auto c : r.simplices()[s].coords) simplex_of[c] = static_cast<int>(s);
    std::vector<bool> done(r.simplices().size(), false);
    for (std::size_t i = 0; i < r.nvars(); ++i) {
        if (!k.count(r.name(i))) continue;
        int s = simplex_of[i];
        if (s >= 0) {
            const auto& sx = r.simplices()[s];
            bool all = std::all_of(sx.coords.begin(), sx.coords.end(), [&](std::size_t c) { return k.count(r.name(c)); });
            if (all) {
                if (!done[s]) {
                    std::vector<std::string> names{sx.first};
                    for (auto c : sx.coords) names.push_back(r.name(c));
                    b.simplex(names);
                    done[s] = true;
                }
                continue;
            }
        }
        b.var(r.name(i));
    }
    return b.build();
}

Ideal eliminate(const Ideal& a, const std::vector<std::string>& front_vars) {
    const Ring& r = *a.ring();
    std::set<std::string> front(front_vars.begin(), front_vars.end());
    for (const auto& v : front)
        if (!r.find(v)) throw std::invalid_argument("eliminate: unknown variable " + v);
    std::vector<std::string> rest;
    RingBuilder b;
    for (const auto& v : front_vars) b.var(v);
    for (std::size_t i = 0; i < r.nvars(); ++i) {
        if (front.count(r.name(i))) continue;
        b.var(r.name(i));
        rest.push_back(r.name(i));
    }
    RingPtr ord_ring = b.build();
    std::vector<Polynomial> g;
    for (const auto& x : a.full_generators()) g.push_back(x.to_ring(ord_ring));
    auto gb = groebner_basis(ord_ring, g, MonomialOrder::elimination(front.size()));
    RingPtr sub = subring(r, rest);
    std::vector<Polynomial> kept;
    for (const auto& e : gb->elements()) {
        bool free = true;
        for (std::size_t i = 0; i < front.size() && free; ++i)
            if (e.uses(i)) free = false;
        if (free) kept.push_back(e.to_ring(sub));
    }
    return Ideal(sub, std::move(kept));
}

int monomial_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
    if (nvars > 64) throw std::invalid_argument("monomial_dimension supports at most 64 variables");
    std::vector<std::uint64_t> sup;
    for (const auto& m : gens) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) s |= std::uint64_t(1) << i;
        if (s == 0) return -1;
        sup.push_back(s);
    }
    // Minimum hitting set of the supports by branching on an unhit support.
    std::sort(sup.begin(), sup.end(), [](auto x, auto y) { return __builtin_popcountll(x) < __builtin_popcountll(y); });
    int best = static_cast<int>(nvars);
    std::function<void(std::uint64_t, int)> go = [&](std::uint64_t chosen, int count) {
        if (count >= best) return;
        const std::uint64_t* unhit = nullptr;
        for (const auto& s : sup)
            if (!(s & chosen)) {
                unhit = &s;
                break;
            }
        if (!unhit) {
            best = count;
            return;
        }
        std::uint64_t s = *unhit;
        while (s) {
            int v = __builtin_ctzll(s);
            s &= s - 1;
            go(chosen | (std::uint64_t(1) << v), count + 1);
        }
    };
    go(0, 0);
    return static_cast<int>(nvars) - best;
}

int krull_dim(const Ideal& a) {
    auto gb = a.groebner(MonomialOrder::grevlex());
    if (gb->is_unit()) return -1;
    return monomial_dimension(gb->leading_monomials(), a.ring()->nvars());
}

bool ideals_equal(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideals_equal");
    auto ga = a.groebner();
    auto gbb = b.groebner();
    for (const auto& g : b.generators())
        if (!ga->contains(g)) return false;
    for (const auto& g : a.generators())
        if (!gbb->contains(g)) return false;
    return true;
}

bool is_unit_ideal(const Ideal& a) { return a.is_unit(); }

// ---------------------------------------------------------------- exchange format

std::string export_ideal(const Ideal& a) {
    const Ring& r = *a.ring();
    std::ostringstream os;
    os << "ring:";
    for (const auto& v : r.variables()) os << " " << v;
    os << " over QQ\n";
    for (const auto& s : r.simplices()) {
        os << "simplex: " << s.first;
        for (auto c : s.coords) os << " " << r.name(c);
        os << "\n";
    }
    auto rels = r.relations();
    if (!rels.empty()) {
        os << "relations:\n";
        for (const auto& p : rels) os << p.str() << "\n";
        os << "generators:\n";
    }
    for (const auto& g : a.generators()) os << g.str() << "\n";
    return os.str();
}

Ideal import_ideal(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::vector<std::string> lines;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty() || lines[0].rfind("ring:", 0) != 0) throw std::invalid_argument("ideal file: missing ring header");
    std::istringstream hs(lines[0].substr(5));
    std::vector<std::string> vars;
    std::string tok;
    while (hs >> tok) vars.push_back(tok);
    if (vars.size() < 2 || vars[vars.size() - 2] != "over" || vars.back() != "QQ")
        throw std::invalid_argument("ideal file: header must end with 'over QQ'");
    vars.resize(vars.size() - 2);
    std::size_t k = 1;
    std::vector<std::vector<std::string>> simplices;
    while (k < lines.size() && lines[k].rfind("simplex:", 0) == 0) {
        std::istringstream ss(lines[k].substr(8));
        std::vector<std::string> names;
        while (ss >> tok) names.push_back(tok);
        if (names.empty()) throw std::invalid_argument("ideal file: empty simplex line");
        simplices.push_back(names);
        ++k;
    }
    std::vector<std::string> rels;
    if (k < lines.size() && lines[k] == "relations:") {
        ++k;
        while (k < lines.size() && lines[k] != "generators:") rels.push_back(lines[k++]);
        if (k == lines.size()) throw std::invalid_argument("ideal file: relations block without 'generators:'");
        ++k;
    }
    RingBuilder b;
    std::set<std::string> in_simplex;
    std::map<std::string, std::size_t> first_coord;
    for (std::size_t s = 0; s < simplices.size(); ++s) {
        for (std::size_t c = 1; c < simplices[s].size(); ++c) in_simplex.insert(simplices[s][c]);
        if (simplices[s].size() > 1) first_coord[simplices[s][1]] = s;
    }
    for (const auto& v : vars) {
        if (auto it = first_coord.find(v); it != first_coord.end()) b.simplex(simplices[it->second]);
        if (!in_simplex.count(v)) b.var(v);
    }
    for (const auto& s : simplices)
        if (s.size() == 1) b.simplex(s);
    for (const auto& rtxt : rels) b.relation(rtxt);
    RingPtr ring = b.build();
    if (ring->nvars() != vars.size()) throw std::invalid_argument("ideal file: simplex coordinates not in ring line");
    std::vector<Polynomial> gens;
    for (; k < lines.size(); ++k) gens.push_back(ring->parse(lines[k]));
    return Ideal(ring, std::move(gens));
}

}  // namespace chowforge
