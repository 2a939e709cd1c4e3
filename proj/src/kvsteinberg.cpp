#include "chowforge/kvsteinberg.hpp"

#include "chowforge/cherncycles.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace chowforge {

namespace {

std::string num(std::size_t k) { return std::to_string(k); }

RingPtr cached(const std::string& key, const std::function<RingPtr()>& make) {
    static std::mutex mu;
    static std::map<std::string, RingPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    RingPtr r = make();
    cache.emplace(key, r);
    return r;
}

std::string brief(const std::string& s, std::size_t cap = 200) {
    if (s.size() <= cap) return s;
    return s.substr(0, cap) + "... (" + num(s.size()) + " chars)";
}

CaseSpec make_case(std::string suite, std::string id, Params params, std::function<CaseOutcome(std::uint64_t)> run) {
    return CaseSpec{std::move(suite), std::move(id), std::move(params), std::move(run)};
}

bool matrices_equal(const PolyMatrix& a, const PolyMatrix& b, std::string* why) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        if (why) *why = "shape mismatch";
        return false;
    }
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) {
                if (why)
                    *why = "entry (" + num(i + 1) + "," + num(j + 1) + "): " + brief(a.at(i, j).str()) + " vs " +
                           brief(b.at(i, j).str());
                return false;
            }
    return true;
}

// a - b reduces to zero modulo the ring relations, entry by entry.
bool equal_mod_relations(const PolyMatrix& a, const PolyMatrix& b, std::string* why) {
    Ideal rel(a.ring(), {});
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Polynomial nf = rel.normal_form(a.at(i, j) - b.at(i, j));
            if (!nf.is_zero()) {
                if (why) *why = "entry (" + num(i + 1) + "," + num(j + 1) + ") differs by " + brief(nf.str());
                return false;
            }
        }
    return true;
}

PolyMatrix e12(const RingPtr& ring, const Polynomial& c) {
    PolyMatrix m = PolyMatrix::identity(ring, 2);
    m.at(0, 1) = c;
    return m;
}

PolyMatrix e21(const RingPtr& ring, const Polynomial& c) {
    PolyMatrix m = PolyMatrix::identity(ring, 2);
    m.at(1, 0) = c;
    return m;
}

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num_d(-5, 5), den_d(1, 4);
    Rational q(num_d(rng), den_d(rng));
    q.canonicalize();
    return q;
}

std::vector<Rational> interior_point(std::mt19937_64& rng, std::size_t r) {
    std::uniform_int_distribution<int> w(1, 9);
    std::vector<Rational> t;
    Rational total = 0;
    for (std::size_t i = 0; i <= r; ++i) {
        t.emplace_back(w(rng));
        total += t.back();
    }
    for (auto& x : t) {
        x /= total;
        x.canonicalize();
    }
    return t;
}

RationalMatrix unipotent_sample(std::mt19937_64& rng, std::size_t n, bool lower) {
    RationalMatrix m = RationalMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (lower ? i > j : i < j) m.at(i, j) = small_rational(rng);
    return m;
}

// The 4m factors of a random rational quadruple list.
std::vector<RationalMatrix> quadruple_sample(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    std::vector<RationalMatrix> out;
    for (std::size_t k = 0; k < m; ++k)
        for (int f = 0; f < 4; ++f) out.push_back(unipotent_sample(rng, n, f % 2 == 0));
    return out;
}

RationalMatrix to_rational(const PolyMatrix& m, const std::vector<Rational>& point) {
    RationalMatrix out{m.rows(), std::vector<Rational>(m.rows() * m.cols())};
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).evaluate(point);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- quadruples

std::vector<std::string> quadruple_variable_names(std::size_t n, const std::string& prefix) {
    std::vector<std::string> out;
    for (const char* f : {"l1", "u1", "l2", "u2"}) {
        bool lower = f[0] == 'l';
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (lower ? i > j : i < j)
                    out.push_back(prefix + f + "_{" + num(i) + "," + num(j) + "}");
    }
    return out;
}

UnipotentQuadruple generic_quadruple(const RingPtr& ring, std::size_t n, const std::string& prefix) {
    auto factor = [&](const std::string& f, bool lower) {
        PolyMatrix m = PolyMatrix::identity(ring, n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (lower ? i > j : i < j) m.at(i - 1, j - 1) = ring->var(prefix + f + "_{" + num(i) + "," + num(j) + "}");
        return m;
    };
    return {factor("l1", true), factor("u1", false), factor("l2", true), factor("u2", false)};
}

UnipotentQuadruple identity_quadruple(const RingPtr& ring, std::size_t n) {
    PolyMatrix i = PolyMatrix::identity(ring, n);
    return {i, i, i, i};
}

std::vector<UnipotentQuadruple> generic_quadruples(const RingPtr& ring, std::size_t n, std::size_t m,
                                                   const std::string& prefix) {
    std::vector<UnipotentQuadruple> out;
    for (std::size_t k = 0; k < m; ++k) out.push_back(generic_quadruple(ring, n, prefix + num(k)));
    return out;
}

RingPtr lulu_ring(std::size_t n, std::size_t m) {
    if (n < 1) throw std::invalid_argument("lulu_ring: n >= 1");
    return cached("lulu" + num(n) + "," + num(m), [&] {
        RingBuilder b;
        for (std::size_t k = 0; k < m; ++k) b.vars(quadruple_variable_names(n, "q" + num(k)));
        return b.build();
    });
}

PolyMatrix mu(const UnipotentQuadruple& q) {
    std::size_t n = q.n();
    for (const auto& f : q.factors())
        if (f.rows() != n || f.cols() != n) throw std::invalid_argument("mu: size mismatch");
    return q.l1 * q.u1 * q.l2 * q.u2;
}

PolyMatrix mu_m(const std::vector<UnipotentQuadruple>& quads) {
    if (quads.empty()) throw std::invalid_argument("mu_m: empty product");
    PolyMatrix acc = mu(quads.front());
    for (std::size_t k = 1; k < quads.size(); ++k) {
        if (quads[k].n() != acc.rows()) throw std::invalid_argument("mu_m: size mismatch");
        acc = acc * mu(quads[k]);
    }
    return acc;
}

std::vector<PolyMatrix> contracting_h_factors(const std::vector<UnipotentQuadruple>& quads, const Polynomial& t) {
    std::vector<PolyMatrix> out;
    for (const auto& q : quads)
        for (const auto& f : q.factors()) {
            PolyMatrix id = PolyMatrix::identity(f.ring(), f.rows());
            out.push_back(id + (f - id).scaled(t));
        }
    return out;
}

PolyMatrix contracting_h(const std::vector<UnipotentQuadruple>& quads, const Polynomial& t) {
    if (quads.empty()) throw std::invalid_argument("contracting_h: no quadruples");
    auto fs = contracting_h_factors(quads, t);
    PolyMatrix acc = fs.front();
    for (std::size_t k = 1; k < fs.size(); ++k) acc = acc * fs[k];
    return acc;
}

RingPtr contracting_ring(std::size_t n, std::size_t m) {
    if (m == 0) m = n * n - 1;
    return cached("hring" + num(n) + "," + num(m), [&] {
        RingBuilder b;
        for (std::size_t k = 0; k < m; ++k) b.vars(quadruple_variable_names(n, "q" + num(k)));
        b.var("T");
        return b.build();
    });
}

PolyMatrix contracting_h(std::size_t n, std::size_t m) {
    if (m == 0) m = n * n - 1;
    RingPtr R = contracting_ring(n, m);
    return contracting_h(generic_quadruples(R, n, m), R->var("T"));
}

// ---------------------------------------------------------------- rational matrices

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m{n, std::vector<Rational>(n * n, Rational(0))};
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("RationalMatrix: size mismatch");
    RationalMatrix out{n, std::vector<Rational>(n * n, Rational(0))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    for (auto& x : out.e) x.canonicalize();
    return out;
}

std::string RationalMatrix::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < n; ++j) s += (j ? ", " : "") + rational_str(at(i, j));
        s += "]";
    }
    return s + "]";
}

RationalMatrix sample_sl(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3);
    RationalMatrix g = RationalMatrix::identity(n);
    for (int k = 0; k < 4; ++k) g = g * unipotent_sample(rng, n, k % 2 == 0);
    const Rational scales[] = {Rational(1), Rational(2), Rational(3), Rational(1, 2)};
    RationalMatrix d = RationalMatrix::identity(n);
    Rational prod = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        d.at(i, i) = scales[pick(rng)];
        prod *= d.at(i, i);
    }
    d.at(n - 1, n - 1) = 1 / prod;
    d.at(n - 1, n - 1).canonicalize();
    return g * d;
}

std::vector<CaseSpec> fiber_probe_cases(const std::string& suite, const std::string& id_head, const PolyMatrix& map,
                                        const std::vector<RationalMatrix>& targets, int expected) {
    std::vector<CaseSpec> out;
    for (std::size_t k = 0; k < targets.size(); ++k) {
        const RationalMatrix& g = targets[k];
        if (g.n != map.rows() || !map.square()) throw std::invalid_argument("fiber_probe: size mismatch");
        Params prm{{"target", g.str()}, {"expected", std::to_string(expected)}};
        out.push_back(make_case(suite, id_head + "/g" + num(k), prm, [map, g, expected](std::uint64_t) {
            const RingPtr& R = map.ring();
            std::vector<Polynomial> gens;
            for (std::size_t i = 0; i < g.n; ++i)
                for (std::size_t j = 0; j < g.n; ++j) gens.push_back(map.at(i, j) - R->constant(g.at(i, j)));
            Ideal fiber(R, gens);
            if (fiber.is_unit()) return CaseOutcome::fail("empty fiber over " + g.str() + " (surjectivity failure)");
            int d = krull_dim(fiber);
            return CaseOutcome::check(d == expected, "fiber over " + g.str() + " has dim " + std::to_string(d) +
                                                         ", expected " + std::to_string(expected));
        }));
    }
    return out;
}

VerificationReport fiber_dim_probe(const PolyMatrix& map, const std::vector<RationalMatrix>& targets, int expected,
                                   const RunOptions& opt) {
    return run_cases(fiber_probe_cases("lulu", "fiber", map, targets, expected), opt);
}

// ---------------------------------------------------------------- words

MatWord MatWord::identity(const RingPtr& ring, std::size_t n) {
    MatWord w;
    w.ring_ = ring;
    w.n_ = n;
    return w;
}

MatWord MatWord::concrete(const PolyMatrix& m) {
    if (!m.square()) throw std::invalid_argument("MatWord: square matrix expected");
    MatWord w = identity(m.ring(), m.rows());
    w.f_.push_back(Factor{false, m, 0, Polynomial()});
    return w;
}

MatWord MatWord::h(const RingPtr& ring, std::size_t n, std::size_t copy, const Polynomial& tau) {
    require_same_ring(ring, tau.ring(), "MatWord::h");
    MatWord w = identity(ring, n);
    w.f_.push_back(Factor{true, PolyMatrix(), copy, tau});
    return w;
}

MatWord MatWord::operator*(const MatWord& o) const {
    require_same_ring(ring_, o.ring_, "MatWord product");
    if (n_ != o.n_) throw std::invalid_argument("MatWord product: size mismatch");
    MatWord w = *this;
    w.f_.insert(w.f_.end(), o.f_.begin(), o.f_.end());
    return w;
}

MatWord MatWord::pullback(const Morphism& m) const {
    require_same_ring(m.target(), ring_, "MatWord pullback");
    MatWord w = identity(m.source(), n_);
    for (const auto& f : f_) {
        if (f.is_h)
            w.f_.push_back(Factor{true, PolyMatrix(), f.copy, m.pullback(f.tau)});
        else
            w.f_.push_back(Factor{false, f.m.map([&](const Polynomial& p) { return m.pullback(p); }), 0, Polynomial()});
    }
    return w;
}

MatWord MatWord::normalized() const {
    std::vector<Factor> out;
    for (const auto& f : f_) {
        if (f.is_h) {
            if (f.tau.is_zero()) continue;
            out.push_back(f);
        } else if (!out.empty() && !out.back().is_h) {
            out.back().m = out.back().m * f.m;
        } else {
            out.push_back(f);
        }
    }
    std::vector<Factor> kept;
    for (auto& f : out)
        if (f.is_h || !f.m.is_identity()) kept.push_back(std::move(f));
    MatWord w = identity(ring_, n_);
    w.f_ = std::move(kept);
    return w;
}

bool MatWord::operator==(const MatWord& o) const {
    if (!same_ring(ring_, o.ring_) || n_ != o.n_) return false;
    MatWord a = normalized(), b = o.normalized();
    if (a.f_.size() != b.f_.size()) return false;
    for (std::size_t k = 0; k < a.f_.size(); ++k) {
        const Factor &x = a.f_[k], &y = b.f_[k];
        if (x.is_h != y.is_h) return false;
        if (x.is_h ? (x.copy != y.copy || x.tau != y.tau) : x.m != y.m) return false;
    }
    return true;
}

RationalMatrix MatWord::evaluate(const std::vector<Rational>& point,
                                 const std::vector<std::vector<RationalMatrix>>& copies) const {
    RationalMatrix acc = RationalMatrix::identity(n_);
    for (const auto& f : f_) {
        if (!f.is_h) {
            acc = acc * to_rational(f.m, point);
            continue;
        }
        if (f.copy >= copies.size()) throw std::out_of_range("MatWord::evaluate: missing copy");
        Rational tau = f.tau.evaluate(point);
        for (const auto& a : copies[f.copy]) {
            RationalMatrix s = a;
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) s.at(i, j) = (i == j ? Rational(1) : Rational(0)) + tau * (a.at(i, j) - (i == j ? 1 : 0));
            acc = acc * s;
        }
    }
    return acc;
}

PolyMatrix MatWord::expand(const std::function<PolyMatrix(std::size_t, const Polynomial&)>& h_value) const {
    PolyMatrix acc = PolyMatrix::identity(ring_, n_);
    for (const auto& f : f_) acc = acc * (f.is_h ? h_value(f.copy, f.tau) : f.m);
    return acc;
}

std::string MatWord::str() const {
    if (f_.empty()) return "I";
    std::string s;
    for (std::size_t k = 0; k < f_.size(); ++k) {
        if (k) s += " * ";
        const auto& f = f_[k];
        s += f.is_h ? "h(A" + num(f.copy) + "; " + f.tau.str() + ")" : f.m.str();
    }
    return s;
}

// ---------------------------------------------------------------- X x Δ

RingPtr x_simplex_ring(const std::vector<std::string>& xvars, std::size_t dim) {
    std::string key = "xs" + num(dim);
    for (const auto& v : xvars) key += "|" + v;
    return cached(key, [&] {
        std::vector<std::string> t;
        for (std::size_t i = 0; i <= dim; ++i) t.push_back(coordinate_name(0, i));
        return RingBuilder().vars(xvars).simplex(t).build();
    });
}

namespace {

Morphism x_simplex_map(const std::vector<std::string>& xvars, std::size_t src_dim, std::size_t tgt_dim,
                       const Morphism& simplex_map) {
    RingPtr src = x_simplex_ring(xvars, src_dim), tgt = x_simplex_ring(xvars, tgt_dim);
    std::vector<Polynomial> im;
    for (const auto& v : tgt->variables()) {
        bool is_x = std::find(xvars.begin(), xvars.end(), v) != xvars.end();
        im.push_back(is_x ? src->var(v) : simplex_map.image(v).to_ring(src));
    }
    return Morphism(src, tgt, std::move(im));
}

}  // namespace

Morphism x_coface(const std::vector<std::string>& xvars, std::size_t dim, std::size_t j) {
    return x_simplex_map(xvars, dim - 1, dim, coface(dim, j));
}

Morphism x_codegeneracy(const std::vector<std::string>& xvars, std::size_t dim, std::size_t j) {
    return x_simplex_map(xvars, dim + 1, dim, codegeneracy(dim, j));
}

Polynomial rho(const RingPtr& ring, std::size_t dim, std::size_t skip) {
    Polynomial p = ring->one();
    for (std::size_t i = 0; i <= dim; ++i)
        if (i != skip) p *= ring->var(coordinate_name(0, i));
    return p;
}

MatTuple diagonal_face(const MatTuple& g, const std::vector<std::string>& xvars, std::size_t dim, std::size_t j) {
    std::size_t r = g.size();
    if (r == 0 || j > r) throw std::out_of_range("diagonal_face: index out of range");
    Morphism m = x_coface(xvars, dim, j);
    MatTuple pulled;
    for (const auto& w : g) pulled.push_back(w.pullback(m));
    MatTuple out;
    for (std::size_t i = 0; i < r; ++i) {
        if (j == 0 && i == 0) continue;
        if (j == r && i == r - 1) continue;
        if (j >= 1 && j < r && i == j) continue;  // merged into i = j - 1
        if (j >= 1 && j < r && i == j - 1)
            out.push_back(pulled[i] * pulled[i + 1]);
        else
            out.push_back(pulled[i]);
    }
    return out;
}

bool tuples_equal(const MatTuple& a, const MatTuple& b, std::string* why) {
    if (a.size() != b.size()) {
        if (why) *why = "length " + num(a.size()) + " vs " + num(b.size());
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) {
            if (why)
                *why = "component " + num(i + 1) + ": " + brief(a[i].normalized().str()) + " vs " +
                       brief(b[i].normalized().str());
            return false;
        }
    return true;
}

MatTuple lambda_words(const MatTuple& a, std::size_t r) {
    if (r < 1 || a.size() != r) throw std::invalid_argument("lambda_words: need r >= 1 components");
    const RingPtr& R = a.front().ring();
    Polynomial rh = rho(R, r);
    MatTuple out;
    for (std::size_t i = 1; i <= r; ++i) out.push_back(a[i - 1] * MatWord::h(R, a[i - 1].n(), i, rh));
    return out;
}

std::vector<PolyMatrix> lambda_build(const std::vector<PolyMatrix>& a, std::size_t r, std::size_t m) {
    if (r < 1 || a.size() != r) throw std::invalid_argument("lambda_build: need r >= 1 components");
    std::size_t n = a.front().rows();
    for (const auto& x : a)
        if (x.rows() != n || !x.square()) throw std::invalid_argument("lambda_build: size mismatch");
    if (m == 0) m = n * n - 1;
    RingBuilder b;
    b.extend(*a.front().ring());
    for (std::size_t k = 1; k <= r; ++k)
        for (std::size_t j = 0; j < m; ++j) b.vars(quadruple_variable_names(n, "A" + num(k) + "q" + num(j)));
    RingPtr R = b.build();
    Polynomial rh = rho(R, r);
    std::vector<PolyMatrix> out;
    for (std::size_t k = 1; k <= r; ++k)
        out.push_back(a[k - 1].to_ring(R) * contracting_h(generic_quadruples(R, n, m, "A" + num(k) + "q"), rh));
    return out;
}

// ---------------------------------------------------------------- Q-forms and extension witnesses

std::vector<std::string> qform_symbols(const std::string& prefix, std::size_t dim) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k <= dim; ++k) {
        out.push_back(prefix + "c_" + num(k));
        out.push_back(prefix + "d_" + num(k));
    }
    return out;
}

MatTuple qform_element(const std::vector<std::string>& xvars, const std::string& prefix, std::size_t dim,
                       const std::vector<std::size_t>& keep) {
    if (dim < 1 || keep.size() != dim + 1) throw std::invalid_argument("qform_element: keep needs dim + 1 entries");
    RingPtr R = x_simplex_ring(xvars, dim);
    std::vector<PolyMatrix> Q, Qinv;
    for (std::size_t k = 0; k <= dim; ++k) {
        Polynomial pi = R->one();
        for (std::size_t i = 0; i <= dim; ++i)
            if (i != k && i != keep[k]) pi *= R->var(coordinate_name(0, i));
        Polynomial c = R->var(prefix + "c_" + num(k)) * pi, d = R->var(prefix + "d_" + num(k)) * pi;
        Q.push_back(e12(R, c) * e21(R, d));
        Qinv.push_back(e21(R, -d) * e12(R, -c));
    }
    MatTuple out;
    for (std::size_t i = 1; i <= dim; ++i) out.push_back(MatWord::concrete(Q[i - 1] * Qinv[i]));
    return out;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

MatTuple identity_tuple(const RingPtr& R, std::size_t r) { return MatTuple(r, MatWord::identity(R, 2)); }

void require_trivial(const MatTuple& g, const std::vector<std::string>& xv, std::size_t dim, std::size_t j) {
    for (const auto& w : diagonal_face(g, xv, dim, j))
        if (!w.is_identity()) throw std::logic_error("input face " + num(j) + " is not trivial");
}

void require_nontrivial(const MatTuple& g, const std::string& what) {
    for (const auto& w : g)
        if (!w.is_identity()) return;
    throw std::logic_error("input " + what + " is trivial");
}

}  // namespace

ExtensionWitness extension_witness(ExtensionItem item, std::size_t r, bool corrected) {
    if (r < 1 || (item == ExtensionItem::Horn && r < 2)) throw std::invalid_argument("extension_witness: r too small");
    ExtensionWitness w;
    w.r = r;
    std::size_t dim = r + 1;
    auto H = [](const RingPtr& R, std::size_t copy, const Polynomial& tau) { return MatWord::h(R, 2, copy, tau); };

    if (item == ExtensionItem::Degenerate) {
        w.xvars = qform_symbols("a", r);
        MatTuple a = qform_element(w.xvars, "a", r, std::vector<std::size_t>(r + 1, kNone));
        require_nontrivial(a, "a");
        for (std::size_t j = 0; j <= r; ++j) require_trivial(a, w.xvars, r, j);
        RingPtr R1 = x_simplex_ring(w.xvars, dim), R0 = x_simplex_ring(w.xvars, r);
        Morphism sr = x_codegeneracy(w.xvars, r, r);
        Polynomial rr1 = rho(R1, dim, r + 1);
        for (std::size_t i = 1; i <= r; ++i) w.gamma_tilde.push_back(a[i - 1].pullback(sr) * H(R1, i, rr1));
        w.gamma_tilde.push_back(H(R1, 0, rr1));
        for (std::size_t j = 0; j < r; ++j) w.expected_faces.push_back({j, identity_tuple(R0, r)});
        w.expected_faces.push_back({r, a});
        w.expected_faces.push_back({r + 1, lambda_words(a, r)});
        return w;
    }

    w.xvars = qform_symbols("g", dim);
    std::vector<std::size_t> keep(dim + 1);
    if (item == ExtensionItem::Homotopy) {
        for (std::size_t k = 0; k < r; ++k) keep[k] = k % 2 == 0 ? r : r + 1;
        keep[r] = r + 1;
        keep[r + 1] = r;
    } else {
        for (std::size_t k = 0; k <= dim; ++k) {
            keep[k] = r - 1 + k % 3;
            if (keep[k] == k) keep[k] = r - 1 + (k + 1) % 3;
        }
    }
    MatTuple G = qform_element(w.xvars, "g", dim, keep);
    RingPtr R1 = x_simplex_ring(w.xvars, dim), R0 = x_simplex_ring(w.xvars, r);
    std::size_t low = item == ExtensionItem::Homotopy ? r : r - 1;  // faces j < low are trivial
    for (std::size_t j = 0; j < low; ++j) require_trivial(G, w.xvars, dim, j);
    Polynomial rr_m1 = rho(R1, dim, r - 1), rr = rho(R1, dim, r), rr_p1 = rho(R1, dim, r + 1), full = rho(R1, dim);

    if (item == ExtensionItem::Homotopy) {
        MatTuple a = diagonal_face(G, w.xvars, dim, r), b = diagonal_face(G, w.xvars, dim, r + 1);
        require_nontrivial(a, "a");
        require_nontrivial(b, "b");
        for (std::size_t i = 1; i <= r - 1; ++i) {
            MatWord c = G[i - 1] * H(R1, i, rr);
            if (corrected) c = c * H(R1, i, rr_p1);
            w.gamma_tilde.push_back(c);
        }
        w.gamma_tilde.push_back(G[r - 1] * H(R1, r, rr_p1));
        w.gamma_tilde.push_back(G[r] * H(R1, r, rr) * H(R1, 0, full));
        for (std::size_t j = 0; j < r; ++j) w.expected_faces.push_back({j, identity_tuple(R0, r)});
        w.expected_faces.push_back({r, lambda_words(a, r)});
        w.expected_faces.push_back({r + 1, lambda_words(b, r)});
        return w;
    }

    MatTuple a = diagonal_face(G, w.xvars, dim, r - 1), c = diagonal_face(G, w.xvars, dim, r),
             b = diagonal_face(G, w.xvars, dim, r + 1);
    require_nontrivial(a, "a");
    require_nontrivial(b, "b");
    require_nontrivial(c, "c");
    for (std::size_t i = 1; i + 2 <= r; ++i)
        w.gamma_tilde.push_back(G[i - 1] * H(R1, i, rr_m1) * H(R1, i, rr) * H(R1, i, rr_p1));
    w.gamma_tilde.push_back(G[r - 2] * H(R1, r - 1, rr) * H(R1, r - 1, rr_p1));
    w.gamma_tilde.push_back(G[r - 1] * H(R1, r, rr_p1) * H(R1, r - 1, rr_m1));
    w.gamma_tilde.push_back(G[r] * H(R1, r, rr_m1) * H(R1, r, rr) * H(R1, 0, full));
    for (std::size_t j = 0; j + 1 < r; ++j) w.expected_faces.push_back({j, identity_tuple(R0, r)});
    w.expected_faces.push_back({r - 1, lambda_words(a, r)});
    w.expected_faces.push_back({r, lambda_words(c, r)});
    w.expected_faces.push_back({r + 1, lambda_words(b, r)});
    return w;
}

namespace {

// Structural face check plus an exact evaluation at a seeded rational point.
CaseOutcome check_faces(const MatTuple& g, const std::vector<std::string>& xvars, std::size_t dim,
                        const std::vector<std::pair<std::size_t, MatTuple>>& expected, std::size_t copies,
                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RingPtr R0 = x_simplex_ring(xvars, dim - 1);
    std::vector<Rational> point;
    for (std::size_t i = 0; i < R0->nvars(); ++i) point.push_back(small_rational(rng));
    std::vector<std::vector<RationalMatrix>> quads;
    for (std::size_t k = 0; k < copies; ++k) quads.push_back(quadruple_sample(rng, 2, 3));
    std::string faces;
    for (const auto& [j, want] : expected) {
        MatTuple got = diagonal_face(g, xvars, dim, j);
        std::string why;
        if (!tuples_equal(got, want, &why)) return CaseOutcome::fail("face " + num(j) + ": " + why);
        for (std::size_t i = 0; i < got.size(); ++i)
            if (!(got[i].evaluate(point, quads) == want[i].evaluate(point, quads)))
                return CaseOutcome::fail("face " + num(j) + ": evaluation mismatch at component " + num(i + 1));
        faces += (faces.empty() ? "" : ",") + num(j);
    }
    return CaseOutcome::pass("faces " + faces + " match (structural and evaluated at a seeded point)");
}

}  // namespace

CaseOutcome check_extension_witness(const ExtensionWitness& w, std::uint64_t seed) {
    return check_faces(w.gamma_tilde, w.xvars, w.r + 1, w.expected_faces, w.r + 1, seed);
}

// ---------------------------------------------------------------- Steinberg

RingPtr symbol_ring(bool milnor) {
    return cached(milnor ? "symbol-milnor" : "symbol", [&] {
        RingBuilder b;
        b.vars({"alpha", "alphabar", "beta", "betabar", "x", "y", "y_1", "y_2", "T"});
        if (milnor) b.var("gamma");
        b.simplex({"s_0", "s_1"}).simplex({"t_0", "t_1"});
        b.relation("alpha*alphabar - 1").relation("beta*betabar - 1");
        if (milnor) b.relation("gamma*(1 - alpha) - 1");
        return b.build();
    });
}

PolyMatrix steinberg_A(const RingPtr& R, const Polynomial& alpha) {
    Polynomial x = R->var("x"), t0 = R->var("t_0"), t1 = R->var("t_1");
    return PolyMatrix(R, 2, 2, {x * t0, x * x * t0 * t1 - alpha, R->one(), x * t1});
}

SteinbergMatrices steinberg_matrices(const RingPtr& R, const Polynomial& alpha, const Polynomial& beta,
                                     const Polynomial& beta_inv) {
    Polynomial x = R->var("x"), t1 = R->var("t_1"), one = R->one();
    SteinbergMatrices m;
    m.A = steinberg_A(R, alpha);
    m.U = e12(R, beta * (x - one) - x * t1);
    m.V = e21(R, beta_inv);
    m.W = e12(R, x * t1 - beta);
    return m;
}

Polynomial p_alpha(const RingPtr& R, const Polynomial& alpha) {
    Polynomial t0 = R->var("t_0"), t1 = R->var("t_1");
    return t0 * t0 + R->var("x") * t0 * t1 + alpha * t1 * t1;
}

std::vector<CaseSpec> steinberg_cases() {
    std::vector<CaseSpec> out;
    Params none;
    out.push_back(make_case("steinberg", "comm/generic", none, [](std::uint64_t) {
        RingPtr R = symbol_ring();
        Polynomial a = R->var("alpha"), b = R->var("beta"), bb = R->var("betabar");
        SteinbergMatrices m = steinberg_matrices(R, a, b, bb);
        PolyMatrix lhs = steinberg_A(R, a) * steinberg_A(R, b);
        PolyMatrix rhs = steinberg_A(R, a * b) * m.U * m.V * m.W;
        std::string why;
        bool ok = equal_mod_relations(lhs, rhs, &why);
        return CaseOutcome::check(ok, ok ? "A_alpha A_beta = A_{alpha beta} U_beta V_beta W_beta" : why);
    }));
    out.push_back(make_case("steinberg", "comm/adjugate", none, [](std::uint64_t) {
        RingPtr R = symbol_ring();
        Polynomial a = R->var("alpha"), b = R->var("beta");
        PolyMatrix Aab = steinberg_A(R, a * b);
        if (det(steinberg_A(R, a)) != a) return CaseOutcome::fail("det A_alpha != alpha");
        PolyMatrix inv = adjugate(Aab).scaled(R->var("alphabar") * R->var("betabar"));
        SteinbergMatrices m = steinberg_matrices(R, a, b, R->var("betabar"));
        std::string why;
        if (!equal_mod_relations(inv * Aab, PolyMatrix::identity(R, 2), &why))
            return CaseOutcome::fail("adjugate inverse: " + why);
        bool ok = equal_mod_relations(inv * steinberg_A(R, a) * steinberg_A(R, b), m.U * m.V * m.W, &why);
        return CaseOutcome::check(ok, ok ? "A_{alpha beta}^{-1} A_alpha A_beta = U V W via the adjugate" : why);
    }));
    out.push_back(make_case("steinberg", "comm/alpha=beta=1", none, [](std::uint64_t) {
        RingPtr R = symbol_ring();
        Polynomial one = R->one();
        SteinbergMatrices m = steinberg_matrices(R, one, one, one);
        std::string why;
        bool ok = matrices_equal(m.A, m.U * m.V * m.W, &why);
        return CaseOutcome::check(ok, ok ? "A_1 = U_1 V_1 W_1 (product of elementary matrices)" : why);
    }));
    out.push_back(make_case("steinberg", "comm/beta=alpha^-1", none, [](std::uint64_t) {
        RingPtr R = symbol_ring();
        Polynomial a = R->var("alpha"), ab = R->var("alphabar");
        SteinbergMatrices m = steinberg_matrices(R, a, ab, a);
        std::string why;
        bool ok = equal_mod_relations(steinberg_A(R, a) * steinberg_A(R, ab),
                                      steinberg_A(R, R->one()) * m.U * m.V * m.W, &why);
        return CaseOutcome::check(ok, ok ? "A_alpha A_{alpha^-1} = A_1 U V W, a product of elementary matrices" : why);
    }));
    out.push_back(make_case("steinberg", "palpha/det", none, [](std::uint64_t) {
        RingPtr R = symbol_ring();
        Polynomial a = R->var("alpha");
        PolyMatrix M = PolyMatrix::identity(R, 2).scaled(R->var("t_0")) + steinberg_A(R, a).scaled(R->var("t_1"));
        Polynomial d = det(M), want = p_alpha(R, a);
        return CaseOutcome::check(d == want, "det(t0 I + t1 A_alpha) = " + brief(d.str()));
    }));
    out.push_back(make_case("steinberg", "palpha/unit", none, [](std::uint64_t) {
        RingPtr R = symbol_ring();
        Polynomial t01 = R->var("t_0") * R->var("t_1");
        bool ok = Ideal(R, {p_alpha(R, R->var("alpha")), t01}).is_unit();
        return CaseOutcome::check(ok, ok ? "<p_alpha, t0 t1> = <1> with alpha a unit" : "not the unit ideal");
    }));
    out.push_back(make_case("steinberg", "palpha/neg_alpha=0", none, [](std::uint64_t) {
        RingPtr R = cached("palpha0", [] { return RingBuilder().var("x").simplex({"t_0", "t_1"}).build(); });
        Polynomial t01 = R->var("t_0") * R->var("t_1");
        bool unit = Ideal(R, {p_alpha(R, R->zero()), t01}).is_unit();
        return CaseOutcome::check(!unit, unit ? "unexpected unit ideal" : "<p_0, t0 t1> is proper, as expected");
    }));
    out.push_back(make_case("steinberg", "palpha/neg_no_unit_relation", none, [](std::uint64_t) {
        RingPtr R = cached("palpha-free", [] {
            return RingBuilder().vars({"alpha", "x"}).simplex({"t_0", "t_1"}).build();
        });
        Polynomial t01 = R->var("t_0") * R->var("t_1");
        bool unit = Ideal(R, {p_alpha(R, R->var("alpha")), t01}).is_unit();
        return CaseOutcome::check(!unit, unit ? "unexpected unit ideal"
                                              : "without alpha a unit, <p_alpha, t0 t1> is proper");
    }));
    return out;
}

// ---------------------------------------------------------------- gamma suite

namespace {

struct GammaPolys {
    RingPtr R;
    Polynomial s0, s1, t0, t1, y, y1, y2, T, alpha, beta;

    explicit GammaPolys(RingPtr ring) : R(std::move(ring)) {
        s0 = R->var("s_0");
        s1 = R->var("s_1");
        t0 = R->var("t_0");
        t1 = R->var("t_1");
        y = R->var("y");
        y1 = R->var("y_1");
        y2 = R->var("y_2");
        T = R->var("T");
        alpha = R->var("alpha");
        beta = R->var("beta");
    }
    Polynomial c(const Rational& q) const { return R->constant(q); }
    // s0^2 + s0 s1 y1 + a s1^2 and t0^2 + t0 t1 y2 + b t1^2.
    Polynomial pfrak(const Polynomial& a) const { return s0 * s0 + s0 * s1 * y1 + a * s1 * s1; }
    Polynomial qfrak(const Polynomial& b) const { return t0 * t0 + t0 * t1 * y2 + b * t1 * t1; }
    // p_a in (s, y) for f and h.
    Polynomial ps(const Polynomial& a) const { return s0 * s0 + s0 * s1 * y + a * s1 * s1; }
    Polynomial f() const { return c(1) + s0 * s1 * (y - c(2)) * T; }
    Polynomial C() const { return (alpha * beta - alpha - beta + c(1)) * T + alpha + beta; }
    Polynomial h() const {
        Polynomial Cc = C();
        return s0.pow(4) + c(2) * s0.pow(3) * s1 * y + (y * y + Cc) * s0 * s0 * s1 * s1 + y * Cc * s0 * s1.pow(3) +
               alpha * beta * s1.pow(4);
    }
    Polynomial ghat() const {
        return t1 * t1 * (s0 * s0 + s0 * s1 * y1) + s1 * s1 * (t0 * t0 * T * T + t0 * t1 * T * y2);
    }
    Polynomial ghat1() const {
        return s1 * s1 * (c(1) + t0 * t1 * T * (y2 - c(2))) - (t1 * T).pow(2) * s1 * s1 * alpha;
    }
    Polynomial ghat1_alt() const {
        return s1 * s1 * (c(1) + t0 * t1 * T * (y2 - c(2))) - (t1 * T).pow(2) * s0 * s0 * alpha;
    }
    Polynomial at(const Polynomial& p, const std::string& v, const Rational& q) const { return p.specialize({{v, q}}); }
    Polynomial interior() const { return s0 * s1 * t0 * t1; }
};

Ideal ideal_of(const RingPtr& R, std::vector<Polynomial> g) { return Ideal(R, std::move(g)); }

std::string eq_text(bool ok, const std::string& what) { return what + (ok ? ": holds" : ": fails"); }

CaseOutcome smooth_case(const GammaPolys& P, const Polynomial& second, const std::string& label) {
    std::vector<Polynomial> F{P.pfrak(P.alpha), second};
    PolyMatrix J = jacobian(F, {"y_1", "y_2", "s_1", "t_1", "T"});
    std::vector<Polynomial> gens = F;
    for (const auto& cols : index_subsets(5, 2)) gens.push_back(minor(J, {1, 2}, cols));
    Ideal sat = saturation(Ideal(P.R, gens), P.interior() * P.T);
    bool ok = sat.is_unit();
    return CaseOutcome::check(ok, eq_text(ok, label + " singular locus over the interior is empty"));
}

}  // namespace

std::vector<CaseSpec> gamma_cases() {
    std::vector<CaseSpec> out;
    Params none;
    auto add = [&](const std::string& id, std::function<CaseOutcome(const GammaPolys&)> body) {
        out.push_back(make_case("gamma", "gamma/" + id, none, [body](std::uint64_t) {
            return body(GammaPolys(symbol_ring()));
        }));
    };
    add("1_inter", [](const GammaPolys& P) {
        bool ok = ideal_of(P.R, {P.pfrak(P.alpha), P.qfrak(P.beta), P.interior()}).is_unit();
        return CaseOutcome::check(ok, eq_text(ok, "J_{alpha,beta} + <s0 s1 t0 t1> = <1>"));
    });
    add("2_jacobian", [](const GammaPolys& P) {
        Polynomial d = det(jacobian({P.pfrak(P.alpha), P.qfrak(P.beta)}, {"y_1", "y_2"}));
        bool ok = d == P.interior();
        return CaseOutcome::check(ok, "det d(p,q)/d(y1,y2) = " + brief(d.str()));
    });
    add("3_f", [](const GammaPolys& P) {
        Polynomial f = P.f();
        bool a = P.at(f, "T", 1) == P.ps(P.c(1)), b = P.at(f, "T", 0) == P.c(1);
        bool c = P.at(f, "s_1", 1) == P.c(1), d = P.at(f, "s_1", 0) == P.c(1);  // s0 = 0 and s1 = 0
        bool ok = a && b && c && d;
        return CaseOutcome::check(ok, eq_text(a, "f|T=1 = p_1") + "; " + eq_text(b, "f|T=0 = 1") + "; " +
                                          eq_text(c && d, "f = 1 on s0 = 0 and s1 = 0"));
    });
    add("4_h", [](const GammaPolys& P) {
        Polynomial h = P.h();
        bool a = P.at(h, "T", 0) == P.ps(P.alpha) * P.ps(P.beta);
        bool b = P.at(h, "T", 1) == P.ps(P.alpha * P.beta) * P.ps(P.c(1));
        std::size_t yi = P.R->index("y");
        bool c = h.degree_in(yi) == 2 && h.coefficient_of(yi, 2) == P.s0 * P.s0 * P.s1 * P.s1;
        bool d = ideal_of(P.R, {h, P.s0 * P.s1}).is_unit();
        bool ok = a && b && c && d;
        return CaseOutcome::check(ok, eq_text(a, "h|T=0 = p_alpha p_beta") + "; " +
                                          eq_text(b, "h|T=1 = p_{alpha beta} p_1") + "; " +
                                          eq_text(c, "degree 2 in y, leading coefficient s0^2 s1^2") + "; " +
                                          eq_text(d, "<h, s0 s1> = <1>"));
    });
    add("5_ghat_T1", [](const GammaPolys& P) {
        Polynomial p = P.pfrak(P.alpha);
        bool ok = ideals_equal(ideal_of(P.R, {p, P.at(P.ghat(), "T", 1)}), ideal_of(P.R, {p, P.qfrak(-P.alpha)}));
        return CaseOutcome::check(ok, eq_text(ok, "<p_alpha, ghat|T=1> = <p_alpha, q_{-alpha}>"));
    });
    add("5_ghat_T0", [](const GammaPolys& P) {
        Ideal I = ideal_of(P.R, {P.pfrak(P.alpha), P.ghat(), P.T});
        bool raw = I.is_unit();
        bool ok = saturation(I, P.interior()).is_unit();
        return CaseOutcome::check(ok, eq_text(ok, "Z cap {T=0} empty over the interior") +
                                          "; unsaturated: " + (raw ? "unit" : "proper (boundary points)"));
    });
    add("5_ghat_alpha=1", [](const GammaPolys& P) {
        std::map<std::string, Rational> one{{"alpha", 1}, {"alphabar", 1}};
        Polynomial p = P.pfrak(P.alpha).specialize(one), g = P.ghat().specialize(one);
        bool a = ideals_equal(ideal_of(P.R, {p, P.at(g, "T", 1)}), ideal_of(P.R, {p, P.qfrak(P.c(-1))}));
        bool b = saturation(ideal_of(P.R, {p, g, P.T}), P.interior()).is_unit();
        return CaseOutcome::check(a && b, eq_text(a, "T=1 slice") + "; " + eq_text(b, "T=0 emptiness"));
    });
    add("6_ghat1_T1", [](const GammaPolys& P) {
        Polynomial p = P.pfrak(P.alpha);
        bool ok = ideals_equal(ideal_of(P.R, {p, P.at(P.ghat1(), "T", 1)}),
                               ideal_of(P.R, {p, P.qfrak(P.c(1) - P.alpha)}));
        return CaseOutcome::check(ok, eq_text(ok, "<p_alpha, ghat1|T=1> = <p_alpha, q_{1-alpha}>"));
    });
    add("6_ghat1_T0", [](const GammaPolys& P) {
        bool ok = ideal_of(P.R, {P.pfrak(P.alpha), P.ghat1(), P.T}).is_unit();
        return CaseOutcome::check(ok, eq_text(ok, "Z1 cap {T=0} empty"));
    });
    out.push_back(make_case("gamma", "gamma/6_milnor_unit", none, [](std::uint64_t) {
        GammaPolys P(symbol_ring(true));
        bool ok = ideal_of(P.R, {P.qfrak(P.c(1) - P.alpha), P.t0 * P.t1}).is_unit();
        return CaseOutcome::check(ok, eq_text(ok, "<q_{1-alpha}, t0 t1> = <1> with 1 - alpha a unit"));
    }));
    add("6_alt_informational", [](const GammaPolys& P) {
        Polynomial p = P.pfrak(P.alpha);
        bool t1 = ideals_equal(ideal_of(P.R, {p, P.at(P.ghat1_alt(), "T", 1)}),
                               ideal_of(P.R, {p, P.qfrak(P.c(1) - P.alpha)}));
        bool t0 = ideal_of(P.R, {p, P.ghat1_alt(), P.T}).is_unit();
        return CaseOutcome::open(std::string("variant with (t1 T)^2 s0^2 alpha: T=1 slice ") +
                                 (t1 ? "matches" : "does not match") + " <p_alpha, q_{1-alpha}>; T=0 " +
                                 (t0 ? "empty" : "nonempty"));
    });
    add("7_smooth_Z", [](const GammaPolys& P) { return smooth_case(P, P.ghat(), "Z"); });
    add("7_smooth_Z1", [](const GammaPolys& P) { return smooth_case(P, P.ghat1(), "Z1"); });
    return out;
}

// ---------------------------------------------------------------- LULU suite

std::vector<CaseSpec> lulu_cases(std::size_t n_max) {
    std::vector<CaseSpec> out;
    auto prm = [](std::size_t n, std::size_t m) { return Params{{"n", num(n)}, {"m", num(m)}}; };
    auto det_case = [&](std::size_t n, std::size_t m) {
        out.push_back(make_case("lulu", "mu_det/n=" + num(n) + ",m=" + num(m), prm(n, m), [n, m](std::uint64_t) {
            RingPtr R = lulu_ring(n, m);
            Polynomial d = det(mu_m(generic_quadruples(R, n, m)));
            return CaseOutcome::check(d == R->one(), "det = " + brief(d.str()));
        }));
    };
    for (std::size_t m = 1; m <= 3; ++m) det_case(2, m);
    if (n_max >= 3) det_case(3, 1);

    out.push_back(make_case("lulu", "mu_identity/n=2", prm(2, 3), [](std::uint64_t) {
        RingPtr R = lulu_ring(2, 3);
        std::vector<UnipotentQuadruple> q(3, identity_quadruple(R, 2));
        return CaseOutcome::check(mu_m(q).is_identity(), "mu_3(I, ..., I) = I");
    }));

    auto h_zero = [&](std::size_t n, std::size_t m) {
        out.push_back(make_case("lulu", "h_zero/n=" + num(n) + ",m=" + num(m), prm(n, m), [n, m](std::uint64_t) {
            PolyMatrix h = contracting_h(n, m);
            PolyMatrix h0 = h.specialize({{"T", 0}});
            RingPtr R = contracting_ring(n);
            bool factors = contracting_h(generic_quadruples(R, n, n * n - 1), R->zero()).is_identity();
            bool ok = h0.is_identity() && factors;
            return CaseOutcome::check(ok, "h(A, 0) = I (" + num(h.term_count()) + " terms in h(A, T))");
        }));
    };
    h_zero(2, 3);
    if (n_max >= 3) h_zero(3, 1);

    out.push_back(make_case("lulu", "h_det/n=2", prm(2, 3), [](std::uint64_t) {
        PolyMatrix h = contracting_h(2);
        Polynomial d = det(h);
        return CaseOutcome::check(d == h.ring()->one(), "det h(A, T) = " + brief(d.str()));
    }));
    out.push_back(make_case("lulu", "h_one_identity/n=2", prm(2, 3), [](std::uint64_t) {
        RingPtr R = contracting_ring(2);
        std::vector<UnipotentQuadruple> q(3, identity_quadruple(R, 2));
        return CaseOutcome::check(contracting_h(q, R->one()).is_identity(), "h(I, 1) = I");
    }));
    out.push_back(make_case("lulu", "h_stab/n=2", prm(2, 3), [](std::uint64_t) {
        // h_3(iota A; T) = j(h_2(A; T)), iota block-embeds and pads with identity quadruples.
        RingPtr R2 = contracting_ring(2), R3 = contracting_ring(3);
        std::vector<Polynomial> im;
        for (const auto& v : R3->variables()) {
            if (v == "T") {
                im.push_back(R2->var("T"));
                continue;
            }
            auto pos = v.find('_');
            std::string head = v.substr(0, pos), idx = v.substr(pos);
            std::size_t k = std::stoul(head.substr(1, head.size() - 3));
            bool in_block = idx.find('3') == std::string::npos;
            im.push_back(k < 3 && in_block ? R2->var(v) : R2->zero());
        }
        Morphism iota(R2, R3, im);
        auto fs = contracting_h_factors(generic_quadruples(R3, 3, 8), R3->var("T"));
        PolyMatrix lhs = PolyMatrix::identity(R2, 3);
        for (const auto& f : fs) lhs = lhs * f.map([&](const Polynomial& p) { return iota.pullback(p); });
        std::string why;
        bool ok = matrices_equal(lhs, block_embed(contracting_h(2)), &why);
        return CaseOutcome::check(ok, ok ? "h_3 o (iota x 1) = j o h_2 entrywise" : why);
    }));

    out.push_back(make_case("lulu", "mu_surjective/n=2", prm(2, 1), [](std::uint64_t seed) {
        RingPtr R = lulu_ring(2, 1);
        PolyMatrix M = mu(generic_quadruple(R, 2, "q0"));
        std::string w;
        for (std::uint64_t k = 0; k < 5; ++k) {
            RationalMatrix g = sample_sl(seed + k, 2);
            std::vector<Polynomial> gens;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) gens.push_back(M.at(i, j) - R->constant(g.at(i, j)));
            Ideal F(R, gens);
            if (F.is_unit()) return CaseOutcome::fail("empty fiber over " + g.str());
            w += (k ? "; " : "") + g.str() + " dim " + std::to_string(krull_dim(F));
        }
        return CaseOutcome::pass("nonempty fibers: " + w);
    }));

    auto fibers = [&](const std::string& id, const PolyMatrix& map, bool fixed) {
        out.push_back(make_case("lulu", id, prm(2, 3), [map, fixed](std::uint64_t seed) {
            std::vector<RationalMatrix> targets;
            if (fixed) {
                targets.push_back(RationalMatrix::identity(2));
                RationalMatrix d = RationalMatrix::identity(2);
                d.at(0, 0) = 2;
                d.at(1, 1) = Rational(1, 2);
                targets.push_back(d);
            }
            for (std::uint64_t k = 0; k < 3; ++k) targets.push_back(sample_sl(seed + k, 2));
            std::string w;
            bool ok = true;
            for (const auto& c : fiber_probe_cases("lulu", "p", map, targets, 9)) {
                CaseOutcome o = c.run(0);
                ok = ok && o.verdict == Verdict::Pass;
                w += (w.empty() ? "" : "; ") + o.witness;
            }
            return CaseOutcome::check(ok, w);
        }));
    };
    {
        RingPtr R = lulu_ring(2, 3);
        fibers("mu3_fibers/n=2", mu_m(generic_quadruples(R, 2, 3)), true);
        PolyMatrix h = contracting_h(2);
        fibers("h_fibers/n=2,T=1", h.specialize({{"T", 1}}).to_ring(R), false);
        fibers("h_fibers/n=2,T=1/2", h.specialize({{"T", Rational(1, 2)}}).to_ring(R), false);
    }

    for (std::size_t r = 1; r <= 2; ++r)
        out.push_back(make_case("lulu", "lambda_facets/n=2,r=" + num(r), {{"n", "2"}, {"r", num(r)}},
                                [r](std::uint64_t) {
            auto xv = qform_symbols("a", r);
            MatTuple a = qform_element(xv, "a", r, std::vector<std::size_t>(r + 1, static_cast<std::size_t>(-1)));
            std::vector<PolyMatrix> am;
            for (const auto& w : a) am.push_back(w.normalized().factors().front().m);
            std::vector<PolyMatrix> lam = lambda_build(am, r);
            const RingPtr& R = lam.front().ring();
            std::string w;
            for (std::size_t j = 0; j <= r; ++j) {
                std::map<std::string, Polynomial> at;
                if (j == 0) {
                    // t_0 = 0: t_r = 1 - t_1 - ... - t_{r-1}
                    Polynomial rest = R->one();
                    for (std::size_t i = 1; i < r; ++i) rest -= R->var(coordinate_name(0, i));
                    at[coordinate_name(0, r)] = rest;
                } else {
                    at[coordinate_name(0, j)] = R->zero();
                }
                for (std::size_t i = 0; i < r; ++i) {
                    std::string why;
                    if (!matrices_equal(lam[i].substitute(at), am[i].to_ring(R).substitute(at), &why))
                        return CaseOutcome::fail("facet " + num(j) + ", component " + num(i + 1) + ": " + why);
                }
                w += (j ? "," : "") + num(j);
            }
            std::size_t terms = 0;
            for (const auto& m : lam) terms += m.term_count();
            return CaseOutcome::pass("lambda_a = a on facets " + w + " (" + num(terms) + " terms)");
        }));

    out.push_back(make_case("lulu", "lambda_oracle/n=2,r=2", {{"n", "2"}, {"r", "2"}}, [](std::uint64_t) {
        // Direct substitution T -> rho(t) into h(A; T) against lambda_build.
        auto xv = qform_symbols("a", 2);
        MatTuple a = qform_element(xv, "a", 2, {static_cast<std::size_t>(-1), static_cast<std::size_t>(-1),
                                                static_cast<std::size_t>(-1)});
        std::vector<PolyMatrix> am;
        for (const auto& w : a) am.push_back(w.normalized().factors().front().m);
        std::vector<PolyMatrix> lam = lambda_build(am, 2);
        const RingPtr& R = lam.front().ring();
        PolyMatrix h = contracting_h(2);
        for (std::size_t k = 1; k <= 2; ++k) {
            std::vector<Polynomial> im;
            for (const auto& v : h.ring()->variables())
                im.push_back(v == "T" ? rho(R, 2) : R->var("A" + num(k) + v));
            PolyMatrix hk = h.substitute(im);
            std::string why;
            if (!matrices_equal(lam[k - 1], am[k - 1].to_ring(R) * hk, &why))
                return CaseOutcome::fail("component " + num(k) + ": " + why);
        }
        return CaseOutcome::pass("lambda_build agrees with h(A_k; T)|_{T = t0 t1 t2}");
    }));

    out.push_back(make_case("lulu", "lambda_fibers/n=2,r=1", {{"n", "2"}, {"r", "1"}}, [](std::uint64_t seed) {
        // Fibers of lambda_a over g at interior points, a at a seeded rational point;
        // A_0 (unused by lambda) contributes 12 free dimensions.
        std::mt19937_64 rng(seed);
        auto xv = qform_symbols("a", 1);
        MatTuple a = qform_element(xv, "a", 1, {static_cast<std::size_t>(-1), static_cast<std::size_t>(-1)});
        PolyMatrix am = a.front().normalized().factors().front().m;
        std::vector<PolyMatrix> lam = lambda_build({am}, 1);
        RingBuilder b;
        for (std::size_t j = 0; j < 3; ++j) b.vars(quadruple_variable_names(2, "A0q" + num(j)));
        for (std::size_t j = 0; j < 3; ++j) b.vars(quadruple_variable_names(2, "A1q" + num(j)));
        RingPtr F = b.build();
        std::map<std::string, Rational> xval;
        for (const auto& v : xv) xval[v] = small_rational(rng);
        RationalMatrix g = sample_sl(seed, 2);
        std::vector<int> dims;
        std::string w;
        for (int k = 0; k < 3; ++k) {
            auto t = interior_point(rng, 1);
            std::map<std::string, Rational> val = xval;
            val[coordinate_name(0, 1)] = t[1];
            PolyMatrix L = lam.front().specialize(val);
            std::vector<Polynomial> gens;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    gens.push_back(L.at(i, j).to_ring(F) - F->constant(g.at(i, j)));
            int d = krull_dim(Ideal(F, gens));
            dims.push_back(d);
            w += (k ? "; " : "") + std::string("t1=") + rational_str(t[1]) + " dim " + std::to_string(d);
        }
        bool ok = dims[0] == 21 && dims[1] == 21 && dims[2] == 21;
        return CaseOutcome::check(ok, w + "; expected 21 at every point");
    }));
    return out;
}

// ---------------------------------------------------------------- sk1 suite

std::vector<CaseSpec> sk1_cases(std::size_t r_max) {
    std::vector<CaseSpec> out;
    Params n2{{"n", "2"}};
    out.push_back(make_case("sk1", "g_ab_faces", n2, [](std::uint64_t seed) {
        std::vector<std::string> xv = matrix_variable_names(2, 2, "a");
        for (const auto& v : matrix_variable_names(2, 2, "b")) xv.push_back(v);
        RingPtr R2 = x_simplex_ring(xv, 2), R1 = x_simplex_ring(xv, 1);
        PolyMatrix a2 = matrix_of_variables(R2, 2, 2, "a"), b2 = matrix_of_variables(R2, 2, 2, "b");
        Polynomial t0 = R2->var("t_0"), t1 = R2->var("t_1"), t2 = R2->var("t_2");
        MatTuple g{MatWord::concrete(a2) * MatWord::h(R2, 2, 0, t0 * t1 * t2) * MatWord::h(R2, 2, 1, t0 * t1),
                   MatWord::concrete(b2) * MatWord::h(R2, 2, 1, t0 * t2 + t1 * t2)};
        PolyMatrix a1 = matrix_of_variables(R1, 2, 2, "a"), b1 = matrix_of_variables(R1, 2, 2, "b");
        auto lam = [](const PolyMatrix& m) { return lambda_words({MatWord::concrete(m)}, 1); };
        return check_faces(g, xv, 2, {{0, lam(b1)}, {1, lam(a1 * b1)}, {2, lam(a1)}}, 2, seed);
    }));
    out.push_back(make_case("sk1", "F_alpha_faces", n2, [](std::uint64_t seed) {
        std::vector<std::string> xv{"c_1", "c_2"};
        RingPtr R2 = x_simplex_ring(xv, 2), R1 = x_simplex_ring(xv, 1);
        // p(s0, s1) = e12(s0 c1) e21(s0 c2): p(1, 0) = alpha, p(0, 1) = I.
        Polynomial s0 = R1->var("t_0"), c1 = R1->var("c_1"), c2 = R1->var("c_2");
        PolyMatrix p = e12(R1, s0 * c1) * e21(R1, s0 * c2), pinv = e21(R1, -s0 * c2) * e12(R1, -s0 * c1);
        PolyMatrix alpha = e12(R1, c1) * e21(R1, c2);
        if (p.specialize({{"t_1", 0}}) != alpha || !p.specialize({{"t_1", 1}}).is_identity())
            return CaseOutcome::fail("path endpoints");
        auto pull = [&](const PolyMatrix& m, std::size_t j) {
            Morphism s = x_codegeneracy(xv, 1, j);
            return m.map([&](const Polynomial& q) { return s.pullback(q); });
        };
        Polynomial t0 = R2->var("t_0"), t1 = R2->var("t_1"), t2 = R2->var("t_2");
        MatTuple F{MatWord::concrete(pull(p, 0)) * MatWord::h(R2, 2, 0, t0 * t1 * t2) * MatWord::h(R2, 2, 1, t0 * t1),
                   MatWord::concrete(pull(pinv, 1)) * MatWord::h(R2, 2, 1, t0 * t1)};
        MatTuple I1{MatWord::identity(R1, 2)};
        return check_faces(F, xv, 2, {{0, I1}, {1, I1}, {2, lambda_words({MatWord::concrete(alpha)}, 1)}}, 2, seed);
    }));
    for (std::size_t r = 1; r <= r_max; ++r) {
        Params prm{{"n", "2"}, {"r", num(r)}};
        std::string tail = "/n=2,r=" + num(r);
        out.push_back(make_case("sk1", "ext_degenerate" + tail, prm, [r](std::uint64_t seed) {
            return check_extension_witness(extension_witness(ExtensionItem::Degenerate, r), seed);
        }));
        out.push_back(make_case("sk1", "ext_homotopy" + tail, prm, [r](std::uint64_t seed) {
            return check_extension_witness(extension_witness(ExtensionItem::Homotopy, r, true), seed);
        }));
        out.push_back(make_case("sk1", "ext_homotopy_printed" + tail, prm, [r](std::uint64_t seed) {
            CaseOutcome o = check_extension_witness(extension_witness(ExtensionItem::Homotopy, r, false), seed);
            if (o.verdict == Verdict::Pass) return o;
            return CaseOutcome::open("displayed form without h(A_i, rho_{r+1}) on components i <= r-1: " + o.witness);
        }));
        if (r >= 2)
            out.push_back(make_case("sk1", "ext_horn" + tail, prm, [r](std::uint64_t seed) {
                return check_extension_witness(extension_witness(ExtensionItem::Horn, r), seed);
            }));
    }
    return out;
}

// ---------------------------------------------------------------- reports

namespace {

std::vector<CaseSpec> with_prefix(const std::vector<CaseSpec>& cases, const std::string& prefix) {
    std::vector<CaseSpec> out;
    for (const auto& c : cases)
        if (c.case_id.rfind(prefix, 0) == 0) out.push_back(c);
    return out;
}

}  // namespace

VerificationReport verify_comm(const RunOptions& opt) { return run_cases(with_prefix(steinberg_cases(), "comm/"), opt); }

VerificationReport p_alpha_suite(const RunOptions& opt) {
    return run_cases(with_prefix(steinberg_cases(), "palpha/"), opt);
}

VerificationReport gamma_suite(const RunOptions& opt) { return run_cases(gamma_cases(), opt); }

VerificationReport sk1_homotopy_suite(std::size_t n, const RunOptions& opt) {
    if (n != 2) throw std::invalid_argument("sk1_homotopy_suite: n = 2 only");
    auto cases = sk1_cases(1);
    std::vector<CaseSpec> keep;
    for (const auto& c : cases)
        if (c.case_id.rfind("ext_", 0) != 0) keep.push_back(c);
    return run_cases(keep, opt);
}

VerificationReport verify_appendixB2_homotopies(std::size_t n, std::size_t r, const RunOptions& opt) {
    if (n != 2) throw std::invalid_argument("verify_appendixB2_homotopies: n = 2 only");
    std::vector<CaseSpec> keep;
    for (const auto& c : sk1_cases(r))
        if (c.case_id.rfind("ext_", 0) == 0 && c.case_id.find("r=" + num(r)) != std::string::npos) keep.push_back(c);
    return run_cases(keep, opt);
}

}  // namespace chowforge
