#include "chowforge/simplicialcat.hpp"

#include "chowforge/matdet.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace chowforge {

namespace {

const char* const kPrefixes[] = {"t", "s", "v", "w", "y", "z"};

Polynomial substitute_into(const Polynomial& p, const std::vector<Polynomial>& images, const RingPtr& dest) {
    if (p.is_zero()) return Polynomial(dest);
    if (images.empty()) {
        auto c = p.constant_value();
        if (!c) throw std::invalid_argument("substitute: non-constant polynomial on a point");
        return dest->constant(*c);
    }
    return p.substitute(images);
}

Shape concat(const Shape& a, const Shape& b) {
    Shape s = a;
    s.insert(s.end(), b.begin(), b.end());
    return s;
}

const Shape& need_shape(const std::optional<Shape>& s, const char* what) {
    if (!s) throw std::invalid_argument(std::string(what) + ": simplex-product morphism expected");
    return *s;
}

// Free coordinates of the factors first, first+1, ... of a simplex ring.
std::vector<Polynomial> factor_vars(const RingPtr& r, std::size_t first, const Shape& sub) {
    std::vector<Polynomial> v;
    for (std::size_t k = 0; k < sub.size(); ++k)
        for (std::size_t i = 1; i <= sub[k]; ++i) v.push_back(r->var(coordinate_name(first + k, i)));
    return v;
}

}  // namespace

std::string coordinate_name(std::size_t factor, std::size_t i) {
    if (factor >= std::size(kPrefixes)) throw std::out_of_range("too many simplex factors");
    return std::string(kPrefixes[factor]) + "_" + std::to_string(i);
}

std::string shape_str(const Shape& shape) {
    std::string s;
    for (std::size_t k = 0; k < shape.size(); ++k) s += (k ? "x" : "") + std::string("D") + std::to_string(shape[k]);
    return s;
}

RingPtr simplex_ring(const Shape& shape) {
    static std::mutex mu;
    static std::map<Shape, RingPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(shape);
    if (it != cache.end()) return it->second;
    RingBuilder b;
    for (std::size_t k = 0; k < shape.size(); ++k) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i <= shape[k]; ++i) names.push_back(coordinate_name(k, i));
        b.simplex(names);
    }
    RingPtr r = b.build();
    cache.emplace(shape, r);
    return r;
}

// ---------------------------------------------------------------- Morphism

Morphism::Morphism(RingPtr source, RingPtr target, std::vector<Polynomial> images)
    : src_(std::move(source)), tgt_(std::move(target)), images_(std::move(images)) {
    finish();
}

Morphism::Morphism(const Shape& source, const Shape& target, std::vector<Polynomial> images)
    : src_(simplex_ring(source)), tgt_(simplex_ring(target)), images_(std::move(images)),
      src_shape_(source), tgt_shape_(target) {
    finish();
}

void Morphism::finish() {
    if (!src_ || !tgt_) throw std::invalid_argument("morphism needs source and target rings");
    if (images_.size() != tgt_->nvars())
        throw std::invalid_argument("morphism: expected " + std::to_string(tgt_->nvars()) + " images");
    key_.clear();
    for (auto& p : images_) {
        if (!p.ring()) p = Polynomial(src_);
        require_same_ring(src_, p.ring(), "morphism image");
        key_ += p.str();
        key_ += '|';
    }
}

Morphism Morphism::identity(const RingPtr& ring) {
    std::vector<Polynomial> im;
    for (std::size_t i = 0; i < ring->nvars(); ++i) im.push_back(ring->var(i));
    return Morphism(ring, ring, std::move(im));
}

Morphism Morphism::identity(const Shape& shape) {
    RingPtr r = simplex_ring(shape);
    std::vector<Polynomial> im;
    for (std::size_t i = 0; i < r->nvars(); ++i) im.push_back(r->var(i));
    return Morphism(shape, shape, std::move(im));
}

Polynomial Morphism::pullback(const Polynomial& f) const {
    require_same_ring(tgt_, f.ring(), "pullback");
    return substitute_into(f, images_, src_);
}

Polynomial Morphism::image(const std::string& target_var) const { return pullback(tgt_->var(target_var)); }

bool Morphism::respects_relations() const {
    auto rels = tgt_->relations();
    if (rels.empty()) return true;
    Ideal src_rel(src_, {});
    for (const auto& r : rels)
        if (!src_rel.contains(pullback(r))) return false;
    return true;
}

bool Morphism::operator==(const Morphism& o) const {
    return same_ring(src_, o.src_) && same_ring(tgt_, o.tgt_) && images_ == o.images_;
}

std::string Morphism::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < images_.size(); ++i)
        os << (i ? ", " : "") << tgt_->name(i) << " -> " << images_[i].str();
    os << ")";
    return os.str();
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!same_ring(g.source(), f.target())) throw std::invalid_argument("compose: source/target mismatch");
    std::vector<Polynomial> im;
    im.reserve(g.images().size());
    for (const auto& p : g.images()) im.push_back(substitute_into(p, f.images(), f.source()));
    if (f.source_shape() && g.target_shape()) return Morphism(*f.source_shape(), *g.target_shape(), std::move(im));
    return Morphism(f.source(), g.target(), std::move(im));
}

Morphism product_morphism(const Morphism& f, const Morphism& g) {
    const Shape& fs = need_shape(f.source_shape(), "product_morphism");
    const Shape& ft = need_shape(f.target_shape(), "product_morphism");
    const Shape& gs = need_shape(g.source_shape(), "product_morphism");
    const Shape& gt = need_shape(g.target_shape(), "product_morphism");
    Shape src = concat(fs, gs);
    RingPtr R = simplex_ring(src);
    std::vector<Polynomial> ren_f = factor_vars(R, 0, fs);
    std::vector<Polynomial> ren_g = factor_vars(R, fs.size(), gs);
    std::vector<Polynomial> im;
    for (const auto& p : f.images()) im.push_back(substitute_into(p, ren_f, R));
    for (const auto& p : g.images()) im.push_back(substitute_into(p, ren_g, R));
    return Morphism(src, concat(ft, gt), std::move(im));
}

Morphism pairing(const Morphism& f, const Morphism& g) {
    if (!same_ring(f.source(), g.source())) throw std::invalid_argument("pairing: sources differ");
    const Shape& fs = need_shape(f.source_shape(), "pairing");
    const Shape& ft = need_shape(f.target_shape(), "pairing");
    const Shape& gt = need_shape(g.target_shape(), "pairing");
    std::vector<Polynomial> im = f.images();
    im.insert(im.end(), g.images().begin(), g.images().end());
    return Morphism(fs, concat(ft, gt), std::move(im));
}

Morphism from_vertex_map(std::size_t k, const Shape& target, const std::vector<std::vector<std::size_t>>& vmap) {
    if (vmap.size() != k + 1) throw std::invalid_argument("vertex map: expected k+1 vertices");
    RingPtr S = simplex_ring({k});
    std::vector<Polynomial> coord;
    for (std::size_t m = 0; m <= k; ++m) coord.push_back(S->var(coordinate_name(0, m)));
    std::vector<Polynomial> im;
    for (std::size_t f = 0; f < target.size(); ++f) {
        for (std::size_t i = 1; i <= target[f]; ++i) {
            Polynomial p(S);
            for (std::size_t m = 0; m <= k; ++m) {
                if (vmap[m].size() != target.size()) throw std::invalid_argument("vertex map: factor count");
                if (vmap[m][f] > target[f]) throw std::out_of_range("vertex map: vertex out of range");
                if (vmap[m][f] == i) p += coord[m];
            }
            im.push_back(std::move(p));
        }
    }
    return Morphism({k}, target, std::move(im));
}

std::vector<std::vector<std::size_t>> vertex_map(const Morphism& m) {
    const Shape& s = need_shape(m.source_shape(), "vertex_map");
    const Shape& t = need_shape(m.target_shape(), "vertex_map");
    if (s.size() != 1) throw std::invalid_argument("vertex_map: single simplex source expected");
    std::size_t k = s[0];
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t v = 0; v <= k; ++v) {
        std::vector<Rational> pt(k, Rational(0));
        if (v >= 1) pt[v - 1] = 1;
        std::vector<std::size_t> row;
        std::size_t pos = 0;
        for (std::size_t f = 0; f < t.size(); ++f) {
            Rational rest = 1;
            std::optional<std::size_t> hit;
            for (std::size_t i = 1; i <= t[f]; ++i, ++pos) {
                Rational x = m.images()[pos].evaluate(pt);
                rest -= x;
                if (x == 1) {
                    if (hit) throw std::invalid_argument("vertex_map: not a vertex");
                    hit = i;
                } else if (x != 0) {
                    throw std::invalid_argument("vertex_map: not a vertex");
                }
            }
            if (rest == 1) {
                if (hit) throw std::invalid_argument("vertex_map: not a vertex");
                hit = 0;
            } else if (rest != 0 || !hit) {
                throw std::invalid_argument("vertex_map: not a vertex");
            }
            row.push_back(*hit);
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::optional<Morphism> affine_inverse(const Morphism& m) {
    std::size_t n = m.source()->nvars();
    if (m.target()->nvars() != n) return std::nullopt;
    // images = A x + b
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n + 1, Rational(0)));
    std::vector<Rational> b(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& t : m.images()[i].terms()) {
            if (t.m.degree() == 0) {
                b[i] = t.c;
                continue;
            }
            if (t.m.degree() != 1) return std::nullopt;
            for (std::size_t v = 0; v < n; ++v)
                if (t.m[v]) A[i][v] = t.c;
        }
    }
    // Invert A by Gauss-Jordan on [A | I].
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = A[i][j];
        M[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(M[p], M[c]);
        Rational inv = 1 / M[c][c];
        for (auto& x : M[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || M[r][c] == 0) continue;
            Rational f = M[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) M[r][j] -= f * M[c][j];
        }
    }
    const RingPtr& T = m.target();
    std::vector<Polynomial> im;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial p(T);
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& a = M[i][n + j];
            if (a == 0) continue;
            p += (T->var(j) - T->constant(b[j])).scaled(a);
        }
        im.push_back(std::move(p));
    }
    if (m.source_shape() && m.target_shape()) return Morphism(*m.target_shape(), *m.source_shape(), std::move(im));
    return Morphism(m.target(), m.source(), std::move(im));
}

// ---------------------------------------------------------------- FormalSum

FormalSum::FormalSum(const Morphism& m, Integer c)
    : src_(m.source()), tgt_(m.target()), src_shape_(m.source_shape()), tgt_shape_(m.target_shape()) {
    if (c != 0) terms_.emplace_back(std::move(c), m);
}

FormalSum FormalSum::zero(const Morphism& like) { return FormalSum(like, 0); }

FormalSum FormalSum::zero(const Shape& source, const Shape& target) {
    FormalSum f;
    f.src_ = simplex_ring(source);
    f.tgt_ = simplex_ring(target);
    f.src_shape_ = source;
    f.tgt_shape_ = target;
    return f;
}

Integer FormalSum::coefficient_sum() const {
    Integer s = 0;
    for (const auto& t : terms_) s += t.first;
    return s;
}

void FormalSum::check_compatible(const FormalSum& o) const {
    if (!same_ring(src_, o.src_) || !same_ring(tgt_, o.tgt_))
        throw std::invalid_argument("formal sum: source/target mismatch");
}

void FormalSum::canonicalize() {
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const TermT& a, const TermT& b) { return a.second.key() < b.second.key(); });
    std::vector<TermT> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().second.key() == t.second.key()) out.back().first += t.first;
        else out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const TermT& t) { return t.first == 0; }), out.end());
    terms_ = std::move(out);
}

FormalSum FormalSum::operator+(const FormalSum& o) const {
    check_compatible(o);
    FormalSum r = *this;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    r.canonicalize();
    return r;
}

FormalSum FormalSum::operator-(const FormalSum& o) const { return *this + o.scaled(-1); }

FormalSum FormalSum::scaled(const Integer& c) const {
    FormalSum r = *this;
    for (auto& t : r.terms_) t.first *= c;
    r.canonicalize();
    return r;
}

bool FormalSum::operator==(const FormalSum& o) const {
    if (!same_ring(src_, o.src_) || !same_ring(tgt_, o.tgt_) || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second) return false;
    return true;
}

std::string FormalSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& [c, m] = terms_[i];
        if (i) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Integer a = abs(c);
        if (a != 1) os << a.get_str() << "*";
        os << m.str();
    }
    return os.str();
}

FormalSum compose(const FormalSum& g, const FormalSum& f) {
    if (!same_ring(g.source(), f.target())) throw std::invalid_argument("compose: source/target mismatch");
    FormalSum out;
    if (f.source_shape() && g.target_shape()) out = FormalSum::zero(*f.source_shape(), *g.target_shape());
    else {
        // Zero sum between general rings, built from an identity placeholder.
        Morphism like(f.source(), g.target(), std::vector<Polynomial>(g.target()->nvars(), Polynomial(f.source())));
        out = FormalSum::zero(like);
    }
    for (const auto& [cg, mg] : g.terms())
        for (const auto& [cf, mf] : f.terms()) out += FormalSum(compose(mg, mf), cg * cf);
    return out;
}

FormalSum product(const FormalSum& f, const FormalSum& g) {
    FormalSum out = FormalSum::zero(concat(need_shape(f.source_shape(), "product"), need_shape(g.source_shape(), "product")),
                                    concat(need_shape(f.target_shape(), "product"), need_shape(g.target_shape(), "product")));
    for (const auto& [cf, mf] : f.terms())
        for (const auto& [cg, mg] : g.terms()) out += FormalSum(product_morphism(mf, mg), cf * cg);
    return out;
}

// ---------------------------------------------------------------- operators

Morphism coface(std::size_t r, std::size_t j) {
    if (r < 1) throw std::out_of_range("coface: r >= 1 required");
    if (j > r) throw std::out_of_range("coface: index out of range");
    std::vector<std::vector<std::size_t>> vm;
    for (std::size_t m = 0; m < r; ++m) vm.push_back({m < j ? m : m + 1});
    return from_vertex_map(r - 1, {r}, vm);
}

Morphism codegeneracy(std::size_t r, std::size_t j) {
    if (j > r) throw std::out_of_range("codegeneracy: index out of range");
    std::vector<std::vector<std::size_t>> vm;
    for (std::size_t m = 0; m <= r + 1; ++m) vm.push_back({m <= j ? m : m - 1});
    return from_vertex_map(r + 1, {r}, vm);
}

Morphism codegeneracy_composite(std::size_t l, const std::vector<std::size_t>& J) {
    std::vector<std::size_t> desc = J;
    std::sort(desc.rbegin(), desc.rend());
    if (std::adjacent_find(desc.begin(), desc.end()) != desc.end())
        throw std::invalid_argument("codegeneracy composite: repeated index");
    Morphism acc = Morphism::identity(Shape{l});
    std::size_t cur = l;
    for (std::size_t j : desc) {
        if (cur == 0 || j > cur - 1) throw std::out_of_range("codegeneracy composite: index out of range");
        acc = compose(codegeneracy(cur - 1, j), acc);
        --cur;
    }
    return acc;
}

FormalSum dhat(std::size_t r) {
    if (r < 1) throw std::out_of_range("dhat: r >= 1 required");
    FormalSum s = FormalSum::zero(Shape{r - 1}, Shape{r});
    for (std::size_t i = 0; i <= r; ++i) s += FormalSum(coface(r, i), (i % 2) ? -1 : 1);
    return s;
}

int shuffle_sign(const std::vector<std::size_t>& I, const std::vector<std::size_t>& Ic) {
    std::vector<std::size_t> perm = I;
    perm.insert(perm.end(), Ic.begin(), Ic.end());
    std::size_t inv = 0;
    for (std::size_t x = 0; x < perm.size(); ++x)
        for (std::size_t y = x + 1; y < perm.size(); ++y)
            if (perm[x] > perm[y]) ++inv;
    return inv % 2 ? -1 : 1;
}

FormalSum ez_psi(std::size_t a, std::size_t b) {
    std::size_t l = a + b;
    FormalSum s = FormalSum::zero(Shape{l}, Shape{a, b});
    for (const auto& one_based : index_subsets(l, a)) {
        std::vector<std::size_t> I, Ic;
        for (auto i : one_based) I.push_back(i - 1);
        for (std::size_t x = 0; x < l; ++x)
            if (!std::binary_search(I.begin(), I.end(), x)) Ic.push_back(x);
        Morphism term = pairing(codegeneracy_composite(l, Ic), codegeneracy_composite(l, I));
        s += FormalSum(term, shuffle_sign(I, Ic));
    }
    return s;
}

Morphism aw_E(std::size_t a, std::size_t b) {
    std::size_t l = a + b;
    std::vector<std::vector<std::size_t>> front, back;
    for (std::size_t m = 0; m <= a; ++m) front.push_back({m});
    for (std::size_t m = 0; m <= b; ++m) back.push_back({a + m});
    return product_morphism(from_vertex_map(a, {l}, front), from_vertex_map(b, {l}, back));
}

FormalSum nabla(std::size_t l) {
    if (l < 1) throw std::out_of_range("nabla: l >= 1 required");
    FormalSum s = FormalSum::zero(Shape{l - 1, l - 1}, Shape{l, l});
    for (std::size_t j = 0; j <= l; ++j) s += FormalSum(product_morphism(coface(l, j), coface(l, j)), (j % 2) ? -1 : 1);
    return s;
}

FormalSum diag_approx(std::size_t l) {
    FormalSum s = FormalSum::zero(Shape{l}, Shape{l, l});
    for (std::size_t a = 0; a <= l; ++a) s += compose(FormalSum(aw_E(a, l - a)), ez_psi(a, l - a));
    return s;
}

Morphism diagonal(std::size_t l) {
    Morphism id = Morphism::identity(Shape{l});
    return pairing(id, id);
}

namespace {

// Δ^1 × Δ^l -> Δ^l × Δ^l, t_0 * f + t_1 * g.
Morphism interpolate(const Morphism& f, const Morphism& g, std::size_t l) {
    Shape src{1, l};
    RingPtr R = simplex_ring(src);
    std::vector<Polynomial> ren = factor_vars(R, 1, {l});
    Polynomial t0 = R->var(coordinate_name(0, 0));
    Polynomial t1 = R->var(coordinate_name(0, 1));
    std::vector<Polynomial> im;
    for (std::size_t i = 0; i < f.images().size(); ++i)
        im.push_back(t0 * substitute_into(f.images()[i], ren, R) + t1 * substitute_into(g.images()[i], ren, R));
    return Morphism(src, Shape{l, l}, std::move(im));
}

Morphism cone(const Morphism& m) {
    auto vm = vertex_map(m);
    std::vector<std::vector<std::size_t>> out{std::vector<std::size_t>(vm.front().size(), 0)};
    out.insert(out.end(), vm.begin(), vm.end());
    return from_vertex_map(vm.size(), need_shape(m.target_shape(), "cone"), out);
}

}  // namespace

FormalSum candidate_H(std::size_t l) {
    FormalSum phi = diag_approx(l);
    Morphism d = diagonal(l);
    FormalSum h = FormalSum::zero(Shape{1, l}, Shape{l, l});
    for (const auto& [c, m] : phi.terms()) h += FormalSum(interpolate(d, m, l), c);
    Integer pad = 1 - phi.coefficient_sum();
    if (pad != 0) h += FormalSum(interpolate(d, d, l), pad);
    return h;
}

FormalSum candidate_P(std::size_t k) {
    if (k < 1) throw std::out_of_range("candidate_P: k >= 1 required");
    return compose(candidate_H(k - 1), ez_psi(1, k - 1));
}

FormalSum restrict_to_vertex(const FormalSum& h, std::size_t e) {
    const Shape& s = need_shape(h.source_shape(), "restrict_to_vertex");
    if (s.size() != 2 || s[0] != 1) throw std::invalid_argument("restrict_to_vertex: source D1 x Dl expected");
    if (e > 1) throw std::out_of_range("restrict_to_vertex: vertex of D1");
    std::size_t l = s[1];
    std::vector<std::vector<std::size_t>> vm;
    for (std::size_t m = 0; m <= l; ++m) vm.push_back({e, m});
    return compose(h, FormalSum(from_vertex_map(l, s, vm)));
}

std::vector<FormalSum> cone_solve_P(std::size_t l_max) {
    std::vector<FormalSum> P(l_max + 2);
    for (std::size_t l = 0; l <= l_max; ++l) {
        FormalSum R = diag_approx(l) - FormalSum(diagonal(l));
        if (l >= 1) R = R - compose(nabla(l), P[l]);
        FormalSum next = FormalSum::zero(Shape{l + 1}, Shape{l, l});
        for (const auto& [c, m] : R.terms()) next += FormalSum(cone(m), c);
        P[l + 1] = std::move(next);
    }
    return P;
}

std::string first_difference(const FormalSum& a, const FormalSum& b) {
    FormalSum d = a - b;
    if (d.is_zero()) return {};
    std::ostringstream os;
    os << d.size() << " differing terms; first: coefficient " << d.terms().front().first.get_str() << " on "
       << d.terms().front().second.str();
    return os.str();
}

bool htpy_holds(std::size_t l, const FormalSum& P_next, const std::optional<FormalSum>& P_cur, std::string* why) {
    FormalSum lhs = diag_approx(l) - FormalSum(diagonal(l));
    FormalSum rhs = compose(P_next, dhat(l + 1));
    if (l >= 1) {
        if (!P_cur) throw std::invalid_argument("htpy: P_l required for l >= 1");
        rhs += compose(nabla(l), *P_cur);
    }
    bool ok = lhs == rhs;
    if (!ok && why) *why = first_difference(lhs, rhs);
    return ok;
}

PrismResult prism(std::size_t l) {
    PrismResult res;
    res.l = l;
    res.H = candidate_H(l);
    res.candidate_e0 = restrict_to_vertex(res.H, 0) == FormalSum(diagonal(l));
    res.candidate_e1 = restrict_to_vertex(res.H, 1) == diag_approx(l);
    FormalSum Pn = candidate_P(l + 1);
    std::optional<FormalSum> Pc;
    if (l >= 1) Pc = candidate_P(l);
    std::string why;
    res.candidate_htpy = htpy_holds(l, Pn, Pc, &why);
    std::ostringstream os;
    os << "candidate H: e0 " << (res.candidate_e0 ? "ok" : "fails") << ", e1 " << (res.candidate_e1 ? "ok" : "fails")
       << ", htpy " << (res.candidate_htpy ? "ok" : "fails");
    if (res.candidate_htpy) {
        res.route = "candidate-H";
        res.verified = true;
        res.P = Pn;
    } else {
        os << " (" << why << ")";
        auto P = cone_solve_P(l);
        std::optional<FormalSum> cur;
        if (l >= 1) cur = P[l];
        std::string why2;
        if (htpy_holds(l, P[l + 1], cur, &why2)) {
            res.route = "cone-solve";
            res.verified = true;
            res.P = P[l + 1];
            os << "; cone-solve: ok, P_" << l + 1 << " has " << res.P.size() << " terms";
        } else {
            res.route = "none";
            os << "; cone-solve fails (" << why2 << ")";
        }
    }
    res.detail = os.str();
    return res;
}

// ---------------------------------------------------------------- ideals

Ideal pullback_ideal(const Morphism& f, const Ideal& I) {
    require_same_ring(f.target(), I.ring(), "pullback_ideal");
    std::vector<Polynomial> g;
    for (const auto& p : I.generators()) g.push_back(f.pullback(p));
    return Ideal(f.source(), std::move(g));
}

Ideal prism_slice(const Ideal& gamma, const std::string& coordinate, const std::optional<Rational>& value) {
    if (!value) return gamma;
    const Ring& R = *gamma.ring();
    R.index(coordinate);
    std::vector<std::string> keep;
    for (const auto& v : R.variables())
        if (v != coordinate) keep.push_back(v);
    RingPtr sub = subring(R, keep);
    std::map<std::string, Rational> at{{coordinate, *value}};
    RingBuilder b;
    b.extend(*sub);
    for (const auto& rel : R.relations()) {
        Polynomial p = rel.specialize(at).to_ring(sub);
        if (!p.is_zero()) b.relation(p.str());
    }
    RingPtr out = b.build();
    std::vector<Polynomial> g;
    for (const auto& p : gamma.generators()) g.push_back(p.specialize(at).to_ring(out));
    return Ideal(out, std::move(g));
}

bool special_condition_holds(const Ideal& gamma_r, const Ideal& gamma_prev, const Morphism& simplex_face,
                             const Morphism& group_face) {
    require_same_ring(simplex_face.source(), group_face.source(), "special cycle faces");
    return ideals_equal(pullback_ideal(simplex_face, gamma_r), pullback_ideal(group_face, gamma_prev));
}

// ---------------------------------------------------------------- operator language

namespace {

using Value = std::variant<long long, FormalSum>;

class OpParser {
public:
    explicit OpParser(const std::string& s) : s_(s) {}

    FormalSum parse() {
        Value v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return sum_of(v);
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("operator expression: " + what + " at offset " + std::to_string(pos_));
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
    FormalSum sum_of(const Value& v) const {
        if (auto* f = std::get_if<FormalSum>(&v)) return *f;
        fail("operator expected, found integer");
    }
    std::size_t nat(const Value& v) const {
        auto* i = std::get_if<long long>(&v);
        if (!i || *i < 0) fail("non-negative integer expected");
        return static_cast<std::size_t>(*i);
    }

    Value expr() {
        skip();
        if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
            std::size_t start = pos_;
            if (s_[pos_] == '-') ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start + (s_[start] == '-' ? 1 : 0)) fail("number expected");
            return std::stoll(s_.substr(start, pos_ - start));
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        if (name.empty()) fail("name expected");
        std::vector<Value> args;
        if (!eat('(')) fail("'(' expected after " + name);
        if (!eat(')')) {
            do args.push_back(expr());
            while (eat(','));
            if (!eat(')')) fail("')' expected");
        }
        return apply(name, args);
    }

    Value apply(const std::string& name, const std::vector<Value>& a) {
        auto arity = [&](std::size_t n) {
            if (a.size() != n) fail(name + " takes " + std::to_string(n) + " arguments");
        };
        if (name == "id") {
            Shape s;
            for (const auto& v : a) s.push_back(nat(v));
            if (s.empty()) fail("id needs a shape");
            return FormalSum(Morphism::identity(s));
        }
        if (name == "d" || name == "coface") {
            arity(2);
            return FormalSum(coface(nat(a[0]), nat(a[1])));
        }
        if (name == "s" || name == "codeg") {
            arity(2);
            return FormalSum(codegeneracy(nat(a[0]), nat(a[1])));
        }
        if (name == "dhat") {
            arity(1);
            return dhat(nat(a[0]));
        }
        if (name == "ez" || name == "psi") {
            arity(2);
            return ez_psi(nat(a[0]), nat(a[1]));
        }
        if (name == "aw" || name == "E") {
            arity(2);
            return FormalSum(aw_E(nat(a[0]), nat(a[1])));
        }
        if (name == "nabla") {
            arity(1);
            return nabla(nat(a[0]));
        }
        if (name == "phi") {
            arity(1);
            return diag_approx(nat(a[0]));
        }
        if (name == "diag") {
            arity(1);
            return FormalSum(diagonal(nat(a[0])));
        }
        if (name == "H") {
            arity(1);
            return candidate_H(nat(a[0]));
        }
        if (name == "P") {
            arity(1);
            std::size_t k = nat(a[0]);
            if (k == 0) fail("P(0) has no simplex target");
            return cone_solve_P(k - 1)[k];
        }
        if (name == "compose") {
            if (a.size() < 2) fail("compose takes at least 2 arguments");
            FormalSum acc = sum_of(a.back());
            for (std::size_t i = a.size() - 1; i-- > 0;) acc = compose(sum_of(a[i]), acc);
            return acc;
        }
        if (name == "prod") {
            if (a.size() < 2) fail("prod takes at least 2 arguments");
            FormalSum acc = sum_of(a[0]);
            for (std::size_t i = 1; i < a.size(); ++i) acc = product(acc, sum_of(a[i]));
            return acc;
        }
        if (name == "sum") {
            if (a.empty()) fail("sum takes at least 1 argument");
            FormalSum acc = sum_of(a[0]);
            for (std::size_t i = 1; i < a.size(); ++i) acc += sum_of(a[i]);
            return acc;
        }
        if (name == "diff") {
            arity(2);
            return sum_of(a[0]) - sum_of(a[1]);
        }
        if (name == "neg") {
            arity(1);
            return -sum_of(a[0]);
        }
        if (name == "scale") {
            arity(2);
            auto* c = std::get_if<long long>(&a[0]);
            if (!c) fail("scale needs an integer first");
            return sum_of(a[1]).scaled(Integer(static_cast<long>(*c)));
        }
        fail("unknown operator " + name);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

FormalSum parse_operator(const std::string& text) { return OpParser(text).parse(); }

// ---------------------------------------------------------------- verification cases

namespace {

std::string num(std::size_t x) { return std::to_string(x); }

CaseOutcome check_equal(const FormalSum& lhs, const FormalSum& rhs, const std::string& name) {
    std::string d = first_difference(lhs, rhs);
    if (d.empty()) return CaseOutcome::pass(name + ": " + num(lhs.size()) + " terms");
    return CaseOutcome::fail(name + ": " + d);
}

CaseOutcome cosimplicial_identities(std::size_t max_deg) {
    std::size_t checked = 0;
    auto same = [&](const Morphism& x, const Morphism& y, const std::string& what) {
        ++checked;
        if (x != y) throw std::runtime_error("cosimplicial identity fails: " + what);
    };
    for (std::size_t r = 2; r <= max_deg; ++r)
        for (std::size_t j = 1; j <= r; ++j)
            for (std::size_t i = 0; i < j; ++i)
                same(compose(coface(r, j), coface(r - 1, i)), compose(coface(r, i), coface(r - 1, j - 1)),
                     "d_j d_i, r=" + num(r));
    for (std::size_t r = 0; r + 2 <= max_deg; ++r)
        for (std::size_t j = 0; j <= r; ++j)
            for (std::size_t i = 0; i <= j; ++i)
                same(compose(codegeneracy(r, j), codegeneracy(r + 1, i)),
                     compose(codegeneracy(r, i), codegeneracy(r + 1, j + 1)), "s_j s_i, r=" + num(r));
    for (std::size_t r = 0; r + 1 <= max_deg; ++r)
        for (std::size_t j = 0; j <= r; ++j)
            for (std::size_t i = 0; i <= r + 1; ++i) {
                Morphism lhs = compose(codegeneracy(r, j), coface(r + 1, i));
                std::string tag = "s_j d_i, r=" + num(r) + " i=" + num(i) + " j=" + num(j);
                if (i < j) same(lhs, compose(coface(r, i), codegeneracy(r - 1, j - 1)), tag);
                else if (i == j || i == j + 1) same(lhs, Morphism::identity(Shape{r}), tag);
                else same(lhs, compose(coface(r, i - 1), codegeneracy(r - 1, j)), tag);
            }
    return CaseOutcome::pass(num(checked) + " identities up to degree " + num(max_deg));
}

CaseOutcome ez_isomorphisms(std::size_t l) {
    std::size_t n = 0;
    for (std::size_t a = 0; a <= l; ++a) {
        FormalSum psi = ez_psi(a, l - a);
        for (const auto& [c, m] : psi.terms()) {
            (void)c;
            auto inv = affine_inverse(m);
            if (!inv) return CaseOutcome::fail("no inverse for " + m.str());
            if (compose(*inv, m) != Morphism::identity(Shape{l}) || compose(m, *inv) != Morphism::identity(Shape{a, l - a}))
                return CaseOutcome::fail("inverse is not two-sided for " + m.str());
            ++n;
        }
    }
    return CaseOutcome::pass(num(n) + " shuffle terms invertible");
}

}  // namespace

std::vector<CaseSpec> simplicial_cases(std::size_t l_max) {
    std::vector<CaseSpec> cs;
    const std::string suite = "simplicial";
    cs.push_back({suite, "cosimplicial", {{"max_degree", "5"}}, [](std::uint64_t) { return cosimplicial_identities(5); }});
    for (std::size_t l = 0; l <= l_max; ++l) {
        cs.push_back({suite, "psi_count/l=" + num(l), {{"l", num(l)}}, [l](std::uint64_t) {
                          std::ostringstream os;
                          for (std::size_t a = 0; a <= l; ++a) {
                              std::size_t got = ez_psi(a, l - a).size();
                              std::size_t want = index_subsets(l, a).size();
                              if (got != want)
                                  return CaseOutcome::fail("ez(" + num(a) + "," + num(l - a) + ") has " + num(got) +
                                                           " terms, expected " + num(want));
                              os << (a ? " " : "") << got;
                          }
                          return CaseOutcome::pass("term counts " + os.str());
                      }});
        cs.push_back({suite, "ez_iso/l=" + num(l), {{"l", num(l)}}, [l](std::uint64_t) { return ez_isomorphisms(l); }});
    }
    for (std::size_t l = 1; l <= l_max; ++l)
        for (std::size_t a = 0; a <= l; ++a) {
            std::size_t b = l - a;
            cs.push_back({suite, "ez1/a=" + num(a) + ",b=" + num(b), {{"a", num(a)}, {"b", num(b)}},
                          [a, b, l](std::uint64_t) {
                              FormalSum lhs = compose(ez_psi(a, b), dhat(l));
                              FormalSum rhs = FormalSum::zero(Shape{l - 1}, Shape{a, b});
                              if (a >= 1) rhs += compose(product(dhat(a), FormalSum(Morphism::identity(Shape{b}))), ez_psi(a - 1, b));
                              if (b >= 1)
                                  rhs += compose(product(FormalSum(Morphism::identity(Shape{a})), dhat(b)), ez_psi(a, b - 1))
                                             .scaled(a % 2 ? -1 : 1);
                              return check_equal(lhs, rhs, "compose(ez(" + num(a) + "," + num(b) + "), dhat(" + num(l) + "))");
                          }});
        }
    for (std::size_t l = 0; l <= l_max; ++l)
        for (std::size_t a = 0; a <= l; ++a) {
            std::size_t b = l - a;
            cs.push_back({suite, "aw/a=" + num(a) + ",b=" + num(b), {{"a", num(a)}, {"b", num(b)}},
                          [a, b, l](std::uint64_t) {
                              FormalSum lhs = compose(nabla(l + 1), FormalSum(aw_E(a, b)));
                              FormalSum rhs = compose(FormalSum(aw_E(a + 1, b)),
                                                      product(dhat(a + 1), FormalSum(Morphism::identity(Shape{b}))));
                              rhs += compose(FormalSum(aw_E(a, b + 1)),
                                             product(FormalSum(Morphism::identity(Shape{a})), dhat(b + 1)))
                                         .scaled(a % 2 ? -1 : 1);
                              return check_equal(lhs, rhs, "compose(nabla(" + num(l + 1) + "), aw(" + num(a) + "," + num(b) + "))");
                          }});
        }
    for (std::size_t l = 1; l <= l_max; ++l)
        cs.push_back({suite, "diag_cx/l=" + num(l), {{"l", num(l)}}, [l](std::uint64_t) {
                          return check_equal(compose(diag_approx(l), dhat(l)), compose(nabla(l), diag_approx(l - 1)),
                                             "compose(phi(" + num(l) + "), dhat(" + num(l) + "))");
                      }});
    for (std::size_t l = 0; l <= l_max; ++l)
        cs.push_back({suite, "htpy/l=" + num(l), {{"l", num(l)}}, [l](std::uint64_t) {
                          PrismResult r = prism(l);
                          std::string w = "route " + r.route + "; " + r.detail;
                          if (r.verified) return CaseOutcome::pass(w);
                          return CaseOutcome::open(w);
                      }});
    return cs;
}

VerificationReport verify_ez_aw_identities(std::size_t l_max, const RunOptions& opt) {
    if (l_max < 1) throw std::invalid_argument("verify_ez_aw_identities: l_max >= 1 required");
    std::vector<CaseSpec> sel;
    for (auto& c : simplicial_cases(l_max))
        if (c.case_id.rfind("ez1/", 0) == 0 || c.case_id.rfind("aw/", 0) == 0 || c.case_id.rfind("diag_cx/", 0) == 0)
            sel.push_back(std::move(c));
    return run_cases(sel, opt);
}

VerificationReport verify_htpy(std::size_t l_max, const RunOptions& opt) {
    std::vector<CaseSpec> sel;
    for (auto& c : simplicial_cases(l_max))
        if (c.case_id.rfind("htpy/", 0) == 0) sel.push_back(std::move(c));
    return run_cases(sel, opt);
}

}  // namespace chowforge
