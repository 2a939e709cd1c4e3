#include "chowforge/matdet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace chowforge {

void check_index_set(const IndexSet& s, std::size_t n) {
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 1 || s[k] > n) throw std::out_of_range("index set entry out of bounds");
        if (k && s[k] <= s[k - 1]) throw std::invalid_argument("index set must be strictly increasing");
    }
}

std::vector<IndexSet> index_subsets(std::size_t n, std::size_t k) {
    std::vector<IndexSet> out;
    if (k > n) return out;
    IndexSet cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

IndexSet complement(const IndexSet& s, std::size_t n) {
    IndexSet c;
    for (std::size_t i = 1; i <= n; ++i)
        if (!std::binary_search(s.begin(), s.end(), i)) c.push_back(i);
    return c;
}

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(rows * cols, Polynomial(ring_)) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows * cols) throw std::invalid_argument("matrix entry count");
    for (auto& p : e_) {
        if (!p.ring()) p = Polynomial(ring_);
        require_same_ring(ring_, p.ring(), "matrix entry");
    }
}

PolyMatrix PolyMatrix::identity(const RingPtr& ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring->one();
    return m;
}

PolyMatrix PolyMatrix::parse(const RingPtr& ring, const std::string& text) {
    // Split on brackets and top-level commas.
    std::vector<std::vector<std::string>> rows;
    int depth = 0;
    std::string cur;
    std::vector<std::string> row;
    int paren = 0;
    for (char c : text) {
        if (c == '(') ++paren;
        if (c == ')') --paren;
        if (c == '[' && paren == 0) {
            ++depth;
            if (depth > 2) throw std::invalid_argument("matrix literal nesting");
            continue;
        }
        if (c == ']' && paren == 0) {
            if (depth == 2) {
                row.push_back(cur);
                cur.clear();
                rows.push_back(row);
                row.clear();
            }
            --depth;
            continue;
        }
        if (c == ',' && paren == 0) {
            if (depth == 2) {
                row.push_back(cur);
                cur.clear();
            }
            continue;
        }
        if (depth == 2) cur += c;
        else if (!std::isspace(static_cast<unsigned char>(c))) throw std::invalid_argument("matrix literal syntax");
    }
    if (depth != 0 || rows.empty()) throw std::invalid_argument("matrix literal syntax");
    std::size_t cols = rows[0].size();
    std::vector<Polynomial> e;
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("matrix literal: ragged rows");
        for (const auto& s : r) e.push_back(ring->parse(s));
    }
    return PolyMatrix(ring, rows.size(), cols, std::move(e));
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    require_same_ring(ring_, o.ring_, "matrix product");
    PolyMatrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            Polynomial s(ring_);
            for (std::size_t k = 0; k < cols_; ++k) {
                const auto& a = at(i, k);
                const auto& b = o.at(k, j);
                if (a.is_zero() || b.is_zero()) continue;
                s += a * b;
            }
            r.at(i, j) = std::move(s);
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& c) const {
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::submatrix(const IndexSet& rs, const IndexSet& cs) const {
    check_index_set(rs, rows_);
    check_index_set(cs, cols_);
    PolyMatrix r(ring_, rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) r.at(i, j) = at(rs[i] - 1, cs[j] - 1);
    return r;
}

PolyMatrix PolyMatrix::column_block(std::size_t from, std::size_t to) const {
    if (from < 1 || to > cols_ || from > to) throw std::out_of_range("column block");
    IndexSet rs, cs;
    for (std::size_t i = 1; i <= rows_; ++i) rs.push_back(i);
    for (std::size_t j = from; j <= to; ++j) cs.push_back(j);
    return submatrix(rs, cs);
}

PolyMatrix PolyMatrix::map(const std::function<Polynomial(const Polynomial&)>& f) const {
    std::vector<Polynomial> e;
    e.reserve(e_.size());
    for (const auto& p : e_) e.push_back(f(p));
    RingPtr r = e.empty() ? ring_ : e.front().ring();
    return PolyMatrix(r, rows_, cols_, std::move(e));
}

PolyMatrix PolyMatrix::substitute(const std::map<std::string, Polynomial>& assignment) const {
    RingPtr target = assignment.empty() ? ring_ : assignment.begin()->second.ring();
    std::vector<Polynomial> e;
    for (const auto& p : e_) e.push_back(p.is_zero() ? Polynomial(target) : p.substitute(assignment));
    return PolyMatrix(target, rows_, cols_, std::move(e));
}

PolyMatrix PolyMatrix::substitute(const std::vector<Polynomial>& images) const {
    RingPtr target = images.empty() ? ring_ : images.front().ring();
    std::vector<Polynomial> e;
    for (const auto& p : e_) e.push_back(p.is_zero() ? Polynomial(target) : p.substitute(images));
    return PolyMatrix(target, rows_, cols_, std::move(e));
}

PolyMatrix PolyMatrix::specialize(const std::map<std::string, Rational>& values) const {
    return map([&](const Polynomial& p) { return p.specialize(values); });
}

PolyMatrix PolyMatrix::to_ring(const RingPtr& target) const {
    std::vector<Polynomial> e;
    for (const auto& p : e_) e.push_back(p.is_zero() ? Polynomial(target) : p.to_ring(target));
    return PolyMatrix(target, rows_, cols_, std::move(e));
}

bool PolyMatrix::is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            auto v = at(i, j).constant_value();
            if (!v || *v != (i == j ? 1 : 0)) return false;
        }
    return true;
}

std::size_t PolyMatrix::term_count() const {
    std::size_t n = 0;
    for (const auto& p : e_) n += p.size();
    return n;
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- constructors

std::vector<std::string> matrix_variable_names(std::size_t n, std::size_t k, const std::string& prefix) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= k; ++j)
            names.push_back(prefix + "_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    return names;
}

PolyMatrix generic_matrix(std::size_t n, std::size_t k, const std::string& prefix) {
    if (n == 0 || k == 0) throw std::invalid_argument("generic_matrix: empty shape");
    RingPtr r = RingBuilder().vars(matrix_variable_names(n, k, prefix)).build();
    return matrix_of_variables(r, n, k, prefix);
}

PolyMatrix matrix_of_variables(const RingPtr& ring, std::size_t n, std::size_t k, const std::string& prefix) {
    auto names = matrix_variable_names(n, k, prefix);
    std::vector<Polynomial> e;
    for (const auto& s : names) e.push_back(ring->var(s));
    return PolyMatrix(ring, n, k, std::move(e));
}

// ---------------------------------------------------------------- determinants

Polynomial det_cofactor(const PolyMatrix& m) {
    if (!m.square()) throw std::invalid_argument("det: non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return m.ring()->one();
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    // Expand along the first row; minors by recursion on column subsets.
    Polynomial s(m.ring());
    IndexSet rows;
    for (std::size_t i = 2; i <= n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        IndexSet cols;
        for (std::size_t c = 1; c <= n; ++c)
            if (c != j + 1) cols.push_back(c);
        Polynomial t = m.at(0, j) * det_cofactor(m.submatrix(rows, cols));
        if (j % 2) s -= t;
        else s += t;
    }
    return s;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    require_same_ring(a.ring(), b.ring(), "exact_divide");
    if (auto c = b.constant_value()) return a.scaled(1 / *c);
    const Term& lb = b.terms().front();
    std::vector<Term> q;
    Polynomial r = a;
    while (!r.is_zero()) {
        const Term& lr = r.terms().front();
        if (!lb.m.divides(lr.m)) throw std::invalid_argument("exact_divide: not divisible");
        Monomial qm = lb.m.quotient_of(lr.m);
        Rational qc = lr.c / lb.c;
        q.push_back(Term{qm, qc});
        r -= b.times_monomial(qm, qc);
    }
    return Polynomial(a.ring(), std::move(q));
}

Polynomial det_bareiss(const PolyMatrix& m) {
    if (!m.square()) throw std::invalid_argument("det: non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return m.ring()->one();
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    Polynomial prev = m.ring()->one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return Polynomial(m.ring());
            std::swap(a[k], a[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = exact_divide(num, prev);
            }
        }
        prev = a[k][k];
    }
    Polynomial d = a[n - 1][n - 1];
    return negate ? -d : d;
}

Polynomial det(const PolyMatrix& m) { return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m); }

PolyMatrix adjugate(const PolyMatrix& m) {
    if (!m.square()) throw std::invalid_argument("adjugate: non-square matrix");
    std::size_t n = m.rows();
    PolyMatrix adj(m.ring(), n, n);
    if (n == 1) {
        adj.at(0, 0) = m.ring()->one();
        return adj;
    }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            IndexSet rs, cs;
            for (std::size_t r = 1; r <= n; ++r)
                if (r != i) rs.push_back(r);
            for (std::size_t c = 1; c <= n; ++c)
                if (c != j) cs.push_back(c);
            Polynomial c = det(m.submatrix(rs, cs));
            adj.at(j - 1, i - 1) = ((i + j) % 2) ? -c : c;
        }
    return adj;
}

Polynomial minor(const PolyMatrix& m, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor: size mismatch");
    return det(m.submatrix(rows, cols));
}

Polynomial m_pI(const PolyMatrix& x, std::size_t p, const IndexSet& I) {
    std::size_t n = x.rows();
    if (!x.square()) throw std::invalid_argument("m_pI: square matrix expected");
    if (p < 1 || p > n) throw std::out_of_range("m_pI: p out of range");
    if (I.size() != n - p + 1) throw std::invalid_argument("m_pI: |I| must be n-p+1");
    IndexSet cols;
    for (std::size_t j = p; j <= n; ++j) cols.push_back(j);
    return minor(x, I, cols);
}

Ideal determinantal_ideal(std::size_t n, std::size_t k, std::size_t r) {
    if (r > std::min(n, k)) throw std::out_of_range("determinantal_ideal: rank bound");
    PolyMatrix x = generic_matrix(n, k, "x");
    std::vector<Polynomial> g;
    for (const auto& rs : index_subsets(n, r + 1))
        for (const auto& cs : index_subsets(k, r + 1)) g.push_back(minor(x, rs, cs));
    return Ideal(x.ring(), std::move(g));
}

Ideal wedge_vanishing_ideal(const PolyMatrix& m, std::size_t p) {
    if (!m.square()) throw std::invalid_argument("wedge_vanishing_ideal: square matrix expected");
    std::size_t n = m.rows();
    if (p < 1 || p > n) throw std::out_of_range("wedge_vanishing_ideal: p out of range");
    std::vector<Polynomial> g;
    for (const auto& I : index_subsets(n, n - p + 1)) g.push_back(m_pI(m, p, I));
    return Ideal(m.ring(), std::move(g));
}

PolyMatrix jacobian(const std::vector<Polynomial>& fs, const std::vector<std::string>& vars) {
    if (fs.empty()) throw std::invalid_argument("jacobian: no functions");
    RingPtr ring = fs.front().ring();
    for (const auto& f : fs) require_same_ring(ring, f.ring(), "jacobian");
    PolyMatrix J(ring, fs.size(), vars.size());
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < vars.size(); ++j) J.at(i, j) = fs[i].derivative(vars[j]);
    return J;
}

Polynomial dot_column(const std::vector<Polynomial>& u, const PolyMatrix& x, std::size_t j) {
    if (u.size() != x.rows()) throw std::invalid_argument("dot_column: size mismatch");
    Polynomial s(x.ring());
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * x.at(i, j - 1);
    return s;
}

PolyMatrix build_M_pI(const PolyMatrix& x, const std::vector<Polynomial>& u, std::size_t p, const IndexSet& I) {
    std::size_t n = x.rows();
    if (!x.square() || u.size() != n) throw std::invalid_argument("build_M_pI: shapes");
    if (p < 1 || p >= n) throw std::out_of_range("build_M_pI: need 1 <= p < n");
    if (I.size() != n - p) throw std::invalid_argument("build_M_pI: |I| must be n-p");
    check_index_set(I, n);
    IndexSet Ic = complement(I, n);
    IndexSet order = Ic;
    order.insert(order.end(), I.begin(), I.end());
    const RingPtr& R = x.ring();
    PolyMatrix M(R, n + 1, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t row = order[r];
        if (r < p) M.at(r, r) = R->one();
        for (std::size_t c = p + 1; c <= n; ++c) M.at(r, p + (c - p - 1)) = x.at(row - 1, c - 1);
        M.at(r, n) = x.at(row - 1, p - 1);
    }
    for (std::size_t c = 0; c < p; ++c) M.at(n, c) = u[Ic[c] - 1];
    for (std::size_t c = p + 1; c <= n; ++c) M.at(n, p + (c - p - 1)) = dot_column(u, x, c);
    M.at(n, n) = dot_column(u, x, p);
    return M;
}

PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b) { return a * b; }

PolyMatrix matrix_inverse_via_adjugate(const PolyMatrix& a) {
    Polynomial d = det(a);
    if (auto c = d.constant_value()) {
        if (*c == 0) throw std::invalid_argument("matrix not invertible: zero determinant");
        return adjugate(a).scaled(a.ring()->constant(1 / *c));
    }
    const Ring& R = *a.ring();
    for (const auto& rel : R.relations()) {
        // A relation det + c forces det = -c.
        Polynomial diff = rel - d;
        if (auto c = diff.constant_value(); c && *c != 0) {
            Rational dv = -*c;
            return adjugate(a).scaled(a.ring()->constant(1 / dv));
        }
        for (std::size_t v = 0; v < R.nvars(); ++v) {
            Polynomial cand = R.var(v) * d - R.one();
            if (rel == cand || rel == -cand) return adjugate(a).scaled(R.var(v));
        }
    }
    throw std::invalid_argument("matrix not invertible: determinant is not a declared unit");
}

}  // namespace chowforge
