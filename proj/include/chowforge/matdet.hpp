#pragma once

#include "chowforge/exactpoly.hpp"
#include "chowforge/groebner.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace chowforge {

// Sorted distinct 1-based indices.
using IndexSet = std::vector<std::size_t>;

void check_index_set(const IndexSet& s, std::size_t n);
// All size-k subsets of {1..n} in lexicographic order.
std::vector<IndexSet> index_subsets(std::size_t n, std::size_t k);
IndexSet complement(const IndexSet& s, std::size_t n);

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

    static PolyMatrix identity(const RingPtr& ring, std::size_t n);
    // Literal syntax [[p11, p12],[p21, p22]].
    static PolyMatrix parse(const RingPtr& ring, const std::string& text);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    // 0-based access.
    const Polynomial& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Polynomial& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const std::vector<Polynomial>& entries() const { return e_; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix scaled(const Polynomial& c) const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    PolyMatrix transpose() const;
    // 1-based index sets.
    PolyMatrix submatrix(const IndexSet& rows, const IndexSet& cols) const;
    PolyMatrix column_block(std::size_t from, std::size_t to) const;  // 1-based inclusive
    PolyMatrix map(const std::function<Polynomial(const Polynomial&)>& f) const;
    PolyMatrix substitute(const std::map<std::string, Polynomial>& assignment) const;
    PolyMatrix substitute(const std::vector<Polynomial>& images) const;
    PolyMatrix specialize(const std::map<std::string, Rational>& values) const;
    PolyMatrix to_ring(const RingPtr& target) const;
    bool is_identity() const;
    std::size_t term_count() const;

    std::string str() const;

private:
    RingPtr ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Polynomial> e_;
};

// n x k matrix of fresh variables prefix_{i,j} in a new ring.
PolyMatrix generic_matrix(std::size_t n, std::size_t k, const std::string& prefix);
// Same pattern, variables looked up in an existing ring.
PolyMatrix matrix_of_variables(const RingPtr& ring, std::size_t n, std::size_t k, const std::string& prefix);
std::vector<std::string> matrix_variable_names(std::size_t n, std::size_t k, const std::string& prefix);

Polynomial det(const PolyMatrix& m);
Polynomial det_cofactor(const PolyMatrix& m);
Polynomial det_bareiss(const PolyMatrix& m);
PolyMatrix adjugate(const PolyMatrix& m);
// Exact quotient; throws when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

Polynomial minor(const PolyMatrix& m, const IndexSet& rows, const IndexSet& cols);
// Minor on rows I of the column block p..n.
Polynomial m_pI(const PolyMatrix& x, std::size_t p, const IndexSet& I);

// Ideal of (r+1)-minors of the generic n x k matrix.
Ideal determinantal_ideal(std::size_t n, std::size_t k, std::size_t r);
// Maximal minors of the column block p..n of a square matrix.
Ideal wedge_vanishing_ideal(const PolyMatrix& m, std::size_t p);

PolyMatrix jacobian(const std::vector<Polynomial>& fs, const std::vector<std::string>& vars);

// Bordered (n+1)x(n+1) matrix: identity columns on the rows outside I, the
// x-columns p+1..n, the column x^p, bottom row of u-combinations. x is n x n,
// u holds u_1..u_n, 1 <= p < n, |I| = n - p.
PolyMatrix build_M_pI(const PolyMatrix& x, const std::vector<Polynomial>& u, std::size_t p, const IndexSet& I);

PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b);
// Inverse via adjugate; det must be a nonzero constant or a declared unit
// (a ring relation of the form v*det - 1, or det - c).
PolyMatrix matrix_inverse_via_adjugate(const PolyMatrix& a);

// u . column j (1-based) of x.
Polynomial dot_column(const std::vector<Polynomial>& u, const PolyMatrix& x, std::size_t j);

}  // namespace chowforge
