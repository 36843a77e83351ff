#pragma once

#include <map>
#include <vector>

#include "wn/rational.hpp"

namespace wn {

/// Sparse vector: index -> nonzero coefficient.
using SparseVec = std::map<int, Rational>;

/// Adds c * src into dst, erasing entries that cancel to zero.
void axpy(SparseVec& dst, const Rational& c, const SparseVec& src);

/// Sparse rational matrix.  Zero entries are never stored.
class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(int rows, int cols);

    static SparseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const;

    Rational at(int r, int c) const;
    void set(int r, int c, const Rational& v);
    void add_at(int r, int c, const Rational& v);

    const SparseVec& row(int r) const { return data_[r]; }
    SparseVec& row_mut(int r) { return data_[r]; }

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Rational& c) const;
    bool is_zero() const;
    bool operator==(const SparseMatrix& o) const;

    /// Matrix-vector product (vector over column indices).
    SparseVec apply(const SparseVec& v) const;

    /// a on top of b; column counts must agree.
    static SparseMatrix stack_rows(const SparseMatrix& a, const SparseMatrix& b);

    void append_row(const SparseVec& r);

private:
    int rows_, cols_;
    std::vector<SparseVec> data_;
};

/// Reduced row-echelon form.  The result has the same shape; the row space
/// is preserved and the output is the canonical rref (pivots 1, eliminated
/// above and below, rows ordered by pivot column, zero rows last).
SparseMatrix rref(const SparseMatrix& m);

/// Rank via elimination.
int rank(const SparseMatrix& m);

/// A linear subspace of Q^ambient, held as a canonical rref basis (rows =
/// basis vectors, no zero rows).  Two equal subspaces compare bitwise equal.
class Subspace {
public:
    explicit Subspace(int ambient_dim);
    Subspace(int ambient_dim, const SparseMatrix& spanning_rows);

    static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const SparseMatrix& basis() const { return basis_; }

    bool contains(const SparseVec& v) const;
    bool contains(const Subspace& other) const;

    /// Reduces v against the basis rows; returns the residual.
    SparseVec reduce(const SparseVec& v) const;

    /// Coordinates of v in the basis; throws DimensionMismatch if v is
    /// outside the subspace.
    std::vector<Rational> coordinates_of(const SparseVec& v) const;

    bool operator==(const Subspace& o) const;

    friend Subspace subspace_sum(const Subspace& a, const Subspace& b);
    friend Subspace subspace_intersect(const Subspace& a, const Subspace& b);

private:
    int ambient_;
    SparseMatrix basis_;         // rref, no zero rows
    std::vector<int> pivots_;    // pivot column of each basis row
};

/// Null space of m, as a subspace of Q^cols.
Subspace kernel(const SparseMatrix& m);

/// Intersection of the kernels of all given operators; equals the kernel of
/// the stacked matrix.  All matrices must share ambient_cols columns.
Subspace simultaneous_kernel(const std::vector<SparseMatrix>& ops, int ambient_cols);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

} // namespace wn
