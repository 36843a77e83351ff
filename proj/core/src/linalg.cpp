#include "wn/linalg.hpp"

#include <algorithm>
#include <limits>

namespace wn {

void axpy(SparseVec& dst, const Rational& c, const SparseVec& src) {
    if (c.is_zero()) return;
    for (const auto& [j, v] : src) {
        auto it = dst.find(j);
        if (it == dst.end()) {
            dst.emplace(j, c * v);
        } else {
            it->second += c * v;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("SparseMatrix: negative shape");
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t s = 0;
    for (const auto& r : data_) s += r.size();
    return s;
}

Rational SparseMatrix::at(int r, int c) const {
    const auto& row = data_.at(r);
    auto it = row.find(c);
    return it == row.end() ? Rational(0) : it->second;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw DimensionMismatch("SparseMatrix::set: index out of range");
    if (v.is_zero())
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

void SparseMatrix::add_at(int r, int c, const Rational& v) {
    if (v.is_zero()) return;
    auto& row = data_.at(r);
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    }
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("SparseMatrix: product shape mismatch");
    SparseMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [k, v] : data_[r]) axpy(out.data_[r], v, o.data_[k]);
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("SparseMatrix: sum shape mismatch");
    SparseMatrix out = *this;
    for (int r = 0; r < rows_; ++r) axpy(out.data_[r], 1, o.data_[r]);
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("SparseMatrix: difference shape mismatch");
    SparseMatrix out = *this;
    for (int r = 0; r < rows_; ++r) axpy(out.data_[r], -1, o.data_[r]);
    return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
    SparseMatrix out(rows_, cols_);
    if (c.is_zero()) return out;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [j, v] : data_[r]) out.data_[r][j] = c * v;
    return out;
}

bool SparseMatrix::is_zero() const {
    for (const auto& r : data_)
        if (!r.empty()) return false;
    return true;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (int r = 0; r < rows_; ++r) {
        Rational acc = 0;
        const auto& row = data_[r];
        // iterate over the shorter support
        if (row.size() <= v.size()) {
            for (const auto& [j, a] : row) {
                auto it = v.find(j);
                if (it != v.end()) acc += a * it->second;
            }
        } else {
            for (const auto& [j, b] : v) {
                auto it = row.find(j);
                if (it != row.end()) acc += it->second * b;
            }
        }
        if (!acc.is_zero()) out[r] = acc;
    }
    return out;
}

SparseMatrix SparseMatrix::stack_rows(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.cols_)
        throw DimensionMismatch("stack_rows: column counts differ");
    SparseMatrix out(a.rows_ + b.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r) out.data_[r] = a.data_[r];
    for (int r = 0; r < b.rows_; ++r) out.data_[a.rows_ + r] = b.data_[r];
    return out;
}

void SparseMatrix::append_row(const SparseVec& r) {
    if (!r.empty() && r.rbegin()->first >= cols_)
        throw DimensionMismatch("append_row: entry beyond column count");
    data_.push_back(r);
    ++rows_;
}

namespace {

constexpr int kDenseColumnThreshold = 64;

// Dense elimination for narrow matrices.
SparseMatrix rref_dense(const SparseMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, Rational(0)));
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : m.row(r)) a[r][c] = v;

    int pr = 0;
    for (int pc = 0; pc < cols && pr < rows; ++pc) {
        int sel = -1;
        for (int r = pr; r < rows; ++r) {
            if (!a[r][pc].is_zero() && (sel < 0 || a[r][pc].size_hint() < a[sel][pc].size_hint()))
                sel = r;
        }
        if (sel < 0) continue;
        std::swap(a[pr], a[sel]);
        Rational inv = Rational(1) / a[pr][pc];
        for (int c = pc; c < cols; ++c)
            if (!a[pr][c].is_zero()) a[pr][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr || a[r][pc].is_zero()) continue;
            Rational f = a[r][pc];
            for (int c = pc; c < cols; ++c)
                if (!a[pr][c].is_zero()) a[r][c] -= f * a[pr][c];
        }
        ++pr;
    }
    SparseMatrix out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (!a[r][c].is_zero()) out.set(r, c, a[r][c]);
    return out;
}

// Sparse elimination.  Pivot row chosen by fewest nonzeros, then smallest
// coefficient, which keeps fill-in and coefficient growth manageable.
SparseMatrix rref_sparse(const SparseMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<SparseVec> work(rows);
    for (int r = 0; r < rows; ++r) work[r] = m.row(r);

    std::vector<SparseVec> done;          // eliminated-below rows, pivot order
    std::vector<int> done_pivot;
    std::vector<int> live;
    for (int r = 0; r < rows; ++r)
        if (!work[r].empty()) live.push_back(r);

    while (!live.empty()) {
        // leftmost column with a nonzero among live rows
        int pc = std::numeric_limits<int>::max();
        for (int r : live) pc = std::min(pc, work[r].begin()->first);

        int sel = -1;
        std::size_t sel_nnz = 0, sel_sz = 0;
        for (int r : live) {
            if (work[r].begin()->first != pc) continue;
            std::size_t nz = work[r].size();
            std::size_t sz = work[r].begin()->second.size_hint();
            if (sel < 0 || nz < sel_nnz || (nz == sel_nnz && sz < sel_sz)) {
                sel = r;
                sel_nnz = nz;
                sel_sz = sz;
            }
        }

        SparseVec pivot_row = std::move(work[sel]);
        Rational inv = Rational(1) / pivot_row.begin()->second;
        for (auto& [c, v] : pivot_row) v *= inv;

        std::vector<int> next_live;
        for (int r : live) {
            if (r == sel) continue;
            auto it = work[r].find(pc);
            if (it != work[r].end()) {
                Rational f = -it->second;
                axpy(work[r], f, pivot_row);
            }
            if (!work[r].empty()) next_live.push_back(r);
        }
        live = std::move(next_live);
        done.push_back(std::move(pivot_row));
        done_pivot.push_back(pc);
    }

    // back-substitute upwards for the reduced form
    for (int i = static_cast<int>(done.size()) - 1; i >= 0; --i) {
        for (int k = 0; k < i; ++k) {
            auto it = done[k].find(done_pivot[i]);
            if (it != done[k].end()) {
                Rational f = -it->second;
                axpy(done[k], f, done[i]);
            }
        }
    }

    SparseMatrix out(rows, cols);
    for (std::size_t i = 0; i < done.size(); ++i) out.row_mut(static_cast<int>(i)) = done[i];
    return out;
}

std::vector<int> pivot_columns(const SparseMatrix& r) {
    std::vector<int> p;
    for (int i = 0; i < r.rows(); ++i) {
        if (r.row(i).empty()) break;
        p.push_back(r.row(i).begin()->first);
    }
    return p;
}

} // namespace

SparseMatrix rref(const SparseMatrix& m) {
    return m.cols() < kDenseColumnThreshold ? rref_dense(m) : rref_sparse(m);
}

int rank(const SparseMatrix& m) {
    return static_cast<int>(pivot_columns(rref(m)).size());
}

Subspace::Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {
    if (ambient_dim < 0) throw DimensionMismatch("Subspace: negative ambient dimension");
}

Subspace::Subspace(int ambient_dim, const SparseMatrix& spanning_rows) : Subspace(ambient_dim) {
    if (spanning_rows.cols() != ambient_dim)
        throw DimensionMismatch("Subspace: spanning rows do not match ambient dimension");
    SparseMatrix r = rref(spanning_rows);
    pivots_ = pivot_columns(r);
    basis_ = SparseMatrix(static_cast<int>(pivots_.size()), ambient_dim);
    for (int i = 0; i < basis_.rows(); ++i) basis_.row_mut(i) = r.row(i);
}

Subspace Subspace::full(int ambient_dim) {
    return Subspace(ambient_dim, SparseMatrix::identity(ambient_dim));
}

SparseVec Subspace::reduce(const SparseVec& v) const {
    SparseVec out = v;
    for (int i = 0; i < basis_.rows(); ++i) {
        auto it = out.find(pivots_[i]);
        if (it != out.end()) {
            Rational f = -it->second;
            axpy(out, f, basis_.row(i));
        }
    }
    return out;
}

bool Subspace::contains(const SparseVec& v) const {
    if (!v.empty() && v.rbegin()->first >= ambient_)
        throw DimensionMismatch("Subspace::contains: vector outside ambient space");
    return reduce(v).empty();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw DimensionMismatch("Subspace::contains: ambient dimensions differ");
    for (int i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::vector<Rational> Subspace::coordinates_of(const SparseVec& v) const {
    std::vector<Rational> coords(basis_.rows(), Rational(0));
    SparseVec rest = v;
    for (int i = 0; i < basis_.rows(); ++i) {
        auto it = rest.find(pivots_[i]);
        if (it != rest.end()) {
            coords[i] = it->second;
            Rational f = -it->second;
            axpy(rest, f, basis_.row(i));
        }
    }
    if (!rest.empty())
        throw DimensionMismatch("Subspace::coordinates_of: vector not in subspace");
    return coords;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace kernel(const SparseMatrix& m) {
    SparseMatrix r = rref(m);
    std::vector<int> piv = pivot_columns(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : piv) is_pivot[c] = true;

    SparseMatrix basis(0, m.cols());
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        SparseVec v;
        v[fc] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) {
            Rational e = r.at(static_cast<int>(i), fc);
            if (!e.is_zero()) v[piv[i]] = -e;
        }
        basis.append_row(v);
    }
    return Subspace(m.cols(), basis);
}

Subspace simultaneous_kernel(const std::vector<SparseMatrix>& ops, int ambient_cols) {
    SparseMatrix stacked(0, ambient_cols);
    for (const auto& op : ops) {
        if (op.cols() != ambient_cols)
            throw DimensionMismatch("simultaneous_kernel: column count mismatch");
        for (int r = 0; r < op.rows(); ++r) stacked.append_row(op.row(r));
    }
    if (stacked.rows() == 0) return Subspace::full(ambient_cols);
    return kernel(stacked);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_)
        throw DimensionMismatch("subspace_sum: ambient dimensions differ");
    return Subspace(a.ambient_, SparseMatrix::stack_rows(a.basis_, b.basis_));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_)
        throw DimensionMismatch("subspace_intersect: ambient dimensions differ");
    // a = kernel(ann_a), so the intersection is the kernel of the stacked
    // annihilators.
    SparseMatrix ann_a = kernel(a.basis_).basis();
    SparseMatrix ann_b = kernel(b.basis_).basis();
    return simultaneous_kernel({ann_a, ann_b}, a.ambient_);
}

} // namespace wn
