#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "wn/linalg.hpp"

using namespace wn;

namespace {

SparseMatrix from_rows(const std::vector<std::vector<long>>& rows, int cols) {
    SparseMatrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols; ++c)
            if (rows[r][c] != 0) m.set(static_cast<int>(r), c, rows[r][c]);
    return m;
}

// independent rank oracle: largest k with a nonzero k x k minor, determinants
// by Laplace expansion
Rational det_laplace(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    Rational acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        std::vector<std::vector<Rational>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        Rational term = a[0][j] * det_laplace(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

int rank_by_minors(const SparseMatrix& m) {
    int best = 0;
    for (int k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        std::vector<int> rsel(k), csel(k);
        std::function<bool(int, int)> pick_cols = [&](int depth, int start) {
            if (depth == k) {
                std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k, Rational(0)));
                for (int r = 0; r < k; ++r)
                    for (int c = 0; c < k; ++c) sub[r][c] = m.at(rsel[r], csel[c]);
                return !det_laplace(sub).is_zero();
            }
            for (int c = start; c < m.cols(); ++c) {
                csel[depth] = c;
                if (pick_cols(depth + 1, c + 1)) return true;
            }
            return false;
        };
        std::function<bool(int, int)> pick_rows = [&](int depth, int start) {
            if (depth == k) return pick_cols(0, 0);
            for (int r = start; r < m.rows(); ++r) {
                rsel[depth] = r;
                if (pick_rows(depth + 1, r + 1)) return true;
            }
            return false;
        };
        if (!pick_rows(0, 0)) break;
        best = k;
    }
    return best;
}

SparseMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, double density) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> val(-5, 5);
    SparseMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (coin(rng) < density) {
                int v = val(rng);
                if (v != 0) m.set(r, c, v);
            }
    return m;
}

} // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK(a.to_string() == "1/2");
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
    CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidInput);

    // string round trip is lossless
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int t = 0; t < 200; ++t) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::from_string(r.to_string()) == r);
    }
}

TEST_CASE("rref fixed points and proportional rows") {
    SparseMatrix id3 = SparseMatrix::identity(3);
    CHECK(rref(id3) == id3);

    SparseMatrix m = from_rows({{1, 2}, {2, 4}}, 2);
    SparseMatrix r = rref(m);
    CHECK(r.at(0, 0) == Rational(1));
    CHECK(r.at(0, 1) == Rational(2));
    CHECK(r.row(1).empty());
    CHECK(rank(m) == 1);
}

TEST_CASE("random 6x6 rank-4 matrix against the minor-expansion oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 5; ++trial) {
        SparseMatrix a = random_matrix(rng, 6, 4, 0.8);
        SparseMatrix b = random_matrix(rng, 4, 6, 0.8);
        SparseMatrix m = a * b;
        int oracle = rank_by_minors(m);
        CHECK(rank(m) == oracle);
        CHECK(oracle <= 4);
    }
}

TEST_CASE("rref is idempotent and canonical under row recombination") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        SparseMatrix m = random_matrix(rng, 5, 7, 0.5);
        SparseMatrix r = rref(m);
        CHECK(rref(r) == r);

        SparseMatrix mixed = m;
        for (int i = 0; i < 5; ++i) {
            int j = static_cast<int>(rng() % 5);
            if (i == j) continue;
            SparseVec combined = mixed.row(i);
            axpy(combined, Rational(1 + static_cast<int>(rng() % 3)), mixed.row(j));
            mixed.row_mut(i) = combined;
        }
        CHECK(rref(mixed) == r);
    }
}

TEST_CASE("kernel dimensions and examples") {
    CHECK(kernel(SparseMatrix::identity(4)).dim() == 0);
    CHECK(kernel(SparseMatrix(3, 5)).dim() == 5);

    SparseMatrix m = from_rows({{1, 2}, {2, 4}}, 2);
    Subspace k = kernel(m);
    CHECK(k.dim() == 1);
    CHECK(k.contains(SparseVec{{0, Rational(-2)}, {1, Rational(1)}}));

    // rank-nullity over random sparse matrices
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        SparseMatrix r = random_matrix(rng, 6, 9, 0.4);
        CHECK(rank(r) + kernel(r).dim() == r.cols());
    }
}

TEST_CASE("simultaneous kernel: trivial cases and gl(2) adjoint invariants") {
    CHECK(simultaneous_kernel({}, 5).dim() == 5);
    CHECK(simultaneous_kernel({SparseMatrix::identity(3)}, 3).dim() == 0);

    // adjoint action of gl(2) on itself in the basis e11, e12, e21, e22;
    // the common kernel of ad(e12), ad(e21) is the span of the identity
    auto ad = [](int i, int j) {
        // [e_ij, e_kl] = delta_jk e_il - delta_li e_kj
        SparseMatrix m(4, 4);
        auto pos = [](int a, int b) { return 2 * a + b; };
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                if (j == k) m.add_at(pos(i, l), pos(k, l), 1);
                if (l == i) m.add_at(pos(k, j), pos(k, l), -1);
            }
        return m;
    };
    Subspace inv = simultaneous_kernel({ad(0, 1), ad(1, 0)}, 4);
    CHECK(inv.dim() == 1);
    CHECK(inv.contains(SparseVec{{0, Rational(1)}, {3, Rational(1)}}));
}

TEST_CASE("subspace algebra: sum, intersection, Grassmann identity") {
    Subspace e1(3, from_rows({{1, 0, 0}}, 3));
    Subspace e2(3, from_rows({{0, 1, 0}}, 3));
    CHECK(subspace_sum(e1, e2).dim() == 2);
    CHECK(subspace_intersect(e1, e2).dim() == 0);
    CHECK(subspace_sum(e1, Subspace::zero(3)) == e1);
    CHECK(subspace_intersect(e1, e1) == e1);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Subspace a(8, random_matrix(rng, 3, 8, 0.5));
        Subspace b(8, random_matrix(rng, 4, 8, 0.5));
        Subspace s = subspace_sum(a, b);
        Subspace i = subspace_intersect(a, b);
        CHECK(a.dim() + b.dim() == s.dim() + i.dim());
        CHECK(s.contains(a));
        CHECK(a.contains(i));
    }

    CHECK_THROWS_AS(subspace_sum(e1, Subspace::zero(4)), DimensionMismatch);
    CHECK_THROWS_AS(subspace_intersect(e1, Subspace::zero(4)), DimensionMismatch);
    CHECK_THROWS_AS(simultaneous_kernel({SparseMatrix(2, 3), SparseMatrix(2, 4)}, 3),
                    DimensionMismatch);
}

TEST_CASE("coordinates_of reports vectors outside the subspace") {
    Subspace s(3, from_rows({{1, 0, 1}}, 3));
    CHECK(s.coordinates_of(SparseVec{{0, Rational(2)}, {2, Rational(2)}})[0] == Rational(2));
    CHECK_THROWS_AS(s.coordinates_of(SparseVec{{1, Rational(1)}}), DimensionMismatch);
}
