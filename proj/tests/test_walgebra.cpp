#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "wn/walgebra.hpp"

using namespace wn;

TEST_CASE("construction dimensions and gradings") {
    CHECK_THROWS_AS(WAlgebra(1), UnsupportedRank);

    for (int n = 2; n <= 5; ++n) {
        const WAlgebra& w = build_wn(n);
        CHECK(w.dim() == n * (1 << n));
        int total = 0;
        for (int k = -1; k <= n - 1; ++k) {
            CHECK(w.graded_dim(k) == static_cast<int>(w.indices_of_degree(k).size()));
            total += w.graded_dim(k);
        }
        CHECK(total == w.dim());
    }

    const WAlgebra& w2 = build_wn(2);
    CHECK(w2.graded_dim(-1) == 2);
    CHECK(w2.graded_dim(0) == 4);
    CHECK(w2.graded_dim(1) == 2);

    const WAlgebra& w3 = build_wn(3);
    CHECK(w3.graded_dim(-1) == 3);
    CHECK(w3.graded_dim(0) == 9);
    CHECK(w3.graded_dim(1) == 9);
    CHECK(w3.graded_dim(2) == 3);
}

TEST_CASE("basis element names round-trip") {
    const WAlgebra& w = build_wn(3);
    for (int idx = 0; idx < w.dim(); ++idx) CHECK(w.parse_basis_name(w.name(idx)) == idx);
    CHECK_THROWS_AS(w.parse_basis_name("xi{4}d1"), InvalidInput);
    CHECK_THROWS_AS(w.parse_basis_name("e12"), InvalidInput);
    CHECK_THROWS_AS(w.parse_basis_name("xi{1,1}d2"), InvalidInput);
}

TEST_CASE("bracket examples") {
    const WAlgebra& w = build_wn(2);
    auto e = [&](const std::string& s) { return w.basis_element(w.parse_basis_name(s)); };

    // [xi1 d2, xi2 d1] = xi1 d1 - xi2 d2 (the gl(2) commutator [e12, e21])
    WElement lhs = w.bracket(e("xi{1}d2"), e("xi{2}d1"));
    CHECK(lhs.coords.at(w.parse_basis_name("xi{1}d1")) == Rational(1));
    CHECK(lhs.coords.at(w.parse_basis_name("xi{2}d2")) == Rational(-1));
    CHECK(lhs.coords.size() == 2);

    // odd derivations anticommute: [d_i, d_j] = 0
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            CHECK(w.bracket(w.basis_element(w.index_of(0, i)),
                            w.basis_element(w.index_of(0, j)))
                      .is_zero());

    // [d1, xi1 xi2 d2] = xi2 d2
    WElement b = w.bracket(e("xi{}d1"), e("xi{1,2}d2"));
    CHECK(b.coords.size() == 1);
    CHECK(b.coords.at(w.parse_basis_name("xi{2}d2")) == Rational(1));

    CHECK_THROWS_AS(w.bracket(e("xi{}d1"), build_wn(3).basis_element(0)), DimensionMismatch);
}

TEST_CASE("closed-form bracket equals the derivation-composition oracle") {
    std::mt19937_64 rng(1234);
    for (int n = 2; n <= 3; ++n) {
        const WAlgebra& w = build_wn(n);
        std::uniform_int_distribution<int> pick(0, w.dim() - 1);
        for (int trial = 0; trial < 100; ++trial) {
            WElement x;
            x.n = n;
            x.coords[pick(rng)] = Rational(1 + static_cast<int>(rng() % 5),
                                           1 + static_cast<int>(rng() % 3));
            x.coords[pick(rng)] = Rational(-2, 3);
            WElement y;
            y.n = n;
            y.coords[pick(rng)] = Rational(3, 1 + static_cast<int>(rng() % 7));
            WElement fast = w.bracket(x, y);
            WElement slow = w.bracket_by_composition(x, y);
            for (const auto& [idx, v] : fast.coords) CHECK(slow.coords.at(idx) == v);
            CHECK(slow.coords.size() == fast.coords.size());
        }
    }
}

TEST_CASE("root system matches the basis enumeration") {
    const WAlgebra& w2 = build_wn(2);
    std::vector<RootDatum> roots = w2.root_system();
    std::map<WeightVec, int> mult;
    int total = 0;
    for (const auto& r : roots) {
        mult[r.root] = r.multiplicity;
        total += r.multiplicity;
    }
    CHECK(total == 8);
    CHECK(mult.at(WeightVec{0, 0}) == 2);       // xi1 d1, xi2 d2
    CHECK(mult.at(WeightVec{-1, 0}) == 1);      // d1
    CHECK(mult.at(WeightVec{1, -1}) == 1);      // xi1 d2
    CHECK(mult.at(WeightVec{1, 0}) == 1);       // xi1 xi2 d2

    for (const auto& r : roots)
        CHECK(r.simple == (r.root == WeightVec{1, -1}));

    // alpha = e1 + e2 - e3 is a root of W(3); -alpha is not
    const WAlgebra& w3 = build_wn(3);
    bool plus = false, minus = false;
    for (const auto& r : w3.root_system()) {
        if (r.root == WeightVec{1, 1, -1}) plus = true;
        if (r.root == WeightVec{-1, -1, 1}) minus = true;
    }
    CHECK(plus);
    CHECK(!minus);
}

TEST_CASE("beta and its graded-component preconditions") {
    const WAlgebra& w = build_wn(2);
    auto e = [&](const std::string& s) { return w.basis_element(w.parse_basis_name(s)); };

    CHECK(w.beta(e("xi{}d2"), e("xi{1,2}d2")).coords.count(w.parse_basis_name("xi{1}d2")));
    WElement zero;
    zero.n = 2;
    CHECK(w.beta(zero, e("xi{1,2}d2")).is_zero());
    CHECK_THROWS_AS(w.beta(e("xi{1}d1"), e("xi{1,2}d2")), InvalidInput);
    CHECK_THROWS_AS(w.beta(e("xi{}d1"), e("xi{1}d1")), InvalidInput);

    // beta(d1, sum_l c_l xi1 xi_l d_l) = sum_l c_l xi_l d_l
    const WAlgebra& w3 = build_wn(3);
    WElement y;
    y.n = 3;
    y.coords[w3.index_of(0b011, 2)] = Rational(5);
    y.coords[w3.index_of(0b101, 3)] = Rational(7, 2);
    WElement im = w3.beta(w3.basis_element(w3.index_of(0, 1)), y);
    CHECK(im.coords.at(w3.index_of(0b010, 2)) == Rational(5));
    CHECK(im.coords.at(w3.index_of(0b100, 3)) == Rational(7, 2));
    CHECK(im.coords.size() == 2);
}

TEST_CASE("beta fiber verification") {
    for (int n = 2; n <= 3; ++n) {
        const WAlgebra& w = build_wn(n);

        std::vector<Rational> all_nonzero;
        for (int i = 1; i <= n; ++i) all_nonzero.push_back(i);
        BetaFiberReport r1 = verify_beta_fiber(w, all_nonzero, 4, 42);
        CHECK(r1.identity_check);
        CHECK(r1.status == BetaFiberReport::Status::empty_fiber);
        CHECK(r1.forced_zero_a.size() == static_cast<std::size_t>(n));

        std::vector<Rational> regular;
        regular.push_back(0);
        for (int i = 2; i <= n; ++i) regular.push_back(i - 1);
        BetaFiberReport r2 = verify_beta_fiber(w, regular, 4, 42);
        CHECK(r2.status == BetaFiberReport::Status::family_match);
        CHECK(r2.samples_checked == 4);
        // free coordinates b_{r,s,t} with 1 < r < s exist only for n >= 3
        CHECK(r2.free_b_count == (n == 2 ? 0 : n * (n - 1) * (n - 2) / 2));

        std::vector<Rational> unsupported(static_cast<std::size_t>(n), Rational(0));
        CHECK(verify_beta_fiber(w, unsupported, 1, 1).status ==
              BetaFiberReport::Status::unsupported);
    }
}

TEST_CASE("fixed points of torus actions") {
    for (int n = 2; n <= 4; ++n) {
        const WAlgebra& w = build_wn(n);
        SuperSpace gpm = w.component_space({-1, 1});

        Subspace fixed = fixed_points(gpm, Torus::Tn_minus_1, n);
        CHECK(fixed.dim() == n);
        SparseVec d1;
        d1[gpm.position_of("xi{}d1")] = 1;
        CHECK(fixed.contains(d1));
        for (int i = 2; i <= n; ++i) {
            SparseVec v;
            v[gpm.position_of(w.name(w.index_of(1u | (1u << (i - 1)), i)))] = 1;
            CHECK(fixed.contains(v));
        }

        CHECK(fixed_points(gpm, Torus::T, n).dim() == 0);

        // full-torus fixed points of g0 are the diagonal h
        SuperSpace g0 = w.component_space({0});
        Subspace h = fixed_points(g0, Torus::T, n);
        CHECK(h.dim() == n);
    }
}

TEST_CASE("subalgebra closure checks") {
    for (int n = 2; n <= 4; ++n) {
        const WAlgebra& w = build_wn(n);
        for (SubalgebraName name : {SubalgebraName::g0, SubalgebraName::h, SubalgebraName::g_plus,
                                    SubalgebraName::g_minus, SubalgebraName::b_max,
                                    SubalgebraName::b_min, SubalgebraName::f,
                                    SubalgebraName::f_tilde}) {
            ClosureReport r = w.check_subalgebra_closure(w.subalgebra(name));
            CHECK(r.closed);
            CHECK(r.graded_ok);
        }

        // a non-subalgebra is reported with a counterexample
        SubalgebraSpec bad = w.span_of({w.basis_element(w.index_of(0, 1)),
                                        w.basis_element(w.index_of(1u, 2))});
        ClosureReport r = w.check_subalgebra_closure(bad);
        CHECK(!r.closed);
        CHECK(!r.counterexamples.empty());
    }
}

TEST_CASE("annihilator of the detecting element") {
    for (int n = 2; n <= 4; ++n) {
        const WAlgebra& w = build_wn(n);
        Subspace ann = w.annihilator_in_g0(w.detecting_x0());
        CHECK(ann.dim() == n - 1);
    }
}
