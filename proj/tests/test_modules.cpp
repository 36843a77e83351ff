#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wn/modules.hpp"

using namespace wn;

namespace {

Weight wt(std::initializer_list<long> xs) {
    Weight w;
    for (long x : xs) w.push_back(Rational(x));
    return w;
}

// independent Weyl dimension: prod_{i<j} (l_i - l_j + j - i) / (j - i)
long weyl_reference(const std::vector<long>& l) {
    const int n = static_cast<int>(l.size());
    long num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= l[i] - l[j] + (j - i);
            den *= (j - i);
        }
    return num / den;
}

} // namespace

TEST_CASE("simple gl modules: dimensions and weight structure") {
    const WAlgebra& w = build_wn(2);

    CHECK(simple_gl_module(w, wt({0, 0})).dim() == 1);
    CHECK(simple_gl_module(w, wt({2, 0})).dim() == 3);
    CHECK(simple_gl_module(w, wt({1, 1})).dim() == 1);   // determinant
    CHECK(simple_gl_module(w, wt({-1, -1})).dim() == 1);

    CHECK_THROWS_AS(simple_gl_module(w, wt({0, 1})), InvalidInput);
    CHECK_THROWS_AS(simple_gl_module(w, Weight{Rational(1, 2), Rational(0)}), InvalidInput);

    // grid check against the reference formula (construction verifies the
    // library-side Weyl formula internally)
    for (long l1 = -3; l1 <= 3; ++l1)
        for (long l2 = -3; l2 <= l1; ++l2)
            CHECK(simple_gl_module(w, wt({l1, l2})).dim() == weyl_reference({l1, l2}));

    // a small n = 3 module
    const WAlgebra& w3 = build_wn(3);
    CHECK(simple_gl_module(w3, wt({1, 0, 0})).dim() == 3);
    CHECK(simple_gl_module(w3, wt({1, 1, 0})).dim() == 3);
    CHECK(simple_gl_module(w3, wt({2, 1, 0})).dim() == weyl_reference({2, 1, 0}));
}

TEST_CASE("Kac modules: PBW dimension and highest weight line") {
    const WAlgebra& w = build_wn(2);

    Supermodule k0 = kac_module(w, wt({0, 0}));
    CHECK(k0.dim() == 4);
    Supermodule k20 = kac_module(w, wt({2, 0}));
    CHECK(k20.dim() == 12);

    CHECK(k0.weight_space(WeightVec{0, 0}).size() == 1);
    CHECK(k20.weight_space(WeightVec{2, 0}).size() == 1);

    const WAlgebra& w3 = build_wn(3);
    Supermodule k3 = kac_module(w3, wt({0, 0, 0}));
    CHECK(k3.dim() == 8);
    CHECK(kac_module(w3, wt({1, 0, 0})).dim() == 24);
}

TEST_CASE("radicals and simple quotients at n = 2") {
    const WAlgebra& w = build_wn(2);

    Supermodule k0 = kac_module(w, wt({0, 0}));
    Subspace rad0 = maximal_proper_submodule(w, k0, wt({0, 0}));
    CHECK(rad0.dim() == 3);
    CHECK(is_submodule(k0, rad0));

    // the trivial module is its own simple quotient
    CHECK(maximal_proper_submodule(w, trivial_module(w), wt({0, 0})).dim() == 0);

    Supermodule k20 = kac_module(w, wt({2, 0}));
    CHECK(maximal_proper_submodule(w, k20, wt({2, 0})).dim() == 0);

    CHECK(simple_supermodule(w, wt({0, 0})).dim() == 1);
    CHECK(simple_supermodule(w, wt({0, -1})).dim() == 3);
    CHECK(simple_supermodule(w, wt({1, 1})).dim() == 3);
    CHECK(simple_supermodule(w, wt({2, 1})).dim() == 5);

    // the radical of K(0) is isomorphic to L(-e2): compare dimensions and
    // weight multiplicities
    Supermodule sub = submodule_module(w, k0, rad0);
    Supermodule lm = simple_supermodule(w, wt({0, -1}));
    CHECK(sub.dim() == lm.dim());
    for (int i = 0; i < sub.dim(); ++i)
        CHECK(sub.weight_space(sub.weight(i)).size() == lm.weight_space(sub.weight(i)).size());

    // quotients are simple: re-running the radical gives zero
    Supermodule l21 = simple_supermodule(w, wt({2, 1}));
    CHECK(maximal_proper_submodule(w, l21, wt({2, 1})).dim() == 0);
}

TEST_CASE("atypicality classifier") {
    CHECK(atypicality(wt({0, 0})).atypical);           // b = 0 family
    CHECK(atypicality(wt({0, -1})).atypical);
    CHECK(!atypicality(wt({2, 0})).atypical);
    CHECK(atypicality(wt({3, 1})).atypical);           // a = 3 family
    CHECK(atypicality(wt({1, 1})).atypical);
    CHECK(!atypicality(wt({2, -1})).atypical);

    AtypicalityTag t = atypicality(wt({3, 1}));
    CHECK(t.a == Rational(3));
    CHECK(t.i == 1);

    // rational a is allowed
    Weight lam{Rational(1, 2), Rational(1)};
    CHECK(atypicality(lam).atypical);
    CHECK(atypicality(lam).a == Rational(1, 2));

    CHECK(atypicality(wt({0, 1, 1})).atypical);        // i = 2 at n = 3
    CHECK(!atypicality(wt({1, 1, 0})).atypical);
}

TEST_CASE("projectivity over odd elements") {
    const WAlgebra& w = build_wn(2);

    FTildePoint generic;
    generic.a = 1;
    generic.c = {Rational(1)};

    // the trivial module is never projective over a nonzero x
    CHECK(!projective_over(w, generic, trivial_module(w)));
    FTildePoint axis;
    axis.a = 1;
    axis.c = {Rational(0)};
    CHECK(!projective_over(w, axis, trivial_module(w)));

    // a rank-one free module over Lambda(d1): span{1, d1 . 1}
    {
        std::vector<int> scope;
        scope.push_back(w.index_of(0, 1));                 // d1
        scope.push_back(w.index_of(0b10, 2));              // xi2 d2 (spans f~0)
        scope.push_back(w.index_of(0b11, 2));              // xi1 xi2 d2
        std::map<int, SparseMatrix> actions;
        SparseMatrix d1(2, 2);
        d1.set(1, 0, 1);                                   // d1 . v0 = v1, d1 . v1 = 0
        actions.emplace(w.index_of(0, 1), d1);
        actions.emplace(w.index_of(0b10, 2), SparseMatrix(2, 2));
        actions.emplace(w.index_of(0b11, 2), SparseMatrix(2, 2));
        Supermodule free2(2, scope, {"1", "d1.1"}, {0, 1},
                          {WeightVec{0, 0}, WeightVec{-1, 0}}, std::move(actions), "free-rank-1");
        free2.check_relations(w);
        CHECK(projective_over(w, axis, free2));            // x = d1, rank 1 = 2/2
    }

    // K(0) is projective at the generic point (its support is {0})
    CHECK(projective_over(w, generic, kac_module(w, wt({0, 0}))));
    // x = 0 is trivially projective
    FTildePoint zero;
    zero.a = 0;
    zero.c = {Rational(0)};
    CHECK(projective_over(w, zero, trivial_module(w)));

    // odd-dimensional modules are never projective over nonzero nilpotent x
    Supermodule lm = simple_supermodule(w, wt({0, -1}));
    CHECK(lm.dim() == 3);
    CHECK(!projective_over(w, generic, lm));
    CHECK(!projective_over(w, axis, lm));
}

TEST_CASE("rank variety reports") {
    const WAlgebra& w = build_wn(2);

    CHECK(rank_variety_report(w, trivial_module(w), 6, 42).verdict ==
          RankVerdict::full_variety_consistent);
    CHECK(rank_variety_report(w, kac_module(w, wt({0, 0})), 6, 42).verdict ==
          RankVerdict::zero_variety_consistent);
    CHECK(rank_variety_report(w, kac_module(w, wt({2, 0})), 6, 42).verdict ==
          RankVerdict::zero_variety_consistent);
    CHECK(rank_variety_report(w, simple_supermodule(w, wt({0, -1})), 6, 42).verdict ==
          RankVerdict::full_variety_consistent);
    CHECK(rank_variety_report(w, simple_supermodule(w, wt({1, 1})), 6, 42).verdict ==
          RankVerdict::full_variety_consistent);

    // the report records one sample per point with a boolean
    RankVarietyReport rep = rank_variety_report(w, trivial_module(w), 3, 7);
    for (const auto& s : rep.samples) CHECK(!s.projective);
}

TEST_CASE("tensor and dual constructions") {
    const WAlgebra& w = build_wn(2);
    Supermodule k0 = kac_module(w, wt({0, 0}));

    // C (x) M has the same dimension and weight multiplicities as M
    Supermodule ck = tensor(w, trivial_module(w), k0);
    CHECK(ck.dim() == k0.dim());
    for (int i = 0; i < k0.dim(); ++i) {
        CHECK(ck.weight_space(k0.weight(i)).size() == k0.weight_space(k0.weight(i)).size());
        CHECK(ck.parity(i) == k0.parity(i));
    }
    // and identical action matrices under the canonical identification
    for (int s : k0.scope()) CHECK(ck.action(s) == k0.action(s));

    // dual(dual(m)) matches m in dims and weight multiplicities
    Supermodule dd = dual_module(w, dual_module(w, k0));
    CHECK(dd.dim() == k0.dim());
    for (int i = 0; i < k0.dim(); ++i)
        CHECK(dd.weight_space(k0.weight(i)).size() == k0.weight_space(k0.weight(i)).size());

    // relation checks run inside the constructors; a failure would have thrown
    Supermodule t = tensor(w, k0, simple_supermodule(w, wt({0, -1})));
    CHECK(t.dim() == 12);
}

TEST_CASE("construction rejects inconsistent action data") {
    const WAlgebra& w = build_wn(2);
    Supermodule k = kac_module(w, wt({0, 0}));

    std::map<int, SparseMatrix> actions;
    for (int s : k.scope()) actions.emplace(s, k.action(s));
    // flip one sign in the action of d1
    int d1 = w.index_of(0, 1);
    SparseMatrix broken = actions.at(d1);
    REQUIRE(broken.nnz() > 0);
    int r = broken.row(0).empty() ? 1 : 0;
    for (int row = 0; row < broken.rows(); ++row) {
        if (!broken.row(row).empty()) {
            r = row;
            break;
        }
    }
    auto [c, v] = *broken.row(r).begin();
    broken.set(r, c, -v);
    actions[d1] = broken;

    std::vector<std::string> names;
    std::vector<int> parities;
    std::vector<WeightVec> weights;
    for (int i = 0; i < k.dim(); ++i) {
        names.push_back(k.name(i));
        parities.push_back(k.parity(i));
        weights.push_back(k.weight(i));
    }
    Supermodule bad(2, k.scope(), names, parities, weights, std::move(actions), "broken");
    CHECK_THROWS_AS(bad.check_relations(w), Error);
}

TEST_CASE("point and weight parsing") {
    CHECK(parse_weight("2,0", 2)[0] == Rational(2));
    CHECK(parse_weight("1/2,-3", 2)[1] == Rational(-3));
    CHECK_THROWS_AS(parse_weight("1", 2), InvalidInput);
    CHECK_THROWS_AS(parse_weight("1,x", 2), InvalidInput);

    FTildePoint pt = parse_point("a=1,c2=-2/3", 2);
    CHECK(pt.a == Rational(1));
    CHECK(pt.c[0] == Rational(-2, 3));
    CHECK(pt.to_string() == "a=1,c2=-2/3");
    CHECK_THROWS_AS(parse_point("a=1,c5=1", 2), InvalidInput);
    CHECK_THROWS_AS(parse_point("b=1", 2), InvalidInput);
}

TEST_CASE("submodule and quotient preserve the relations") {
    const WAlgebra& w = build_wn(2);
    Supermodule k = kac_module(w, wt({1, 1}));
    CHECK(k.dim() == 4);
    Subspace rad = maximal_proper_submodule(w, k, wt({1, 1}));
    CHECK(rad.dim() == 1);   // L(0) sits inside K(e1+e2)

    Supermodule sub = submodule_module(w, k, rad);
    CHECK(sub.dim() == 1);
    Supermodule quot = quotient_module(w, k, rad);
    CHECK(quot.dim() == 3);

    // a random non-invariant subspace is rejected
    SparseMatrix row(0, k.dim());
    SparseVec v;
    v[0] = 1;
    row.append_row(v);
    Subspace bogus(k.dim(), row);
    if (!is_submodule(k, bogus)) {
        CHECK_THROWS_AS(submodule_module(w, k, bogus), InvalidInput);
        CHECK_THROWS_AS(quotient_module(w, k, bogus), InvalidInput);
    }
}
