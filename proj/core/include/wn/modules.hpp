#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wn/supermodule.hpp"

namespace wn {

/// Rational weight for the diagonal torus.  Dominant integral weights are
/// non-increasing integer vectors.
using Weight = std::vector<Rational>;

Weight parse_weight(const std::string& text, int n);
std::string weight_label(const Weight& w);
bool is_dominant_integral(const Weight& w);
WeightVec to_integer_weight(const Weight& w);

/// Weyl dimension formula prod_{i<j} (l_i - l_j + j - i) / (j - i).
std::int64_t weyl_dim(const Weight& lambda);

/// Simple gl(n)-module L0(lambda) for dominant integral lambda, built from
/// highest-weight vectors in a tensor power of the natural module plus a
/// determinant twist.  Action scope: the g0 monomials.
Supermodule simple_gl_module(const WAlgebra& w, const Weight& lambda);

/// Kac supermodule K(lambda) = U(g) (x)_{U(g0 + g+)} L0(lambda), realized on
/// Lambda(g_{-1}) (x) L0(lambda) by PBW straightening.
Supermodule kac_module(const WAlgebra& w, const Weight& lambda);

/// Largest submodule avoiding the lambda-weight line of a module that is
/// cyclically generated by its one-dimensional lambda-weight space.
Subspace maximal_proper_submodule(const WAlgebra& w, const Supermodule& m, const Weight& lambda);

/// Simple quotient L(lambda) = K(lambda) / rad.
Supermodule simple_supermodule(const WAlgebra& w, const Weight& lambda);

struct AtypicalityTag {
    bool atypical = false;
    Rational a;       // witness parameters when atypical
    int i = 0;        // 1-based position; lambda = a e_i + e_{i+1} + ... + e_n

    std::string to_string() const { return atypical ? "atypical" : "typical"; }
};

/// Membership test for Serganova's set Omega = {a e_i + e_{i+1} + ... + e_n}.
AtypicalityTag atypicality(const Weight& lambda);

/// A point of f~_1: x = a d_1 + sum_{i>=2} c_i xi_1 xi_i d_i.
struct FTildePoint {
    Rational a;
    std::vector<Rational> c;   // c[k] is the coefficient of xi_1 xi_{k+2} d_{k+2}

    std::string to_string() const;
};

FTildePoint parse_point(const std::string& text, int n);

WElement ftilde_element(const WAlgebra& w, const FTildePoint& pt);

/// Projectivity of m over U(<x>) for x in f~_1: split off the part where
/// z = [x,x]/2 acts invertibly (always projective) and apply the half-rank
/// criterion on the z-kernel part.
bool projective_over(const WAlgebra& w, const FTildePoint& pt, const Supermodule& m);

struct RankVarietySample {
    FTildePoint point;
    bool projective = false;
};

enum class RankVerdict { zero_variety_consistent, full_variety_consistent, inconclusive };

std::string verdict_label(RankVerdict v);

struct RankVarietyReport {
    std::string module_tag;
    std::vector<RankVarietySample> samples;
    RankVerdict verdict = RankVerdict::inconclusive;
};

/// Samples the coordinate axes of f~_1, their pairwise combinations, the
/// all-ones point and `random_count` seeded pseudo-random points, and
/// classifies the module's rank variety from the projectivity pattern.
RankVarietyReport rank_variety_report(const WAlgebra& w, const Supermodule& m,
                                      int random_count = 8, std::uint64_t seed = 1);

/// Structured sample of f~_1 points as used by the report; exposed so that
/// pointwise tensor/SES checks can reuse the identical point set.
std::vector<FTildePoint> standard_sample_points(const WAlgebra& w, int random_count,
                                                std::uint64_t seed);

} // namespace wn
