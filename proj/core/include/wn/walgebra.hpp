#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wn/super_space.hpp"

namespace wn {

/// Basis monomial xi_I d_i of W(n).  I is stored as a bitmask over
/// {1..n} (bit j-1 <=> j in I).  z-degree is |I| - 1, parity is
/// (|I| - 1) mod 2, weight is sum_{j in I} eps_j - eps_i.
struct WBasisElement {
    std::uint32_t mask = 0;
    int i = 1;                             // 1-based

    auto operator<=>(const WBasisElement&) const = default;
};

/// Element of W(n): sparse rational combination of basis monomials,
/// keyed by their index in the algebra's canonical basis order.
struct WElement {
    int n = 0;
    SparseVec coords;

    bool is_zero() const { return coords.empty(); }
};

/// Element of the exterior algebra Lambda(n): mask -> coefficient.
using LambdaElement = std::map<std::uint32_t, Rational>;

/// Named subalgebras used throughout.
enum class SubalgebraName { g0, h, g_plus, g_minus, b_max, b_min, f, f_tilde, span_of };

struct SubalgebraSpec {
    SubalgebraName name = SubalgebraName::span_of;
    std::vector<WElement> basis;
};

struct ClosureCounterexample {
    int a = -1, b = -1;                    // positions into the spec basis
    WElement bracket;
};

struct ClosureReport {
    bool closed = false;
    bool graded_ok = true;                 // named graded conditions, see check_subalgebra_closure
    std::string detail;
    std::vector<ClosureCounterexample> counterexamples;
};

enum class Torus { T, Tn_minus_1 };

struct RootDatum {
    WeightVec root;
    int multiplicity = 0;
    int parity = 0;
    bool simple = false;
};

/// The Lie superalgebra W(n) with its full structure-constant table.
/// Built once per rank and immutable afterwards.
class WAlgebra {
public:
    explicit WAlgebra(int n);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    const WBasisElement& element(int idx) const { return basis_.at(idx); }
    int index_of(const WBasisElement& e) const;
    int index_of(std::uint32_t mask, int i) const { return index_of(WBasisElement{mask, i}); }

    int z_degree(int idx) const { return degree_.at(idx); }
    int parity(int idx) const { return parity_.at(idx); }
    const WeightVec& weight(int idx) const { return weight_.at(idx); }

    std::string name(int idx) const;
    /// Parses the text format xi{i1,...,ik}d{j}; xi{}d{j} is d_j.
    int parse_basis_name(const std::string& text) const;

    /// dim W(n)_k = n * C(n, k+1).
    int graded_dim(int k) const;
    std::vector<int> indices_of_degree(int k) const;
    std::vector<int> indices_of_degrees(const std::vector<int>& ks) const;

    /// Structure constants [basis a, basis b] as (index, integer coeff).
    const std::vector<std::pair<int, int>>& bracket_basis(int a, int b) const;

    WElement basis_element(int idx) const;
    WElement bracket(const WElement& x, const WElement& y) const;

    /// Supercommutator computed by composing superderivations on Lambda(n);
    /// the independent cross-check for the closed-form table.
    WElement bracket_by_composition(const WElement& x, const WElement& y) const;

    /// Applies x (as a superderivation) to an element of Lambda(n).
    LambdaElement apply_derivation(const WElement& x, const LambdaElement& a) const;

    /// beta(x, y) = [x, y] for x in g_{-1}, y in g_1; throws when the
    /// arguments sit in the wrong graded components.
    WElement beta(const WElement& x, const WElement& y) const;

    SubalgebraSpec subalgebra(SubalgebraName name) const;
    SubalgebraSpec span_of(std::vector<WElement> basis) const;

    /// Verifies that all pairwise brackets of the spec's basis stay inside
    /// its span.  For f it also checks [f_r, f_s] in f_{r+s} over Z2; for
    /// f_tilde it checks [f0~, f~] = 0.
    ClosureReport check_subalgebra_closure(const SubalgebraSpec& spec) const;

    /// SuperSpace whose basis is the monomials of the listed z-degrees, in
    /// canonical order, carrying parities, degrees and weights.
    SuperSpace component_space(const std::vector<int>& degrees) const;
    SuperSpace algebra_space() const;

    /// Weight multiset of the basis, with parities and simple-root flags.
    std::vector<RootDatum> root_system() const;

    /// Annihilator of x inside g0 under the adjoint action, as a subspace
    /// in the coordinates of the g0 monomial basis.
    Subspace annihilator_in_g0(const WElement& x) const;

    /// The distinguished semisimple element d_1 + sum_{l>=2} (l-1) xi_1 xi_l d_l.
    WElement detecting_x0() const;

    std::string to_string(const WElement& x) const;

private:
    int n_;
    std::vector<WBasisElement> basis_;
    std::map<WBasisElement, int> index_;
    std::vector<int> degree_, parity_;
    std::vector<WeightVec> weight_;
    // table_[a * dim + b]
    std::vector<std::vector<std::pair<int, int>>> table_;

    std::vector<std::pair<int, int>> bracket_monomials(const WBasisElement& x,
                                                       const WBasisElement& y) const;
};

/// Shared immutable algebra instance for rank n (n >= 2).
const WAlgebra& build_wn(int n);

/// Span of the weight-zero basis vectors of `space` with respect to the
/// torus: all weight components for T, components 2..n for T_{n-1}.
Subspace fixed_points(const SuperSpace& space, Torus torus, int n);

/// Fiber analysis for beta over a diagonal h = sum c_i xi_i d_i.
struct BetaFiberReport {
    enum class Status { empty_fiber, family_match, mismatch, unsupported };
    Status status = Status::unsupported;
    bool identity_check = false;       // [beta(x), x_-] = 0, verified exhaustively
    std::vector<int> forced_zero_a;    // 1-based indices t with a_t forced to 0
    int free_b_count = 0;              // free b_{r,s,t} coordinates (1 < r < s)
    int samples_checked = 0;
    std::string detail;
};

/// Mechanizes the fiber computation: derives the linear constraints on the
/// g_{-1} part from [h, x_-] = 0 (valid because [beta(x), x_-] = 0, which is
/// checked exhaustively on basis elements), then solves the remaining linear
/// system in the g_1 coefficients for `trials` sampled values of the free
/// parameter and compares against the predicted solution family.
BetaFiberReport verify_beta_fiber(const WAlgebra& w, const std::vector<Rational>& c,
                                  int trials, std::uint64_t seed);

} // namespace wn
