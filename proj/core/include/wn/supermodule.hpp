#pragma once

#include <map>
#include <string>
#include <vector>

#include "wn/walgebra.hpp"

namespace wn {

/// Finite-dimensional Z2-graded representation, given by one action matrix
/// per algebra basis monomial in `scope`.  Every basis vector is a weight
/// vector for the diagonal torus.  `scope` is the sorted list of W(n) basis
/// indices whose action is defined: the whole algebra for g-supermodules,
/// or a bracket-closed subset (e.g. the basis of f~) for restricted ones.
class Supermodule {
public:
    Supermodule() = default;
    Supermodule(int n, std::vector<int> scope, std::vector<std::string> names,
                std::vector<int> parities, std::vector<WeightVec> weights,
                std::map<int, SparseMatrix> actions, std::string tag);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(names_.size()); }
    const std::string& tag() const { return tag_; }
    void set_tag(std::string tag) { tag_ = std::move(tag); }
    const std::vector<int>& scope() const { return scope_; }

    const std::string& name(int i) const { return names_.at(i); }
    int parity(int i) const { return parities_.at(i); }
    const WeightVec& weight(int i) const { return weights_.at(i); }

    bool has_action(int w_index) const { return actions_.count(w_index) > 0; }
    const SparseMatrix& action(int w_index) const;

    /// Action matrix of an arbitrary element (linear combination).
    SparseMatrix action_of(const WElement& x) const;

    /// Index of the unique basis vector of the given weight; throws unless
    /// exactly one exists.
    int unique_weight_vector(const WeightVec& mu) const;

    std::vector<int> weight_space(const WeightVec& mu) const;

    /// Verifies rho([x,y]) = rho(x) rho(y) - (-1)^{|x||y|} rho(y) rho(x)
    /// for all pairs in scope, that actions shift weights by the acting
    /// element's weight, and that parities shift by its parity.  Throws
    /// Error with a counterexample description on failure.
    void check_relations(const WAlgebra& w) const;

private:
    int n_ = 0;
    std::vector<int> scope_;
    std::vector<std::string> names_;
    std::vector<int> parities_;
    std::vector<WeightVec> weights_;
    std::map<int, SparseMatrix> actions_;
    std::string tag_;
};

/// The trivial one-dimensional module.
Supermodule trivial_module(const WAlgebra& w);

/// W(n) as a module over itself under the adjoint action.
Supermodule adjoint_module(const WAlgebra& w);

/// Tensor product: x.(u (x) v) = xu (x) v + (-1)^{|x||u|} u (x) xv.
Supermodule tensor(const WAlgebra& w, const Supermodule& a, const Supermodule& b);

/// Linear dual: (x.phi)(v) = -(-1)^{|x||phi|} phi(x.v).
Supermodule dual_module(const WAlgebra& w, const Supermodule& m);

/// The action-invariant subspace `sub` as a module in its own right.
/// Throws when `sub` is not stable under every action in scope.
Supermodule submodule_module(const WAlgebra& w, const Supermodule& m, const Subspace& sub);

/// Quotient by an action-stable subspace, realized on the complement
/// coordinates (the non-pivot columns of the subspace's rref basis).
Supermodule quotient_module(const WAlgebra& w, const Supermodule& m, const Subspace& sub);

/// True when `sub` is stable under every action of m's scope.
bool is_submodule(const Supermodule& m, const Subspace& sub);

} // namespace wn
