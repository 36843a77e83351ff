#include "wn/supermodule.hpp"

#include <algorithm>
#include <sstream>

namespace wn {

Supermodule::Supermodule(int n, std::vector<int> scope, std::vector<std::string> names,
                         std::vector<int> parities, std::vector<WeightVec> weights,
                         std::map<int, SparseMatrix> actions, std::string tag)
    : n_(n),
      scope_(std::move(scope)),
      names_(std::move(names)),
      parities_(std::move(parities)),
      weights_(std::move(weights)),
      actions_(std::move(actions)),
      tag_(std::move(tag)) {
    std::sort(scope_.begin(), scope_.end());
    const int d = dim();
    if (static_cast<int>(parities_.size()) != d || static_cast<int>(weights_.size()) != d)
        throw DimensionMismatch("Supermodule: basis metadata sizes differ");
    for (int s : scope_) {
        auto it = actions_.find(s);
        if (it == actions_.end()) throw InvalidInput("Supermodule: missing action matrix");
        if (it->second.rows() != d || it->second.cols() != d)
            throw DimensionMismatch("Supermodule: action matrix shape mismatch");
    }
}

const SparseMatrix& Supermodule::action(int w_index) const {
    auto it = actions_.find(w_index);
    if (it == actions_.end())
        throw InvalidInput("Supermodule: no action for basis index " + std::to_string(w_index));
    return it->second;
}

SparseMatrix Supermodule::action_of(const WElement& x) const {
    SparseMatrix out(dim(), dim());
    for (const auto& [idx, c] : x.coords) out = out + action(idx).scaled(c);
    return out;
}

int Supermodule::unique_weight_vector(const WeightVec& mu) const {
    std::vector<int> hits = weight_space(mu);
    if (hits.size() != 1)
        throw InvalidInput("Supermodule: weight space of " + weight_to_string(mu) + " has dim " +
                           std::to_string(hits.size()) + ", expected 1");
    return hits[0];
}

std::vector<int> Supermodule::weight_space(const WeightVec& mu) const {
    std::vector<int> hits;
    for (int i = 0; i < dim(); ++i)
        if (weights_[i] == mu) hits.push_back(i);
    return hits;
}

void Supermodule::check_relations(const WAlgebra& w) const {
    // weight/parity compatibility of each action matrix
    for (int s : scope_) {
        const SparseMatrix& a = actions_.at(s);
        const WeightVec& wu = w.weight(s);
        int pu = w.parity(s);
        for (int r = 0; r < a.rows(); ++r) {
            for (const auto& [c, v] : a.row(r)) {
                if (weights_[r] != weight_add(weights_[c], wu))
                    throw Error("Supermodule(" + tag_ + "): action of " + w.name(s) +
                                " violates weight additivity at (" + names_[r] + "," + names_[c] + ")");
                if (parities_[r] != (parities_[c] ^ pu))
                    throw Error("Supermodule(" + tag_ + "): action of " + w.name(s) +
                                " violates the parity shift at (" + names_[r] + "," + names_[c] + ")");
            }
        }
    }

    // bracket relations over all pairs in scope
    std::map<int, int> scope_set;
    for (int s : scope_) scope_set[s] = 1;
    for (int a : scope_) {
        for (int b : scope_) {
            SparseMatrix lhs(dim(), dim());
            for (const auto& [idx, coeff] : w.bracket_basis(a, b)) {
                if (!scope_set.count(idx))
                    throw Error("Supermodule(" + tag_ + "): bracket [" + w.name(a) + "," +
                                w.name(b) + "] leaves the action scope");
                lhs = lhs + actions_.at(idx).scaled(coeff);
            }
            int sign = (w.parity(a) & w.parity(b)) ? 1 : -1;
            SparseMatrix rhs =
                actions_.at(a) * actions_.at(b) + (actions_.at(b) * actions_.at(a)).scaled(sign);
            if (!(lhs == rhs))
                throw Error("Supermodule(" + tag_ + "): relation fails for [" + w.name(a) + "," +
                            w.name(b) + "]");
        }
    }
}

Supermodule trivial_module(const WAlgebra& w) {
    std::vector<int> scope(w.dim());
    for (int i = 0; i < w.dim(); ++i) scope[i] = i;
    std::map<int, SparseMatrix> actions;
    for (int i = 0; i < w.dim(); ++i) actions.emplace(i, SparseMatrix(1, 1));
    Supermodule m(w.n(), scope, {"1"}, {0}, {WeightVec(w.n(), 0)}, std::move(actions),
                  "trivial");
    m.check_relations(w);
    return m;
}

Supermodule adjoint_module(const WAlgebra& w) {
    const int d = w.dim();
    std::vector<int> scope(d);
    std::vector<std::string> names(d);
    std::vector<int> parities(d);
    std::vector<WeightVec> weights(d);
    for (int i = 0; i < d; ++i) {
        scope[i] = i;
        names[i] = w.name(i);
        parities[i] = w.parity(i);
        weights[i] = w.weight(i);
    }
    std::map<int, SparseMatrix> actions;
    for (int a = 0; a < d; ++a) {
        SparseMatrix m(d, d);
        for (int b = 0; b < d; ++b)
            for (const auto& [idx, coeff] : w.bracket_basis(a, b)) m.set(idx, b, coeff);
        actions.emplace(a, std::move(m));
    }
    Supermodule m(w.n(), scope, names, parities, weights, std::move(actions), "adjoint");
    m.check_relations(w);
    return m;
}

Supermodule tensor(const WAlgebra& w, const Supermodule& a, const Supermodule& b) {
    if (a.n() != b.n()) throw DimensionMismatch("tensor: rank mismatch");

    // common scope
    std::vector<int> scope;
    std::set_intersection(a.scope().begin(), a.scope().end(), b.scope().begin(), b.scope().end(),
                          std::back_inserter(scope));

    const int da = a.dim(), db = b.dim();
    auto pos = [&](int i, int j) { return i * db + j; };

    std::vector<std::string> names(static_cast<std::size_t>(da) * db);
    std::vector<int> parities(names.size());
    std::vector<WeightVec> weights(names.size());
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < db; ++j) {
            names[pos(i, j)] = a.name(i) + "(x)" + b.name(j);
            parities[pos(i, j)] = a.parity(i) ^ b.parity(j);
            weights[pos(i, j)] = weight_add(a.weight(i), b.weight(j));
        }
    }

    std::map<int, SparseMatrix> actions;
    for (int s : scope) {
        SparseMatrix m(da * db, da * db);
        const SparseMatrix& ma = a.action(s);
        const SparseMatrix& mb = b.action(s);
        int px = w.parity(s);
        // x.(u (x) v) = xu (x) v + (-1)^{|x||u|} u (x) xv
        for (int r = 0; r < da; ++r)
            for (const auto& [c, v] : ma.row(r))
                for (int j = 0; j < db; ++j) m.add_at(pos(r, j), pos(c, j), v);
        for (int r = 0; r < db; ++r)
            for (const auto& [c, v] : mb.row(r))
                for (int i = 0; i < da; ++i) {
                    Rational sv = (px && a.parity(i)) ? -v : v;
                    m.add_at(pos(i, r), pos(i, c), sv);
                }
        actions.emplace(s, std::move(m));
    }
    Supermodule out(a.n(), scope, names, parities, weights, std::move(actions),
                    a.tag() + "(x)" + b.tag());
    out.check_relations(w);
    return out;
}

Supermodule dual_module(const WAlgebra& w, const Supermodule& m) {
    const int d = m.dim();
    std::vector<std::string> names(d);
    std::vector<int> parities(d);
    std::vector<WeightVec> weights(d);
    for (int i = 0; i < d; ++i) {
        names[i] = m.name(i) + "*";
        parities[i] = m.parity(i);
        weights[i] = weight_negate(m.weight(i));
    }
    std::map<int, SparseMatrix> actions;
    for (int s : m.scope()) {
        const SparseMatrix& a = m.action(s);
        int px = w.parity(s);
        SparseMatrix out(d, d);
        // (x.phi_k)(v_c) = -(-1)^{|x||phi_k|} phi_k(x.v_c) = -(-1)^{|x||k|} a[k][c]
        for (int k = 0; k < d; ++k) {
            for (const auto& [c, v] : a.row(k)) {
                Rational sv = (px && m.parity(k)) ? v : -v;
                out.add_at(c, k, sv);
            }
        }
        actions.emplace(s, std::move(out));
    }
    Supermodule out(m.n(), m.scope(), names, parities, weights, std::move(actions),
                    m.tag() + "*");
    out.check_relations(w);
    return out;
}

bool is_submodule(const Supermodule& m, const Subspace& sub) {
    if (sub.ambient_dim() != m.dim()) return false;
    for (int s : m.scope()) {
        const SparseMatrix& a = m.action(s);
        for (int r = 0; r < sub.dim(); ++r) {
            if (!sub.contains(a.apply(sub.basis().row(r)))) return false;
        }
    }
    return true;
}

namespace {

// single weight/parity of a sparse vector's support; rref bases of graded
// subspaces are automatically homogeneous
template <typename Get>
auto homogeneous_value(const SparseVec& v, Get get, const char* what) {
    auto it = v.begin();
    auto val = get(it->first);
    for (; it != v.end(); ++it)
        if (get(it->first) != val) throw Error(std::string("expected homogeneous vector: ") + what);
    return val;
}

} // namespace

Supermodule submodule_module(const WAlgebra& w, const Supermodule& m, const Subspace& sub) {
    if (!is_submodule(m, sub)) throw InvalidInput("submodule_module: subspace is not action-stable");
    const int d = sub.dim();
    std::vector<std::string> names(d);
    std::vector<int> parities(d);
    std::vector<WeightVec> weights(d);
    for (int r = 0; r < d; ++r) {
        const SparseVec& row = sub.basis().row(r);
        names[r] = "s" + std::to_string(r);
        parities[r] = homogeneous_value(row, [&](int i) { return m.parity(i); }, "parity");
        weights[r] = homogeneous_value(row, [&](int i) { return m.weight(i); }, "weight");
    }
    std::map<int, SparseMatrix> actions;
    for (int s : m.scope()) {
        const SparseMatrix& a = m.action(s);
        SparseMatrix out(d, d);
        for (int c = 0; c < d; ++c) {
            std::vector<Rational> coords = sub.coordinates_of(a.apply(sub.basis().row(c)));
            for (int r = 0; r < d; ++r)
                if (!coords[r].is_zero()) out.set(r, c, coords[r]);
        }
        actions.emplace(s, std::move(out));
    }
    Supermodule out(m.n(), m.scope(), names, parities, weights, std::move(actions),
                    m.tag() + ".sub");
    out.check_relations(w);
    return out;
}

Supermodule quotient_module(const WAlgebra& w, const Supermodule& m, const Subspace& sub) {
    if (!is_submodule(m, sub)) throw InvalidInput("quotient_module: subspace is not action-stable");

    // quotient coordinates = complement of the rref pivot columns
    std::vector<bool> is_pivot(m.dim(), false);
    for (int r = 0; r < sub.dim(); ++r) is_pivot[sub.basis().row(r).begin()->first] = true;
    std::vector<int> coord;
    for (int i = 0; i < m.dim(); ++i)
        if (!is_pivot[i]) coord.push_back(i);

    const int d = static_cast<int>(coord.size());
    std::vector<std::string> names(d);
    std::vector<int> parities(d);
    std::vector<WeightVec> weights(d);
    std::map<int, int> coord_pos;
    for (int i = 0; i < d; ++i) {
        names[i] = m.name(coord[i]);
        parities[i] = m.parity(coord[i]);
        weights[i] = m.weight(coord[i]);
        coord_pos[coord[i]] = i;
    }

    std::map<int, SparseMatrix> actions;
    for (int s : m.scope()) {
        const SparseMatrix& a = m.action(s);
        SparseMatrix out(d, d);
        for (int c = 0; c < d; ++c) {
            SparseVec image = sub.reduce(a.apply(SparseVec{{coord[c], Rational(1)}}));
            for (const auto& [i, v] : image) out.set(coord_pos.at(i), c, v);
        }
        actions.emplace(s, std::move(out));
    }
    Supermodule out(m.n(), m.scope(), names, parities, weights, std::move(actions),
                    m.tag() + "/sub");
    out.check_relations(w);
    return out;
}

} // namespace wn
