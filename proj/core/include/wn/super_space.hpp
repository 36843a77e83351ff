#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wn/linalg.hpp"

namespace wn {

/// Integer weight vector for the diagonal torus (length n).
using WeightVec = std::vector<std::int64_t>;

WeightVec weight_add(const WeightVec& a, const WeightVec& b);
WeightVec weight_negate(const WeightVec& a);
std::string weight_to_string(const WeightVec& w);

/// One named basis vector of a Z2-graded (optionally Z-graded, weighted)
/// vector space.
struct BasisVector {
    std::string name;
    int parity = 0;                       // 0 even, 1 odd
    std::optional<int> z_degree;
    std::optional<WeightVec> weight;
};

/// An ordered basis of a finite-dimensional super vector space.  The order
/// is fixed at construction; all sign computations refer to it.
class SuperSpace {
public:
    SuperSpace() = default;
    explicit SuperSpace(std::vector<BasisVector> basis);

    int dim() const { return static_cast<int>(basis_.size()); }
    const BasisVector& vec(int i) const { return basis_.at(i); }
    const std::vector<BasisVector>& basis() const { return basis_; }

    int parity(int i) const { return basis_.at(i).parity; }
    const WeightVec& weight(int i) const;

    int even_count() const { return static_cast<int>(even_.size()); }
    int odd_count() const { return static_cast<int>(odd_.size()); }
    const std::vector<int>& even_positions() const { return even_; }
    const std::vector<int>& odd_positions() const { return odd_; }

    int position_of(const std::string& name) const;

    /// Dual space: same names with a trailing '*', same parities, negated
    /// weights and z-degrees.
    SuperSpace dual() const;

private:
    std::vector<BasisVector> basis_;
    std::vector<int> even_, odd_;
    std::map<std::string, int> by_name_;
};

/// Canonical basis label of the super wedge power: a strictly increasing
/// set of even factor positions and a weakly increasing multiset of odd
/// factor positions.  Canonical factor order is even factors first, then
/// odd, each ascending.
struct WedgeIndex {
    std::vector<int> even;
    std::vector<int> odd;

    int size() const { return static_cast<int>(even.size() + odd.size()); }
    std::vector<int> factors() const;      // canonical factor sequence
    auto operator<=>(const WedgeIndex&) const = default;
};

/// Result of normalizing an arbitrary factor list into a WedgeIndex.
struct NormalizedWedge {
    bool zero = false;
    int sign = 1;
    WedgeIndex index;
};

/// Sorts a factor list into canonical order, accumulating the sign of each
/// adjacent swap: -1 unless both factors are odd (odd factors commute).
/// Returns zero when an even factor repeats.
NormalizedWedge wedge_normalize(const SuperSpace& space, const std::vector<int>& factors);

/// Componentwise sum of the factor weights; throws if any factor lacks one.
WeightVec wedge_weight(const SuperSpace& space, const WedgeIndex& idx, int n);

/// Parity of a wedge basis element (sum of factor parities).
int wedge_parity(const SuperSpace& space, const WedgeIndex& idx);

std::string wedge_label(const SuperSpace& space, const WedgeIndex& idx);

/// Closed-form dimension of the degree-p super wedge power of a space with
/// the given numbers of even and odd basis vectors: sum over k of
/// C(even, k) * C(odd + (p-k) - 1, p-k).  The count is clamped to cap + 1
/// as soon as it exceeds cap, so callers can test the resource guard
/// without overflow.
std::uint64_t wedge_dim(int even_count, int odd_count, int p, std::uint64_t cap);

/// Materialized super wedge power with an indexed basis.
class WedgeSpace {
public:
    WedgeSpace() = default;

    const SuperSpace& base() const { return base_; }
    int degree() const { return p_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const WedgeIndex& index(int i) const { return basis_.at(i); }
    const std::vector<WedgeIndex>& basis() const { return basis_; }

    /// Position of a canonical index, or -1 if absent (possible for
    /// filtered spaces).
    int position_of(const WedgeIndex& idx) const;

    friend WedgeSpace wedge_power(const SuperSpace& v, int p, std::uint64_t dim_cap);
    friend WedgeSpace wedge_power_filtered(const SuperSpace& v, int p,
                                           const std::function<bool(const WeightVec&)>& keep,
                                           int n, std::uint64_t walk_cap);

private:
    SuperSpace base_;
    int p_ = 0;
    std::vector<WedgeIndex> basis_;
    std::map<WedgeIndex, int> position_;
};

/// Full super wedge power Lambda_s^p(v).  Throws ResourceLimit when the
/// dimension exceeds dim_cap.
WedgeSpace wedge_power(const SuperSpace& v, int p, std::uint64_t dim_cap = 200000);

/// Enumerates only the wedge basis indices whose total weight satisfies
/// `keep`.  The full index tree is still walked, so the ambient dimension
/// must stay under walk_cap; the stored basis can be far smaller.
WedgeSpace wedge_power_filtered(const SuperSpace& v, int p,
                                const std::function<bool(const WeightVec&)>& keep,
                                int n, std::uint64_t walk_cap = 5000000);

/// Derivation action of an *even* operator on the wedge power:
/// sum_i x_1 ^ ... ^ (u.x_i) ^ ... ^ x_p applied to the wedge index at
/// `pos`.  The operator is given by the images of the base vectors
/// (base_images[j] = u.x_j as a sparse vector over base positions).  Terms
/// falling outside a filtered basis are dropped.
SparseVec wedge_derivation_apply(const WedgeSpace& w, const std::vector<SparseVec>& base_images,
                                 int pos);

} // namespace wn
