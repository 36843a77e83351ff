#include "wn/super_space.hpp"

#include <algorithm>
#include <sstream>

#include "wn/errors.hpp"

namespace wn {

WeightVec weight_add(const WeightVec& a, const WeightVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("weight_add: lengths differ");
    WeightVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

WeightVec weight_negate(const WeightVec& a) {
    WeightVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

std::string weight_to_string(const WeightVec& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    return os.str();
}

SuperSpace::SuperSpace(std::vector<BasisVector> basis) : basis_(std::move(basis)) {
    for (int i = 0; i < dim(); ++i) {
        const auto& b = basis_[i];
        if (b.parity != 0 && b.parity != 1)
            throw InvalidInput("SuperSpace: parity must be 0 or 1");
        if (by_name_.count(b.name))
            throw InvalidInput("SuperSpace: duplicate basis name '" + b.name + "'");
        by_name_[b.name] = i;
        (b.parity == 0 ? even_ : odd_).push_back(i);
    }
}

const WeightVec& SuperSpace::weight(int i) const {
    const auto& w = basis_.at(i).weight;
    if (!w) throw InvalidInput("SuperSpace: basis vector '" + basis_[i].name + "' has no weight");
    return *w;
}

int SuperSpace::position_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw InvalidInput("SuperSpace: unknown basis name '" + name + "'");
    return it->second;
}

SuperSpace SuperSpace::dual() const {
    std::vector<BasisVector> dual_basis;
    dual_basis.reserve(basis_.size());
    for (const auto& b : basis_) {
        BasisVector d;
        d.name = b.name + "*";
        d.parity = b.parity;
        if (b.z_degree) d.z_degree = -*b.z_degree;
        if (b.weight) d.weight = weight_negate(*b.weight);
        dual_basis.push_back(std::move(d));
    }
    return SuperSpace(std::move(dual_basis));
}

std::vector<int> WedgeIndex::factors() const {
    std::vector<int> f = even;
    f.insert(f.end(), odd.begin(), odd.end());
    return f;
}

NormalizedWedge wedge_normalize(const SuperSpace& space, const std::vector<int>& factors) {
    NormalizedWedge out;
    // canonical order: even factors before odd, each ascending.  Insertion
    // sort, so every adjacent swap contributes its own sign.
    struct Key {
        int odd;
        int pos;
    };
    std::vector<Key> keys;
    keys.reserve(factors.size());
    for (int f : factors) {
        if (f < 0 || f >= space.dim())
            throw DimensionMismatch("wedge_normalize: factor position out of range");
        keys.push_back({space.parity(f), f});
    }

    int sign = 1;
    for (std::size_t i = 1; i < keys.size(); ++i) {
        for (std::size_t j = i; j > 0; --j) {
            const Key& a = keys[j - 1];
            const Key& b = keys[j];
            bool swap_needed = (a.odd > b.odd) || (a.odd == b.odd && a.pos > b.pos);
            if (!swap_needed) break;
            // adjacent swap of x,y multiplies by -(-1)^{|x||y|}
            if (!(a.odd == 1 && b.odd == 1)) sign = -sign;
            std::swap(keys[j - 1], keys[j]);
        }
    }

    for (std::size_t i = 0; i + 1 < keys.size(); ++i) {
        if (keys[i].odd == 0 && keys[i].pos == keys[i + 1].pos) {
            out.zero = true;
            return out;
        }
    }

    out.sign = sign;
    for (const Key& k : keys) (k.odd ? out.index.odd : out.index.even).push_back(k.pos);
    return out;
}

WeightVec wedge_weight(const SuperSpace& space, const WedgeIndex& idx, int n) {
    WeightVec w(static_cast<std::size_t>(n), 0);
    for (int f : idx.even) w = weight_add(w, space.weight(f));
    for (int f : idx.odd) w = weight_add(w, space.weight(f));
    return w;
}

int wedge_parity(const SuperSpace& space, const WedgeIndex& idx) {
    int p = 0;
    for (int f : idx.even) p ^= space.parity(f);
    for (int f : idx.odd) p ^= space.parity(f);
    return p;
}

std::string wedge_label(const SuperSpace& space, const WedgeIndex& idx) {
    if (idx.size() == 0) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& name, int power) {
        if (!first) os << "∧";
        first = false;
        os << name;
        if (power > 1) os << "^" << power;
    };
    for (int f : idx.even) emit(space.vec(f).name, 1);
    for (std::size_t i = 0; i < idx.odd.size();) {
        std::size_t j = i;
        while (j < idx.odd.size() && idx.odd[j] == idx.odd[i]) ++j;
        emit(space.vec(idx.odd[i]).name, static_cast<int>(j - i));
        i = j;
    }
    return os.str();
}

namespace {

std::uint64_t binom_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace

std::uint64_t wedge_dim(int even_count, int odd_count, int p, std::uint64_t cap) {
    std::uint64_t total = 0;
    for (int k = 0; k <= std::min(even_count, p); ++k) {
        int rest = p - k;
        std::uint64_t ways_even = binom_capped(even_count, k, cap);
        std::uint64_t ways_odd =
            rest == 0 ? 1
                      : (odd_count == 0 ? 0 : binom_capped(odd_count + rest - 1, rest, cap));
        if (ways_even > cap || ways_odd > cap) return cap + 1;
        unsigned __int128 prod = static_cast<unsigned __int128>(ways_even) * ways_odd;
        if (prod > cap) return cap + 1;
        total += static_cast<std::uint64_t>(prod);
        if (total > cap) return cap + 1;
    }
    return total;
}

namespace {

// Walks all (even subset, odd multiset) pairs of total size p in canonical
// order and hands each index to sink.
void enumerate_indices(const SuperSpace& v, int p,
                       const std::function<void(WedgeIndex&&)>& sink) {
    const auto& even = v.even_positions();
    const auto& odd = v.odd_positions();

    std::vector<int> even_part, odd_part;
    std::function<void(std::size_t, int)> rec_odd = [&](std::size_t start, int remaining) {
        if (remaining == 0) {
            WedgeIndex idx;
            idx.even = even_part;
            idx.odd = odd_part;
            sink(std::move(idx));
            return;
        }
        for (std::size_t i = start; i < odd.size(); ++i) {
            odd_part.push_back(odd[i]);
            rec_odd(i, remaining - 1);      // odd factors may repeat
            odd_part.pop_back();
        }
    };
    std::function<void(std::size_t, int)> rec_even = [&](std::size_t start, int remaining) {
        rec_odd(0, remaining);
        if (remaining == 0) return;
        for (std::size_t i = start; i < even.size(); ++i) {
            even_part.push_back(even[i]);
            rec_even(i + 1, remaining - 1);
            even_part.pop_back();
        }
    };
    rec_even(0, p);
}

} // namespace

int WedgeSpace::position_of(const WedgeIndex& idx) const {
    auto it = position_.find(idx);
    return it == position_.end() ? -1 : it->second;
}

WedgeSpace wedge_power(const SuperSpace& v, int p, std::uint64_t dim_cap) {
    if (p < 0) throw InvalidInput("wedge_power: negative degree");
    std::uint64_t d = wedge_dim(v.even_count(), v.odd_count(), p, dim_cap);
    if (d > dim_cap)
        throw ResourceLimit("wedge_power: dimension exceeds cap " + std::to_string(dim_cap));

    WedgeSpace w;
    w.base_ = v;
    w.p_ = p;
    w.basis_.reserve(static_cast<std::size_t>(d));
    enumerate_indices(v, p, [&](WedgeIndex&& idx) { w.basis_.push_back(std::move(idx)); });
    for (int i = 0; i < w.dim(); ++i) w.position_[w.basis_[i]] = i;
    return w;
}

WedgeSpace wedge_power_filtered(const SuperSpace& v, int p,
                                const std::function<bool(const WeightVec&)>& keep,
                                int n, std::uint64_t walk_cap) {
    if (p < 0) throw InvalidInput("wedge_power_filtered: negative degree");
    std::uint64_t ambient = wedge_dim(v.even_count(), v.odd_count(), p, walk_cap);
    if (ambient > walk_cap)
        throw ResourceLimit("wedge_power_filtered: ambient dimension exceeds walk cap " +
                            std::to_string(walk_cap));

    WedgeSpace w;
    w.base_ = v;
    w.p_ = p;
    enumerate_indices(v, p, [&](WedgeIndex&& idx) {
        if (keep(wedge_weight(v, idx, n))) w.basis_.push_back(std::move(idx));
    });
    for (int i = 0; i < w.dim(); ++i) w.position_[w.basis_[i]] = i;
    return w;
}

SparseVec wedge_derivation_apply(const WedgeSpace& w, const std::vector<SparseVec>& base_images,
                                 int pos) {
    const SuperSpace& v = w.base();
    if (static_cast<int>(base_images.size()) != v.dim())
        throw DimensionMismatch("wedge_derivation_apply: operator shape mismatch");

    SparseVec out;
    std::vector<int> factors = w.index(pos).factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (const auto& [target, c] : base_images[factors[i]]) {
            std::vector<int> replaced = factors;
            replaced[i] = target;
            NormalizedWedge nw = wedge_normalize(v, replaced);
            if (nw.zero) continue;
            int j = w.position_of(nw.index);
            if (j < 0) continue;           // outside a filtered basis
            Rational term = c * Rational(nw.sign);
            auto it = out.find(j);
            if (it == out.end()) {
                out.emplace(j, term);
            } else {
                it->second += term;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

} // namespace wn
