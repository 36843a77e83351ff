#include "wn/walgebra.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>

namespace wn {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

// Sign of the shuffle sorting (A ascending, B ascending) into one ascending
// list; A and B must be disjoint.
int shuffle_sign(std::uint32_t a, std::uint32_t b) {
    int inversions = 0;
    for (std::uint32_t rest = b; rest;) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += popcount(a >> (bit + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

// Sign picked up by d_i acting through the factors of xi_J below i.
int deriv_sign(int i, std::uint32_t j_mask) {
    std::uint32_t below = j_mask & ((1u << (i - 1)) - 1u);
    return (popcount(below) & 1) ? -1 : 1;
}

void lambda_add(LambdaElement& dst, std::uint32_t mask, const Rational& c) {
    if (c.is_zero()) return;
    auto it = dst.find(mask);
    if (it == dst.end()) {
        dst.emplace(mask, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

} // namespace

WAlgebra::WAlgebra(int n) : n_(n) {
    if (n < 2) throw UnsupportedRank("W(n) requires n >= 2, got n = " + std::to_string(n));
    // the dense structure-constant table is quadratic in dim = n 2^n
    if (n > 8) throw UnsupportedRank("W(n) with n > 8 exceeds the structure-table budget");

    // canonical order: z-degree ascending, then mask, then i
    for (int size = 0; size <= n; ++size) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (popcount(mask) != size) continue;
            for (int i = 1; i <= n; ++i) basis_.push_back(WBasisElement{mask, i});
        }
    }
    for (int idx = 0; idx < dim(); ++idx) index_[basis_[idx]] = idx;

    degree_.resize(dim());
    parity_.resize(dim());
    weight_.resize(dim());
    for (int idx = 0; idx < dim(); ++idx) {
        const auto& e = basis_[idx];
        int sz = popcount(e.mask);
        degree_[idx] = sz - 1;
        parity_[idx] = (sz - 1) & 1;
        WeightVec w(static_cast<std::size_t>(n), 0);
        for (int j = 1; j <= n; ++j)
            if (e.mask & (1u << (j - 1))) w[j - 1] += 1;
        w[e.i - 1] -= 1;
        weight_[idx] = std::move(w);
    }

    table_.resize(static_cast<std::size_t>(dim()) * dim());
    for (int a = 0; a < dim(); ++a)
        for (int b = 0; b < dim(); ++b)
            table_[static_cast<std::size_t>(a) * dim() + b] = bracket_monomials(basis_[a], basis_[b]);
}

int WAlgebra::index_of(const WBasisElement& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw InvalidInput("WAlgebra: basis element outside rank " + std::to_string(n_));
    return it->second;
}

std::string WAlgebra::name(int idx) const {
    const auto& e = basis_.at(idx);
    std::ostringstream os;
    os << "xi{";
    bool first = true;
    for (int j = 1; j <= n_; ++j) {
        if (e.mask & (1u << (j - 1))) {
            if (!first) os << ",";
            first = false;
            os << j;
        }
    }
    os << "}d" << e.i;
    return os.str();
}

int WAlgebra::parse_basis_name(const std::string& text) const {
    if (text.rfind("xi{", 0) != 0)
        throw InvalidInput("cannot parse basis element '" + text + "' (expected xi{...}d<j>)");
    std::size_t close = text.find('}');
    if (close == std::string::npos || close + 1 >= text.size() || text[close + 1] != 'd')
        throw InvalidInput("cannot parse basis element '" + text + "'");

    std::uint32_t mask = 0;
    std::string inner = text.substr(3, close - 3);
    if (!inner.empty()) {
        std::istringstream is(inner);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            int j = 0;
            try {
                j = std::stoi(tok);
            } catch (...) {
                throw InvalidInput("cannot parse subset entry '" + tok + "' in '" + text + "'");
            }
            if (j < 1 || j > n_) throw InvalidInput("index " + tok + " out of range in '" + text + "'");
            std::uint32_t bit = 1u << (j - 1);
            if (mask & bit) throw InvalidInput("repeated index in '" + text + "'");
            mask |= bit;
        }
    }
    int i = 0;
    try {
        i = std::stoi(text.substr(close + 2));
    } catch (...) {
        throw InvalidInput("cannot parse derivation index in '" + text + "'");
    }
    if (i < 1 || i > n_) throw InvalidInput("derivation index out of range in '" + text + "'");
    return index_of(mask, i);
}

int WAlgebra::graded_dim(int k) const {
    if (k < -1 || k > n_ - 1) return 0;
    // n * C(n, k+1)
    long long c = 1;
    for (int t = 1; t <= k + 1; ++t) c = c * (n_ - t + 1) / t;
    return static_cast<int>(n_ * c);
}

std::vector<int> WAlgebra::indices_of_degree(int k) const {
    std::vector<int> out;
    for (int idx = 0; idx < dim(); ++idx)
        if (degree_[idx] == k) out.push_back(idx);
    return out;
}

std::vector<int> WAlgebra::indices_of_degrees(const std::vector<int>& ks) const {
    std::vector<int> out;
    for (int idx = 0; idx < dim(); ++idx)
        if (std::find(ks.begin(), ks.end(), degree_[idx]) != ks.end()) out.push_back(idx);
    return out;
}

std::vector<std::pair<int, int>> WAlgebra::bracket_monomials(const WBasisElement& x,
                                                             const WBasisElement& y) const {
    // [xi_I d_i, xi_J d_j] = xi_I d_i(xi_J) d_j - (-1)^{p(x)p(y)} xi_J d_j(xi_I) d_i
    std::map<int, int> acc;
    auto add = [&](std::uint32_t mask, int i, int coeff) {
        int idx = index_.at(WBasisElement{mask, i});
        acc[idx] += coeff;
        if (acc[idx] == 0) acc.erase(idx);
    };

    int px = (popcount(x.mask) - 1) & 1;
    int py = (popcount(y.mask) - 1) & 1;

    std::uint32_t bit_i = 1u << (x.i - 1);
    if (y.mask & bit_i) {
        std::uint32_t jprime = y.mask & ~bit_i;
        if ((x.mask & jprime) == 0)
            add(x.mask | jprime, y.i, deriv_sign(x.i, y.mask) * shuffle_sign(x.mask, jprime));
    }
    std::uint32_t bit_j = 1u << (y.i - 1);
    if (x.mask & bit_j) {
        std::uint32_t iprime = x.mask & ~bit_j;
        if ((y.mask & iprime) == 0) {
            int s = deriv_sign(y.i, x.mask) * shuffle_sign(y.mask, iprime);
            add(y.mask | iprime, x.i, ((px & py) ? 1 : -1) * s);
        }
    }

    std::vector<std::pair<int, int>> out(acc.begin(), acc.end());
    return out;
}

const std::vector<std::pair<int, int>>& WAlgebra::bracket_basis(int a, int b) const {
    return table_.at(static_cast<std::size_t>(a) * dim() + b);
}

WElement WAlgebra::basis_element(int idx) const {
    WElement e;
    e.n = n_;
    e.coords[idx] = 1;
    return e;
}

WElement WAlgebra::bracket(const WElement& x, const WElement& y) const {
    if (x.n != n_ || y.n != n_) throw DimensionMismatch("bracket: rank mismatch");
    WElement out;
    out.n = n_;
    for (const auto& [a, ca] : x.coords) {
        for (const auto& [b, cb] : y.coords) {
            Rational c = ca * cb;
            if (c.is_zero()) continue;
            for (const auto& [idx, s] : bracket_basis(a, b)) {
                auto it = out.coords.find(idx);
                if (it == out.coords.end()) {
                    out.coords.emplace(idx, c * Rational(s));
                } else {
                    it->second += c * Rational(s);
                    if (it->second.is_zero()) out.coords.erase(it);
                }
            }
        }
    }
    return out;
}

LambdaElement WAlgebra::apply_derivation(const WElement& x, const LambdaElement& a) const {
    if (x.n != n_) throw DimensionMismatch("apply_derivation: rank mismatch");
    LambdaElement out;
    for (const auto& [idx, cx] : x.coords) {
        const auto& e = basis_[idx];
        std::uint32_t bit_i = 1u << (e.i - 1);
        for (const auto& [mask, ca] : a) {
            if (!(mask & bit_i)) continue;
            std::uint32_t rest = mask & ~bit_i;
            if (e.mask & rest) continue;
            int s = deriv_sign(e.i, mask) * shuffle_sign(e.mask, rest);
            lambda_add(out, e.mask | rest, cx * ca * Rational(s));
        }
    }
    return out;
}

WElement WAlgebra::bracket_by_composition(const WElement& x, const WElement& y) const {
    if (x.n != n_ || y.n != n_) throw DimensionMismatch("bracket_by_composition: rank mismatch");

    // split by parity; the supercommutator sign needs homogeneous inputs
    auto split = [&](const WElement& v) {
        std::array<WElement, 2> parts;
        parts[0].n = parts[1].n = n_;
        for (const auto& [idx, c] : v.coords) parts[parity_[idx]].coords[idx] = c;
        return parts;
    };
    auto xs = split(x);
    auto ys = split(y);

    WElement out;
    out.n = n_;
    for (int px = 0; px < 2; ++px) {
        for (int py = 0; py < 2; ++py) {
            const WElement& xa = xs[px];
            const WElement& yb = ys[py];
            if (xa.is_zero() || yb.is_zero()) continue;
            for (int k = 1; k <= n_; ++k) {
                LambdaElement xi_k{{1u << (k - 1), Rational(1)}};
                LambdaElement xy = apply_derivation(xa, apply_derivation(yb, xi_k));
                LambdaElement yx = apply_derivation(yb, apply_derivation(xa, xi_k));
                int sign = (px & py) ? 1 : -1; // minus (-1)^{px py}
                for (const auto& [mask, c] : yx) lambda_add(xy, mask, c * Rational(sign));
                for (const auto& [mask, c] : xy) {
                    int idx = index_.at(WBasisElement{mask, k});
                    auto it = out.coords.find(idx);
                    if (it == out.coords.end()) {
                        out.coords.emplace(idx, c);
                    } else {
                        it->second += c;
                        if (it->second.is_zero()) out.coords.erase(it);
                    }
                }
            }
        }
    }
    return out;
}

WElement WAlgebra::beta(const WElement& x, const WElement& y) const {
    for (const auto& [idx, c] : x.coords)
        if (degree_[idx] != -1)
            throw InvalidInput("beta: first argument must lie in g_{-1}");
    for (const auto& [idx, c] : y.coords)
        if (degree_[idx] != 1)
            throw InvalidInput("beta: second argument must lie in g_1");
    return bracket(x, y);
}

SubalgebraSpec WAlgebra::subalgebra(SubalgebraName name) const {
    SubalgebraSpec spec;
    spec.name = name;
    auto push_index = [&](int idx) { spec.basis.push_back(basis_element(idx)); };

    switch (name) {
    case SubalgebraName::g0:
        for (int idx : indices_of_degree(0)) push_index(idx);
        break;
    case SubalgebraName::h:
        for (int i = 1; i <= n_; ++i) push_index(index_of(1u << (i - 1), i));
        break;
    case SubalgebraName::g_plus:
        for (int idx = 0; idx < dim(); ++idx)
            if (degree_[idx] >= 1) push_index(idx);
        break;
    case SubalgebraName::g_minus:
        for (int idx : indices_of_degree(-1)) push_index(idx);
        break;
    case SubalgebraName::b_max:
        for (int i = 1; i <= n_; ++i)
            for (int j = i; j <= n_; ++j) push_index(index_of(1u << (i - 1), j));
        for (int idx = 0; idx < dim(); ++idx)
            if (degree_[idx] >= 1) push_index(idx);
        break;
    case SubalgebraName::b_min:
        for (int i = 1; i <= n_; ++i)
            for (int j = i; j <= n_; ++j) push_index(index_of(1u << (i - 1), j));
        for (int idx : indices_of_degree(-1)) push_index(idx);
        break;
    case SubalgebraName::f:
        for (int i = 1; i <= n_; ++i) push_index(index_of(1u << (i - 1), i));
        push_index(index_of(0, 1));
        for (int i = 2; i <= n_; ++i) push_index(index_of(1u | (1u << (i - 1)), i));
        break;
    case SubalgebraName::f_tilde:
        for (int i = 2; i <= n_; ++i) push_index(index_of(1u << (i - 1), i));
        push_index(index_of(0, 1));
        for (int i = 2; i <= n_; ++i) push_index(index_of(1u | (1u << (i - 1)), i));
        break;
    case SubalgebraName::span_of:
        throw InvalidInput("subalgebra: span_of requires an explicit basis");
    }
    return spec;
}

SubalgebraSpec WAlgebra::span_of(std::vector<WElement> basis) const {
    SubalgebraSpec spec;
    spec.name = SubalgebraName::span_of;
    spec.basis = std::move(basis);
    return spec;
}

namespace {

SparseVec welement_coords(const WElement& x) { return x.coords; }

} // namespace

ClosureReport WAlgebra::check_subalgebra_closure(const SubalgebraSpec& spec) const {
    ClosureReport rep;
    SparseMatrix rows(0, dim());
    for (const auto& b : spec.basis) rows.append_row(welement_coords(b));
    Subspace span(dim(), rows);

    // parity decomposition for the graded checks; mixed-parity basis
    // elements only occur for span_of specs, where the Z2 check is skipped
    std::vector<int> elem_parity(spec.basis.size(), -1);
    bool all_homogeneous = true;
    std::array<SparseMatrix, 2> parity_rows{SparseMatrix(0, dim()), SparseMatrix(0, dim())};
    for (std::size_t k = 0; k < spec.basis.size(); ++k) {
        int p = -1;
        bool homogeneous = true;
        for (const auto& [idx, c] : spec.basis[k].coords) {
            if (p == -1)
                p = parity_[idx];
            else if (p != parity_[idx])
                homogeneous = false;
        }
        if (!homogeneous) {
            all_homogeneous = false;
        } else if (p >= 0) {
            elem_parity[k] = p;
            parity_rows[p].append_row(spec.basis[k].coords);
        }
    }
    std::array<Subspace, 2> parity_span{Subspace(dim(), parity_rows[0]),
                                        Subspace(dim(), parity_rows[1])};

    rep.closed = true;
    for (std::size_t a = 0; a < spec.basis.size(); ++a) {
        for (std::size_t b = 0; b < spec.basis.size(); ++b) {
            WElement br = bracket(spec.basis[a], spec.basis[b]);
            if (!span.contains(br.coords)) {
                rep.closed = false;
                rep.counterexamples.push_back(
                    {static_cast<int>(a), static_cast<int>(b), br});
                continue;
            }
            if (all_homogeneous && elem_parity[a] >= 0 && elem_parity[b] >= 0) {
                int target = elem_parity[a] ^ elem_parity[b];
                if (!parity_span[target].contains(br.coords)) {
                    rep.graded_ok = false;
                    rep.counterexamples.push_back(
                        {static_cast<int>(a), static_cast<int>(b), br});
                }
            }
            if (spec.name == SubalgebraName::f_tilde && elem_parity[a] == 0 && !br.is_zero()) {
                rep.graded_ok = false;
                rep.counterexamples.push_back({static_cast<int>(a), static_cast<int>(b), br});
            }
        }
    }

    std::ostringstream os;
    os << (rep.closed ? "closed" : "not closed");
    if (!rep.graded_ok) os << "; graded condition violated";
    rep.detail = os.str();
    return rep;
}

SuperSpace WAlgebra::component_space(const std::vector<int>& degrees) const {
    std::vector<BasisVector> vecs;
    for (int idx : indices_of_degrees(degrees)) {
        BasisVector b;
        b.name = name(idx);
        b.parity = parity_[idx];
        b.z_degree = degree_[idx];
        b.weight = weight_[idx];
        vecs.push_back(std::move(b));
    }
    return SuperSpace(std::move(vecs));
}

SuperSpace WAlgebra::algebra_space() const {
    std::vector<int> all;
    for (int k = -1; k <= n_ - 1; ++k) all.push_back(k);
    return component_space(all);
}

std::vector<RootDatum> WAlgebra::root_system() const {
    std::map<WeightVec, RootDatum> acc;
    for (int idx = 0; idx < dim(); ++idx) {
        auto& d = acc[weight_[idx]];
        if (d.multiplicity == 0) {
            d.root = weight_[idx];
            d.parity = parity_[idx];
        } else if (d.parity != parity_[idx]) {
            throw Error("root_system: mixed parity within one weight space");
        }
        d.multiplicity += 1;
    }
    std::vector<RootDatum> out;
    for (auto& [w, d] : acc) {
        // simple roots eps_i - eps_{i+1}
        int plus = -1, minus = -1;
        bool simple = true;
        for (int j = 0; j < n_; ++j) {
            if (w[j] == 1 && plus < 0)
                plus = j;
            else if (w[j] == -1 && minus < 0)
                minus = j;
            else if (w[j] != 0)
                simple = false;
        }
        d.simple = simple && plus >= 0 && minus == plus + 1;
        out.push_back(d);
    }
    return out;
}

Subspace WAlgebra::annihilator_in_g0(const WElement& x) const {
    std::vector<int> g0 = indices_of_degree(0);
    SparseMatrix m(dim(), static_cast<int>(g0.size()));
    for (std::size_t col = 0; col < g0.size(); ++col) {
        WElement br = bracket(basis_element(g0[col]), x);
        for (const auto& [idx, c] : br.coords) m.set(idx, static_cast<int>(col), c);
    }
    return kernel(m);
}

WElement WAlgebra::detecting_x0() const {
    WElement x;
    x.n = n_;
    x.coords[index_of(0, 1)] = 1;
    for (int l = 2; l <= n_; ++l)
        x.coords[index_of(1u | (1u << (l - 1)), l)] = Rational(l - 1);
    return x;
}

std::string WAlgebra::to_string(const WElement& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : x.coords) {
        if (!first) os << " + ";
        first = false;
        if (c == Rational(1))
            os << name(idx);
        else if (c == Rational(-1))
            os << "-" << name(idx);
        else
            os << c.to_string() << "*" << name(idx);
    }
    return os.str();
}

const WAlgebra& build_wn(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<WAlgebra>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<WAlgebra>(n)).first;
    return *it->second;
}

Subspace fixed_points(const SuperSpace& space, Torus torus, int n) {
    SparseMatrix rows(0, space.dim());
    for (int i = 0; i < space.dim(); ++i) {
        const WeightVec& w = space.weight(i);
        if (static_cast<int>(w.size()) != n)
            throw DimensionMismatch("fixed_points: weight length mismatch");
        bool fixed = true;
        for (int j = (torus == Torus::T ? 0 : 1); j < n; ++j)
            if (w[j] != 0) fixed = false;
        if (fixed) {
            SparseVec v;
            v[i] = 1;
            rows.append_row(v);
        }
    }
    return Subspace(space.dim(), rows);
}

BetaFiberReport verify_beta_fiber(const WAlgebra& w, const std::vector<Rational>& c,
                                  int trials, std::uint64_t seed) {
    const int n = w.n();
    BetaFiberReport rep;
    if (static_cast<int>(c.size()) != n)
        throw DimensionMismatch("verify_beta_fiber: expected " + std::to_string(n) + " coefficients");

    // Exhaustive polarized identity [[d_s, y], d_t] + [[d_t, y], d_s] = 0
    // over all basis monomials y of g_1.  It implies [beta(x), x_-] = 0 for
    // every x, which is what licenses the linear reduction below.
    rep.identity_check = true;
    std::vector<int> g1 = w.indices_of_degree(1);
    for (int s = 1; s <= n && rep.identity_check; ++s) {
        for (int t = s; t <= n && rep.identity_check; ++t) {
            WElement ds = w.basis_element(w.index_of(0, s));
            WElement dt = w.basis_element(w.index_of(0, t));
            for (int y : g1) {
                WElement ye = w.basis_element(y);
                WElement lhs = w.bracket(w.bracket(ds, ye), dt);
                WElement rhs = w.bracket(w.bracket(dt, ye), ds);
                WElement sum = lhs;
                for (const auto& [idx, v] : rhs.coords) {
                    auto it = sum.coords.find(idx);
                    if (it == sum.coords.end()) {
                        sum.coords.emplace(idx, v);
                    } else {
                        it->second += v;
                        if (it->second.is_zero()) sum.coords.erase(it);
                    }
                }
                if (!sum.is_zero()) {
                    rep.identity_check = false;
                    break;
                }
            }
        }
    }
    if (!rep.identity_check) {
        rep.status = BetaFiberReport::Status::mismatch;
        rep.detail = "bilinear identity [beta(x), x_-] = 0 failed";
        return rep;
    }

    // [h, d_t] = -c_t d_t, so beta(x) = h forces c_t a_t = 0 for all t.
    bool all_nonzero = true;
    for (const auto& ci : c)
        if (ci.is_zero()) all_nonzero = false;

    if (all_nonzero) {
        for (int t = 1; t <= n; ++t) rep.forced_zero_a.push_back(t);
        rep.status = BetaFiberReport::Status::empty_fiber;
        rep.detail = "all a_t forced to 0, hence beta(x) = 0 != h: empty fiber";
        return rep;
    }

    bool tail_nonzero = c[0].is_zero();
    for (int t = 2; t <= n && tail_nonzero; ++t)
        if (c[t - 1].is_zero()) tail_nonzero = false;
    if (!tail_nonzero) {
        rep.status = BetaFiberReport::Status::unsupported;
        rep.detail = "supported cases: all c_i nonzero, or c_1 = 0 with c_2..c_n nonzero";
        return rep;
    }

    for (int t = 2; t <= n; ++t) rep.forced_zero_a.push_back(t);

    // remaining ansatz x = a1 d_1 + sum b_{rsk} xi_r xi_s d_k; the system
    // beta(x) = h is linear in b once a1 is fixed
    std::vector<int> g1_cols = w.indices_of_degree(1);
    std::vector<int> g0_rows = w.indices_of_degree(0);
    std::map<int, int> g0_row_of;
    for (std::size_t r = 0; r < g0_rows.size(); ++r) g0_row_of[g0_rows[r]] = static_cast<int>(r);

    // predicted free coordinates: b_{r,s,k} with 1 < r < s
    std::vector<int> free_cols;
    for (std::size_t col = 0; col < g1_cols.size(); ++col) {
        const auto& e = w.element(g1_cols[col]);
        if (!(e.mask & 1u)) free_cols.push_back(static_cast<int>(col));
    }
    rep.free_b_count = static_cast<int>(free_cols.size());

    std::mt19937_64 rng(seed);
    auto small_nonzero = [&]() {
        std::uniform_int_distribution<int> num(1, 7), den(1, 7), sig(0, 1);
        Rational r(num(rng), den(rng));
        return sig(rng) ? r : -r;
    };

    WElement d1 = w.basis_element(w.index_of(0, 1));
    for (int trial = 0; trial < trials; ++trial) {
        Rational a1 = small_nonzero();

        // L b = h with L columns a1 * [d_1, y]
        SparseMatrix lhs(static_cast<int>(g0_rows.size()), static_cast<int>(g1_cols.size()));
        for (std::size_t col = 0; col < g1_cols.size(); ++col) {
            WElement br = w.bracket(d1, w.basis_element(g1_cols[col]));
            for (const auto& [idx, v] : br.coords) {
                if (w.z_degree(idx) != 0) throw Error("verify_beta_fiber: bracket left g_0");
                lhs.set(g0_row_of.at(idx), static_cast<int>(col), a1 * v);
            }
        }

        // predicted particular solution b_{1,l,l} = c_l / a1
        SparseVec particular;
        for (int l = 2; l <= n; ++l) {
            int idx = w.index_of(1u | (1u << (l - 1)), l);
            auto pos = std::find(g1_cols.begin(), g1_cols.end(), idx);
            particular[static_cast<int>(pos - g1_cols.begin())] = c[l - 1] / a1;
        }

        // check L * particular = h
        SparseVec image = lhs.apply(particular);
        SparseVec h_vec;
        for (int l = 1; l <= n; ++l) {
            if (c[l - 1].is_zero()) continue;
            h_vec[g0_row_of.at(w.index_of(1u << (l - 1), l))] = c[l - 1];
        }
        if (image != h_vec) {
            rep.status = BetaFiberReport::Status::mismatch;
            rep.detail = "predicted particular solution does not satisfy the system";
            return rep;
        }

        // kernel must be exactly the span of the free b coordinates
        Subspace ker = kernel(lhs);
        SparseMatrix free_rows(0, static_cast<int>(g1_cols.size()));
        for (int col : free_cols) {
            SparseVec v;
            v[col] = 1;
            free_rows.append_row(v);
        }
        if (!(ker == Subspace(static_cast<int>(g1_cols.size()), free_rows))) {
            rep.status = BetaFiberReport::Status::mismatch;
            rep.detail = "solution family differs from the predicted one";
            return rep;
        }
        rep.samples_checked += 1;
    }

    rep.status = BetaFiberReport::Status::family_match;
    rep.detail = "fiber equals the predicted family for every sampled a_1 (a_1 = 0 gives beta = 0 != h)";
    return rep;
}

} // namespace wn
