#include "wn/cohomology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wn {

PairName parse_pair(const std::string& text) {
    if (text == "g:g0") return PairName::g_g0;
    if (text == "f:f0") return PairName::f_f0;
    if (text == "ftilde:ftilde0") return PairName::ftilde_ftilde0;
    throw InvalidInput("unknown pair '" + text + "' (expected g:g0, f:f0 or ftilde:ftilde0)");
}

std::string pair_label(PairName p) {
    switch (p) {
    case PairName::g_g0: return "g:g0";
    case PairName::f_f0: return "f:f0";
    case PairName::ftilde_ftilde0: return "ftilde:ftilde0";
    }
    return "?";
}

namespace {

std::vector<std::int64_t> project_weight(const WeightVec& w, const std::vector<int>& comps) {
    std::vector<std::int64_t> out;
    out.reserve(comps.size());
    for (int c : comps) out.push_back(w.at(c));
    return out;
}

struct PairData {
    std::vector<int> base;
    std::vector<int> torus_components;   // 0-based
    std::vector<int> offdiag;
};

PairData pair_data(const WAlgebra& w, PairName pair) {
    PairData d;
    const int n = w.n();
    switch (pair) {
    case PairName::g_g0: {
        for (int idx = 0; idx < w.dim(); ++idx)
            if (w.z_degree(idx) != 0) d.base.push_back(idx);
        for (int i = 0; i < n; ++i) d.torus_components.push_back(i);
        // simple raising and lowering generators; together with the diagonal
        // matching they cut out the same kernel as all of g0, since every
        // e_{ij} is an iterated bracket of simple ones
        for (int i = 1; i < n; ++i) {
            d.offdiag.push_back(w.index_of(1u << (i - 1), i + 1));
            d.offdiag.push_back(w.index_of(1u << i, i));
        }
        break;
    }
    case PairName::f_f0: {
        d.base.push_back(w.index_of(0, 1));
        for (int i = 2; i <= n; ++i) d.base.push_back(w.index_of(1u | (1u << (i - 1)), i));
        for (int i = 0; i < n; ++i) d.torus_components.push_back(i);
        break;
    }
    case PairName::ftilde_ftilde0: {
        d.base.push_back(w.index_of(0, 1));
        for (int i = 2; i <= n; ++i) d.base.push_back(w.index_of(1u | (1u << (i - 1)), i));
        for (int i = 1; i < n; ++i) d.torus_components.push_back(i);
        break;
    }
    }
    return d;
}

SuperSpace space_from_indices(const WAlgebra& w, const std::vector<int>& indices) {
    std::vector<BasisVector> vecs;
    vecs.reserve(indices.size());
    for (int idx : indices) {
        BasisVector b;
        b.name = w.name(idx);
        b.parity = w.parity(idx);
        b.z_degree = w.z_degree(idx);
        b.weight = w.weight(idx);
        vecs.push_back(std::move(b));
    }
    return SuperSpace(std::move(vecs));
}

// matched coordinates + (optionally) the equivariant basis
CochainSpace build_matched(const WAlgebra& w, const std::vector<int>& base,
                           const std::vector<int>& torus_components, const Supermodule& M,
                           int p, const Caps& caps) {
    CochainSpace cs;
    cs.p = p;

    SuperSpace base_space = space_from_indices(w, base);
    cs.ambient_wedge_dim =
        wedge_dim(base_space.even_count(), base_space.odd_count(), p, caps.walk_cap);

    std::set<std::vector<std::int64_t>> module_projections;
    for (int m = 0; m < M.dim(); ++m)
        module_projections.insert(project_weight(M.weight(m), torus_components));

    cs.wedge = wedge_power_filtered(
        base_space, p,
        [&](const WeightVec& mu) {
            return module_projections.count(project_weight(mu, torus_components)) > 0;
        },
        w.n(), caps.walk_cap);

    for (int pos = 0; pos < cs.wedge.dim(); ++pos) {
        auto proj = project_weight(wedge_weight(base_space, cs.wedge.index(pos), w.n()),
                                   torus_components);
        for (int m = 0; m < M.dim(); ++m) {
            if (project_weight(M.weight(m), torus_components) == proj) {
                cs.coord_pos[{pos, m}] = static_cast<int>(cs.coords.size());
                cs.coords.emplace_back(pos, m);
            }
        }
        if (cs.coords.size() > caps.dim_cap)
            throw ResourceLimit("cochain coordinate count exceeds cap " +
                                std::to_string(caps.dim_cap));
    }
    return cs;
}

// [u, base[j]] projected onto the base positions
std::vector<SparseVec> base_adjoint_images(const WAlgebra& w, const std::vector<int>& base,
                                           int u_index) {
    std::map<int, int> pos_of;
    for (std::size_t j = 0; j < base.size(); ++j) pos_of[base[j]] = static_cast<int>(j);
    std::vector<SparseVec> images(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) {
        for (const auto& [idx, cf] : w.bracket_basis(u_index, base[j])) {
            auto it = pos_of.find(idx);
            if (it != pos_of.end()) images[j][it->second] = Rational(cf);
        }
    }
    return images;
}

} // namespace

CochainSpace build_cochain_space(const WAlgebra& w, const std::vector<int>& base,
                                 const std::vector<int>& torus_components,
                                 const std::vector<int>& offdiag, const Supermodule& M, int p,
                                 const Caps& caps) {
    CochainSpace cs = build_matched(w, base, torus_components, M, p, caps);
    const int ncoords = static_cast<int>(cs.coords.size());
    const SuperSpace& bs = cs.wedge.base();

    std::vector<std::vector<int>> matched_ms(cs.wedge.dim());
    for (const auto& [wm, id] : cs.coord_pos) matched_ms[wm.first].push_back(wm.second);

    SparseMatrix constraints(0, ncoords);
    for (int u : offdiag) {
        const SparseMatrix& a = M.action(u);
        std::vector<SparseVec> a_cols(M.dim());
        for (int r = 0; r < a.rows(); ++r)
            for (const auto& [c, v] : a.row(r)) a_cols[c][r] = v;

        std::vector<SparseVec> b_img = base_adjoint_images(w, base, u);
        std::vector<std::vector<std::pair<int, Rational>>> rev(base.size());
        for (std::size_t j = 0; j < base.size(); ++j)
            for (const auto& [tgt, cf] : b_img[j]) rev[tgt].push_back({static_cast<int>(j), cf});

        // candidate row wedges: every stored index plus the single-factor
        // reverse replacements of stored indices
        std::set<WedgeIndex> candidates;
        for (int pos = 0; pos < cs.wedge.dim(); ++pos) {
            const WedgeIndex& idx = cs.wedge.index(pos);
            candidates.insert(idx);
            std::vector<int> fs = idx.factors();
            for (std::size_t k = 0; k < fs.size(); ++k) {
                for (const auto& [src, cf] : rev[fs[k]]) {
                    std::vector<int> repl = fs;
                    repl[k] = src;
                    NormalizedWedge nw = wedge_normalize(bs, repl);
                    if (!nw.zero) candidates.insert(nw.index);
                }
            }
        }

        std::map<std::pair<WedgeIndex, int>, SparseVec> rows;

        // A-part: u acting on the values
        for (int id = 0; id < ncoords; ++id) {
            auto [pos, m] = cs.coords[id];
            for (const auto& [mp, v] : a_cols[m]) rows[{cs.wedge.index(pos), mp}][id] += v;
        }

        // B-part: u acting on the wedge argument
        for (const WedgeIndex& cand : candidates) {
            std::vector<int> fs = cand.factors();
            std::map<int, Rational> image;   // stored wedge position -> coeff
            for (std::size_t k = 0; k < fs.size(); ++k) {
                for (const auto& [tgt, cf] : b_img[fs[k]]) {
                    std::vector<int> repl = fs;
                    repl[k] = tgt;
                    NormalizedWedge nw = wedge_normalize(bs, repl);
                    if (nw.zero) continue;
                    int pos = cs.wedge.position_of(nw.index);
                    if (pos < 0) continue;   // hits only unmatched coordinates
                    image[pos] += cf * Rational(nw.sign);
                }
            }
            for (const auto& [pos, cf] : image) {
                if (cf.is_zero()) continue;
                for (int m : matched_ms[pos]) {
                    auto& row = rows[{cand, m}];
                    auto it = row.find(cs.coord_pos.at({pos, m}));
                    if (it == row.end()) {
                        row.emplace(cs.coord_pos.at({pos, m}), -cf);
                    } else {
                        it->second -= cf;
                        if (it->second.is_zero()) row.erase(it);
                    }
                }
            }
        }

        for (auto& [key, row] : rows)
            if (!row.empty()) constraints.append_row(row);
    }

    cs.basis = (constraints.rows() == 0) ? Subspace::full(ncoords) : kernel(constraints);

    cs.basis_parity.resize(cs.basis.dim());
    for (int k = 0; k < cs.basis.dim(); ++k) {
        const SparseVec& row = cs.basis.basis().row(k);
        int par = -1;
        for (const auto& [id, v] : row) {
            auto [pos, m] = cs.coords[id];
            int pr = wedge_parity(bs, cs.wedge.index(pos)) ^ M.parity(m);
            if (par == -1)
                par = pr;
            else if (par != pr)
                throw Error("cochain basis vector is not parity-homogeneous");
        }
        cs.basis_parity[k] = par < 0 ? 0 : par;
    }
    return cs;
}

RelativeComplex::RelativeComplex(const WAlgebra& w, PairName pair, Supermodule coefficients,
                                 Caps caps)
    : w_(&w), pair_(pair), coeffs_(std::move(coefficients)), caps_(caps) {
    if (coeffs_.n() != w.n()) throw DimensionMismatch("RelativeComplex: rank mismatch");
    PairData d = pair_data(w, pair);
    base_ = d.base;
    torus_components_ = d.torus_components;
    offdiag_ = d.offdiag;
    base_space_ = space_from_indices(w, base_);
    for (int idx : base_)
        if (!coeffs_.has_action(idx))
            throw InvalidInput("RelativeComplex: coefficient module lacks the action of " +
                               w.name(idx));
}

const CochainSpace& RelativeComplex::cochains(int p) {
    auto it = cochain_cache_.find(p);
    if (it == cochain_cache_.end()) {
        it = cochain_cache_
                 .emplace(p, build_cochain_space(*w_, base_, torus_components_, offdiag_,
                                                 coeffs_, p, caps_))
                 .first;
    }
    return it->second;
}

SparseMatrix RelativeComplex::differential_coords(int p) {
    auto cached = diff_coord_cache_.find(p);
    if (cached != diff_coord_cache_.end()) return cached->second;

    const CochainSpace& cp = cochains(p);
    CochainSpace tgt = build_matched(*w_, base_, torus_components_, coeffs_, p + 1, caps_);

    std::map<int, int> base_pos;   // W index -> base position
    for (std::size_t j = 0; j < base_.size(); ++j) base_pos[base_[j]] = static_cast<int>(j);

    SparseMatrix out(static_cast<int>(tgt.coords.size()), cp.basis.dim());

    for (int k = 0; k < cp.basis.dim(); ++k) {
        // phi(w) per stored source wedge, as a sparse vector over module indices
        std::map<int, SparseVec> phi;
        for (const auto& [id, v] : cp.basis.basis().row(k)) {
            auto [pos, m] = cp.coords[id];
            phi[pos][m] = v;
        }
        const int phi_parity = cp.basis_parity[k];

        for (int tpos = 0; tpos < tgt.wedge.dim(); ++tpos) {
            std::vector<int> xs = tgt.wedge.index(tpos).factors();
            const int np = static_cast<int>(xs.size());
            std::vector<int> par(np);
            for (int i = 0; i < np; ++i) par[i] = base_space_.parity(xs[i]);
            std::vector<int> prefix(np + 1, 0);   // prefix[i] = par[0] + .. + par[i-1]
            for (int i = 0; i < np; ++i) prefix[i + 1] = prefix[i] + par[i];

            SparseVec value;   // module index -> coefficient of d(phi)(w')

            // first sum of the differential: bracket insertions
            for (int i = 0; i < np; ++i) {
                for (int j = i + 1; j < np; ++j) {
                    for (const auto& [widx, icf] :
                         w_->bracket_basis(base_[xs[i]], base_[xs[j]])) {
                        auto bp = base_pos.find(widx);
                        if (bp == base_pos.end()) continue;   // lands in t: zero in g/t
                        std::vector<int> rest;
                        rest.reserve(np - 1);
                        rest.push_back(bp->second);
                        for (int r = 0; r < np; ++r)
                            if (r != i && r != j) rest.push_back(xs[r]);
                        NormalizedWedge nw = wedge_normalize(base_space_, rest);
                        if (nw.zero) continue;
                        int spos = cp.wedge.position_of(nw.index);
                        if (spos < 0) continue;               // phi vanishes there
                        auto pv = phi.find(spos);
                        if (pv == phi.end()) continue;
                        // sigma_{i,j} with 1-based positions
                        int sigma = (i + 1) + (j + 1) + par[i] * prefix[i] +
                                    par[j] * (prefix[j] + par[i]);
                        Rational coeff = Rational((sigma & 1) ? -1 : 1) * Rational(icf) *
                                         Rational(nw.sign);
                        axpy(value, coeff, pv->second);
                    }
                }
            }

            // second sum: module action terms
            for (int i = 0; i < np; ++i) {
                std::vector<int> rest;
                rest.reserve(np - 1);
                for (int r = 0; r < np; ++r)
                    if (r != i) rest.push_back(xs[r]);
                NormalizedWedge nw = wedge_normalize(base_space_, rest);
                if (nw.zero) throw Error("differential: removal produced zero wedge");
                int spos = cp.wedge.position_of(nw.index);
                if (spos < 0) continue;
                auto pv = phi.find(spos);
                if (pv == phi.end()) continue;
                int gamma = (i + 1) + 1 + par[i] * (prefix[i] + phi_parity);
                SparseVec acted = coeffs_.action(base_[xs[i]]).apply(pv->second);
                axpy(value, Rational((gamma & 1) ? -1 : 1) * Rational(nw.sign), acted);
            }

            for (const auto& [m, v] : value) {
                auto cid = tgt.coord_pos.find({tpos, m});
                if (cid == tgt.coord_pos.end())
                    throw Error("differential image leaves the torus-matched coordinates");
                out.set(cid->second, k, v);
            }
        }
    }

    diff_coord_cache_.emplace(p, out);
    return out;
}

SparseMatrix RelativeComplex::differential(int p) {
    SparseMatrix coords = differential_coords(p);
    const CochainSpace& tgt = cochains(p + 1);
    SparseMatrix out(tgt.basis.dim(), coords.cols());
    for (int k = 0; k < coords.cols(); ++k) {
        SparseVec col;
        for (int r = 0; r < coords.rows(); ++r) {
            Rational v = coords.at(r, k);
            if (!v.is_zero()) col[r] = v;
        }
        std::vector<Rational> rel = tgt.basis.coordinates_of(col);   // throws if ill-defined
        for (int r = 0; r < tgt.basis.dim(); ++r)
            if (!rel[r].is_zero()) out.set(r, k, rel[r]);
    }
    return out;
}

int RelativeComplex::cohomology_dim(int p) {
    if (p < 0) throw InvalidInput("cohomology_dim: negative degree");
    int dim_p = cochains(p).dim();
    int rank_d_p = rank(differential_coords(p));
    int rank_d_prev = (p == 0) ? 0 : rank(differential_coords(p - 1));
    return dim_p - rank_d_p - rank_d_prev;
}

std::string HilbertTable::to_text() const {
    std::ostringstream os;
    os << label << " (n=" << n << ")\n";
    for (const auto& [p, d] : dims) os << "  p=" << p << ": " << d << "\n";
    if (truncated) os << "  truncated at p=" << truncated_at << "\n";
    return os.str();
}

std::string HilbertTable::to_json() const {
    std::ostringstream os;
    os << "{\"n\":" << n << ",\"pair\":\"" << label << "\",\"dims\":{";
    bool first = true;
    for (const auto& [p, d] : dims) {
        if (!first) os << ",";
        first = false;
        os << "\"" << p << "\":" << d;
    }
    os << "},\"cutoff\":" << cutoff << ",\"status\":\""
       << (truncated ? "truncated" : "complete") << "\"";
    if (truncated) os << ",\"truncated_at\":" << truncated_at;
    os << "}";
    return os.str();
}

int relative_cochain_dim(const WAlgebra& w, PairName pair, const Supermodule& M, int p,
                         Caps caps) {
    RelativeComplex cpx(w, pair, M, caps);
    return cpx.cochains(p).dim();
}

HilbertTable cohomology_table(const WAlgebra& w, PairName pair, const Supermodule& M,
                              int max_degree, Caps caps) {
    HilbertTable t;
    t.n = w.n();
    t.label = pair_label(pair);
    t.cutoff = max_degree;
    RelativeComplex cpx(w, pair, M, caps);
    for (int p = 0; p <= max_degree; ++p) {
        try {
            t.dims[p] = cpx.cohomology_dim(p);
        } catch (const ResourceLimit&) {
            t.truncated = true;
            t.truncated_at = p;
            break;
        }
    }
    return t;
}

namespace {

HilbertTable invariant_table_for_base(const WAlgebra& w, const std::vector<int>& base,
                                      const std::string& label, int max_degree,
                                      const Caps& caps) {
    HilbertTable t;
    t.n = w.n();
    t.label = label;
    t.cutoff = max_degree;
    PairData d = pair_data(w, PairName::g_g0);
    Supermodule triv = trivial_module(w);
    for (int p = 0; p <= max_degree; ++p) {
        try {
            CochainSpace cs =
                build_cochain_space(w, base, d.torus_components, d.offdiag, triv, p, caps);
            t.dims[p] = cs.dim();
        } catch (const ResourceLimit&) {
            t.truncated = true;
            t.truncated_at = p;
            break;
        }
    }
    return t;
}

} // namespace

HilbertTable invariant_hilbert_table(const WAlgebra& w, int max_degree, Caps caps) {
    std::vector<int> base;
    for (int idx = 0; idx < w.dim(); ++idx)
        if (w.z_degree(idx) == -1 || w.z_degree(idx) == 1) base.push_back(idx);
    return invariant_table_for_base(w, base, "invariants", max_degree, caps);
}

HilbertTable f_cohomology_table(const WAlgebra& w, int max_degree, Caps caps) {
    HilbertTable t;
    t.n = w.n();
    t.label = pair_label(PairName::f_f0);
    t.cutoff = max_degree;
    RelativeComplex cpx(w, PairName::f_f0, trivial_module(w), caps);
    for (int p = 0; p <= max_degree; ++p) {
        try {
            t.dims[p] = cpx.cohomology_dim(p);
        } catch (const ResourceLimit&) {
            t.truncated = true;
            t.truncated_at = p;
            break;
        }
    }
    return t;
}

CutCheckReport verify_cut_theorem(const WAlgebra& w, int p, Caps caps) {
    CutCheckReport rep;
    rep.p = p;
    PairData d = pair_data(w, PairName::g_g0);
    Supermodule triv = trivial_module(w);

    std::vector<int> full_base, trunc_base;
    for (int idx = 0; idx < w.dim(); ++idx) {
        if (w.z_degree(idx) != 0) full_base.push_back(idx);
        if (w.z_degree(idx) == -1 || w.z_degree(idx) == 1) trunc_base.push_back(idx);
    }
    rep.full_dim =
        build_cochain_space(w, full_base, d.torus_components, d.offdiag, triv, p, caps).dim();
    rep.truncated_dim =
        build_cochain_space(w, trunc_base, d.torus_components, d.offdiag, triv, p, caps).dim();
    rep.equal = rep.full_dim == rep.truncated_dim;
    return rep;
}

RestrictionReport restriction_map(const WAlgebra& w, int p, Caps caps) {
    RestrictionReport rep;
    rep.p = p;

    RelativeComplex cg(w, PairName::g_g0, trivial_module(w), caps);
    RelativeComplex cf(w, PairName::f_f0, trivial_module(w), caps);
    const CochainSpace& src = cg.cochains(p);
    const CochainSpace& tgt = cf.cochains(p);
    rep.source_dim = src.dim();
    rep.target_dim = tgt.dim();
    rep.sigma_invariant_dim =
        (p % 2 == 0) ? static_cast<int>(partitions_at_most(p / 2, w.n() - 1)) : 0;

    // positions of the f_1 monomials inside the g/g0 complement space
    PairData dg = pair_data(w, PairName::g_g0);
    PairData df = pair_data(w, PairName::f_f0);
    std::map<int, int> g_pos;
    for (std::size_t j = 0; j < dg.base.size(); ++j) g_pos[dg.base[j]] = static_cast<int>(j);
    std::vector<int> f_to_g(df.base.size());
    for (std::size_t j = 0; j < df.base.size(); ++j) f_to_g[j] = g_pos.at(df.base[j]);
    for (std::size_t j = 1; j < f_to_g.size(); ++j)
        if (f_to_g[j - 1] >= f_to_g[j]) throw Error("restriction_map: position map not monotone");

    SparseMatrix restriction(static_cast<int>(tgt.coords.size()), src.dim());
    for (int k = 0; k < src.dim(); ++k) {
        const SparseVec& row = src.basis.basis().row(k);
        for (int t = 0; t < static_cast<int>(tgt.coords.size()); ++t) {
            auto [fpos, m] = tgt.coords[t];
            WedgeIndex fw = tgt.wedge.index(fpos);
            WedgeIndex gw;
            for (int e : fw.even) gw.even.push_back(f_to_g[e]);
            for (int o : fw.odd) gw.odd.push_back(f_to_g[o]);
            int gpos = src.wedge.position_of(gw);
            if (gpos < 0) continue;
            auto cid = src.coord_pos.find({gpos, m});
            if (cid == src.coord_pos.end()) continue;
            auto it = row.find(cid->second);
            if (it != row.end()) restriction.set(t, k, it->second);
        }
    }

    rep.image_dim = rank(restriction);
    rep.injective = rep.image_dim == rep.source_dim;
    rep.image_matches = rep.image_dim == rep.sigma_invariant_dim;
    return rep;
}

std::int64_t partitions_at_most(int m, int k) {
    if (m < 0) return 0;
    // partitions of m into parts of size at most k equal partitions into at
    // most k parts (conjugation)
    std::vector<std::int64_t> dp(m + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= k; ++part)
        for (int s = part; s <= m; ++s) dp[s] += dp[s - part];
    return dp[m];
}

} // namespace wn
