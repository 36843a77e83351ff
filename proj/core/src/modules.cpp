#include "wn/modules.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace wn {

Weight parse_weight(const std::string& text, int n) {
    Weight out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw InvalidInput("parse_weight: empty component in '" + text + "'");
        out.push_back(Rational::from_string(tok));
    }
    if (static_cast<int>(out.size()) != n)
        throw InvalidInput("parse_weight: expected " + std::to_string(n) + " components in '" +
                           text + "'");
    return out;
}

std::string weight_label(const Weight& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i].to_string();
    }
    return os.str();
}

bool is_dominant_integral(const Weight& w) {
    for (const auto& c : w)
        if (!c.is_integer()) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

WeightVec to_integer_weight(const Weight& w) {
    WeightVec out;
    out.reserve(w.size());
    for (const auto& c : w) out.push_back(c.to_long());
    return out;
}

std::int64_t weyl_dim(const Weight& lambda) {
    const int n = static_cast<int>(lambda.size());
    Rational acc(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            acc *= (lambda[i] - lambda[j] + Rational(j - i)) / Rational(j - i);
    return acc.to_long();
}

namespace {

// tensor words over the natural module: word[t] in [0, n)
struct TensorWord {
    static std::int64_t encode(const std::vector<int>& word, int n) {
        std::int64_t id = 0;
        for (int c : word) id = id * n + c;
        return id;
    }
};

WeightVec word_content(const std::vector<int>& word, int n) {
    WeightVec w(static_cast<std::size_t>(n), 0);
    for (int c : word) w[c] += 1;
    return w;
}

// enumerate all words of length d with a given content
void words_with_content(int n, int d, const WeightVec& content, std::vector<std::vector<int>>& out) {
    std::vector<int> word;
    WeightVec left = content;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(word.size()) == d) {
            out.push_back(word);
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (left[c] == 0) continue;
            left[c] -= 1;
            word.push_back(c);
            rec();
            word.pop_back();
            left[c] += 1;
        }
    };
    rec();
}

} // namespace

Supermodule simple_gl_module(const WAlgebra& w, const Weight& lambda) {
    const int n = w.n();
    if (static_cast<int>(lambda.size()) != n)
        throw InvalidInput("simple_gl_module: weight length mismatch");
    if (!is_dominant_integral(lambda))
        throw InvalidInput("simple_gl_module: weight " + weight_label(lambda) +
                           " is not dominant integral");

    WeightVec l = to_integer_weight(lambda);
    const std::int64_t twist = l[n - 1];
    WeightVec mu(l);
    for (auto& c : mu) c -= twist;
    int d = 0;
    for (auto c : mu) d += static_cast<int>(c);

    // dense coordinates on V^{(x) d}: word ids in base n
    std::int64_t tdim = 1;
    for (int t = 0; t < d; ++t) tdim *= n;
    if (tdim > 10000000)
        throw ResourceLimit("simple_gl_module: tensor power V^(x)" + std::to_string(d) +
                            " is too large");

    auto word_of_id = [&](std::int64_t id) {
        std::vector<int> word(d);
        for (int t = d - 1; t >= 0; --t) {
            word[t] = static_cast<int>(id % n);
            id /= n;
        }
        return word;
    };

    // e_{ij} acting on a sparse vector over word ids
    auto apply_eij = [&](int i, int j, const SparseVec& v) {
        SparseVec out;
        for (const auto& [id, coeff] : v) {
            std::vector<int> word = word_of_id(id);
            for (int t = 0; t < d; ++t) {
                if (word[t] != j) continue;
                std::vector<int> target = word;
                target[t] = i;
                std::int64_t tid = TensorWord::encode(target, n);
                auto it = out.find(static_cast<int>(tid));
                if (it == out.end()) {
                    out.emplace(static_cast<int>(tid), coeff);
                } else {
                    it->second += coeff;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        return out;
    };

    // highest-weight vectors: the mu-content words intersected with the
    // kernels of the simple raising operators
    std::vector<std::vector<int>> mu_words;
    words_with_content(n, d, mu, mu_words);
    if (mu_words.empty()) throw Error("simple_gl_module: empty weight space");

    std::vector<SparseMatrix> raising;
    for (int i = 0; i + 1 < n; ++i) {
        // rows indexed by target words of content mu + e_i - e_{i+1}
        std::map<std::int64_t, int> target_rows;
        SparseMatrix mat(0, static_cast<int>(mu_words.size()));
        std::vector<SparseVec> rows;
        for (std::size_t c = 0; c < mu_words.size(); ++c) {
            SparseVec img = apply_eij(i, i + 1, SparseVec{{static_cast<int>(TensorWord::encode(mu_words[c], n)), Rational(1)}});
            for (const auto& [tid, v] : img) {
                auto [it, inserted] = target_rows.emplace(tid, static_cast<int>(rows.size()));
                if (inserted) rows.emplace_back();
                rows[it->second][static_cast<int>(c)] = v;
            }
        }
        for (const auto& r : rows) mat.append_row(r);
        raising.push_back(std::move(mat));
    }
    Subspace hw = simultaneous_kernel(raising, static_cast<int>(mu_words.size()));
    if (hw.dim() == 0) throw Error("simple_gl_module: no highest-weight vector found");

    // first canonical kernel vector, expanded into word-id coordinates
    SparseVec v0;
    for (const auto& [c, val] : hw.basis().row(0))
        v0[static_cast<int>(TensorWord::encode(mu_words[c], n))] = val;

    // generate the cyclic submodule under the simple lowering operators
    SparseMatrix span_rows(0, static_cast<int>(tdim));
    span_rows.append_row(v0);
    Subspace mod(static_cast<int>(tdim), span_rows);
    bool grew = true;
    while (grew) {
        grew = false;
        SparseMatrix next_rows = mod.basis();
        for (int r = 0; r < mod.dim(); ++r) {
            for (int i = 0; i + 1 < n; ++i) {
                SparseVec img = apply_eij(i + 1, i, mod.basis().row(r));
                if (!img.empty()) next_rows.append_row(img);
            }
        }
        Subspace bigger(static_cast<int>(tdim), next_rows);
        if (bigger.dim() > mod.dim()) {
            mod = bigger;
            grew = true;
        }
    }

    if (static_cast<std::int64_t>(mod.dim()) != weyl_dim(lambda))
        throw Error("simple_gl_module: dimension " + std::to_string(mod.dim()) +
                    " differs from the Weyl formula for " + weight_label(lambda));

    // metadata: rref rows are weight-homogeneous, weight read off the pivot
    const int dim = mod.dim();
    std::vector<std::string> names(dim);
    std::vector<int> parities(dim, 0);
    std::vector<WeightVec> weights(dim);
    for (int r = 0; r < dim; ++r) {
        names[r] = "v" + std::to_string(r);
        std::int64_t pivot = mod.basis().row(r).begin()->first;
        WeightVec content = word_content(word_of_id(pivot), n);
        for (auto& c : content) c += twist;
        weights[r] = content;
        for (const auto& [id, val] : mod.basis().row(r)) {
            WeightVec other = word_content(word_of_id(id), n);
            for (auto& c : other) c += twist;
            if (other != weights[r]) throw Error("simple_gl_module: basis row mixes weights");
        }
    }

    std::vector<int> scope = w.indices_of_degree(0);
    std::map<int, SparseMatrix> actions;
    for (int s : scope) {
        const WBasisElement& e = w.element(s);     // xi_i d_j = e_{ij}
        int ei = std::countr_zero(e.mask);         // 0-based i
        int ej = e.i - 1;                          // 0-based j
        SparseMatrix m(dim, dim);
        for (int c = 0; c < dim; ++c) {
            SparseVec img = apply_eij(ei, ej, mod.basis().row(c));
            if (ei == ej && twist != 0) axpy(img, Rational(twist), mod.basis().row(c));
            if (img.empty()) continue;
            std::vector<Rational> coords = mod.coordinates_of(img);
            for (int r = 0; r < dim; ++r)
                if (!coords[r].is_zero()) m.set(r, c, coords[r]);
        }
        actions.emplace(s, std::move(m));
    }

    Supermodule out(n, scope, names, parities, weights, std::move(actions),
                    "gl:" + weight_label(lambda));
    out.check_relations(w);
    return out;
}

namespace {

// memoized straightening operators for the Kac action: op(u, J) expresses
// u . (d_J (x) v) as sum_K d_K (x) (A_K v), with A_K an operator on L0
class KacStraightener {
public:
    KacStraightener(const WAlgebra& w, const Supermodule& l0) : w_(w), l0_(l0) {}

    const std::map<std::uint32_t, SparseMatrix>& op(int u_index, std::uint32_t j_mask) {
        auto key = std::make_pair(u_index, j_mask);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        std::map<std::uint32_t, SparseMatrix> result;
        const int ld = l0_.dim();
        if (j_mask == 0) {
            int deg = w_.z_degree(u_index);
            if (deg == -1) {
                std::uint32_t bit = 1u << (w_.element(u_index).i - 1);
                result.emplace(bit, SparseMatrix::identity(ld));
            } else if (deg == 0) {
                result.emplace(0u, l0_.action(u_index));
            }
            // g+ annihilates 1 (x) v
        } else {
            int j = std::countr_zero(j_mask) + 1;          // smallest element of J
            std::uint32_t rest = j_mask & (j_mask - 1);    // J minus j

            // u d_j = (-1)^{|u|} d_j u + [u, d_j]
            int sign_u = w_.parity(u_index) ? -1 : 1;
            for (const auto& [k_mask, a] : op(u_index, rest)) {
                std::uint32_t bit = 1u << (j - 1);
                if (k_mask & bit) continue;                 // d_j^2 = 0
                int s = (std::popcount(k_mask & (bit - 1)) & 1) ? -1 : 1;
                add(result, k_mask | bit, a.scaled(sign_u * s));
            }
            int dj = w_.index_of(0, j);
            for (const auto& [z_index, cf] : w_.bracket_basis(u_index, dj)) {
                for (const auto& [k_mask, a] : op(z_index, rest))
                    add(result, k_mask, a.scaled(cf));
            }
        }

        return memo_.emplace(key, std::move(result)).first->second;
    }

private:
    static void add(std::map<std::uint32_t, SparseMatrix>& acc, std::uint32_t mask,
                    const SparseMatrix& m) {
        auto it = acc.find(mask);
        if (it == acc.end())
            acc.emplace(mask, m);
        else
            it->second = it->second + m;
    }

    const WAlgebra& w_;
    const Supermodule& l0_;
    std::map<std::pair<int, std::uint32_t>, std::map<std::uint32_t, SparseMatrix>> memo_;
};

} // namespace

Supermodule kac_module(const WAlgebra& w, const Weight& lambda) {
    const int n = w.n();
    Supermodule l0 = simple_gl_module(w, lambda);
    const int ld = l0.dim();
    const int dim = (1 << n) * ld;

    auto pos = [&](std::uint32_t j_mask, int m) {
        return static_cast<int>(j_mask) * ld + m;
    };

    std::vector<std::string> names(dim);
    std::vector<int> parities(dim);
    std::vector<WeightVec> weights(dim);
    for (std::uint32_t j = 0; j < (1u << n); ++j) {
        WeightVec shift(static_cast<std::size_t>(n), 0);
        for (int t = 1; t <= n; ++t)
            if (j & (1u << (t - 1))) shift[t - 1] -= 1;
        std::string dname = "d{";
        bool first = true;
        for (int t = 1; t <= n; ++t) {
            if (j & (1u << (t - 1))) {
                if (!first) dname += ",";
                first = false;
                dname += std::to_string(t);
            }
        }
        dname += "}";
        for (int m = 0; m < ld; ++m) {
            names[pos(j, m)] = dname + "(x)" + l0.name(m);
            parities[pos(j, m)] = std::popcount(j) & 1;
            weights[pos(j, m)] = weight_add(l0.weight(m), shift);
        }
    }

    KacStraightener straighten(w, l0);
    std::vector<int> scope(w.dim());
    for (int i = 0; i < w.dim(); ++i) scope[i] = i;
    std::map<int, SparseMatrix> actions;
    for (int u = 0; u < w.dim(); ++u) {
        SparseMatrix mat(dim, dim);
        for (std::uint32_t j = 0; j < (1u << n); ++j) {
            for (const auto& [k_mask, a] : straighten.op(u, j)) {
                for (int r = 0; r < a.rows(); ++r)
                    for (const auto& [c, v] : a.row(r)) mat.add_at(pos(k_mask, r), pos(j, c), v);
            }
        }
        actions.emplace(u, std::move(mat));
    }

    Supermodule out(n, scope, names, parities, weights, std::move(actions),
                    "kac:" + weight_label(lambda));
    out.check_relations(w);

    // the highest weight space must be a line
    if (out.weight_space(to_integer_weight(lambda)).size() != 1)
        throw Error("kac_module: lambda weight space is not one-dimensional");
    return out;
}

Subspace maximal_proper_submodule(const WAlgebra&, const Supermodule& m, const Weight& lambda) {
    WeightVec lw = to_integer_weight(lambda);
    if (m.weight_space(lw).size() != 1)
        throw InvalidInput("maximal_proper_submodule: lambda weight space is not a line");

    SparseMatrix rows(0, m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        if (m.weight(i) == lw) continue;
        SparseVec v;
        v[i] = 1;
        rows.append_row(v);
    }
    Subspace x(m.dim(), rows);

    while (true) {
        // constraints: v in x and action(u) v in x for every u
        SparseMatrix ann = kernel(x.basis()).basis();
        SparseMatrix constraints = ann;
        for (int u : m.scope()) {
            SparseMatrix pre = ann * m.action(u);
            constraints = SparseMatrix::stack_rows(constraints, pre);
        }
        Subspace next = kernel(constraints);
        if (next.dim() == x.dim()) return next;
        x = next;
    }
}

Supermodule simple_supermodule(const WAlgebra& w, const Weight& lambda) {
    Supermodule k = kac_module(w, lambda);
    Subspace rad = maximal_proper_submodule(w, k, lambda);
    Supermodule out = quotient_module(w, k, rad);
    out.set_tag("simple:" + weight_label(lambda));
    return out;
}

AtypicalityTag atypicality(const Weight& lambda) {
    const int n = static_cast<int>(lambda.size());
    AtypicalityTag tag;
    for (int i = 1; i <= n; ++i) {
        bool match = true;
        for (int j = 1; j < i && match; ++j)
            if (!lambda[j - 1].is_zero()) match = false;
        for (int j = i + 1; j <= n && match; ++j)
            if (lambda[j - 1] != Rational(1)) match = false;
        if (match) {
            tag.atypical = true;
            tag.a = lambda[i - 1];
            tag.i = i;
            return tag;
        }
    }
    return tag;
}

std::string FTildePoint::to_string() const {
    std::ostringstream os;
    os << "a=" << a.to_string();
    for (std::size_t k = 0; k < c.size(); ++k) os << ",c" << (k + 2) << "=" << c[k].to_string();
    return os.str();
}

FTildePoint parse_point(const std::string& text, int n) {
    FTildePoint pt;
    pt.c.assign(static_cast<std::size_t>(n - 1), Rational(0));
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw InvalidInput("parse_point: expected key=value in '" + tok + "'");
        std::string key = tok.substr(0, eq);
        Rational val = Rational::from_string(tok.substr(eq + 1));
        if (key == "a") {
            pt.a = val;
        } else if (key.size() > 1 && key[0] == 'c') {
            int idx = std::stoi(key.substr(1));
            if (idx < 2 || idx > n)
                throw InvalidInput("parse_point: coordinate '" + key + "' out of range");
            pt.c[idx - 2] = val;
        } else {
            throw InvalidInput("parse_point: unknown coordinate '" + key + "'");
        }
    }
    return pt;
}

WElement ftilde_element(const WAlgebra& w, const FTildePoint& pt) {
    WElement x;
    x.n = w.n();
    if (!pt.a.is_zero()) x.coords[w.index_of(0, 1)] = pt.a;
    for (int i = 2; i <= w.n(); ++i) {
        const Rational& ci = pt.c.at(i - 2);
        if (!ci.is_zero()) x.coords[w.index_of(1u | (1u << (i - 1)), i)] = ci;
    }
    return x;
}

bool projective_over(const WAlgebra& w, const FTildePoint& pt, const Supermodule& m) {
    const int n = w.n();
    if (static_cast<int>(pt.c.size()) != n - 1)
        throw InvalidInput("projective_over: point has wrong arity");

    WElement x = ftilde_element(w, pt);
    if (x.is_zero()) return true;   // U(<0>) = Q, everything is projective

    SparseMatrix rho = m.action_of(x);

    // z = [x,x]/2 = sum_i a c_i xi_i d_i acts on a weight vector of weight mu
    // by sum_i a c_i mu_i
    auto z_eigenvalue = [&](int v) {
        Rational acc(0);
        for (int i = 2; i <= n; ++i) acc += pt.a * pt.c[i - 2] * Rational(m.weight(v)[i - 1]);
        return acc;
    };

    std::vector<int> zero_part;
    std::vector<int> pos_of(m.dim(), -1);
    for (int v = 0; v < m.dim(); ++v) {
        if (z_eigenvalue(v).is_zero()) {
            pos_of[v] = static_cast<int>(zero_part.size());
            zero_part.push_back(v);
        }
    }

    const int d0 = static_cast<int>(zero_part.size());
    if (d0 % 2 != 0) return false;   // half-rank is impossible in odd dimension

    SparseMatrix rho_cols = rho.transpose();
    SparseMatrix restricted(d0, d0);
    for (int c = 0; c < d0; ++c) {
        for (const auto& [r, v] : rho_cols.row(zero_part[c])) {
            if (pos_of[r] < 0)
                throw Error("projective_over: x does not preserve the z-kernel part");
            restricted.set(pos_of[r], c, v);
        }
    }
    return 2 * rank(restricted) == d0;
}

std::vector<FTildePoint> standard_sample_points(const WAlgebra& w, int random_count,
                                                std::uint64_t seed) {
    const int n = w.n();
    std::vector<FTildePoint> pts;
    auto blank = [&]() {
        FTildePoint p;
        p.a = 0;
        p.c.assign(static_cast<std::size_t>(n - 1), Rational(0));
        return p;
    };

    // coordinate axes
    {
        FTildePoint p = blank();
        p.a = 1;
        pts.push_back(p);
    }
    for (int i = 2; i <= n; ++i) {
        FTildePoint p = blank();
        p.c[i - 2] = 1;
        pts.push_back(p);
    }
    // pairwise combinations
    for (int i = 2; i <= n; ++i) {
        FTildePoint p = blank();
        p.a = 1;
        p.c[i - 2] = 1;
        pts.push_back(p);
    }
    for (int i = 2; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            FTildePoint p = blank();
            p.c[i - 2] = 1;
            p.c[j - 2] = 1;
            pts.push_back(p);
        }
    }
    // generic all-ones point
    {
        FTildePoint p = blank();
        p.a = 1;
        for (auto& ci : p.c) ci = 1;
        pts.push_back(p);
    }
    // seeded small-height rational points with full support
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 7), den(1, 7), sig(0, 1);
    auto draw = [&]() {
        Rational r(num(rng), den(rng));
        return sig(rng) ? r : -r;
    };
    for (int k = 0; k < random_count; ++k) {
        FTildePoint p = blank();
        p.a = draw();
        for (auto& ci : p.c) ci = draw();
        pts.push_back(p);
    }

    // drop duplicates (for n = 2 the all-ones point coincides with a pair)
    std::vector<FTildePoint> unique_pts;
    std::set<std::string> seen;
    for (auto& p : pts)
        if (seen.insert(p.to_string()).second) unique_pts.push_back(std::move(p));
    return unique_pts;
}

std::string verdict_label(RankVerdict v) {
    switch (v) {
    case RankVerdict::zero_variety_consistent: return "zero-variety-consistent";
    case RankVerdict::full_variety_consistent: return "full-variety-consistent";
    case RankVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

RankVarietyReport rank_variety_report(const WAlgebra& w, const Supermodule& m, int random_count,
                                      std::uint64_t seed) {
    RankVarietyReport rep;
    rep.module_tag = m.tag();

    bool any_projective = false;
    bool generic_all_projective = true;
    for (const FTildePoint& pt : standard_sample_points(w, random_count, seed)) {
        RankVarietySample s;
        s.point = pt;
        s.projective = projective_over(w, pt, m);
        any_projective = any_projective || s.projective;

        bool full_support = !pt.a.is_zero();
        for (const auto& ci : pt.c)
            if (ci.is_zero()) full_support = false;
        if (full_support && !s.projective) generic_all_projective = false;

        rep.samples.push_back(std::move(s));
    }

    if (!any_projective)
        rep.verdict = RankVerdict::full_variety_consistent;
    else if (generic_all_projective)
        rep.verdict = RankVerdict::zero_variety_consistent;
    else
        rep.verdict = RankVerdict::inconclusive;
    return rep;
}

} // namespace wn
