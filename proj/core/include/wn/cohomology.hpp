#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wn/supermodule.hpp"

namespace wn {

/// The three relative pairs computed by the engine.
enum class PairName { g_g0, f_f0, ftilde_ftilde0 };

PairName parse_pair(const std::string& text);     // "g:g0" | "f:f0" | "ftilde:ftilde0"
std::string pair_label(PairName p);

/// Resource caps for wedge-space construction.  dim_cap bounds any
/// materialized basis; walk_cap bounds the index tree walked during
/// weight-filtered enumeration.
struct Caps {
    std::uint64_t dim_cap = 200000;
    std::uint64_t walk_cap = 5000000;
};

/// Space of t-equivariant cochains Hom_t(Lambda_s^p(g/t), M).
///
/// Coordinates are the pairs (wedge index, module basis vector) whose
/// weights agree on the diagonal part of t; the equations of the remaining
/// t-generators are imposed on top of that, so `basis` spans exactly the
/// equivariant cochains.
struct CochainSpace {
    int p = 0;
    WedgeSpace wedge;                               // torus-relevant indices only
    std::uint64_t ambient_wedge_dim = 0;            // closed-form full dimension
    std::vector<std::pair<int, int>> coords;        // (wedge position, module index)
    std::map<std::pair<int, int>, int> coord_pos;
    Subspace basis{0};
    std::vector<int> basis_parity;                  // parity of each basis cochain

    int dim() const { return basis.dim(); }
};

/// Relative cochain complex C^p(a, t; M) for one of the named pairs.
/// Cochain spaces and differentials are cached per degree.
class RelativeComplex {
public:
    RelativeComplex(const WAlgebra& w, PairName pair, Supermodule coefficients,
                    Caps caps = Caps{});

    const WAlgebra& algebra() const { return *w_; }
    PairName pair() const { return pair_; }
    const Supermodule& coefficients() const { return coeffs_; }

    const CochainSpace& cochains(int p);

    /// d^p as a matrix from the C^p basis to the C^{p+1} basis.  Expressing
    /// the image in the equivariant basis doubles as a well-definedness
    /// check: a residual raises an Error.
    SparseMatrix differential(int p);

    /// d^p with rows indexed by the matched coordinates of degree p+1
    /// (no equivariant basis needed at p+1; used for ranks).
    SparseMatrix differential_coords(int p);

    /// dim ker d^p - rank d^{p-1}, with d^{-1} = 0.
    int cohomology_dim(int p);

private:
    const WAlgebra* w_;
    PairName pair_;
    Supermodule coeffs_;
    Caps caps_;

    std::vector<int> base_;                  // complement monomials (W indices)
    SuperSpace base_space_;
    std::vector<int> torus_components_;      // 0-based weight components matched
    std::vector<int> offdiag_;               // non-diagonal t-generators (W indices)

    std::map<int, CochainSpace> cochain_cache_;
    std::map<int, SparseMatrix> diff_coord_cache_;

    friend CochainSpace build_cochain_space(const WAlgebra& w, const std::vector<int>& base,
                                            const std::vector<int>& torus_components,
                                            const std::vector<int>& offdiag,
                                            const Supermodule& M, int p, const Caps& caps);
};

/// Graded dimension table with truncation marker.
struct HilbertTable {
    int n = 0;
    std::string label;
    std::map<int, int> dims;
    int cutoff = 0;
    bool truncated = false;
    int truncated_at = -1;

    std::string to_text() const;
    std::string to_json() const;
};

/// dim C^p(g, t; M) without building differentials.
int relative_cochain_dim(const WAlgebra& w, PairName pair, const Supermodule& M, int p,
                         Caps caps = Caps{});

/// H^p(pair; M) dims for p = 0..max_degree.  Degrees that exceed the caps
/// are marked truncated rather than computed.
HilbertTable cohomology_table(const WAlgebra& w, PairName pair, const Supermodule& M,
                              int max_degree, Caps caps = Caps{});

/// dim S^p((g_{-1} + g_1)^*)^{g_0} per degree: the invariant ring the
/// cohomology ring of (g, g0) is identified with.
HilbertTable invariant_hilbert_table(const WAlgebra& w, int max_degree, Caps caps = Caps{});

/// H^p(f, f0; C) dims; closed form C(p/2 + n - 2, n - 2) at even p.
HilbertTable f_cohomology_table(const WAlgebra& w, int max_degree, Caps caps = Caps{});

struct CutCheckReport {
    int p = 0;
    int full_dim = 0;        // invariants of Lambda^p((g/g0)*)
    int truncated_dim = 0;   // invariants of Lambda^p((g_{-1} + g_1)*)
    bool equal = false;
};

/// Compares the two invariant dimensions of the cut identity at degree p.
CutCheckReport verify_cut_theorem(const WAlgebra& w, int p, Caps caps = Caps{});

struct RestrictionReport {
    int p = 0;
    int source_dim = 0;          // dim H^p(g, g0; C)
    int target_dim = 0;          // dim H^p(f, f0; C)
    int image_dim = 0;
    int sigma_invariant_dim = 0; // dim of the Sigma_{n-1}-invariants in degree p
    bool injective = false;
    bool image_matches = false;
};

/// Pulls cohomology classes of (g, g0) back along f -> g and reports
/// injectivity and the image dimension against the Sigma_{n-1}-invariant
/// count.
RestrictionReport restriction_map(const WAlgebra& w, int p, Caps caps = Caps{});

/// Partitions of m into at most k parts (the Sigma-invariant dimension of
/// degree 2m in k polynomial generators of degree 2).
std::int64_t partitions_at_most(int m, int k);

} // namespace wn
