// Acceptance suite: every statement the engine is required to reproduce is
// checked here at its exact (zero-tolerance) value, one line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

#include "wn/checks.hpp"
#include "wn/cohomology.hpp"
#include "wn/modules.hpp"

using namespace wn;

namespace {

int g_failures = 0;
int g_index = 0;

void criterion(const std::string& label, const std::function<bool(std::string&)>& body) {
    ++g_index;
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%2d/13] %s criterion %d: %s (%.2f s)%s%s\n", g_index, ok ? "PASS" : "FAIL",
                g_index, label.c_str(), secs, detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

Weight wt(std::initializer_list<long> xs) {
    Weight w;
    for (long x : xs) w.push_back(Rational(x));
    return w;
}

// independent oracle: partitions of p/2 into parts <= n-1
std::int64_t series_oracle(int n, int p) {
    if (p % 2 != 0) return 0;
    int m = p / 2;
    std::vector<std::int64_t> dp(m + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= n - 1; ++part)
        for (int s = part; s <= m; ++s) dp[s] += dp[s - part];
    return dp[m];
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

bool all_pass(const checks::SuiteResult& res, std::string& detail) {
    for (const auto& c : res.checks) {
        if (!c.pass) {
            detail = c.id + ": " + c.detail;
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    const std::uint64_t seed = 42;

    criterion("dim W(n) = n*2^n and dim W(n)_k = n*C(n,k+1) for n = 2..5",
              [&](std::string& detail) {
                  for (int n = 2; n <= 5; ++n) {
                      const WAlgebra& w = build_wn(n);
                      if (w.dim() != n * (1 << n)) {
                          detail = "total dim wrong at n = " + std::to_string(n);
                          return false;
                      }
                      for (int k = -1; k <= n - 1; ++k) {
                          if (w.graded_dim(k) != n * binom(n, k + 1) ||
                              w.graded_dim(k) !=
                                  static_cast<int>(w.indices_of_degree(k).size())) {
                              detail = "graded dim wrong at n = " + std::to_string(n) +
                                       ", k = " + std::to_string(k);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion("super skew-symmetry and super Jacobi (exhaustive n = 2,3; 10^4 triples n = 4)",
              [&](std::string& detail) {
                  return all_pass(checks::suite_jacobi(2, 4, seed), detail);
              });

    criterion("closed-form bracket equals the derivation-composition oracle (500 pairs, n = 2,3)",
              [&](std::string& detail) {
                  std::mt19937_64 rng(seed);
                  for (int n = 2; n <= 3; ++n) {
                      const WAlgebra& w = build_wn(n);
                      std::uniform_int_distribution<int> pick(0, w.dim() - 1);
                      std::uniform_int_distribution<int> num(1, 7), den(1, 7), coin(0, 1);
                      for (int trial = 0; trial < 500; ++trial) {
                          WElement x, y;
                          x.n = y.n = n;
                          for (int t = 0; t < 3; ++t) {
                              Rational c(num(rng), den(rng));
                              x.coords[pick(rng)] = coin(rng) ? c : -c;
                              Rational c2(num(rng), den(rng));
                              y.coords[pick(rng)] = coin(rng) ? c2 : -c2;
                          }
                          WElement fast = w.bracket(x, y);
                          WElement slow = w.bracket_by_composition(x, y);
                          if (fast.coords != slow.coords) {
                              detail = "mismatch at n = " + std::to_string(n) + ", trial " +
                                       std::to_string(trial) + " (seed 42)";
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion("d.d = 0 for (g,g0), (f,f0), (f~,f~0), trivial and adjoint, p <= 3, n = 2",
              [&](std::string& detail) {
                  const WAlgebra& w = build_wn(2);
                  for (PairName pair :
                       {PairName::g_g0, PairName::f_f0, PairName::ftilde_ftilde0}) {
                      for (bool adjoint : {false, true}) {
                          RelativeComplex cpx(w, pair,
                                              adjoint ? adjoint_module(w) : trivial_module(w));
                          for (int p = 0; p <= 3; ++p) {
                              if (!(cpx.differential(p + 1) * cpx.differential(p)).is_zero()) {
                                  detail = pair_label(pair) +
                                           (adjoint ? " adjoint" : " trivial") + " at p = " +
                                           std::to_string(p);
                                  return false;
                              }
                          }
                      }
                  }
                  return true;
              });

    criterion("d^p vanishes identically on C^p(g,g0;C) for p <= 4, n = 2,3",
              [&](std::string& detail) {
                  for (int n = 2; n <= 3; ++n) {
                      const WAlgebra& w = build_wn(n);
                      RelativeComplex cpx(w, PairName::g_g0, trivial_module(w));
                      for (int p = 0; p <= 4; ++p) {
                          if (!cpx.differential_coords(p).is_zero()) {
                              detail = "n = " + std::to_string(n) + ", p = " + std::to_string(p);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion("cut identity: invariants of the full and truncated wedge agree, n = 3, p <= 4",
              [&](std::string& detail) {
                  const WAlgebra& w = build_wn(3);
                  for (int p = 0; p <= 4; ++p) {
                      CutCheckReport rep = verify_cut_theorem(w, p);
                      if (!rep.equal) {
                          detail = "p = " + std::to_string(p) + ": full " +
                                   std::to_string(rep.full_dim) + " vs truncated " +
                                   std::to_string(rep.truncated_dim);
                          return false;
                      }
                  }
                  return true;
              });

    criterion("H^p(g,g0;C): n=2 gives (1,0,1,0,1,0,1,0,1), n=3 gives (1,0,1,0,2,0,2,0,3)",
              [&](std::string& detail) {
                  const std::vector<std::vector<int>> frozen{
                      {1, 0, 1, 0, 1, 0, 1, 0, 1},
                      {1, 0, 1, 0, 2, 0, 2, 0, 3},
                  };
                  for (int n = 2; n <= 3; ++n) {
                      const WAlgebra& w = build_wn(n);
                      RelativeComplex cpx(w, PairName::g_g0, trivial_module(w));
                      for (int p = 0; p <= 8; ++p) {
                          int got = cpx.cohomology_dim(p);
                          int expect = frozen[n - 2][p];
                          if (got != expect || got != series_oracle(n, p)) {
                              detail = "n = " + std::to_string(n) + ", p = " + std::to_string(p) +
                                       ": got " + std::to_string(got);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion("T_{n-1} fixed points, closure of f and f~, [f1,f1] in f0, [f~0,f~] = 0, n = 2..4",
              [&](std::string& detail) {
                  for (int n = 2; n <= 4; ++n) {
                      const WAlgebra& w = build_wn(n);
                      SuperSpace gpm = w.component_space({-1, 1});
                      Subspace fixed = fixed_points(gpm, Torus::Tn_minus_1, n);
                      SparseMatrix expected(0, gpm.dim());
                      {
                          SparseVec v;
                          v[gpm.position_of("xi{}d1")] = 1;
                          expected.append_row(v);
                      }
                      for (int i = 2; i <= n; ++i) {
                          SparseVec v;
                          v[gpm.position_of(w.name(w.index_of(1u | (1u << (i - 1)), i)))] = 1;
                          expected.append_row(v);
                      }
                      if (!(fixed == Subspace(gpm.dim(), expected))) {
                          detail = "fixed points differ at n = " + std::to_string(n);
                          return false;
                      }
                      ClosureReport rf = w.check_subalgebra_closure(w.subalgebra(SubalgebraName::f));
                      ClosureReport rt =
                          w.check_subalgebra_closure(w.subalgebra(SubalgebraName::f_tilde));
                      if (!rf.closed || !rf.graded_ok || !rt.closed || !rt.graded_ok) {
                          detail = "closure fails at n = " + std::to_string(n);
                          return false;
                      }
                  }
                  return true;
              });

    criterion("H^p(f,f0;C) = C(p/2+n-2, n-2) for n = 2..4, p <= 8; restriction injective with "
              "Sigma-invariant image for n = 2,3, p <= 6",
              [&](std::string& detail) {
                  for (int n = 2; n <= 4; ++n) {
                      const WAlgebra& w = build_wn(n);
                      HilbertTable t = f_cohomology_table(w, 8);
                      for (int p = 0; p <= 8; ++p) {
                          std::int64_t expect =
                              (p % 2 == 0) ? binom(p / 2 + n - 2, n - 2) : 0;
                          if (t.dims.at(p) != expect) {
                              detail = "f-table n = " + std::to_string(n) + ", p = " +
                                       std::to_string(p);
                              return false;
                          }
                      }
                  }
                  for (int n = 2; n <= 3; ++n) {
                      const WAlgebra& w = build_wn(n);
                      for (int p = 0; p <= 6; ++p) {
                          RestrictionReport rep = restriction_map(w, p);
                          std::int64_t sigma = series_oracle(n, p);
                          if (!rep.injective || rep.image_dim != sigma ||
                              rep.sigma_invariant_dim != sigma) {
                              detail = "restriction n = " + std::to_string(n) + ", p = " +
                                       std::to_string(p);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion("beta fibers: empty for all c_i nonzero, the predicted family for c_1 = 0, n = 2,3",
              [&](std::string& detail) {
                  for (int n = 2; n <= 3; ++n) {
                      const WAlgebra& w = build_wn(n);
                      std::vector<Rational> nonzero;
                      for (int i = 1; i <= n; ++i) nonzero.push_back(i);
                      BetaFiberReport r1 = verify_beta_fiber(w, nonzero, 5, seed);
                      if (!r1.identity_check ||
                          r1.status != BetaFiberReport::Status::empty_fiber) {
                          detail = "expected empty fiber at n = " + std::to_string(n);
                          return false;
                      }
                      std::vector<Rational> c1zero;
                      c1zero.push_back(0);
                      for (int i = 2; i <= n; ++i) c1zero.push_back(i - 1);
                      BetaFiberReport r2 = verify_beta_fiber(w, c1zero, 5, seed);
                      if (r2.status != BetaFiberReport::Status::family_match) {
                          detail = "family mismatch at n = " + std::to_string(n) + ": " +
                                   r2.detail;
                          return false;
                      }
                  }
                  return true;
              });

    criterion("representation suite at n = 2: Weyl grid, PBW dims, frozen simple dims, "
              "zero radical for K((2,0))",
              [&](std::string& detail) {
                  const WAlgebra& w = build_wn(2);
                  for (long l1 = -3; l1 <= 3; ++l1) {
                      for (long l2 = -3; l2 <= l1; ++l2) {
                          Weight lam = wt({l1, l2});
                          long expect = 1;
                          expect = (l1 - l2 + 1);   // Weyl formula for gl(2)
                          Supermodule l0 = simple_gl_module(w, lam);
                          if (l0.dim() != expect) {
                              detail = "Weyl mismatch at (" + weight_label(lam) + ")";
                              return false;
                          }
                          if (kac_module(w, lam).dim() != 4 * l0.dim()) {
                              detail = "PBW mismatch at (" + weight_label(lam) + ")";
                              return false;
                          }
                      }
                  }
                  struct Expect {
                      Weight lam;
                      int dim;
                  };
                  std::vector<Expect> table{{wt({0, 0}), 1},
                                            {wt({0, -1}), 3},
                                            {wt({1, 1}), 3},
                                            {wt({2, 1}), 5}};
                  for (const auto& e : table) {
                      int got = simple_supermodule(w, e.lam).dim();
                      if (got != e.dim) {
                          detail = "dim L(" + weight_label(e.lam) + ") = " +
                                   std::to_string(got) + ", expected " + std::to_string(e.dim);
                          return false;
                      }
                  }
                  Supermodule k20 = kac_module(w, wt({2, 0}));
                  if (maximal_proper_submodule(w, k20, wt({2, 0})).dim() != 0) {
                      detail = "K((2,0)) has a nonzero radical";
                      return false;
                  }
                  return true;
              });

    criterion("atypicality classifier matches the explicit dominant description (grid |l_i| <= 4, "
              "n = 2,3) and the radical dichotomy",
              [&](std::string& detail) {
                  for (int n = 2; n <= 3; ++n) {
                      std::vector<Weight> grid;
                      std::function<void(Weight&)> walk = [&](Weight& partial) {
                          if (static_cast<int>(partial.size()) == n) {
                              grid.push_back(partial);
                              return;
                          }
                          for (int v = -4; v <= 4; ++v) {
                              partial.push_back(Rational(v));
                              walk(partial);
                              partial.pop_back();
                          }
                      };
                      Weight partial;
                      walk(partial);
                      for (const Weight& lam : grid) {
                          bool dominant = true;
                          for (int i = 0; i + 1 < n; ++i)
                              if (lam[i] < lam[i + 1]) dominant = false;
                          if (!dominant) continue;
                          bool tail_ones = true;
                          for (int i = 1; i < n; ++i)
                              if (lam[i] != Rational(1)) tail_ones = false;
                          bool head_zero = true;
                          for (int i = 0; i + 1 < n; ++i)
                              if (!lam[i].is_zero()) head_zero = false;
                          bool explicit_omega = (tail_ones && lam[0] >= Rational(1)) ||
                                                (head_zero && lam[n - 1] <= Rational(0));
                          if (atypicality(lam).atypical != explicit_omega) {
                              detail = "classifier disagrees at (" + weight_label(lam) + ")";
                              return false;
                          }
                      }
                  }
                  const WAlgebra& w = build_wn(2);
                  for (long l1 = -3; l1 <= 3; ++l1) {
                      for (long l2 = -3; l2 <= l1; ++l2) {
                          Weight lam = wt({l1, l2});
                          Supermodule k = kac_module(w, lam);
                          bool has_radical = maximal_proper_submodule(w, k, lam).dim() > 0;
                          if (has_radical != atypicality(lam).atypical) {
                              detail = "radical dichotomy fails at (" + weight_label(lam) + ")";
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion("support suite at n = 2: C full, Kac modules zero, atypical simples full, "
              "pointwise SES and tensor checks at 20 seeded points",
              [&](std::string& detail) {
                  checks::SuiteResult res = checks::suite_supports(2, 2, seed);
                  if (!all_pass(res, detail)) return false;

                  // the frozen verdicts, re-stated explicitly
                  const WAlgebra& w = build_wn(2);
                  if (rank_variety_report(w, trivial_module(w), 8, seed).verdict !=
                      RankVerdict::full_variety_consistent) {
                      detail = "C should be full";
                      return false;
                  }
                  if (rank_variety_report(w, kac_module(w, wt({0, 0})), 8, seed).verdict !=
                          RankVerdict::zero_variety_consistent ||
                      rank_variety_report(w, kac_module(w, wt({2, 0})), 8, seed).verdict !=
                          RankVerdict::zero_variety_consistent) {
                      detail = "Kac supports should be zero";
                      return false;
                  }
                  if (rank_variety_report(w, simple_supermodule(w, wt({0, -1})), 8, seed)
                              .verdict != RankVerdict::full_variety_consistent ||
                      rank_variety_report(w, simple_supermodule(w, wt({1, 1})), 8, seed)
                              .verdict != RankVerdict::full_variety_consistent) {
                      detail = "atypical simple supports should be full";
                      return false;
                  }
                  return true;
              });

    std::printf("ACCEPTANCE: %d/13 criteria passed\n", 13 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
