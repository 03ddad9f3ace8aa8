#include "fss/branching.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fss {

namespace {

// ---------------------------------------------------------------------
// Affine alcove folding, on doubled coordinates (b2 = 2*beta, exact ints).
// Returns the dominant alcove representative and the accumulated sign, or
// singular = true when the orbit meets a wall of a sign-(-1) reflection.
struct FoldResult {
  bool singular = false;
  int sign = 1;
  std::vector<int> b2;  // sorted strictly decreasing
};

int sort_desc_sign(std::vector<int>& v, bool& equal_pair) {
  int sign = 1;
  for (size_t i = 1; i < v.size(); ++i)
    for (size_t j = i; j > 0 && v[j] > v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  equal_pair = false;
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) equal_pair = true;
  return sign;
}

int floor_mod(int a, int m, int& steps) {
  int r = a % m;
  if (r < 0) r += m;
  steps = (a - r) / m;
  return r;
}

// Translations ell*Z^k, all sign flips; walls at multiples of ell/2.
FoldResult fold_B(std::vector<int> b2, int ell) {
  FoldResult fr;
  const int L2 = 2 * ell;
  for (int& v : b2) {
    int steps;
    v = floor_mod(v, L2, steps);  // translation by ell: sign +1
    if (v == 0 || v == ell) return {true, 1, {}};
    if (v > ell) {
      v = L2 - v;  // reflection about ell/2: sign -1
      fr.sign = -fr.sign;
    }
  }
  bool eq;
  fr.sign *= sort_desc_sign(b2, eq);
  if (eq) return {true, 1, {}};
  fr.b2 = std::move(b2);
  return fr;
}

// Translations ell*Q, all sign flips; coordinate walls at multiples of
// ell, pair walls beta_i + beta_j = ell.
FoldResult fold_C(std::vector<int> b2, int ell) {
  FoldResult fr;
  const int L2 = 2 * ell;
  for (int& v : b2) {
    int steps;
    v = floor_mod(v, 2 * L2, steps);  // translation by 2*ell: sign +1
    if (v == 0 || v == L2) return {true, 1, {}};
    if (v > L2) {
      v = 2 * L2 - v;
      fr.sign = -fr.sign;
    }
  }
  for (int guard = 0; guard < 10000; ++guard) {
    bool eq;
    fr.sign *= sort_desc_sign(b2, eq);
    if (eq) return {true, 1, {}};
    if (b2.size() < 2 || b2[0] + b2[1] < L2) {
      fr.b2 = std::move(b2);
      return fr;
    }
    if (b2[0] + b2[1] == L2) return {true, 1, {}};
    int a = b2[0], b = b2[1];
    b2[0] = L2 - b;  // affine reflection in the pair wall: sign -1
    b2[1] = L2 - a;
    fr.sign = -fr.sign;
    if (b2[0] == 0 || b2[1] == 0) return {true, 1, {}};
  }
  throw std::runtime_error("fold_C did not terminate");
}

// The even orthogonal structure: sign flips act with sign +1, translations
// by ell*t carry (-1)^{sum t}; singular walls at beta = ell/2 mod ell and
// at coordinate coincidences.
FoldResult fold_D(std::vector<int> b2, int ell) {
  FoldResult fr;
  const int L2 = 2 * ell;
  for (int& v : b2) {
    int steps;
    v = floor_mod(v, L2, steps);  // translation by ell: sign -1 per step
    if (steps % 2) fr.sign = -fr.sign;
    if (v == ell) return {true, 1, {}};
    if (v > ell) {
      v = L2 - v;  // flip o translation(ell): sign (+1)*(-1)
      fr.sign = -fr.sign;
    }
  }
  bool eq;
  fr.sign *= sort_desc_sign(b2, eq);
  if (eq) return {true, 1, {}};
  fr.b2 = std::move(b2);
  return fr;
}

std::vector<int> doubled_shifted(const Partition& nu, int k, int twice_rho0) {
  // b2_j = 2 nu_j + twice_rho0 - 2(j-1)
  std::vector<int> b2(k);
  for (int j = 1; j <= k; ++j) b2[j - 1] = 2 * nu.row(j) + twice_rho0 - 2 * (j - 1);
  return b2;
}

Partition vector_from_b2(const std::vector<int>& b2, int twice_rho0) {
  std::vector<int> rows;
  for (size_t j = 0; j < b2.size(); ++j) {
    int r = (b2[j] - twice_rho0 + 2 * int(j)) / 2;
    if (r > 0) rows.push_back(r);
  }
  return Partition(std::move(rows));
}

// SO-vector of a Brauer label: the diagram itself when it has at most k
// rows, its associate otherwise (N > 0).
Partition so_vector(const Partition& mu, int N) {
  const int k = N / 2;
  return mu.col(1) <= k ? mu : associated_diagram(mu, N);
}

}  // namespace

// -----------------------------------------------------------------------
// Evaluation points

namespace {

void decreasing_tuples(int k, int max_v, int min_v,
                       std::vector<std::vector<int>>& out,
                       std::vector<int>& cur) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  int hi = cur.empty() ? max_v : cur.back() - 1;
  for (int v = hi; v >= min_v; --v) {
    cur.push_back(v);
    decreasing_tuples(k, max_v, min_v, out, cur);
    cur.pop_back();
  }
}

std::vector<EvalPoint> alcove_points(const RootOfUnityContext& ctx) {
  const int k = ctx.rank(), ell = ctx.ell;
  std::vector<EvalPoint> pts;
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  if (ctx.N > 0 && ctx.N % 2 == 1) {
    decreasing_tuples(k, (ell - 1) / 2, 1, tuples, cur);
    for (auto& t : tuples) {
      EvalPoint p;
      for (int v : t) p.gamma.push_back(double(v));
      pts.push_back(std::move(p));
    }
  } else if (ctx.N > 0) {
    // rotations: strictly decreasing half-integers below ell/2
    decreasing_tuples(k, (ell - 1) / 2, 0, tuples, cur);
    for (auto& t : tuples) {
      EvalPoint p;
      for (int v : t) p.gamma.push_back(v + 0.5);
      bool ok = true;
      for (double g : p.gamma)
        if (2.0 * g >= ell) ok = false;
      if (ok) pts.push_back(std::move(p));
    }
    tuples.clear();
    decreasing_tuples(k - 1, (ell - 1) / 2, 1, tuples, cur);
    for (auto& t : tuples) {
      EvalPoint p;
      p.reflection = true;
      for (int v : t) p.gamma.push_back(double(v));
      pts.push_back(std::move(p));
    }
  } else {
    // both the integer and the half-integer class of the weight lattice;
    // the translation lattice behind the wall argument pairs integrally
    // with either. Points on a long-root wall (2 gamma_i in ell Z) are
    // excluded: the Weyl denominator vanishes there.
    for (int twice_min : {2, 1}) {
      tuples.clear();
      decreasing_tuples(k, 2 * ell - 2, twice_min, tuples, cur);
      for (auto& t : tuples) {
        bool ok = (t[0] % 2) == (twice_min % 2);
        for (int v : t) {
          if (v % 2 != t[0] % 2) ok = false;   // one congruence class
          if ((2 * v) % (2 * ell) == 0) ok = false;
          if (v % ell == 0) ok = false;        // 2 gamma_i on the wall
        }
        if (k >= 2 && t[0] + t[1] > 2 * (ell - 1)) ok = false;
        if (!ok) continue;
        EvalPoint p;
        for (int v : t) p.gamma.push_back(v / 2.0);
        pts.push_back(std::move(p));
      }
    }
  }
  return pts;
}

}  // namespace

std::vector<cplx> u_eigenvalues(const RootOfUnityContext& ctx,
                                const EvalPoint& pt) {
  std::vector<cplx> eig;
  for (double g : pt.gamma) {
    eig.push_back(std::polar(1.0, 2.0 * M_PI * g / ctx.ell));
    eig.push_back(std::polar(1.0, -2.0 * M_PI * g / ctx.ell));
  }
  if (ctx.N > 0 && ctx.N % 2 == 1) eig.push_back(1.0);
  if (pt.reflection) {
    eig.push_back(1.0);
    eig.push_back(-1.0);
  }
  return eig;
}

double fusion_character(const RootOfUnityContext& ctx, const Partition& mu,
                        const EvalPoint& pt) {
  // Diagrams that are not orthogonal/symplectic labels do not name a
  // representation; their character in the decomposition sense is zero.
  if (ctx.N > 0 && mu.col(1) + mu.col(2) > ctx.N) return 0.0;
  if (ctx.N < 0 && mu.row(1) > ctx.rank()) return 0.0;
  std::vector<cplx> eigs = u_eigenvalues(ctx, pt);
  cplx v = ctx.N > 0 ? o_character_universal(mu, eigs)
                     : sp_character_universal(mu.conjugate(), eigs);
  return v.real();
}

namespace {

void assert_boundary_vanishing(const RootOfUnityContext& ctx,
                               const std::vector<EvalPoint>& pts) {
  for (const Partition& b : brauer_boundary_all(ctx))
    for (const EvalPoint& pt : pts)
      if (std::fabs(fusion_character(ctx, b, pt)) > 1e-8)
        throw std::runtime_error(
            "configuration error: boundary diagram [" + b.to_text() +
            "] has non-vanishing character at an evaluation point");
}

}  // namespace

std::vector<EvalPoint> evaluation_points(const RootOfUnityContext& ctx) {
  // the boundary-vanishing sweep is worth caching per context
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<EvalPoint>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({ctx.N, ctx.ell});
    if (it != cache.end()) return it->second;
  }
  std::vector<EvalPoint> pts = alcove_points(ctx);
  assert_boundary_vanishing(ctx, pts);
  std::lock_guard<std::mutex> lock(mu);
  cache[{ctx.N, ctx.ell}] = pts;
  return pts;
}

std::vector<EvalPoint> evaluation_points_bounded(const RootOfUnityContext& ctx,
                                                 int size_bound) {
  const int k = ctx.rank(), ell = ctx.ell;
  std::vector<EvalPoint> pts;
  auto in_alcove = [&](const EvalPoint& p) {
    if (ctx.N < 0) {
      for (double g : p.gamma)
        if (2.0 * g == double(ell)) return false;  // long-root wall
      return p.gamma.size() < 2 || p.gamma[0] + p.gamma[1] <= ell - 1;
    }
    for (double g : p.gamma)
      if (2.0 * g >= ell) return false;
    return true;
  };
  for (int m = 0; m <= size_bound; ++m) {
    for (const Partition& nu : partitions_of(m, 1 << 20, k)) {
      for (int half : {0, 1}) {
        if (half && ctx.N > 0) break;  // Sp points come in both classes
        EvalPoint p;
        for (int j = 1; j <= k; ++j) {
          double rho = ctx.N > 0 && ctx.N % 2 == 0
                           ? (ctx.N + 1) / 2.0 - j   // half-integers
                           : double(k + 1 - j);      // integer rho
          p.gamma.push_back(nu.row(j) + rho - 0.5 * half);
        }
        if (in_alcove(p)) pts.push_back(std::move(p));
      }
    }
    if (ctx.N > 0 && ctx.N % 2 == 0) {
      for (const Partition& nu : partitions_of(m, 1 << 20, k - 1)) {
        EvalPoint p;
        p.reflection = true;
        for (int j = 1; j <= k - 1; ++j) p.gamma.push_back(nu.row(j) + k - j);
        if (in_alcove(p)) pts.push_back(std::move(p));
      }
    }
  }
  return pts;
}

// -----------------------------------------------------------------------
// Littlewood's stable formula

BranchingTable littlewood_stable(const Partition& lam, char family) {
  if (family != 'O' && family != 'S')
    throw std::domain_error("littlewood_stable: family must be 'O' or 'S'");
  BranchingTable t;
  t.N = 0;
  t.ell = 0;
  t.lambda = lam;
  t.method = BranchMethod::littlewood;
  for (int m = lam.size() % 2; m <= lam.size(); m += 2) {
    for (const Partition& mu : partitions_of(m)) {
      if (!lam.contains(mu)) continue;
      long total = 0;
      int bsize = lam.size() - m;
      const auto betas = family == 'O' ? even_row_partitions(bsize)
                                       : even_col_partitions(bsize);
      for (const Partition& beta : betas)
        total += lr_coefficient(lam, mu, beta);
      if (total > 0) t.entries[mu] = total;
    }
  }
  return t;
}

// -----------------------------------------------------------------------
// Direct method

namespace {

BranchingTable solve_at_points(const RootOfUnityContext& ctx,
                               const Partition& lam,
                               const std::vector<Partition>& unknowns,
                               const std::vector<EvalPoint>& pts) {
  const int rows = static_cast<int>(pts.size());
  const int cols = static_cast<int>(unknowns.size());
  if (rows < cols)
    throw std::runtime_error("branch solve: fewer points than unknowns");
  std::vector<double> A(size_t(rows) * cols), rhs(rows);
  for (int t = 0; t < rows; ++t) {
    for (int u = 0; u < cols; ++u)
      A[size_t(t) * cols + u] = fusion_character(ctx, unknowns[u], pts[t]);
    const Partition lam_eval = ctx.N < 0 ? lam.conjugate() : lam;
    cplx v = u_character(lam_eval, u_eigenvalues(ctx, pts[t]));
    if (std::fabs(v.imag()) > 1e-8)
      throw std::runtime_error("branch solve: non-real unitary character");
    rhs[t] = v.real();
  }
  LsqResult sol = least_squares(A, rows, cols, rhs);
  if (sol.residual > 1e-7)
    throw std::runtime_error("branch solve error: residual " +
                             std::to_string(sol.residual));
  BranchingTable out;
  out.N = ctx.N;
  out.ell = ctx.ell;
  out.lambda = lam;
  out.method = BranchMethod::direct;
  for (int u = 0; u < cols; ++u) {
    double v = sol.x[u];
    long r = std::lround(v);
    if (std::fabs(v - r) > 1e-6 || r < 0)
      throw std::runtime_error("branch solve error: non-integral multiplicity " +
                               std::to_string(v));
    if (r != 0) out.entries[unknowns[u]] = r;
  }
  return out;
}

std::vector<Partition> parity_members_up_to(const RootOfUnityContext& ctx,
                                            int n) {
  std::vector<Partition> out;
  for (const Partition& mu : brauer_members_all(ctx))
    if (mu.size() <= n && (n - mu.size()) % 2 == 0) out.push_back(mu);
  return out;
}

}  // namespace

BranchingTable fusion_branch_direct(const RootOfUnityContext& ctx,
                                    const Partition& lam) {
  if (!is_hecke_label(ctx, lam))
    throw std::domain_error("fusion_branch_direct: not a Hecke label");
  return solve_at_points(ctx, lam, parity_members_up_to(ctx, lam.size()),
                         evaluation_points(ctx));
}

BranchingTable classical_branch(int N, const Partition& lam) {
  const int ell2 = 2 * (lam.size() + std::abs(N) + 1);
  RootOfUnityContext aux(N, ell2);
  if (N < 0 && lam.row(1) > std::abs(N))
    throw std::domain_error("classical_branch: more than |N| columns");
  if (N > 0 && lam.rows() > N)
    throw std::domain_error("classical_branch: more than N rows");
  BranchingTable t =
      solve_at_points(aux, lam, parity_members_up_to(aux, lam.size()),
                      evaluation_points_bounded(aux, lam.size() + 2));
  t.ell = 0;  // classical table
  return t;
}

// -----------------------------------------------------------------------
// Folded method

namespace {

BranchingTable fold_classical(const RootOfUnityContext& ctx,
                              const Partition& lam,
                              const BranchingTable& classical, SignChar sign) {
  const int k = ctx.rank(), ell = ctx.ell, N = ctx.N;
  BranchingTable out;
  out.N = N;
  out.ell = ctx.ell;
  out.lambda = lam;
  out.method = BranchMethod::folded;

  std::map<Partition, long> A;   // alternant coefficients on the alcove
  std::map<Partition, long> D;   // reflection-side coefficients (N even)

  const bool even_orth = N > 0 && N % 2 == 0;
  const bool use_tilde = sign == SignChar::eps_tilde;

  for (const auto& [delta, c] : classical.entries) {
    if (N > 0) {
      Partition nu = so_vector(delta, N);
      const int twice_rho0 = N % 2 ? 2 * k - 1 : 2 * (k - 1);  // 2*(first rho entry)
      std::vector<int> b2 = doubled_shifted(nu, k, twice_rho0);
      FoldResult fr = (even_orth && use_tilde) ? fold_D(b2, ell)
                                               : fold_B(b2, ell);
      if (!fr.singular) {
        long w = c * fr.sign;
        if (even_orth && use_tilde && nu.rows() == k) w *= 2;  // m(nu)
        A[vector_from_b2(fr.b2, twice_rho0)] += w;
      }
      if (even_orth && use_tilde && nu.rows() < k) {
        // split vector: track the reflection-point component as well
        std::vector<int> c2 = doubled_shifted(nu, k - 1, 2 * (k - 1));
        FoldResult fr2 = fold_B(c2, ell);
        if (!fr2.singular) {
          int side = delta.col(1) < k ? 1 : -1;
          D[vector_from_b2(fr2.b2, 2 * (k - 1))] += c * side * fr2.sign;
        }
      }
    } else {
      Partition nu = delta.conjugate();
      const int twice_rho0 = 2 * k;
      FoldResult fr = fold_C(doubled_shifted(nu, k, twice_rho0), ell);
      if (!fr.singular) A[vector_from_b2(fr.b2, twice_rho0)] += c * fr.sign;
    }
  }

  for (const Partition& mu : parity_members_up_to(ctx, lam.size())) {
    long val = 0;
    if (N < 0) {
      val = [&] {
        auto it = A.find(mu.conjugate());
        return it == A.end() ? 0L : it->second;
      }();
    } else {
      Partition nu = so_vector(mu, N);
      long a = A.count(nu) ? A[nu] : 0;
      if (!even_orth || !use_tilde) {
        // one label of each box-parity per vector; parity selects it
        val = a;
        if (even_orth && mu.col(1) > k) val = 0;  // eps control: plain side only
      } else if (nu.row(k) >= 1) {
        if (a % 2 != 0)
          throw std::runtime_error("fold error: odd self-associated coefficient");
        val = a / 2;
      } else {
        Partition nutrunc(std::vector<int>(
            nu.row_lengths().begin(),
            nu.row_lengths().begin() + std::min<size_t>(nu.rows(), k - 1)));
        long d = D.count(nutrunc) ? D[nutrunc] : 0;
        int side = mu.col(1) < k ? 1 : -1;
        if ((a + side * d) % 2 != 0)
          throw std::runtime_error("fold error: non-integral split coefficient");
        val = (a + side * d) / 2;
      }
    }
    if (val < 0)
      throw std::runtime_error("fold error: negative multiplicity for [" +
                               mu.to_text() + "]");
    if (val != 0) out.entries[mu] = val;
  }
  return out;
}

}  // namespace

BranchingTable fusion_branch_folded_sign(const RootOfUnityContext& ctx,
                                         const Partition& lam, SignChar sign) {
  if (!is_hecke_label(ctx, lam))
    throw std::domain_error("fusion_branch_folded: not a Hecke label");
  BranchingTable classical = classical_branch(ctx.N, lam);
  return fold_classical(ctx, lam, classical, sign);
}

BranchingTable fusion_branch_folded(const RootOfUnityContext& ctx,
                                    const Partition& lam) {
  SignChar sign = (ctx.N > 0 && ctx.N % 2 == 0) ? SignChar::eps_tilde
                                                : SignChar::eps;
  return fusion_branch_folded_sign(ctx, lam, sign);
}

}  // namespace fss
