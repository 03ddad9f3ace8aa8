#include "fss/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "fss/qarith.hpp"
#include "fss/labels.hpp"

namespace fss {

std::vector<double> SignedPerm::apply(std::span<const double> x) const {
  std::vector<double> y(x.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] = signs[i] * x[perm[i]];
  return y;
}

int SignedPerm::eps() const {
  int s = 1;
  // permutation parity by counting inversions
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s = -s;
  for (int v : signs)
    if (v < 0) s = -s;
  return s;
}

int SignedPerm::eps_tilde() const {
  int s = eps();
  int flips = 0;
  for (int v : signs)
    if (v < 0) ++flips;
  return flips % 2 ? -s : s;
}

std::vector<SignedPerm> hyperoctahedral_group(int k) {
  std::vector<SignedPerm> out;
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  do {
    for (int mask = 0; mask < (1 << k); ++mask) {
      SignedPerm w;
      w.perm = perm;
      w.signs.resize(k);
      for (int i = 0; i < k; ++i) w.signs[i] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  // (a o b)(x) = a(b(x)); y[i] = a.signs[i] * b.signs[a.perm[i]] * x[b.perm[a.perm[i]]]
  SignedPerm c;
  const int k = static_cast<int>(a.perm.size());
  c.perm.resize(k);
  c.signs.resize(k);
  for (int i = 0; i < k; ++i) {
    c.perm[i] = b.perm[a.perm[i]];
    c.signs[i] = a.signs[i] * b.signs[a.perm[i]];
  }
  return c;
}

namespace {
bool near_int(double v, double tol = 1e-9) {
  return std::fabs(v - std::round(v)) < tol;
}
}  // namespace

bool lattice_contains(const LatticeSpec& spec, std::span<const double> x) {
  double sum = 0.0;
  bool all_int = true, all_half = true;
  for (double xi : x) {
    double t = xi / spec.scale;
    sum += t;
    if (!near_int(t)) all_int = false;
    if (!near_int(t - 0.5)) all_half = false;
  }
  switch (spec.name) {
    case LatticeName::Zk:
      return all_int;
    case LatticeName::Q:
      return all_int && near_int(sum / 2.0);
    case LatticeName::P:
      return all_int || all_half;
  }
  return false;
}

LatticeSpec dual_lattice(const LatticeSpec& spec) {
  switch (spec.name) {
    case LatticeName::Zk:
      return {LatticeName::Zk, 1.0 / spec.scale};
    case LatticeName::Q:
      return {LatticeName::P, 1.0 / spec.scale};
    case LatticeName::P:
      return {LatticeName::Q, 1.0 / spec.scale};
  }
  return spec;
}

namespace {
double covolume(const LatticeSpec& s, int k) {
  double v = std::pow(s.scale, k);
  if (s.name == LatticeName::Q) v *= 2.0;
  if (s.name == LatticeName::P) v *= 0.5;
  return v;
}
}  // namespace

long pair_index(const LatticePair& pair) {
  double r = covolume(pair.M, pair.k) / covolume(pair.L, pair.k);
  if (!near_int(r) || r < 1.0)
    throw std::domain_error("pair does not have finite integer index");
  return std::lround(r);
}

namespace {

// Reduce x into a centered fundamental domain of M; deterministic,
// ties toward negative coordinates.
std::vector<double> reduce_mod(const LatticeSpec& M, std::vector<double> x) {
  const double s = M.scale;
  auto center_coord = [&](double v) {
    double t = std::floor(v / s + 0.5 + 1e-12);
    return v - t * s;  // in [-s/2, s/2)
  };
  std::vector<long> shifts(x.size(), 0);
  for (size_t i = 0; i < x.size(); ++i) {
    double y = center_coord(x[i]);
    shifts[i] = std::lround((x[i] - y) / s);
    x[i] = y;
  }
  // quantized comparisons keep the canonical choice stable against
  // last-bit floating noise between representatives of one coset
  auto qz = [&](double v) { return std::lround(v / s * 4096.0); };
  if (M.name == LatticeName::Q) {
    long tot = 0;
    for (long t : shifts) tot += t;
    if (tot % 2 != 0) {
      // fix parity by one extra +-s shift; pick the move with smallest
      // resulting magnitude, preferring the negative option on ties
      size_t best_i = 0;
      double best_v = 0.0;
      long best_abs = 0, best_val = 0;
      bool first = true;
      for (size_t i = 0; i < x.size(); ++i) {
        for (double cand : {x[i] - s, x[i] + s}) {
          long val = qz(cand), abs = std::labs(val);
          if (first || abs < best_abs || (abs == best_abs && val < best_val)) {
            best_i = i;
            best_v = cand;
            best_abs = abs;
            best_val = val;
            first = false;
          }
        }
      }
      x[best_i] = best_v;
    }
  } else if (M.name == LatticeName::P) {
    // also consider the half-shift coset representative
    std::vector<double> alt(x.size());
    long n0 = 0, n1 = 0;
    std::vector<long> kx(x.size()), ka(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
      alt[i] = center_coord(x[i] - s / 2.0);
      kx[i] = qz(x[i]);
      ka[i] = qz(alt[i]);
      n0 += kx[i] * kx[i];
      n1 += ka[i] * ka[i];
    }
    if (n1 < n0 || (n1 == n0 && ka < kx)) x = alt;
  }
  return x;
}

std::vector<std::vector<double>> lattice_points_in_box(const LatticeSpec& L,
                                                       int k, double radius) {
  std::vector<std::vector<double>> pts;
  const double s = L.scale;
  const long m = static_cast<long>(std::ceil(radius / s)) + 1;
  std::vector<long> idx(k, -m);
  auto emit = [&](bool half) {
    std::vector<double> p(k);
    long sum = 0;
    for (int i = 0; i < k; ++i) {
      p[i] = (idx[i] + (half ? 0.5 : 0.0)) * s;
      sum += idx[i];
    }
    if (L.name == LatticeName::Q && sum % 2 != 0) return;
    pts.push_back(std::move(p));
  };
  while (true) {
    emit(false);
    if (L.name == LatticeName::P) emit(true);
    int i = 0;
    while (i < k && ++idx[i] > m) idx[i++] = -m;
    if (i == k) break;
  }
  return pts;
}

std::vector<double> canonical_key(const std::vector<double>& v) {
  std::vector<double> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = std::round(v[i] * 4096.0);
  return r;
}

}  // namespace

std::vector<std::vector<double>> coset_representatives(const LatticePair& pair) {
  const long index = pair_index(pair);
  const double radius = pair.M.scale * (pair.M.name == LatticeName::Q ? 2.0 : 1.0);
  std::map<std::vector<double>, std::vector<double>> seen;
  for (auto& p : lattice_points_in_box(pair.L, pair.k, radius)) {
    std::vector<double> r = reduce_mod(pair.M, p);
    seen.emplace(canonical_key(r), r);
  }
  if (static_cast<long>(seen.size()) != index)
    throw std::runtime_error("coset enumeration mismatch: got " +
                             std::to_string(seen.size()) + ", index " +
                             std::to_string(index));
  std::vector<std::vector<double>> out;
  out.reserve(seen.size());
  for (auto& [k_, v] : seen) out.push_back(v);
  return out;
}

namespace {

struct OrbitLabels {
  std::vector<std::vector<double>> labels;          // canonical representatives
  std::vector<int> stab_size;                       // benign stabilizer order
};

// Regular (sign-consistent) W-orbits on the cosets of top/bottom of the
// pair, labeled by a dominant representative.
OrbitLabels alcove_orbits(const std::vector<std::vector<double>>& cosets,
                          const LatticeSpec& mod, int k,
                          const std::vector<SignedPerm>& W, SignChar sign) {
  OrbitLabels out;
  std::map<std::vector<double>, bool> used;
  for (const auto& rep : cosets) {
    if (used.count(canonical_key(rep))) continue;
    // collect the orbit
    std::map<std::vector<double>, std::vector<double>> orbit;
    bool singular = false;
    int stab = 0;
    for (const auto& w : W) {
      std::vector<double> y = reduce_mod(mod, w.apply(rep));
      int s = sign == SignChar::eps ? w.eps() : w.eps_tilde();
      auto key = canonical_key(y);
      if (key == canonical_key(rep)) {
        ++stab;
        if (s < 0) singular = true;
      }
      orbit.emplace(key, y);
    }
    for (auto& [key, y] : orbit) used[key] = true;
    if (singular) continue;
    // dominant representative: absolute coordinate values sorted strictly
    // decreasing (a W-image of the element, hence in the same coset);
    // regular orbits never have coordinate coincidences, so this is
    // strict. Pick the lexicographically smallest across the orbit.
    std::vector<double> best;
    std::vector<long> best_key;
    for (auto& [key, y] : orbit) {
      std::vector<double> srt = y;
      for (double& v : srt) v = std::fabs(v);
      std::sort(srt.begin(), srt.end(), std::greater<double>());
      std::vector<long> kk;
      for (double v : srt) kk.push_back(std::lround(v * 4096.0));
      if (best.empty() || kk < best_key) {
        best = srt;
        best_key = kk;
      }
    }
    bool strict = true;
    for (int i = 0; i + 1 < k; ++i)
      if (best_key[i] == best_key[i + 1]) strict = false;
    if (k > 0 && sign == SignChar::eps && best_key[k - 1] == 0) strict = false;
    if (!strict)
      throw std::runtime_error("alcove orbit without a strict representative");
    out.labels.push_back(best);
    out.stab_size.push_back(stab);
  }
  return out;
}

SMatrix s_matrix_impl(const LatticePair& pair, SignChar sign, double tol,
                      bool parallel) {
  const int k = pair.k;
  const auto W = hyperoctahedral_group(k);
  LatticePair dual{k, dual_lattice(pair.L), dual_lattice(pair.M)};
  // rows: gamma in M*/L*;  cols: x in L/M
  OrbitLabels rows = alcove_orbits(coset_representatives(dual),
                                   dual.M /* = L* */, k, W, sign);
  OrbitLabels cols =
      alcove_orbits(coset_representatives(pair), pair.M, k, W, sign);
  SMatrix S;
  S.row_labels = rows.labels;
  S.col_labels = cols.labels;
  S.nrows = static_cast<int>(rows.labels.size());
  S.ncols = static_cast<int>(cols.labels.size());
  if (S.nrows != S.ncols)
    throw std::runtime_error("alcove mismatch: " + std::to_string(S.nrows) +
                             " rows vs " + std::to_string(S.ncols) + " cols");
  S.entries.assign(size_t(S.nrows) * S.ncols, cplx(0.0));
  const double norm = 1.0 / std::sqrt(double(pair_index(pair)));
  const long total = long(S.nrows) * S.ncols;
#pragma omp parallel for schedule(static) if (parallel && total > 64)
  for (long t = 0; t < total; ++t) {
    const int i = static_cast<int>(t / S.ncols), j = static_cast<int>(t % S.ncols);
    cplx sum = 0.0;
    for (const auto& w : W) {
      std::vector<double> wg = w.apply(rows.labels[i]);
      double phase = 0.0;
      for (int d = 0; d < k; ++d) phase += wg[d] * cols.labels[j][d];
      int s = sign == SignChar::eps ? w.eps() : w.eps_tilde();
      sum += double(s) * std::polar(1.0, 2.0 * M_PI * phase);
    }
    S.entries[t] = sum * norm /
                   std::sqrt(double(rows.stab_size[i]) * cols.stab_size[j]);
  }
  // unitarity
  double resid = 0.0;
  for (int i = 0; i < S.nrows; ++i)
    for (int j = 0; j < S.nrows; ++j) {
      cplx dot = 0.0;
      for (int c = 0; c < S.ncols; ++c)
        dot += S.at(i, c) * std::conj(S.at(j, c));
      if (i == j) dot -= 1.0;
      resid = std::max(resid, std::abs(dot));
    }
  S.unitarity_residual = resid;
  if (resid > tol)
    throw std::runtime_error("s_matrix failed unitarity check: residual " +
                             std::to_string(resid));
  return S;
}

}  // namespace

SMatrix s_matrix(const LatticePair& pair, SignChar sign, double tol) {
  return s_matrix_impl(pair, sign, tol, true);
}

SMatrix s_matrix_serial(const LatticePair& pair, SignChar sign, double tol) {
  return s_matrix_impl(pair, sign, tol, false);
}

namespace {
double alternant_sin(const std::vector<double>& beta,
                     std::span<const double> x) {
  const int k = static_cast<int>(x.size());
  std::vector<double> m(size_t(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m[i * k + j] = std::sin(2.0 * M_PI * beta[j] * x[i]);
  return det_real(std::move(m), k);
}

double alternant_cos(const std::vector<double>& beta,
                     std::span<const double> x) {
  const int k = static_cast<int>(x.size());
  std::vector<double> m(size_t(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m[i * k + j] = std::cos(2.0 * M_PI * beta[j] * x[i]);
  return det_real(std::move(m), k);
}

std::vector<double> shifted_weight(const Partition& lam, int k, double rho0) {
  // beta_j = lam_j + rho0 - (j-1), j = 1..k
  std::vector<double> b(k);
  for (int j = 1; j <= k; ++j) b[j - 1] = lam.row(j) + rho0 - (j - 1);
  return b;
}

void check_rows(const Partition& lam, int k, const char* who) {
  if (lam.rows() > k)
    throw std::domain_error(std::string(who) + ": more than k rows");
}
}  // namespace

double so_odd_character(const Partition& lam, std::span<const double> x) {
  const int k = static_cast<int>(x.size());
  check_rows(lam, k, "so_odd_character");
  double den = alternant_sin(shifted_weight(Partition{}, k, k - 0.5), x);
  if (std::fabs(den) < 1e-12)
    throw std::domain_error("so_odd_character: degenerate point");
  return alternant_sin(shifted_weight(lam, k, k - 0.5), x) / den;
}

double sp_character(const Partition& lam, std::span<const double> x) {
  const int k = static_cast<int>(x.size());
  if (k == 0) {
    if (lam.size() != 0)
      throw std::domain_error("sp_character: nonempty label for Sp(0)");
    return 1.0;
  }
  check_rows(lam, k, "sp_character");
  double den = alternant_sin(shifted_weight(Partition{}, k, double(k)), x);
  if (std::fabs(den) < 1e-12)
    throw std::domain_error("sp_character: degenerate point");
  return alternant_sin(shifted_weight(lam, k, double(k)), x) / den;
}

double o_even_character_rotation(const Partition& lam,
                                 std::span<const double> x) {
  const int k = static_cast<int>(x.size());
  check_rows(lam, k, "o_even_character_rotation");
  double den = alternant_cos(shifted_weight(Partition{}, k, k - 1.0), x);
  if (std::fabs(den) < 1e-12)
    throw std::domain_error("o_even_character_rotation: degenerate point");
  double m = lam.rows() == k ? 2.0 : 1.0;
  return m * alternant_cos(shifted_weight(lam, k, k - 1.0), x) / den;
}

namespace {

// complete homogeneous sums h_0..h_maxdeg via Newton's identities
std::vector<cplx> homogeneous_series(std::span<const cplx> eigenvalues,
                                     int maxdeg) {
  std::vector<cplx> p(maxdeg + 1), h(maxdeg + 1);
  for (int t = 1; t <= maxdeg; ++t) {
    cplx s = 0.0;
    for (const cplx& z : eigenvalues) s += std::pow(z, t);
    p[t] = s;
  }
  h[0] = 1.0;
  for (int m = 1; m <= maxdeg; ++m) {
    cplx s = 0.0;
    for (int t = 1; t <= m; ++t) s += p[t] * h[m - t];
    h[m] = s / double(m);
  }
  return h;
}

// small complex determinant by Gaussian elimination with partial pivoting
cplx det_cplx(std::vector<cplx> a, int r) {
  cplx det = 1.0;
  for (int c = 0; c < r; ++c) {
    int piv = c;
    for (int i = c + 1; i < r; ++i)
      if (std::abs(a[i * r + c]) > std::abs(a[piv * r + c])) piv = i;
    if (std::abs(a[piv * r + c]) == 0.0) return 0.0;
    if (piv != c) {
      for (int j = 0; j < r; ++j) std::swap(a[piv * r + j], a[c * r + j]);
      det = -det;
    }
    det *= a[c * r + c];
    for (int i = c + 1; i < r; ++i) {
      cplx f = a[i * r + c] / a[c * r + c];
      for (int j = c; j < r; ++j) a[i * r + j] -= f * a[c * r + j];
    }
  }
  return det;
}

}  // namespace

cplx u_character(const Partition& lam, std::span<const cplx> eigenvalues) {
  if (lam.size() == 0) return 1.0;
  const int n = static_cast<int>(eigenvalues.size());
  if (lam.rows() > n) return 0.0;
  const int r = lam.rows();
  std::vector<cplx> h = homogeneous_series(eigenvalues, lam.row(1) + r);
  std::vector<cplx> jt(size_t(r) * r);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      int deg = lam.row(i) - i + j;
      jt[(i - 1) * r + (j - 1)] = (deg < 0) ? cplx(0.0) : h[deg];
    }
  return det_cplx(std::move(jt), r);
}

cplx o_character_universal(const Partition& lam,
                           std::span<const cplx> eigenvalues) {
  if (lam.size() == 0) return 1.0;
  const int r = lam.rows();
  std::vector<cplx> h = homogeneous_series(eigenvalues, lam.row(1) + r);
  auto hh = [&](int deg) { return deg < 0 ? cplx(0.0) : h[deg]; };
  std::vector<cplx> m(size_t(r) * r);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      m[(i - 1) * r + (j - 1)] =
          hh(lam.row(i) - i + j) - hh(lam.row(i) - i - j);
  return det_cplx(std::move(m), r);
}

cplx sp_character_universal(const Partition& lam,
                            std::span<const cplx> eigenvalues) {
  if (lam.size() == 0) return 1.0;
  const int r = lam.rows();
  std::vector<cplx> h = homogeneous_series(eigenvalues, lam.row(1) + r + 1);
  auto hh = [&](int deg) { return deg < 0 ? cplx(0.0) : h[deg]; };
  std::vector<cplx> m(size_t(r) * r);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      m[(i - 1) * r + (j - 1)] =
          j == 1 ? hh(lam.row(i) - i + 1)
                 : hh(lam.row(i) - i + j) + hh(lam.row(i) - i - j + 2);
  return det_cplx(std::move(m), r);
}

std::vector<std::vector<double>> positive_roots(RootSystem rs, int k) {
  std::vector<std::vector<double>> roots;
  auto unit = [k](int i, double v) {
    std::vector<double> e(k, 0.0);
    e[i] = v;
    return e;
  };
  for (int i = 0; i < k; ++i) {
    if (rs == RootSystem::Bk) roots.push_back(unit(i, 1.0));
    if (rs == RootSystem::Ck) roots.push_back(unit(i, 2.0));
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::vector<double> a(k, 0.0), b(k, 0.0);
      a[i] = 1.0;
      a[j] = -1.0;
      b[i] = 1.0;
      b[j] = 1.0;
      roots.push_back(a);
      roots.push_back(b);
    }
  return roots;
}

double weyl_denominator(RootSystem rs, int k, std::span<const double> x) {
  double prod = 1.0;
  for (const auto& alpha : positive_roots(rs, k)) {
    double dot = 0.0;
    for (int i = 0; i < k; ++i) dot += alpha[i] * x[i];
    prod *= 2.0 * std::sin(M_PI * dot);
  }
  return prod;
}

std::vector<double> rho_check(int N) {
  const int k = std::abs(N) / 2;
  std::vector<double> r(k);
  for (int i = 1; i <= k; ++i) r[i - 1] = (std::abs(N) + 1) / 2.0 - i;
  return r;
}

SquareSumReport verify_square_sums(const RootOfUnityContext& ctx, double tol) {
  SquareSumReport rep;
  for (const Partition& lam : brauer_members_all(ctx)) {
    double d = brauer_weight(ctx, lam);
    (lam.size() % 2 == 0 ? rep.even_sum : rep.odd_sum) += d * d;
  }
  const int k = ctx.rank();
  RootSystem rs = ctx.N > 0 ? (ctx.N % 2 ? RootSystem::Bk : RootSystem::Dk)
                            : RootSystem::Ck;
  double b = (ctx.N > 0 && ctx.N % 2 == 0) ? 2.0 : 1.0;
  std::vector<double> x = rho_check(ctx.N);
  for (double& v : x) v /= ctx.ell;
  double delta = weyl_denominator(rs, k, x);
  rep.closed_form = std::pow(double(ctx.ell), k) / (b * delta * delta);
  rep.rel_err_closed =
      std::fabs(rep.even_sum - rep.closed_form) / std::fabs(rep.closed_form);
  rep.rel_err_parity =
      std::fabs(rep.even_sum - rep.odd_sum) / std::fabs(rep.even_sum);
  rep.ok = rep.rel_err_closed < tol && rep.rel_err_parity < tol;
  return rep;
}

}  // namespace fss
