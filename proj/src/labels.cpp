#include "fss/labels.hpp"

#include <algorithm>
#include <stdexcept>

namespace fss {

namespace {

// Violation amounts of the two defining inequalities for the active case.
void brauer_violations(const RootOfUnityContext& ctx, const Partition& lam,
                       int& v1, int& v2) {
  const int N = ctx.N, ell = ctx.ell, aN = ctx.absN();
  const int c12 = lam.col(1) + lam.col(2);
  const int r12 = lam.row(1) + lam.row(2);
  if (N > 0) {
    v1 = std::max(0, c12 - N);
    if ((ell - N) % 2 == 0)
      v2 = std::max(0, lam.row(1) - (ell - N) / 2);
    else
      v2 = std::max(0, r12 - (ell - N));
  } else if (aN % 2 == 0) {
    v1 = std::max(0, lam.row(1) - aN / 2);
    v2 = std::max(0, c12 - (ell - aN));
  } else {
    v1 = std::max(0, r12 - aN);
    v2 = std::max(0, c12 - (ell - aN));
  }
}

void brauer_enum_bounds(const RootOfUnityContext& ctx, int& max_width,
                        int& max_rows) {
  const int N = ctx.N, ell = ctx.ell, aN = ctx.absN();
  if (N > 0) {
    max_rows = N + 1;
    max_width = ((ell - N) % 2 == 0) ? (ell - N) / 2 + 1 : ell - N + 1;
  } else {
    max_rows = ell - aN + 1;
    max_width = (aN % 2 == 0) ? aN / 2 + 1 : aN + 1;
  }
}

}  // namespace

int brauer_label_class(const RootOfUnityContext& ctx, const Partition& lam) {
  int v1, v2;
  brauer_violations(ctx, lam, v1, v2);
  if (v1 == 0 && v2 == 0) return 0;
  if ((v1 == 1 && v2 == 0) || (v1 == 0 && v2 == 1)) return 1;
  return 2;
}

bool is_hecke_label(const RootOfUnityContext& ctx, const Partition& lam) {
  const int aN = ctx.absN();
  if (ctx.N > 0) {
    if (lam.rows() > ctx.N) return false;
    return lam.row(1) - lam.row(ctx.N) <= ctx.ell - ctx.N;
  }
  if (lam.row(1) > aN) return false;
  return lam.col(1) - lam.col(aN) <= ctx.ell - aN;
}

LabelSet hecke_labels(const RootOfUnityContext& ctx, int n) {
  if (n < 0) throw std::domain_error("box count must be >= 0");
  LabelSet out{ctx, LabelKind::hecke, n, {}, {}};
  int max_rows = ctx.N > 0 ? ctx.N : n;
  int max_width = ctx.N > 0 ? n : ctx.absN();
  for (const Partition& p : partitions_of(n, max_width, max_rows))
    if (is_hecke_label(ctx, p)) out.members.push_back(p);
  return out;
}

LabelSet brauer_labels(const RootOfUnityContext& ctx, int n) {
  if (n < 0) throw std::domain_error("box count must be >= 0");
  LabelSet out{ctx, LabelKind::brauer, n, {}, {}};
  int mw, mr;
  brauer_enum_bounds(ctx, mw, mr);
  for (int m = n % 2; m <= n; m += 2) {
    for (const Partition& p : partitions_of(m, mw, mr)) {
      int cls = brauer_label_class(ctx, p);
      if (cls == 0)
        out.members.push_back(p);
      else if (cls == 1)
        out.boundary.push_back(p);
    }
  }
  std::sort(out.members.begin(), out.members.end());
  std::sort(out.boundary.begin(), out.boundary.end());
  return out;
}

std::vector<Partition> brauer_members_all(const RootOfUnityContext& ctx) {
  int mw, mr;
  brauer_enum_bounds(ctx, mw, mr);
  std::vector<Partition> out;
  for (int m = 0; m <= mw * mr; ++m)
    for (const Partition& p : partitions_of(m, mw, mr))
      if (brauer_label_class(ctx, p) == 0) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> brauer_boundary_all(const RootOfUnityContext& ctx) {
  int mw, mr;
  brauer_enum_bounds(ctx, mw, mr);
  std::vector<Partition> out;
  for (int m = 0; m <= mw * mr; ++m)
    for (const Partition& p : partitions_of(m, mw, mr))
      if (brauer_label_class(ctx, p) == 1) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

Partition associated_diagram(const Partition& lam, int N) {
  if (N <= 0) throw std::domain_error("associated diagram needs N > 0");
  int c1 = lam.col(1);
  if (c1 > N) throw std::domain_error("first column exceeds N");
  if (lam.col(2) > N - c1)
    throw std::domain_error("associate of [" + lam.to_text() +
                            "] is not a diagram for N = " + std::to_string(N));
  std::vector<int> cols;
  cols.push_back(N - c1);
  for (int j = 2; j <= lam.row(1); ++j) cols.push_back(lam.col(j));
  while (!cols.empty() && cols.back() == 0) cols.pop_back();
  // column heights back to row lengths
  return Partition(std::move(cols)).conjugate();
}

Partition periodicity_map(LabelKind kind, const RootOfUnityContext& ctx,
                          const Partition& lam) {
  if (kind == LabelKind::brauer) {
    if (brauer_label_class(ctx, lam) != 0)
      throw std::domain_error("not a Brauer label");
    return lam;
  }
  if (!is_hecke_label(ctx, lam)) throw std::domain_error("not a Hecke label");
  Partition res;
  if (ctx.N > 0) {
    std::vector<int> rows(ctx.N, 0);
    for (int i = 1; i <= ctx.N; ++i) rows[i - 1] = lam.row(i) + 1;
    res = Partition(std::move(rows));
  } else {
    std::vector<int> rows;
    rows.push_back(ctx.absN());
    for (int r : lam.row_lengths()) rows.push_back(r);
    res = Partition(std::move(rows));
  }
  if (!is_hecke_label(ctx, res))
    throw std::domain_error("periodicity image leaves the label set");
  return res;
}

Partition strip_period_column(const RootOfUnityContext& ctx,
                              const Partition& lam) {
  if (ctx.N > 0) {
    if (lam.rows() > ctx.N || lam.row(ctx.N) < 1)
      throw std::domain_error("no full column of N boxes to strip");
    std::vector<int> rows;
    for (int i = 1; i <= ctx.N; ++i)
      if (lam.row(i) - 1 > 0) rows.push_back(lam.row(i) - 1);
    return Partition(std::move(rows));
  }
  if (lam.row(1) != ctx.absN())
    throw std::domain_error("no full row of |N| boxes to strip");
  std::vector<int> rows(lam.row_lengths().begin() + 1,
                        lam.row_lengths().end());
  return Partition(std::move(rows));
}

}  // namespace fss
