#include "fss/qarith.hpp"

#include <cmath>

#include "fss/labels.hpp"

namespace fss {

double hecke_weight(const RootOfUnityContext& ctx, const Partition& lam) {
  double v = 1.0;
  for (int i = 1; i <= lam.rows(); ++i)
    for (int j = 1; j <= lam.row(i); ++j)
      v *= ctx.qint(ctx.N + j - i) / ctx.qint(hook_length(lam, i, j));
  return v;
}

double brauer_weight(const RootOfUnityContext& ctx, const Partition& lam) {
  double v = 1.0;
  for (int i = 1; i <= lam.rows(); ++i)
    for (int j = 1; j <= lam.row(i); ++j)
      v *= ctx.qint(ctx.N + brauer_content(lam, i, j)) /
           ctx.qint(hook_length(lam, i, j));
  return v;
}

PositivityReport positivity_report(const RootOfUnityContext& ctx, double tol) {
  PositivityReport rep;
  const double qN = ctx.qint(ctx.N);
  for (const Partition& lam : brauer_members_all(ctx)) {
    ++rep.labels_checked;
    double omega = brauer_weight(ctx, lam) / std::pow(qN, lam.size());
    if (!(omega > tol)) {
      rep.all_positive = false;
      if (!rep.first_negative) rep.first_negative = {lam, omega};
    }
  }
  return rep;
}

WeightTable build_weight_table_serial(const RootOfUnityContext& ctx,
                                      WeightKind kind,
                                      const std::vector<Partition>& labels) {
  WeightTable t{ctx, kind, {}};
  t.entries.resize(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) {
    double v = kind == WeightKind::hecke ? hecke_weight(ctx, labels[i])
                                         : brauer_weight(ctx, labels[i]);
    t.entries[i] = {labels[i], v};
  }
  return t;
}

WeightTable build_weight_table(const RootOfUnityContext& ctx, WeightKind kind,
                               const std::vector<Partition>& labels) {
  WeightTable t{ctx, kind, {}};
  t.entries.resize(labels.size());
  const long n = static_cast<long>(labels.size());
#pragma omp parallel for schedule(static) if (n > 32)
  for (long i = 0; i < n; ++i) {
    double v = kind == WeightKind::hecke ? hecke_weight(ctx, labels[i])
                                         : brauer_weight(ctx, labels[i]);
    t.entries[i] = {labels[i], v};
  }
  return t;
}

}  // namespace fss
