#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fss/context.hpp"
#include "fss/partition.hpp"

namespace fss {

enum class WeightKind { hecke, brauer };

// Hecke trace weight: product over boxes of [N + j - i] / [h(i,j)].
// The formula is used verbatim for N < 0 as well (the transpose appears
// only on the character side of the cross-checks).
double hecke_weight(const RootOfUnityContext& ctx, const Partition& lam);

// Brauer trace weight: product over boxes of [N + d(i,j)] / [h(i,j)].
double brauer_weight(const RootOfUnityContext& ctx, const Partition& lam);

struct PositivityReport {
  bool all_positive = true;
  std::optional<std::pair<Partition, double>> first_negative;
  int labels_checked = 0;
};

// Enumerates the full Brauer label set and tests the sign of the trace
// weight omega_{lam,|lam|} = d_lam / [N]^{|lam|}. This enumeration is the
// oracle; no case list is assumed.
PositivityReport positivity_report(const RootOfUnityContext& ctx,
                                   double tol = 1e-9);

struct WeightTable {
  RootOfUnityContext ctx;
  WeightKind kind;
  std::vector<std::pair<Partition, double>> entries;
};

WeightTable build_weight_table(const RootOfUnityContext& ctx, WeightKind kind,
                               const std::vector<Partition>& labels);
WeightTable build_weight_table_serial(const RootOfUnityContext& ctx,
                                      WeightKind kind,
                                      const std::vector<Partition>& labels);

}  // namespace fss
