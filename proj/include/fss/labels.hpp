#pragma once

#include <vector>

#include "fss/context.hpp"
#include "fss/partition.hpp"

namespace fss {

enum class LabelKind { hecke, brauer };

// One slice of a label set: for the Hecke kind all members have exactly
// box_count boxes, for the Brauer kind box_count, box_count-2, ... boxes.
// boundary is filled for the Brauer kind only.
struct LabelSet {
  RootOfUnityContext ctx;
  LabelKind kind;
  int box_count;
  std::vector<Partition> members;
  std::vector<Partition> boundary;
};

// Membership classifier for the Brauer label set: 0 = member,
// 1 = boundary (exactly one inequality missed, by exactly one),
// 2 = neither.
int brauer_label_class(const RootOfUnityContext& ctx, const Partition& lam);

bool is_hecke_label(const RootOfUnityContext& ctx, const Partition& lam);

LabelSet hecke_labels(const RootOfUnityContext& ctx, int n);
LabelSet brauer_labels(const RootOfUnityContext& ctx, int n);

// The full (finite) Brauer label set / its boundary diagrams.
std::vector<Partition> brauer_members_all(const RootOfUnityContext& ctx);
std::vector<Partition> brauer_boundary_all(const RootOfUnityContext& ctx);

// Associated diagram: first column replaced by N - lam'_1, other columns
// unchanged. Requires N > 0 and lam'_1 <= N. Involution.
Partition associated_diagram(const Partition& lam, int N);

// Label-level periodicity: Hecke labels gain one full column of |N| boxes
// (a row of |N| for N < 0); Brauer labels are fixed. Throws if the result
// leaves the label set.
Partition periodicity_map(LabelKind kind, const RootOfUnityContext& ctx,
                          const Partition& lam);

// Inverse of periodicity_map on its image (Hecke kind).
Partition strip_period_column(const RootOfUnityContext& ctx,
                              const Partition& lam);

}  // namespace fss
