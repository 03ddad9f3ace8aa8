#pragma once

#include <map>
#include <vector>

#include "fss/context.hpp"
#include "fss/labels.hpp"
#include "fss/lattice.hpp"
#include "fss/partition.hpp"

namespace fss {

// Group-element descriptor for a character evaluation point. The actual
// point is gamma / ell; rotation points carry rank-many entries, reflection
// points (full orthogonal group, N even only) rank-1 many.
struct EvalPoint {
  bool reflection = false;
  std::vector<double> gamma;
};

// Alcove evaluation points for the context. Asserts that every boundary
// diagram's character vanishes at every point; throws std::runtime_error
// ("configuration error") otherwise.
std::vector<EvalPoint> evaluation_points(const RootOfUnityContext& ctx);

// Restricted point family used for auxiliary large-level solves: points
// gamma = nu + rho for partitions nu with |nu| <= size_bound. No boundary
// assertion (supports for bounded sizes never reach the walls).
std::vector<EvalPoint> evaluation_points_bounded(const RootOfUnityContext& ctx,
                                                 int size_bound);

// Unitary-group eigenvalue list of the group element behind a point.
std::vector<cplx> u_eigenvalues(const RootOfUnityContext& ctx,
                                const EvalPoint& pt);

// Character of the label mu (member or boundary diagram) at the point.
// Handles the associated-diagram identification, the m(lam) factor for
// N even, the reflection-point rules, and the N < 0 transpose.
double fusion_character(const RootOfUnityContext& ctx, const Partition& mu,
                        const EvalPoint& pt);

enum class BranchMethod { direct, folded, littlewood };

struct BranchingTable {
  int N = 0;
  int ell = 0;  // 0 marks a classical (stable-level) table
  Partition lambda;
  std::map<Partition, long> entries;
  BranchMethod method = BranchMethod::direct;

  long at(const Partition& mu) const {
    auto it = entries.find(mu);
    return it == entries.end() ? 0 : it->second;
  }
};

// Stable-range branching via Littlewood's formula: sum over beta with all
// rows even (family 'O') or all columns even (family 'S') of c^lam_{mu,beta}.
BranchingTable littlewood_stable(const Partition& lam, char family);

// Character linear solve over the evaluation points.
BranchingTable fusion_branch_direct(const RootOfUnityContext& ctx,
                                    const Partition& lam);

// Affine folding of the classical table.
BranchingTable fusion_branch_folded(const RootOfUnityContext& ctx,
                                    const Partition& lam);
// As above with an explicit sign character; SignChar::eps on an even-N
// context reproduces the negative control.
BranchingTable fusion_branch_folded_sign(const RootOfUnityContext& ctx,
                                         const Partition& lam, SignChar sign);

// True finite-N classical table, computed as a direct solve at the
// auxiliary level ell' = 2 (|lam| + |N| + 1) where folding is trivial.
BranchingTable classical_branch(int N, const Partition& lam);

}  // namespace fss
