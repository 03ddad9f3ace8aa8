// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion.
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fss/branching.hpp"
#include "fss/io.hpp"
#include "fss/labels.hpp"
#include "fss/lattice.hpp"
#include "fss/molev.hpp"
#include "fss/qarith.hpp"
#include "fss/towers.hpp"

using namespace fss;

namespace {

int failures = 0;

void line(int num, const std::string& name, bool ok,
          const std::string& detail) {
  std::printf("criterion %2d (%s): %s  %s\n", num, name.c_str(),
              ok ? "PASS" : "FAIL", detail.c_str());
  if (!ok) ++failures;
}

const std::vector<std::pair<int, int>> kGolden{{2, 8},  {2, 10}, {3, 7},
                                               {3, 9},  {4, 8},  {-4, 8}};
const std::vector<std::pair<int, int>> kWeightContexts{
    {2, 8}, {3, 7}, {3, 9}, {4, 8}, {-4, 8}};

// ---------------------------------------------------------------- 1
void criterion_relations() {
  double worst = 0.0;
  for (int N : {2, 3, 4}) {
    for (int ell = 5; ell <= 12; ++ell) {
      TensorRep rep = representation(unit_root_q(ell), N, 4);
      worst = std::max(worst, verify_relations(rep).max_residual);
    }
    TensorRep rep1 = representation(1.0, N, 4);
    worst = std::max(worst, verify_relations(rep1).max_residual);
  }
  line(1, "defining relations", worst < 1e-10,
       "max residual " + fmt9(worst) + " over N in {2,3,4}, ell in 5..12, q=1");
}

// ---------------------------------------------------------------- 2
double hecke_character_value(const RootOfUnityContext& ctx,
                             const Partition& lam) {
  const int aN = ctx.absN();
  std::vector<cplx> eigs;
  for (int i = 1; i <= aN; ++i)
    eigs.push_back(
        std::polar(1.0, 2.0 * M_PI * ((aN + 1) / 2.0 - i) / ctx.ell));
  Partition l = ctx.N < 0 ? lam.conjugate() : lam;
  double sign = (ctx.N < 0 && lam.size() % 2) ? -1.0 : 1.0;
  return sign * u_character(l, eigs).real();
}

double brauer_character_value(const RootOfUnityContext& ctx,
                              const Partition& lam) {
  std::vector<double> x = rho_check(ctx.N);
  for (double& v : x) v /= ctx.ell;
  if (ctx.N < 0) {
    double sign = lam.size() % 2 ? -1.0 : 1.0;
    return sign * sp_character(lam.conjugate(), x);
  }
  Partition nu = lam.col(1) <= ctx.rank() ? lam : associated_diagram(lam, ctx.N);
  return ctx.N % 2 ? so_odd_character(nu, x)
                   : o_even_character_rotation(nu, x);
}

void criterion_weight_crosscheck() {
  double worst = 0.0;
  int checked = 0;
  for (auto [N, ell] : kWeightContexts) {
    RootOfUnityContext ctx(N, ell);
    for (const Partition& lam : brauer_members_all(ctx)) {
      worst = std::max(worst, std::fabs(brauer_weight(ctx, lam) -
                                        brauer_character_value(ctx, lam)));
      ++checked;
    }
    for (int n = 0; n <= 8; ++n)
      for (const Partition& lam : hecke_labels(ctx, n).members) {
        worst = std::max(worst, std::fabs(hecke_weight(ctx, lam) -
                                          hecke_character_value(ctx, lam)));
        ++checked;
      }
  }
  line(2, "weights vs characters", worst < 1e-9,
       "max deviation " + fmt9(worst) + " over " + std::to_string(checked) +
           " labels");
}

// ---------------------------------------------------------------- 3
void criterion_square_sums() {
  bool ok = true;
  double worst = 0.0;
  for (auto [N, ell] : kWeightContexts) {
    SquareSumReport rep = verify_square_sums(RootOfUnityContext(N, ell), 1e-9);
    ok = ok && rep.ok;
    worst = std::max({worst, rep.rel_err_closed, rep.rel_err_parity});
  }
  SquareSumReport r28 = verify_square_sums(RootOfUnityContext(2, 8), 1e-9);
  bool exact = std::fabs(r28.even_sum - 4.0) < 1e-9;
  line(3, "square sums", ok && exact,
       "max rel err " + fmt9(worst) + "; (2,8) even sum " +
           fmt9(r28.even_sum));
}

// ---------------------------------------------------------------- 4
void criterion_branching_agreement() {
  bool ok = true;
  int checked = 0;
  std::string detail;
  for (auto [N, ell] : std::vector<std::pair<int, int>>{
           {3, 7}, {3, 9}, {-4, 8}, {4, 8}}) {
    RootOfUnityContext ctx(N, ell);
    for (int n = 1; n <= 8 && ok; ++n)
      for (const Partition& lam : hecke_labels(ctx, n).members) {
        BranchingTable direct = fusion_branch_direct(ctx, lam);
        BranchingTable folded = fusion_branch_folded(ctx, lam);
        ++checked;
        if (direct.entries != folded.entries) {
          ok = false;
          detail = "mismatch at N=" + std::to_string(N) +
                   " ell=" + std::to_string(ell) + " lambda=[" +
                   lam.to_text() + "]";
          break;
        }
      }
  }
  // negative control: the plain sign character must fail for (4,8)
  bool control_failed = false;
  RootOfUnityContext c48(4, 8);
  for (int n = 1; n <= 8 && !control_failed; ++n)
    for (const Partition& lam : hecke_labels(c48, n).members) {
      try {
        BranchingTable ctrl = fusion_branch_folded_sign(c48, lam, SignChar::eps);
        if (ctrl.entries != fusion_branch_direct(c48, lam).entries) {
          control_failed = true;
          break;
        }
      } catch (const std::exception&) {
        control_failed = true;
        break;
      }
    }
  if (ok && detail.empty())
    detail = std::to_string(checked) + " labels agree; eps control " +
             (control_failed ? "fails as required" : "UNEXPECTEDLY PASSES");
  line(4, "branching method agreement", ok && control_failed, detail);
}

// ---------------------------------------------------------------- 5
void criterion_index_agreement() {
  bool ok = true;
  double worst = 0.0;
  for (auto [N, ell] : kGolden) {
    RootOfUnityContext ctx(N, ell);
    double ratio = index_ratio(ctx);
    double closed = index_closed_form(N, ell);
    double rel = std::fabs(ratio - closed) / closed;
    worst = std::max(worst, rel);
    ok = ok && rel < 1e-8;
  }
  auto near = [](double a, double b) { return std::fabs(a - b) < 1e-9; };
  ok = ok && near(index_closed_form(2, 8), 2.0 + std::sqrt(2.0));
  ok = ok && near(index_closed_form(3, 7), 3.801937736);
  ok = ok &&
       near(index_closed_form(3, 7), 4.0 * std::pow(std::cos(M_PI / 14), 2));
  ok = ok && near(index_closed_form(4, 8), 4.0 + 2.0 * std::sqrt(2.0));
  ok = ok && near(index_closed_form(-4, 8), 4.0 + 2.0 * std::sqrt(2.0));
  line(5, "index two ways", ok, "max rel err " + fmt9(worst));
}

// ---------------------------------------------------------------- 6
Partition strip_full_columns(const Partition& lam, int N) {
  // remove all columns of height exactly N (i.e. subtract the N-th row)
  int base = lam.row(N);
  std::vector<int> rows;
  for (int i = 1; i <= N; ++i)
    if (lam.row(i) - base > 0) rows.push_back(lam.row(i) - base);
  return Partition(std::move(rows));
}

void criterion_graphs() {
  bool ok = true;
  std::string detail;

  // the N = 2 series realizes the D-graph tower structure
  ok = ok && bipartite_isomorphic(brauer_tower_graph(RootOfUnityContext(2, 8)),
                                  dynkin_D(5), false);
  ok = ok && bipartite_isomorphic(brauer_tower_graph(RootOfUnityContext(2, 10)),
                                  dynkin_D(6), false);
  if (!ok) detail = "N=2 tower graphs are not D5/D6";

  // (3,7): stable inclusion graph is D8
  InclusionGraph g37 = stabilize(RootOfUnityContext(3, 7)).graph;
  if (!bipartite_isomorphic(g37.as_bipartite(), dynkin_D(8), false)) {
    ok = false;
    detail += " (3,7) not D8;";
  }

  // (3,9): three invertible even vertices and a unique double edge
  InclusionGraph g39 = stabilize(RootOfUnityContext(3, 9)).graph;
  int invertible = 0;
  for (double v : g39.a)
    if (std::fabs(v - 1.0) < 1e-9) ++invertible;
  int doubles = 0, higher = 0;
  for (const auto& row : g39.mult)
    for (long m : row) {
      if (m == 2) ++doubles;
      if (m > 2) ++higher;
    }
  if (invertible != 3 || doubles != 1 || higher != 0) {
    ok = false;
    detail += " (3,9) invertibles/double-edge wrong;";
  }

  // (4,8) at n = 12: invertible labels and the [2] adjacency
  InclusionGraph g48 = inclusion_graph(RootOfUnityContext(4, 8), 12);
  std::vector<Partition> inv48;
  for (size_t i = 0; i < g48.even_labels.size(); ++i)
    if (std::fabs(g48.a[i] - 1.0) < 1e-9) inv48.push_back(g48.even_labels[i]);
  std::vector<Partition> expect_inv{
      Partition({3, 3, 3, 3}), Partition({4, 4, 4}), Partition({5, 5, 1, 1}),
      Partition({6, 2, 2, 2})};
  std::sort(inv48.begin(), inv48.end());
  std::sort(expect_inv.begin(), expect_inv.end());
  if (inv48 != expect_inv) {
    ok = false;
    detail += " (4,8) invertible set wrong;";
  }
  int col2 = -1;
  for (size_t j = 0; j < g48.odd_labels.size(); ++j)
    if (g48.odd_labels[j] == Partition({2})) col2 = int(j);
  std::vector<Partition> nbr;
  if (col2 >= 0)
    for (size_t i = 0; i < g48.even_labels.size(); ++i)
      if (g48.mult[i][col2])
        nbr.push_back(strip_full_columns(g48.even_labels[i], 4));
  std::vector<Partition> expect_nbr{Partition({2, 1, 1}), Partition({3, 1}),
                                    Partition({4, 3, 1}), Partition({3, 3, 2})};
  std::sort(nbr.begin(), nbr.end());
  std::sort(expect_nbr.begin(), expect_nbr.end());
  if (nbr != expect_nbr) {
    ok = false;
    detail += " (4,8) [2]-adjacency wrong;";
  }

  // (4,8) and (-4,8) give the same graph
  InclusionGraph gm48 = stabilize(RootOfUnityContext(-4, 8)).graph;
  InclusionGraph g48s = stabilize(RootOfUnityContext(4, 8)).graph;
  if (!bipartite_isomorphic(g48s.as_bipartite(), gm48.as_bipartite(), true)) {
    ok = false;
    detail += " (4,8) vs (-4,8) not isomorphic;";
  }
  if (ok)
    detail = "D5, D6 (tower), D8, (3,9) and (4,8) structure, (4,8)=(-4,8)";
  line(6, "principal graphs", ok, detail);
}

// ---------------------------------------------------------------- 7
void criterion_pf() {
  double worst = 0.0;
  for (auto [N, ell] : kGolden) {
    InclusionGraph g = stabilize(RootOfUnityContext(N, ell)).graph;
    worst = std::max(worst, pf_consistency(g));
  }
  line(7, "Perron-Frobenius consistency", worst < 1e-8,
       "max rel residual " + fmt9(worst));
}

// ---------------------------------------------------------------- 8
void criterion_positivity() {
  bool ok = true;
  for (auto [N, ell] : std::vector<std::pair<int, int>>{
           {3, 7}, {3, 9}, {5, 9}, {2, 8}, {4, 8}})
    ok = ok && positivity_report(RootOfUnityContext(N, ell)).all_positive;
  PositivityReport bad = positivity_report(RootOfUnityContext(3, 8));
  ok = ok && !bad.all_positive && bad.first_negative.has_value();
  PositivityReport sp = positivity_report(RootOfUnityContext(-4, 8));
  std::string sp_note =
      std::string("(-4,8) recorded: ") +
      (sp.all_positive ? "all positive (unitary)" : "negative witness found");
  line(8, "positivity oracle", ok,
       "witness at (3,8): [" +
           (bad.first_negative ? bad.first_negative->first.to_text() : "?") +
           "]; " + sp_note);
}

// ---------------------------------------------------------------- 9
void criterion_classical_limit() {
  bool ok = true;
  int checked = 0;
  std::string detail;
  for (int n = 1; n <= 6 && ok; ++n)
    for (const Partition& lam : partitions_of(n)) {
      for (int N : {2 * n, 2 * n + 1}) {
        BranchingTable a = classical_branch(N, lam);
        BranchingTable b = littlewood_stable(lam, 'O');
        ++checked;
        if (a.entries != b.entries) {
          ok = false;
          detail = "mismatch at N=" + std::to_string(N) + " lambda=[" +
                   lam.to_text() + "]";
          break;
        }
      }
      if (!ok) break;
    }
  // the two stable anchors at N = 3
  std::map<Partition, long> t21{{Partition({2, 1}), 1}, {Partition({1}), 1}};
  std::map<Partition, long> t4{
      {Partition({4}), 1}, {Partition({2}), 1}, {Partition(), 1}};
  ok = ok && classical_branch(3, Partition({2, 1})).entries == t21;
  ok = ok && classical_branch(3, Partition({4})).entries == t4;
  if (ok)
    detail = std::to_string(checked) +
             " stable-range tables match, plus the N=3 anchors";
  line(9, "classical limit", ok, detail);
}

// ---------------------------------------------------------------- 10
void criterion_asymptotics() {
  std::vector<int> ells;
  for (int ell = 7; ell <= 31; ell += 2) ells.push_back(ell);
  AsymptoticsProbe probe = asymptotics_probe(3, ells);
  bool ok = probe.dim_p == 5 && dim_p(-4) == 5;
  for (size_t i = 0; i + 1 < probe.rows.size(); ++i) {
    ok = ok && probe.rows[i].ratio > 0.0;
    ok = ok && probe.rows[i + 1].ratio < probe.rows[i].ratio;
  }
  double tail_gap = std::fabs(probe.rows[probe.rows.size() - 1].ratio -
                              probe.rows[probe.rows.size() - 2].ratio);
  ok = ok && probe.rows.back().ratio > 0.0;
  line(10, "index asymptotics", ok,
       "dim p = " + std::to_string(probe.dim_p) + ", ratio " +
           fmt9(probe.rows.front().ratio) + " -> " +
           fmt9(probe.rows.back().ratio) + " (tail gap " + fmt9(tail_gap) +
           ")");
}

}  // namespace

int main() {
  criterion_relations();
  criterion_weight_crosscheck();
  criterion_square_sums();
  criterion_branching_agreement();
  criterion_index_agreement();
  criterion_graphs();
  criterion_pf();
  criterion_positivity();
  criterion_classical_limit();
  criterion_asymptotics();
  std::printf("RESULT: %d/10 criteria pass\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
