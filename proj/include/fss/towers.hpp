#pragma once

#include <map>
#include <string>
#include <vector>

#include "fss/branching.hpp"
#include "fss/context.hpp"
#include "fss/labels.hpp"
#include "fss/partition.hpp"

namespace fss {

struct BratteliLevel {
  std::vector<Partition> labels;
  std::vector<long> path_counts;
};

struct BratteliDiagram {
  LabelKind kind;
  int n_max = 0;
  std::vector<BratteliLevel> levels;  // 0..n_max
  // edges[l]: (index at level l, index at level l+1), multiplicity 1
  std::vector<std::vector<std::pair<int, int>>> edges;
};

BratteliDiagram build_bratteli(const RootOfUnityContext& ctx, LabelKind kind,
                               int n_max);
// Untruncated Brauer tower (all partitions admitted).
BratteliDiagram build_bratteli_free(int n_max);

// Bipartite multigraph with vertex weights; used for inclusion graphs,
// tower transition graphs and Dynkin references.
struct BipartiteGraph {
  std::vector<std::string> a_names, b_names;
  std::vector<std::vector<long>> mult;  // a_names.size() x b_names.size()
  std::vector<double> wa, wb;           // optional weights (empty = none)
};

// Isomorphism of bipartite weighted multigraphs (allowing the two sides
// to swap when sizes permit). Weights compared to 1e-6 when use_weights.
bool bipartite_isomorphic(const BipartiteGraph& g, const BipartiteGraph& h,
                          bool use_weights);

// Dynkin D_m as a bipartite reference graph.
BipartiteGraph dynkin_D(int m);

struct InclusionGraph {
  RootOfUnityContext ctx;
  int n = 0;
  std::vector<Partition> even_labels;  // Hecke side, n boxes
  std::vector<Partition> odd_labels;   // Brauer side, n, n-2, ... boxes
  std::vector<std::vector<long>> mult;
  std::vector<double> a;  // Hecke trace weights d~
  std::vector<double> b;  // Brauer trace weights d
  double index_value = 0.0;  // |a|^2 / |b|^2 at this level

  BipartiteGraph as_bipartite() const;
};

InclusionGraph inclusion_graph(const RootOfUnityContext& ctx, int n);

struct StabilizeResult {
  int n_stable = 0;
  InclusionGraph graph;
};

// Smallest even n whose inclusion graph agrees with the graphs at n + 2N
// and n + 4N under the periodicity bijections.
StabilizeResult stabilize(const RootOfUnityContext& ctx, int n_cap = 0);

double index_ratio(const RootOfUnityContext& ctx);
double index_closed_form(int N, int ell);

// max over odd vertices of |sum_lam g a_lam - index b_mu| / (index b_mu)
double pf_consistency(const InclusionGraph& g);

std::map<Partition, double> local_indices(const InclusionGraph& g);

struct AsymptoticsRow {
  int ell;
  double index;
  double ratio;  // index / ell^{dim p}
};
struct AsymptoticsProbe {
  int dim_p = 0;
  std::vector<AsymptoticsRow> rows;
};
AsymptoticsProbe asymptotics_probe(int N, const std::vector<int>& ells);

// Weights of the complement module p and its zero-weight multiplicity.
std::vector<std::vector<double>> p_weights(int N);
int p_zero_multiplicity(int N);
int dim_p(int N);

// Stable transition graph of the Brauer tower: vertices are all labels,
// split by box parity; edges join labels differing by one box. For N = 2
// this is the Dynkin graph D_{ell/2+1}.
BipartiteGraph brauer_tower_graph(const RootOfUnityContext& ctx);

}  // namespace fss
