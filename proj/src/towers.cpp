#include "fss/towers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fss/qarith.hpp"

namespace fss {

namespace {

bool one_box_apart(const Partition& a, const Partition& b) {
  const Partition &small = a.size() < b.size() ? a : b,
                  &big = a.size() < b.size() ? b : a;
  if (big.size() - small.size() != 1) return false;
  return big.contains(small);
}

std::vector<Partition> level_labels(const RootOfUnityContext& ctx,
                                    LabelKind kind, int n) {
  return kind == LabelKind::hecke ? hecke_labels(ctx, n).members
                                  : brauer_labels(ctx, n).members;
}

}  // namespace

BratteliDiagram build_bratteli(const RootOfUnityContext& ctx, LabelKind kind,
                               int n_max) {
  if (n_max < 1) throw std::domain_error("build_bratteli: n_max >= 1");
  BratteliDiagram d;
  d.kind = kind;
  d.n_max = n_max;
  d.levels.resize(n_max + 1);
  d.edges.resize(n_max);
  for (int n = 0; n <= n_max; ++n) {
    d.levels[n].labels = level_labels(ctx, kind, n);
    d.levels[n].path_counts.assign(d.levels[n].labels.size(), 0);
  }
  d.levels[0].path_counts.assign(d.levels[0].labels.size(), 1);
  for (int n = 0; n < n_max; ++n) {
    const auto& cur = d.levels[n];
    auto& nxt = d.levels[n + 1];
    for (size_t i = 0; i < cur.labels.size(); ++i)
      for (size_t j = 0; j < nxt.labels.size(); ++j) {
        bool edge = kind == LabelKind::hecke
                        ? (nxt.labels[j].size() == cur.labels[i].size() + 1 &&
                           nxt.labels[j].contains(cur.labels[i]))
                        : one_box_apart(cur.labels[i], nxt.labels[j]);
        if (edge) {
          d.edges[n].emplace_back(int(i), int(j));
          nxt.path_counts[j] += cur.path_counts[i];
        }
      }
  }
  return d;
}

BratteliDiagram build_bratteli_free(int n_max) {
  BratteliDiagram d;
  d.kind = LabelKind::brauer;
  d.n_max = n_max;
  d.levels.resize(n_max + 1);
  d.edges.resize(n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int m = n % 2; m <= n; m += 2)
      for (const Partition& p : partitions_of(m))
        d.levels[n].labels.push_back(p);
    std::sort(d.levels[n].labels.begin(), d.levels[n].labels.end());
    d.levels[n].path_counts.assign(d.levels[n].labels.size(), 0);
  }
  d.levels[0].path_counts[0] = 1;
  for (int n = 0; n < n_max; ++n) {
    const auto& cur = d.levels[n];
    auto& nxt = d.levels[n + 1];
    for (size_t i = 0; i < cur.labels.size(); ++i)
      for (size_t j = 0; j < nxt.labels.size(); ++j)
        if (one_box_apart(cur.labels[i], nxt.labels[j])) {
          d.edges[n].emplace_back(int(i), int(j));
          nxt.path_counts[j] += cur.path_counts[i];
        }
  }
  return d;
}

// -----------------------------------------------------------------------
// Bipartite graphs and isomorphism

namespace {

struct VertexKey {
  long weight_key;  // rounded weight or 0
  std::vector<long> incident;  // sorted multiplicities
  bool operator<(const VertexKey& o) const {
    if (weight_key != o.weight_key) return weight_key < o.weight_key;
    return incident < o.incident;
  }
  bool operator==(const VertexKey& o) const {
    return weight_key == o.weight_key && incident == o.incident;
  }
};

VertexKey key_of(const std::vector<std::vector<long>>& mult, bool row, int idx,
                 const std::vector<double>& w, bool use_weights) {
  VertexKey k;
  k.weight_key = use_weights && idx < int(w.size())
                     ? std::lround(w[idx] * 1e6)
                     : 0;
  if (row)
    for (const long m : mult[idx]) {
      if (m) k.incident.push_back(m);
    }
  else
    for (const auto& r : mult) {
      if (r[idx]) k.incident.push_back(r[idx]);
    }
  std::sort(k.incident.begin(), k.incident.end());
  return k;
}

bool iso_search(const BipartiteGraph& g, const BipartiteGraph& h,
                bool use_weights) {
  const int na = int(g.a_names.size()), nb = int(g.b_names.size());
  if (na != int(h.a_names.size()) || nb != int(h.b_names.size())) return false;
  std::vector<VertexKey> ga(na), ha(na), gb(nb), hb(nb);
  for (int i = 0; i < na; ++i) {
    ga[i] = key_of(g.mult, true, i, g.wa, use_weights);
    ha[i] = key_of(h.mult, true, i, h.wa, use_weights);
  }
  for (int j = 0; j < nb; ++j) {
    gb[j] = key_of(g.mult, false, j, g.wb, use_weights);
    hb[j] = key_of(h.mult, false, j, h.wb, use_weights);
  }
  {
    auto sa = ga, sb = ha;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (!(sa == sb)) return false;
    auto ta = gb, tb = hb;
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    if (!(ta == tb)) return false;
  }
  // backtracking assignment a-side then b-side
  std::vector<int> amap(na, -1), bmap(nb, -1);
  std::vector<bool> aused(na, false), bused(nb, false);

  std::function<bool(int)> match_b = [&](int j) -> bool {
    if (j == nb) return true;
    for (int t = 0; t < nb; ++t) {
      if (bused[t] || !(gb[j] == hb[t])) continue;
      bool ok = true;
      for (int i = 0; i < na && ok; ++i)
        if (g.mult[i][j] != h.mult[amap[i]][t]) ok = false;
      if (!ok) continue;
      bused[t] = true;
      bmap[j] = t;
      if (match_b(j + 1)) return true;
      bused[t] = false;
    }
    return false;
  };
  std::function<bool(int)> match_a = [&](int i) -> bool {
    if (i == na) return match_b(0);
    for (int t = 0; t < na; ++t) {
      if (aused[t] || !(ga[i] == ha[t])) continue;
      aused[t] = true;
      amap[i] = t;
      if (match_a(i + 1)) return true;
      aused[t] = false;
    }
    return false;
  };
  return match_a(0);
}

}  // namespace

bool bipartite_isomorphic(const BipartiteGraph& g, const BipartiteGraph& h,
                          bool use_weights) {
  if (iso_search(g, h, use_weights)) return true;
  // allow the two sides to swap
  if (g.a_names.size() == h.b_names.size() &&
      g.b_names.size() == h.a_names.size()) {
    BipartiteGraph ht;
    ht.a_names = h.b_names;
    ht.b_names = h.a_names;
    ht.wa = h.wb;
    ht.wb = h.wa;
    ht.mult.assign(ht.a_names.size(),
                   std::vector<long>(ht.b_names.size(), 0));
    for (size_t i = 0; i < h.a_names.size(); ++i)
      for (size_t j = 0; j < h.b_names.size(); ++j)
        ht.mult[j][i] = h.mult[i][j];
    return iso_search(g, ht, use_weights);
  }
  return false;
}

BipartiteGraph dynkin_D(int m) {
  if (m < 4) throw std::domain_error("dynkin_D: m >= 4");
  // chain 1-2-...-(m-2), tips m-1 and m attached to m-2; 2-coloring
  std::vector<std::vector<int>> adj(m + 1);
  for (int v = 1; v + 1 <= m - 2; ++v) {
    adj[v].push_back(v + 1);
    adj[v + 1].push_back(v);
  }
  adj[m - 2].push_back(m - 1);
  adj[m - 1].push_back(m - 2);
  adj[m - 2].push_back(m);
  adj[m].push_back(m - 2);
  std::vector<int> color(m + 1, -1);
  color[1] = 0;
  std::vector<int> stack{1};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v])
      if (color[u] < 0) {
        color[u] = 1 - color[v];
        stack.push_back(u);
      }
  }
  BipartiteGraph g;
  std::vector<int> aidx(m + 1, -1), bidx(m + 1, -1);
  for (int v = 1; v <= m; ++v) {
    if (color[v] == 0) {
      aidx[v] = int(g.a_names.size());
      g.a_names.push_back("v" + std::to_string(v));
    } else {
      bidx[v] = int(g.b_names.size());
      g.b_names.push_back("v" + std::to_string(v));
    }
  }
  g.mult.assign(g.a_names.size(), std::vector<long>(g.b_names.size(), 0));
  for (int v = 1; v <= m; ++v)
    for (int u : adj[v])
      if (color[v] == 0) g.mult[aidx[v]][bidx[u]] = 1;
  return g;
}

// -----------------------------------------------------------------------
// Inclusion graphs

BipartiteGraph InclusionGraph::as_bipartite() const {
  BipartiteGraph g;
  for (const Partition& p : even_labels) g.a_names.push_back(p.to_text());
  for (const Partition& p : odd_labels) g.b_names.push_back(p.to_text());
  g.mult = mult;
  g.wa = a;
  g.wb = b;
  return g;
}

InclusionGraph inclusion_graph(const RootOfUnityContext& ctx, int n) {
  if (n < 2 || n % 2) throw std::domain_error("inclusion_graph: n even, >= 2");
  InclusionGraph g{ctx};
  g.n = n;
  g.even_labels = hecke_labels(ctx, n).members;
  g.odd_labels = brauer_labels(ctx, n).members;
  const int ne = int(g.even_labels.size()), no = int(g.odd_labels.size());
  g.mult.assign(ne, std::vector<long>(no, 0));
  g.a.resize(ne);
  g.b.resize(no);
#pragma omp parallel for schedule(dynamic) if (ne > 4)
  for (int i = 0; i < ne; ++i) {
    BranchingTable t = fusion_branch_direct(ctx, g.even_labels[i]);
    for (int j = 0; j < no; ++j) g.mult[i][j] = t.at(g.odd_labels[j]);
    g.a[i] = hecke_weight(ctx, g.even_labels[i]);
  }
  for (int j = 0; j < no; ++j) g.b[j] = brauer_weight(ctx, g.odd_labels[j]);
  double na2 = 0, nb2 = 0;
  for (double v : g.a) na2 += v * v;
  for (double v : g.b) nb2 += v * v;
  g.index_value = na2 / nb2;
  return g;
}

namespace {

// Compare inclusion graphs at n and n + 2N under the periodicity
// bijections: Hecke labels gain two period columns, Brauer labels are fixed.
bool graphs_agree(const RootOfUnityContext& ctx, const InclusionGraph& g,
                  const InclusionGraph& h) {
  if (g.even_labels.size() != h.even_labels.size()) return false;
  if (g.odd_labels != h.odd_labels) return false;
  std::vector<int> emap(g.even_labels.size());
  for (size_t i = 0; i < g.even_labels.size(); ++i) {
    Partition img;
    try {
      img = periodicity_map(LabelKind::hecke, ctx,
                            periodicity_map(LabelKind::hecke, ctx,
                                            g.even_labels[i]));
    } catch (const std::domain_error&) {
      return false;
    }
    auto it = std::find(h.even_labels.begin(), h.even_labels.end(), img);
    if (it == h.even_labels.end()) return false;
    emap[i] = int(it - h.even_labels.begin());
  }
  std::vector<bool> hit(h.even_labels.size(), false);
  for (int t : emap) {
    if (hit[t]) return false;
    hit[t] = true;
  }
  for (size_t i = 0; i < g.even_labels.size(); ++i)
    for (size_t j = 0; j < g.odd_labels.size(); ++j)
      if (g.mult[i][j] != h.mult[emap[i]][j]) return false;
  return true;
}

}  // namespace

StabilizeResult stabilize(const RootOfUnityContext& ctx, int n_cap) {
  const int aN = ctx.absN();
  if (n_cap <= 0) n_cap = 8 * aN + 8;
  for (int n = 2; n + 4 * aN <= n_cap + 4 * aN; n += 2) {
    if (n > n_cap)
      throw std::runtime_error("stabilize: no stabilization up to n = " +
                               std::to_string(n_cap));
    InclusionGraph g0 = inclusion_graph(ctx, n);
    InclusionGraph g1 = inclusion_graph(ctx, n + 2 * aN);
    if (!graphs_agree(ctx, g0, g1)) continue;
    InclusionGraph g2 = inclusion_graph(ctx, n + 4 * aN);
    if (!graphs_agree(ctx, g1, g2)) continue;
    return {n, std::move(g0)};
  }
  throw std::runtime_error("stabilize: no stabilization up to n_cap");
}

double index_ratio(const RootOfUnityContext& ctx) {
  return stabilize(ctx).graph.index_value;
}

std::vector<std::vector<double>> p_weights(int N) {
  const int k = std::abs(N) / 2;
  std::vector<std::vector<double>> w;
  auto unit = [&](int i, double v) {
    std::vector<double> e(k, 0.0);
    e[i] = v;
    return e;
  };
  if (N > 0)
    for (int i = 0; i < k; ++i) w.push_back(unit(i, 2.0));
  if (N > 0 && N % 2 == 1)
    for (int i = 0; i < k; ++i) w.push_back(unit(i, 1.0));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::vector<double> a(k, 0.0), b(k, 0.0);
      a[i] = 1.0;
      a[j] = -1.0;
      b[i] = 1.0;
      b[j] = 1.0;
      w.push_back(a);
      w.push_back(b);
    }
  return w;
}

int p_zero_multiplicity(int N) {
  const int k = std::abs(N) / 2;
  return N > 0 && N % 2 == 1 ? k : k - 1;
}

int dim_p(int N) {
  return 2 * int(p_weights(N).size()) + p_zero_multiplicity(N);
}

double index_closed_form(int N, int ell) {
  const double b = (N > 0 && N % 2 == 0) ? 2.0 : 1.0;
  std::vector<double> rc = rho_check(N);
  double val = b * std::pow(double(ell), p_zero_multiplicity(N));
  for (const auto& w : p_weights(N)) {
    double dot = 0.0;
    for (size_t i = 0; i < rc.size(); ++i) dot += w[i] * rc[i];
    double s = 2.0 * std::sin(M_PI * dot / ell);
    val /= s * s;
  }
  return val;
}

double pf_consistency(const InclusionGraph& g) {
  double worst = 0.0;
  for (size_t j = 0; j < g.odd_labels.size(); ++j) {
    double s = 0.0;
    for (size_t i = 0; i < g.even_labels.size(); ++i)
      s += double(g.mult[i][j]) * g.a[i];
    double target = g.index_value * g.b[j];
    worst = std::max(worst, std::fabs(s - target) / target);
  }
  return worst;
}

std::map<Partition, double> local_indices(const InclusionGraph& g) {
  std::map<Partition, double> out;
  for (size_t j = 0; j < g.odd_labels.size(); ++j)
    out[g.odd_labels[j]] = g.b[j] * g.b[j] * g.index_value;
  return out;
}

AsymptoticsProbe asymptotics_probe(int N, const std::vector<int>& ells) {
  AsymptoticsProbe probe;
  probe.dim_p = dim_p(N);
  for (int ell : ells) {
    double idx = index_closed_form(N, ell);
    probe.rows.push_back(
        {ell, idx, idx / std::pow(double(ell), probe.dim_p)});
  }
  return probe;
}

BipartiteGraph brauer_tower_graph(const RootOfUnityContext& ctx) {
  std::vector<Partition> even, odd;
  for (const Partition& p : brauer_members_all(ctx))
    (p.size() % 2 == 0 ? even : odd).push_back(p);
  BipartiteGraph g;
  for (const Partition& p : even) g.a_names.push_back(p.to_text());
  for (const Partition& p : odd) g.b_names.push_back(p.to_text());
  g.mult.assign(even.size(), std::vector<long>(odd.size(), 0));
  for (size_t i = 0; i < even.size(); ++i)
    for (size_t j = 0; j < odd.size(); ++j)
      if (one_box_apart(even[i], odd[j])) g.mult[i][j] = 1;
  g.wa.resize(even.size());
  g.wb.resize(odd.size());
  for (size_t i = 0; i < even.size(); ++i)
    g.wa[i] = brauer_weight(ctx, even[i]);
  for (size_t j = 0; j < odd.size(); ++j)
    g.wb[j] = brauer_weight(ctx, odd[j]);
  return g;
}

}  // namespace fss
