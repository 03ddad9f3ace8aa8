#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "fss/qarith.hpp"
#include "fss/towers.hpp"

using namespace fss;

namespace {
long brute_paths(const RootOfUnityContext& ctx, const Partition& target,
                 int n) {
  // independent path count: depth-first walk over one-box moves
  std::function<long(const Partition&, int)> go = [&](const Partition& cur,
                                                      int left) -> long {
    if (left == 0) return cur == target ? 1 : 0;
    long total = 0;
    auto step = [&](const Partition& nxt) {
      if (brauer_label_class(ctx, nxt) == 0) total += go(nxt, left - 1);
    };
    for (const Partition& p : add_box(cur)) step(p);
    for (const Partition& p : remove_box(cur)) step(p);
    return total;
  };
  return go(Partition(), n);
}
}  // namespace

TEST_CASE("Brauer Bratteli levels and path counts") {
  RootOfUnityContext c28(2, 8);
  BratteliDiagram d = build_bratteli(c28, LabelKind::brauer, 6);
  CHECK(d.levels[2].labels ==
        std::vector<Partition>{Partition(), Partition({2}), Partition({1, 1})});
  // the path back to the empty diagram at level 2
  CHECK(d.levels[2].path_counts[0] == 1);
  RootOfUnityContext c37(3, 7);
  BratteliDiagram d37 = build_bratteli(c37, LabelKind::brauer, 8);
  for (int n = 1; n <= 8; ++n)
    for (size_t i = 0; i < d37.levels[n].labels.size(); ++i)
      CHECK(d37.levels[n].path_counts[i] ==
            brute_paths(c37, d37.levels[n].labels[i], n));
}

TEST_CASE("Brauer tower dimensions grow monotonically at even steps") {
  RootOfUnityContext c(3, 7);
  BratteliDiagram d = build_bratteli(c, LabelKind::brauer, 10);
  auto dim2 = [&](int n) {
    long s = 0;
    for (long c2 : d.levels[n].path_counts) s += c2 * c2;
    return s;
  };
  for (int n = 2; n + 2 <= 10; n += 2) CHECK(dim2(n) < dim2(n + 2));
}

TEST_CASE("Hecke Bratteli uses add-box edges only") {
  RootOfUnityContext c(3, 7);
  BratteliDiagram d = build_bratteli(c, LabelKind::hecke, 3);
  CHECK(d.levels[3].labels == std::vector<Partition>{Partition({3}),
                                                     Partition({2, 1}),
                                                     Partition({1, 1, 1})});
  for (const auto& [a, b] : d.edges[2]) {
    CHECK(d.levels[3].labels[b].size() == d.levels[2].labels[a].size() + 1);
    CHECK(d.levels[3].labels[b].contains(d.levels[2].labels[a]));
  }
}

TEST_CASE("inclusion graph for (2,8)") {
  RootOfUnityContext c(2, 8);
  InclusionGraph g = inclusion_graph(c, 6);
  REQUIRE(g.even_labels.size() == 4);
  REQUIRE(g.odd_labels.size() == 3);
  // edges realize the trace weights: sum of d over neighbors equals d~
  for (size_t i = 0; i < g.even_labels.size(); ++i) {
    double s = 0.0;
    for (size_t j = 0; j < g.odd_labels.size(); ++j)
      s += double(g.mult[i][j]) * g.b[j];
    CHECK(s == doctest::Approx(g.a[i]).epsilon(1e-9));
  }
  CHECK(g.index_value == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("stabilization") {
  RootOfUnityContext c28(2, 8);
  StabilizeResult s28 = stabilize(c28);
  CHECK(s28.n_stable <= 8);
  RootOfUnityContext c48(4, 8);
  StabilizeResult s48 = stabilize(c48);
  CHECK(s48.n_stable == 12);
}

TEST_CASE("index values") {
  CHECK(index_ratio(RootOfUnityContext(2, 8)) ==
        doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-9));
  CHECK(index_ratio(RootOfUnityContext(3, 7)) ==
        doctest::Approx(4.0 * std::pow(std::cos(M_PI / 14), 2)).epsilon(1e-9));
  // closed forms against the printed expressions
  CHECK(index_closed_form(3, 7) ==
        doctest::Approx(7.0 / (16 * std::pow(std::sin(2 * M_PI / 7), 2) *
                               std::pow(std::sin(M_PI / 7), 2))));
  CHECK(index_closed_form(-4, 8) ==
        doctest::Approx(8.0 / (16 * std::pow(std::sin(2 * M_PI / 8), 2) *
                               std::pow(std::sin(M_PI / 8), 2))));
  CHECK(index_closed_form(-4, 8) ==
        doctest::Approx(4.0 + 2.0 * std::sqrt(2.0)));
  CHECK(index_closed_form(4, 8) ==
        doctest::Approx(2.0 * 8.0 /
                        (4 * std::pow(std::sin(3 * M_PI / 8), 2) * 4 *
                         std::pow(std::sin(2 * M_PI / 8), 2) * 16 *
                         std::pow(std::sin(M_PI / 8), 4))));
  CHECK(index_closed_form(2, 8) ==
        doctest::Approx(1.0 / (2 * std::pow(std::sin(M_PI / 8), 2))));
}

TEST_CASE("PF consistency and local indices") {
  RootOfUnityContext c(3, 7);
  InclusionGraph g = stabilize(c).graph;
  CHECK(pf_consistency(g) < 1e-8);
  auto li = local_indices(g);
  CHECK(li.at(Partition()) == doctest::Approx(g.index_value));
  // perturbed edge breaks the consistency
  InclusionGraph bad = g;
  for (size_t i = 0; i < bad.even_labels.size(); ++i)
    if (bad.mult[i][0] > 0) {
      bad.mult[i][0] += 1;
      break;
    }
  CHECK(pf_consistency(bad) > 1e-4);
}

TEST_CASE("local index example for (2,8)") {
  RootOfUnityContext c(2, 8);
  InclusionGraph g = stabilize(c).graph;
  auto li = local_indices(g);
  double idx = 2.0 + std::sqrt(2.0);
  double d1 = 2.0 * std::cos(M_PI / 8);
  CHECK(li.at(Partition({1, 1})) == doctest::Approx(idx).epsilon(1e-9));
  // [1] sits at odd levels; check through the tower weights instead
  RootOfUnityContext cc(2, 8);
  CHECK(brauer_weight(cc, Partition({1})) == doctest::Approx(d1));
}

TEST_CASE("dim p and the asymptotics probe") {
  CHECK(dim_p(3) == 5);
  CHECK(dim_p(-4) == 5);
  CHECK(dim_p(2) == 2);
  CHECK(dim_p(2) == 2 * (2 + 1) / 2 - 1);
  std::vector<int> ells;
  for (int ell = 7; ell <= 31; ell += 2) ells.push_back(ell);
  AsymptoticsProbe probe = asymptotics_probe(3, ells);
  REQUIRE(probe.rows.size() == ells.size());
  for (size_t i = 0; i + 1 < probe.rows.size(); ++i) {
    CHECK(probe.rows[i].ratio > 0);
    CHECK(probe.rows[i + 1].ratio < probe.rows[i].ratio);  // monotone
  }
  double limit = 1.0 / (64 * std::pow(M_PI, 4));
  CHECK(probe.rows.back().ratio ==
        doctest::Approx(limit).epsilon(0.05));
}

TEST_CASE("Dynkin references and graph isomorphism") {
  BipartiteGraph d5 = dynkin_D(5);
  CHECK(d5.a_names.size() + d5.b_names.size() == 5);
  RootOfUnityContext c28(2, 8);
  CHECK(bipartite_isomorphic(brauer_tower_graph(c28), dynkin_D(5), false));
  RootOfUnityContext c210(2, 10);
  CHECK(bipartite_isomorphic(brauer_tower_graph(c210), dynkin_D(6), false));
  CHECK_FALSE(bipartite_isomorphic(brauer_tower_graph(c210), dynkin_D(5), false));
  // (4,8) and (-4,8) give the same stable inclusion graph
  BipartiteGraph g48 = stabilize(RootOfUnityContext(4, 8)).graph.as_bipartite();
  BipartiteGraph gm48 =
      stabilize(RootOfUnityContext(-4, 8)).graph.as_bipartite();
  CHECK(bipartite_isomorphic(g48, gm48, true));
}

TEST_CASE("(3,7) stable inclusion graph is D8") {
  InclusionGraph g = stabilize(RootOfUnityContext(3, 7)).graph;
  CHECK(bipartite_isomorphic(g.as_bipartite(), dynkin_D(8), false));
}
