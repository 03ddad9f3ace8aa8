#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fss/branching.hpp"
#include "fss/io.hpp"
#include "fss/labels.hpp"
#include "fss/lattice.hpp"
#include "fss/molev.hpp"
#include "fss/qarith.hpp"
#include "fss/towers.hpp"

using nlohmann::json;

namespace {

struct CommonOpts {
  int N = 3;
  int ell = 7;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--N", o.N, "series parameter N (negative = symplectic)")
      ->required();
  cmd->add_option("--ell", o.ell, "level parameter ell")->required();
}

int run_labels(const CommonOpts& o, int boxes, const std::string& kind) {
  fss::RootOfUnityContext ctx(o.N, o.ell);
  json out = json::array();
  if (kind == "hecke" || kind == "both")
    out.push_back(fss::label_set_json(fss::hecke_labels(ctx, boxes)));
  if (kind == "brauer" || kind == "both")
    out.push_back(fss::label_set_json(fss::brauer_labels(ctx, boxes)));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_weights(const CommonOpts& o, int boxes, const std::string& kind,
                const std::string& format) {
  fss::RootOfUnityContext ctx(o.N, o.ell);
  std::vector<fss::WeightTable> tables;
  if (kind == "hecke" || kind == "both")
    tables.push_back(fss::build_weight_table(
        ctx, fss::WeightKind::hecke, fss::hecke_labels(ctx, boxes).members));
  if (kind == "brauer" || kind == "both")
    tables.push_back(fss::build_weight_table(
        ctx, fss::WeightKind::brauer, fss::brauer_labels(ctx, boxes).members));
  if (format == "csv") {
    for (const auto& t : tables) std::cout << fss::weight_table_csv(t);
  } else {
    json out = json::array();
    for (const auto& t : tables) out.push_back(fss::weight_table_json(t));
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int run_branch(const CommonOpts& o, const std::string& lambda_text,
               const std::string& method) {
  fss::RootOfUnityContext ctx(o.N, o.ell);
  fss::Partition lam = fss::Partition::parse(lambda_text);
  json out = json::array();
  if (method == "direct" || method == "both")
    out.push_back(fss::branching_json(fss::fusion_branch_direct(ctx, lam)));
  if (method == "folded" || method == "both")
    out.push_back(fss::branching_json(fss::fusion_branch_folded(ctx, lam)));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_graph(const CommonOpts& o, int n_cap, const std::string& format) {
  fss::RootOfUnityContext ctx(o.N, o.ell);
  fss::StabilizeResult st = fss::stabilize(ctx, n_cap);
  if (format == "dot")
    std::cout << fss::inclusion_graph_dot(st.graph);
  else
    std::cout << fss::inclusion_graph_json(st.graph, st.n_stable).dump(2)
              << "\n";
  return 0;
}

int run_bratteli(const CommonOpts& o, const std::string& kind, int levels,
                 const std::string& format, bool tower) {
  fss::RootOfUnityContext ctx(o.N, o.ell);
  if (tower) {
    fss::BipartiteGraph g = fss::brauer_tower_graph(ctx);
    if (format == "dot") {
      std::cout << fss::bipartite_dot(g);
    } else {
      json out;
      out["even"] = g.a_names;
      out["odd"] = g.b_names;
      json edges = json::array();
      for (size_t i = 0; i < g.a_names.size(); ++i)
        for (size_t j = 0; j < g.b_names.size(); ++j)
          if (g.mult[i][j]) edges.push_back({int(i), int(j), g.mult[i][j]});
      out["edges"] = edges;
      std::cout << out.dump(2) << "\n";
    }
    return 0;
  }
  fss::BratteliDiagram d = fss::build_bratteli(
      ctx, kind == "hecke" ? fss::LabelKind::hecke : fss::LabelKind::brauer,
      levels);
  if (format == "dot")
    std::cout << fss::bratteli_dot(d);
  else
    std::cout << fss::bratteli_json(d).dump(2) << "\n";
  return 0;
}

int run_index(const CommonOpts& o) {
  fss::RootOfUnityContext ctx(o.N, o.ell);
  double closed = fss::index_closed_form(o.N, o.ell);
  double ratio = fss::index_ratio(ctx);
  std::printf("index (weight-vector ratio) = %s\n", fss::fmt9(ratio).c_str());
  std::printf("index (closed form)         = %s\n", fss::fmt9(closed).c_str());
  std::printf("|difference|                = %s\n",
              fss::fmt9(std::fabs(ratio - closed)).c_str());
  return 0;
}

struct CheckRunner {
  bool all_ok = true;
  void report(const std::string& name, bool ok, const std::string& detail) {
    std::printf("%-34s %s  %s\n", name.c_str(), ok ? "ok" : "FAIL",
                detail.c_str());
    all_ok = all_ok && ok;
  }
  void skip(const std::string& name, const std::string& why) {
    std::printf("%-34s skip  %s\n", name.c_str(), why.c_str());
  }
};

int run_verify(const CommonOpts& o, const std::string& which, int n, double tol) {
  fss::RootOfUnityContext ctx(o.N, o.ell);
  CheckRunner cr;
  auto want = [&](const char* c) { return which == "all" || which == c; };

  if (want("molev")) {
    int aN = ctx.absN();
    int nn = n;
    while (nn > 2 && std::pow(double(aN), nn) > 4096.0) --nn;
    fss::TensorRep rep =
        fss::representation(fss::unit_root_q(o.ell), aN, nn);
    fss::RelationReport rr = fss::verify_relations(rep);
    fss::TensorRep rep1 = fss::representation(1.0, aN, nn);
    fss::RelationReport rr1 = fss::verify_relations(rep1);
    double worst = std::max(rr.max_residual, rr1.max_residual);
    cr.report("molev relations (n=" + std::to_string(nn) + ")", worst < tol,
              "max residual " + fss::fmt9(worst));
  }
  if (want("smatrix")) {
    try {
      int k = std::max(1, ctx.rank());
      fss::LatticePair p1{k, {fss::LatticeName::Q, 1.0},
                          {fss::LatticeName::Zk, 1.0 / o.ell}};
      fss::SMatrix s1 = fss::s_matrix(p1, fss::SignChar::eps);
      fss::LatticePair p2{k, {fss::LatticeName::Zk, 1.0},
                          {fss::LatticeName::P, 1.0 / o.ell}};
      fss::SMatrix s2 = fss::s_matrix(p2, fss::SignChar::eps_tilde);
      cr.report("s-matrix unitarity", true,
                "residuals " + fss::fmt9(s1.unitarity_residual) + ", " +
                    fss::fmt9(s2.unitarity_residual));
    } catch (const std::exception& e) {
      cr.report("s-matrix unitarity", false, e.what());
    }
  }

  fss::PositivityReport pos = fss::positivity_report(ctx);
  if (want("positivity")) {
    std::string detail = pos.all_positive
                             ? "all " + std::to_string(pos.labels_checked) +
                                   " weights positive"
                             : "negative weight at [" +
                                   pos.first_negative->first.to_text() + "]";
    cr.report("positivity oracle", true, detail);
  }
  if (want("squaresum")) {
    if (pos.all_positive) {
      fss::SquareSumReport rep = fss::verify_square_sums(ctx, tol * 1e3);
      cr.report("square sums", rep.ok,
                "even sum " + fss::fmt9(rep.even_sum) + ", closed form " +
                    fss::fmt9(rep.closed_form));
    } else {
      cr.skip("square sums", "non-unitary context");
    }
  }
  if (want("branching")) {
    if (pos.all_positive) {
      bool ok = true;
      std::string detail;
      int checked = 0;
      for (int m = 1; m <= n && ok; ++m)
        for (const fss::Partition& lam : fss::hecke_labels(ctx, m).members) {
          fss::BranchingTable a = fss::fusion_branch_direct(ctx, lam);
          fss::BranchingTable b = fss::fusion_branch_folded(ctx, lam);
          ++checked;
          if (a.entries != b.entries) {
            ok = false;
            detail = "mismatch at lambda = [" + lam.to_text() + "]";
            break;
          }
        }
      if (ok) detail = std::to_string(checked) + " labels, two methods agree";
      cr.report("branching direct vs folded", ok, detail);
    } else {
      cr.skip("branching direct vs folded", "non-unitary context");
    }
  }
  if (want("pf") || want("index")) {
    if (pos.all_positive) {
      fss::StabilizeResult st = fss::stabilize(ctx);
      if (want("pf")) {
        double resid = fss::pf_consistency(st.graph);
        cr.report("Perron-Frobenius consistency", resid < 1e-8,
                  "residual " + fss::fmt9(resid) + " at n = " +
                      std::to_string(st.n_stable));
      }
      if (want("index")) {
        double closed = fss::index_closed_form(o.N, o.ell);
        double rel = std::fabs(st.graph.index_value - closed) / closed;
        cr.report("index ratio vs closed form", rel < 1e-8,
                  "index " + fss::fmt9(st.graph.index_value) +
                      ", rel err " + fss::fmt9(rel));
      }
    } else {
      cr.skip("pf / index", "non-unitary context");
    }
  }
  return cr.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of Hecke-in-q-Brauer tower inclusions"};
  app.require_subcommand(1);

  CommonOpts lab_o, wt_o, br_o, gr_o, bt_o, ix_o, vf_o;
  int lab_boxes = 4, wt_boxes = 4;
  std::string lab_kind = "both", wt_kind = "both", wt_format = "json";
  auto* lab = app.add_subcommand("labels", "enumerate label sets");
  add_common(lab, lab_o);
  lab->add_option("--boxes", lab_boxes, "box count");
  lab->add_option("--kind", lab_kind, "hecke|brauer|both");

  auto* wt = app.add_subcommand("weights", "trace weights per label");
  add_common(wt, wt_o);
  wt->add_option("--boxes", wt_boxes, "box count");
  wt->add_option("--kind", wt_kind, "hecke|brauer|both");
  wt->add_option("--format", wt_format, "json|csv");

  std::string br_lambda, br_method = "both";
  auto* br = app.add_subcommand("branch", "restriction multiplicities");
  add_common(br, br_o);
  br->add_option("--lambda", br_lambda, "partition, e.g. \"4 2\"")->required();
  br->add_option("--method", br_method, "direct|folded|both");

  int gr_cap = 0;
  std::string gr_format = "json";
  auto* gr = app.add_subcommand("graph", "stable inclusion (principal) graph");
  add_common(gr, gr_o);
  gr->add_option("--n-cap", gr_cap, "stabilization search cap");
  gr->add_option("--format", gr_format, "json|dot");

  std::string bt_kind = "brauer", bt_format = "json";
  int bt_levels = 6;
  bool bt_tower = false;
  auto* bt = app.add_subcommand("bratteli", "Bratteli diagram of a tower");
  add_common(bt, bt_o);
  bt->add_option("--kind", bt_kind, "hecke|brauer");
  bt->add_option("--levels", bt_levels, "number of levels");
  bt->add_option("--format", bt_format, "json|dot");
  bt->add_flag("--tower", bt_tower,
               "emit the stable one-box transition graph instead");

  auto* ix = app.add_subcommand("index", "index by both methods");
  add_common(ix, ix_o);

  std::string vf_which = "all";
  int vf_n = 6;
  double vf_tol = 1e-10;
  auto* vf = app.add_subcommand("verify", "cross-verification suite");
  add_common(vf, vf_o);
  vf->add_option("check", vf_which,
                 "molev|smatrix|squaresum|positivity|branching|pf|index|all");
  vf->add_option("--n", vf_n, "level bound for relation/branching checks");
  vf->add_option("--tol", vf_tol, "tolerance for relation residuals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (lab->parsed()) return run_labels(lab_o, lab_boxes, lab_kind);
    if (wt->parsed()) return run_weights(wt_o, wt_boxes, wt_kind, wt_format);
    if (br->parsed()) return run_branch(br_o, br_lambda, br_method);
    if (gr->parsed()) return run_graph(gr_o, gr_cap, gr_format);
    if (bt->parsed())
      return run_bratteli(bt_o, bt_kind, bt_levels, bt_format, bt_tower);
    if (ix->parsed()) return run_index(ix_o);
    if (vf->parsed()) return run_verify(vf_o, vf_which, vf_n, vf_tol);
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "verification failure: %s\n", e.what());
    return 1;
  }
  return 2;
}
