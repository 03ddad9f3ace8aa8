#include "fss/io.hpp"

#include <cstdio>

namespace fss {

using nlohmann::json;

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

json partition_json(const Partition& p) {
  return json(p.row_lengths());
}

json label_set_json(const LabelSet& s) {
  json members = json::array();
  for (const Partition& p : s.members) {
    json e;
    e["rows"] = partition_json(p);
    e["boundary"] = false;
    members.push_back(e);
  }
  json boundary = json::array();
  for (const Partition& p : s.boundary) {
    json e;
    e["rows"] = partition_json(p);
    e["boundary"] = true;
    boundary.push_back(e);
  }
  json out;
  out["N"] = s.ctx.N;
  out["ell"] = s.ctx.ell;
  out["kind"] = s.kind == LabelKind::hecke ? "hecke" : "brauer";
  out["boxes"] = s.box_count;
  out["members"] = members;
  out["boundary"] = boundary;
  return out;
}

json weight_table_json(const WeightTable& t) {
  json rows = json::array();
  for (const auto& [p, v] : t.entries) {
    json e;
    e["label"] = partition_json(p);
    e["kind"] = t.kind == WeightKind::hecke ? "hecke" : "brauer";
    e["value"] = fmt9(v);
    rows.push_back(e);
  }
  json out;
  out["N"] = t.ctx.N;
  out["ell"] = t.ctx.ell;
  out["weights"] = rows;
  return out;
}

std::string weight_table_csv(const WeightTable& t) {
  std::string out = "label,kind,value\n";
  for (const auto& [p, v] : t.entries) {
    out += "\"" + p.to_text() + "\",";
    out += t.kind == WeightKind::hecke ? "hecke," : "brauer,";
    out += fmt9(v) + "\n";
  }
  return out;
}

json branching_json(const BranchingTable& t) {
  json entries = json::array();
  for (const auto& [mu, m] : t.entries) {
    json e;
    e["mu"] = partition_json(mu);
    e["multiplicity"] = m;
    entries.push_back(e);
  }
  json out;
  out["N"] = t.N;
  out["ell"] = t.ell;
  out["lambda"] = partition_json(t.lambda);
  switch (t.method) {
    case BranchMethod::direct: out["method"] = "direct"; break;
    case BranchMethod::folded: out["method"] = "folded"; break;
    case BranchMethod::littlewood: out["method"] = "littlewood"; break;
  }
  out["entries"] = entries;
  return out;
}

json inclusion_graph_json(const InclusionGraph& g, int n_stable) {
  json even = json::array(), odd = json::array(), edges = json::array();
  for (size_t i = 0; i < g.even_labels.size(); ++i) {
    json e;
    e["label"] = partition_json(g.even_labels[i]);
    e["dtilde"] = fmt9(g.a[i]);
    even.push_back(e);
  }
  for (size_t j = 0; j < g.odd_labels.size(); ++j) {
    json e;
    e["label"] = partition_json(g.odd_labels[j]);
    e["d"] = fmt9(g.b[j]);
    e["local_index"] = fmt9(g.b[j] * g.b[j] * g.index_value);
    odd.push_back(e);
  }
  for (size_t i = 0; i < g.even_labels.size(); ++i)
    for (size_t j = 0; j < g.odd_labels.size(); ++j)
      if (g.mult[i][j]) edges.push_back({int(i), int(j), g.mult[i][j]});
  json out;
  out["N"] = g.ctx.N;
  out["ell"] = g.ctx.ell;
  out["even"] = even;
  out["odd"] = odd;
  out["edges"] = edges;
  out["index"] = fmt9(g.index_value);
  out["n_stable"] = n_stable;
  return out;
}

std::string inclusion_graph_dot(const InclusionGraph& g) {
  std::string out = "graph inclusion {\n";
  for (size_t i = 0; i < g.even_labels.size(); ++i)
    out += "  e" + std::to_string(i) + " [shape=box,label=\"[" +
           g.even_labels[i].to_text() + "]\"];\n";
  for (size_t j = 0; j < g.odd_labels.size(); ++j)
    out += "  o" + std::to_string(j) + " [shape=circle,label=\"[" +
           g.odd_labels[j].to_text() + "]\"];\n";
  for (size_t i = 0; i < g.even_labels.size(); ++i)
    for (size_t j = 0; j < g.odd_labels.size(); ++j)
      for (long m = 0; m < g.mult[i][j]; ++m)
        out += "  e" + std::to_string(i) + " -- o" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

json bratteli_json(const BratteliDiagram& d) {
  json levels = json::array();
  for (const auto& lvl : d.levels) {
    json v = json::array();
    for (size_t i = 0; i < lvl.labels.size(); ++i) {
      json e;
      e["label"] = partition_json(lvl.labels[i]);
      e["paths"] = lvl.path_counts[i];
      v.push_back(e);
    }
    levels.push_back(v);
  }
  json edges = json::array();
  for (const auto& lvl : d.edges) {
    json v = json::array();
    for (const auto& [a, b] : lvl) v.push_back({a, b});
    edges.push_back(v);
  }
  json out;
  out["kind"] = d.kind == LabelKind::hecke ? "hecke" : "brauer";
  out["levels"] = levels;
  out["edges"] = edges;
  return out;
}

std::string bratteli_dot(const BratteliDiagram& d) {
  std::string out = "graph bratteli {\n  rankdir=TB;\n";
  for (size_t n = 0; n < d.levels.size(); ++n) {
    out += "  { rank=same;";
    for (size_t i = 0; i < d.levels[n].labels.size(); ++i)
      out += " v" + std::to_string(n) + "_" + std::to_string(i) + ";";
    out += " }\n";
    for (size_t i = 0; i < d.levels[n].labels.size(); ++i)
      out += "  v" + std::to_string(n) + "_" + std::to_string(i) +
             " [label=\"[" + d.levels[n].labels[i].to_text() + "]\"];\n";
  }
  for (size_t n = 0; n < d.edges.size(); ++n)
    for (const auto& [a, b] : d.edges[n])
      out += "  v" + std::to_string(n) + "_" + std::to_string(a) + " -- v" +
             std::to_string(n + 1) + "_" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

std::string bipartite_dot(const BipartiteGraph& g) {
  std::string out = "graph tower {\n";
  for (size_t i = 0; i < g.a_names.size(); ++i)
    out += "  a" + std::to_string(i) + " [shape=box,label=\"[" + g.a_names[i] +
           "]\"];\n";
  for (size_t j = 0; j < g.b_names.size(); ++j)
    out += "  b" + std::to_string(j) + " [shape=circle,label=\"[" +
           g.b_names[j] + "]\"];\n";
  for (size_t i = 0; i < g.a_names.size(); ++i)
    for (size_t j = 0; j < g.b_names.size(); ++j)
      for (long m = 0; m < g.mult[i][j]; ++m)
        out += "  a" + std::to_string(i) + " -- b" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace fss
