#pragma once

#include <string>

#include <json.hpp>

#include "fss/branching.hpp"
#include "fss/labels.hpp"
#include "fss/qarith.hpp"
#include "fss/towers.hpp"

namespace fss {

// All floating-point output goes through this: 9 significant digits.
std::string fmt9(double v);

nlohmann::json partition_json(const Partition& p);
nlohmann::json label_set_json(const LabelSet& s);
nlohmann::json weight_table_json(const WeightTable& t);
std::string weight_table_csv(const WeightTable& t);
nlohmann::json branching_json(const BranchingTable& t);
nlohmann::json inclusion_graph_json(const InclusionGraph& g, int n_stable);
std::string inclusion_graph_dot(const InclusionGraph& g);
nlohmann::json bratteli_json(const BratteliDiagram& d);
std::string bratteli_dot(const BratteliDiagram& d);
std::string bipartite_dot(const BipartiteGraph& g);

}  // namespace fss
