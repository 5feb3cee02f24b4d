#pragma once

#include <map>
#include <string>
#include <vector>

#include "coverdeal/covers.hpp"
#include "coverdeal/graph.hpp"

namespace coverdeal {

/// Gateway (leader) placement: a minimum vertex cover, the other minimum
/// covers, and which leader each remaining sensor reports to.
struct PlacementPlan {
  VertexSet leaders;
  int cardinality = 0;
  std::vector<VertexSet> alternatives;
  std::map<int, int> assignment; // sensor -> adjacent leader
  int components = 0;            // connected components carrying edges
  std::vector<std::string> warnings;
};

/// Leaders are the lexicographically smallest minimum-cardinality minimal
/// cover; each non-leader with an edge goes to its smallest adjacent leader.
inline PlacementPlan plan_placement(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  PlacementPlan plan;
  if (g.edge_count() == 0) {
    plan.warnings.push_back("graph has no edges; no leaders needed");
    return plan;
  }

  for (const auto& comp : connected_components(g))
    if (comp.size() > 1) ++plan.components;
  if (plan.components > 1)
    plan.warnings.push_back("graph is disconnected; planned " + std::to_string(plan.components) +
                            " components independently");

  const CoverCollection covers = minimal_covers(g, limits);
  plan.leaders = covers.covers.front();
  plan.cardinality = covers.alpha0;
  for (std::size_t i = 1; i < covers.covers.size() && covers.covers[i].size() == covers.alpha0; ++i)
    plan.alternatives.push_back(covers.covers[i]);

  bool isolated = false;
  for (int v = 1; v <= g.n(); ++v) {
    if (plan.leaders.contains(v)) continue;
    const VertexSet adjacent_leaders = g.neighbors(v) & plan.leaders;
    if (adjacent_leaders.empty()) {
      isolated = true;
      continue;
    }
    plan.assignment[v] = adjacent_leaders.first();
  }
  if (isolated) plan.warnings.push_back("isolated vertices are left unassigned");
  plan.warnings.push_back("sensors with several adjacent leaders use the smallest label");
  return plan;
}

} // namespace coverdeal
