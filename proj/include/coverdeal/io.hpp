#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coverdeal/covers.hpp"
#include "coverdeal/graph.hpp"
#include "coverdeal/invariants.hpp"
#include "coverdeal/monomial.hpp"
#include "coverdeal/planner.hpp"
#include "coverdeal/quotients.hpp"

namespace coverdeal {

using json = nlohmann::json;

// Ingestion. Either {"n", "edges": [[u,v],...]} or
// {"n", "clique": [...], "stars": {"<center>": [leaves], ...}}.

struct GraphInput {
  SimpleGraph graph;
  std::optional<HFamilySpec> spec;
};

namespace detail {

inline int json_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
  return j.get<int>();
}

inline std::vector<int> json_int_list(const json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(json_int(e, what));
  return out;
}

} // namespace detail

inline HFamilySpec parse_spec(const json& j) {
  HFamilySpec spec;
  spec.n = detail::json_int(j.at("n"), "n");
  spec.clique = detail::json_int_list(j.at("clique"), "clique");
  if (j.contains("stars")) {
    const auto& stars = j.at("stars");
    if (!stars.is_object()) throw ValidationError("stars must be an object keyed by center label");
    for (const auto& [key, leaves] : stars.items()) {
      int center = 0;
      std::size_t used = 0;
      try {
        center = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != key.size())
        throw ValidationError("star key \"" + key + "\" is not a vertex label");
      spec.leaves[center] = detail::json_int_list(leaves, "star leaves");
    }
  }
  spec.validate();
  return spec;
}

inline GraphInput parse_graph_input(const json& j) {
  try {
    if (!j.is_object()) throw ValidationError("graph input must be a JSON object");
    if (!j.contains("n")) throw ValidationError("graph input needs \"n\"");
    const bool has_clique = j.contains("clique");
    const bool has_edges = j.contains("edges");
    if (has_clique && has_edges)
      throw ValidationError("graph input must give either \"edges\" or \"clique\", not both");
    if (has_clique) {
      HFamilySpec spec = parse_spec(j);
      SimpleGraph g = build_h_graph(spec);
      return {std::move(g), std::move(spec)};
    }
    if (!has_edges) throw ValidationError("graph input needs \"edges\" or \"clique\"");
    const int n = detail::json_int(j.at("n"), "n");
    std::vector<Edge> edges;
    const auto& list = j.at("edges");
    if (!list.is_array()) throw ValidationError("edges must be an array");
    for (const auto& e : list) {
      auto pair = detail::json_int_list(e, "edge");
      if (pair.size() != 2) throw ValidationError("each edge needs exactly two endpoints");
      edges.emplace_back(std::min(pair[0], pair[1]), std::max(pair[0], pair[1]));
    }
    return {SimpleGraph::from_edges(n, edges), std::nullopt};
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed graph input: ") + e.what());
  }
}

inline GraphInput read_graph_input(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("input is not valid JSON: ") + e.what());
  }
  return parse_graph_input(j);
}

inline json to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", edges}};
}

inline json to_json(const HFamilySpec& spec) {
  json stars = json::object();
  for (const auto& [center, leaves] : spec.leaves) stars[std::to_string(center)] = leaves;
  return {{"n", spec.n}, {"clique", spec.clique}, {"stars", stars}};
}

inline json to_json(const VertexSet& s) { return s.to_vector(); }

inline json to_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(to_json(s));
  return out;
}

inline json to_json(const CoverCollection& c) {
  return {{"alpha0", c.alpha0}, {"covers", to_json(c.covers)}};
}

inline json to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens()) gens.push_back(to_json(g.support));
  return {{"n", ideal.n()}, {"gens", gens}};
}

inline MonomialIdeal ideal_from_json(const json& j) {
  try {
    const int n = detail::json_int(j.at("n"), "n");
    std::vector<Monomial> gens;
    for (const auto& g : j.at("gens"))
      gens.emplace_back(VertexSet::from_vector(detail::json_int_list(g, "generator")));
    return MonomialIdeal(n, gens);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed ideal: ") + e.what());
  }
}

inline json to_json(const QuotientCertificate& cert) {
  return {{"order", cert.order}, {"q_values", cert.q_values}, {"q", cert.q}};
}

inline json to_json(const QuotientFailure& f) {
  return {{"linear_quotients", false},
          {"position", f.position},
          {"witness", to_json(f.witness.support)},
          {"colon", to_json(f.colon)["gens"]}};
}

inline json to_json(const ResolutionShape& r) { return {{"betti", r.betti}, {"shifts", r.shifts}}; }

inline json to_json(const InvariantReport& r) {
  json out = {{"subject", to_string(r.subject)},
              {"dim", r.dim},
              {"depth", r.depth},
              {"pd", r.pd},
              {"reg", r.reg},
              {"cm", r.cm},
              {"linear_resolution", r.linear_resolution},
              {"provenance", r.provenance}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

inline json to_json(const GraphReport& r) {
  return {{"subject", "edge"},
          {"in_family", false},
          {"height", r.height},
          {"alpha0", r.alpha0},
          {"dim", r.dim},
          {"cm", "unknown outside family"},
          {"complement_chordal", r.complement_chordal},
          {"linear_resolution", r.edge_linear_resolution}};
}

inline json to_json(const PlacementPlan& p) {
  json assignment = json::object();
  for (auto [sensor, leader] : p.assignment) assignment[std::to_string(sensor)] = leader;
  return {{"leaders", to_json(p.leaders)},
          {"cardinality", p.cardinality},
          {"alternatives", to_json(p.alternatives)},
          {"assignment", assignment},
          {"components", p.components},
          {"warnings", p.warnings}};
}

/// Undirected DOT graph with vertices "v1".."vn"; leaders are filled.
inline std::string to_dot(const SimpleGraph& g, const VertexSet& leaders = {}) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 1; v <= g.n(); ++v) {
    out << "  v" << v;
    if (leaders.contains(v)) out << " [style=filled, fillcolor=\"#d62728\", fontcolor=white]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace coverdeal
