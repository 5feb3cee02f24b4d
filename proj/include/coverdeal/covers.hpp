#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "coverdeal/error.hpp"
#include "coverdeal/graph.hpp"
#include "coverdeal/vertex_set.hpp"

namespace coverdeal {

/// All minimal vertex covers of a graph, sorted by (cardinality, lex).
struct CoverCollection {
  std::vector<VertexSet> covers;
  int alpha0 = 0; // vertex covering number

  friend bool operator==(const CoverCollection&, const CoverCollection&) = default;
};

struct EnumerationLimits {
  std::size_t max_antichain = 1'000'000;
};

inline bool is_vertex_cover(const SimpleGraph& g, const VertexSet& c) {
  for (auto [u, v] : g.edges())
    if (!c.contains(u) && !c.contains(v)) return false;
  return true;
}

inline bool is_minimal_vertex_cover(const SimpleGraph& g, const VertexSet& c) {
  if (!is_vertex_cover(g, c)) return false;
  bool minimal = true;
  c.for_each([&](int v) {
    VertexSet smaller = c;
    smaller.erase(v);
    if (is_vertex_cover(g, smaller)) minimal = false;
  });
  return minimal;
}

/// Minimal transversals of a hypergraph, built edge by edge: sets already
/// meeting the edge survive, the others branch on each edge vertex, and
/// branches that contain a survivor are pruned. Sorted by (size, lex).
inline std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& hyperedges,
                                                   const EnumerationLimits& limits = {}) {
  std::vector<VertexSet> antichain{VertexSet{}};
  for (const auto& e : hyperedges) {
    std::vector<VertexSet> hit;
    std::vector<VertexSet> extended;
    for (const auto& c : antichain) {
      if (c.intersects(e)) {
        hit.push_back(c);
      } else {
        e.for_each([&](int x) {
          VertexSet grown = c;
          grown.insert(x);
          extended.push_back(grown);
        });
      }
    }
    // A grown set can only be non-minimal because of a survivor or a sibling.
    std::vector<VertexSet> next = hit;
    for (auto& c : minimalize(std::move(extended))) {
      bool dominated = std::any_of(hit.begin(), hit.end(),
                                   [&](const VertexSet& h) { return h.subset_of(c); });
      if (!dominated) next.push_back(c);
    }
    if (next.size() > limits.max_antichain)
      throw ResourceError("transversal antichain grew to " + std::to_string(next.size()) +
                          " sets, over the cap of " + std::to_string(limits.max_antichain));
    antichain = std::move(next);
  }
  std::sort(antichain.begin(), antichain.end(), VertexSet::size_lex_less);
  return antichain;
}

inline CoverCollection make_cover_collection(std::vector<VertexSet> covers) {
  std::sort(covers.begin(), covers.end(), VertexSet::size_lex_less);
  CoverCollection out;
  out.alpha0 = covers.empty() ? 0 : covers.front().size();
  out.covers = std::move(covers);
  return out;
}

/// Every minimal vertex cover; an edgeless graph yields the single empty cover.
inline CoverCollection minimal_covers(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  std::vector<VertexSet> edges;
  for (auto [u, v] : g.edges()) edges.push_back(VertexSet{u, v});
  return make_cover_collection(minimal_transversals(edges, limits));
}

/// Decision problem: is there a vertex cover with at most k vertices?
inline bool has_cover_of_size(const SimpleGraph& g, int k) {
  const auto edges = g.edges();
  std::function<bool(const VertexSet&, int)> search = [&](const VertexSet& chosen,
                                                          int budget) -> bool {
    for (auto [u, v] : edges) {
      if (chosen.contains(u) || chosen.contains(v)) continue;
      if (budget == 0) return false;
      VertexSet with_u = chosen;
      with_u.insert(u);
      if (search(with_u, budget - 1)) return true;
      VertexSet with_v = chosen;
      with_v.insert(v);
      return search(with_v, budget - 1);
    }
    return true;
  };
  return k >= 0 && search(VertexSet{}, k);
}

/// Validates the spec and rejects configurations the closed forms do not
/// describe (a bare clique with no star at all).
inline void require_closed_form_family(const HFamilySpec& spec) {
  spec.validate();
  if (spec.m() == spec.n)
    throw UnsupportedError("clique without any star (m = n = " + std::to_string(spec.n) +
                           "); closed forms need at least one star");
}

/// Minimal covers of the H graph straight from its structure, in the
/// listing order: the all-centers cover (only when every center has a star),
/// then for alpha_1..alpha_m the centers with alpha_i swapped for its leaves.
inline std::vector<VertexSet> closed_form_covers(const HFamilySpec& spec) {
  require_closed_form_family(spec);
  const VertexSet centers = spec.centers();
  std::vector<VertexSet> out;
  if (spec.all_stars()) out.push_back(centers);
  for (int alpha : spec.clique) {
    VertexSet c = centers;
    c.erase(alpha);
    c |= VertexSet::from_vector(spec.leaves_of(alpha));
    out.push_back(c);
  }
  return out;
}

inline CoverCollection predicted_covers_h(const HFamilySpec& spec) {
  return make_cover_collection(closed_form_covers(spec));
}

} // namespace coverdeal
