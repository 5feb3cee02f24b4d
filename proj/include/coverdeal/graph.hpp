#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coverdeal/error.hpp"
#include "coverdeal/vertex_set.hpp"

namespace coverdeal {

using Edge = std::pair<int, int>; // always stored with first < second

/// Undirected simple graph on vertices 1..n, adjacency as bit sets.
class SimpleGraph {
public:
  explicit SimpleGraph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
      throw ValidationError("vertex count " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxVertices));
    adj_.resize(static_cast<std::size_t>(n));
  }

  static SimpleGraph from_edges(int n, const std::vector<Edge>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] VertexSet vertices() const { return VertexSet::range(n_); }

  [[nodiscard]] const VertexSet& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v - 1)];
  }

  [[nodiscard]] bool has_edge(int u, int v) const {
    if (u < 1 || u > n_) return false;
    return adj_[static_cast<std::size_t>(u - 1)].contains(v);
  }

  /// Edges in lexicographic order of (min, max).
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u)
      adj_[static_cast<std::size_t>(u - 1)].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  [[nodiscard]] int edge_count() const {
    int twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ValidationError("loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u - 1)].insert(v);
    adj_[static_cast<std::size_t>(v - 1)].insert(u);
  }

  void check_vertex(int v) const {
    if (v < 1 || v > n_)
      throw ValidationError("vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(n_));
  }

  int n_;
  std::vector<VertexSet> adj_;
};

/// |adj(v)|
inline int degree(const SimpleGraph& g, int v) { return g.neighbors(v).size(); }

/// The family K_m plus one (possibly empty) star hanging off each clique vertex.
struct HFamilySpec {
  int n = 0;
  std::vector<int> clique;             // strictly increasing centers
  std::map<int, std::vector<int>> leaves; // center -> leaf labels; absent = no star

  [[nodiscard]] int m() const { return static_cast<int>(clique.size()); }

  [[nodiscard]] const std::vector<int>& leaves_of(int center) const {
    static const std::vector<int> none;
    auto it = leaves.find(center);
    return it == leaves.end() ? none : it->second;
  }

  [[nodiscard]] int leaf_count(int center) const {
    return static_cast<int>(leaves_of(center).size());
  }

  [[nodiscard]] int max_leaf_count() const {
    int mx = 0;
    for (int c : clique) mx = std::max(mx, leaf_count(c));
    return mx;
  }

  [[nodiscard]] int starless_count() const {
    return static_cast<int>(
        std::count_if(clique.begin(), clique.end(), [&](int c) { return leaf_count(c) == 0; }));
  }

  [[nodiscard]] bool all_stars() const { return starless_count() == 0; }

  [[nodiscard]] VertexSet centers() const { return VertexSet::from_vector(clique); }

  /// Throws ValidationError naming the offending vertex.
  void validate() const {
    if (n < 1 || n > kMaxVertices)
      throw ValidationError("vertex count " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxVertices));
    if (clique.size() < 2) throw ValidationError("clique needs at least 2 vertices");
    VertexSet seen;
    auto claim = [&](int v, const char* what) {
      if (v < 1 || v > n)
        throw ValidationError(std::string(what) + " vertex " + std::to_string(v) +
                              " outside 1.." + std::to_string(n));
      if (seen.contains(v))
        throw ValidationError("vertex " + std::to_string(v) + " appears more than once");
      seen.insert(v);
    };
    for (std::size_t i = 0; i < clique.size(); ++i) {
      if (i > 0 && clique[i] <= clique[i - 1])
        throw ValidationError("clique labels not strictly increasing at vertex " +
                              std::to_string(clique[i]));
      claim(clique[i], "clique");
    }
    VertexSet centers_set = centers();
    for (const auto& [center, ls] : leaves) {
      if (!centers_set.contains(center))
        throw ValidationError("star center " + std::to_string(center) +
                              " is not a clique vertex");
      for (int l : ls) claim(l, "leaf");
    }
    for (int v = 1; v <= n; ++v)
      if (!seen.contains(v))
        throw ValidationError("vertex " + std::to_string(v) +
                              " is neither a clique vertex nor a leaf");
  }
};

inline SimpleGraph build_h_graph(const HFamilySpec& spec) {
  spec.validate();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < spec.clique.size(); ++i)
    for (std::size_t j = i + 1; j < spec.clique.size(); ++j)
      edges.emplace_back(spec.clique[i], spec.clique[j]);
  for (const auto& [center, ls] : spec.leaves)
    for (int l : ls) edges.emplace_back(center, l);
  return SimpleGraph::from_edges(spec.n, edges);
}

inline SimpleGraph complement(const SimpleGraph& g) {
  std::vector<Edge> edges;
  for (int u = 1; u <= g.n(); ++u)
    for (int v = u + 1; v <= g.n(); ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return SimpleGraph::from_edges(g.n(), edges);
}

/// Vertex sets of connected components, ordered by smallest label.
inline std::vector<VertexSet> connected_components(const SimpleGraph& g) {
  std::vector<VertexSet> comps;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp;
    VertexSet frontier{unseen.first()};
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next;
      frontier.for_each([&](int v) { next |= g.neighbors(v); });
      frontier = next - comp;
    }
    unseen -= comp;
    comps.push_back(comp);
  }
  return comps;
}

struct ChordalityResult {
  bool chordal = false;
  std::vector<int> elimination_order; // perfect elimination ordering when chordal
  std::vector<int> chordless_cycle;   // length >= 4 witness otherwise
};

namespace detail {

// Shortest path from `from` to `to` using only vertices in `allowed`.
inline std::optional<std::vector<int>> shortest_path(const SimpleGraph& g, int from, int to,
                                                     const VertexSet& allowed) {
  std::vector<int> parent(static_cast<std::size_t>(g.n() + 1), 0);
  VertexSet visited{from};
  std::deque<int> queue{from};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == to) {
      std::vector<int> path{to};
      while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    ((g.neighbors(u) & allowed) - visited).for_each([&](int w) {
      visited.insert(w);
      parent[static_cast<std::size_t>(w)] = u;
      queue.push_back(w);
    });
  }
  return std::nullopt;
}

// Shortest chordless cycle through v whose cycle-neighbors of v are
// non-adjacent members of `candidates`.
inline std::vector<int> chordless_cycle_through(const SimpleGraph& g, int v,
                                                const VertexSet& candidates) {
  std::vector<int> best;
  const VertexSet nbrs = g.neighbors(v);
  candidates.for_each([&](int x) {
    candidates.for_each([&](int y) {
      if (y <= x || g.has_edge(x, y)) return;
      VertexSet allowed = g.vertices() - nbrs;
      allowed.erase(v);
      allowed.insert(x);
      allowed.insert(y);
      auto path = shortest_path(g, x, y, allowed);
      if (!path) return;
      if (best.empty() || path->size() + 1 < best.size()) {
        best = {v};
        best.insert(best.end(), path->begin(), path->end());
      }
    });
  });
  return best;
}

// Rotate so the smallest label leads, then orient toward the smaller neighbor.
inline std::vector<int> normalize_cycle(std::vector<int> cycle) {
  auto lowest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), lowest, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

} // namespace detail

/// Chordality by maximum-cardinality search plus a perfect-elimination check.
inline ChordalityResult is_chordal(const SimpleGraph& g) {
  const int n = g.n();
  // MCS visits vertices one at a time; elimination order is the reverse.
  std::vector<int> weight(static_cast<std::size_t>(n + 1), 0);
  VertexSet numbered;
  std::vector<int> visit;
  visit.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int pick = 0;
    for (int v = 1; v <= n; ++v)
      if (!numbered.contains(v) &&
          (pick == 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]))
        pick = v;
    numbered.insert(pick);
    visit.push_back(pick);
    (g.neighbors(pick) - numbered).for_each([&](int w) { ++weight[static_cast<std::size_t>(w)]; });
  }
  std::vector<int> order(visit.rbegin(), visit.rend());

  ChordalityResult result;
  VertexSet later = g.vertices();
  for (int v : order) {
    later.erase(v);
    const VertexSet succ = g.neighbors(v) & later;
    bool clique = true;
    succ.for_each([&](int x) {
      VertexSet rest = succ;
      rest.erase(x);
      if (!rest.subset_of(g.neighbors(x))) clique = false;
    });
    if (clique) continue;

    std::vector<int> cycle = detail::chordless_cycle_through(g, v, succ);
    if (cycle.empty()) {
      // Fall back to every vertex and every non-adjacent neighbor pair.
      for (int u = 1; u <= n; ++u) {
        auto c = detail::chordless_cycle_through(g, u, g.neighbors(u));
        if (!c.empty() && (cycle.empty() || c.size() < cycle.size())) cycle = std::move(c);
      }
    }
    result.chordless_cycle = detail::normalize_cycle(std::move(cycle));
    return result;
  }
  result.chordal = true;
  result.elimination_order = std::move(order);
  return result;
}

} // namespace coverdeal
