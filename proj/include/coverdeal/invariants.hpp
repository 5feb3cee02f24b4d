#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "coverdeal/covers.hpp"
#include "coverdeal/graph.hpp"
#include "coverdeal/monomial.hpp"
#include "coverdeal/quotients.hpp"

namespace coverdeal {

enum class IdealSubject { edge, cover };

inline const char* to_string(IdealSubject s) { return s == IdealSubject::edge ? "edge" : "cover"; }

/// dim, depth, pd and reg of R/I for I = I(H) or I_c(H), plus the formula
/// that produced each number.
struct InvariantReport {
  IdealSubject subject = IdealSubject::edge;
  int n = 0;
  int dim = 0;
  int depth = 0;
  int pd = 0;
  int reg = 0;
  bool cm = false;
  bool linear_resolution = false;
  std::map<std::string, std::string> provenance;
  std::vector<std::string> notes;
};

inline InvariantReport edge_ideal_invariants(const HFamilySpec& spec) {
  require_closed_form_family(spec);
  const int n = spec.n;
  const int m = spec.m();
  const int max_leaves = spec.max_leaf_count();

  InvariantReport r;
  r.subject = IdealSubject::edge;
  r.n = n;
  r.pd = m + max_leaves - 1;
  r.depth = n - m - max_leaves + 1;
  r.reg = 1;
  r.provenance["pd"] = "m + max leaf count - 1";
  r.provenance["depth"] = "n - m - max leaf count + 1";
  r.provenance["reg"] = "1 (linear resolution)";
  if (spec.all_stars()) {
    r.dim = n - m;
    r.provenance["dim"] = "n - m";
  } else {
    // A starless center lets the other m-1 centers cover the clique.
    r.dim = n - (m - 1);
    r.provenance["dim"] = "n - height, height = m - 1 with a starless center";
    r.notes.push_back("a clique vertex has no star: vertex covering number is m - 1");
  }
  r.cm = r.dim == r.depth;
  r.provenance["cm"] = "dim == depth";
  r.linear_resolution = is_chordal(complement(build_h_graph(spec))).chordal;
  r.provenance["linear_resolution"] = "complement graph is chordal";
  return r;
}

inline InvariantReport cover_ideal_invariants(const HFamilySpec& spec) {
  require_closed_form_family(spec);
  const MonomialIdeal ideal = closed_form_cover_ideal_h(spec);
  const auto check = verify_linear_quotients(ideal, h_family_order(spec, ideal));
  const auto* cert = std::get_if<QuotientCertificate>(&check);
  if (cert == nullptr) throw std::logic_error("closed-form order failed to give linear quotients");

  InvariantReport r;
  r.subject = IdealSubject::cover;
  r.n = spec.n;
  r.pd = cert->q + 1;
  r.depth = spec.n - r.pd;
  r.dim = spec.n - 2; // intersection of height-two edge primes
  r.cm = r.dim == r.depth;
  r.provenance["pd"] = "q(I) + 1 from linear quotients";
  r.provenance["depth"] = "n - pd";
  r.provenance["dim"] = "n - 2 (edge primes have height two)";
  r.provenance["cm"] = "dim == depth";

  const SimpleGraph g = build_h_graph(spec);
  int max_center_degree = 0;
  for (int alpha : spec.clique) max_center_degree = std::max(max_center_degree, degree(g, alpha));
  const int reg_by_vertices = max_center_degree - 1;
  const int reg_by_generators = ideal.max_degree() - 1;
  if (spec.all_stars()) {
    if (reg_by_vertices != reg_by_generators)
      throw std::logic_error("regularity routes disagree: " + std::to_string(reg_by_vertices) +
                             " vs " + std::to_string(reg_by_generators));
    r.reg = reg_by_vertices;
    r.provenance["reg"] = "max center degree - 1";
  } else {
    r.reg = reg_by_generators;
    r.provenance["reg"] = "max generator degree - 1";
    r.notes.push_back("a clique vertex has no star: reg taken from generator degrees (center-degree "
                      "route gives " + std::to_string(reg_by_vertices) + ")");
  }

  r.linear_resolution = ideal.equigenerated();
  r.provenance["linear_resolution"] = "linear quotients and equigenerated";
  bool single_leaf_stars = std::all_of(spec.clique.begin(), spec.clique.end(),
                                       [&](int a) { return spec.leaf_count(a) == 1; });
  if (r.linear_resolution != single_leaf_stars)
    throw std::logic_error("equigeneration disagrees with the one-leaf-per-star criterion");
  return r;
}

/// Size of a maximum independent set, by branch and bound on bit sets.
inline int maximum_independent_set_size(const SimpleGraph& g) {
  int best = 0;
  auto grow = [&](auto&& self, VertexSet pool, int taken) -> void {
    if (taken + pool.size() <= best) return;
    if (pool.empty()) {
      best = std::max(best, taken);
      return;
    }
    int low = 0;
    int low_deg = 0;
    int high = 0;
    int high_deg = -1;
    pool.for_each([&](int v) {
      int d = (g.neighbors(v) & pool).size();
      if (low == 0 || d < low_deg) {
        low = v;
        low_deg = d;
      }
      if (d > high_deg) {
        high = v;
        high_deg = d;
      }
    });
    if (low_deg <= 1) {
      // Some maximum independent set contains a vertex of degree <= 1.
      VertexSet rest = pool - g.neighbors(low);
      rest.erase(low);
      self(self, rest, taken + 1);
      return;
    }
    VertexSet with = pool - g.neighbors(high);
    with.erase(high);
    self(self, with, taken + 1);
    VertexSet without = pool;
    without.erase(high);
    self(self, without, taken);
  };
  grow(grow, g.vertices(), 0);
  return best;
}

struct HeightCheck {
  int height = 0;
  int alpha0 = 0;
  bool agree = false;
};

/// Height of I(G) as n minus the independence number, against alpha0 from
/// cover enumeration.
inline HeightCheck height_check(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  HeightCheck h;
  h.height = g.n() - maximum_independent_set_size(g);
  h.alpha0 = minimal_covers(g, limits).alpha0;
  h.agree = h.height == h.alpha0;
  return h;
}

/// Every minimal transversal of the cover family has exactly two vertices,
/// i.e. the cover ideal is an intersection of height-two primes.
inline bool unmixedness_check(const CoverCollection& c, const EnumerationLimits& limits = {}) {
  const auto transversals = minimal_transversals(c.covers, limits);
  return !transversals.empty() &&
         std::all_of(transversals.begin(), transversals.end(),
                     [](const VertexSet& t) { return t.size() == 2; });
}

/// What can be said about an arbitrary graph without the family formulas.
struct GraphReport {
  int n = 0;
  int height = 0;
  int alpha0 = 0;
  int dim = 0; // dim R/I(G) = n - height
  bool complement_chordal = false;
  bool edge_linear_resolution = false; // cm is not claimed outside the family
};

inline GraphReport graph_report(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  GraphReport r;
  const auto h = height_check(g, limits);
  r.n = g.n();
  r.height = h.height;
  r.alpha0 = h.alpha0;
  r.dim = g.n() - h.height;
  r.complement_chordal = is_chordal(complement(g)).chordal;
  r.edge_linear_resolution = r.complement_chordal;
  return r;
}

} // namespace coverdeal
