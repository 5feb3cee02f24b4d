#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverdeal/covers.hpp"
#include "coverdeal/error.hpp"
#include "coverdeal/graph.hpp"
#include "coverdeal/vertex_set.hpp"

namespace coverdeal {

/// Squarefree monomial X_{i1}...X_{ik}, stored as its support.
struct Monomial {
  VertexSet support;

  Monomial() = default;
  explicit Monomial(VertexSet s) : support(s) {}
  Monomial(std::initializer_list<int> vars) : support(vars) {}

  [[nodiscard]] int degree() const { return support.size(); }
  [[nodiscard]] bool is_one() const { return support.empty(); }
  [[nodiscard]] bool divides(const Monomial& other) const {
    return support.subset_of(other.support);
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// "X2*X4*X6"; the unit monomial renders as "1".
  [[nodiscard]] std::string to_string() const {
    if (is_one()) return "1";
    std::string s;
    support.for_each([&](int v) {
      if (!s.empty()) s += "*";
      s += "X" + std::to_string(v);
    });
    return s;
  }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) { return Monomial(a.support | b.support); }
inline Monomial gcd(const Monomial& a, const Monomial& b) { return Monomial(a.support & b.support); }

/// Squarefree monomial ideal held by its minimal generating set G(I),
/// ordered by (degree, lex support). No generators means the zero ideal.
class MonomialIdeal {
public:
  MonomialIdeal(int n, const std::vector<Monomial>& gens) : n_(n) {
    if (n < 1 || n > kMaxVertices)
      throw ValidationError("ambient variable count " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxVertices));
    const VertexSet ambient = VertexSet::range(n);
    std::vector<VertexSet> supports;
    supports.reserve(gens.size());
    for (const auto& g : gens) {
      if (!g.support.subset_of(ambient))
        throw ValidationError("generator " + g.to_string() + " uses a variable beyond X" +
                              std::to_string(n));
      supports.push_back(g.support);
    }
    for (const auto& s : minimalize(std::move(supports))) gens_.emplace_back(s);
  }

  static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial{}}); }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<Monomial>& gens() const { return gens_; }
  [[nodiscard]] std::size_t size() const { return gens_.size(); }
  [[nodiscard]] bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  [[nodiscard]] bool is_zero() const { return gens_.empty(); }

  [[nodiscard]] bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  [[nodiscard]] int max_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  [[nodiscard]] bool equigenerated() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.degree() == gens_.front().degree(); });
  }

  /// "(X1*X2, X2*X4)"
  [[nodiscard]] std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i > 0) s += ", ";
      s += gens_[i].to_string();
    }
    return s + ")";
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  int n_;
  std::vector<Monomial> gens_;
};

/// True iff both ideals have the same minimal generators; ambient rings must match.
inline bool equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n() != b.n())
    throw ValidationError("ideals live in different rings (" + std::to_string(a.n()) + " vs " +
                          std::to_string(b.n()) + " variables)");
  return a.gens() == b.gens();
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n() != b.n()) throw ValidationError("cannot intersect ideals over different rings");
  std::vector<Monomial> lcms;
  lcms.reserve(a.size() * b.size());
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) lcms.push_back(lcm(f, g));
  return MonomialIdeal(a.n(), lcms);
}

inline MonomialIdeal edge_ideal(const SimpleGraph& g) {
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) gens.push_back(Monomial{u, v});
  return MonomialIdeal(g.n(), gens);
}

inline MonomialIdeal cover_ideal_from_covers(const CoverCollection& c, int n) {
  std::vector<Monomial> gens;
  gens.reserve(c.covers.size());
  for (const auto& cover : c.covers) gens.emplace_back(cover);
  return MonomialIdeal(n, gens);
}

/// Intersection of the edge primes (X_i, X_j), folded pairwise.
/// An edgeless graph gives the unit ideal.
inline MonomialIdeal cover_ideal_by_intersection(const SimpleGraph& g) {
  MonomialIdeal acc = MonomialIdeal::unit(g.n());
  for (auto [u, v] : g.edges()) acc = intersect(acc, MonomialIdeal(g.n(), {Monomial{u}, Monomial{v}}));
  return acc;
}

inline MonomialIdeal closed_form_cover_ideal_h(const HFamilySpec& spec) {
  std::vector<Monomial> gens;
  for (const auto& c : closed_form_covers(spec)) gens.emplace_back(c);
  MonomialIdeal ideal(spec.n, gens);
  if (ideal.size() != gens.size())
    throw std::logic_error("closed-form cover generators are not an antichain");
  return ideal;
}

/// I : (u), generated by g / gcd(g, u) over the generators g of I.
inline MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& u) {
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.size());
  for (const auto& g : ideal.gens()) quotients.emplace_back(g.support - u.support);
  return MonomialIdeal(ideal.n(), quotients);
}

} // namespace coverdeal
