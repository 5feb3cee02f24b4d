#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "coverdeal/covers.hpp"
#include "coverdeal/error.hpp"
#include "coverdeal/monomial.hpp"

namespace coverdeal {

/// Proof that an ideal has linear quotients with respect to `order`.
///
/// `order` lists 0-based indices into I.gens(). For every position j >= 2
/// (1-based), colon_vars[j-2] is the variable set generating
/// (u_1, ..., u_{j-1}) : (u_j) and q_values[j-2] its size.
struct QuotientCertificate {
  std::vector<std::size_t> order;
  std::vector<VertexSet> colon_vars;
  std::vector<int> q_values;
  int q = 0; // max of q_values; 0 for a principal ideal

  friend bool operator==(const QuotientCertificate&, const QuotientCertificate&) = default;
};

/// First position (1-based) whose colon ideal is not generated by variables,
/// with a minimal colon generator of degree != 1.
struct QuotientFailure {
  int position = 0;
  Monomial witness;
  MonomialIdeal colon{1, {}};
};

using QuotientCheck = std::variant<QuotientCertificate, QuotientFailure>;

namespace detail {

inline MonomialIdeal prefix_colon(const MonomialIdeal& ideal, const std::vector<std::size_t>& prefix,
                                  std::size_t next) {
  std::vector<Monomial> quotients;
  quotients.reserve(prefix.size());
  const auto& u = ideal.gens()[next];
  for (auto k : prefix) quotients.emplace_back(ideal.gens()[k].support - u.support);
  return MonomialIdeal(ideal.n(), quotients);
}

inline std::optional<Monomial> non_linear_generator(const MonomialIdeal& colon) {
  for (const auto& g : colon.gens())
    if (g.degree() != 1) return g;
  return std::nullopt;
}

inline void check_permutation(const std::vector<std::size_t>& order, std::size_t t) {
  if (order.size() != t)
    throw ValidationError("ordering has " + std::to_string(order.size()) + " entries, ideal has " +
                          std::to_string(t) + " generators");
  std::vector<bool> used(t, false);
  for (auto i : order) {
    if (i >= t || used[i])
      throw ValidationError("ordering is not a permutation (index " + std::to_string(i) + ")");
    used[i] = true;
  }
}

} // namespace detail

inline QuotientCheck verify_linear_quotients(const MonomialIdeal& ideal,
                                             const std::vector<std::size_t>& order) {
  detail::check_permutation(order, ideal.size());
  QuotientCertificate cert;
  cert.order = order;
  std::vector<std::size_t> prefix;
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (j > 0) {
      MonomialIdeal colon = detail::prefix_colon(ideal, prefix, order[j]);
      if (auto bad = detail::non_linear_generator(colon))
        return QuotientFailure{static_cast<int>(j + 1), *bad, colon};
      VertexSet vars;
      for (const auto& g : colon.gens()) vars |= g.support;
      cert.colon_vars.push_back(vars);
      cert.q_values.push_back(vars.size());
      cert.q = std::max(cert.q, vars.size());
    }
    prefix.push_back(order[j]);
  }
  return cert;
}

/// Explicit linear-quotient order for the closed-form cover ideal of an H
/// graph: the all-centers generator first when every center has a star,
/// otherwise the generator dropping the largest starless center; then the
/// remaining "swap alpha_i for its leaves" generators by descending i.
inline std::vector<std::size_t> h_family_order(const HFamilySpec& spec, const MonomialIdeal& ideal) {
  require_closed_form_family(spec);
  const VertexSet centers = spec.centers();
  auto swapped = [&](int alpha) {
    VertexSet c = centers;
    c.erase(alpha);
    return c | VertexSet::from_vector(spec.leaves_of(alpha));
  };

  std::vector<VertexSet> sequence;
  int lead = 0;
  if (spec.all_stars()) {
    sequence.push_back(centers);
  } else {
    for (int alpha : spec.clique)
      if (spec.leaf_count(alpha) == 0) lead = alpha;
    sequence.push_back(swapped(lead));
  }
  for (auto it = spec.clique.rbegin(); it != spec.clique.rend(); ++it)
    if (*it != lead) sequence.push_back(swapped(*it));

  std::vector<std::size_t> order;
  for (const auto& s : sequence) {
    auto pos = std::find(ideal.gens().begin(), ideal.gens().end(), Monomial(s));
    if (pos == ideal.gens().end())
      throw ValidationError("ideal is not the closed-form cover ideal of this spec (missing " +
                            Monomial(s).to_string() + ")");
    order.push_back(static_cast<std::size_t>(pos - ideal.gens().begin()));
  }
  if (order.size() != ideal.size())
    throw ValidationError("ideal has generators beyond the closed-form cover ideal of this spec");
  return order;
}

struct QuotientSearchLimits {
  std::size_t max_generators = 12;
};

/// Depth-first search over orderings, trying generators in index order so
/// the first success is the lexicographically smallest linear-quotient
/// order. Prefix sets that cannot be completed are memoized (the colon
/// ideals only depend on the prefix as a set). nullopt means exhausted.
inline std::optional<QuotientCertificate> search_linear_quotients(
    const MonomialIdeal& ideal, const QuotientSearchLimits& limits = {}) {
  const std::size_t t = ideal.size();
  if (t > limits.max_generators || t > 63)
    throw ResourceError("ideal has " + std::to_string(t) + " generators, over the search bound of " +
                        std::to_string(std::min<std::size_t>(limits.max_generators, 63)));
  if (t == 0) return std::nullopt;

  std::vector<std::size_t> prefix;
  std::unordered_set<std::uint64_t> dead;
  auto extend = [&](auto&& self, std::uint64_t used) -> bool {
    if (prefix.size() == t) return true;
    if (dead.count(used) != 0) return false;
    for (std::size_t i = 0; i < t; ++i) {
      if ((used >> i) & 1U) continue;
      if (!prefix.empty() &&
          detail::non_linear_generator(detail::prefix_colon(ideal, prefix, i)).has_value())
        continue;
      prefix.push_back(i);
      if (self(self, used | (std::uint64_t{1} << i))) return true;
      prefix.pop_back();
    }
    dead.insert(used);
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return std::get<QuotientCertificate>(verify_linear_quotients(ideal, prefix));
}

/// Total Betti numbers of R/I and graded shifts, read off a linear-quotient
/// certificate: beta_{i+1} = sum_j C(q_j, i) with q_1 = 0, each term shifted
/// by deg(u_j) + i.
struct ResolutionShape {
  std::vector<int> betti;               // beta_0 .. beta_p
  std::vector<std::vector<int>> shifts; // shifts[i]: ascending d for each R(-d) summand

  [[nodiscard]] int length() const { return static_cast<int>(betti.size()) - 1; }

  friend bool operator==(const ResolutionShape&, const ResolutionShape&) = default;
};

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// `degrees[i]` is the degree of generator i (indexing as in cert.order).
inline ResolutionShape betti_from_certificate(const QuotientCertificate& cert,
                                              const std::vector<int>& degrees) {
  std::vector<int> qs{0};
  qs.insert(qs.end(), cert.q_values.begin(), cert.q_values.end());
  if (qs.size() != cert.order.size())
    throw ValidationError("certificate has " + std::to_string(cert.q_values.size()) +
                          " q-values for " + std::to_string(cert.order.size()) + " generators");

  ResolutionShape shape;
  shape.betti.push_back(1);
  shape.shifts.push_back({0});
  for (int i = 0; i <= cert.q; ++i) {
    std::vector<int> row;
    for (std::size_t j = 0; j < cert.order.size(); ++j) {
      const std::size_t gen = cert.order[j];
      if (gen >= degrees.size())
        throw ValidationError("missing degree for generator " + std::to_string(gen));
      for (long long c = binomial(qs[j], i); c > 0; --c) row.push_back(degrees[gen] + i);
    }
    if (row.empty()) break;
    std::sort(row.begin(), row.end());
    shape.betti.push_back(static_cast<int>(row.size()));
    shape.shifts.push_back(std::move(row));
  }
  return shape;
}

inline std::vector<int> generator_degrees(const MonomialIdeal& ideal) {
  std::vector<int> out;
  out.reserve(ideal.size());
  for (const auto& g : ideal.gens()) out.push_back(g.degree());
  return out;
}

} // namespace coverdeal
