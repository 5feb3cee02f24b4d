#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coverdeal/invariants.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace coverdeal;
using namespace coverdeal::testing;

namespace {

int hochster_pd(int n, const std::vector<Mask>& gens) {
  int pd = 0;
  for (const auto& [key, count] : hochster_betti(n, gens))
    if (count > 0) pd = std::max(pd, key.first);
  return pd;
}

int hochster_reg(int n, const std::vector<Mask>& gens) {
  int reg = 0;
  for (const auto& [key, count] : hochster_betti(n, gens))
    if (count > 0) reg = std::max(reg, key.second - key.first);
  return reg;
}

std::vector<Mask> edge_masks(const SimpleGraph& g) {
  std::vector<Mask> out;
  for (auto [u, v] : edge_list(g)) out.push_back((Mask{1} << u) | (Mask{1} << v));
  return out;
}

} // namespace

TEST_CASE("edge ideal invariants of the worked examples") {
  auto ex16 = edge_ideal_invariants(example_16_spec());
  CHECK(ex16.dim == 7);
  CHECK(ex16.pd == 6);
  CHECK(ex16.depth == 5);
  CHECK(ex16.reg == 1);
  CHECK_FALSE(ex16.cm);
  CHECK(ex16.linear_resolution);
  CHECK(ex16.dim == 11 - minimal_covers(build_h_graph(example_16_spec())).alpha0);

  auto ex29 = edge_ideal_invariants(example_29_spec());
  CHECK(ex29.dim == 3);
  CHECK(ex29.pd == 3);
  CHECK(ex29.depth == 3);
  CHECK(ex29.reg == 1);
  CHECK(ex29.cm);
  CHECK(ex29.provenance.at("pd") == "m + max leaf count - 1");

  CHECK_THROWS_AS(edge_ideal_invariants(HFamilySpec{2, {1, 2}, {}}), UnsupportedError);
}

TEST_CASE("cover ideal invariants of the worked examples") {
  auto ex29 = cover_ideal_invariants(example_29_spec());
  CHECK(ex29.pd == 2);
  CHECK(ex29.dim == 4);
  CHECK(ex29.depth == 4);
  CHECK(ex29.reg == 2);
  CHECK(ex29.cm);
  CHECK(ex29.linear_resolution);

  auto ex16 = cover_ideal_invariants(example_16_spec());
  CHECK(ex16.pd == 2);
  CHECK(ex16.dim == 9);
  CHECK(ex16.depth == 9);
  CHECK(ex16.reg == 5);
  CHECK(ex16.provenance.at("reg") == "max center degree - 1");
  CHECK(closed_form_cover_ideal_h(example_16_spec()).max_degree() - 1 == 5);
  CHECK_FALSE(ex16.linear_resolution);

  auto m2 = cover_ideal_invariants(m2_spec());
  CHECK(m2.pd == 2);
  CHECK(m2.dim == 2);
  CHECK(m2.depth == 2);
  CHECK(m2.reg == 1);
  CHECK(m2.linear_resolution);

  auto single = cover_ideal_invariants(single_star_spec());
  CHECK(single.provenance.at("reg") == "max generator degree - 1");
  CHECK(single.reg == 2);
  CHECK_FALSE(single.notes.empty());
}

TEST_CASE("invariant formulas agree with Hochster's formula on small family members") {
  for (const auto& spec : sweep_specs(45, 9, 53)) {
    SimpleGraph g = build_h_graph(spec);
    auto edge = edge_ideal_invariants(spec);
    const auto edges = edge_masks(g);
    CHECK(edge.pd == hochster_pd(spec.n, edges));
    CHECK(edge.reg == hochster_reg(spec.n, edges));
    CHECK(edge.dim == spec.n - brute_alpha0(g));

    auto cover = cover_ideal_invariants(spec);
    const auto covers = brute_minimal_covers(g);
    CHECK(cover.pd == hochster_pd(spec.n, covers));
    CHECK(cover.reg == hochster_reg(spec.n, covers));
  }
}

TEST_CASE("formula consistency over the family sweep") {
  for (const auto& spec : sweep_specs(150, 12, 61)) {
    auto edge = edge_ideal_invariants(spec);
    auto cover = cover_ideal_invariants(spec);
    SimpleGraph g = build_h_graph(spec);
    CHECK(edge.pd + edge.depth == spec.n);
    CHECK(cover.pd + cover.depth == spec.n);
    CHECK(edge.dim >= edge.depth);
    CHECK(edge.dim == spec.n - minimal_covers(g).alpha0);

    bool one_leaf_each = true;
    for (int a : spec.clique) one_leaf_each = one_leaf_each && spec.leaf_count(a) == 1;
    CHECK(edge.cm == one_leaf_each);
    CHECK(cover.cm);
    CHECK(cover.linear_resolution == one_leaf_each);
    CHECK(cover.linear_resolution == closed_form_cover_ideal_h(spec).equigenerated());
    CHECK(edge.linear_resolution);
    CHECK(cover.reg == closed_form_cover_ideal_h(spec).max_degree() - 1);
  }
}

TEST_CASE("height_check") {
  auto ex16 = height_check(build_h_graph(example_16_spec()));
  CHECK(ex16.height == 4);
  CHECK(ex16.alpha0 == 4);
  CHECK(ex16.agree);
  auto k2 = height_check(SimpleGraph::from_edges(2, {{1, 2}}));
  CHECK((k2.height == 1 && k2.alpha0 == 1 && k2.agree));
  auto ex29 = height_check(build_h_graph(example_29_spec()));
  CHECK((ex29.height == 3 && ex29.alpha0 == 3 && ex29.agree));

  std::mt19937 rng(13);
  for (int i = 0; i < 120; ++i) {
    SimpleGraph g = random_graph(rng, 2 + i % 11, 0.3);
    auto h = height_check(g);
    CHECK(h.agree);
    CHECK(h.height == brute_alpha0(g));
  }
}

TEST_CASE("unmixedness via transversal duality") {
  CHECK(unmixedness_check(minimal_covers(build_h_graph(example_29_spec()))));
  CHECK(unmixedness_check(CoverCollection{{{1}, {2}}, 1}));
  CHECK(unmixedness_check(minimal_covers(build_h_graph(example_16_spec()))));
  CHECK_FALSE(unmixedness_check(minimal_covers(SimpleGraph(3))));

  // transversals of the 11-node network's covers are its 13 edges
  auto t = minimal_transversals(minimal_covers(build_h_graph(example_16_spec())).covers);
  std::vector<VertexSet> edges;
  for (auto [u, v] : build_h_graph(example_16_spec()).edges()) edges.push_back(VertexSet{u, v});
  std::sort(edges.begin(), edges.end(), VertexSet::size_lex_less);
  CHECK(t == edges);

  std::mt19937 rng(21);
  for (int i = 0; i < 80; ++i) {
    SimpleGraph g = random_graph(rng, 2 + i % 11, 0.35);
    if (g.edge_count() == 0) continue;
    auto transversals = minimal_transversals(minimal_covers(g).covers);
    std::vector<VertexSet> es;
    for (auto [u, v] : g.edges()) es.push_back(VertexSet{u, v});
    std::sort(es.begin(), es.end(), VertexSet::size_lex_less);
    CHECK(transversals == es);
  }
}

TEST_CASE("out-of-family report") {
  SimpleGraph c4 = SimpleGraph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  auto r = graph_report(c4);
  CHECK(r.height == 2);
  CHECK(r.dim == 2);
  CHECK(r.complement_chordal); // complement of C4 is two disjoint edges
  SimpleGraph c5 = SimpleGraph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  CHECK_FALSE(graph_report(c5).complement_chordal);
  CHECK_FALSE(graph_report(c5).edge_linear_resolution);
}
