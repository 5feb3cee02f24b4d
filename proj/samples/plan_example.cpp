// Builds the 11-node sensor network, prints its covers, leader plan and
// cover-ideal invariants.
#include <iostream>

#include "coverdeal/coverdeal.hpp"

int main() {
  using namespace coverdeal;
  HFamilySpec spec{11, {2, 6, 8, 11}, {{2, {1}}, {6, {3, 4, 5}}, {8, {7}}, {11, {9, 10}}}};
  const SimpleGraph g = build_h_graph(spec);

  const auto covers = minimal_covers(g);
  std::cout << "minimal covers (alpha0 = " << covers.alpha0 << "):\n";
  for (const auto& c : covers.covers) std::cout << "  " << c.to_string() << '\n';

  const auto plan = plan_placement(g);
  std::cout << "leaders: " << plan.leaders.to_string() << '\n';
  for (auto [sensor, leader] : plan.assignment) std::cout << "  " << sensor << " -> " << leader << '\n';

  const auto inv = cover_ideal_invariants(spec);
  std::cout << "cover ideal: " << closed_form_cover_ideal_h(spec).to_string() << '\n'
            << "pd " << inv.pd << ", depth " << inv.depth << ", dim " << inv.dim << ", reg " << inv.reg
            << '\n';
}
