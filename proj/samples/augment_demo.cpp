// Builds a small bidirected graph in code and prints both augmentations.

#include <iostream>

#include "bidi/bidi.hpp"

int main() {
  using bidi::Sign;
  bidi::BidirectedGraph g;
  const auto t = g.add_vertex("t");
  const auto s = g.add_vertex("s");
  const auto a = g.add_vertex("a");
  const auto b = g.add_vertex("b");
  g.add_link(t, Sign::minus, s, Sign::plus);
  g.add_link(s, Sign::plus, a, Sign::minus);
  g.add_link(a, Sign::plus, b, Sign::plus);
  g.add_link(b, Sign::minus, s, Sign::plus);

  const bidi::Classification c = bidi::classify(g);
  std::cout << "sign lower bound " << bidi::sign_lower_bound(c) << ", arc lower bound "
            << bidi::arc_lower_bound(c) << "\n";

  for (const auto& [name, aug] : {std::pair{"signs", bidi::augment_signs(g)},
                                  std::pair{"arcs", bidi::augment_arcs(g)}}) {
    std::cout << name << ": " << aug.arc_cost() << " arcs, " << aug.sign_cost() << " signs\n";
    for (const bidi::Arc& arc : aug.added) std::cout << "  " << bidi::format_arc(g, arc) << "\n";
    std::cout << "  strongly connected: " << std::boolalpha
              << bidi::is_strongly_connected(bidi::with_arcs(g, aug.added)) << "\n";
  }
}
