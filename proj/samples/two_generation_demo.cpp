// Builds the two-element generating set of S_5 wr A_6, prints it, and checks
// through the imprimitive action that it generates the whole product.

#include <iostream>
#include <vector>

#include "wrgen/wrgen.hpp"

int main() {
  using namespace wrgen;
  const auto base = group_spec::symmetric(5);
  const auto top = group_spec::alternating(6);
  const auto set = two_generators(base, top);

  std::cout << base.to_string() << " wr " << top.to_string() << " via " << set.provenance << '\n';
  std::vector<permutation> embedded;
  for (const auto& x : set.elements) {
    std::cout << "  " << format_wreath(x) << "  (order " << wr_order(x) << ")\n";
    embedded.push_back(embed(x));
  }
  const bsgs group(embedded);
  std::cout << "generated order " << group.order() << ", expected " << set.shape.order() << '\n';
  return group.order() == set.shape.order() ? 0 : 1;
}
