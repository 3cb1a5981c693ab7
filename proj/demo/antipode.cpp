// Antipodes in each Hopf configuration, applied to the cherry.
#include <iostream>

#include "hopfgraph/graph_io.hpp"
#include "hopfgraph/hopf.hpp"

using namespace hopfgraph;

int main() {
  auto cherry = named("cherry");
  for (const auto& config : hopf_configurations())
    std::cout << to_string(config) << ": S(cherry) = " << to_text(antipode(config, GraphSum(cherry))) << '\n';
}
