// Motif counts in K4 under each counting mode, and the ei signature.
#include <iostream>

#include "hopfgraph/counting.hpp"
#include "hopfgraph/graph_io.hpp"

using namespace hopfgraph;

int main() {
  Graph k4 = named_graph("K4");
  for (const char* pattern : {"edge", "cherry", "triangle"}) {
    std::cout << pattern << ":";
    for (auto mode : {CountingMode::EdgeRestricted, CountingMode::VertexInduced, CountingMode::Homomorphism,
                      CountingMode::HomomorphismDP})
      std::cout << "  " << to_string(mode) << "=" << to_short_string(count(mode, named_graph(pattern), k4));
    std::cout << '\n';
  }
  std::cout << "GC(K4) = " << to_text(signature(CountingMode::EdgeRestricted, k4).terms) << '\n';
}
