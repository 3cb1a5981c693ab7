// A few products and coproducts of small graphs.
#include <iostream>

#include "hopfgraph/coproducts.hpp"
#include "hopfgraph/graph_io.hpp"
#include "hopfgraph/products.hpp"

using namespace hopfgraph;

int main() {
  auto edge = named("edge"), cherry = named("cherry");
  std::cout << "edge ⧢ cherry = " << to_text(product(ProductKind::EdgeShuffle, edge, cherry)) << '\n';
  std::cout << "edge ⊛ edge = " << to_text(product(ProductKind::EdgeQuasiShuffle, edge, edge)) << '\n';
  std::cout << "edge is edge = " << to_text(product(ProductKind::VertexShuffle, edge, edge)) << '\n';
  std::cout << "Δqs(cherry) = " << to_text(coproduct(CoproductKind::EdgeQuasiShuffle, cherry)) << '\n';
  std::cout << "Δqis(edge) = " << to_text(coproduct(CoproductKind::VertexQuasiShuffle, edge)) << '\n';
}
