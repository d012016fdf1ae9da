#include <iostream>

#include "permgraph/analysis.hpp"
#include "permgraph/perm_graph.hpp"

int main() {
  const auto report = permgraph::analyze(permgraph::build_gamma_c(permgraph::make_symmetric(3)));
  std::cout << report.recognized_name.value_or("?") << "\n";
  return report.star ? 0 : 1;
}
