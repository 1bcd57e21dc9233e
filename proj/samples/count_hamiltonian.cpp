// Reads an edge list from the file named on the command line (or standard
// input) and prints the Hamiltonian cycle
// count by two independent algebraic routes together with the number of
// spanning trees.

#include "fzgraph/fzgraph.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  try {
    std::ifstream file;
    if (argc > 1) {
      file.open(argv[1]);
      if (!file) {
        std::cerr << "cannot open " << argv[1] << '\n';
        return 2;
      }
    }
    const fzg::Graph g = fzg::parse_edge_list(argc > 1 ? file : std::cin);
    std::cout << "vertices " << g.order() << ", edges " << g.size() << '\n'
              << "hamiltonian (fz-trace) " << fzg::hamiltonian_fz_trace(g) << '\n'
              << "hamiltonian (nilpotent) " << fzg::hamiltonian_nilpotent(g) << '\n'
              << "spanning trees " << fzg::spanning_tree_count(g) << '\n';
  } catch (const fzg::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
