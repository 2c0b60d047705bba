#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bhcv {

enum class LatticeKind { Chain, Grid };

// Site layout with a deterministic nearest-neighbor edge list. Sites are
// 0-based; grids are numbered row-major (site r*n + c). Every edge satisfies
// i < j. Immutable after construction.
struct Lattice {
  LatticeKind kind = LatticeKind::Chain;
  int extent = 1;  // chain length N, or grid side n
  int num_sites = 1;
  std::vector<std::pair<int, int>> edges;

  std::string description() const;
};

// Open chain of N sites: edges (0,1),(1,2),...,(N-2,N-1).
Lattice build_chain(int num_sites);

// n x n grid. Edge order interleaves horizontal and vertical couplings:
// rows top to bottom, and within row r, column c emits (r*n+c, r*n+c+1)
// then (r*n+c, (r+1)*n+c) where those neighbors exist.
Lattice build_grid(int side);

}  // namespace bhcv
