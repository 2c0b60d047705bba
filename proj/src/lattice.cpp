#include "bhcv/lattice.hpp"

#include <stdexcept>

namespace bhcv {

std::string Lattice::description() const {
  if (kind == LatticeKind::Chain) return "chain:" + std::to_string(extent);
  return "grid:" + std::to_string(extent);
}

Lattice build_chain(int num_sites) {
  if (num_sites < 1) throw std::invalid_argument("build_chain: N must be >= 1");
  Lattice lat;
  lat.kind = LatticeKind::Chain;
  lat.extent = num_sites;
  lat.num_sites = num_sites;
  lat.edges.reserve(static_cast<size_t>(num_sites - 1));
  for (int i = 0; i + 1 < num_sites; ++i) lat.edges.emplace_back(i, i + 1);
  return lat;
}

Lattice build_grid(int side) {
  if (side < 1) throw std::invalid_argument("build_grid: n must be >= 1");
  Lattice lat;
  lat.kind = LatticeKind::Grid;
  lat.extent = side;
  lat.num_sites = side * side;
  const int n = side;
  lat.edges.reserve(static_cast<size_t>(2 * (n * n - n)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int site = r * n + c;
      if (c + 1 < n) lat.edges.emplace_back(site, site + 1);
      if (r + 1 < n) lat.edges.emplace_back(site, site + n);
    }
  }
  return lat;
}

}  // namespace bhcv
