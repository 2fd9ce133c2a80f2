// SPDX-License-Identifier: MIT
#include "relaxfv/grid.hpp"

#include <string>

namespace relaxfv {

Grid build_grid(int dim, std::array<int, 2> n, std::array<double, 2> lo,
                std::array<double, 2> hi, int nghost) {
  if (dim != 1 && dim != 2) {
    throw ConfigError("grid dimension must be 1 or 2, got " + std::to_string(dim));
  }
  if (nghost < 1) {
    throw ConfigError("ghost width must be >= 1");
  }
  Grid g;
  g.dim = dim;
  g.n = n;
  g.lo = lo;
  g.hi = hi;
  if (dim == 1) {
    g.n[1] = 1;
    g.lo[1] = 0.0;
    g.hi[1] = 1.0;
  }
  for (int ax = 0; ax < 2; ++ax) {
    if (ax < dim && g.n[ax] < 1) {
      throw ConfigError("grid needs at least one cell per axis");
    }
    if (ax < dim && !(g.hi[ax] > g.lo[ax])) {
      throw ConfigError("grid extent must be positive");
    }
    g.dx[ax] = (g.hi[ax] - g.lo[ax]) / g.n[ax];
    g.gh[ax] = (ax < dim) ? nghost : 0;
  }
  return g;
}

}  // namespace relaxfv
