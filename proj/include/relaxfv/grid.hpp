// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "relaxfv/errors.hpp"

namespace relaxfv {

enum class Bc { periodic, outflow };

// Uniform Cartesian cell-centered grid. 1D grids keep n[1] = 1 with no ghost
// layer on the second axis, so index arithmetic is shared between dimensions.
struct Grid {
  int dim = 1;
  std::array<int, 2> n{1, 1};
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{1.0, 1.0};
  std::array<double, 2> dx{1.0, 1.0};
  std::array<int, 2> gh{0, 0};

  int ntot(int axis) const { return n[axis] + 2 * gh[axis]; }
  std::size_t ncells_tot() const {
    return static_cast<std::size_t>(ntot(0)) * static_cast<std::size_t>(ntot(1));
  }
  std::size_t ncells_interior() const {
    return static_cast<std::size_t>(n[0]) * static_cast<std::size_t>(n[1]);
  }
  // Flattened index of cell (i, j); ghosts included, i in [-gh[0], n[0]+gh[0]).
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(j + gh[1]) * ntot(0) +
           static_cast<std::size_t>(i + gh[0]);
  }
  double center(int axis, int i) const { return lo[axis] + (i + 0.5) * dx[axis]; }
  double cell_volume() const { return dim == 1 ? dx[0] : dx[0] * dx[1]; }
};

Grid build_grid(int dim, std::array<int, 2> n, std::array<double, 2> lo,
                std::array<double, 2> hi, int nghost = 2);

template <int M>
struct Field {
  Grid g;
  std::vector<std::array<double, M>> data;

  Field() = default;
  explicit Field(const Grid& grid)
      : g(grid), data(grid.ncells_tot(), std::array<double, M>{}) {}

  std::array<double, M>& operator()(int i, int j = 0) { return data[g.idx(i, j)]; }
  const std::array<double, M>& operator()(int i, int j = 0) const {
    return data[g.idx(i, j)];
  }
  void set_zero() {
    for (auto& c : data) c.fill(0.0);
  }
};

// Ghost exchange: axis 0 over interior rows first, then axis 1 over all
// columns including the freshly filled x-ghosts, which also populates corners.
template <int M>
void fill_ghosts(Field<M>& f, const std::array<Bc, 2>& bc) {
  const Grid& g = f.g;
  if (g.gh[0] > 0) {
    for (int j = 0; j < g.n[1]; ++j) {
      for (int k = 1; k <= g.gh[0]; ++k) {
        if (bc[0] == Bc::periodic) {
          f(-k, j) = f(g.n[0] - k, j);
          f(g.n[0] - 1 + k, j) = f(k - 1, j);
        } else {
          f(-k, j) = f(0, j);
          f(g.n[0] - 1 + k, j) = f(g.n[0] - 1, j);
        }
      }
    }
  }
  if (g.dim > 1 && g.gh[1] > 0) {
    for (int i = -g.gh[0]; i < g.n[0] + g.gh[0]; ++i) {
      for (int k = 1; k <= g.gh[1]; ++k) {
        if (bc[1] == Bc::periodic) {
          f(i, -k) = f(i, g.n[1] - k);
          f(i, g.n[1] - 1 + k) = f(i, k - 1);
        } else {
          f(i, -k) = f(i, 0);
          f(i, g.n[1] - 1 + k) = f(i, g.n[1] - 1);
        }
      }
    }
  }
}

}  // namespace relaxfv
