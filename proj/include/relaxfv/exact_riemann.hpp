// SPDX-License-Identifier: MIT
//
// Exact solver for the 1D Riemann problem of the compressible Euler
// equations (ideal gas). Star-region pressure from a guarded Newton
// iteration with bisection fallback, self-similar sampling in xi = x/t,
// and Gauss-Legendre cell averaging for grid references.
#pragma once

#include <vector>

namespace relaxfv {

struct RpState {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

struct RiemannSolution {
  double gamma = 1.4;
  RpState left, right;
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_l = 0.0;
  double rho_star_r = 0.0;
  bool left_shock = false;
  bool right_shock = false;
  // wave positions in xi = x/t; for a shock head == tail
  double head_l = 0.0, tail_l = 0.0;
  double head_r = 0.0, tail_r = 0.0;
  int iterations = 0;

  RpState sample(double xi) const;
};

// Solves for the star region. Throws NumericsError when the data produce
// vacuum, ConfigError on non-physical inputs.
RiemannSolution solve_riemann(const RpState& left, const RpState& right, double gamma);

// Exact cell averages of (rho, u, p) on n uniform cells of [lo, hi] at time
// t > 0 for a discontinuity initially at x0; at t == 0 returns the piecewise
// initial data averaged over each cell.
std::vector<RpState> riemann_cell_averages(const RiemannSolution& sol, int n, double lo,
                                           double hi, double x0, double t);

}  // namespace relaxfv
