// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cmath>

namespace relaxfv {

// Paired explicit/implicit Runge-Kutta tableaux (lower triangular, SDIRK
// diagonal on the implicit side). Only the two pairs used by the steppers are
// provided; the struct exists so the coefficients are testable data rather
// than magic numbers inside the integrators.
struct ButcherPair {
  int s = 1;
  std::array<std::array<double, 2>, 2> alpha_ex{{{0.0, 0.0}, {0.0, 0.0}}};
  std::array<std::array<double, 2>, 2> alpha_im{{{0.0, 0.0}, {0.0, 0.0}}};
  std::array<double, 2> beta_ex{1.0, 0.0};
  std::array<double, 2> beta_im{1.0, 0.0};
  std::array<double, 2> c_ex{0.0, 0.0};
  std::array<double, 2> c_im{0.0, 0.0};

  double row_sum_ex(int r) const { return alpha_ex[r][0] + alpha_ex[r][1]; }
  double row_sum_im(int r) const { return alpha_im[r][0] + alpha_im[r][1]; }
};

// Forward/backward Euler pair underlying the first-order schemes.
inline ButcherPair imex_euler_pair() {
  ButcherPair b;
  b.s = 1;
  b.alpha_im[0][0] = 1.0;
  b.c_im[0] = 1.0;
  return b;
}

// L-stable two-stage SDIRK (eta = 1 - 1/sqrt(2)) paired with the explicit
// tableau c = (0, 1/(2 eta)); both correctors share the weights (1-eta, eta).
inline ButcherPair lsdirk2_pair() {
  const double eta = 1.0 - 1.0 / std::sqrt(2.0);
  const double ctil = 1.0 / (2.0 * eta);
  ButcherPair b;
  b.s = 2;
  b.alpha_im = {{{eta, 0.0}, {1.0 - eta, eta}}};
  b.c_im = {eta, 1.0};
  b.alpha_ex = {{{0.0, 0.0}, {ctil, 0.0}}};
  b.c_ex = {0.0, ctil};
  b.beta_im = {1.0 - eta, eta};
  b.beta_ex = {1.0 - eta, eta};
  return b;
}

}  // namespace relaxfv
