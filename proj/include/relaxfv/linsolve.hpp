// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <vector>

#include "relaxfv/grid.hpp"

namespace relaxfv {

// Direct solver for the 1D Helmholtz stencil (I - mu*D2) with D2 the
// undivided second difference; mu = (a*dt/dx)^2 is folded in by the caller.
// Zero-gradient closure eliminates the ghost coupling into the boundary
// diagonal; the periodic closure solves the cyclic system exactly via a
// rank-one correction. The factorization is reusable across components.
class Helmholtz1d {
 public:
  Helmholtz1d(int n, double mu, Bc bc);

  // In place: x holds the rhs on entry and the solution on return.
  void solve(std::vector<double>& x) const;

  double mu() const { return mu_; }

 private:
  void solve_tridiag(std::vector<double>& x) const;

  int n_;
  double mu_;
  Bc bc_;
  bool identity_ = false;
  bool dense_ = false;
  std::vector<double> cp_;     // forward-sweep super-diagonal coefficients
  std::vector<double> inv_d_;  // forward-sweep pivot reciprocals
  std::vector<double> z_;      // rank-one correction solve (periodic)
  double corr_denom_ = 1.0;
  double z_gamma_ratio_ = 0.0;  // beta/gamma factor of the rank-one update
  std::vector<double> dense_lu_;  // row-major LU for n <= 3 fallback
  std::vector<int> dense_piv_;
};

struct CgResult {
  int iterations = 0;
  double rel_residual = 0.0;
};

// Matrix-free Jacobi-preconditioned CG for (I - mux*D2x - muy*D2y) on the
// interior unknowns of a 2D grid; deterministic fixed-order reductions, zero
// initial guess. Throws NumericsError when the iteration cap 10*sqrt(n)+100
// is exceeded. x holds the rhs on entry and the solution on return.
CgResult solve_helmholtz_2d(const Grid& g, std::array<double, 2> mu,
                            std::array<Bc, 2> bc, std::vector<double>& x,
                            double tol = 1e-11);

// Component-wise Helmholtz solve over a field's interior. skip_component
// marks rows excluded from the implicit solve (rhs passes through), used by
// the reduced magnetic-stage diagnostic. Returns the largest CG iteration
// count encountered (0 for direct 1D solves).
template <int M>
int solve_block(std::array<double, 2> mu, std::array<Bc, 2> bc, Field<M>& f,
                const std::array<bool, M>* skip_component = nullptr) {
  const Grid& g = f.g;
  int iters = 0;
  if (g.dim == 1) {
    Helmholtz1d solver(g.n[0], mu[0], bc[0]);
    std::vector<double> line(g.n[0]);
    for (int c = 0; c < M; ++c) {
      if (skip_component && (*skip_component)[c]) continue;
      for (int i = 0; i < g.n[0]; ++i) line[i] = f(i, 0)[c];
      solver.solve(line);
      for (int i = 0; i < g.n[0]; ++i) f(i, 0)[c] = line[i];
    }
    return iters;
  }
  std::vector<double> plane(g.ncells_interior());
  for (int c = 0; c < M; ++c) {
    if (skip_component && (*skip_component)[c]) continue;
    std::size_t k = 0;
    for (int j = 0; j < g.n[1]; ++j) {
      for (int i = 0; i < g.n[0]; ++i) plane[k++] = f(i, j)[c];
    }
    const CgResult r = solve_helmholtz_2d(g, mu, bc, plane);
    iters = std::max(iters, r.iterations);
    k = 0;
    for (int j = 0; j < g.n[1]; ++j) {
      for (int i = 0; i < g.n[0]; ++i) f(i, j)[c] = plane[k++];
    }
  }
  return iters;
}

}  // namespace relaxfv
