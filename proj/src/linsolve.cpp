// SPDX-License-Identifier: MIT
#include "relaxfv/linsolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "relaxfv/errors.hpp"

namespace relaxfv {

namespace {

// Row-major dense LU with partial pivoting for the n <= 3 fallback where the
// cyclic corner entries collide with the tridiagonal bands.
void dense_factor(std::vector<double>& a, std::vector<int>& piv, int n) {
  piv.resize(n);
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i) {
      if (std::abs(a[i * n + k]) > std::abs(a[p * n + k])) p = i;
    }
    piv[k] = p;
    if (p != k) {
      for (int c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
    }
    const double d = a[k * n + k];
    for (int i = k + 1; i < n; ++i) {
      const double l = a[i * n + k] / d;
      a[i * n + k] = l;
      for (int c = k + 1; c < n; ++c) a[i * n + c] -= l * a[k * n + c];
    }
  }
}

void dense_solve(const std::vector<double>& a, const std::vector<int>& piv, int n,
                 std::vector<double>& x) {
  for (int k = 0; k < n; ++k) {
    if (piv[k] != k) std::swap(x[k], x[piv[k]]);
    for (int i = k + 1; i < n; ++i) x[i] -= a[i * n + k] * x[k];
  }
  for (int k = n - 1; k >= 0; --k) {
    for (int c = k + 1; c < n; ++c) x[k] -= a[k * n + c] * x[c];
    x[k] /= a[k * n + k];
  }
}

}  // namespace

Helmholtz1d::Helmholtz1d(int n, double mu, Bc bc) : n_(n), mu_(mu), bc_(bc) {
  if (n < 1) throw ConfigError("Helmholtz1d needs at least one cell");
  if (mu < 0.0 || !std::isfinite(mu)) {
    throw NumericsError("Helmholtz1d: invalid mu = " + std::to_string(mu));
  }
  if (mu == 0.0 || n == 1) {
    identity_ = (mu == 0.0);
    if (n == 1) identity_ = true;  // D2 vanishes on a single periodic/mirrored cell
    if (identity_) return;
  }
  if (n <= 3 && bc == Bc::periodic) {
    dense_ = true;
    dense_lu_.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
      dense_lu_[i * n + i] = 1.0 + 2.0 * mu;
      const int l = (i + n - 1) % n;
      const int r = (i + 1) % n;
      dense_lu_[i * n + l] -= mu;
      dense_lu_[i * n + r] -= mu;
    }
    dense_factor(dense_lu_, dense_piv_, n);
    return;
  }

  // Base tridiagonal rows: diag 1+2mu, off-diagonals -mu. Zero-gradient walls
  // fold the ghost coupling into the diagonal (1+mu); the periodic corners are
  // handled with the rank-one (Sherman-Morrison) correction below.
  std::vector<double> diag(n, 1.0 + 2.0 * mu);
  double gamma = 0.0;
  if (bc == Bc::outflow) {
    diag.front() = 1.0 + mu;
    diag.back() = 1.0 + mu;
  } else {
    gamma = -diag.front();
    diag.front() -= gamma;                  // 2(1+2mu)
    diag.back() -= (mu * mu) / gamma;       // alpha*beta/gamma with alpha=beta=-mu
  }

  cp_.resize(n);
  inv_d_.resize(n);
  double d = diag[0];
  inv_d_[0] = 1.0 / d;
  cp_[0] = -mu / d;
  for (int i = 1; i < n; ++i) {
    d = diag[i] + mu * cp_[i - 1];
    inv_d_[i] = 1.0 / d;
    cp_[i] = -mu / d;
  }

  if (bc == Bc::periodic) {
    z_.assign(n, 0.0);
    z_[0] = gamma;
    z_[n - 1] = -mu;
    solve_tridiag(z_);
    corr_denom_ = 1.0 + z_[0] + (-mu) * z_[n - 1] / gamma;
    z_gamma_ratio_ = -mu / gamma;
  }
}

void Helmholtz1d::solve_tridiag(std::vector<double>& x) const {
  x[0] *= inv_d_[0];
  for (int i = 1; i < n_; ++i) {
    x[i] = (x[i] + mu_ * x[i - 1]) * inv_d_[i];
  }
  for (int i = n_ - 2; i >= 0; --i) {
    x[i] -= cp_[i] * x[i + 1];
  }
}

void Helmholtz1d::solve(std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw ConfigError("Helmholtz1d::solve: size mismatch");
  }
  if (identity_) return;
  double rhs_inf = 0.0;
  for (double v : x) rhs_inf = std::max(rhs_inf, std::abs(v));
  std::vector<double> rhs;
  rhs = x;

  if (dense_) {
    dense_solve(dense_lu_, dense_piv_, n_, x);
  } else {
    solve_tridiag(x);
    if (bc_ == Bc::periodic) {
      const double fact = (x[0] + z_gamma_ratio_ * x[n_ - 1]) / corr_denom_;
      for (int i = 0; i < n_; ++i) x[i] -= fact * z_[i];
    }
  }

  // Residual self-check: the first term is the nominal accuracy contract, the
  // second the attainable floor set by the conditioning of I + mu*K.
  double x_inf = 0.0;
  for (double v : x) x_inf = std::max(x_inf, std::abs(v));
  const double eps = std::numeric_limits<double>::epsilon();
  const double tol =
      1e-12 * (1.0 + rhs_inf) + 32.0 * eps * (1.0 + 4.0 * mu_) * (1.0 + x_inf);
  double res_inf = 0.0;
  for (int i = 0; i < n_; ++i) {
    int l = i - 1, r = i + 1;
    double xl, xr;
    if (bc_ == Bc::periodic) {
      xl = x[(l + n_) % n_];
      xr = x[r % n_];
    } else {
      xl = x[std::max(l, 0)];
      xr = x[std::min(r, n_ - 1)];
    }
    const double ax = x[i] - mu_ * (xr - 2.0 * x[i] + xl);
    res_inf = std::max(res_inf, std::abs(ax - rhs[i]));
  }
  if (res_inf > tol) {
    throw NumericsError("Helmholtz1d residual " + std::to_string(res_inf) +
                        " exceeds tolerance " + std::to_string(tol));
  }
}

CgResult solve_helmholtz_2d(const Grid& g, std::array<double, 2> mu,
                            std::array<Bc, 2> bc, std::vector<double>& x,
                            double tol) {
  const int nx = g.n[0];
  const int ny = g.n[1];
  const std::size_t n = static_cast<std::size_t>(nx) * ny;
  if (x.size() != n) throw ConfigError("solve_helmholtz_2d: size mismatch");
  if (mu[0] < 0.0 || mu[1] < 0.0 || !std::isfinite(mu[0]) || !std::isfinite(mu[1])) {
    throw NumericsError("solve_helmholtz_2d: invalid mu");
  }
  if (mu[0] == 0.0 && mu[1] == 0.0) return {0, 0.0};

  const auto at = [nx](int i, int j) { return static_cast<std::size_t>(j) * nx + i; };

  // y = (I - mux*D2x - muy*D2y) p with periodic wrap or zero-gradient walls
  // (missing neighbor contributes nothing: ghost equals the boundary cell).
  auto apply = [&](const std::vector<double>& p, std::vector<double>& y) {
    for (int j = 0; j < ny; ++j) {
      const int jm = (j > 0) ? j - 1 : (bc[1] == Bc::periodic ? ny - 1 : -1);
      const int jp = (j < ny - 1) ? j + 1 : (bc[1] == Bc::periodic ? 0 : -1);
      for (int i = 0; i < nx; ++i) {
        const int im = (i > 0) ? i - 1 : (bc[0] == Bc::periodic ? nx - 1 : -1);
        const int ip = (i < nx - 1) ? i + 1 : (bc[0] == Bc::periodic ? 0 : -1);
        const double c = p[at(i, j)];
        double v = c;
        if (im >= 0) v -= mu[0] * (p[at(im, j)] - c);
        if (ip >= 0) v -= mu[0] * (p[at(ip, j)] - c);
        if (jm >= 0) v -= mu[1] * (p[at(i, jm)] - c);
        if (jp >= 0) v -= mu[1] * (p[at(i, jp)] - c);
        y[at(i, j)] = v;
      }
    }
  };

  // Jacobi diagonal, accounting for the dropped couplings at outflow walls.
  std::vector<double> inv_diag(n);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      double d = 1.0;
      const int cx = (bc[0] == Bc::periodic) ? 2 : (i > 0 ? 1 : 0) + (i < nx - 1 ? 1 : 0);
      const int cy = (bc[1] == Bc::periodic) ? 2 : (j > 0 ? 1 : 0) + (j < ny - 1 ? 1 : 0);
      d += mu[0] * cx + mu[1] * cy;
      inv_diag[at(i, j)] = 1.0 / d;
    }
  }

  std::vector<double> b = x;
  double bnorm2 = 0.0;
  for (double v : b) bnorm2 += v * v;
  if (bnorm2 == 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    return {0, 0.0};
  }
  const double bnorm = std::sqrt(bnorm2);

  std::vector<double> r = b;
  std::vector<double> z(n), p(n), ap(n);
  std::fill(x.begin(), x.end(), 0.0);
  for (std::size_t k = 0; k < n; ++k) z[k] = r[k] * inv_diag[k];
  p = z;
  double rz = 0.0;
  for (std::size_t k = 0; k < n; ++k) rz += r[k] * z[k];

  const int cap = static_cast<int>(10.0 * std::sqrt(static_cast<double>(n))) + 100;
  double rnorm = bnorm;
  int it = 0;
  for (; it < cap; ++it) {
    rnorm = 0.0;
    for (double v : r) rnorm += v * v;
    rnorm = std::sqrt(rnorm);
    if (rnorm <= tol * bnorm) break;

    apply(p, ap);
    double pap = 0.0;
    for (std::size_t k = 0; k < n; ++k) pap += p[k] * ap[k];
    const double alpha = rz / pap;
    for (std::size_t k = 0; k < n; ++k) {
      x[k] += alpha * p[k];
      r[k] -= alpha * ap[k];
    }
    for (std::size_t k = 0; k < n; ++k) z[k] = r[k] * inv_diag[k];
    double rz_new = 0.0;
    for (std::size_t k = 0; k < n; ++k) rz_new += r[k] * z[k];
    const double beta = rz_new / rz;
    rz = rz_new;
    for (std::size_t k = 0; k < n; ++k) p[k] = z[k] + beta * p[k];
  }
  // negated comparison so a NaN residual cannot slip through as success
  if (!(rnorm <= tol * bnorm)) {
    throw NumericsError("solve_helmholtz_2d: CG hit the iteration cap " +
                        std::to_string(cap) + " with relative residual " +
                        std::to_string(rnorm / bnorm));
  }
  return {it, rnorm / bnorm};
}

}  // namespace relaxfv
