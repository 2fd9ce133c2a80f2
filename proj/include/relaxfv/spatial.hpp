// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>

#include "relaxfv/grid.hpp"
#include "relaxfv/models.hpp"

namespace relaxfv {

enum class Limiter { minmod, none };
enum class Diffusion { local, global };

inline double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) return std::min(a, b);
  if (a < 0.0 && b < 0.0) return std::max(a, b);
  return 0.0;
}

// Limited slope over the 3-cell stencil, in "per cell width" units: the face
// extrapolations are q +- slope/2. Limiter::none takes the central average of
// the one-sided differences (unlimited linear reconstruction for smooth runs).
template <int M>
std::array<double, M> limited_slope(const std::array<double, M>& qm,
                                    const std::array<double, M>& q,
                                    const std::array<double, M>& qp, Limiter lim) {
  std::array<double, M> s;
  for (int c = 0; c < M; ++c) {
    const double fwd = qp[c] - q[c];
    const double bwd = q[c] - qm[c];
    s[c] = (lim == Limiter::minmod) ? minmod(fwd, bwd) : 0.5 * (fwd + bwd);
  }
  return s;
}

// Rusanov flux for the slow sub-flux with an explicit diffusion speed.
template <class Model>
typename Model::State rusanov_flux_speed(const Model& mdl,
                                         const typename Model::State& ql,
                                         const typename Model::State& qr, int axis,
                                         double s) {
  const auto fl = mdl.flux_slow(ql, axis);
  const auto fr = mdl.flux_slow(qr, axis);
  typename Model::State f;
  for (int c = 0; c < Model::m; ++c) {
    f[c] = 0.5 * (fl[c] + fr[c]) - 0.5 * s * (qr[c] - ql[c]);
  }
  return f;
}

// Local-diffusion variant: interface speed from the adjacent slow eigenvalues.
template <class Model>
typename Model::State rusanov_flux(const Model& mdl, const typename Model::State& ql,
                                   const typename Model::State& qr, int axis) {
  const double s = std::max(mdl.speed_slow(ql, axis), mdl.speed_slow(qr, axis));
  return rusanov_flux_speed(mdl, ql, qr, axis, s);
}

template <class Model>
typename Model::State central_fast_flux(const Model& mdl,
                                        const typename Model::State& ql,
                                        const typename Model::State& qr, int j,
                                        int axis) {
  const auto fl = mdl.flux_fast(ql, j, axis);
  const auto fr = mdl.flux_fast(qr, j, axis);
  typename Model::State f;
  for (int c = 0; c < Model::m; ++c) f[c] = 0.5 * (fl[c] + fr[c]);
  return f;
}

namespace detail {

inline void axis_offsets(int axis, int& di, int& dj) {
  di = (axis == 0) ? 1 : 0;
  dj = (axis == 0) ? 0 : 1;
}

}  // namespace detail

// Accumulates div(F_slow) over all axes into `out` using Rusanov interface
// fluxes; `order` 2 applies the limited linear reconstruction (ghost width
// must be >= 2), `s_global` switches to the single global diffusion speed.
template <class Model>
void add_slow_divergence(const Model& mdl, const Field<Model::m>& q, int order,
                         Limiter lim, std::optional<double> s_global,
                         Field<Model::m>& out) {
  const Grid& g = q.g;
  using State = typename Model::State;
  for (int axis = 0; axis < Model::dim; ++axis) {
    int di, dj;
    detail::axis_offsets(axis, di, dj);
    const double inv_dx = 1.0 / g.dx[axis];
    const int nline = g.n[axis];
    const int ntrans = (Model::dim == 2) ? g.n[1 - axis] : 1;
    std::vector<State> face(nline + 1);
    for (int t = 0; t < ntrans; ++t) {
      auto cell = [&](int k) -> const State& {
        return (axis == 0) ? q(k, t) : q(t, k);
      };
      for (int k = 0; k <= nline; ++k) {
        // face k sits between line cells k-1 and k
        State ql = cell(k - 1);
        State qr = cell(k);
        if (order >= 2) {
          const auto sl = limited_slope<Model::m>(cell(k - 2), cell(k - 1), cell(k), lim);
          const auto sr = limited_slope<Model::m>(cell(k - 1), cell(k), cell(k + 1), lim);
          for (int c = 0; c < Model::m; ++c) {
            ql[c] += 0.5 * sl[c];
            qr[c] -= 0.5 * sr[c];
          }
        }
        face[k] = s_global ? rusanov_flux_speed(mdl, ql, qr, axis, *s_global)
                           : rusanov_flux(mdl, ql, qr, axis);
      }
      for (int k = 0; k < nline; ++k) {
        auto& o = (axis == 0) ? out(k, t) : out(t, k);
        for (int c = 0; c < Model::m; ++c) {
          o[c] += (face[k + 1][c] - face[k][c]) * inv_dx;
        }
      }
    }
  }
}

// Accumulates div(F_fast_j) over all axes using central interface averages.
template <class Model>
void add_fast_divergence(const Model& mdl, const Field<Model::m>& q, int j,
                         Field<Model::m>& out) {
  const Grid& g = q.g;
  using State = typename Model::State;
  for (int axis = 0; axis < Model::dim; ++axis) {
    const double inv_dx = 1.0 / g.dx[axis];
    const int nline = g.n[axis];
    const int ntrans = (Model::dim == 2) ? g.n[1 - axis] : 1;
    std::vector<State> face(nline + 1);
    for (int t = 0; t < ntrans; ++t) {
      auto cell = [&](int k) -> const State& {
        return (axis == 0) ? q(k, t) : q(t, k);
      };
      for (int k = 0; k <= nline; ++k) {
        face[k] = central_fast_flux(mdl, cell(k - 1), cell(k), j, axis);
      }
      for (int k = 0; k < nline; ++k) {
        auto& o = (axis == 0) ? out(k, t) : out(t, k);
        for (int c = 0; c < Model::m; ++c) {
          o[c] += (face[k + 1][c] - face[k][c]) * inv_dx;
        }
      }
    }
  }
}

// Weighted discrete Laplacian: out = sum_axes w[axis] * D2_axis(q), where D2
// is the undivided three-point second difference. Callers pass
// w[axis] = (a_axis / dx_axis)^2 so `out` carries the physical dimensions.
template <int M>
void weighted_laplacian(const Field<M>& q, std::array<double, 2> w, Field<M>& out) {
  const Grid& g = q.g;
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      auto& o = out(i, j);
      const auto& c = q(i, j);
      const auto& xl = q(i - 1, j);
      const auto& xr = q(i + 1, j);
      for (int k = 0; k < M; ++k) {
        o[k] = w[0] * (xr[k] - 2.0 * c[k] + xl[k]);
      }
      if (g.dim == 2) {
        const auto& yl = q(i, j - 1);
        const auto& yr = q(i, j + 1);
        for (int k = 0; k < M; ++k) {
          o[k] += w[1] * (yr[k] - 2.0 * c[k] + yl[k]);
        }
      }
    }
  }
}

// Per-axis, per-sub-flux relaxation speeds: safety * global max of the fast
// sub-flux spectral radius (sub-characteristic condition).
struct RelaxSpeeds {
  // a[j][axis]; unused slots stay 0
  std::array<std::array<double, 2>, 2> a{{{0.0, 0.0}, {0.0, 0.0}}};
};

template <class Model>
RelaxSpeeds compute_relax_speeds(const Model& mdl, const Field<Model::m>& q,
                                 double safety) {
  RelaxSpeeds rs;
  const Grid& g = q.g;
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      for (int jf = 0; jf < Model::nfast; ++jf) {
        for (int ax = 0; ax < Model::dim; ++ax) {
          rs.a[jf][ax] = std::max(rs.a[jf][ax], mdl.speed_fast(q(i, j), jf, ax));
        }
      }
    }
  }
  for (int jf = 0; jf < Model::nfast; ++jf) {
    for (int ax = 0; ax < Model::dim; ++ax) rs.a[jf][ax] *= safety;
  }
  return rs;
}

// Material CFL condition: dt = nu * min_axis dx/max|u_axis|, clamped by
// dt_max (the zero-velocity guard for initially static data).
template <class Model>
double compute_dt(const Model& mdl, const Field<Model::m>& q, double nu,
                  double dt_max) {
  const Grid& g = q.g;
  double dt = dt_max;
  for (int ax = 0; ax < Model::dim; ++ax) {
    double smax = 0.0;
    for (int j = 0; j < g.n[1]; ++j) {
      for (int i = 0; i < g.n[0]; ++i) {
        smax = std::max(smax, mdl.speed_slow(q(i, j), ax));
      }
    }
    if (smax > 0.0) dt = std::min(dt, nu * g.dx[ax] / smax);
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw NumericsError("compute_dt produced a non-positive time step");
  }
  return dt;
}

// Largest Euclidean material speed over the interior; the global Rusanov
// diffusion coefficient (one scalar for all axes).
template <class Model>
double global_material_speed(const Model& mdl, const Field<Model::m>& q) {
  double s = 0.0;
  const Grid& g = q.g;
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      s = std::max(s, mdl.material_speed(q(i, j)));
    }
  }
  return s;
}

}  // namespace relaxfv
