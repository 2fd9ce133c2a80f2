// SPDX-License-Identifier: MIT
//
// Reference first-order steppers that keep the relaxation variables v_j as
// explicit face unknowns and solve the coupled (q, v) system with a dense LU
// per sub-stage. These exist to pin down the eliminated Helmholtz form: both
// paths must produce the same update to rounding. One-dimensional only.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "relaxfv/grid.hpp"
#include "relaxfv/integrators.hpp"
#include "relaxfv/models.hpp"
#include "relaxfv/spatial.hpp"

namespace relaxfv {

// Face-centered relaxation variables of one sub-flux, nf = n (periodic,
// face k sits at x_{k+1/2}) or n + 1 (outflow, face k sits at x_{k-1/2}).
template <int M>
using FaceVars = std::vector<std::array<double, M>>;

// One forward step of the first-order scheme in coupled form. Mutates q and,
// when v_out is given, stores the solved relaxation variables of each
// sub-flux after its sub-stage.
template <class Model>
StepInfo coupled_step_o1(Model model, std::array<Bc, 2> bc, const StepOptions& opt,
                         Field<Model::m>& q, double dt,
                         std::array<FaceVars<Model::m>, 2>* v_out = nullptr) {
  constexpr int m = Model::m;
  const Grid& g = q.g;
  if (g.dim != 1) throw ConfigError("coupled reference steppers are one-dimensional");
  const int n = g.n[0];
  const double r = dt / g.dx[0];

  fill_ghosts(q, bc);
  validate_field(model, q, "step start");

  StepInfo info;
  if constexpr (requires(Model& mm) { mm.ch; }) {
    model.ch = opt.ch_override ? *opt.ch_override : mhd_cleaning_speed(model, q);
    info.ch = model.ch;
  }
  info.speeds = opt.relax_override ? *opt.relax_override
                                   : compute_relax_speeds(model, q, opt.relax_safety);
  std::optional<double> sg;
  if (opt.diffusion == Diffusion::global) {
    info.s_global = global_material_speed(model, q);
    sg = info.s_global;
  }

  std::array<int, 2> slots{0, 0};
  if (opt.slot_order)
    slots = *opt.slot_order;
  else if constexpr (Model::nfast == 2)
    slots = {Model::jm, Model::jp};

  Field<m> e(g);
  e.set_zero();
  add_slow_divergence(model, q, 1, opt.limiter, sg, e);

  const bool per = (bc[0] == Bc::periodic);
  const int nf = per ? n : n + 1;
  // faces bounding cell i
  auto rface = [&](int i) { return per ? i : i + 1; };
  auto lface = [&](int i) { return per ? (i - 1 + n) % n : i; };
  // cells adjacent to face k, clamped to the ghost mirror at outflow walls
  auto lcell = [&](int k) { return per ? k : std::max(k - 1, 0); };
  auto rcell = [&](int k) { return per ? (k + 1) % n : std::min(k, n - 1); };

  Field<m> cur = q;
  Field<m> next(g);
  for (int k = 0; k < Model::nfast; ++k) {
    const int j = slots[k];
    const double a = info.speeds.a[j][0];

    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(n + nf, n + nf);
    for (int i = 0; i < n; ++i) {
      A(i, n + rface(i)) += r;
      A(i, n + lface(i)) -= r;
    }
    for (int kf = 0; kf < nf; ++kf) {
      // at the outflow walls the mirrored ghost cancels the jump, so the
      // face equation degenerates to v' = v^0
      if (!per && (kf == 0 || kf == n)) continue;
      A(n + kf, rcell(kf)) += r * a * a;
      A(n + kf, lcell(kf)) -= r * a * a;
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);

    Eigen::VectorXd rhs(n + nf);
    FaceVars<m> vsol(nf);
    for (int c = 0; c < m; ++c) {
      // the fast divergence enters through the face unknowns, so only the
      // slow flux appears explicitly and only in the leading sub-stage
      for (int i = 0; i < n; ++i)
        rhs(i) = (k == 0) ? q(i)[c] - dt * e(i)[c] : cur(i)[c];
      for (int kf = 0; kf < nf; ++kf) {
        const auto fl = model.flux_fast(cur(lcell(kf)), j, 0);
        const auto fr = model.flux_fast(cur(rcell(kf)), j, 0);
        rhs(n + kf) = 0.5 * (fl[c] + fr[c]);
      }
      const Eigen::VectorXd sol = lu.solve(rhs);
      for (int i = 0; i < n; ++i) next(i)[c] = sol(i);
      for (int kf = 0; kf < nf; ++kf) vsol[kf][c] = sol(n + kf);
    }
    cur = next;
    fill_ghosts(cur, bc);
    validate_field(model, cur, "prediction");
    if (v_out) (*v_out)[j] = std::move(vsol);
  }

  Field<m> acc = e;
  Field<m> gdiv(g);
  for (int j = 0; j < Model::nfast; ++j) {
    gdiv.set_zero();
    add_fast_divergence(model, cur, j, gdiv);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < m; ++c) acc(i)[c] += gdiv(i)[c];
  }
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < m; ++c) q(i)[c] -= dt * acc(i)[c];
  validate_field(model, q, "correction");
  return info;
}

}  // namespace relaxfv
