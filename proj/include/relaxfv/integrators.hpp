// SPDX-License-Identifier: MIT
//
// Semi-implicit time steppers for the relaxed flux-split schemes. The fast
// sub-fluxes are advanced through the eliminated Helmholtz form of the
// relaxation system: each implicit sub-stage solves (I - mu L) q = rhs with
// mu_l = (factor * a_l * dt / dx_l)^2, then the relaxation variable is
// re-projected onto the local equilibrium f_j(q). The slow flux stays fully
// explicit (Rusanov upwinding).
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "relaxfv/butcher.hpp"
#include "relaxfv/errors.hpp"
#include "relaxfv/grid.hpp"
#include "relaxfv/linsolve.hpp"
#include "relaxfv/models.hpp"
#include "relaxfv/spatial.hpp"

namespace relaxfv {

struct StepOptions {
  int order = 1;
  Limiter limiter = Limiter::minmod;
  Diffusion diffusion = Diffusion::local;
  double relax_safety = 1.0;
  // Evaluation order of the fast sub-fluxes in the sub-stage sweep. If unset,
  // the model default applies (magnetic before pressure for MHD).
  std::optional<std::array<int, 2>> slot_order;
  // Testing hooks: pin the relaxation speeds or the cleaning speed instead of
  // re-estimating them from the current state.
  std::optional<RelaxSpeeds> relax_override;
  std::optional<double> ch_override;
  // Diagnostic path: restrict the magnetic Helmholtz solve to the B and phi
  // components, passing the hydrodynamic rows through unchanged.
  bool reduced_magnetic = false;
};

struct StepInfo {
  RelaxSpeeds speeds;
  double ch = 0.0;
  double s_global = 0.0;
  int cg_iters = 0;
};

template <class Model>
class Stepper {
 public:
  static constexpr int m = Model::m;
  static constexpr int nfast = Model::nfast;

  Stepper(Model model, const Grid& grid, std::array<Bc, 2> bc, StepOptions opt)
      : model_(model),
        grid_(grid),
        bc_(bc),
        opt_(opt),
        e1_(grid),
        e2_(grid),
        gmid_(grid),
        gn0_(grid),
        cur_(grid),
        suba1_(grid),
        x2_(grid),
        lap_(grid),
        acc_(grid),
        g1_{Field<m>(grid), Field<m>(grid)} {
    if (opt_.order != 1 && opt_.order != 2)
      throw ConfigError("time order must be 1 or 2");
    if (opt_.slot_order) {
      slots_ = *opt_.slot_order;
      std::array<bool, 2> seen{false, false};
      for (int k = 0; k < nfast; ++k) {
        const int j = slots_[k];
        if (j < 0 || j >= nfast || seen[j])
          throw ConfigError("slot order must be a permutation of the fast sub-fluxes");
        seen[j] = true;
      }
    } else if constexpr (nfast == 2) {
      slots_ = {Model::jm, Model::jp};
    } else {
      slots_ = {0, 0};
    }
    butcher_ = (opt_.order == 2) ? lsdirk2_pair() : imex_euler_pair();
  }

  const StepOptions& options() const { return opt_; }
  const ButcherPair& butcher() const { return butcher_; }

  // Advances q by one full step of size dt. Ghost cells of q are refreshed
  // internally; on return q holds the interior update with stale ghosts.
  StepInfo step(Field<m>& q, double dt) {
    fill_ghosts(q, bc_);
    validate_field(model_, q, "step start");
    prepare(q);
    if (opt_.order == 1)
      step_o1(q, dt);
    else
      step_o2(q, dt);
    validate_field(model_, q, "correction");
    return info_;
  }

 private:
  void prepare(const Field<m>& q) {
    info_ = StepInfo{};
    if constexpr (requires(Model& mm) { mm.ch; }) {
      model_.ch = opt_.ch_override ? *opt_.ch_override : mhd_cleaning_speed(model_, q);
      info_.ch = model_.ch;
    }
    info_.speeds = opt_.relax_override
                       ? *opt_.relax_override
                       : compute_relax_speeds(model_, q, opt_.relax_safety);
    if (opt_.diffusion == Diffusion::global)
      info_.s_global = global_material_speed(model_, q);
  }

  void slow_div(const Field<m>& q, Field<m>& out) {
    out.set_zero();
    std::optional<double> sg;
    if (opt_.diffusion == Diffusion::global) sg = info_.s_global;
    add_slow_divergence(model_, q, opt_.order, opt_.limiter, sg, out);
  }

  void fast_div(const Field<m>& q, int j, Field<m>& out) {
    out.set_zero();
    add_fast_divergence(model_, q, j, out);
  }

  std::array<double, 2> mu_for(int j, double dt, double factor) const {
    std::array<double, 2> mu{0.0, 0.0};
    for (int ax = 0; ax < grid_.dim; ++ax) {
      const double s = factor * info_.speeds.a[j][ax] * dt / grid_.dx[ax];
      mu[ax] = s * s;
    }
    return mu;
  }

  void helmholtz(Field<m>& f, int j, double dt, double factor) {
    const std::array<bool, m>* skip = nullptr;
    std::array<bool, m> mask{};
    if constexpr (nfast == 2) {
      if (opt_.reduced_magnetic && j == Model::jm) {
        for (int c = 0; c < 5; ++c) mask[c] = true;
        skip = &mask;
      }
    }
    const int it = solve_block<m>(mu_for(j, dt, factor), bc_, f, skip);
    info_.cg_iters = std::max(info_.cg_iters, it);
  }

  template <class Fn>
  void for_interior(Fn&& fn) const {
    const int n1 = (grid_.dim == 2) ? grid_.n[1] : 1;
    for (int jy = 0; jy < n1; ++jy)
      for (int ix = 0; ix < grid_.n[0]; ++ix) fn(ix, jy);
  }

  // First order: backward-Euler sub-stages swept over the fast sub-fluxes,
  // then one explicit correction with all fluxes re-projected at the final
  // prediction state.
  void step_o1(Field<m>& q, double dt) {
    slow_div(q, e1_);
    cur_ = q;
    for (int k = 0; k < nfast; ++k) {
      const int j = slots_[k];
      fast_div(cur_, j, gmid_);
      if (k == 0) {
        for_interior([&](int ix, int jy) {
          auto& c = cur_(ix, jy);
          const auto& q0 = q(ix, jy);
          const auto& ee = e1_(ix, jy);
          const auto& gg = gmid_(ix, jy);
          for (int v = 0; v < m; ++v) c[v] = q0[v] - dt * (ee[v] + gg[v]);
        });
      } else {
        for_interior([&](int ix, int jy) {
          auto& c = cur_(ix, jy);
          const auto& gg = gmid_(ix, jy);
          for (int v = 0; v < m; ++v) c[v] -= dt * gg[v];
        });
      }
      helmholtz(cur_, j, dt, 1.0);
      fill_ghosts(cur_, bc_);
      validate_field(model_, cur_, "prediction");
    }
    acc_ = e1_;
    for (int j = 0; j < nfast; ++j) {
      fast_div(cur_, j, gmid_);
      for_interior([&](int ix, int jy) {
        auto& a = acc_(ix, jy);
        const auto& gg = gmid_(ix, jy);
        for (int v = 0; v < m; ++v) a[v] += gg[v];
      });
    }
    for_interior([&](int ix, int jy) {
      auto& q0 = q(ix, jy);
      const auto& a = acc_(ix, jy);
      for (int v = 0; v < m; ++v) q0[v] -= dt * a[v];
    });
  }

  // Runs the implicit sub-stage sweep for slots k >= 1 starting from cur_.
  void sweep_tail(double dt, double eta, const char* stage) {
    for (int k = 1; k < nfast; ++k) {
      const int j = slots_[k];
      fast_div(cur_, j, gmid_);
      for_interior([&](int ix, int jy) {
        auto& c = cur_(ix, jy);
        const auto& gg = gmid_(ix, jy);
        for (int v = 0; v < m; ++v) c[v] -= eta * dt * gg[v];
      });
      helmholtz(cur_, j, dt, eta);
      fill_ghosts(cur_, bc_);
      validate_field(model_, cur_, stage);
    }
  }

  // Second order (LSDIRK2). Stage r sees the slow flux explicitly at the
  // tableau state and the fast fluxes semi-implicitly; the stage-two rhs for
  // the leading slot carries the discrete Laplacian of the stage-one solution
  // so the eliminated relaxation variable keeps its history.
  void step_o2(Field<m>& q, double dt) {
    const double eta = butcher_.alpha_im[0][0];
    const double ctil = butcher_.c_ex[1];
    const int j0 = slots_[0];

    slow_div(q, e1_);
    fast_div(q, j0, gn0_);
    for_interior([&](int ix, int jy) {
      auto& c = cur_(ix, jy);
      const auto& q0 = q(ix, jy);
      const auto& gg = gn0_(ix, jy);
      for (int v = 0; v < m; ++v) c[v] = q0[v] - eta * dt * gg[v];
    });
    helmholtz(cur_, j0, dt, eta);
    fill_ghosts(cur_, bc_);
    validate_field(model_, cur_, "stage 1");
    suba1_ = cur_;
    sweep_tail(dt, eta, "stage 1");

    for (int j = 0; j < nfast; ++j) fast_div(cur_, j, g1_[j]);

    // Explicit stage-two state for the slow flux: X = q - ctil dt h1 with
    // h1 the full stage-one divergence. Only positivity of the density is
    // needed here, the slow flux never divides by the pressure.
    for_interior([&](int ix, int jy) {
      auto& x = x2_(ix, jy);
      const auto& q0 = q(ix, jy);
      const auto& ee = e1_(ix, jy);
      double h;
      for (int v = 0; v < m; ++v) {
        h = ee[v];
        for (int j = 0; j < nfast; ++j) h += g1_[j](ix, jy)[v];
        x[v] = q0[v] - ctil * dt * h;
      }
    });
    fill_ghosts(x2_, bc_);
    validate_field(model_, x2_, "stage 2 state", false);
    slow_div(x2_, e2_);

    std::array<double, 2> w{0.0, 0.0};
    for (int ax = 0; ax < grid_.dim; ++ax) {
      const double r = info_.speeds.a[j0][ax] / grid_.dx[ax];
      w[ax] = r * r;
    }
    weighted_laplacian(suba1_, w, lap_);

    for_interior([&](int ix, int jy) {
      auto& c = cur_(ix, jy);
      const auto& q0 = q(ix, jy);
      const auto& ee = e1_(ix, jy);
      const auto& g0 = gn0_(ix, jy);
      const auto& lp = lap_(ix, jy);
      double gsum;
      for (int v = 0; v < m; ++v) {
        gsum = 0.0;
        for (int j = 0; j < nfast; ++j) gsum += g1_[j](ix, jy)[v];
        c[v] = q0[v] - dt * (ctil * ee[v] + (1.0 - eta) * gsum + eta * g0[v]) +
               eta * (1.0 - eta) * dt * dt * lp[v];
      }
    });
    helmholtz(cur_, j0, dt, eta);
    fill_ghosts(cur_, bc_);
    validate_field(model_, cur_, "stage 2");
    sweep_tail(dt, eta, "stage 2");

    for_interior([&](int ix, int jy) {
      auto& a = acc_(ix, jy);
      const auto& ee1 = e1_(ix, jy);
      const auto& ee2 = e2_(ix, jy);
      double gsum;
      for (int v = 0; v < m; ++v) {
        gsum = 0.0;
        for (int j = 0; j < nfast; ++j) gsum += g1_[j](ix, jy)[v];
        a[v] = (1.0 - eta) * (ee1[v] + gsum) + eta * ee2[v];
      }
    });
    for (int j = 0; j < nfast; ++j) {
      fast_div(cur_, j, gmid_);
      for_interior([&](int ix, int jy) {
        auto& a = acc_(ix, jy);
        const auto& gg = gmid_(ix, jy);
        for (int v = 0; v < m; ++v) a[v] += eta * gg[v];
      });
    }
    for_interior([&](int ix, int jy) {
      auto& q0 = q(ix, jy);
      const auto& a = acc_(ix, jy);
      for (int v = 0; v < m; ++v) q0[v] -= dt * a[v];
    });
  }

  Model model_;
  Grid grid_;
  std::array<Bc, 2> bc_;
  StepOptions opt_;
  std::array<int, 2> slots_{0, 0};
  ButcherPair butcher_;
  StepInfo info_;

  Field<m> e1_, e2_, gmid_, gn0_, cur_, suba1_, x2_, lap_, acc_;
  std::array<Field<m>, 2> g1_;
};

}  // namespace relaxfv
