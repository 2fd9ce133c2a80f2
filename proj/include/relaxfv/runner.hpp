// SPDX-License-Identifier: MIT
//
// Case driver: builds the grid and model for a catalog entry, runs the time
// loop with the dt controller, and collects errors and diagnostics.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relaxfv/cases.hpp"
#include "relaxfv/integrators.hpp"
#include "relaxfv/norms.hpp"

namespace relaxfv {

struct OutputOptions {
  std::string out_dir;         // empty disables file output
  std::string format = "csv";  // csv | vtk (vtk is 2D only)
  int snapshots = 0;           // intermediate writes in addition to the final one
};

// CLI/JSON overrides; unset fields keep the catalog defaults.
struct RunOverrides {
  std::optional<std::array<int, 2>> n;
  std::optional<int> order;
  std::optional<double> nu;
  std::optional<double> t_end;
  std::optional<double> mach;
  std::optional<double> a0;
  std::optional<double> rho0;
  std::optional<std::uint64_t> seed;
  std::optional<Limiter> limiter;
  std::optional<Diffusion> diffusion;
  std::optional<int> min_steps;
};

// Applies overrides; n_out receives the effective resolution. Changing the
// Mach number of a case with tie_to_mach retunes t_end and nu unless those
// are overridden too.
CaseSpec resolve_case(const CaseSpec& base, const RunOverrides& ov,
                      std::array<int, 2>& n_out);

struct SnapshotInfo {
  int step = 0;
  double t = 0.0;
  std::string path;  // empty when file output is disabled
  std::optional<DivbReport> divb;
};

struct RunResult {
  std::string case_name;
  std::array<int, 2> n{0, 1};
  int steps = 0;
  double t_final = 0.0;
  int max_cg_iters = 0;
  std::vector<double> dt_history;
  std::optional<ErrorReport> errors;           // set when the case has a reference
  std::optional<ErrorReport> relative_errors;  // additionally set for AP-style cases
  std::vector<SnapshotInfo> snapshots;
};

inline StepOptions step_options(const CaseSpec& cs) {
  StepOptions o;
  o.order = cs.order;
  o.limiter = cs.limiter;
  o.diffusion = cs.diffusion;
  return o;
}

// Ramp factor for the startup phase of the time loop: after the first step
// dt may grow by at most this factor per step until the material CFL or the
// min_steps clamp takes over. Shrinking is never limited.
inline constexpr double kDtGrowth = 1.5;

// Time loop shared by the CLI driver and the test harnesses. The state q must
// hold the initial condition; obs(step, t, dt, q, info) runs after every
// accepted step. dt follows the material CFL condition, is clamped so at
// least min_steps steps resolve [0, t_end], and the last step lands exactly
// on t_end. t_end == 0 runs zero steps.
//
// The first step is additionally held under the fast-wave CFL of the initial
// data. The material CFL says nothing at t=0 when the flow starts at rest,
// and taking the full min_steps clamp there lets the second-order stepper
// push strong initial jumps out of the positive cone before any flow
// develops to limit dt. One fast-limited step plus the kDtGrowth ramp gets
// through that window; developed flow is then material-limited as before.
template <class Model, class Obs>
RunResult evolve(Model mdl, const CaseSpec& cs, Field<Model::m>& q, Obs&& obs) {
  RunResult rr;
  rr.case_name = cs.name;
  rr.n = q.g.n;
  if (cs.t_end < 0.0) throw ConfigError("t_end must be non-negative");
  if (cs.t_end == 0.0) return rr;
  if (cs.min_steps < 1) throw ConfigError("min_steps must be positive");

  Stepper<Model> stepper(mdl, q.g, cs.bc, step_options(cs));
  const double dt_max = cs.t_end / cs.min_steps;
  double t = 0.0;
  double dt_prev = 0.0;
  while (t < cs.t_end) {
    double dt = compute_dt(mdl, q, cs.nu, dt_max);
    if (rr.steps == 0) {
      const RelaxSpeeds rs = compute_relax_speeds(mdl, q, 1.0);
      for (int ax = 0; ax < Model::dim; ++ax) {
        double amax = 0.0;
        for (int jf = 0; jf < Model::nfast; ++jf) amax = std::max(amax, rs.a[jf][ax]);
        if (amax > 0.0) dt = std::min(dt, cs.nu * q.g.dx[ax] / amax);
      }
    } else {
      dt = std::min(dt, kDtGrowth * dt_prev);
    }
    const double remaining = cs.t_end - t;
    bool last = false;
    if (dt >= remaining || remaining - dt < 1e-12 * cs.t_end) {
      dt = remaining;
      last = true;
    }
    const StepInfo info = stepper.step(q, dt);
    ++rr.steps;
    rr.dt_history.push_back(dt);
    rr.max_cg_iters = std::max(rr.max_cg_iters, info.cg_iters);
    dt_prev = dt;
    t = last ? cs.t_end : t + dt;
    obs(rr.steps, t, dt, q, info);
  }
  rr.t_final = t;
  return rr;
}

template <class Model>
RunResult evolve(Model mdl, const CaseSpec& cs, Field<Model::m>& q) {
  return evolve(mdl, cs, q, [](int, double, double, const Field<Model::m>&, const StepInfo&) {});
}

// Full pipeline for one catalog case at resolution n.
RunResult run_case(const CaseSpec& cs, std::array<int, 2> n, const OutputOptions& out);

// Convergence study: runs the case at each resolution and tabulates observed
// orders. The case must provide an exact reference.
std::map<std::string, std::vector<EocRow>> run_eoc(const CaseSpec& cs,
                                                   const std::vector<std::array<int, 2>>& ns,
                                                   std::vector<RunResult>* runs = nullptr);

}  // namespace relaxfv
