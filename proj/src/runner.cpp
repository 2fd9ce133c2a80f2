// SPDX-License-Identifier: MIT

#include "relaxfv/runner.hpp"

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "relaxfv/io.hpp"

namespace relaxfv {

CaseSpec resolve_case(const CaseSpec& base, const RunOverrides& ov,
                      std::array<int, 2>& n_out) {
  CaseSpec cs = base;
  if (ov.mach) {
    cs.mach = *ov.mach;
    if (cs.tie_to_mach) {
      cs.t_end = cs.mach;
      cs.nu = 2.5 * cs.mach;
    }
  }
  if (ov.order) cs.order = *ov.order;
  if (ov.nu) cs.nu = *ov.nu;
  if (ov.t_end) cs.t_end = *ov.t_end;
  if (ov.a0) cs.a0 = *ov.a0;
  if (ov.rho0) cs.rho0 = *ov.rho0;
  if (ov.seed) cs.seed = *ov.seed;
  if (ov.limiter) cs.limiter = *ov.limiter;
  if (ov.diffusion) cs.diffusion = *ov.diffusion;
  if (ov.min_steps) cs.min_steps = *ov.min_steps;

  n_out = ov.n ? *ov.n : cs.default_n;
  if (cs.dim == 1) n_out[1] = 1;
  if (n_out[0] < 1 || n_out[1] < 1) throw ConfigError("resolution must be positive");
  return cs;
}

namespace {

std::string snapshot_path(const OutputOptions& out, const CaseSpec& cs, int idx,
                          bool final, int dim) {
  const std::string ext = (out.format == "vtk" && dim == 2) ? ".vtk" : ".csv";
  const std::string tag = final ? "final" : "snap" + std::to_string(idx);
  return out.out_dir + "/" + cs.name + "_" + tag + ext;
}

template <class Model>
void write_snapshot(const Model& mdl, const Field<Model::m>& f, const CaseSpec& cs,
                    const OutputOptions& out, const std::string& path) {
  std::string text;
  if (cs.dim == 1)
    text = render_csv_1d(mdl, f);
  else if (out.format == "vtk")
    text = render_vtk_2d(mdl, f, cs.name);
  else
    text = render_csv_2d(mdl, f);
  write_text_atomic(path, text);
}

template <class Model>
RunResult drive(const CaseSpec& cs, std::array<int, 2> n, const OutputOptions& out) {
  Model mdl;
  mdl.gamma = cs.gamma;
  const Grid g = build_grid(cs.dim, n, cs.lo, cs.hi);
  Field<Model::m> q(g);
  init_case(cs, mdl, q);

  const bool files = !out.out_dir.empty();
  if (files) {
    std::error_code ec;
    std::filesystem::create_directories(out.out_dir, ec);
    if (ec) throw IoError("cannot create " + out.out_dir + ": " + ec.message());
  }
  if (out.format != "csv" && out.format != "vtk")
    throw ConfigError("unknown output format '" + out.format + "'");
  if (out.format == "vtk" && cs.dim == 1)
    throw ConfigError("vtk output needs a 2D case");

  constexpr bool kDivb = (Model::nfast == 2);
  std::vector<SnapshotInfo> snaps;
  auto record = [&](int step, double t, Field<Model::m>& f, bool final, int idx) {
    SnapshotInfo si;
    si.step = step;
    si.t = t;
    if constexpr (kDivb) {
      if (cs.dim == 2) si.divb = divergence_diagnostic(f, cs.bc);
    }
    if (files) {
      si.path = snapshot_path(out, cs, idx, final, cs.dim);
      write_snapshot(mdl, f, cs, out, si.path);
    }
    snaps.push_back(si);
  };

  // equally spaced interior snapshot times
  std::vector<double> times;
  for (int k = 1; k <= out.snapshots; ++k)
    times.push_back(cs.t_end * k / (out.snapshots + 1));
  std::size_t next = 0;

  RunResult rr = evolve(mdl, cs, q,
                        [&](int step, double t, double, Field<Model::m>& f,
                            const StepInfo&) {
                          while (next < times.size() && t >= times[next] - 1e-14 * cs.t_end) {
                            record(step, t, f, false, static_cast<int>(next) + 1);
                            ++next;
                          }
                        });
  record(rr.steps, rr.t_final, q, true, 0);
  rr.snapshots = std::move(snaps);

  if (cs.translated_reference || cs.riemann_reference) {
    Field<Model::m> ref(g);
    reference_field(cs, mdl, rr.t_final, ref);
    rr.errors = l1_error(mdl, q, ref);
  }
  if (cs.relative_errors) {
    Field<Model::m> lead(g);
    leading_order_field(cs, mdl, lead);
    rr.relative_errors = l1_relative(mdl, q, lead);
  }
  return rr;
}

}  // namespace

RunResult run_case(const CaseSpec& cs, std::array<int, 2> n, const OutputOptions& out) {
  if (cs.phys == Phys::euler) {
    if (cs.dim == 1) return drive<EulerModel<1>>(cs, n, out);
    return drive<EulerModel<2>>(cs, n, out);
  }
  if (cs.dim == 1) return drive<MhdModel<1>>(cs, n, out);
  return drive<MhdModel<2>>(cs, n, out);
}

std::map<std::string, std::vector<EocRow>> run_eoc(const CaseSpec& cs,
                                                   const std::vector<std::array<int, 2>>& ns,
                                                   std::vector<RunResult>* runs) {
  if (!(cs.translated_reference || cs.riemann_reference))
    throw ConfigError("case " + cs.name + " has no exact reference for a convergence study");
  std::vector<ErrorReport> reports;
  for (const auto& n : ns) {
    RunResult rr = run_case(cs, n, OutputOptions{});
    if (!rr.errors) throw ConfigError("case " + cs.name + " produced no error report");
    reports.push_back(*rr.errors);
    if (runs) runs->push_back(std::move(rr));
  }
  return eoc_table(reports);
}

}  // namespace relaxfv
