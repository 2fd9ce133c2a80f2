// SPDX-License-Identifier: MIT
//
// relaxfv command line driver.
//   run        advance one catalog case and report errors/diagnostics
//   eoc        convergence study over a doubling resolution sequence
//   list-cases print the case catalog
// Options may come from a JSON config file (keys mirror the long option
// names); explicit command line flags win over config values.

#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "relaxfv/errors.hpp"
#include "relaxfv/io.hpp"
#include "relaxfv/runner.hpp"

namespace {

using nlohmann::json;
using namespace relaxfv;

struct CliOpts {
  std::string case_name;
  std::optional<std::string> n;
  std::optional<int> order;
  std::optional<double> cfl, tend, mach, a0, rho0;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> limiter, diffusion;
  std::optional<int> min_steps;
  std::string out;
  std::string format = "csv";
  int snapshots = 0;
  std::string resolutions = "32,64,128";
};

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> vals;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(tok, &pos);
      if (pos != tok.size() || v <= 0) throw std::invalid_argument(tok);
      vals.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError(std::string(what) + ": cannot parse '" + tok + "'");
    }
  }
  if (vals.empty()) throw ConfigError(std::string(what) + ": empty list");
  return vals;
}

std::array<int, 2> parse_resolution(const std::string& s, int dim) {
  const auto vals = parse_int_list(s, "--n");
  if (vals.size() == 1) return {vals[0], dim == 2 ? vals[0] : 1};
  if (vals.size() == 2) return {vals[0], vals[1]};
  throw ConfigError("--n takes N or NX,NY");
}

Limiter parse_limiter(const std::string& s) {
  if (s == "minmod") return Limiter::minmod;
  if (s == "none") return Limiter::none;
  throw ConfigError("unknown limiter '" + s + "', expected minmod or none");
}

Diffusion parse_diffusion(const std::string& s) {
  if (s == "local") return Diffusion::local;
  if (s == "global") return Diffusion::global;
  throw ConfigError("unknown diffusion '" + s + "', expected local or global");
}

void load_config(const std::string& path, CliOpts& o) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config " + path);
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config " + path + ": expected a JSON object");
  for (const auto& [key, val] : j.items()) {
    try {
      if (key == "case")
        o.case_name = val.get<std::string>();
      else if (key == "n")
        o.n = val.is_string() ? val.get<std::string>() : std::to_string(val.get<int>());
      else if (key == "order")
        o.order = val.get<int>();
      else if (key == "cfl")
        o.cfl = val.get<double>();
      else if (key == "tend")
        o.tend = val.get<double>();
      else if (key == "mach")
        o.mach = val.get<double>();
      else if (key == "a0")
        o.a0 = val.get<double>();
      else if (key == "rho0")
        o.rho0 = val.get<double>();
      else if (key == "seed")
        o.seed = val.get<std::uint64_t>();
      else if (key == "limiter")
        o.limiter = val.get<std::string>();
      else if (key == "diffusion")
        o.diffusion = val.get<std::string>();
      else if (key == "min-steps")
        o.min_steps = val.get<int>();
      else if (key == "out")
        o.out = val.get<std::string>();
      else if (key == "format")
        o.format = val.get<std::string>();
      else if (key == "snapshots")
        o.snapshots = val.get<int>();
      else if (key == "resolutions")
        o.resolutions = val.is_string() ? val.get<std::string>() : val.dump();
      else
        throw ConfigError("config " + path + ": unknown key '" + key + "'");
    } catch (const json::exception& e) {
      throw ConfigError("config " + path + ", key '" + key + "': " + e.what());
    }
  }
}

RunOverrides to_overrides(const CliOpts& o, const CaseSpec& base) {
  RunOverrides ov;
  if (o.n) ov.n = parse_resolution(*o.n, base.dim);
  ov.order = o.order;
  ov.nu = o.cfl;
  ov.t_end = o.tend;
  ov.mach = o.mach;
  ov.a0 = o.a0;
  ov.rho0 = o.rho0;
  ov.seed = o.seed;
  if (o.limiter) ov.limiter = parse_limiter(*o.limiter);
  if (o.diffusion) ov.diffusion = parse_diffusion(*o.diffusion);
  ov.min_steps = o.min_steps;
  return ov;
}

void add_common_options(CLI::App* cmd, CliOpts& o, std::string& config_path) {
  cmd->add_option("--config", config_path, "JSON config file, keys mirror the long options");
  cmd->add_option("--case", o.case_name, "catalog case name");
  cmd->add_option("--n", o.n, "resolution N or NX,NY");
  cmd->add_option("--order", o.order, "time/space order (1 or 2)");
  cmd->add_option("--cfl", o.cfl, "material CFL number");
  cmd->add_option("--tend", o.tend, "final time");
  cmd->add_option("--mach", o.mach, "vortex Mach number");
  cmd->add_option("--a0", o.a0, "field loop amplitude");
  cmd->add_option("--rho0", o.rho0, "background density");
  cmd->add_option("--seed", o.seed, "interface noise seed");
  cmd->add_option("--limiter", o.limiter, "slope limiter: minmod|none");
  cmd->add_option("--diffusion", o.diffusion, "Rusanov speed: local|global");
  cmd->add_option("--min-steps", o.min_steps, "lower bound on the number of time steps");
}

void print_errors(const char* label, const ErrorReport& rep) {
  std::printf("%s:", label);
  for (const auto& [name, err] : rep.l1) std::printf(" %s=%.6e", name.c_str(), err);
  std::printf("\n");
}

int cmd_run(const CliOpts& o) {
  if (o.case_name.empty()) throw ConfigError("run needs --case (or \"case\" in the config)");
  const CaseSpec& base = find_case(o.case_name);
  std::array<int, 2> n{};
  const CaseSpec cs = resolve_case(base, to_overrides(o, base), n);

  OutputOptions out;
  out.out_dir = o.out;
  out.format = o.format;
  out.snapshots = o.snapshots;

  const RunResult rr = run_case(cs, n, out);
  if (cs.dim == 1)
    std::printf("case %s: n=%d, %d steps to t=%.17g\n", cs.name.c_str(), rr.n[0], rr.steps,
                rr.t_final);
  else
    std::printf("case %s: n=%dx%d, %d steps to t=%.17g\n", cs.name.c_str(), rr.n[0], rr.n[1],
                rr.steps, rr.t_final);
  if (rr.max_cg_iters > 0) std::printf("max linear solver iterations: %d\n", rr.max_cg_iters);
  if (rr.errors) print_errors("L1 errors", *rr.errors);
  if (rr.relative_errors) print_errors("relative L1 errors", *rr.relative_errors);
  for (const auto& s : rr.snapshots) {
    if (s.divb)
      std::printf("t=%.6g: mean|div B|=%.6e max|div B|=%.6e\n", s.t, s.divb->mean,
                  s.divb->max);
    if (!s.path.empty()) std::printf("wrote %s\n", s.path.c_str());
  }
  return 0;
}

int cmd_eoc(const CliOpts& o) {
  if (o.case_name.empty()) throw ConfigError("eoc needs --case (or \"case\" in the config)");
  const CaseSpec& base = find_case(o.case_name);
  std::array<int, 2> n{};
  CliOpts on = o;
  on.n.reset();  // per-level grid sizes come from --resolutions
  const CaseSpec cs = resolve_case(base, to_overrides(on, base), n);

  std::vector<std::array<int, 2>> ns;
  for (int lv : parse_int_list(o.resolutions, "--resolutions"))
    ns.push_back({lv, cs.dim == 2 ? lv : 1});

  const auto table = run_eoc(cs, ns);
  std::printf("%-8s %-8s %-14s %s\n", "var", "N", "error", "rate");
  for (const auto& [var, rows] : table) {
    for (const auto& r : rows) {
      if (std::isnan(r.rate))
        std::printf("%-8s %-8d %-14.6e %s\n", var.c_str(), r.n, r.error, "-");
      else
        std::printf("%-8s %-8d %-14.6e %.3f\n", var.c_str(), r.n, r.error, r.rate);
    }
  }
  if (!o.out.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(o.out, ec);
    if (ec) throw IoError("cannot create " + o.out + ": " + ec.message());
    const std::string path = o.out + "/" + cs.name + "_eoc.csv";
    write_eoc_csv(path, table);
    std::printf("wrote %s\n", path.c_str());
  }
  return 0;
}

int cmd_list() {
  for (const auto& c : case_catalog()) {
    std::printf("%-18s %s, %dD, default n=%d", c.name.c_str(),
                c.phys == Phys::euler ? "euler" : "mhd", c.dim, c.default_n[0]);
    if (c.dim == 2) std::printf("x%d", c.default_n[1]);
    std::printf(", t_end=%g\n  %s\n", c.t_end, c.description.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-volume driver for semi-implicit flux-split relaxation schemes"};
  app.require_subcommand(1);

  CliOpts opts;
  std::string config_path;

  CLI::App* run = app.add_subcommand("run", "advance a benchmark case");
  add_common_options(run, opts, config_path);
  run->add_option("--out", opts.out, "output directory");
  run->add_option("--format", opts.format, "output format: csv|vtk");
  run->add_option("--snapshots", opts.snapshots, "intermediate snapshot count");

  CLI::App* eoc = app.add_subcommand("eoc", "convergence study");
  add_common_options(eoc, opts, config_path);
  eoc->add_option("--resolutions", opts.resolutions, "comma separated grid sizes, default 32,64,128");
  eoc->add_option("--out", opts.out, "directory for the EOC table");

  CLI::App* list = app.add_subcommand("list-cases", "print the case catalog");

  try {
    // config values act as defaults: load them first, then reparse so
    // explicit flags override
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e);
      return code == 0 ? 0 : 1;
    }
    if (!config_path.empty()) {
      CliOpts merged;
      load_config(config_path, merged);
      try {
        app.clear();
        opts = merged;
        app.parse(argc, argv);
      } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
      }
    }
    if (run->parsed()) return cmd_run(opts);
    if (eoc->parsed()) return cmd_eoc(opts);
    if (list->parsed()) return cmd_list();
    throw ConfigError("no subcommand given");
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const NumericsError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
