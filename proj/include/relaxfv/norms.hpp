// SPDX-License-Identifier: MIT
//
// Discrete error norms, convergence tables, and the divergence diagnostic.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "relaxfv/errors.hpp"
#include "relaxfv/grid.hpp"
#include "relaxfv/models.hpp"

namespace relaxfv {

struct ErrorReport {
  std::array<int, 2> n{0, 1};
  // cell volume weighted L1 distances per primitive variable, plus the
  // derived magnitudes umag (and Bmag for MHD)
  std::map<std::string, double> l1;
};

// L1 errors between two fields on the same grid: sum over interior cells of
// |w - w_ref| times the cell volume, per primitive variable.
template <class Model>
ErrorReport l1_error(const Model& mdl, const Field<Model::m>& q,
                     const Field<Model::m>& ref) {
  const Grid& g = q.g;
  if (ref.g.n != g.n || ref.g.dim != g.dim)
    throw ConfigError("error norm needs matching grids");
  ErrorReport rep;
  rep.n = g.n;
  const double vol = g.cell_volume();
  const auto names = Model::var_names();
  std::vector<double> acc(names.size(), 0.0);
  double acc_u = 0.0, acc_b = 0.0;
  constexpr bool has_b = (Model::nfast == 2);

  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      const auto wa = mdl.prim_values(q(i, j));
      const auto wb = mdl.prim_values(ref(i, j));
      for (std::size_t c = 0; c < names.size(); ++c)
        acc[c] += std::abs(wa[c] - wb[c]);
      auto mag = [](const std::vector<double>& w, int first, int cnt) {
        double s = 0.0;
        for (int d = 0; d < cnt; ++d) s += w[first + d] * w[first + d];
        return std::sqrt(s);
      };
      if constexpr (has_b) {
        acc_u += std::abs(mag(wa, 1, 3) - mag(wb, 1, 3));
        acc_b += std::abs(mag(wa, 5, 3) - mag(wb, 5, 3));
      } else {
        acc_u += std::abs(mag(wa, 1, Model::dim) - mag(wb, 1, Model::dim));
      }
    }
  }
  for (std::size_t c = 0; c < names.size(); ++c) rep.l1[names[c]] = vol * acc[c];
  rep.l1["umag"] = vol * acc_u;
  if constexpr (has_b) rep.l1["Bmag"] = vol * acc_b;
  return rep;
}

// Same distances divided by the L1 norm of the reference variable, i.e.
// relative L1 errors. Variables whose reference vanishes keep the absolute
// value.
template <class Model>
ErrorReport l1_relative(const Model& mdl, const Field<Model::m>& q,
                        const Field<Model::m>& ref) {
  ErrorReport rep = l1_error(mdl, q, ref);
  const Grid& g = ref.g;
  const auto names = Model::var_names();
  std::map<std::string, double> den;
  for (const auto& n : names) den[n] = 0.0;
  den["umag"] = 0.0;
  if constexpr (Model::nfast == 2) den["Bmag"] = 0.0;
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      const auto w = mdl.prim_values(ref(i, j));
      for (std::size_t c = 0; c < names.size(); ++c) den[names[c]] += std::abs(w[c]);
      const int nu_comp = (Model::nfast == 2) ? 3 : Model::dim;
      double u2 = 0.0;
      for (int d = 0; d < nu_comp; ++d) u2 += w[1 + d] * w[1 + d];
      den["umag"] += std::sqrt(u2);
      if constexpr (Model::nfast == 2) {
        double b2 = 0.0;
        for (int d = 0; d < 3; ++d) b2 += w[5 + d] * w[5 + d];
        den["Bmag"] += std::sqrt(b2);
      }
    }
  }
  const double vol = g.cell_volume();
  for (auto& [name, err] : rep.l1) {
    const double scale = vol * den.at(name);
    if (scale > 0.0) err /= scale;
  }
  return rep;
}

struct EocRow {
  int n = 0;
  double error = 0.0;
  double rate = 0.0;  // NaN on the coarsest level
};

// Observed orders from a doubling sequence of reports. Refinement must
// double n in every active direction.
inline std::map<std::string, std::vector<EocRow>> eoc_table(
    const std::vector<ErrorReport>& reports) {
  if (reports.size() < 2) throw ConfigError("convergence table needs at least two levels");
  for (std::size_t k = 1; k < reports.size(); ++k) {
    for (int ax = 0; ax < 2; ++ax) {
      const int prev = reports[k - 1].n[ax];
      const int cur = reports[k].n[ax];
      if (prev == 1 && cur == 1) continue;
      if (cur != 2 * prev)
        throw ConfigError("convergence rates need resolution doubling, got " +
                          std::to_string(prev) + " -> " + std::to_string(cur));
    }
  }
  std::map<std::string, std::vector<EocRow>> table;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    for (const auto& [name, err] : reports[k].l1) {
      EocRow row;
      row.n = reports[k].n[0];
      row.error = err;
      row.rate = (k == 0) ? std::nan("")
                          : std::log2(reports[k - 1].l1.at(name) / err);
      table[name].push_back(row);
    }
  }
  return table;
}

struct DivbReport {
  double mean = 0.0;
  double max = 0.0;
};

// Central-difference divergence of B over the interior of a 2D MHD field.
// Ghost cells are refreshed here so the stencil can reach across the
// boundary.
inline DivbReport divergence_diagnostic(Field<9>& f, std::array<Bc, 2> bc) {
  const Grid& g = f.g;
  if (g.dim != 2) throw ConfigError("divergence diagnostic needs a 2D field");
  fill_ghosts(f, bc);
  DivbReport rep;
  double sum = 0.0;
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      const double db = (f(i + 1, j)[5] - f(i - 1, j)[5]) / (2.0 * g.dx[0]) +
                        (f(i, j + 1)[6] - f(i, j - 1)[6]) / (2.0 * g.dx[1]);
      sum += std::abs(db);
      rep.max = std::max(rep.max, std::abs(db));
    }
  }
  rep.mean = sum / (g.n[0] * g.n[1]);
  return rep;
}

}  // namespace relaxfv
