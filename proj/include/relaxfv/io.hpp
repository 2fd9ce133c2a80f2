// SPDX-License-Identifier: MIT
//
// Output writers and readers. Text is rendered in memory and committed with
// an atomic rename so partially written files never appear under the final
// name. All floating point values use %.17g, which round-trips doubles.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "relaxfv/errors.hpp"
#include "relaxfv/grid.hpp"
#include "relaxfv/norms.hpp"

namespace relaxfv {

void write_text_atomic(const std::string& path, const std::string& content);

std::string format_g17(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::string& path);

template <class Model>
std::string render_csv_1d(const Model& mdl, const Field<Model::m>& f) {
  const Grid& g = f.g;
  std::string s = "x";
  for (const auto& n : Model::var_names()) s += "," + n;
  s += "\n";
  for (int i = 0; i < g.n[0]; ++i) {
    s += format_g17(g.center(0, i));
    for (double v : mdl.prim_values(f(i, 0))) s += "," + format_g17(v);
    s += "\n";
  }
  return s;
}

// long form, y outer and x inner so plotting tools can reshape
template <class Model>
std::string render_csv_2d(const Model& mdl, const Field<Model::m>& f) {
  const Grid& g = f.g;
  std::string s = "x,y";
  for (const auto& n : Model::var_names()) s += "," + n;
  s += "\n";
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      s += format_g17(g.center(0, i)) + "," + format_g17(g.center(1, j));
      for (double v : mdl.prim_values(f(i, j))) s += "," + format_g17(v);
      s += "\n";
    }
  }
  return s;
}

// legacy VTK structured points; cell-center values exported as point data
template <class Model>
std::string render_vtk_2d(const Model& mdl, const Field<Model::m>& f,
                          const std::string& title) {
  const Grid& g = f.g;
  const auto names = Model::var_names();
  std::string s = "# vtk DataFile Version 3.0\n" + title + "\nASCII\n";
  s += "DATASET STRUCTURED_POINTS\n";
  s += "DIMENSIONS " + std::to_string(g.n[0]) + " " + std::to_string(g.n[1]) + " 1\n";
  s += "ORIGIN " + format_g17(g.center(0, 0)) + " " + format_g17(g.center(1, 0)) + " 0\n";
  s += "SPACING " + format_g17(g.dx[0]) + " " + format_g17(g.dx[1]) + " 1\n";
  s += "POINT_DATA " + std::to_string(static_cast<long long>(g.n[0]) * g.n[1]) + "\n";
  for (std::size_t c = 0; c < names.size(); ++c) {
    s += "SCALARS " + names[c] + " double 1\nLOOKUP_TABLE default\n";
    for (int j = 0; j < g.n[1]; ++j)
      for (int i = 0; i < g.n[0]; ++i) s += format_g17(mdl.prim_values(f(i, j))[c]) + "\n";
  }
  return s;
}

// Rebuilds grid and field from a CSV written by the renderers above.
template <class Model>
Field<Model::m> read_field_csv(const Model& mdl, const std::string& path) {
  const CsvTable t = read_csv(path);
  const auto names = Model::var_names();
  const bool two_d = t.header.size() >= 2 && t.header[1] == "y";
  const std::size_t ncoord = two_d ? 2 : 1;
  if (t.header.size() != ncoord + names.size())
    throw IoError(path + ": expected " + std::to_string(ncoord + names.size()) +
                  " columns, found " + std::to_string(t.header.size()));
  for (std::size_t c = 0; c < names.size(); ++c)
    if (t.header[ncoord + c] != names[c])
      throw IoError(path + ": column '" + t.header[ncoord + c] + "' does not match '" +
                    names[c] + "'");
  if (t.rows.empty()) throw IoError(path + ": no data rows");

  int nx = 0, ny = 1;
  if (two_d) {
    const double y0 = t.rows[0][1];
    while (nx < static_cast<int>(t.rows.size()) && t.rows[nx][1] == y0) ++nx;
    ny = static_cast<int>(t.rows.size()) / nx;
    if (static_cast<std::size_t>(nx) * ny != t.rows.size())
      throw IoError(path + ": rows do not form a rectangular grid");
  } else {
    nx = static_cast<int>(t.rows.size());
  }

  Grid g;
  const double dx = nx > 1 ? t.rows[1][0] - t.rows[0][0] : 1.0;
  if (two_d) {
    const double dy = ny > 1 ? t.rows[nx][1] - t.rows[0][1] : 1.0;
    g = build_grid(2, {nx, ny}, {t.rows[0][0] - 0.5 * dx, t.rows[0][1] - 0.5 * dy},
                   {t.rows[0][0] + (nx - 0.5) * dx, t.rows[0][1] + (ny - 0.5) * dy});
  } else {
    g = build_grid(1, {nx, 1}, {t.rows[0][0] - 0.5 * dx, 0.0},
                   {t.rows[0][0] + (nx - 0.5) * dx, 1.0});
  }
  Field<Model::m> f(g);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const auto& row = t.rows[static_cast<std::size_t>(j) * nx + i];
      std::vector<double> w(row.begin() + ncoord, row.end());
      f(i, j) = mdl.prims_to_state(w);
    }
  }
  return f;
}

void write_eoc_csv(const std::string& path,
                   const std::map<std::string, std::vector<EocRow>>& table);

}  // namespace relaxfv
