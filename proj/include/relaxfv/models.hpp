// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "relaxfv/errors.hpp"
#include "relaxfv/grid.hpp"

namespace relaxfv {

inline constexpr double kFourPi = 4.0 * std::numbers::pi;

// Compressible Euler equations with the convective/acoustic flux splitting:
// the slow part transports mass, momentum and kinetic energy with eigenvalue
// u_n; the fast part carries the pressure terms whose eigenvalues stay O(c)
// at low Mach. Conserved layout: [rho, rho*u(1..D), rho*E].
template <int D>
struct EulerModel {
  static_assert(D == 1 || D == 2);
  static constexpr int dim = D;
  static constexpr int m = 2 + D;
  static constexpr int nfast = 1;
  using State = std::array<double, m>;

  double gamma = 1.4;

  struct Prim {
    double rho;
    std::array<double, D> u;
    double p;
  };

  Prim cons2prim(const State& q) const {
    Prim w;
    w.rho = q[0];
    double ke = 0.0;
    for (int d = 0; d < D; ++d) {
      w.u[d] = q[1 + d] / q[0];
      ke += q[1 + d] * w.u[d];
    }
    w.p = (gamma - 1.0) * (q[1 + D] - 0.5 * ke);
    return w;
  }

  State prim2cons(const Prim& w) const {
    State q{};
    q[0] = w.rho;
    double ke = 0.0;
    for (int d = 0; d < D; ++d) {
      q[1 + d] = w.rho * w.u[d];
      ke += w.u[d] * w.u[d];
    }
    q[1 + D] = w.p / (gamma - 1.0) + 0.5 * w.rho * ke;
    return q;
  }

  State flux_slow(const State& q, int axis) const {
    const double un = q[1 + axis] / q[0];
    State f{};
    f[0] = q[0] * un;
    double ke = 0.0;
    for (int d = 0; d < D; ++d) {
      f[1 + d] = q[1 + d] * un;
      ke += q[1 + d] * q[1 + d];
    }
    f[1 + D] = 0.5 * (ke / q[0]) * un;
    return f;
  }

  State flux_fast(const State& q, int /*j*/, int axis) const {
    const Prim w = cons2prim(q);
    State f{};
    f[1 + axis] = w.p;
    // enthalpy transport of the internal-energy part: (rho e + p) u_n
    f[1 + D] = (w.p / (gamma - 1.0) + w.p) * w.u[axis];
    return f;
  }

  double speed_slow(const State& q, int axis) const {
    return std::abs(q[1 + axis] / q[0]);
  }

  double speed_fast(const State& q, int /*j*/, int axis) const {
    const Prim w = cons2prim(q);
    const double c2 = gamma * w.p / w.rho;
    const double un = w.u[axis];
    return 0.5 * (std::abs(un) + std::sqrt(un * un + 4.0 * c2));
  }

  // Euclidean velocity magnitude, used by the global Rusanov diffusion switch.
  double material_speed(const State& q) const {
    double s2 = 0.0;
    for (int d = 0; d < D; ++d) {
      const double u = q[1 + d] / q[0];
      s2 += u * u;
    }
    return std::sqrt(s2);
  }

  static std::vector<std::string> var_names() {
    if constexpr (D == 1) return {"rho", "u1", "p"};
    return {"rho", "u1", "u2", "p"};
  }
  std::vector<double> prim_values(const State& q) const {
    const Prim w = cons2prim(q);
    std::vector<double> v;
    v.push_back(w.rho);
    for (int d = 0; d < D; ++d) v.push_back(w.u[d]);
    v.push_back(w.p);
    return v;
  }
  State prims_to_state(const std::vector<double>& v) const {
    Prim w;
    w.rho = v.at(0);
    for (int d = 0; d < D; ++d) w.u[d] = v.at(1 + d);
    w.p = v.at(1 + D);
    return prim2cons(w);
  }
};

// Ideal MHD in Gaussian units with hyperbolic (GLM) divergence cleaning and
// the three-way splitting: convective slow part, pressure sub-flux and
// magnetic/cleaning sub-flux. Conserved layout:
// [rho, rho*u(3), rho*E, B(3), phi]; the state is 9 components in 1D and 2D.
template <int D>
struct MhdModel {
  static_assert(D == 1 || D == 2);
  static constexpr int dim = D;
  static constexpr int m = 9;
  static constexpr int nfast = 2;  // 0: pressure, 1: magnetic + cleaning
  static constexpr int jp = 0;
  static constexpr int jm = 1;
  using State = std::array<double, 9>;

  double gamma = 5.0 / 3.0;
  // Cleaning-wave transport speed; held constant within a time step (the
  // stepper refreshes it from the current field before each step).
  double ch = 0.0;

  struct Prim {
    double rho;
    std::array<double, 3> u;
    double p;
    std::array<double, 3> B;
    double phi;
  };

  Prim cons2prim(const State& q) const {
    Prim w;
    w.rho = q[0];
    double ke = 0.0, b2 = 0.0;
    for (int d = 0; d < 3; ++d) {
      w.u[d] = q[1 + d] / q[0];
      ke += q[1 + d] * w.u[d];
      w.B[d] = q[5 + d];
      b2 += w.B[d] * w.B[d];
    }
    w.p = (gamma - 1.0) * (q[4] - 0.5 * ke - b2 / (2.0 * kFourPi));
    w.phi = q[8];
    return w;
  }

  State prim2cons(const Prim& w) const {
    State q{};
    q[0] = w.rho;
    double ke = 0.0, b2 = 0.0;
    for (int d = 0; d < 3; ++d) {
      q[1 + d] = w.rho * w.u[d];
      ke += w.u[d] * w.u[d];
      q[5 + d] = w.B[d];
      b2 += w.B[d] * w.B[d];
    }
    q[4] = w.p / (gamma - 1.0) + 0.5 * w.rho * ke + b2 / (2.0 * kFourPi);
    q[8] = w.phi;
    return q;
  }

  State flux_slow(const State& q, int axis) const {
    const double un = q[1 + axis] / q[0];
    State f{};
    f[0] = q[0] * un;
    double ke = 0.0;
    for (int d = 0; d < 3; ++d) {
      f[1 + d] = q[1 + d] * un;
      ke += q[1 + d] * q[1 + d];
    }
    f[4] = 0.5 * (ke / q[0]) * un;
    return f;
  }

  State flux_fast(const State& q, int j, int axis) const {
    const Prim w = cons2prim(q);
    State f{};
    if (j == jp) {
      f[1 + axis] = w.p;
      f[4] = (w.p / (gamma - 1.0) + w.p) * w.u[axis];
      return f;
    }
    const double un = w.u[axis];
    const double Bn = w.B[axis];
    double b2 = 0.0, udotB = 0.0;
    for (int d = 0; d < 3; ++d) {
      b2 += w.B[d] * w.B[d];
      udotB += w.u[d] * w.B[d];
    }
    const double mpress = b2 / (2.0 * kFourPi);
    for (int d = 0; d < 3; ++d) {
      f[1 + d] = -Bn * w.B[d] / kFourPi;
      f[5 + d] = un * w.B[d] - Bn * w.u[d];
    }
    f[1 + axis] += mpress;
    f[4] = 2.0 * mpress * un - Bn * udotB / kFourPi;
    f[5 + axis] += ch * ch * w.phi;
    f[8] = Bn;
    return f;
  }

  double speed_slow(const State& q, int axis) const {
    return std::abs(q[1 + axis] / q[0]);
  }

  // Peak wave speed of the magnetic sub-flux without the cleaning wave.
  double alfven_speed(const State& q, int axis) const {
    const double rho = q[0];
    const double un = q[1 + axis] / rho;
    double b2 = 0.0;
    for (int d = 0; d < 3; ++d) b2 += q[5 + d] * q[5 + d];
    b2 /= kFourPi * rho;
    return 0.5 * (std::abs(un) + std::sqrt(un * un + 4.0 * b2));
  }

  double speed_fast(const State& q, int j, int axis) const {
    if (j == jp) {
      const Prim w = cons2prim(q);
      const double c2 = gamma * w.p / w.rho;
      const double un = w.u[axis];
      return 0.5 * (std::abs(un) + std::sqrt(un * un + 4.0 * c2));
    }
    return std::max(alfven_speed(q, axis), ch);
  }

  double material_speed(const State& q) const {
    double s2 = 0.0;
    for (int d = 0; d < 3; ++d) {
      const double u = q[1 + d] / q[0];
      s2 += u * u;
    }
    return std::sqrt(s2);
  }

  static std::vector<std::string> var_names() {
    return {"rho", "u1", "u2", "u3", "p", "B1", "B2", "B3", "phi"};
  }
  std::vector<double> prim_values(const State& q) const {
    const Prim w = cons2prim(q);
    return {w.rho, w.u[0], w.u[1], w.u[2], w.p, w.B[0], w.B[1], w.B[2], w.phi};
  }
  State prims_to_state(const std::vector<double>& v) const {
    Prim w;
    w.rho = v.at(0);
    for (int d = 0; d < 3; ++d) w.u[d] = v.at(1 + d);
    w.p = v.at(4);
    for (int d = 0; d < 3; ++d) w.B[d] = v.at(5 + d);
    w.phi = v.at(8);
    return prim2cons(w);
  }
};

// GLM transport speed: twice the largest magnetic sub-flux wave speed over
// the interior, maximized across axes, so the cleaning wave outruns every
// magnetic signal.
template <int D>
double mhd_cleaning_speed(const MhdModel<D>& mdl, const Field<9>& f) {
  double s = 0.0;
  const Grid& g = f.g;
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      for (int ax = 0; ax < D; ++ax) {
        s = std::max(s, mdl.alfven_speed(f(i, j), ax));
      }
    }
  }
  return 2.0 * s;
}

namespace detail {
template <class Model>
void throw_state_error(const char* stage, int i, int j, const char* what, double val) {
  throw NumericsError(std::string("invalid state after ") + stage + " at cell (" +
                      std::to_string(i) + "," + std::to_string(j) + "): " + what +
                      " = " + std::to_string(val));
}
}  // namespace detail

// Interior-state validation run after every stage. `full` additionally
// requires positive pressure; explicit predictor states that only feed
// pressure-free slow fluxes use the weak form (rho > 0, finite entries).
template <class Model>
void validate_field(const Model& mdl, const Field<Model::m>& f, const char* stage,
                    bool full = true) {
  const Grid& g = f.g;
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      const auto& q = f(i, j);
      for (int c = 0; c < Model::m; ++c) {
        if (!std::isfinite(q[c])) {
          detail::throw_state_error<Model>(stage, i, j, "non-finite component", q[c]);
        }
      }
      if (!(q[0] > 0.0)) {
        detail::throw_state_error<Model>(stage, i, j, "rho", q[0]);
      }
      if (full) {
        const auto w = mdl.cons2prim(q);
        if (!(w.p > 0.0)) {
          detail::throw_state_error<Model>(stage, i, j, "p", w.p);
        }
      }
    }
  }
}

}  // namespace relaxfv
