// SPDX-License-Identifier: MIT
//
// Benchmark case catalog: initial conditions, domains, and exact references
// where available. Cases are looked up by name; numeric parameters can be
// overridden per run without touching the catalog entries.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "relaxfv/grid.hpp"
#include "relaxfv/models.hpp"
#include "relaxfv/spatial.hpp"

namespace relaxfv {

enum class Phys { euler, mhd };

struct CaseSpec {
  std::string name;
  std::string description;
  Phys phys = Phys::euler;
  int dim = 2;
  std::array<int, 2> default_n{128, 128};
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{1.0, 1.0};
  std::array<Bc, 2> bc{Bc::periodic, Bc::periodic};
  double gamma = 1.4;
  double t_end = 1.0;
  double nu = 0.25;
  int order = 2;
  Limiter limiter = Limiter::minmod;
  Diffusion diffusion = Diffusion::local;
  int min_steps = 64;

  // case-specific parameters; unused entries stay at their defaults
  double mach = 0.1;                   // vortex Mach number
  bool tie_to_mach = false;            // t_end = M, nu = 2.5 M track the Mach number
  bool relative_errors = false;        // report errors against leading-order scales
  std::array<double, 2> um{0.0, 0.0};  // background advection velocity
  double rho0 = 1.0;                   // Balsara background density
  double a0 = 1e-3;                    // field loop potential amplitude
  std::uint64_t seed = 42;             // Kelvin-Helmholtz interface noise
  char ot_b2_axis = 'x';               // coordinate inside sin(4 pi .) of B2

  // Riemann problem data (primitive states) and initial jump position
  std::array<double, 3> rp_left{};   // rho, u, p
  std::array<double, 3> rp_right{};
  std::array<double, 9> mrp_left{};  // rho, u1..u3, p, B1..B3, phi
  std::array<double, 9> mrp_right{};
  double rp_x0 = 0.5;

  bool translated_reference = false;  // exact solution is the advected IC
  bool riemann_reference = false;     // exact solution from the Riemann solver
};

const std::vector<CaseSpec>& case_catalog();

// Throws ConfigError listing the known names when the lookup fails.
const CaseSpec& find_case(const std::string& name);

// Deterministic interface perturbations of the Kelvin-Helmholtz case. The
// shear layer positions are I_j(x) = J_j + 0.01 Y_j(x) with ten cosine modes
// whose amplitudes are normalized to sum to one,
//   Y_j(x) = sum_k a_j^k cos(b_j^k + 2 k pi x).
// Coefficients come from a fixed 64-bit LCG so runs are reproducible across
// platforms.
class KhNoise {
 public:
  static constexpr int kModes = 10;
  explicit KhNoise(std::uint64_t seed);

  double y1(double x) const { return eval(a1_, b1_, x); }
  double y2(double x) const { return eval(a2_, b2_, x); }
  double i1(double x) const { return 0.25 + 0.01 * y1(x); }
  double i2(double x) const { return 0.75 + 0.01 * y2(x); }

  const std::array<double, kModes>& a1() const { return a1_; }
  const std::array<double, kModes>& a2() const { return a2_; }
  const std::array<double, kModes>& b1() const { return b1_; }
  const std::array<double, kModes>& b2() const { return b2_; }

 private:
  static double eval(const std::array<double, kModes>& a,
                     const std::array<double, kModes>& b, double x);
  std::array<double, kModes> a1_{}, a2_{}, b1_{}, b2_{};
};

// Pointwise primitive states of the smooth cases, reused by the translated
// references.
std::array<double, 4> euler_vortex_prim(const CaseSpec& cs, double x, double y);
std::array<double, 9> balsara_prim(const CaseSpec& cs, double x, double y);
std::array<double, 9> orszag_tang_prim(const CaseSpec& cs, double x, double y);

// Fills the interior of f with the initial condition of the case.
void init_case(const CaseSpec& cs, const EulerModel<1>& mdl, Field<3>& f);
void init_case(const CaseSpec& cs, const EulerModel<2>& mdl, Field<4>& f);
void init_case(const CaseSpec& cs, const MhdModel<1>& mdl, Field<9>& f);
void init_case(const CaseSpec& cs, const MhdModel<2>& mdl, Field<9>& f);

// Exact solution at time t on the grid of f. Valid when the corresponding
// reference flag of the case is set; throws ConfigError otherwise.
void reference_field(const CaseSpec& cs, const EulerModel<1>& mdl, double t, Field<3>& f);
void reference_field(const CaseSpec& cs, const EulerModel<2>& mdl, double t, Field<4>& f);
void reference_field(const CaseSpec& cs, const MhdModel<1>& mdl, double t, Field<9>& f);
void reference_field(const CaseSpec& cs, const MhdModel<2>& mdl, double t, Field<9>& f);

// Leading-order limit state of a case with relative_errors set (the vortex at
// M -> 0: rho = 1, p = 1/M^2, swirl at unit density); throws ConfigError for
// cases without one.
void leading_order_field(const CaseSpec& cs, const EulerModel<1>& mdl, Field<3>& f);
void leading_order_field(const CaseSpec& cs, const EulerModel<2>& mdl, Field<4>& f);
void leading_order_field(const CaseSpec& cs, const MhdModel<1>& mdl, Field<9>& f);
void leading_order_field(const CaseSpec& cs, const MhdModel<2>& mdl, Field<9>& f);

}  // namespace relaxfv
