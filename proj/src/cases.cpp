// SPDX-License-Identifier: MIT

#include "relaxfv/cases.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "relaxfv/errors.hpp"
#include "relaxfv/exact_riemann.hpp"

namespace relaxfv {

namespace {

constexpr double kSqrtMu0 = 3.5449077018110320546;  // sqrt(4 pi)

std::vector<CaseSpec> build_catalog() {
  std::vector<CaseSpec> cat;

  {
    CaseSpec c;
    c.name = "euler-vortex";
    c.description = "travelling isentropic vortex, Mach-scaled, exact transport reference";
    c.phys = Phys::euler;
    c.dim = 2;
    c.default_n = {64, 64};
    c.lo = {-1.0, -1.0};
    c.hi = {1.0, 1.0};
    c.bc = {Bc::periodic, Bc::periodic};
    c.gamma = 1.4;
    c.mach = 0.1;
    c.tie_to_mach = true;
    c.t_end = 0.1;
    c.nu = 0.25;
    c.order = 2;
    c.limiter = Limiter::none;
    c.um = {1.0, 1.0};
    c.translated_reference = true;
    cat.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "euler-vortex-ap";
    c.description = "steady low Mach vortex, relative errors against the leading-order state";
    c.phys = Phys::euler;
    c.dim = 2;
    c.default_n = {64, 64};
    c.lo = {-1.0, -1.0};
    c.hi = {1.0, 1.0};
    c.bc = {Bc::periodic, Bc::periodic};
    c.gamma = 1.4;
    c.mach = 1e-3;
    c.relative_errors = true;
    c.t_end = 0.1;
    c.nu = 0.1;
    c.order = 1;
    c.diffusion = Diffusion::global;
    c.um = {0.0, 0.0};
    c.translated_reference = true;
    cat.push_back(c);
  }

  auto euler_rp = [](const char* name, const char* desc, std::array<double, 3> l,
                     std::array<double, 3> r, double x0, double tf, int order) {
    CaseSpec c;
    c.name = name;
    c.description = desc;
    c.phys = Phys::euler;
    c.dim = 1;
    c.default_n = {512, 1};
    c.lo = {0.0, 0.0};
    c.hi = {1.0, 1.0};
    c.bc = {Bc::outflow, Bc::outflow};
    c.gamma = 1.4;
    c.t_end = tf;
    c.nu = 0.5;
    c.order = order;
    c.rp_left = l;
    c.rp_right = r;
    c.rp_x0 = x0;
    c.riemann_reference = true;
    return c;
  };
  cat.push_back(euler_rp("euler-rp1", "Sod shock tube", {1.0, 0.0, 1.0},
                         {0.125, 0.0, 0.1}, 0.5, 0.1644, 2));
  cat.push_back(euler_rp("euler-rp2", "low Mach double rarefaction around a weak contact",
                         {1.0, 0.0, 0.4}, {1.0, 0.008, 0.399}, 0.5, 0.25, 2));
  cat.push_back(euler_rp("euler-rp3", "stationary contact with uniform velocity and pressure",
                         {1000.0, 1.0, 1e5}, {0.01, 1.0, 1e5}, 0.3, 0.5, 1));

  {
    CaseSpec c;
    c.name = "kelvin-helmholtz";
    c.description = "Kelvin-Helmholtz shear instability with seeded interface noise";
    c.phys = Phys::euler;
    c.dim = 2;
    c.default_n = {128, 128};
    c.lo = {0.0, 0.0};
    c.hi = {1.0, 1.0};
    c.bc = {Bc::periodic, Bc::periodic};
    c.gamma = 1.4;
    c.t_end = 2.0;
    c.nu = 0.25;
    c.order = 2;
    c.seed = 42;
    cat.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "balsara-vortex";
    c.description = "travelling MHD equilibrium vortex, exact transport reference";
    c.phys = Phys::mhd;
    c.dim = 2;
    c.default_n = {64, 64};
    c.lo = {-5.0, -5.0};
    c.hi = {5.0, 5.0};
    c.bc = {Bc::periodic, Bc::periodic};
    c.gamma = 5.0 / 3.0;
    c.t_end = 0.2;
    c.nu = 0.25;
    c.order = 2;
    c.limiter = Limiter::none;
    c.rho0 = 1.0;
    c.um = {1.0, 1.0};
    c.translated_reference = true;
    cat.push_back(c);
  }

  auto mhd_rp = [](const char* name, const char* desc, std::array<double, 9> l,
                   std::array<double, 9> r, double x0, double tf) {
    CaseSpec c;
    c.name = name;
    c.description = desc;
    c.phys = Phys::mhd;
    c.dim = 1;
    c.default_n = {1000, 1};
    c.lo = {0.0, 0.0};
    c.hi = {1.0, 1.0};
    c.bc = {Bc::outflow, Bc::outflow};
    c.gamma = 5.0 / 3.0;
    c.t_end = tf;
    c.nu = 0.5;
    c.order = 2;
    c.mrp_left = l;
    c.mrp_right = r;
    c.rp_x0 = x0;
    return c;
  };
  cat.push_back(mhd_rp("mhd-rp1", "Brio-Wu shock tube",
                       {1.0, 0, 0, 0, 1.0, 0.75 * kSqrtMu0, kSqrtMu0, 0, 0},
                       {0.125, 0, 0, 0, 0.1, 0.75 * kSqrtMu0, -kSqrtMu0, 0, 0}, 0.5, 0.1));
  cat.push_back(mhd_rp("mhd-rp2", "Dai-Woodward near-equilibrium tube",
                       {1.08, 1.2, 0.01, 0.5, 0.95, 2.0, 3.6, 2.0, 0},
                       {0.9891, -0.0131, 0.0269, 0.010037, 0.97159, 2.0, 4.0244, 2.0026, 0},
                       0.4, 0.2));
  cat.push_back(mhd_rp("mhd-rp3", "strong rarefaction with transverse field rotation",
                       {1.7, 0, 0, 0, 1.7, 3.899398, 3.544908, 0, 0},
                       {0.2, 0, 0, -1.496891, 0.2, 3.899398, 2.785898, 2.192064}, 0.4, 0.15));
  cat.push_back(mhd_rp("mhd-rp4", "slow switch-off tube with reversed transverse field",
                       {1.0, 0, 0, 0, 1.0, 1.3 * kSqrtMu0, kSqrtMu0, 0, 0},
                       {0.4, 0, 0, 0, 0.4, 1.3 * kSqrtMu0, -kSqrtMu0, 0, 0}, 0.5, 0.16));

  {
    CaseSpec c;
    c.name = "field-loop";
    c.description = "advected weak magnetic loop in a high pressure background";
    c.phys = Phys::mhd;
    c.dim = 2;
    c.default_n = {256, 128};
    c.lo = {-1.0, -0.5};
    c.hi = {1.0, 0.5};
    c.bc = {Bc::periodic, Bc::periodic};
    c.gamma = 5.0 / 3.0;
    c.t_end = 1.0;
    c.nu = 0.25;
    c.order = 2;
    c.a0 = 1e-3;
    cat.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "orszag-tang";
    c.description = "Orszag-Tang vortex, smooth MHD data steepening into shocks";
    c.phys = Phys::mhd;
    c.dim = 2;
    c.default_n = {128, 128};
    c.lo = {0.0, 0.0};
    c.hi = {1.0, 1.0};
    c.bc = {Bc::periodic, Bc::periodic};
    c.gamma = 5.0 / 3.0;
    c.t_end = 0.5;
    c.nu = 0.25;
    c.order = 2;
    cat.push_back(c);
  }
  return cat;
}

double wrap_periodic(double x, double lo, double hi) {
  const double len = hi - lo;
  double y = std::fmod(x - lo, len);
  if (y < 0.0) y += len;
  return lo + y;
}

}  // namespace

const std::vector<CaseSpec>& case_catalog() {
  static const std::vector<CaseSpec> cat = build_catalog();
  return cat;
}

const CaseSpec& find_case(const std::string& name) {
  for (const auto& c : case_catalog())
    if (c.name == name) return c;
  std::string msg = "unknown case '" + name + "', available:";
  for (const auto& c : case_catalog()) msg += " " + c.name;
  throw ConfigError(msg);
}

// Knuth's 64-bit multiplicative sequence; the high 53 bits give the variate.
namespace {
struct Lcg {
  std::uint64_t s;
  double next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(s >> 11) * 0x1p-53;
  }
};
}  // namespace

KhNoise::KhNoise(std::uint64_t seed) {
  Lcg rng{seed};
  for (auto arr : {&a1_, &a2_}) {
    double sum = 0.0;
    for (double& a : *arr) {
      a = rng.next();
      sum += a;
    }
    for (double& a : *arr) a /= sum;
  }
  constexpr double two_pi = 6.2831853071795864769;
  for (auto arr : {&b1_, &b2_})
    for (double& b : *arr) b = two_pi * rng.next();
}

double KhNoise::eval(const std::array<double, kModes>& a,
                     const std::array<double, kModes>& b, double x) {
  double y = 0.0;
  for (int k = 1; k <= kModes; ++k)
    y += a[k - 1] * std::cos(b[k - 1] + 2.0 * k * M_PI * x);
  return y;
}

std::array<double, 4> euler_vortex_prim(const CaseSpec& cs, double x, double y) {
  const double mm = cs.mach;
  const double a = 8.0;
  const double r2 = x * x + y * y;
  const double rho = 1.0 - mm * mm / 8.0 * std::exp(-2.0 * a * a * r2);
  const double p = std::pow(rho, cs.gamma) / (mm * mm);
  const double swirl =
      a * std::sqrt(cs.gamma / 2.0) * std::exp(-a * a * r2) * std::pow(rho, cs.gamma / 2.0 - 1.0);
  return {rho, cs.um[0] + swirl * y, cs.um[1] - swirl * x, p};
}

std::array<double, 9> balsara_prim(const CaseSpec& cs, double x, double y) {
  const double r2 = x * x + y * y;
  const double env = std::exp(0.5 * (1.0 - r2));
  constexpr double two_pi = 6.2831853071795864769;
  const double ut = std::sqrt(two_pi) / two_pi;        // utilde / (2 pi)
  const double bt = kSqrtMu0 / two_pi;                 // Btilde / (2 pi)
  // radial momentum balance of the rotating state; the envelope squared is
  // exp(1 - r^2)
  const double dp =
      env * env * (bt * bt / (8.0 * M_PI) * (1.0 - r2) - 0.5 * cs.rho0 * ut * ut);
  return {cs.rho0,
          cs.um[0] - ut * env * y,
          cs.um[1] + ut * env * x,
          0.0,
          1.0 + dp,
          -bt * env * y,
          bt * env * x,
          0.0,
          0.0};
}

std::array<double, 9> orszag_tang_prim(const CaseSpec& cs, double x, double y) {
  constexpr double two_pi = 6.2831853071795864769;
  const double arg4 = 2.0 * two_pi * (cs.ot_b2_axis == 'y' ? y : x);
  return {25.0 / 9.0,
          -std::sin(two_pi * y),
          std::sin(two_pi * x),
          0.0,
          5.0 / 3.0,
          -std::sin(two_pi * y) * kSqrtMu0,
          std::sin(arg4) * kSqrtMu0,
          0.0,
          0.0};
}

namespace {

std::array<double, 4> kh_prim(const KhNoise& noise, double x, double y) {
  const bool inner = noise.i1(x) < y && y < noise.i2(x);
  if (inner) return {2.0, -0.5, 0.0, 2.5};
  return {1.0, 0.5, 0.0, 2.5};
}

// Initial magnetic field of the loop from the corner-sampled vector
// potential: corner values are averaged to cell centers and differentiated
// with wide central differences, which keeps the discrete central-difference
// divergence at rounding level.
void field_loop_b(const CaseSpec& cs, const Grid& g, std::vector<double>& b1,
                  std::vector<double>& b2) {
  const int nx = g.n[0], ny = g.n[1];
  constexpr double kR = 0.3;
  auto az = [&](double x, double y) {
    const double r = std::sqrt(x * x + y * y);
    return r <= kR ? cs.a0 * (kR - r) : 0.0;
  };
  std::vector<double> abar(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const double xl = g.lo[0] + i * g.dx[0];
      const double yl = g.lo[1] + j * g.dx[1];
      abar[static_cast<std::size_t>(j) * nx + i] =
          0.25 * (az(xl, yl) + az(xl + g.dx[0], yl) + az(xl, yl + g.dx[1]) +
                  az(xl + g.dx[0], yl + g.dx[1]));
    }
  }
  auto ab = [&](int i, int j) {
    i = (i % nx + nx) % nx;
    j = (j % ny + ny) % ny;
    return abar[static_cast<std::size_t>(j) * nx + i];
  };
  b1.resize(abar.size());
  b2.resize(abar.size());
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * nx + i;
      b1[k] = (ab(i, j + 1) - ab(i, j - 1)) / (2.0 * g.dx[1]);
      b2[k] = -(ab(i + 1, j) - ab(i - 1, j)) / (2.0 * g.dx[0]);
    }
  }
}

EulerModel<1>::Prim to_prim(const EulerModel<1>&, const std::array<double, 3>& w) {
  EulerModel<1>::Prim p;
  p.rho = w[0];
  p.u[0] = w[1];
  p.p = w[2];
  return p;
}

template <int D>
typename MhdModel<D>::Prim to_prim(const MhdModel<D>&, const std::array<double, 9>& w) {
  typename MhdModel<D>::Prim p;
  p.rho = w[0];
  for (int d = 0; d < 3; ++d) p.u[d] = w[1 + d];
  p.p = w[4];
  for (int d = 0; d < 3; ++d) p.B[d] = w[5 + d];
  p.phi = w[8];
  return p;
}

// conserved average of a split cell holding a primitive jump at x0
template <class Model, std::size_t NP>
typename Model::State jump_average(const Model& mdl, const std::array<double, NP>& wl,
                                   const std::array<double, NP>& wr, double xl, double dx,
                                   double x0) {
  const double frac = std::clamp((x0 - xl) / dx, 0.0, 1.0);
  const auto ql = mdl.prim2cons(to_prim(mdl, wl));
  const auto qr = mdl.prim2cons(to_prim(mdl, wr));
  typename Model::State q;
  for (std::size_t c = 0; c < q.size(); ++c) q[c] = frac * ql[c] + (1.0 - frac) * qr[c];
  return q;
}

}  // namespace

void init_case(const CaseSpec& cs, const EulerModel<1>& mdl, Field<3>& f) {
  if (!cs.riemann_reference)
    throw ConfigError("case " + cs.name + " is not a 1D Euler setup");
  const Grid& g = f.g;
  for (int i = 0; i < g.n[0]; ++i) {
    const double xl = g.lo[0] + i * g.dx[0];
    f(i) = jump_average(mdl, cs.rp_left, cs.rp_right, xl, g.dx[0], cs.rp_x0);
  }
}

void init_case(const CaseSpec& cs, const EulerModel<2>& mdl, Field<4>& f) {
  const Grid& g = f.g;
  auto fill = [&](auto&& prim_at) {
    for (int j = 0; j < g.n[1]; ++j) {
      for (int i = 0; i < g.n[0]; ++i) {
        const auto w = prim_at(g.center(0, i), g.center(1, j));
        EulerModel<2>::Prim p;
        p.rho = w[0];
        p.u = {w[1], w[2]};
        p.p = w[3];
        f(i, j) = mdl.prim2cons(p);
      }
    }
  };
  if (cs.name == "kelvin-helmholtz") {
    const KhNoise noise(cs.seed);
    fill([&](double x, double y) { return kh_prim(noise, x, y); });
  } else if (cs.translated_reference) {
    fill([&](double x, double y) { return euler_vortex_prim(cs, x, y); });
  } else {
    throw ConfigError("case " + cs.name + " is not a 2D Euler setup");
  }
}

void init_case(const CaseSpec& cs, const MhdModel<1>& mdl, Field<9>& f) {
  if (cs.phys != Phys::mhd || cs.dim != 1)
    throw ConfigError("case " + cs.name + " is not a 1D MHD setup");
  const Grid& g = f.g;
  for (int i = 0; i < g.n[0]; ++i) {
    const double xl = g.lo[0] + i * g.dx[0];
    f(i) = jump_average(mdl, cs.mrp_left, cs.mrp_right, xl, g.dx[0], cs.rp_x0);
  }
}

void init_case(const CaseSpec& cs, const MhdModel<2>& mdl, Field<9>& f) {
  const Grid& g = f.g;
  auto fill = [&](auto&& prim_at) {
    for (int j = 0; j < g.n[1]; ++j) {
      for (int i = 0; i < g.n[0]; ++i) {
        const auto w = prim_at(g.center(0, i), g.center(1, j));
        f(i, j) = mdl.prim2cons(to_prim(mdl, w));
      }
    }
  };
  if (cs.name == "balsara-vortex") {
    fill([&](double x, double y) { return balsara_prim(cs, x, y); });
  } else if (cs.name == "orszag-tang") {
    fill([&](double x, double y) { return orszag_tang_prim(cs, x, y); });
  } else if (cs.name == "field-loop") {
    std::vector<double> b1, b2;
    field_loop_b(cs, g, b1, b2);
    for (int j = 0; j < g.n[1]; ++j) {
      for (int i = 0; i < g.n[0]; ++i) {
        const std::size_t k = static_cast<std::size_t>(j) * g.n[0] + i;
        const std::array<double, 9> w{1.0, 2.0, 1.0, 0.0, 1e5, b1[k], b2[k], 0.0, 0.0};
        f(i, j) = mdl.prim2cons(to_prim(mdl, w));
      }
    }
  } else {
    throw ConfigError("case " + cs.name + " is not a 2D MHD setup");
  }
}

void reference_field(const CaseSpec& cs, const EulerModel<1>& mdl, double t, Field<3>& f) {
  if (!cs.riemann_reference)
    throw ConfigError("case " + cs.name + " has no exact reference");
  const Grid& g = f.g;
  const RiemannSolution sol =
      solve_riemann({cs.rp_left[0], cs.rp_left[1], cs.rp_left[2]},
                    {cs.rp_right[0], cs.rp_right[1], cs.rp_right[2]}, cs.gamma);
  const auto avg = riemann_cell_averages(sol, g.n[0], g.lo[0], g.hi[0], cs.rp_x0, t);
  for (int i = 0; i < g.n[0]; ++i) {
    EulerModel<1>::Prim p;
    p.rho = avg[i].rho;
    p.u[0] = avg[i].u;
    p.p = avg[i].p;
    f(i) = mdl.prim2cons(p);
  }
}

void reference_field(const CaseSpec& cs, const EulerModel<2>& mdl, double t, Field<4>& f) {
  if (!cs.translated_reference)
    throw ConfigError("case " + cs.name + " has no exact reference");
  const Grid& g = f.g;
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      const double x = wrap_periodic(g.center(0, i) - cs.um[0] * t, g.lo[0], g.hi[0]);
      const double y = wrap_periodic(g.center(1, j) - cs.um[1] * t, g.lo[1], g.hi[1]);
      const auto w = euler_vortex_prim(cs, x, y);
      EulerModel<2>::Prim p;
      p.rho = w[0];
      p.u = {w[1], w[2]};
      p.p = w[3];
      f(i, j) = mdl.prim2cons(p);
    }
  }
}

void reference_field(const CaseSpec& cs, const MhdModel<1>&, double, Field<9>&) {
  throw ConfigError("case " + cs.name + " has no exact reference");
}

void leading_order_field(const CaseSpec& cs, const EulerModel<2>& mdl, Field<4>& f) {
  // M -> 0 limit of the vortex: constant density and pressure, the swirl
  // evaluated at rho = 1. Deviations from this field are what the low Mach
  // expansion predicts to shrink like M^2.
  const Grid& g = f.g;
  const double a = 8.0;
  const double p0 = 1.0 / (cs.mach * cs.mach);
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      const double x = g.center(0, i);
      const double y = g.center(1, j);
      const double swirl = a * std::sqrt(cs.gamma / 2.0) * std::exp(-a * a * (x * x + y * y));
      EulerModel<2>::Prim p;
      p.rho = 1.0;
      p.u = {cs.um[0] + swirl * y, cs.um[1] - swirl * x};
      p.p = p0;
      f(i, j) = mdl.prim2cons(p);
    }
  }
}

void leading_order_field(const CaseSpec& cs, const EulerModel<1>&, Field<3>&) {
  throw ConfigError("case " + cs.name + " has no leading-order reference");
}

void leading_order_field(const CaseSpec& cs, const MhdModel<1>&, Field<9>&) {
  throw ConfigError("case " + cs.name + " has no leading-order reference");
}

void leading_order_field(const CaseSpec& cs, const MhdModel<2>&, Field<9>&) {
  throw ConfigError("case " + cs.name + " has no leading-order reference");
}

void reference_field(const CaseSpec& cs, const MhdModel<2>& mdl, double t, Field<9>& f) {
  if (!cs.translated_reference)
    throw ConfigError("case " + cs.name + " has no exact reference");
  const Grid& g = f.g;
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      const double x = wrap_periodic(g.center(0, i) - cs.um[0] * t, g.lo[0], g.hi[0]);
      const double y = wrap_periodic(g.center(1, j) - cs.um[1] * t, g.lo[1], g.hi[1]);
      f(i, j) = mdl.prim2cons(to_prim(mdl, balsara_prim(cs, x, y)));
    }
  }
}

}  // namespace relaxfv
