// SPDX-License-Identifier: MIT

#include "relaxfv/exact_riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "relaxfv/errors.hpp"

namespace relaxfv {

namespace {

struct SideFn {
  // Toro's f_K(p): velocity change across the wave connecting state K to the
  // star region, plus its derivative in p.
  double rho, p, c, A, B, gamma;

  SideFn(const RpState& s, double g)
      : rho(s.rho),
        p(s.p),
        c(std::sqrt(g * s.p / s.rho)),
        A(2.0 / ((g + 1.0) * s.rho)),
        B((g - 1.0) / (g + 1.0) * s.p),
        gamma(g) {}

  double f(double ps) const {
    if (ps > p) return (ps - p) * std::sqrt(A / (ps + B));
    return 2.0 * c / (gamma - 1.0) * (std::pow(ps / p, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
  }

  double df(double ps) const {
    if (ps > p) {
      const double q = std::sqrt(A / (ps + B));
      return q * (1.0 - 0.5 * (ps - p) / (ps + B));
    }
    return 1.0 / (rho * c) * std::pow(ps / p, -(gamma + 1.0) / (2.0 * gamma));
  }
};

}  // namespace

RiemannSolution solve_riemann(const RpState& l, const RpState& r, double gamma) {
  if (!(l.rho > 0.0 && r.rho > 0.0 && l.p > 0.0 && r.p > 0.0))
    throw ConfigError("Riemann data must have positive density and pressure");
  if (!(gamma > 1.0)) throw ConfigError("gamma must exceed 1");

  const double cl = std::sqrt(gamma * l.p / l.rho);
  const double cr = std::sqrt(gamma * r.p / r.rho);
  const double du = r.u - l.u;
  if (2.0 * (cl + cr) / (gamma - 1.0) <= du)
    throw NumericsError("Riemann data generate vacuum, no star state exists");

  const SideFn fl(l, gamma), fr(r, gamma);
  auto total = [&](double ps) { return fl.f(ps) + fr.f(ps) + du; };

  // two-rarefaction guess, clipped away from zero
  const double z = (gamma - 1.0) / (2.0 * gamma);
  double p0 = std::pow((cl + cr - 0.5 * (gamma - 1.0) * du) /
                           (cl / std::pow(l.p, z) + cr / std::pow(r.p, z)),
                       1.0 / z);
  p0 = std::max(p0, 1e-8 * std::min(l.p, r.p));

  // bracket the root: total() is increasing in p
  double plo = 1e-14 * std::min(l.p, r.p);
  double phi = std::max({p0, l.p, r.p});
  while (total(phi) < 0.0) phi *= 4.0;

  const double ftol = 1e-12 * (l.p + r.p);
  double ps = std::clamp(p0, plo, phi);
  RiemannSolution sol;
  int it = 0;
  for (; it < 200; ++it) {
    const double fval = total(ps);
    if (std::abs(fval) <= ftol) break;
    if (fval > 0.0)
      phi = ps;
    else
      plo = ps;
    const double slope = fl.df(ps) + fr.df(ps);
    double pn = ps - fval / slope;
    if (!(pn > plo && pn < phi)) pn = 0.5 * (plo + phi);
    if (pn == ps) break;
    ps = pn;
  }
  if (std::abs(total(ps)) > ftol)
    throw NumericsError("star pressure iteration stalled at p = " + std::to_string(ps));

  sol.gamma = gamma;
  sol.left = l;
  sol.right = r;
  sol.iterations = it;
  sol.p_star = ps;
  sol.u_star = 0.5 * (l.u + r.u) + 0.5 * (fr.f(ps) - fl.f(ps));

  const double gm = gamma - 1.0, gp = gamma + 1.0;
  sol.left_shock = ps > l.p;
  sol.right_shock = ps > r.p;

  if (sol.left_shock) {
    const double pr = ps / l.p;
    sol.rho_star_l = l.rho * (pr + gm / gp) / (gm / gp * pr + 1.0);
    const double s = l.u - cl * std::sqrt((gp * pr + gm) / (2.0 * gamma));
    sol.head_l = sol.tail_l = s;
  } else {
    sol.rho_star_l = l.rho * std::pow(ps / l.p, 1.0 / gamma);
    const double cstar = cl * std::pow(ps / l.p, gm / (2.0 * gamma));
    sol.head_l = l.u - cl;
    sol.tail_l = sol.u_star - cstar;
  }
  if (sol.right_shock) {
    const double pr = ps / r.p;
    sol.rho_star_r = r.rho * (pr + gm / gp) / (gm / gp * pr + 1.0);
    const double s = r.u + cr * std::sqrt((gp * pr + gm) / (2.0 * gamma));
    sol.head_r = sol.tail_r = s;
  } else {
    sol.rho_star_r = r.rho * std::pow(ps / r.p, 1.0 / gamma);
    const double cstar = cr * std::pow(ps / r.p, gm / (2.0 * gamma));
    sol.head_r = r.u + cr;
    sol.tail_r = sol.u_star + cstar;
  }
  return sol;
}

RpState RiemannSolution::sample(double xi) const {
  const double gm = gamma - 1.0, gp = gamma + 1.0;
  if (xi <= u_star) {
    const double cl = std::sqrt(gamma * left.p / left.rho);
    if (left_shock)
      return (xi < head_l) ? left : RpState{rho_star_l, u_star, p_star};
    if (xi < head_l) return left;
    if (xi > tail_l) return RpState{rho_star_l, u_star, p_star};
    // inside the left fan
    const double fac = 2.0 / gp + gm / (gp * cl) * (left.u - xi);
    return RpState{left.rho * std::pow(fac, 2.0 / gm),
                   2.0 / gp * (cl + 0.5 * gm * left.u + xi),
                   left.p * std::pow(fac, 2.0 * gamma / gm)};
  }
  const double cr = std::sqrt(gamma * right.p / right.rho);
  if (right_shock)
    return (xi > head_r) ? right : RpState{rho_star_r, u_star, p_star};
  if (xi > head_r) return right;
  if (xi < tail_r) return RpState{rho_star_r, u_star, p_star};
  const double fac = 2.0 / gp - gm / (gp * cr) * (right.u - xi);
  return RpState{right.rho * std::pow(fac, 2.0 / gm),
                 2.0 / gp * (-cr + 0.5 * gm * right.u + xi),
                 right.p * std::pow(fac, 2.0 * gamma / gm)};
}

namespace {

// 5-point Gauss-Legendre rule on [-1, 1]
constexpr double kGlNode[5] = {-0.906179845938663993, -0.538469310105683091, 0.0,
                               0.538469310105683091, 0.906179845938663993};
constexpr double kGlWeight[5] = {0.236926885056189088, 0.478628670499366468,
                                 0.568888888888888889, 0.478628670499366468,
                                 0.236926885056189088};

}  // namespace

std::vector<RpState> riemann_cell_averages(const RiemannSolution& sol, int n, double lo,
                                           double hi, double x0, double t) {
  if (n <= 0 || !(hi > lo)) throw ConfigError("invalid averaging grid");
  if (t < 0.0) throw ConfigError("cell averages need t >= 0");
  const double dx = (hi - lo) / n;
  std::vector<RpState> out(n);
  for (int i = 0; i < n; ++i) {
    const double xl = lo + i * dx;
    if (t == 0.0) {
      // average of the initial jump; x0 interior to a cell splits it exactly
      const double wl = std::clamp((x0 - xl) / dx, 0.0, 1.0);
      out[i].rho = wl * sol.left.rho + (1.0 - wl) * sol.right.rho;
      out[i].u = wl * sol.left.u + (1.0 - wl) * sol.right.u;
      out[i].p = wl * sol.left.p + (1.0 - wl) * sol.right.p;
      continue;
    }
    RpState acc;
    for (int gq = 0; gq < 5; ++gq) {
      const double x = xl + 0.5 * dx * (1.0 + kGlNode[gq]);
      const RpState s = sol.sample((x - x0) / t);
      acc.rho += 0.5 * kGlWeight[gq] * s.rho;
      acc.u += 0.5 * kGlWeight[gq] * s.u;
      acc.p += 0.5 * kGlWeight[gq] * s.p;
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace relaxfv
