// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cmath>

#include "doctest.h"
#include "relaxfv/errors.hpp"
#include "relaxfv/exact_riemann.hpp"

using namespace relaxfv;

namespace {

const RpState kSodL{1.0, 0.0, 1.0};
const RpState kSodR{0.125, 0.0, 0.1};

// full Euler flux of a primitive state, for jump conditions
std::array<double, 3> euler_flux(const RpState& w, double gamma) {
  const double e = w.p / (gamma - 1.0) + 0.5 * w.rho * w.u * w.u;
  return {w.rho * w.u, w.rho * w.u * w.u + w.p, (e + w.p) * w.u};
}

std::array<double, 3> conserved(const RpState& w, double gamma) {
  return {w.rho, w.rho * w.u, w.p / (gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
}

double rh_residual(const RpState& a, const RpState& b, double s, double gamma) {
  const auto fa = euler_flux(a, gamma);
  const auto fb = euler_flux(b, gamma);
  const auto qa = conserved(a, gamma);
  const auto qb = conserved(b, gamma);
  double r = 0.0;
  for (int c = 0; c < 3; ++c) {
    r = std::max(r, std::abs(fa[c] - fb[c] - s * (qa[c] - qb[c])) /
                        (1.0 + std::abs(fa[c])));
  }
  return r;
}

}  // namespace

TEST_CASE("Sod star state matches the frozen iteration result") {
  const RiemannSolution sol = solve_riemann(kSodL, kSodR, 1.4);
  CHECK(sol.p_star == doctest::Approx(0.30313017805064679).epsilon(1e-11));
  CHECK(sol.u_star == doctest::Approx(0.92745262004894991).epsilon(1e-11));
  CHECK(sol.rho_star_l == doctest::Approx(0.42631942817849516).epsilon(1e-11));
  CHECK(sol.rho_star_r == doctest::Approx(0.26557371170530703).epsilon(1e-11));
  CHECK_FALSE(sol.left_shock);
  CHECK(sol.right_shock);
  CHECK(sol.iterations > 0);
  CHECK(sol.iterations < 50);
  CHECK(sol.head_l == doctest::Approx(-1.1832159566199232).epsilon(1e-12));
  CHECK(sol.tail_l == doctest::Approx(-0.07027281256118334).epsilon(1e-10));
  CHECK(sol.head_r == doctest::Approx(1.7521557320301779).epsilon(1e-10));
  CHECK(sol.tail_r == sol.head_r);  // shock: head and tail coincide
}

TEST_CASE("slow-contact star state matches the frozen iteration result") {
  const RiemannSolution sol =
      solve_riemann({1.0, 0.0, 0.4}, {1.0, 0.008, 0.399}, 1.4);
  CHECK(sol.p_star == doctest::Approx(0.39651808346008011).epsilon(1e-11));
  CHECK(sol.u_star == doctest::Approx(0.0046703590664565068).epsilon(1e-9));
  CHECK(sol.rho_star_l == doctest::Approx(0.99377453092476076).epsilon(1e-11));
  CHECK(sol.rho_star_r == doctest::Approx(0.99555293963145575).epsilon(1e-11));
}

TEST_CASE("pure contact data keeps velocity and pressure exact") {
  const RiemannSolution sol =
      solve_riemann({1000.0, 1.0, 1e5}, {0.01, 1.0, 1e5}, 1.4);
  CHECK(sol.p_star == doctest::Approx(1e5).epsilon(1e-12));
  CHECK(sol.u_star == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sol.rho_star_l == doctest::Approx(1000.0).epsilon(1e-12));
  CHECK(sol.rho_star_r == doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("sampling the Sod solution at frozen xi stations") {
  const RiemannSolution sol = solve_riemann(kSodL, kSodR, 1.4);
  struct Row {
    double xi, rho, u, p;
  };
  const Row rows[] = {
      {-1.2, 1.0, 0.0, 1.0},
      {-0.8, 0.75770977883041957, 0.31934663051660261, 0.67811608976009918},
      {0.0, 0.42631942817849516, 0.92745262004894991, 0.30313017805064679},
      {0.5, 0.42631942817849516, 0.92745262004894991, 0.30313017805064679},
      {0.92, 0.42631942817849516, 0.92745262004894991, 0.30313017805064679},
      {1.2, 0.26557371170530703, 0.92745262004894991, 0.30313017805064679},
      {1.9, 0.125, 0.0, 0.10000000000000001},
  };
  for (const Row& r : rows) {
    CAPTURE(r.xi);
    const RpState s = sol.sample(r.xi);
    CHECK(s.rho == doctest::Approx(r.rho).epsilon(1e-10));
    CHECK(s.u == doctest::Approx(r.u).epsilon(1e-10).scale(1.0));
    CHECK(s.p == doctest::Approx(r.p).epsilon(1e-10));
  }
}

TEST_CASE("Rankine-Hugoniot residuals across shocks") {
  const RiemannSolution sod = solve_riemann(kSodL, kSodR, 1.4);
  const RpState star_r{sod.rho_star_r, sod.u_star, sod.p_star};
  CHECK(rh_residual(star_r, kSodR, sod.head_r, 1.4) <= 1e-10);

  // colliding streams: shocks on both sides
  const RiemannSolution coll = solve_riemann({1.0, 2.0, 1.0}, {1.0, -2.0, 1.0}, 1.4);
  CHECK(coll.left_shock);
  CHECK(coll.right_shock);
  const RpState sl{coll.rho_star_l, coll.u_star, coll.p_star};
  const RpState sr{coll.rho_star_r, coll.u_star, coll.p_star};
  CHECK(rh_residual({1.0, 2.0, 1.0}, sl, coll.head_l, 1.4) <= 1e-10);
  CHECK(rh_residual(sr, {1.0, -2.0, 1.0}, coll.head_r, 1.4) <= 1e-10);
}

TEST_CASE("Riemann invariants hold through the rarefaction fan") {
  const double g = 1.4;
  const RiemannSolution sol = solve_riemann(kSodL, kSodR, g);
  const double inv_l = kSodL.u + 2.0 * std::sqrt(g * kSodL.p / kSodL.rho) / (g - 1.0);
  const double entropy_l = kSodL.p / std::pow(kSodL.rho, g);
  for (double f : {0.1, 0.35, 0.6, 0.85}) {
    const double xi = sol.head_l + f * (sol.tail_l - sol.head_l);
    const RpState s = sol.sample(xi);
    const double c = std::sqrt(g * s.p / s.rho);
    CHECK(std::abs(s.u + 2.0 * c / (g - 1.0) - inv_l) <= 1e-10 * std::abs(inv_l));
    CHECK(std::abs(s.p / std::pow(s.rho, g) - entropy_l) <= 1e-10 * entropy_l);
    CHECK(std::abs(s.u - c - xi) <= 1e-10 * (1.0 + std::abs(xi)));
  }
}

TEST_CASE("mirror symmetry of data mirrors the solution") {
  const RpState l{0.7, 0.4, 1.3};
  const RpState r{1.9, -0.1, 0.6};
  const RiemannSolution fwd = solve_riemann(l, r, 1.4);
  const RiemannSolution rev =
      solve_riemann({r.rho, -r.u, r.p}, {l.rho, -l.u, l.p}, 1.4);
  CHECK(rev.p_star == doctest::Approx(fwd.p_star).epsilon(1e-12));
  CHECK(rev.u_star == doctest::Approx(-fwd.u_star).epsilon(1e-12));
  CHECK(rev.rho_star_l == doctest::Approx(fwd.rho_star_r).epsilon(1e-12));
  CHECK(rev.rho_star_r == doctest::Approx(fwd.rho_star_l).epsilon(1e-12));
  for (double xi : {-1.5, -0.3, 0.2, 0.9}) {
    const RpState a = fwd.sample(xi);
    const RpState b = rev.sample(-xi);
    CHECK(b.rho == doctest::Approx(a.rho).epsilon(1e-11));
    CHECK(b.u == doctest::Approx(-a.u).epsilon(1e-11).scale(1.0));
    CHECK(b.p == doctest::Approx(a.p).epsilon(1e-11));
  }

  // antisymmetric data gives a bitwise-zero contact speed
  const RiemannSolution sym = solve_riemann({1.0, -0.5, 1.0}, {1.0, 0.5, 1.0}, 1.4);
  CHECK(sym.u_star == 0.0);
}

TEST_CASE("equal states produce the trivial solution") {
  const RpState q{0.9, 0.3, 2.0};
  const RiemannSolution sol = solve_riemann(q, q, 1.4);
  CHECK(sol.p_star == doctest::Approx(q.p).epsilon(1e-12));
  CHECK(sol.u_star == doctest::Approx(q.u).epsilon(1e-12));
  const RpState s = sol.sample(0.0);
  CHECK(s.rho == doctest::Approx(q.rho).epsilon(1e-12));
  CHECK(s.p == doctest::Approx(q.p).epsilon(1e-12));
}

TEST_CASE("input validation and vacuum detection") {
  CHECK_THROWS_AS(solve_riemann({-1.0, 0.0, 1.0}, kSodR, 1.4), ConfigError);
  CHECK_THROWS_AS(solve_riemann(kSodL, {1.0, 0.0, -0.1}, 1.4), ConfigError);
  CHECK_THROWS_AS(solve_riemann(kSodL, kSodR, 0.9), ConfigError);
  CHECK_THROWS_AS(solve_riemann({1.0, -5.0, 0.4}, {1.0, 5.0, 0.4}, 1.4),
                  NumericsError);
}

TEST_CASE("cell averages on the frozen N=10 Sod grid") {
  const RiemannSolution sol = solve_riemann(kSodL, kSodR, 1.4);
  const auto avg = riemann_cell_averages(sol, 10, 0.0, 1.0, 0.5, 0.1644);
  REQUIRE(avg.size() == 10);
  // cells 3 and 4 contain the fan head/tail kinks: quadrature-limited accuracy
  CHECK(std::abs(avg[3].rho - 0.82807818113703102) <= 5e-4);
  CHECK(std::abs(avg[4].rho - 0.52189890031363007) <= 5e-4);
  // cell 5 sits entirely in the left star region, cell 8 in unperturbed data
  CHECK(std::abs(avg[5].rho - 0.426319428178495) <= 1e-12);
  CHECK(std::abs(avg[8].rho - 0.125) <= 1e-15);
  CHECK(std::abs(avg[8].u) <= 1e-15);
  CHECK(std::abs(avg[8].p - 0.1) <= 1e-15);
}

TEST_CASE("t = 0 averages split the jump cell exactly") {
  const RiemannSolution sol = solve_riemann(kSodL, kSodR, 1.4);
  const auto avg = riemann_cell_averages(sol, 10, 0.0, 1.0, 0.53, 0.0);
  CHECK(avg[2].rho == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(avg[5].rho == doctest::Approx(0.3 * 1.0 + 0.7 * 0.125).epsilon(1e-14));
  CHECK(avg[5].p == doctest::Approx(0.3 * 1.0 + 0.7 * 0.1).epsilon(1e-14));
  CHECK(avg[7].rho == doctest::Approx(0.125).epsilon(1e-15));

  CHECK_THROWS_AS(riemann_cell_averages(sol, 0, 0.0, 1.0, 0.5, 0.1), ConfigError);
  CHECK_THROWS_AS(riemann_cell_averages(sol, 10, 1.0, 0.0, 0.5, 0.1), ConfigError);
  CHECK_THROWS_AS(riemann_cell_averages(sol, 10, 0.0, 1.0, 0.5, -0.1), ConfigError);
}

TEST_CASE("average grids converge first order under refinement") {
  const RiemannSolution sol = solve_riemann(kSodL, kSodR, 1.4);
  const int n = 10000;
  const auto a1 = riemann_cell_averages(sol, n, 0.0, 1.0, 0.5, 0.1644);
  const auto a2 = riemann_cell_averages(sol, 2 * n, 0.0, 1.0, 0.5, 0.1644);
  const auto a4 = riemann_cell_averages(sol, 4 * n, 0.0, 1.0, 0.5, 0.1644);

  auto dist = [](const std::vector<RpState>& coarse, const std::vector<RpState>& fine) {
    const double dxf = 1.0 / fine.size();
    double d = 0.0;
    for (std::size_t i = 0; i < fine.size(); ++i) {
      const RpState& c = coarse[i / 2];
      d += (std::abs(fine[i].rho - c.rho) + std::abs(fine[i].u - c.u) +
            std::abs(fine[i].p - c.p)) *
           dxf;
    }
    return d;
  };
  const double d1 = dist(a1, a2);
  const double d2 = dist(a2, a4);
  // the discontinuity cells dominate these distances and their fractional
  // alignment shifts between levels, so the halving ratio carries jitter
  CHECK(d2 / d1 > 0.2);
  CHECK(d2 / d1 < 0.8);
}
