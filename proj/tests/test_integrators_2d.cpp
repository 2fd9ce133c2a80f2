// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "relaxfv/grid.hpp"
#include "relaxfv/integrators.hpp"
#include "relaxfv/models.hpp"

using namespace relaxfv;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::array<Bc, 2> kPer{Bc::periodic, Bc::periodic};
constexpr std::array<Bc, 2> kOutX{Bc::outflow, Bc::periodic};

double rho_fn(double x, double y) {
  return 1.0 + 0.2 * std::sin(kTwoPi * x) * std::sin(kTwoPi * y) +
         0.05 * std::cos(kTwoPi * x);
}
double ua_fn(double x, double y) {
  return 0.3 * std::cos(kTwoPi * x) + 0.1 * std::sin(kTwoPi * y);
}
double ub_fn(double x, double y) {
  return -0.2 * std::sin(kTwoPi * x) + 0.15 * std::cos(kTwoPi * y);
}
double p_fn(double x, double y) {
  return 1.0 + 0.15 * std::cos(kTwoPi * x) * std::sin(kTwoPi * y);
}

Field<4> euler_field_2d(const EulerModel<2>& mdl, int n) {
  const Grid g = build_grid(2, {n, n}, {0, 0}, {1, 1});
  Field<4> f(g);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x = g.center(0, i), y = g.center(1, j);
      EulerModel<2>::Prim w;
      w.rho = rho_fn(x, y);
      w.u = {ua_fn(x, y), ub_fn(x, y)};
      w.p = p_fn(x, y);
      f(i, j) = mdl.prim2cons(w);
    }
  }
  return f;
}

Field<4> euler_field_2d_transposed(const EulerModel<2>& mdl, int n) {
  const Grid g = build_grid(2, {n, n}, {0, 0}, {1, 1});
  Field<4> f(g);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x = g.center(0, i), y = g.center(1, j);
      EulerModel<2>::Prim w;
      w.rho = rho_fn(y, x);
      w.u = {ub_fn(y, x), ua_fn(y, x)};
      w.p = p_fn(y, x);
      f(i, j) = mdl.prim2cons(w);
    }
  }
  return f;
}

Field<9> mhd_field_2d(const MhdModel<2>& mdl, int n) {
  const Grid g = build_grid(2, {n, n}, {0, 0}, {1, 1});
  Field<9> f(g);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x = g.center(0, i), y = g.center(1, j);
      MhdModel<2>::Prim w;
      w.rho = 1.0 + 0.2 * std::sin(kTwoPi * x) * std::cos(kTwoPi * y);
      w.u = {0.3 * std::cos(kTwoPi * y), 0.2 * std::sin(kTwoPi * x), 0.1};
      w.p = 1.0 + 0.2 * std::sin(kTwoPi * x + 0.3) * std::cos(kTwoPi * y);
      w.B = {0.4 * std::cos(kTwoPi * y), 0.3 * std::sin(kTwoPi * x), 0.2};
      w.phi = 0.03 * std::sin(kTwoPi * x) * std::cos(kTwoPi * y);
      f(i, j) = mdl.prim2cons(w);
    }
  }
  return f;
}

template <int M>
double max_abs_diff(const Field<M>& a, const Field<M>& b) {
  double d = 0.0;
  for (int j = 0; j < a.g.n[1]; ++j)
    for (int i = 0; i < a.g.n[0]; ++i)
      for (int c = 0; c < M; ++c)
        d = std::max(d, std::abs(a(i, j)[c] - b(i, j)[c]));
  return d;
}

}  // namespace

TEST_CASE("extruded shock tube reproduces the 1D run row by row") {
  EulerModel<1> e1;
  EulerModel<2> e2;

  const int nx = 64, ny = 4;
  const Grid g1 = build_grid(1, {nx, 1}, {0, 0}, {1, 1});
  const Grid g2 = build_grid(2, {nx, ny}, {0, 0}, {1, 0.25});
  Field<3> q1(g1);
  Field<4> q2(g2);
  for (int i = 0; i < nx; ++i) {
    const bool left = g1.center(0, i) < 0.5;
    EulerModel<1>::Prim w1;
    w1.rho = left ? 1.0 : 0.125;
    w1.u = {0.0};
    w1.p = left ? 1.0 : 0.1;
    q1(i) = e1.prim2cons(w1);
    for (int j = 0; j < ny; ++j) {
      q2(i, j) = {q1(i)[0], q1(i)[1], 0.0, q1(i)[2]};
    }
  }

  const RelaxSpeeds rs = compute_relax_speeds(e1, q1, 1.0);
  const double dt = 0.3 * g1.dx[0] / rs.a[0][0];

  for (int order : {1, 2}) {
    StepOptions opt;
    opt.order = order;
    Field<3> r1 = q1;
    Field<4> r2 = q2;
    Stepper<EulerModel<1>> s1(e1, g1, {Bc::outflow, Bc::outflow}, opt);
    Stepper<EulerModel<2>> s2(e2, g2, kOutX, opt);
    for (int k = 0; k < 5; ++k) {
      s1.step(r1, dt);
      s2.step(r2, dt);
    }

    double drow = 0.0, d1d = 0.0;
    for (int i = 0; i < nx; ++i) {
      for (int j = 0; j < ny; ++j) {
        for (int c = 0; c < 4; ++c)
          drow = std::max(drow, std::abs(r2(i, j)[c] - r2(i, 0)[c]));
        CHECK(std::abs(r2(i, j)[2]) <= 1e-14);  // transverse momentum stays 0
      }
      d1d = std::max(d1d, std::abs(r2(i, 0)[0] - r1(i)[0]));
      d1d = std::max(d1d, std::abs(r2(i, 0)[1] - r1(i)[1]));
      d1d = std::max(d1d, std::abs(r2(i, 0)[3] - r1(i)[2]));
    }
    CAPTURE(order);
    CHECK(drow <= 1e-14);
    CHECK(d1d <= 1e-8);
  }
}

TEST_CASE("transposing the initial data transposes the solution") {
  EulerModel<2> mdl;
  const int n = 16;
  for (int order : {1, 2}) {
    StepOptions opt;
    opt.order = order;
    Field<4> a = euler_field_2d(mdl, n);
    Field<4> b = euler_field_2d_transposed(mdl, n);
    Stepper<EulerModel<2>> sa(mdl, a.g, kPer, opt);
    Stepper<EulerModel<2>> sb(mdl, b.g, kPer, opt);
    const double dt = 4e-3;
    for (int k = 0; k < 3; ++k) {
      sa.step(a, dt);
      sb.step(b, dt);
    }
    double d = 0.0;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        d = std::max(d, std::abs(b(i, j)[0] - a(j, i)[0]));
        d = std::max(d, std::abs(b(i, j)[1] - a(j, i)[2]));
        d = std::max(d, std::abs(b(i, j)[2] - a(j, i)[1]));
        d = std::max(d, std::abs(b(i, j)[3] - a(j, i)[3]));
      }
    }
    CAPTURE(order);
    CHECK(d <= 1e-9);
  }
}

TEST_CASE("2D periodic steps conserve every component") {
  EulerModel<2> euler;
  MhdModel<2> mhd;
  const int n = 16;
  for (int order : {1, 2}) {
    StepOptions opt;
    opt.order = order;

    Field<4> fe = euler_field_2d(euler, n);
    const double cell = fe.g.dx[0] * fe.g.dx[1];
    std::array<double, 4> te{};
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < 4; ++c) te[c] += fe(i, j)[c] * cell;
    Stepper<EulerModel<2>> se(euler, fe.g, kPer, opt);
    for (int k = 0; k < 3; ++k) se.step(fe, 2e-3);
    std::array<double, 4> te2{};
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < 4; ++c) te2[c] += fe(i, j)[c] * cell;
    for (int c = 0; c < 4; ++c)
      CHECK(std::abs(te2[c] - te[c]) <= 1e-12 * (1.0 + std::abs(te[c])));

    Field<9> fm = mhd_field_2d(mhd, n);
    std::array<double, 9> tm{};
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < 9; ++c) tm[c] += fm(i, j)[c] * cell;
    Stepper<MhdModel<2>> sm(mhd, fm.g, kPer, opt);
    for (int k = 0; k < 3; ++k) sm.step(fm, 2e-3);
    std::array<double, 9> tm2{};
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < 9; ++c) tm2[c] += fm(i, j)[c] * cell;
    for (int c = 0; c < 9; ++c) {
      CAPTURE(c);
      CHECK(std::abs(tm2[c] - tm[c]) <= 1e-12 * (1.0 + std::abs(tm[c])));
    }
  }
}

TEST_CASE("2D constant states are fixed points") {
  EulerModel<2> euler;
  EulerModel<2>::Prim we;
  we.rho = 1.2;
  we.u = {0.3, -0.4};
  we.p = 1.7;
  MhdModel<2> mhd;
  MhdModel<2>::Prim wm;
  wm.rho = 1.0;
  wm.u = {0.2, 0.3, -0.1};
  wm.p = 1.4;
  wm.B = {0.5, -0.3, 0.2};
  wm.phi = 0.0;

  const Grid g = build_grid(2, {12, 10}, {0, 0}, {1, 1});
  for (int order : {1, 2}) {
    for (auto bc : {kPer, kOutX}) {
      StepOptions opt;
      opt.order = order;

      Field<4> fe(g);
      for (int j = 0; j < 10; ++j)
        for (int i = 0; i < 12; ++i) fe(i, j) = euler.prim2cons(we);
      const Field<4> fe0 = fe;
      Stepper<EulerModel<2>> se(euler, g, bc, opt);
      for (int k = 0; k < 3; ++k) se.step(fe, 1e-3);
      CHECK(max_abs_diff(fe, fe0) <= 1e-13 * (1.0 + std::abs(fe0(0, 0)[3])));

      Field<9> fm(g);
      for (int j = 0; j < 10; ++j)
        for (int i = 0; i < 12; ++i) fm(i, j) = mhd.prim2cons(wm);
      const Field<9> fm0 = fm;
      Stepper<MhdModel<2>> sm(mhd, g, bc, opt);
      for (int k = 0; k < 3; ++k) sm.step(fm, 1e-3);
      CHECK(max_abs_diff(fm, fm0) <= 1e-13 * (1.0 + std::abs(fm0(0, 0)[4])));
    }
  }
}

TEST_CASE("2D step info exposes CG iteration counts") {
  EulerModel<2> mdl;
  Field<4> f = euler_field_2d(mdl, 16);
  StepOptions opt;
  opt.order = 1;
  Stepper<EulerModel<2>> st(mdl, f.g, kPer, opt);
  const StepInfo info = st.step(f, 4e-3);
  CHECK(info.cg_iters > 0);
  CHECK(info.speeds.a[0][0] > 0.0);
  CHECK(info.speeds.a[0][1] > 0.0);
}
