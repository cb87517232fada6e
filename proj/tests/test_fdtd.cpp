#include <catch2/catch_amalgamated.hpp>
#include <fstream>
#include <string>

#include "dkfield/fdtd.hpp"

using namespace dkf;

namespace {

DualFieldState run_plane_wave(int n, double cfl, int& steps_out) {
  GridSpec g{n, n, n, 1.0 / n};
  const double period = 1.0;  // one wavelength across the box, c = 1
  const double dt_target = cfl * cfl_limit(g);
  const int steps = static_cast<int>(std::ceil(period / dt_target));
  const double dt = period / steps;
  DualFieldState s = plane_wave_state(g, dt, 2, 1.0, 1);
  for (int i = 0; i < steps; ++i) fdtd_step(s);
  steps_out = steps;
  return s;
}

}  // namespace

TEST_CASE("zero state stays zero") {
  GridSpec g{8, 8, 8, 0.1};
  DualFieldState s = DualFieldState::zero(g, 0.5 * cfl_limit(g));
  for (int i = 0; i < 10; ++i) fdtd_step(s);
  CHECK(energy(s) == 0.0);
  CHECK(max_div_e(s) == 0.0);
  CHECK(max_div_b(s) == 0.0);
}

TEST_CASE("CFL violation is refused before stepping") {
  GridSpec g{8, 8, 8, 0.1};
  DualFieldState s = DualFieldState::zero(g, 1.01 * cfl_limit(g));
  CHECK_THROWS_AS(fdtd_step(s), CflViolation);
  try {
    DualFieldState s2 = DualFieldState::zero(g, 2.0 * cfl_limit(g));
    fdtd_step(s2);
  } catch (const CflViolation& e) {
    CHECK(std::abs(e.admissible_dt - g.h / std::sqrt(3.0)) < 1e-15);
  }
}

TEST_CASE("divergence constraints are preserved in vacuum") {
  GridSpec g{16, 16, 16, 1.0 / 16};
  DualFieldState s = plane_wave_state(g, 0.5 * cfl_limit(g), 2, 1.0, 1);
  const double e0 = max_div_e(s), b0 = max_div_b(s);
  CHECK(e0 < 1e-12);
  CHECK(b0 < 1e-12);
  for (int i = 0; i < 100; ++i) fdtd_step(s);
  CHECK(max_div_e(s) < 1e-12);
  CHECK(max_div_b(s) < 1e-12);
}

TEST_CASE("Gauss constraints stay put under divergence-free currents") {
  GridSpec g{12, 12, 12, 1.0 / 12};
  DualFieldState s = DualFieldState::zero(g, 0.5 * cfl_limit(g));
  CurrentPair cur;
  cur.electric = {{0.0, 0.3, 0.0}, 2.0, 0.0};
  cur.magnetic = {{0.1, 0.0, 0.0}, 3.0, 0.5};
  for (int i = 0; i < 200; ++i) fdtd_step(s, cur);
  CHECK(energy(s) > 0.0);  // the currents did drive fields
  CHECK(max_div_e(s) < 1e-12);
  CHECK(max_div_b(s) < 1e-12);
}

TEST_CASE("energy is quadratic in the amplitude") {
  GridSpec g{8, 8, 8, 1.0 / 8};
  const double dt = 0.5 * cfl_limit(g);
  const double e1 = energy(plane_wave_state(g, dt, 2, 1.0, 1));
  const double e2 = energy(plane_wave_state(g, dt, 2, 2.0, 1));
  CHECK(std::abs(e2 - 4.0 * e1) < 1e-10 * e1);
}

TEST_CASE("vacuum plane wave: energy drift over 1000 steps stays at the recorded level") {
  GridSpec g{16, 16, 16, 1.0 / 16};
  DualFieldState s = plane_wave_state(g, 0.5 * cfl_limit(g), 2, 1.0, 1);
  const double e0 = energy(s);
  double emin = e0, emax = e0;
  for (int i = 0; i < 1000; ++i) {
    fdtd_step(s);
    const double e = energy(s);
    emin = std::min(emin, e);
    emax = std::max(emax, e);
  }
  const double drift = (emax - emin) / e0;

  // golden record: regression guard at 2x the reference measurement
  std::ifstream golden(std::string(DKFIELD_GOLDEN_DIR) + "/vacuum_energy_drift.txt");
  REQUIRE(golden.good());
  std::string token;
  double measured = 0.0, bound = 0.0;
  while (golden >> token) {
    if (token == "measured") golden >> measured;
    else if (token == "bound") golden >> bound;
    else golden.ignore(1024, '\n');
  }
  REQUIRE(measured > 0.0);
  CHECK(drift < 2.0 * measured);
  CHECK(drift < bound);
}

TEST_CASE("the scheme is linear: combined run equals the sum of separate runs") {
  GridSpec g{12, 12, 12, 1.0 / 12};
  const double dt = 0.5 * cfl_limit(g);
  DualFieldState a = plane_wave_state(g, dt, 2, 1.0, 1);
  DualFieldState b = plane_wave_state(g, dt, 0, 0.5, 2);
  DualFieldState sum = DualFieldState::zero(g, dt);
  for (std::size_t c = 0; c < sum.ex.size(); ++c) {
    sum.ex[c] = a.ex[c] + b.ex[c];
    sum.ey[c] = a.ey[c] + b.ey[c];
    sum.ez[c] = a.ez[c] + b.ez[c];
    sum.bx[c] = a.bx[c] + b.bx[c];
    sum.by[c] = a.by[c] + b.by[c];
    sum.bz[c] = a.bz[c] + b.bz[c];
  }
  for (int i = 0; i < 50; ++i) {
    fdtd_step(a);
    fdtd_step(b);
    fdtd_step(sum);
  }
  double worst = 0.0;
  for (std::size_t c = 0; c < sum.ex.size(); ++c) {
    worst = std::max(worst, std::abs(sum.ex[c] - a.ex[c] - b.ex[c]));
    worst = std::max(worst, std::abs(sum.ey[c] - a.ey[c] - b.ey[c]));
    worst = std::max(worst, std::abs(sum.ez[c] - a.ez[c] - b.ez[c]));
    worst = std::max(worst, std::abs(sum.bx[c] - a.bx[c] - b.bx[c]));
    worst = std::max(worst, std::abs(sum.by[c] - a.by[c] - b.by[c]));
    worst = std::max(worst, std::abs(sum.bz[c] - a.bz[c] - b.bz[c]));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("plane wave after one period: second-order convergence") {
  int steps16 = 0, steps32 = 0;
  const DualFieldState s16 = run_plane_wave(16, 0.5, steps16);
  const DualFieldState s32 = run_plane_wave(32, 0.5, steps32);
  const double err16 = plane_wave_error(s16, 2, 1.0, 1);
  const double err32 = plane_wave_error(s32, 2, 1.0, 1);
  CHECK(err16 > 0.0);
  const double ratio = err16 / err32;
  CHECK(ratio > 3.2);
  CHECK(ratio < 4.8);
}

TEST_CASE("propagation works along each axis") {
  for (int axis = 0; axis < 3; ++axis) {
    GridSpec g{16, 16, 16, 1.0 / 16};
    const double dt_target = 0.5 * cfl_limit(g);
    const int steps = static_cast<int>(std::ceil(1.0 / dt_target));
    DualFieldState s = plane_wave_state(g, 1.0 / steps, axis, 1.0, 1);
    for (int i = 0; i < steps; ++i) fdtd_step(s);
    CHECK(plane_wave_error(s, axis, 1.0, 1) < 0.05);
  }
}

TEST_CASE("slab-parallel stepping matches the serial path") {
  GridSpec g{12, 12, 12, 1.0 / 12};
  DualFieldState serial = plane_wave_state(g, 0.5 * cfl_limit(g), 2, 1.0, 1);
  DualFieldState parallel = serial;
  parallel.threads = 4;
  CurrentPair cur;
  cur.electric = {{0.2, 0.0, 0.0}, 1.0, 0.0};
  for (int i = 0; i < 25; ++i) {
    fdtd_step(serial, cur);
    fdtd_step(parallel, cur);
  }
  double worst = 0.0;
  for (std::size_t c = 0; c < serial.ex.size(); ++c) {
    worst = std::max(worst, std::abs(serial.ex[c] - parallel.ex[c]));
    worst = std::max(worst, std::abs(serial.by[c] - parallel.by[c]));
  }
  CHECK(worst == 0.0);  // identical update order within each cell
}
