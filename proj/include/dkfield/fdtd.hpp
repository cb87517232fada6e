#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace dkf {

struct GridSpec {
  int nx = 0, ny = 0, nz = 0;
  double h = 1.0;
  std::size_t cells() const {
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
           static_cast<std::size_t>(nz);
  }
};

/// Spatially uniform sinusoidal current J(t) = amp cos(omega t + phase);
/// zero discrete divergence on the periodic grid, so charge densities stay
/// zero under the continuity equation.
struct UniformCurrent {
  std::array<double, 3> amp{};
  double omega = 0.0;
  double phase = 0.0;
  bool active() const { return amp[0] != 0.0 || amp[1] != 0.0 || amp[2] != 0.0; }
  std::array<double, 3> at(double t) const {
    const double c = std::cos(omega * t + phase);
    return {amp[0] * c, amp[1] * c, amp[2] * c};
  }
};

struct CurrentPair {
  UniformCurrent electric;  // j, sampled at edge centers at integer times
  UniformCurrent magnetic;  // j~, sampled at face centers at half-integer times
};

struct CflViolation : std::runtime_error {
  double admissible_dt;
  CflViolation(double dt, double limit)
      : std::runtime_error("CFL violated: dt = " + std::to_string(dt) +
                           " exceeds the admissible dt = h/sqrt(3) = " + std::to_string(limit)),
        admissible_dt(limit) {}
};

/// Dual-Yee state: E-hat on edges at integer times, B-hat on faces at
/// half-integer times, periodic boundaries.
///   Ex at (i+1/2, j, k) h     Bx at (i, j+1/2, k+1/2) h
///   Ey at (i, j+1/2, k) h     By at (i+1/2, j, k+1/2) h
///   Ez at (i, j, k+1/2) h     Bz at (i+1/2, j+1/2, k) h
struct DualFieldState {
  GridSpec grid;
  double dt = 0.0;
  double time = 0.0;  // time of the E fields; B fields live at time + dt/2
  int threads = 1;
  std::vector<double> ex, ey, ez, bx, by, bz;

  static DualFieldState zero(const GridSpec& g, double dt) {
    DualFieldState s;
    s.grid = g;
    s.dt = dt;
    const std::size_t n = g.cells();
    s.ex.assign(n, 0.0);
    s.ey.assign(n, 0.0);
    s.ez.assign(n, 0.0);
    s.bx.assign(n, 0.0);
    s.by.assign(n, 0.0);
    s.bz.assign(n, 0.0);
    return s;
  }

  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * static_cast<std::size_t>(grid.ny) +
            static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(grid.nx) +
           static_cast<std::size_t>(i);
  }
  int wrap_x(int i) const { return (i + grid.nx) % grid.nx; }
  int wrap_y(int j) const { return (j + grid.ny) % grid.ny; }
  int wrap_z(int k) const { return (k + grid.nz) % grid.nz; }
};

inline double cfl_limit(const GridSpec& g) { return g.h / std::sqrt(3.0); }

namespace detail {
template <typename F>
inline void parallel_slabs(int nz, int threads, F&& body) {
  if (threads <= 1) {
    body(0, nz);
    return;
  }
  std::vector<std::thread> pool;
  const int chunk = (nz + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int k0 = t * chunk;
    const int k1 = std::min(nz, k0 + chunk);
    if (k0 >= k1) break;
    pool.emplace_back([&body, k0, k1] { body(k0, k1); });
  }
  for (auto& th : pool) th.join();
}
}  // namespace detail

/// One leapfrog step:
///   E^{n+1}   = E^n     + dt (rot_h B^{n+1/2} - j(t_n))
///   B^{n+3/2} = B^{n+1/2} - dt (rot_h E^{n+1} - j~(t_{n+1/2}))
/// Throws CflViolation before touching the state if dt > h/sqrt(3).
inline void fdtd_step(DualFieldState& s, const CurrentPair& cur = {}) {
  const double limit = cfl_limit(s.grid);
  if (s.dt > limit * (1.0 + 1e-12)) throw CflViolation(s.dt, limit);
  const double rh = s.dt / s.grid.h;
  const int nx = s.grid.nx, ny = s.grid.ny, nz = s.grid.nz;

  const auto je = cur.electric.active() ? cur.electric.at(s.time)
                                        : std::array<double, 3>{0.0, 0.0, 0.0};
  detail::parallel_slabs(nz, s.threads, [&](int k0, int k1) {
    for (int k = k0; k < k1; ++k) {
      const int km = s.wrap_z(k - 1);
      for (int j = 0; j < ny; ++j) {
        const int jm = s.wrap_y(j - 1);
        for (int i = 0; i < nx; ++i) {
          const int im = s.wrap_x(i - 1);
          const std::size_t c = s.idx(i, j, k);
          const double rot_bx = (s.bz[c] - s.bz[s.idx(i, jm, k)]) - (s.by[c] - s.by[s.idx(i, j, km)]);
          const double rot_by = (s.bx[c] - s.bx[s.idx(i, j, km)]) - (s.bz[c] - s.bz[s.idx(im, j, k)]);
          const double rot_bz = (s.by[c] - s.by[s.idx(im, j, k)]) - (s.bx[c] - s.bx[s.idx(i, jm, k)]);
          s.ex[c] += rh * rot_bx - s.dt * je[0];
          s.ey[c] += rh * rot_by - s.dt * je[1];
          s.ez[c] += rh * rot_bz - s.dt * je[2];
        }
      }
    }
  });

  const auto jm_cur = cur.magnetic.active() ? cur.magnetic.at(s.time + 0.5 * s.dt)
                                            : std::array<double, 3>{0.0, 0.0, 0.0};
  detail::parallel_slabs(nz, s.threads, [&](int k0, int k1) {
    for (int k = k0; k < k1; ++k) {
      const int kp = s.wrap_z(k + 1);
      for (int j = 0; j < ny; ++j) {
        const int jp = s.wrap_y(j + 1);
        for (int i = 0; i < nx; ++i) {
          const int ip = s.wrap_x(i + 1);
          const std::size_t c = s.idx(i, j, k);
          const double rot_ex = (s.ez[s.idx(i, jp, k)] - s.ez[c]) - (s.ey[s.idx(i, j, kp)] - s.ey[c]);
          const double rot_ey = (s.ex[s.idx(i, j, kp)] - s.ex[c]) - (s.ez[s.idx(ip, j, k)] - s.ez[c]);
          const double rot_ez = (s.ey[s.idx(ip, j, k)] - s.ey[c]) - (s.ex[s.idx(i, jp, k)] - s.ex[c]);
          s.bx[c] += -rh * rot_ex + s.dt * jm_cur[0];
          s.by[c] += -rh * rot_ey + s.dt * jm_cur[1];
          s.bz[c] += -rh * rot_ez + s.dt * jm_cur[2];
        }
      }
    }
  });

  s.time += s.dt;
}

/// Total field energy (1/2) sum (|E|^2 + |B|^2) h^3.
inline double energy(const DualFieldState& s) {
  double acc = 0.0;
  for (std::size_t c = 0; c < s.ex.size(); ++c)
    acc += s.ex[c] * s.ex[c] + s.ey[c] * s.ey[c] + s.ez[c] * s.ez[c] + s.bx[c] * s.bx[c] +
           s.by[c] * s.by[c] + s.bz[c] * s.bz[c];
  return 0.5 * acc * s.grid.h * s.grid.h * s.grid.h;
}

/// max |div_h E| over nodes; equals max |div E - rho| since the supported
/// currents keep the charge density at zero.
inline double max_div_e(const DualFieldState& s) {
  double worst = 0.0;
  for (int k = 0; k < s.grid.nz; ++k)
    for (int j = 0; j < s.grid.ny; ++j)
      for (int i = 0; i < s.grid.nx; ++i) {
        const std::size_t c = s.idx(i, j, k);
        const double d = (s.ex[c] - s.ex[s.idx(s.wrap_x(i - 1), j, k)] + s.ey[c] -
                          s.ey[s.idx(i, s.wrap_y(j - 1), k)] + s.ez[c] -
                          s.ez[s.idx(i, j, s.wrap_z(k - 1))]) /
                         s.grid.h;
        worst = std::max(worst, std::abs(d));
      }
  return worst;
}

/// max |div_h B| over cell centers.
inline double max_div_b(const DualFieldState& s) {
  double worst = 0.0;
  for (int k = 0; k < s.grid.nz; ++k)
    for (int j = 0; j < s.grid.ny; ++j)
      for (int i = 0; i < s.grid.nx; ++i) {
        const std::size_t c = s.idx(i, j, k);
        const double d = (s.bx[s.idx(s.wrap_x(i + 1), j, k)] - s.bx[c] +
                          s.by[s.idx(i, s.wrap_y(j + 1), k)] - s.by[c] +
                          s.bz[s.idx(i, j, s.wrap_z(k + 1))] - s.bz[c]) /
                         s.grid.h;
        worst = std::max(worst, std::abs(d));
      }
  return worst;
}

/// Axis-aligned vacuum plane wave E_x = A cos(q (z - t)), B_y = E_x with
/// q = 2 pi modes / L, initialized on the staggered grid: E at t = 0, B at
/// t = dt/2. `axis` is the propagation direction (0 = x, 1 = y, 2 = z); the
/// electric field lies along the next axis cyclically.
inline DualFieldState plane_wave_state(const GridSpec& g, double dt, int axis, double amplitude,
                                       int modes) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("plane_wave_state: axis must be 0..2");
  DualFieldState s = DualFieldState::zero(g, dt);
  const int n_along = axis == 0 ? g.nx : (axis == 1 ? g.ny : g.nz);
  const double length = n_along * g.h;
  const double q = 2.0 * std::numbers::pi * modes / length;

  // component layout: E along axis+1, B along axis+2 (cyclic)
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const std::size_t c = s.idx(i, j, k);
        // staggered coordinate along the propagation axis for each component
        auto coord = [&](bool half) {
          const int cell = axis == 0 ? i : (axis == 1 ? j : k);
          return (cell + (half ? 0.5 : 0.0)) * g.h;
        };
        if (axis == 2) {
          s.ex[c] = amplitude * std::cos(q * coord(false));              // Ex at z = k h
          s.by[c] = amplitude * std::cos(q * (coord(true) - 0.5 * dt));  // By at z = (k+1/2) h
        } else if (axis == 0) {
          s.ey[c] = amplitude * std::cos(q * coord(false));
          s.bz[c] = amplitude * std::cos(q * (coord(true) - 0.5 * dt));
        } else {
          s.ez[c] = amplitude * std::cos(q * coord(false));
          s.bx[c] = amplitude * std::cos(q * (coord(true) - 0.5 * dt));
        }
      }
  return s;
}

/// L-infinity error of the propagated plane wave against the analytic
/// solution at the state's current E time.
inline double plane_wave_error(const DualFieldState& s, int axis, double amplitude, int modes) {
  const GridSpec& g = s.grid;
  const int n_along = axis == 0 ? g.nx : (axis == 1 ? g.ny : g.nz);
  const double length = n_along * g.h;
  const double q = 2.0 * std::numbers::pi * modes / length;
  double worst = 0.0;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const std::size_t c = s.idx(i, j, k);
        const int cell = axis == 0 ? i : (axis == 1 ? j : k);
        const double z = cell * g.h;
        const double want = amplitude * std::cos(q * (z - s.time));
        const double got = axis == 2 ? s.ex[c] : (axis == 0 ? s.ey[c] : s.ez[c]);
        worst = std::max(worst, std::abs(got - want));
      }
  return worst;
}

}  // namespace dkf
