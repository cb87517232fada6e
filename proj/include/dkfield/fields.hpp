#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dkfield/clifford.hpp"
#include "dkfield/multiplet.hpp"

namespace dkf {

/// One plane-wave term: amplitude multiplet times exp(-i k.x). The stored
/// wavevector is contravariant, k = (k^0, k^1, k^2, k^3), and
/// k.x = g_{ab} k^a x^b, so d/dx^a brings down -i k_a = -i g_{ab} k^b.
struct PlaneWaveTerm {
  Vec4d k{};
  TensorMultiplet amplitude;
};

/// Closed-form inverse-square terms for static point-source tests; written
/// into the antisymmetric slot. Singular at the spatial origin.
enum class RadialKind {
  CoulombElectric,   // E = q rhat / (4 pi r^2), i.e. F_{0k} = -E_k
  MonopoleMagnetic,  // B = s rhat / (4 pi r^2), i.e. (F_23,F_31,F_12) = B
};

struct RadialTerm {
  RadialKind kind;
  double strength;
};

inline double minkowski_dot(const Vec4d& k, const Vec4d& x) {
  return k[0] * x[0] - k[1] * x[1] - k[2] * x[2] - k[3] * x[3];
}

inline double wave_norm2(const Vec4d& k) { return minkowski_dot(k, k); }

/// Covariant component k_a of a stored contravariant wavevector.
inline double lower_component(const Vec4d& k, int a) {
  return metric_diag(a) * k[static_cast<std::size_t>(a)];
}

/// Finite sum of plane waves (plus optional radial terms) with exact
/// differentiation. Immutable after construction; evaluation is pure.
struct MultipletField {
  std::vector<PlaneWaveTerm> terms;
  std::vector<RadialTerm> radial;

  bool empty() const { return terms.empty() && radial.empty(); }

  TensorMultiplet value(const Vec4d& x) const {
    TensorMultiplet out;
    for (const auto& t : terms) {
      const double phase = -minkowski_dot(t.k, x);
      out = out + t.amplitude * std::polar(1.0, phase);
    }
    for (const auto& r : radial) add_radial_value(r, x, out);
    return out;
  }

  /// Exact partial derivative d/dx^a.
  TensorMultiplet derivative(int a, const Vec4d& x) const {
    check_index(a);
    TensorMultiplet out;
    for (const auto& t : terms) {
      const double phase = -minkowski_dot(t.k, x);
      const cplx factor = cplx(0.0, -lower_component(t.k, a)) * std::polar(1.0, phase);
      out = out + t.amplitude * factor;
    }
    for (const auto& r : radial) add_radial_derivative(r, a, x, out);
    return out;
  }

 private:
  static void add_radial_value(const RadialTerm& r, const Vec4d& x, TensorMultiplet& out) {
    const double rx = x[1], ry = x[2], rz = x[3];
    const double rr = std::sqrt(rx * rx + ry * ry + rz * rz);
    const double c = r.strength / (4.0 * std::numbers::pi * rr * rr * rr);
    const double f1 = c * rx, f2 = c * ry, f3 = c * rz;
    if (r.kind == RadialKind::CoulombElectric) {
      // F_{0k} = -E_k, slots (01,02,03)
      out.antisym[0] -= f1;
      out.antisym[1] -= f2;
      out.antisym[2] -= f3;
    } else {
      // (F_23, F_31, F_12) = B, slots (23,31,12)
      out.antisym[3] += f1;
      out.antisym[4] += f2;
      out.antisym[5] += f3;
    }
  }

  static void add_radial_derivative(const RadialTerm& r, int a, const Vec4d& x,
                                    TensorMultiplet& out) {
    if (a == 0) return;  // static fields
    const double xs[3] = {x[1], x[2], x[3]};
    const double rr = std::sqrt(xs[0] * xs[0] + xs[1] * xs[1] + xs[2] * xs[2]);
    const double r3 = rr * rr * rr, r5 = r3 * rr * rr;
    const double c = r.strength / (4.0 * std::numbers::pi);
    const int j = a - 1;  // spatial derivative index
    for (int kcomp = 0; kcomp < 3; ++kcomp) {
      // d_j (x_k / r^3) = delta_jk / r^3 - 3 x_j x_k / r^5
      const double d = c * ((j == kcomp ? 1.0 / r3 : 0.0) - 3.0 * xs[j] * xs[kcomp] / r5);
      const std::size_t slot = (r.kind == RadialKind::CoulombElectric)
                                   ? static_cast<std::size_t>(kcomp)
                                   : static_cast<std::size_t>(kcomp + 3);
      out.antisym[slot] += (r.kind == RadialKind::CoulombElectric) ? -d : d;
    }
  }
};

/// Uniformly random multiplet with components in the complex unit box.
inline TensorMultiplet random_multiplet(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TensorMultiplet t;
  for (std::size_t i = 0; i < TensorMultiplet::kComponents; ++i)
    t.component(i) = cplx(u(rng), u(rng));
  return t;
}

inline Vec4d random_point(std::mt19937_64& rng, double box = 1.0) {
  std::uniform_real_distribution<double> u(-box, box);
  return {u(rng), u(rng), u(rng), u(rng)};
}

}  // namespace dkf
