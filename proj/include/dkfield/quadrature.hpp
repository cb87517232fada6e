#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dkfield/matrix.hpp"

namespace dkf {

/// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
/// Legendre recurrence.
inline void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = x;
    weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

/// Outward flux of a 3-vector field through the sphere |x - center| = radius,
/// product Gauss-Legendre in cos(theta) x trapezoid in phi (the latter is
/// spectrally accurate on the periodic direction).
inline double sphere_flux(const std::function<Vec3d(const Vec3d&)>& field, const Vec3d& center,
                          double radius, int order) {
  if (radius <= 0.0) throw std::invalid_argument("sphere_flux: radius must be > 0");
  std::vector<double> ct, w;
  gauss_legendre(order, ct, w);
  const int nphi = 2 * order;
  const double dphi = 2.0 * std::numbers::pi / nphi;
  double flux = 0.0;
  for (int i = 0; i < order; ++i) {
    const double c = ct[static_cast<std::size_t>(i)];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (int j = 0; j < nphi; ++j) {
      const double phi = j * dphi;
      const Vec3d n{s * std::cos(phi), s * std::sin(phi), c};
      const Vec3d p{center[0] + radius * n[0], center[1] + radius * n[1],
                    center[2] + radius * n[2]};
      const Vec3d f = field(p);
      flux += w[static_cast<std::size_t>(i)] * dphi * (f[0] * n[0] + f[1] * n[1] + f[2] * n[2]);
    }
  }
  return flux * radius * radius;
}

}  // namespace dkf
