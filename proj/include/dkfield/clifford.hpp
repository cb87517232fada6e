#pragma once

#include <array>
#include <stdexcept>

#include "dkfield/matrix.hpp"

namespace dkf {

/// Minkowski metric, signature (+1, -1, -1, -1). Diagonal, so g^{ab} and
/// g_{ab} coincide componentwise and raising equals lowering.
inline double metric(int a, int b) {
  if (a != b) return 0.0;
  return a == 0 ? 1.0 : -1.0;
}

/// Diagonal entry g_{aa}.
inline double metric_diag(int a) { return a == 0 ? 1.0 : -1.0; }

inline void check_index(int a) {
  if (a < 0 || a > 3) throw std::out_of_range("spacetime index must be in 0..3");
}

/// Pauli matrix sigma^k, k in 1..3.
inline const Mat2& pauli(int k) {
  static const std::array<Mat2, 3> s = {
      Mat2{{cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0)}},
      Mat2{{cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0)}},
      Mat2{{cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(-1, 0)}}};
  if (k < 1 || k > 3) throw std::out_of_range("pauli index must be in 1..3");
  return s[static_cast<std::size_t>(k - 1)];
}

/// sigma^a = (I, sigma^k).
inline const Mat2& sigma2(int a) {
  static const std::array<Mat2, 4> s = {Mat2::identity(), pauli(1), pauli(2), pauli(3)};
  check_index(a);
  return s[static_cast<std::size_t>(a)];
}

/// sigma-bar^a = (I, -sigma^k).
inline const Mat2& sigma2_bar(int a) {
  static const std::array<Mat2, 4> s = {Mat2::identity(), -pauli(1), -pauli(2), -pauli(3)};
  check_index(a);
  return s[static_cast<std::size_t>(a)];
}

/// Lowered-index forms via g: sigma_a = g_{ab} sigma^b.
inline Mat2 sigma2_lower(int a) { return sigma2(a) * cplx(metric_diag(a), 0.0); }
inline Mat2 sigma2_bar_lower(int a) { return sigma2_bar(a) * cplx(metric_diag(a), 0.0); }

/// Weyl-basis gamma matrix: off-diagonal blocks, sigma-bar^a upper right,
/// sigma^a lower left.
inline const Mat4& gamma(int a) {
  static const std::array<Mat4, 4> g = [] {
    std::array<Mat4, 4> out;
    for (int i = 0; i < 4; ++i)
      out[static_cast<std::size_t>(i)] =
          Mat4::from_blocks(Mat2::zero(), sigma2_bar(i), sigma2(i), Mat2::zero());
    return out;
  }();
  check_index(a);
  return g[static_cast<std::size_t>(a)];
}

/// gamma_a = g_{ab} gamma^b.
inline Mat4 gamma_lower(int a) { return gamma(a) * cplx(metric_diag(a), 0.0); }

/// gamma^5 = -i gamma^0 gamma^1 gamma^2 gamma^3; equals diag(-I, +I) in the
/// Weyl basis.
inline const Mat4& gamma5() {
  static const Mat4 g5 = cplx(0.0, -1.0) * (gamma(0) * gamma(1) * gamma(2) * gamma(3));
  return g5;
}

/// sigma^{ab} = (1/4)(gamma^a gamma^b - gamma^b gamma^a).
inline Mat4 sigma_ab(int a, int b) {
  check_index(a);
  check_index(b);
  return (gamma(a) * gamma(b) - gamma(b) * gamma(a)) * cplx(0.25, 0.0);
}

/// Upper-left 2x2 block of sigma^{ab}: Sigma^{ab} = (1/4)(sbar^a s^b - sbar^b s^a).
inline Mat2 sigma_block(int a, int b) {
  return (sigma2_bar(a) * sigma2(b) - sigma2_bar(b) * sigma2(a)) * cplx(0.25, 0.0);
}

/// Lower-right 2x2 block: Sigma-bar^{ab} = (1/4)(s^a sbar^b - s^b sbar^a).
inline Mat2 sigma_bar_block(int a, int b) {
  return (sigma2(a) * sigma2_bar(b) - sigma2(b) * sigma2_bar(a)) * cplx(0.25, 0.0);
}

/// Metric spinor E = diag(i sigma^2, -i sigma^2) and its inverse. Satisfies
/// E^2 = -I, Sp E = 0, E^T = -E.
struct MetricSpinor {
  Mat4 E;
  Mat4 E_inv;
};

inline const MetricSpinor& metric_spinor() {
  static const MetricSpinor ms = [] {
    const Mat2 eps = cplx(0.0, 1.0) * pauli(2);  // i sigma^2
    MetricSpinor out;
    out.E = Mat4::from_blocks(eps, Mat2::zero(), Mat2::zero(), -eps);
    out.E_inv = Mat4::from_blocks(-eps, Mat2::zero(), Mat2::zero(), eps);
    return out;
  }();
  return ms;
}

/// Totally antisymmetric symbol with upper indices, eps^{0123} = +1.
/// Lowering all four indices with g flips the sign: eps_{0123} = -1.
inline int levi_civita(int a, int b, int c, int d) {
  check_index(a);
  check_index(b);
  check_index(c);
  check_index(d);
  int idx[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

}  // namespace dkf
