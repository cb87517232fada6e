#pragma once

#include <cmath>
#include <stdexcept>

#include "dkfield/bispinor.hpp"

namespace dkf {

/// Element of SL(2,C) acting on undotted spinor indices. The matrix acting
/// on dotted indices is the conjugate representation (b^dagger)^-1, which is
/// what the k-bar-star bookkeeping of the transformation law resolves to;
/// the placement is pinned by the intertwiner and homomorphism checks rather
/// than by notation.
struct SL2CElement {
  Mat2 b;

  SL2CElement operator*(const SL2CElement& o) const { return {b * o.b}; }
  SL2CElement operator-() const { return {-b}; }

  /// B(k*) = adjoint, B(k-bar) = inverse, B(k-bar-star) = inverse adjoint.
  Mat2 star() const { return b.adjoint(); }
  Mat2 bar_star() const { return b.adjoint().inverse(); }
};

namespace detail {
inline Vec3d normalize_or_throw(const Vec3d& v, const char* what) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (n == 0.0) throw std::invalid_argument(what);
  return {v[0] / n, v[1] / n, v[2] / n};
}
inline Mat2 dot_sigma(const Vec3d& n) {
  return pauli(1) * n[0] + pauli(2) * n[1] + pauli(3) * n[2];
}
}  // namespace detail

/// B = exp(+(rapidity/2) n.sigma) = cosh(r/2) I + sinh(r/2) n.sigma.
/// Hermitian with unit determinant.
inline SL2CElement sl2c_boost(const Vec3d& direction, double rapidity) {
  const Vec3d n = detail::normalize_or_throw(direction, "sl2c_boost: zero direction");
  const double c = std::cosh(0.5 * rapidity), s = std::sinh(0.5 * rapidity);
  return {Mat2::identity() * c + detail::dot_sigma(n) * s};
}

/// B = exp(-i(angle/2) n.sigma) = cos(a/2) I - i sin(a/2) n.sigma.
/// Unitary with unit determinant.
inline SL2CElement sl2c_rotation(const Vec3d& axis, double angle) {
  const Vec3d n = detail::normalize_or_throw(axis, "sl2c_rotation: zero axis");
  const double c = std::cos(0.5 * angle), s = std::sin(0.5 * angle);
  return {Mat2::identity() * c + detail::dot_sigma(n) * cplx(0.0, -s)};
}

/// 4-spinor representation S = diag(B, (B^dagger)^-1) in the Weyl basis.
inline Mat4 bispinor_rep(const SL2CElement& k) {
  return Mat4::from_blocks(k.b, Mat2::zero(), Mat2::zero(), k.bar_star());
}

/// Induced vector representation via trace projection of
/// B^-1(k*) sigma^a B^-1(k) = sigma^b L_b^a:
///   L_b^a = (1/2) Sp(sigma-bar_b B^-1(k*) sigma^a B^-1(k)).
/// Imaginary parts are projection residue and must vanish.
inline Mat4r vector_rep(const SL2CElement& k) {
  const Mat2 binv = k.b.inverse();
  const Mat2 bstar_inv = k.star().inverse();
  Mat4r L;
  for (int a = 0; a < 4; ++a) {
    const Mat2 lhs = bstar_inv * sigma2(a) * binv;
    for (int b = 0; b < 4; ++b)
      L(b, a) = 0.5 * (sigma2_bar_lower(b) * lhs).trace().real();
  }
  return L;
}

/// Residual of both defining identities for the returned L:
///   B^-1(k*) sigma^a B^-1(k) = sigma^b L_b^a
///   B(k) sigma-bar^a B(k*)   = sigma-bar^b L_b^a
inline double vector_rep_residual(const SL2CElement& k, const Mat4r& L) {
  const Mat2 binv = k.b.inverse();
  const Mat2 bstar = k.star();
  const Mat2 bstar_inv = bstar.inverse();
  double worst = 0.0;
  for (int a = 0; a < 4; ++a) {
    Mat2 rhs, rhs_bar;
    for (int b = 0; b < 4; ++b) {
      rhs = rhs + sigma2(b) * L(b, a);
      rhs_bar = rhs_bar + sigma2_bar(b) * L(b, a);
    }
    worst = std::max(worst, max_abs_diff(bstar_inv * sigma2(a) * binv, rhs));
    worst = std::max(worst, max_abs_diff(k.b * sigma2_bar(a) * bstar, rhs_bar));
  }
  return worst;
}

/// Max residual of the 4-form intertwiner S gamma^a S^-1 = gamma^b L_b^a.
inline double verify_intertwiner(const SL2CElement& k) {
  const Mat4 S = bispinor_rep(k);
  const Mat4 S_inv = Mat4::from_blocks(k.b.inverse(), Mat2::zero(), Mat2::zero(), k.star());
  const Mat4r L = vector_rep(k);
  double worst = 0.0;
  for (int a = 0; a < 4; ++a) {
    Mat4 rhs;
    for (int b = 0; b < 4; ++b) rhs = rhs + gamma(b) * L(b, a);
    worst = std::max(worst, max_abs_diff(S * gamma(a) * S_inv, rhs));
  }
  return worst;
}

/// Blockwise transformation law of the 2-rank bispinor, realized as the
/// two-sided action U' = S U S^T:
///   xi' = B xi B^T,  delta' = B delta (B*)^-1,
///   h' = (B^dag)^-1 h B^T,  eta' = (B^dag)^-1 eta (B*)^-1.
inline Bispinor transform_bispinor(const Bispinor& u, const SL2CElement& k) {
  const Mat4 S = bispinor_rep(k);
  return {S * u.u * S.transpose()};
}

/// The two discrete transformations: M = i gamma^0 and N = gamma^0 gamma^5.
enum class DiscreteMap { M, N };

/// Block permutation/sign maps:
///   M: (xi, delta, h, eta) -> (-eta, -h, -delta, -xi)
///   N: (xi, delta, h, eta) -> (+eta, -h, -delta, +xi)
inline Bispinor discrete_transform(const Bispinor& u, DiscreteMap which) {
  if (which == DiscreteMap::M)
    return Bispinor::from_blocks(-u.eta(), -u.h(), -u.delta(), -u.xi());
  return Bispinor::from_blocks(u.eta(), -u.h(), -u.delta(), u.xi());
}

/// Matrix realization of the discrete maps (for X in {M, N}: U' = X U X^T).
inline Mat4 discrete_matrix(DiscreteMap which) {
  if (which == DiscreteMap::M) return gamma(0) * cplx(0.0, 1.0);
  return gamma(0) * gamma5();
}

/// Vector representations of the discrete maps from X gamma^a X^-1 =
/// gamma^b L_b^a: spatial reflection for M, time reflection for N.
inline Mat4r discrete_vector_rep(DiscreteMap which) {
  const Mat4 X = discrete_matrix(which);
  const Mat4 X_inv = X.inverse();
  Mat4r L;
  for (int a = 0; a < 4; ++a) {
    const Mat4 lhs = X * gamma(a) * X_inv;
    // project on the gamma basis: L_b^a = (1/4) Sp(gamma_b lhs) ... using
    // Sp(gamma_b gamma^a) = 4 delta_b^a
    for (int b = 0; b < 4; ++b)
      L(b, a) = 0.25 * (gamma_lower(b) * lhs).trace().real();
  }
  return L;
}

/// Componentwise Lorentz action on a multiplet with matrix L_b^a acting on
/// lower indices; scalar and pseudoscalar are untouched (proper transforms).
inline TensorMultiplet transform_multiplet(const TensorMultiplet& t, const Mat4r& L) {
  TensorMultiplet out;
  out.scalar = t.scalar;
  out.pseudoscalar = t.pseudoscalar;
  for (int b = 0; b < 4; ++b) {
    cplx v = 0.0, pv = 0.0;
    for (int a = 0; a < 4; ++a) {
      v += L(b, a) * t.vector[static_cast<std::size_t>(a)];
      pv += L(b, a) * t.pseudovector[static_cast<std::size_t>(a)];
    }
    out.vector[static_cast<std::size_t>(b)] = v;
    out.pseudovector[static_cast<std::size_t>(b)] = pv;
  }
  for (std::size_t s = 0; s < 6; ++s) {
    const auto [m, n] = kAntisymPairs[s];
    cplx f = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (a != b) f += L(m, a) * L(n, b) * t.antisym_mn(a, b);
    out.antisym[s] = f;
  }
  return out;
}

/// Minkowski-orthogonality defect |L^T g L - g| plus proper/orthochronous
/// diagnostics.
inline double lorentz_defect(const Mat4r& L) {
  Mat4r g;
  for (int a = 0; a < 4; ++a) g(a, a) = metric_diag(a);
  const Mat4r gtg = L.transpose() * g * L;
  return max_abs_diff(gtg, g);
}

}  // namespace dkf
