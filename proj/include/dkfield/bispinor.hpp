#pragma once

#include "dkfield/clifford.hpp"
#include "dkfield/multiplet.hpp"

namespace dkf {

/// 2-rank bispinor: a 4x4 complex matrix tiling into Weyl-basis blocks
///   [ xi     delta ]
///   [ h      eta   ]
struct Bispinor {
  Mat4 u;

  Mat2 xi() const { return u.block(0, 0); }
  Mat2 delta() const { return u.block(0, 1); }
  Mat2 h() const { return u.block(1, 0); }
  Mat2 eta() const { return u.block(1, 1); }

  static Bispinor from_blocks(const Mat2& xi, const Mat2& delta, const Mat2& h, const Mat2& eta) {
    return {Mat4::from_blocks(xi, delta, h, eta)};
  }

  Bispinor operator+(const Bispinor& o) const { return {u + o.u}; }
  Bispinor operator-(const Bispinor& o) const { return {u - o.u}; }
  Bispinor operator*(const cplx& s) const { return {u * s}; }
};

inline double max_abs_diff(const Bispinor& a, const Bispinor& b) {
  return max_abs_diff(a.u, b.u);
}

/// U = [-i Phi + gamma^l Phi_l + i sigma^{mn} Phi_mn + gamma^5 Phi~ +
///      i gamma^l gamma^5 Phi~_l] E^{-1}, with the antisymmetric sum running
/// over all 16 ordered pairs (twice the six stored components).
inline Bispinor compose(const TensorMultiplet& t) {
  Mat4 m = Mat4::identity() * (cplx(0.0, -1.0) * t.scalar) + gamma5() * t.pseudoscalar;
  for (int l = 0; l < 4; ++l) {
    m = m + gamma(l) * t.vector[static_cast<std::size_t>(l)];
    m = m + (gamma(l) * gamma5()) * (cplx(0.0, 1.0) * t.pseudovector[static_cast<std::size_t>(l)]);
  }
  for (std::size_t s = 0; s < 6; ++s) {
    const auto [a, b] = kAntisymPairs[s];
    m = m + sigma_ab(a, b) * (cplx(0.0, 2.0) * t.antisym[s]);
  }
  return {m * metric_spinor().E_inv};
}

/// Inverse trace projections:
///   Phi_l   = (1/4)  Sp(E gamma_l U)
///   Phi~_l  = (1/4i) Sp(E gamma^5 gamma_l U)
///   Phi     = (i/4)  Sp(E U)
///   Phi~    = (1/4)  Sp(E gamma^5 U)
///   Phi_mn  = -(1/2i) Sp(E sigma_mn U)
inline TensorMultiplet decompose(const Bispinor& b) {
  const Mat4& E = metric_spinor().E;
  TensorMultiplet t;
  t.scalar = cplx(0.0, 0.25) * (E * b.u).trace();
  t.pseudoscalar = 0.25 * (E * gamma5() * b.u).trace();
  for (int l = 0; l < 4; ++l) {
    const Mat4 gl = gamma_lower(l);
    t.vector[static_cast<std::size_t>(l)] = 0.25 * (E * gl * b.u).trace();
    t.pseudovector[static_cast<std::size_t>(l)] =
        cplx(0.0, -0.25) * (E * gamma5() * gl * b.u).trace();
  }
  for (std::size_t s = 0; s < 6; ++s) {
    const auto [m, n] = kAntisymPairs[s];
    const Mat4 smn = sigma_ab(m, n) * cplx(metric_diag(m) * metric_diag(n), 0.0);
    t.antisym[s] = cplx(0.0, 0.5) * (E * smn * b.u).trace();
  }
  return t;
}

}  // namespace dkf
