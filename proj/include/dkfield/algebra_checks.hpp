#pragma once

#include <algorithm>
#include <random>

#include "dkfield/clifford.hpp"

namespace dkf {

/// Clifford relation gamma^a gamma^b + gamma^b gamma^a = 2 g^{ab} I over all
/// 16 index pairs; returns the maximum absolute deviation.
inline double verify_clifford_relation() {
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Mat4 lhs = gamma(a) * gamma(b) + gamma(b) * gamma(a);
      const Mat4 rhs = Mat4::identity() * cplx(2.0 * metric(a, b), 0.0);
      worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
  return worst;
}

/// Metric-spinor relations: E^2 = -I, Sp E = 0, E^T = -E, E_inv E = I, and
/// sigma^{ab,T} E = -E sigma^{ab} for all 16 pairs.
inline double verify_metric_spinor_relations() {
  const auto& ms = metric_spinor();
  double worst = 0.0;
  worst = std::max(worst, max_abs_diff(ms.E * ms.E, -Mat4::identity()));
  worst = std::max(worst, std::abs(ms.E.trace()));
  worst = std::max(worst, max_abs_diff(ms.E.transpose(), -ms.E));
  worst = std::max(worst, max_abs_diff(ms.E_inv * ms.E, Mat4::identity()));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Mat4 s = sigma_ab(a, b);
      worst = std::max(worst, max_abs_diff(s.transpose() * ms.E, -(ms.E * s)));
    }
  return worst;
}

/// gamma^5 relations: closed block form, involution, anticommutation with
/// every gamma^a.
inline double verify_gamma5_relations() {
  const Mat4& g5 = gamma5();
  Mat4 block = Mat4::from_blocks(-Mat2::identity(), Mat2::zero(), Mat2::zero(), Mat2::identity());
  double worst = max_abs_diff(g5, block);
  worst = std::max(worst, max_abs_diff(g5 * g5, Mat4::identity()));
  for (int a = 0; a < 4; ++a)
    worst = std::max(worst, (g5 * gamma(a) + gamma(a) * g5).max_abs());
  return worst;
}

/// All trace identities used to project the tensor system out of the
/// bispinor equation, enumerated over every index tuple:
///   Sp gamma^a = 0,  Sp gamma^5 = 0,  Sp(gamma^5 gamma^a) = 0,
///   Sp(s^a sbar^b) = Sp(sbar^a s^b) = 2 g^{ab},  Sp(gamma^a gamma^b) = 4 g^{ab},
///   Sp(gamma^c gamma^a gamma^b) = 0,  Sp(gamma^5 gamma^c gamma^a gamma^b) = 0,
///   Sp(sbar^d s^c sbar^a s^b) = 2 (g^{dc} g^{ab} - g^{da} g^{cb} + g^{db} g^{ca} - i eps^{dcab}),
///   Sp(s^d sbar^c s^a sbar^b) = 2 (g^{dc} g^{ab} - g^{da} g^{cb} + g^{db} g^{ca} + i eps^{dcab}),
///   Sp(gamma^d gamma^c gamma^a gamma^b) = 4 (g^{dc} g^{ab} - g^{da} g^{cb} + g^{db} g^{ca}),
///   Sp(gamma^5 gamma^d gamma^c gamma^a gamma^b) = 4 i eps^{dcab}.
/// The seeded trials re-check the quadratic and quartic identities on random
/// complex contractions, exercising them in linear combination.
inline double verify_trace_identities(std::uint64_t seed, int trials) {
  double worst = 0.0;
  const Mat4& g5 = gamma5();

  worst = std::max(worst, std::abs(g5.trace()));
  for (int a = 0; a < 4; ++a) {
    worst = std::max(worst, std::abs(gamma(a).trace()));
    worst = std::max(worst, std::abs((g5 * gamma(a)).trace()));
    for (int b = 0; b < 4; ++b) {
      const cplx g2 = cplx(2.0 * metric(a, b), 0.0);
      worst = std::max(worst, std::abs((sigma2(a) * sigma2_bar(b)).trace() - g2));
      worst = std::max(worst, std::abs((sigma2_bar(a) * sigma2(b)).trace() - g2));
      worst = std::max(worst, std::abs((gamma(a) * gamma(b)).trace() - 2.0 * g2));
      for (int c = 0; c < 4; ++c) {
        const Mat4 triple = gamma(c) * gamma(a) * gamma(b);
        worst = std::max(worst, std::abs(triple.trace()));
        worst = std::max(worst, std::abs((g5 * triple).trace()));
        for (int d = 0; d < 4; ++d) {
          const double gg = metric(d, c) * metric(a, b) - metric(d, a) * metric(c, b) +
                            metric(d, b) * metric(c, a);
          const double eps = static_cast<double>(levi_civita(d, c, a, b));
          const cplx tr_sb = (sigma2_bar(d) * sigma2(c) * sigma2_bar(a) * sigma2(b)).trace();
          const cplx tr_s = (sigma2(d) * sigma2_bar(c) * sigma2(a) * sigma2_bar(b)).trace();
          const Mat4 quad = gamma(d) * triple;
          worst = std::max(worst, std::abs(tr_sb - cplx(2.0 * gg, -2.0 * eps)));
          worst = std::max(worst, std::abs(tr_s - cplx(2.0 * gg, 2.0 * eps)));
          worst = std::max(worst, std::abs(quad.trace() - cplx(4.0 * gg, 0.0)));
          worst = std::max(worst, std::abs((g5 * quad).trace() - cplx(0.0, 4.0 * eps)));
        }
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto rand_vec = [&] {
    Vec4c v;
    for (auto& c : v) c = cplx(u(rng), u(rng));
    return v;
  };
  auto slash = [](const Vec4c& v) {
    Mat4 m;
    for (int a = 0; a < 4; ++a) m = m + gamma(a) * v[static_cast<std::size_t>(a)];
    return m;
  };
  auto dot_g = [](const Vec4c& p, const Vec4c& q) {
    cplx s = 0.0;
    for (int a = 0; a < 4; ++a)
      s += metric_diag(a) * p[static_cast<std::size_t>(a)] * q[static_cast<std::size_t>(a)];
    return s;
  };
  for (int t = 0; t < std::max(1, trials); ++t) {
    const Vec4c p = rand_vec(), q = rand_vec(), r = rand_vec(), s = rand_vec();
    const Mat4 P = slash(p), Q = slash(q), R = slash(r), S = slash(s);
    worst = std::max(worst, std::abs((P * Q).trace() - 4.0 * dot_g(p, q)));
    // fully contracted quartic: Sp(g5 P Q R S) = 4i eps(p,q,r,s)
    cplx eps_c = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            const int e = levi_civita(a, b, c, d);
            if (e)
              eps_c += static_cast<double>(e) * p[static_cast<std::size_t>(a)] *
                       q[static_cast<std::size_t>(b)] * r[static_cast<std::size_t>(c)] *
                       s[static_cast<std::size_t>(d)];
          }
    worst = std::max(worst, std::abs((g5 * P * Q * R * S).trace() - cplx(0.0, 4.0) * eps_c));
  }
  return worst;
}

/// Triple products over all 64 index triples:
///   s^a sbar^b s^c = s^a g^{bc} - s^b g^{ac} + s^c g^{ab} + i eps^{abcd} s_d
///   sbar^a s^b sbar^c = sbar^a g^{bc} - sbar^b g^{ac} + sbar^c g^{ab} - i eps^{abcd} sbar_d
inline double verify_sigma_triple_products() {
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        Mat2 rhs = sigma2(a) * cplx(metric(b, c), 0.0) - sigma2(b) * cplx(metric(a, c), 0.0) +
                   sigma2(c) * cplx(metric(a, b), 0.0);
        Mat2 rhs_bar = sigma2_bar(a) * cplx(metric(b, c), 0.0) -
                       sigma2_bar(b) * cplx(metric(a, c), 0.0) +
                       sigma2_bar(c) * cplx(metric(a, b), 0.0);
        for (int d = 0; d < 4; ++d) {
          const int e = levi_civita(a, b, c, d);
          if (!e) continue;
          rhs = rhs + cplx(0.0, static_cast<double>(e)) * sigma2_lower(d);
          rhs_bar = rhs_bar - cplx(0.0, static_cast<double>(e)) * sigma2_bar_lower(d);
        }
        worst = std::max(worst, max_abs_diff(sigma2(a) * sigma2_bar(b) * sigma2(c), rhs));
        worst = std::max(worst,
                         max_abs_diff(sigma2_bar(a) * sigma2(b) * sigma2_bar(c), rhs_bar));
      }
  return worst;
}

}  // namespace dkf
