#pragma once

#include <numbers>

#include "dkfield/quadrature.hpp"
#include "dkfield/residuals.hpp"

namespace dkf {

/// Antisymmetric rank-2 value in the storage order (01, 02, 03, 23, 31, 12).
struct Antisym {
  std::array<cplx, 6> c{};

  cplx mn(int m, int n) const {
    if (m == n) return 0.0;
    for (std::size_t s = 0; s < 6; ++s) {
      if (kAntisymPairs[s].first == m && kAntisymPairs[s].second == n) return c[s];
      if (kAntisymPairs[s].first == n && kAntisymPairs[s].second == m) return -c[s];
    }
    return 0.0;
  }

  Antisym operator+(const Antisym& o) const {
    Antisym r;
    for (std::size_t i = 0; i < 6; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  Antisym operator-(const Antisym& o) const {
    Antisym r;
    for (std::size_t i = 0; i < 6; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  Antisym operator-() const {
    Antisym r;
    for (std::size_t i = 0; i < 6; ++i) r.c[i] = -c[i];
    return r;
  }
  Antisym operator*(const cplx& s) const {
    Antisym r;
    for (std::size_t i = 0; i < 6; ++i) r.c[i] = c[i] * s;
    return r;
  }
  double max_abs() const {
    double w = 0.0;
    for (const auto& v : c) w = std::max(w, std::abs(v));
    return w;
  }
};

inline double max_abs_diff(const Antisym& a, const Antisym& b) { return (a - b).max_abs(); }

/// Hodge dual F*_ab = (1/2) eps_ab^{rho sigma} F_{rho sigma}, indices moved
/// with g and eps^{0123} = +1 fixed. Satisfies dual(dual(F)) = -F. On
/// 3-vectors this is (E, B) -> (B, -E).
inline Antisym dual_tensor(const Antisym& f) {
  Antisym r;
  for (std::size_t s = 0; s < 6; ++s) {
    const auto [a, b] = kAntisymPairs[s];
    cplx v = 0.0;
    for (int rho = 0; rho < 4; ++rho)
      for (int sg = 0; sg < 4; ++sg) {
        const int e = levi_civita(a, b, rho, sg);
        if (e) v += 0.5 * metric_diag(a) * metric_diag(b) * static_cast<double>(e) * f.mn(rho, sg);
      }
    r.c[s] = v;
  }
  return r;
}

/// Sum/difference strengths F+ = F + F~, F- = F - F~ with their duals.
struct CombinedStrength {
  Antisym plus, minus, plus_dual, minus_dual;
};

inline CombinedStrength combine_fields(const Antisym& f, const Antisym& ft) {
  CombinedStrength c;
  c.plus = f + ft;
  c.minus = f - ft;
  c.plus_dual = dual_tensor(c.plus);
  c.minus_dual = dual_tensor(c.minus);
  return c;
}

inline Antisym antisym_part(const TensorMultiplet& t) {
  Antisym a;
  a.c = t.antisym;
  return a;
}

/// Curl d_a V_b - d_b V_a of the vector (or pseudovector) slot.
namespace detail {
template <bool Pseudo>
inline Antisym slot_curl(const std::array<TensorMultiplet, 4>& d) {
  Antisym r;
  for (std::size_t s = 0; s < 6; ++s) {
    const auto [a, b] = kAntisymPairs[s];
    if constexpr (Pseudo)
      r.c[s] = d[static_cast<std::size_t>(a)].pseudovector[static_cast<std::size_t>(b)] -
               d[static_cast<std::size_t>(b)].pseudovector[static_cast<std::size_t>(a)];
    else
      r.c[s] = d[static_cast<std::size_t>(a)].vector[static_cast<std::size_t>(b)] -
               d[static_cast<std::size_t>(b)].vector[static_cast<std::size_t>(a)];
  }
  return r;
}
}  // namespace detail

/// Two-potential strengths at a point:
///   F+- = (dA - dA) +- eps d A~,
/// with duals computed along two routes, the direct dualization and the
/// closed form F+-* = -+ (dA~ - dA~) + eps dA; `route_residual` is their
/// disagreement.
struct PotentialStrengths {
  CombinedStrength strengths;
  double route_residual;
};

inline PotentialStrengths strengths_from_potentials(const MultipletField& pot, const Vec4d& x) {
  std::array<TensorMultiplet, 4> d;
  for (int a = 0; a < 4; ++a) d[static_cast<std::size_t>(a)] = pot.derivative(a, x);
  const Antisym curl_a = detail::slot_curl<false>(d);
  const Antisym curl_at = detail::slot_curl<true>(d);
  const Antisym eps_dat = dual_tensor(curl_at);  // eps_ab^{rs} d_r A~_s
  const Antisym eps_da = dual_tensor(curl_a);

  PotentialStrengths out;
  out.strengths.plus = curl_a + eps_dat;
  out.strengths.minus = curl_a - eps_dat;
  out.strengths.plus_dual = dual_tensor(out.strengths.plus);
  out.strengths.minus_dual = dual_tensor(out.strengths.minus);

  // closed forms
  const Antisym plus_dual_cf = eps_da - curl_at;
  const Antisym minus_dual_cf = eps_da + curl_at;
  out.route_residual = std::max(max_abs_diff(out.strengths.plus_dual, plus_dual_cf),
                                max_abs_diff(out.strengths.minus_dual, minus_dual_cf));
  return out;
}

/// Exact strength fields of a plane-wave potential pair: per-term Fourier
/// algebra, so the results stay exactly differentiable plane-wave fields.
/// The sector field for S=1 carries (A, F = dA - dA), the one for S=1~
/// carries (A~, F~ = eps dA~).
struct SectorFields {
  MultipletField vector_sector;
  MultipletField pseudovector_sector;
};

inline SectorFields sector_fields_from_potentials(const MultipletField& pot) {
  if (!pot.radial.empty())
    throw std::invalid_argument("sector_fields_from_potentials: plane-wave potentials only");
  SectorFields out;
  for (const auto& term : pot.terms) {
    PlaneWaveTerm v, p;
    v.k = term.k;
    p.k = term.k;
    Antisym curl_a, curl_at;
    for (std::size_t s = 0; s < 6; ++s) {
      const auto [a, b] = kAntisymPairs[s];
      const cplx ka{0.0, -lower_component(term.k, a)};
      const cplx kb{0.0, -lower_component(term.k, b)};
      curl_a.c[s] = ka * term.amplitude.vector[static_cast<std::size_t>(b)] -
                    kb * term.amplitude.vector[static_cast<std::size_t>(a)];
      curl_at.c[s] = ka * term.amplitude.pseudovector[static_cast<std::size_t>(b)] -
                     kb * term.amplitude.pseudovector[static_cast<std::size_t>(a)];
    }
    v.amplitude.vector = term.amplitude.vector;
    v.amplitude.antisym = curl_a.c;
    p.amplitude.pseudovector = term.amplitude.pseudovector;
    p.amplitude.antisym = dual_tensor(curl_at).c;
    out.vector_sector.terms.push_back(v);
    out.pseudovector_sector.terms.push_back(p);
  }
  return out;
}

/// The four divergence equations of the extended system, evaluated from the
/// two sector strength fields F (antisym slot of `vec_sector`) and F~
/// (antisym slot of `pseudo_sector`):
///   d^b F+_ab + j_a,    d^b F-_ab + j_a,
///   d^b F+*_ab - j~_a,  d^b F-*_ab + j~_a.
struct ExtendedResidual {
  std::array<cplx, 4> plus_div{};
  std::array<cplx, 4> minus_div{};
  std::array<cplx, 4> plus_dual_div{};
  std::array<cplx, 4> minus_dual_div{};
  CurrentDivergence current_div{};

  double max_abs() const {
    double w = 0.0;
    for (int a = 0; a < 4; ++a) {
      w = std::max(w, std::abs(plus_div[static_cast<std::size_t>(a)]));
      w = std::max(w, std::abs(minus_div[static_cast<std::size_t>(a)]));
      w = std::max(w, std::abs(plus_dual_div[static_cast<std::size_t>(a)]));
      w = std::max(w, std::abs(minus_dual_div[static_cast<std::size_t>(a)]));
    }
    return w;
  }
};

inline ExtendedResidual extended_residual(const MultipletField& vec_sector,
                                          const MultipletField& pseudo_sector,
                                          const MultipletField* currents, const Vec4d& x) {
  std::array<Antisym, 4> df, dft;
  for (int b = 0; b < 4; ++b) {
    df[static_cast<std::size_t>(b)] = antisym_part(vec_sector.derivative(b, x));
    dft[static_cast<std::size_t>(b)] = antisym_part(pseudo_sector.derivative(b, x));
  }
  std::array<Antisym, 4> dplus, dminus, dplus_dual, dminus_dual;
  for (int b = 0; b < 4; ++b) {
    const auto& f = df[static_cast<std::size_t>(b)];
    const auto& ft = dft[static_cast<std::size_t>(b)];
    dplus[static_cast<std::size_t>(b)] = f + ft;
    dminus[static_cast<std::size_t>(b)] = f - ft;
    dplus_dual[static_cast<std::size_t>(b)] = dual_tensor(dplus[static_cast<std::size_t>(b)]);
    dminus_dual[static_cast<std::size_t>(b)] = dual_tensor(dminus[static_cast<std::size_t>(b)]);
  }

  Vec4c j{}, jt{};
  ExtendedResidual r;
  if (currents) {
    const auto cv = currents->value(x);
    for (std::size_t a = 0; a < 4; ++a) {
      j[a] = cv.vector[a];
      jt[a] = cv.pseudovector[a];
    }
    r.current_div = current_divergence(*currents, x);
  }

  for (int a = 0; a < 4; ++a) {
    cplx dp = 0.0, dm = 0.0, dps = 0.0, dms = 0.0;
    for (int b = 0; b < 4; ++b) {
      const double gb = metric_diag(b);
      dp += gb * dplus[static_cast<std::size_t>(b)].mn(a, b);
      dm += gb * dminus[static_cast<std::size_t>(b)].mn(a, b);
      dps += gb * dplus_dual[static_cast<std::size_t>(b)].mn(a, b);
      dms += gb * dminus_dual[static_cast<std::size_t>(b)].mn(a, b);
    }
    r.plus_div[static_cast<std::size_t>(a)] = dp + j[static_cast<std::size_t>(a)];
    r.minus_div[static_cast<std::size_t>(a)] = dm + j[static_cast<std::size_t>(a)];
    r.plus_dual_div[static_cast<std::size_t>(a)] = dps - jt[static_cast<std::size_t>(a)];
    r.minus_dual_div[static_cast<std::size_t>(a)] = dms + jt[static_cast<std::size_t>(a)];
  }
  return r;
}

/// Convenience: extended residual of a potential-pair field (exact strength
/// fields derived per term).
inline ExtendedResidual extended_residual_from_potentials(const MultipletField& pot,
                                                          const MultipletField* currents,
                                                          const Vec4d& x) {
  const SectorFields s = sector_fields_from_potentials(pot);
  return extended_residual(s.vector_sector, s.pseudovector_sector, currents, x);
}

/// The combined two-charge systems in 3-vector form. Sum combination
/// (E-hat = E + E~, B-hat = B + B~):
///   div E-hat - rho,  div B-hat + rho~,
///   rot E-hat + d_t B-hat - j~,  rot B-hat - d_t E-hat - j;
/// difference combination (E-breve = E - E~, B-breve = B - B~):
///   div E-breve - rho,  div B-breve - rho~,
///   rot E-breve + d_t B-breve + j~,  rot B-breve - d_t E-breve - j.
struct TwoChargeResidual {
  cplx gauss_e{};
  cplx gauss_b{};
  ThreeVec faraday{};
  ThreeVec ampere{};
  double max_abs() const {
    double w = std::max(std::abs(gauss_e), std::abs(gauss_b));
    for (int i = 0; i < 3; ++i)
      w = std::max({w, std::abs(faraday.c[i]), std::abs(ampere.c[i])});
    return w;
  }
};

inline TwoChargeResidual two_charge_residual(const MultipletField& vec_sector,
                                             const MultipletField& pseudo_sector,
                                             const MultipletField* currents, bool difference,
                                             const Vec4d& x) {
  const double sg = difference ? -1.0 : 1.0;
  auto combined = [&](auto part, const TensorMultiplet& a, const TensorMultiplet& b) {
    ThreeVec v = part(a);
    const ThreeVec w = part(b);
    for (int i = 0; i < 3; ++i) v.c[i] += sg * w.c[i];
    return v;
  };
  std::array<TensorMultiplet, 4> dv, dp;
  for (int a = 0; a < 4; ++a) {
    dv[static_cast<std::size_t>(a)] = vec_sector.derivative(a, x);
    dp[static_cast<std::size_t>(a)] = pseudo_sector.derivative(a, x);
  }
  auto div_c = [&](auto part) {
    cplx s = 0.0;
    for (int i = 1; i < 4; ++i)
      s += combined(part, dv[static_cast<std::size_t>(i)], dp[static_cast<std::size_t>(i)])
               .c[static_cast<std::size_t>(i - 1)];
    return s;
  };
  auto curl_c = [&](auto part) {
    const ThreeVec d1 = combined(part, dv[1], dp[1]);
    const ThreeVec d2 = combined(part, dv[2], dp[2]);
    const ThreeVec d3 = combined(part, dv[3], dp[3]);
    return ThreeVec{{d2.c[2] - d3.c[1], d3.c[0] - d1.c[2], d1.c[1] - d2.c[0]}};
  };

  cplx rho = 0.0, rho_m = 0.0;
  ThreeVec je{}, jm{};
  if (currents) {
    const auto cv = currents->value(x);
    rho = charge_density(cv.vector);
    rho_m = charge_density(cv.pseudovector);
    je = current_3vec(cv.vector);
    jm = current_3vec(cv.pseudovector);
  }

  TwoChargeResidual r;
  r.gauss_e = div_c(electric_part) - rho;
  r.gauss_b = div_c(magnetic_part) + sg * rho_m;
  const ThreeVec rot_e = curl_c(electric_part), rot_b = curl_c(magnetic_part);
  const ThreeVec dt_e = combined(electric_part, dv[0], dp[0]);
  const ThreeVec dt_b = combined(magnetic_part, dv[0], dp[0]);
  for (int i = 0; i < 3; ++i) {
    r.faraday.c[i] = rot_e.c[i] + dt_b.c[i] - sg * jm.c[i];
    r.ampere.c[i] = rot_b.c[i] - dt_e.c[i] - je.c[i];
  }
  return r;
}

// ---------------------------------------------------------------------------
// Duality transformations
// ---------------------------------------------------------------------------

/// Continuous duality rotation on a potential or current pair, applied to
/// the (vector, pseudovector) slots of every term:
///   V' = cos(chi) V + sin(chi) V~,  V~' = -sin(chi) V + cos(chi) V~.
inline MultipletField duality_rotate_pair(const MultipletField& f, double chi) {
  const double c = std::cos(chi), s = std::sin(chi);
  MultipletField out = f;
  for (auto& term : out.terms)
    for (std::size_t l = 0; l < 4; ++l) {
      const cplx v = term.amplitude.vector[l];
      const cplx pv = term.amplitude.pseudovector[l];
      term.amplitude.vector[l] = c * v + s * pv;
      term.amplitude.pseudovector[l] = -s * v + c * pv;
    }
  return out;
}

/// Forward rotation of combined strengths induced by the potential rotation:
///   F+' = cos F+ - sin F+*,   F+*' = sin F+ + cos F+*,
///   F-' = cos F- + sin F-*,   F-*' = -sin F- + cos F-*.
inline CombinedStrength duality_rotate(const CombinedStrength& f, double chi) {
  const double c = std::cos(chi), s = std::sin(chi);
  CombinedStrength out;
  out.plus = f.plus * c - f.plus_dual * s;
  out.plus_dual = f.plus * s + f.plus_dual * c;
  out.minus = f.minus * c + f.minus_dual * s;
  out.minus_dual = f.minus * (-s) + f.minus_dual * c;
  return out;
}

/// A dyonic configuration: one potential-pair field and one current-pair
/// field (either may be empty).
struct DyonicScenario {
  MultipletField potentials;
  MultipletField currents;
};

/// System equivariance under the duality rotation: the residual of the
/// rotated configuration must equal the rotation-mixed residual of the
/// original. Returns the maximum discrepancy over the sampled points.
inline double duality_invariance_test(const DyonicScenario& sc, double chi,
                                      const std::vector<Vec4d>& points) {
  const double c = std::cos(chi), s = std::sin(chi);
  const MultipletField pot_rot = duality_rotate_pair(sc.potentials, chi);
  const MultipletField cur_rot = duality_rotate_pair(sc.currents, chi);
  double worst = 0.0;
  for (const auto& x : points) {
    const ExtendedResidual r0 = extended_residual_from_potentials(sc.potentials, &sc.currents, x);
    const ExtendedResidual r1 = extended_residual_from_potentials(pot_rot, &cur_rot, x);
    for (std::size_t a = 0; a < 4; ++a) {
      // [r+', s+'] = R(chi)[r+, s+], [r-', s-'] = R(-chi)[r-, s-]
      const cplx exp_p = c * r0.plus_div[a] - s * r0.plus_dual_div[a];
      const cplx exp_ps = s * r0.plus_div[a] + c * r0.plus_dual_div[a];
      const cplx exp_m = c * r0.minus_div[a] + s * r0.minus_dual_div[a];
      const cplx exp_ms = -s * r0.minus_div[a] + c * r0.minus_dual_div[a];
      worst = std::max(worst, std::abs(r1.plus_div[a] - exp_p));
      worst = std::max(worst, std::abs(r1.plus_dual_div[a] - exp_ps));
      worst = std::max(worst, std::abs(r1.minus_div[a] - exp_m));
      worst = std::max(worst, std::abs(r1.minus_dual_div[a] - exp_ms));
    }
  }
  return worst;
}

/// Outward flux of the static monopole field B = -g rhat / (4 pi r^2)
/// through a sphere of the given radius centered on the source; Gauss's law
/// gives -g at any radius.
inline double monopole_flux_test(double g, double radius, int order) {
  auto field = [g](const Vec3d& p) {
    const double r2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    const double f = -g / (4.0 * std::numbers::pi * r2 * std::sqrt(r2));
    return Vec3d{f * p[0], f * p[1], f * p[2]};
  };
  return sphere_flux(field, {0.0, 0.0, 0.0}, radius, order);
}

}  // namespace dkf
