#pragma once

#include <stdexcept>
#include <vector>

#include "dkfield/bispinor.hpp"
#include "dkfield/fields.hpp"
#include "dkfield/nullspace.hpp"

namespace dkf {

namespace detail {
/// All four first derivatives of a field at a point, index = lower a.
struct Jet {
  TensorMultiplet v;
  std::array<TensorMultiplet, 4> d;
};
inline Jet jet(const MultipletField& f, const Vec4d& x) {
  Jet j;
  j.v = f.value(x);
  for (int a = 0; a < 4; ++a) j.d[static_cast<std::size_t>(a)] = f.derivative(a, x);
  return j;
}
}  // namespace detail

/// Residual of the full massive tensor system, one entry per equation:
///   div_vector:        d_l Phi^l + m Phi
///   div_pseudovector:  d_l Phi~^l + m Phi~
///   vector_eq[k]:      d^k Phi + d_l Phi^{kl} - m Phi^k
///   pseudovector_eq[k]: d^k Phi~ - (1/2) eps^{kcmn} d_c Phi_mn - m Phi~^k
///   antisym_eq[s]:     d^d Phi^k - d^k Phi^d + eps^{dkcl} d_c Phi~_l - m Phi^{dk}
struct DkResidual {
  cplx div_vector{};
  cplx div_pseudovector{};
  std::array<cplx, 4> vector_eq{};
  std::array<cplx, 4> pseudovector_eq{};
  std::array<cplx, 6> antisym_eq{};

  double max_abs() const {
    double w = std::max(std::abs(div_vector), std::abs(div_pseudovector));
    for (const auto& c : vector_eq) w = std::max(w, std::abs(c));
    for (const auto& c : pseudovector_eq) w = std::max(w, std::abs(c));
    for (const auto& c : antisym_eq) w = std::max(w, std::abs(c));
    return w;
  }
};

inline DkResidual dk_residual(const MultipletField& f, double m, const Vec4d& x) {
  const auto j = detail::jet(f, x);
  DkResidual r;
  for (int l = 0; l < 4; ++l) {
    const auto& dl = j.d[static_cast<std::size_t>(l)];
    const double gl = metric_diag(l);
    r.div_vector += gl * dl.vector[static_cast<std::size_t>(l)];
    r.div_pseudovector += gl * dl.pseudovector[static_cast<std::size_t>(l)];
  }
  r.div_vector += m * j.v.scalar;
  r.div_pseudovector += m * j.v.pseudoscalar;

  for (int k = 0; k < 4; ++k) {
    const double gk = metric_diag(k);
    cplx veq = gk * j.d[static_cast<std::size_t>(k)].scalar -
               m * gk * j.v.vector[static_cast<std::size_t>(k)];
    for (int l = 0; l < 4; ++l)
      veq += gk * metric_diag(l) * j.d[static_cast<std::size_t>(l)].antisym_mn(k, l);
    r.vector_eq[static_cast<std::size_t>(k)] = veq;

    cplx pveq = gk * j.d[static_cast<std::size_t>(k)].pseudoscalar -
                m * gk * j.v.pseudovector[static_cast<std::size_t>(k)];
    for (int c = 0; c < 4; ++c)
      for (int mm = 0; mm < 4; ++mm)
        for (int nn = 0; nn < 4; ++nn) {
          const int e = levi_civita(k, c, mm, nn);
          if (e) pveq -= 0.5 * static_cast<double>(e) * j.d[static_cast<std::size_t>(c)].antisym_mn(mm, nn);
        }
    r.pseudovector_eq[static_cast<std::size_t>(k)] = pveq;
  }

  for (std::size_t s = 0; s < 6; ++s) {
    const auto [d, k] = kAntisymPairs[s];
    const double gd = metric_diag(d), gk = metric_diag(k);
    cplx aeq = gd * gk * (j.d[static_cast<std::size_t>(d)].vector[static_cast<std::size_t>(k)] -
                          j.d[static_cast<std::size_t>(k)].vector[static_cast<std::size_t>(d)]) -
               m * gd * gk * j.v.antisym[s];
    for (int c = 0; c < 4; ++c)
      for (int l = 0; l < 4; ++l) {
        const int e = levi_civita(d, k, c, l);
        if (e)
          aeq += static_cast<double>(e) *
                 j.d[static_cast<std::size_t>(c)].pseudovector[static_cast<std::size_t>(l)];
      }
    r.antisym_eq[s] = aeq;
  }
  return r;
}

/// Residual of the 2-spinor block system
///   (A)  i s^a d_a xi - m h      (A') i sbar^a d_a h - m xi
///   (B)  i sbar^a d_a eta - m delta   (B') i s^a d_a delta - m eta
struct SpinorResidual {
  Mat2 eq_a, eq_a_prime, eq_b, eq_b_prime;
  double max_abs() const {
    return std::max(std::max(eq_a.max_abs(), eq_a_prime.max_abs()),
                    std::max(eq_b.max_abs(), eq_b_prime.max_abs()));
  }
};

inline SpinorResidual spinor_residual(const MultipletField& f, double m, const Vec4d& x) {
  const Bispinor u = compose(f.value(x));
  std::array<Bispinor, 4> du;
  for (int a = 0; a < 4; ++a)
    du[static_cast<std::size_t>(a)] = compose(f.derivative(a, x));  // compose is linear
  SpinorResidual r;
  r.eq_a = u.h() * (-m);
  r.eq_a_prime = u.xi() * (-m);
  r.eq_b = u.delta() * (-m);
  r.eq_b_prime = u.eta() * (-m);
  for (int a = 0; a < 4; ++a) {
    const auto& d = du[static_cast<std::size_t>(a)];
    const cplx i{0.0, 1.0};
    r.eq_a = r.eq_a + i * (sigma2(a) * d.xi());
    r.eq_a_prime = r.eq_a_prime + i * (sigma2_bar(a) * d.h());
    r.eq_b = r.eq_b + i * (sigma2_bar(a) * d.eta());
    r.eq_b_prime = r.eq_b_prime + i * (sigma2(a) * d.delta());
  }
  return r;
}

/// Joint evaluation of the spinor and tensor residuals; the two must vanish
/// together.
struct EquivalenceResult {
  double spinor;
  double tensor;
};

inline EquivalenceResult spinor_tensor_equivalence(const MultipletField& f, double m,
                                                   const Vec4d& x) {
  return {spinor_residual(f, m, x).max_abs(), dk_residual(f, m, x).max_abs()};
}

/// Massive vector (Proca) system:
///   d^l A_l;  d^l F_kl - m A_k;  eps^{kcmn} d_c F_mn;  d_d A_k - d_k A_d - m F_dk
struct ProcaResidual {
  cplx lorentz{};
  std::array<cplx, 4> field_eq{};
  std::array<cplx, 4> bianchi{};
  std::array<cplx, 6> curl_eq{};
  double max_abs() const {
    double w = std::abs(lorentz);
    for (const auto& c : field_eq) w = std::max(w, std::abs(c));
    for (const auto& c : bianchi) w = std::max(w, std::abs(c));
    for (const auto& c : curl_eq) w = std::max(w, std::abs(c));
    return w;
  }
};

inline ProcaResidual proca_vector_residual(const MultipletField& f, double m, const Vec4d& x) {
  if (m <= 0.0)
    throw std::invalid_argument("proca_vector_residual: m must be > 0 (use the massless split)");
  const auto j = detail::jet(f, x);
  ProcaResidual r;
  for (int l = 0; l < 4; ++l)
    r.lorentz += metric_diag(l) * j.d[static_cast<std::size_t>(l)].vector[static_cast<std::size_t>(l)];
  for (int k = 0; k < 4; ++k) {
    cplx feq = -m * j.v.vector[static_cast<std::size_t>(k)];
    for (int l = 0; l < 4; ++l)
      feq += metric_diag(l) * j.d[static_cast<std::size_t>(l)].antisym_mn(k, l);
    r.field_eq[static_cast<std::size_t>(k)] = feq;
    cplx beq = 0.0;
    for (int c = 0; c < 4; ++c)
      for (int mm = 0; mm < 4; ++mm)
        for (int nn = 0; nn < 4; ++nn) {
          const int e = levi_civita(k, c, mm, nn);
          if (e) beq += static_cast<double>(e) * j.d[static_cast<std::size_t>(c)].antisym_mn(mm, nn);
        }
    r.bianchi[static_cast<std::size_t>(k)] = beq;
  }
  for (std::size_t s = 0; s < 6; ++s) {
    const auto [d, k] = kAntisymPairs[s];
    r.curl_eq[s] = j.d[static_cast<std::size_t>(d)].vector[static_cast<std::size_t>(k)] -
                   j.d[static_cast<std::size_t>(k)].vector[static_cast<std::size_t>(d)] -
                   m * j.v.antisym[s];
  }
  return r;
}

/// Massive pseudovector system:
///   d^l A~_l;  d^l F_kl;  (1/2) eps^{kcmn} d_c F_mn + m A~^k;
///   eps^{dkcl} d_c A~_l - m F^{dk}
struct PseudoProcaResidual {
  cplx lorentz{};
  std::array<cplx, 4> field_eq{};
  std::array<cplx, 4> dual_eq{};
  std::array<cplx, 6> curl_eq{};
  double max_abs() const {
    double w = std::abs(lorentz);
    for (const auto& c : field_eq) w = std::max(w, std::abs(c));
    for (const auto& c : dual_eq) w = std::max(w, std::abs(c));
    for (const auto& c : curl_eq) w = std::max(w, std::abs(c));
    return w;
  }
};

inline PseudoProcaResidual pseudovector_proca_residual(const MultipletField& f, double m,
                                                       const Vec4d& x) {
  if (m <= 0.0)
    throw std::invalid_argument(
        "pseudovector_proca_residual: m must be > 0 (use the massless split)");
  const auto j = detail::jet(f, x);
  PseudoProcaResidual r;
  for (int l = 0; l < 4; ++l)
    r.lorentz +=
        metric_diag(l) * j.d[static_cast<std::size_t>(l)].pseudovector[static_cast<std::size_t>(l)];
  for (int k = 0; k < 4; ++k) {
    cplx feq = 0.0;
    for (int l = 0; l < 4; ++l)
      feq += metric_diag(l) * j.d[static_cast<std::size_t>(l)].antisym_mn(k, l);
    r.field_eq[static_cast<std::size_t>(k)] = feq;
    cplx deq = m * metric_diag(k) * j.v.pseudovector[static_cast<std::size_t>(k)];
    for (int c = 0; c < 4; ++c)
      for (int mm = 0; mm < 4; ++mm)
        for (int nn = 0; nn < 4; ++nn) {
          const int e = levi_civita(k, c, mm, nn);
          if (e) deq += 0.5 * static_cast<double>(e) * j.d[static_cast<std::size_t>(c)].antisym_mn(mm, nn);
        }
    r.dual_eq[static_cast<std::size_t>(k)] = deq;
  }
  for (std::size_t s = 0; s < 6; ++s) {
    const auto [d, k] = kAntisymPairs[s];
    cplx ceq = -m * metric_diag(d) * metric_diag(k) * j.v.antisym[s];
    for (int c = 0; c < 4; ++c)
      for (int l = 0; l < 4; ++l) {
        const int e = levi_civita(d, k, c, l);
        if (e)
          ceq += static_cast<double>(e) *
                 j.d[static_cast<std::size_t>(c)].pseudovector[static_cast<std::size_t>(l)];
      }
    r.curl_eq[s] = ceq;
  }
  return r;
}

/// Scalar sector: d^l Phi_l + m Phi;  d_l Phi - m Phi_l;  d^d Phi^k - d^k Phi^d.
struct ScalarSectorResidual {
  cplx proca_div{};
  std::array<cplx, 4> proca_grad{};
  std::array<cplx, 6> curl{};
  double max_abs() const {
    double w = std::abs(proca_div);
    for (const auto& c : proca_grad) w = std::max(w, std::abs(c));
    for (const auto& c : curl) w = std::max(w, std::abs(c));
    return w;
  }
};

inline ScalarSectorResidual scalar_sector_residual(const MultipletField& f, double m,
                                                   const Vec4d& x) {
  const auto j = detail::jet(f, x);
  ScalarSectorResidual r;
  for (int l = 0; l < 4; ++l)
    r.proca_div += metric_diag(l) * j.d[static_cast<std::size_t>(l)].vector[static_cast<std::size_t>(l)];
  r.proca_div += m * j.v.scalar;
  for (int l = 0; l < 4; ++l)
    r.proca_grad[static_cast<std::size_t>(l)] =
        j.d[static_cast<std::size_t>(l)].scalar - m * j.v.vector[static_cast<std::size_t>(l)];
  for (std::size_t s = 0; s < 6; ++s) {
    const auto [d, k] = kAntisymPairs[s];
    r.curl[s] = metric_diag(d) * metric_diag(k) *
                (j.d[static_cast<std::size_t>(d)].vector[static_cast<std::size_t>(k)] -
                 j.d[static_cast<std::size_t>(k)].vector[static_cast<std::size_t>(d)]);
  }
  return r;
}

/// Pseudoscalar sector: d^l Phi~_l + m Phi~;  d^k Phi~ - m Phi~^k;
/// eps^{dkcl} d_c Phi~_l (dual-curl compatibility).
struct PseudoscalarSectorResidual {
  cplx proca_div{};
  std::array<cplx, 4> proca_grad{};
  std::array<cplx, 6> dual_curl{};
  double max_abs() const {
    double w = std::abs(proca_div);
    for (const auto& c : proca_grad) w = std::max(w, std::abs(c));
    for (const auto& c : dual_curl) w = std::max(w, std::abs(c));
    return w;
  }
};

inline PseudoscalarSectorResidual pseudoscalar_sector_residual(const MultipletField& f, double m,
                                                               const Vec4d& x) {
  const auto j = detail::jet(f, x);
  PseudoscalarSectorResidual r;
  for (int l = 0; l < 4; ++l)
    r.proca_div +=
        metric_diag(l) * j.d[static_cast<std::size_t>(l)].pseudovector[static_cast<std::size_t>(l)];
  r.proca_div += m * j.v.pseudoscalar;
  for (int k = 0; k < 4; ++k)
    r.proca_grad[static_cast<std::size_t>(k)] =
        metric_diag(k) * (j.d[static_cast<std::size_t>(k)].pseudoscalar -
                          m * j.v.pseudovector[static_cast<std::size_t>(k)]);
  for (std::size_t s = 0; s < 6; ++s) {
    const auto [d, k] = kAntisymPairs[s];
    cplx c6 = 0.0;
    for (int c = 0; c < 4; ++c)
      for (int l = 0; l < 4; ++l) {
        const int e = levi_civita(d, k, c, l);
        if (e)
          c6 += static_cast<double>(e) *
                j.d[static_cast<std::size_t>(c)].pseudovector[static_cast<std::size_t>(l)];
      }
    r.dual_curl[s] = c6;
  }
  return r;
}

// ---------------------------------------------------------------------------
// 3-vector extraction. Multiplet components carry lower indices, so
//   E_k = -F_{0k}, B = (F_23, F_31, F_12), V^0 = V_0, V^k = -V_k.
// ---------------------------------------------------------------------------

struct ThreeVec {
  std::array<cplx, 3> c{};
  ThreeVec operator-(const ThreeVec& o) const {
    return {{c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]}};
  }
  ThreeVec operator+(const ThreeVec& o) const {
    return {{c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}};
  }
};

inline ThreeVec electric_part(const TensorMultiplet& t) {
  return {{-t.antisym[0], -t.antisym[1], -t.antisym[2]}};
}
inline ThreeVec magnetic_part(const TensorMultiplet& t) {
  return {{t.antisym[3], t.antisym[4], t.antisym[5]}};
}
/// The 3-vector source components (rho, jvec) of a stored lower-index
/// current. The 3-vector systems couple to the sign-flipped time component,
/// the same overall flip the potentials carry: rho = -j_0, jvec = (j_1,
/// j_2, j_3). With this reading the sector systems and the extended system
/// accept one and the same current field.
inline cplx charge_density(const std::array<cplx, 4>& lower) { return -lower[0]; }
inline ThreeVec current_3vec(const std::array<cplx, 4>& lower) {
  return {{lower[1], lower[2], lower[3]}};
}

namespace detail {
inline ThreeVec curl_of(const std::array<TensorMultiplet, 4>& d,
                        ThreeVec (*part)(const TensorMultiplet&)) {
  const ThreeVec d1 = part(d[1]), d2 = part(d[2]), d3 = part(d[3]);
  return {{d2.c[2] - d3.c[1], d3.c[0] - d1.c[2], d1.c[1] - d2.c[0]}};
}
inline cplx div_of(const std::array<TensorMultiplet, 4>& d,
                   ThreeVec (*part)(const TensorMultiplet&)) {
  return part(d[1]).c[0] + part(d[2]).c[1] + part(d[3]).c[2];
}
}  // namespace detail

/// 4-divergence d^b j_b of the electric (vector slot) and magnetic
/// (pseudovector slot) currents; a sourced system can only close when these
/// vanish, so they are reported alongside the residuals.
struct CurrentDivergence {
  cplx electric{};
  cplx magnetic{};
};

inline CurrentDivergence current_divergence(const MultipletField& currents, const Vec4d& x) {
  CurrentDivergence cd;
  for (int l = 0; l < 4; ++l) {
    const auto dl = currents.derivative(l, x);
    cd.electric += metric_diag(l) * dl.vector[static_cast<std::size_t>(l)];
    cd.magnetic += metric_diag(l) * dl.pseudovector[static_cast<std::size_t>(l)];
  }
  return cd;
}

/// Massless vector (S=1) system in 3-vector form. Field equations:
///   div E - j^0,  div B,  rot E + dB/dt,  rot B - dE/dt - j
/// and the potential relations:
///   dA^0/dt + div A,  -dA/dt - grad A^0 - E,  rot A - B.
struct MaxwellResidual {
  cplx gauss_e{};
  cplx gauss_b{};
  ThreeVec faraday{};
  ThreeVec ampere{};
  cplx lorentz{};
  ThreeVec e_from_potentials{};
  ThreeVec b_from_potentials{};
  CurrentDivergence current_div{};

  double field_max_abs() const {
    double w = std::max(std::abs(gauss_e), std::abs(gauss_b));
    for (int i = 0; i < 3; ++i)
      w = std::max({w, std::abs(faraday.c[i]), std::abs(ampere.c[i])});
    return w;
  }
  double potential_max_abs() const {
    double w = std::abs(lorentz);
    for (int i = 0; i < 3; ++i)
      w = std::max({w, std::abs(e_from_potentials.c[i]), std::abs(b_from_potentials.c[i])});
    return w;
  }
  double max_abs() const { return std::max(field_max_abs(), potential_max_abs()); }
};

inline MaxwellResidual maxwell_residual(const MultipletField& f, const MultipletField* currents,
                                        const Vec4d& x) {
  const auto j = detail::jet(f, x);
  MaxwellResidual r;
  const ThreeVec e = electric_part(j.v), b = magnetic_part(j.v);
  const ThreeVec dt_e = electric_part(j.d[0]), dt_b = magnetic_part(j.d[0]);
  const ThreeVec rot_e = detail::curl_of(j.d, electric_part);
  const ThreeVec rot_b = detail::curl_of(j.d, magnetic_part);

  cplx rho = 0.0;
  ThreeVec jv{};
  if (currents) {
    const auto cv = currents->value(x);
    rho = charge_density(cv.vector);
    jv = current_3vec(cv.vector);
    r.current_div = current_divergence(*currents, x);
  }

  r.gauss_e = detail::div_of(j.d, electric_part) - rho;
  r.gauss_b = detail::div_of(j.d, magnetic_part);
  r.faraday = rot_e + dt_b;
  r.ampere = rot_b - dt_e - jv;

  // Potential rows in the variables that make F_kl = d_k A_l - d_l A_k
  // consistent with E_k = -F_{0k}: the scalar potential is -A_0 and the
  // 3-potential is the lower spatial triple (A_1, A_2, A_3).
  r.lorentz = -j.d[0].vector[0] + j.d[1].vector[1] + j.d[2].vector[2] + j.d[3].vector[3];
  for (int i = 0; i < 3; ++i) {
    const std::size_t li = static_cast<std::size_t>(i + 1);
    // E_k = d_k A_0 - d_0 A_k
    r.e_from_potentials.c[i] = j.d[static_cast<std::size_t>(i + 1)].vector[0] -
                               j.d[0].vector[li] - e.c[static_cast<std::size_t>(i)];
  }
  // B = rot(A_1, A_2, A_3)
  r.b_from_potentials.c[0] = j.d[2].vector[3] - j.d[3].vector[2] - b.c[0];
  r.b_from_potentials.c[1] = j.d[3].vector[1] - j.d[1].vector[3] - b.c[1];
  r.b_from_potentials.c[2] = j.d[1].vector[2] - j.d[2].vector[1] - b.c[2];
  return r;
}

/// Massless pseudovector (S=1~) system in 3-vector form. Field equations:
///   div E~,  div B~ + j~^0,  rot E~ + dB~/dt - j~,  rot B~ - dE~/dt
/// and the potential relations:
///   dA~^0/dt + div A~,  -dA~/dt - grad A~^0 - B~,  rot A~ - E~.
struct PseudoMaxwellResidual {
  cplx gauss_e{};
  cplx gauss_b{};
  ThreeVec faraday{};
  ThreeVec ampere{};
  cplx lorentz{};
  ThreeVec b_from_potentials{};
  ThreeVec e_from_potentials{};
  CurrentDivergence current_div{};

  double field_max_abs() const {
    double w = std::max(std::abs(gauss_e), std::abs(gauss_b));
    for (int i = 0; i < 3; ++i)
      w = std::max({w, std::abs(faraday.c[i]), std::abs(ampere.c[i])});
    return w;
  }
  double potential_max_abs() const {
    double w = std::abs(lorentz);
    for (int i = 0; i < 3; ++i)
      w = std::max({w, std::abs(e_from_potentials.c[i]), std::abs(b_from_potentials.c[i])});
    return w;
  }
  double max_abs() const { return std::max(field_max_abs(), potential_max_abs()); }
};

inline PseudoMaxwellResidual pseudo_maxwell_residual(const MultipletField& f,
                                                     const MultipletField* currents,
                                                     const Vec4d& x) {
  const auto j = detail::jet(f, x);
  PseudoMaxwellResidual r;
  const ThreeVec e = electric_part(j.v), b = magnetic_part(j.v);
  const ThreeVec dt_e = electric_part(j.d[0]), dt_b = magnetic_part(j.d[0]);
  const ThreeVec rot_e = detail::curl_of(j.d, electric_part);
  const ThreeVec rot_b = detail::curl_of(j.d, magnetic_part);

  cplx rho_m = 0.0;
  ThreeVec jm{};
  if (currents) {
    const auto cv = currents->value(x);
    rho_m = charge_density(cv.pseudovector);
    jm = current_3vec(cv.pseudovector);
    r.current_div = current_divergence(*currents, x);
  }

  r.gauss_e = detail::div_of(j.d, electric_part);
  r.gauss_b = detail::div_of(j.d, magnetic_part) + rho_m;
  r.faraday = rot_e + dt_b - jm;
  r.ampere = rot_b - dt_e;

  // Potential rows from the dual-curl strength relation
  // F~^{dk} = eps^{dkcl} d_c A~_l, which in 3-vector form reads
  //   E~ = rot(A~_1, A~_2, A~_3)  and  B~_k = d_0 A~_k - d_k A~_0.
  r.lorentz = -j.d[0].pseudovector[0] + j.d[1].pseudovector[1] + j.d[2].pseudovector[2] +
              j.d[3].pseudovector[3];
  for (int i = 0; i < 3; ++i) {
    const std::size_t li = static_cast<std::size_t>(i + 1);
    r.b_from_potentials.c[i] = j.d[0].pseudovector[li] -
                               j.d[static_cast<std::size_t>(i + 1)].pseudovector[0] -
                               b.c[static_cast<std::size_t>(i)];
  }
  r.e_from_potentials.c[0] = j.d[2].pseudovector[3] - j.d[3].pseudovector[2] - e.c[0];
  r.e_from_potentials.c[1] = j.d[3].pseudovector[1] - j.d[1].pseudovector[3] - e.c[1];
  r.e_from_potentials.c[2] = j.d[1].pseudovector[2] - j.d[2].pseudovector[1] - e.c[2];
  return r;
}

/// Residual of the potential-sector spinor pair (A'), (B'):
///   i sbar^a d_a h - xi   and   i s^a d_a delta - eta.
/// For both massless sectors these imply the Lorentz condition on the
/// respective 4-potential.
struct PotentialSpinorResidual {
  Mat2 eq_a_prime, eq_b_prime;
  double max_abs() const { return std::max(eq_a_prime.max_abs(), eq_b_prime.max_abs()); }
};

inline PotentialSpinorResidual potential_spinor_residual(const MultipletField& f,
                                                         const Vec4d& x) {
  const Bispinor u = compose(f.value(x));
  PotentialSpinorResidual r;
  r.eq_a_prime = -u.xi();
  r.eq_b_prime = -u.eta();
  for (int a = 0; a < 4; ++a) {
    const Bispinor d = compose(f.derivative(a, x));
    const cplx i{0.0, 1.0};
    r.eq_a_prime = r.eq_a_prime + i * (sigma2_bar(a) * d.h());
    r.eq_b_prime = r.eq_b_prime + i * (sigma2(a) * d.delta());
  }
  return r;
}

// ---------------------------------------------------------------------------
// On-shell constructors
// ---------------------------------------------------------------------------

/// Fourier matrix of the full tensor system for a single plane wave: the
/// column for basis amplitude e_j is the 16-component residual at x = 0.
inline CMatrix dk_fourier_matrix(const Vec4d& k, double m) {
  CMatrix mat(16, std::vector<cplx>(16, cplx(0.0)));
  for (std::size_t col = 0; col < 16; ++col) {
    MultipletField f;
    PlaneWaveTerm t;
    t.k = k;
    t.amplitude.component(col) = 1.0;
    f.terms.push_back(t);
    const DkResidual r = dk_residual(f, m, Vec4d{0.0, 0.0, 0.0, 0.0});
    mat[0][col] = r.div_vector;
    mat[1][col] = r.div_pseudovector;
    for (std::size_t i = 0; i < 4; ++i) {
      mat[2 + i][col] = r.vector_eq[i];
      mat[6 + i][col] = r.pseudovector_eq[i];
    }
    for (std::size_t i = 0; i < 6; ++i) mat[10 + i][col] = r.antisym_eq[i];
  }
  return mat;
}

/// Basis of on-shell polarization multiplets for wavevector k and mass m,
/// from the Fourier-space null space of the tensor system. Empty when k is
/// off shell.
inline std::vector<TensorMultiplet> dk_onshell_basis(const Vec4d& k, double m) {
  const auto basis = nullspace_basis(dk_fourier_matrix(k, m), 1e-9);
  std::vector<TensorMultiplet> out;
  for (const auto& v : basis) {
    TensorMultiplet t;
    for (std::size_t i = 0; i < 16; ++i) t.component(i) = v[i];
    out.push_back(t);
  }
  return out;
}

/// On-shell plane wave through the bispinor route: U0 = (gamma^a k_a + m) W
/// annihilates (gamma^a k_a - m) when k^2 = m^2, independent of the tensor
/// system evaluation path.
inline TensorMultiplet dirac_onshell_multiplet(const Vec4d& k, double m, const Mat4& w) {
  Mat4 kslash;
  for (int a = 0; a < 4; ++a) kslash = kslash + gamma(a) * lower_component(k, a);
  return decompose(Bispinor{(kslash + Mat4::identity() * m) * w});
}

/// Vacuum massless S=1 wave: A_l = eps_l exp(-i k.x) with null k and
/// k.eps = 0; F is the exact curl of A.
inline MultipletField vacuum_vector_wave(const Vec4d& k, const Vec4c& eps) {
  PlaneWaveTerm t;
  t.k = k;
  for (std::size_t l = 0; l < 4; ++l) t.amplitude.vector[l] = eps[l];
  for (std::size_t s = 0; s < 6; ++s) {
    const auto [mm, nn] = kAntisymPairs[s];
    t.amplitude.antisym[s] =
        cplx(0.0, -1.0) * (lower_component(k, mm) * eps[static_cast<std::size_t>(nn)] -
                           lower_component(k, nn) * eps[static_cast<std::size_t>(mm)]);
  }
  MultipletField f;
  f.terms.push_back(t);
  return f;
}

/// Vacuum massless S=1~ wave: A~_l = eps_l exp(-i k.x); the strength is the
/// dual curl F~^{dk} = eps^{dkcl} d_c A~_l.
inline MultipletField vacuum_pseudovector_wave(const Vec4d& k, const Vec4c& eps) {
  PlaneWaveTerm t;
  t.k = k;
  for (std::size_t l = 0; l < 4; ++l) t.amplitude.pseudovector[l] = eps[l];
  for (std::size_t s = 0; s < 6; ++s) {
    const auto [mm, nn] = kAntisymPairs[s];
    cplx f_upper = 0.0;  // F~^{mn}
    for (int c = 0; c < 4; ++c)
      for (int l = 0; l < 4; ++l) {
        const int e = levi_civita(mm, nn, c, l);
        if (e)
          f_upper += static_cast<double>(e) * cplx(0.0, -lower_component(k, c)) *
                     eps[static_cast<std::size_t>(l)];
      }
    t.amplitude.antisym[s] = metric_diag(mm) * metric_diag(nn) * f_upper;
  }
  MultipletField f;
  f.terms.push_back(t);
  return f;
}

}  // namespace dkf
