#pragma once

#include <chrono>
#include <random>

#include "dkfield/algebra_checks.hpp"
#include "dkfield/extended.hpp"
#include "dkfield/lorentz.hpp"
#include "dkfield/report.hpp"
#include "dkfield/sectors.hpp"

namespace dkf {

/// Shared knobs for the verification suites. A tolerance_override of zero
/// keeps each check's documented default.
struct SuiteConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  double tolerance_override = 0.0;
  double chi = 0.7;
};

namespace detail {

class SuiteRecorder {
 public:
  SuiteRecorder(std::string suite, const SuiteConfig& cfg) : suite_(std::move(suite)), cfg_(cfg) {}

  template <typename F>
  void run(const std::string& check, double default_tol, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    const double residual = body();
    const auto t1 = std::chrono::steady_clock::now();
    CheckResult r;
    r.suite = suite_;
    r.check = check;
    r.max_residual = residual;
    r.tolerance = cfg_.tolerance_override > 0.0 ? cfg_.tolerance_override : default_tol;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    results_.push_back(r);
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  SuiteConfig cfg_;
  std::vector<CheckResult> results_;
};

inline SL2CElement random_sl2c(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto unit = [&] {
    Vec3d v;
    double n;
    do {
      v = {u(rng), u(rng), u(rng)};
      n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    } while (n < 1e-3);
    return Vec3d{v[0] / n, v[1] / n, v[2] / n};
  };
  std::uniform_real_distribution<double> rap(-2.0, 2.0);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  return sl2c_boost(unit(), rap(rng)) * sl2c_rotation(unit(), ang(rng));
}

/// Massive wavevector with k^2 = m^2 and random spatial part.
inline Vec4d random_massive_k(double m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec4d k{0.0, u(rng), u(rng), u(rng)};
  k[0] = std::sqrt(m * m + k[1] * k[1] + k[2] * k[2] + k[3] * k[3]);
  return k;
}

inline TensorMultiplet random_onshell_multiplet(const Vec4d& k, double m, std::mt19937_64& rng) {
  const auto basis = dk_onshell_basis(k, m);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TensorMultiplet t;
  for (const auto& b : basis) t = t + b * cplx(u(rng), u(rng));
  return t;
}

/// Dyonic plane-wave potentials in per-term Lorentz gauge.
inline MultipletField random_gauge_potentials(std::mt19937_64& rng, int nterms, bool null_k) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MultipletField f;
  for (int t = 0; t < nterms; ++t) {
    PlaneWaveTerm term;
    if (null_k) {
      const Vec3d n{u(rng), u(rng), u(rng)};
      const double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]) + 1e-12;
      term.k = {1.0, n[0] / nn, n[1] / nn, n[2] / nn};
    } else {
      term.k = {u(rng) + 2.0, u(rng), u(rng), u(rng)};
    }
    auto fill = [&](std::array<cplx, 4>& slot) {
      for (std::size_t l = 1; l < 4; ++l) slot[l] = cplx(u(rng), u(rng));
      cplx kdot = 0.0;
      for (std::size_t l = 1; l < 4; ++l) kdot += term.k[l] * slot[l];
      slot[0] = -kdot / term.k[0];
    };
    fill(term.amplitude.vector);
    fill(term.amplitude.pseudovector);
    f.terms.push_back(term);
  }
  return f;
}

inline MultipletField matched_currents(const MultipletField& pot) {
  MultipletField cur;
  for (const auto& term : pot.terms) {
    PlaneWaveTerm c;
    c.k = term.k;
    const double k2 = wave_norm2(term.k);
    for (std::size_t l = 0; l < 4; ++l) {
      c.amplitude.vector[l] = -k2 * term.amplitude.vector[l];
      c.amplitude.pseudovector[l] = -k2 * term.amplitude.pseudovector[l];
    }
    cur.terms.push_back(c);
  }
  return cur;
}

}  // namespace detail

/// Algebra suite: trace identities, sigma triple products, Clifford and
/// metric-spinor relations, all by full index enumeration.
inline std::vector<CheckResult> run_algebra_suite(const SuiteConfig& cfg) {
  detail::SuiteRecorder rec("algebra", cfg);
  rec.run("clifford_relation", 1e-12, [] { return verify_clifford_relation(); });
  rec.run("gamma5_relations", 1e-12, [] { return verify_gamma5_relations(); });
  rec.run("metric_spinor_relations", 1e-12, [] { return verify_metric_spinor_relations(); });
  rec.run("trace_identities", 1e-12,
          [&] { return verify_trace_identities(cfg.seed, cfg.trials); });
  rec.run("sigma_triple_products", 1e-12, [] { return verify_sigma_triple_products(); });
  return rec.take();
}

/// Round-trip suite: decompose(compose(t)) = t and compose(decompose(U)) = U
/// on seeded random data, plus linearity of compose.
inline std::vector<CheckResult> run_roundtrip_suite(const SuiteConfig& cfg) {
  detail::SuiteRecorder rec("roundtrip", cfg);
  rec.run("decompose_compose", 1e-12, [&] {
    std::mt19937_64 rng(cfg.seed);
    double worst = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      const TensorMultiplet m = random_multiplet(rng);
      worst = std::max(worst, max_abs_diff(decompose(compose(m)), m));
    }
    return worst;
  });
  rec.run("compose_decompose", 1e-12, [&] {
    std::mt19937_64 rng(cfg.seed + 1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      Bispinor b;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) b.u(r, c) = cplx(u(rng), u(rng));
      worst = std::max(worst, max_abs_diff(compose(decompose(b)), b));
    }
    return worst;
  });
  rec.run("compose_linearity", 1e-12, [&] {
    std::mt19937_64 rng(cfg.seed + 2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < std::max(1, cfg.trials / 10); ++t) {
      const TensorMultiplet a = random_multiplet(rng), b = random_multiplet(rng);
      const cplx ca(u(rng), u(rng)), cb(u(rng), u(rng));
      worst = std::max(worst, max_abs_diff(compose(a * ca + b * cb),
                                           compose(a) * ca + compose(b) * cb));
    }
    return worst;
  });
  return rec.take();
}

/// Lorentz suite: intertwiner identities, homomorphism, double cover,
/// metric orthogonality, discrete involutions.
inline std::vector<CheckResult> run_lorentz_suite(const SuiteConfig& cfg) {
  detail::SuiteRecorder rec("lorentz", cfg);
  rec.run("intertwiner_2form", 1e-10, [&] {
    std::mt19937_64 rng(cfg.seed);
    double worst = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      const SL2CElement k = detail::random_sl2c(rng);
      worst = std::max(worst, vector_rep_residual(k, vector_rep(k)));
    }
    return worst;
  });
  rec.run("intertwiner_4form", 1e-10, [&] {
    std::mt19937_64 rng(cfg.seed + 1);
    double worst = 0.0;
    for (int t = 0; t < cfg.trials; ++t)
      worst = std::max(worst, verify_intertwiner(detail::random_sl2c(rng)));
    return worst;
  });
  rec.run("homomorphism", 1e-9, [&] {
    std::mt19937_64 rng(cfg.seed + 2);
    double worst = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      const SL2CElement a = detail::random_sl2c(rng), b = detail::random_sl2c(rng);
      worst = std::max(worst, max_abs_diff(vector_rep(a * b), vector_rep(a) * vector_rep(b)));
    }
    return worst;
  });
  rec.run("double_cover", 1e-12, [&] {
    std::mt19937_64 rng(cfg.seed + 3);
    double worst = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      const SL2CElement k = detail::random_sl2c(rng);
      worst = std::max(worst, max_abs_diff(vector_rep(-k), vector_rep(k)));
    }
    return worst;
  });
  rec.run("metric_orthogonality", 1e-10, [&] {
    std::mt19937_64 rng(cfg.seed + 4);
    double worst = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      const Mat4r L = vector_rep(detail::random_sl2c(rng));
      worst = std::max(worst, lorentz_defect(L));
      worst = std::max(worst, std::abs(L.det() - 1.0));
      worst = std::max(worst, std::max(0.0, 1.0 - L(0, 0)));
    }
    return worst;
  });
  rec.run("discrete_involutions", 1e-12, [&] {
    std::mt19937_64 rng(cfg.seed + 5);
    const Bispinor u = compose(random_multiplet(rng));
    double worst = 0.0;
    for (DiscreteMap w : {DiscreteMap::M, DiscreteMap::N}) {
      worst = std::max(worst, max_abs_diff(discrete_transform(discrete_transform(u, w), w), u));
      const Mat4 X = discrete_matrix(w);
      worst = std::max(worst, max_abs_diff(discrete_transform(u, w).u, X * u.u * X.transpose()));
    }
    return worst;
  });
  return rec.take();
}

/// Sector suite: projector idempotence, block constraints, preservation
/// under SL(2,C) transformations.
inline std::vector<CheckResult> run_sectors_suite(const SuiteConfig& cfg) {
  constexpr std::array<Sector, 4> sectors{Sector::S0, Sector::S0Tilde, Sector::S1,
                                          Sector::S1Tilde};
  detail::SuiteRecorder rec("sectors", cfg);
  rec.run("projector_idempotence", 1e-12, [&] {
    std::mt19937_64 rng(cfg.seed);
    double worst = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      const TensorMultiplet m = random_multiplet(rng);
      for (Sector s : sectors) {
        const TensorMultiplet once = project_sector(m, s);
        worst = std::max(worst, max_abs_diff(project_sector(once, s), once));
      }
    }
    return worst;
  });
  rec.run("block_constraints", 1e-12, [&] {
    std::mt19937_64 rng(cfg.seed + 1);
    double worst = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      const TensorMultiplet m = random_multiplet(rng);
      for (Sector s : sectors)
        worst = std::max(worst, check_block_constraints(compose(project_sector(m, s)), s));
    }
    return worst;
  });
  rec.run("preservation_under_sl2c", 1e-10, [&] {
    std::mt19937_64 rng(cfg.seed + 2);
    double worst = 0.0;
    const int n = std::min(cfg.trials, 50);
    for (int t = 0; t < n; ++t) {
      const SL2CElement k = detail::random_sl2c(rng);
      const TensorMultiplet m = random_multiplet(rng);
      for (Sector s : sectors)
        worst = std::max(
            worst, check_block_constraints(transform_bispinor(compose(project_sector(m, s)), k), s));
    }
    return worst;
  });
  return rec.take();
}

/// Equivalence suite: the spinor system and the tensor system vanish
/// together on on-shell fields and are jointly nonzero off shell.
inline std::vector<CheckResult> run_equivalence_suite(const SuiteConfig& cfg) {
  detail::SuiteRecorder rec("equivalence", cfg);
  const double m = 1.0;
  rec.run("onshell_joint_vanishing", 1e-10, [&] {
    std::mt19937_64 rng(cfg.seed);
    double worst = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      const Vec4d k = detail::random_massive_k(m, rng);
      MultipletField f;
      f.terms.push_back({k, detail::random_onshell_multiplet(k, m, rng)});
      const auto r = spinor_tensor_equivalence(f, m, random_point(rng));
      worst = std::max({worst, r.spinor, r.tensor});
    }
    return worst;
  });
  rec.run("offshell_joint_nonzero", 0.5, [&] {
    std::mt19937_64 rng(cfg.seed + 1);
    double min_floor = 1e9;
    for (int t = 0; t < cfg.trials; ++t) {
      MultipletField f;
      f.terms.push_back({random_point(rng), random_multiplet(rng)});
      const auto r = spinor_tensor_equivalence(f, m, random_point(rng));
      min_floor = std::min(min_floor, std::min(r.spinor, r.tensor));
    }
    return min_floor > 1e-6 ? 0.0 : 1.0;  // boolean as residual
  });
  rec.run("lorentz_condition_emergence", 1e-10, [&] {
    // null-space solutions of the potential-sector spinor pair must satisfy
    // the Lorentz condition and the strength relations in both sectors
    std::mt19937_64 rng(cfg.seed + 2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < std::min(cfg.trials, 40); ++trial) {
      const Vec4d k{u(rng), u(rng), u(rng), u(rng)};
      for (const bool pseudo : {false, true}) {
        CMatrix mtx(8, std::vector<cplx>(10, cplx(0.0)));
        for (std::size_t col = 0; col < 10; ++col) {
          TensorMultiplet basis;
          if (col < 4) {
            if (pseudo)
              basis.pseudovector[col] = 1.0;
            else
              basis.vector[col] = 1.0;
          } else {
            basis.antisym[col - 4] = 1.0;
          }
          MultipletField bf;
          bf.terms.push_back({k, basis});
          const auto r = potential_spinor_residual(bf, {0, 0, 0, 0});
          for (std::size_t i = 0; i < 4; ++i) {
            mtx[i][col] = r.eq_a_prime.e[i];
            mtx[4 + i][col] = r.eq_b_prime.e[i];
          }
        }
        for (const auto& v : nullspace_basis(mtx, 1e-10)) {
          TensorMultiplet amp;
          for (std::size_t i = 0; i < 4; ++i) {
            if (pseudo)
              amp.pseudovector[i] = v[i];
            else
              amp.vector[i] = v[i];
          }
          for (std::size_t i = 0; i < 6; ++i) amp.antisym[i] = v[4 + i];
          MultipletField f;
          f.terms.push_back({k, amp});
          const Vec4d x = random_point(rng);
          if (pseudo)
            worst = std::max(worst, pseudo_maxwell_residual(f, nullptr, x).potential_max_abs());
          else
            worst = std::max(worst, maxwell_residual(f, nullptr, x).potential_max_abs());
        }
      }
    }
    return worst;
  });
  return rec.take();
}

/// Duality suite: dual involution, rotation group law, discrete maps at
/// chi = pi/2, the two-potential dual identity, the two-charge combination,
/// and full-system invariance on a sourced dyonic scenario.
inline std::vector<CheckResult> run_duality_suite(const SuiteConfig& cfg) {
  detail::SuiteRecorder rec("duality", cfg);
  rec.run("dual_involution", 1e-12, [&] {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      Antisym f;
      for (auto& c : f.c) c = cplx(u(rng), u(rng));
      worst = std::max(worst, max_abs_diff(dual_tensor(dual_tensor(f)), -f));
    }
    return worst;
  });
  rec.run("rotation_group_law", 1e-12, [&] {
    std::mt19937_64 rng(cfg.seed + 1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      Antisym f, ft;
      for (auto& c : f.c) c = cplx(u(rng), u(rng));
      for (auto& c : ft.c) c = cplx(u(rng), u(rng));
      const CombinedStrength cs = combine_fields(f, ft);
      const double a = u(rng) * 3.0, b = u(rng) * 3.0;
      const CombinedStrength lhs = duality_rotate(duality_rotate(cs, a), b);
      const CombinedStrength rhs = duality_rotate(cs, a + b);
      worst = std::max(worst, max_abs_diff(lhs.plus, rhs.plus));
      worst = std::max(worst, max_abs_diff(lhs.minus, rhs.minus));
      worst = std::max(worst, max_abs_diff(lhs.plus_dual, rhs.plus_dual));
      worst = std::max(worst, max_abs_diff(lhs.minus_dual, rhs.minus_dual));
    }
    return worst;
  });
  rec.run("chi_half_pi_discrete_maps", 1e-12, [&] {
    std::mt19937_64 rng(cfg.seed + 2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double hpi = 0.5 * std::numbers::pi;
    double worst = 0.0;
    for (int t = 0; t < std::max(1, cfg.trials / 10); ++t) {
      Antisym f, ft;
      for (auto& c : f.c) c = cplx(u(rng), u(rng));
      for (auto& c : ft.c) c = cplx(u(rng), u(rng));
      const CombinedStrength cs = combine_fields(f, ft);
      const CombinedStrength r = duality_rotate(cs, hpi);
      worst = std::max(worst, max_abs_diff(r.plus, -cs.plus_dual));
      worst = std::max(worst, max_abs_diff(r.plus_dual, cs.plus));
      worst = std::max(worst, max_abs_diff(r.minus, cs.minus_dual));
      worst = std::max(worst, max_abs_diff(r.minus_dual, -cs.minus));
      // potentials and currents: A -> A~, A~ -> -A
      MultipletField pot;
      PlaneWaveTerm term;
      term.k = {u(rng) + 2.0, u(rng), u(rng), u(rng)};
      term.amplitude = random_multiplet(rng);
      pot.terms.push_back(term);
      const MultipletField rot = duality_rotate_pair(pot, hpi);
      for (std::size_t l = 0; l < 4; ++l) {
        worst = std::max(worst, std::abs(rot.terms[0].amplitude.vector[l] -
                                         term.amplitude.pseudovector[l]));
        worst = std::max(worst, std::abs(rot.terms[0].amplitude.pseudovector[l] +
                                         term.amplitude.vector[l]));
      }
    }
    return worst;
  });
  rec.run("two_potential_identity", 1e-12, [&] {
    std::mt19937_64 rng(cfg.seed + 3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      MultipletField pot;
      PlaneWaveTerm term;
      term.k = {u(rng), u(rng), u(rng), u(rng)};
      term.amplitude = random_multiplet(rng);
      pot.terms.push_back(term);
      worst = std::max(worst, strengths_from_potentials(pot, random_point(rng)).route_residual);
    }
    return worst;
  });
  rec.run("two_charge_combination", 1e-10, [&] {
    // combine independently built vacuum S=1 and S=1~ waves and check the
    // extended system on the sum and difference
    std::mt19937_64 rng(cfg.seed + 4);
    double worst = 0.0;
    for (int t = 0; t < std::max(1, cfg.trials / 10); ++t) {
      const MultipletField pot = detail::random_gauge_potentials(rng, 2, true);
      const SectorFields s = sector_fields_from_potentials(pot);
      for (int p = 0; p < 10; ++p)
        worst = std::max(worst, extended_residual(s.vector_sector, s.pseudovector_sector, nullptr,
                                                  random_point(rng))
                                    .max_abs());
    }
    return worst;
  });
  rec.run("dyonic_invariance", 1e-10, [&] {
    std::mt19937_64 rng(cfg.seed + 5);
    DyonicScenario sc;
    sc.potentials = detail::random_gauge_potentials(rng, 2, false);
    sc.currents = detail::matched_currents(sc.potentials);
    std::vector<Vec4d> points;
    for (int t = 0; t < 10; ++t) points.push_back(random_point(rng));
    double worst = duality_invariance_test(sc, cfg.chi, points);
    // the scenario itself is on shell before and after rotation
    const MultipletField pot_rot = duality_rotate_pair(sc.potentials, cfg.chi);
    const MultipletField cur_rot = duality_rotate_pair(sc.currents, cfg.chi);
    for (const auto& x : points) {
      worst = std::max(worst, extended_residual_from_potentials(sc.potentials, &sc.currents, x)
                                  .max_abs());
      worst = std::max(worst,
                       extended_residual_from_potentials(pot_rot, &cur_rot, x).max_abs());
    }
    return worst;
  });
  return rec.take();
}

inline std::vector<CheckResult> run_suite_by_name(const std::string& name,
                                                  const SuiteConfig& cfg) {
  if (name == "algebra") return run_algebra_suite(cfg);
  if (name == "roundtrip") return run_roundtrip_suite(cfg);
  if (name == "lorentz") return run_lorentz_suite(cfg);
  if (name == "sectors") return run_sectors_suite(cfg);
  if (name == "equivalence") return run_equivalence_suite(cfg);
  if (name == "duality") return run_duality_suite(cfg);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace dkf
