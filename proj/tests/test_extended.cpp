#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "dkfield/extended.hpp"

using namespace dkf;

namespace {

Antisym random_antisym(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Antisym a;
  for (auto& c : a.c) c = cplx(u(rng), u(rng));
  return a;
}

/// Dyonic plane-wave potentials with per-term Lorentz gauge k.eps = 0.
MultipletField random_gauge_potentials(std::mt19937_64& rng, int nterms) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MultipletField f;
  for (int t = 0; t < nterms; ++t) {
    PlaneWaveTerm term;
    term.k = {u(rng) + 2.0, u(rng), u(rng), u(rng)};  // generic, k^2 != 0
    auto transverse = [&] {
      Vec4c eps{cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng)),
                cplx(u(rng), u(rng))};
      // eps_0 chosen so the contraction k^a eps_a vanishes (upper against
      // lower, no metric factors)
      cplx kdot = 0.0;
      for (int a = 1; a < 4; ++a)
        kdot += term.k[static_cast<std::size_t>(a)] * eps[static_cast<std::size_t>(a)];
      eps[0] = -kdot / term.k[0];
      return eps;
    };
    const Vec4c ea = transverse(), et = transverse();
    for (std::size_t l = 0; l < 4; ++l) {
      term.amplitude.vector[l] = ea[l];
      term.amplitude.pseudovector[l] = et[l];
    }
    f.terms.push_back(term);
  }
  return f;
}

/// Currents that close the extended system for gauge potentials:
/// j_a = -k^2 A_a, j~_a = -k^2 A~_a per term.
MultipletField matched_currents(const MultipletField& pot) {
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

}  // namespace

TEST_CASE("dual tensor: componentwise eps contraction") {
  Antisym f;
  f.c[0] = 1.0;  // F_01 = 1, i.e. E_1 = -1
  const Antisym d = dual_tensor(f);
  CHECK(std::abs(d.c[3] - cplx(1.0, 0.0)) < 1e-15);  // F*_23 = F_01
  for (std::size_t s = 0; s < 6; ++s)
    if (s != 3) CHECK(std::abs(d.c[s]) < 1e-15);
  CHECK(dual_tensor(Antisym{}).max_abs() == 0.0);
}

TEST_CASE("dual tensor on 3-vectors maps (E, B) to (B, -E)") {
  std::mt19937_64 rng(3);
  const Antisym f = random_antisym(rng);
  TensorMultiplet t;
  t.antisym = f.c;
  const Antisym d = dual_tensor(f);
  TensorMultiplet td;
  td.antisym = d.c;
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(electric_part(td).c[i] - magnetic_part(t).c[i]) < 1e-14);
    CHECK(std::abs(magnetic_part(td).c[i] + electric_part(t).c[i]) < 1e-14);
  }
}

TEST_CASE("dual of dual is minus the identity") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Antisym f = random_antisym(rng);
    CHECK(max_abs_diff(dual_tensor(dual_tensor(f)), -f) < 1e-14);
  }
}

TEST_CASE("combine_fields sums and differences componentwise") {
  std::mt19937_64 rng(7);
  const Antisym f = random_antisym(rng), ft = random_antisym(rng);
  const CombinedStrength c = combine_fields(f, ft);
  CHECK(max_abs_diff(c.plus, f + ft) == 0.0);
  CHECK(max_abs_diff(c.minus, f - ft) == 0.0);
  // recover F = (F+ + F-)/2
  CHECK(max_abs_diff((c.plus + c.minus) * cplx(0.5, 0.0), f) < 1e-15);

  const CombinedStrength z = combine_fields(f, Antisym{});
  CHECK(max_abs_diff(z.plus, f) == 0.0);
  CHECK(max_abs_diff(z.minus, f) == 0.0);
  const CombinedStrength z2 = combine_fields(Antisym{}, ft);
  CHECK(max_abs_diff(z2.plus, ft) == 0.0);
  CHECK(max_abs_diff(z2.minus, -ft) == 0.0);
}

TEST_CASE("two-potential strengths: the dual identity holds on both routes") {
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    MultipletField pot;
    PlaneWaveTerm term;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    term.k = {u(rng), u(rng), u(rng), u(rng)};
    term.amplitude = random_multiplet(rng);  // only the potential slots matter
    pot.terms.push_back(term);
    const auto ps = strengths_from_potentials(pot, random_point(rng));
    worst = std::max(worst, ps.route_residual);
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("pure-A and pure-A~ limits of the combined strengths") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MultipletField pot;
  PlaneWaveTerm term;
  term.k = {1.2, 0.4, -0.3, 0.8};
  for (std::size_t l = 0; l < 4; ++l) term.amplitude.vector[l] = cplx(u(rng), u(rng));
  pot.terms.push_back(term);
  const Vec4d x{0.2, 0.5, -0.1, 0.9};
  const auto ps = strengths_from_potentials(pot, x);
  // A~ = 0: F+ = F- = curl of A
  CHECK(max_abs_diff(ps.strengths.plus, ps.strengths.minus) < 1e-14);

  MultipletField pot2;
  PlaneWaveTerm term2;
  term2.k = term.k;
  for (std::size_t l = 0; l < 4; ++l) term2.amplitude.pseudovector[l] = cplx(u(rng), u(rng));
  pot2.terms.push_back(term2);
  const auto ps2 = strengths_from_potentials(pot2, x);
  // A = 0: F+ = -F- = eps dA~
  CHECK(max_abs_diff(ps2.strengths.plus, -ps2.strengths.minus) < 1e-14);
}

TEST_CASE("sector strength fields agree with the pointwise construction") {
  std::mt19937_64 rng(17);
  const MultipletField pot = random_gauge_potentials(rng, 3);
  const SectorFields s = sector_fields_from_potentials(pot);
  for (int t = 0; t < 10; ++t) {
    const Vec4d x = random_point(rng);
    const auto ps = strengths_from_potentials(pot, x);
    const Antisym f = antisym_part(s.vector_sector.value(x));
    const Antisym ft = antisym_part(s.pseudovector_sector.value(x));
    const CombinedStrength c = combine_fields(f, ft);
    CHECK(max_abs_diff(c.plus, ps.strengths.plus) < 1e-12);
    CHECK(max_abs_diff(c.minus, ps.strengths.minus) < 1e-12);
  }
}

TEST_CASE("extended system: vacuum null waves in both sectors") {
  // null wavevector, transverse polarizations, no sources
  const Vec4d k{1.0, 0.0, 0.6, 0.8};
  MultipletField pot;
  PlaneWaveTerm term;
  term.k = k;
  term.amplitude.vector[1] = cplx(0.7, 0.2);        // eps along x: k.eps = 0
  term.amplitude.pseudovector[1] = cplx(-0.4, 0.9);
  pot.terms.push_back(term);
  std::mt19937_64 rng(19);
  double worst = 0.0;
  for (int t = 0; t < 10; ++t)
    worst = std::max(worst,
                     extended_residual_from_potentials(pot, nullptr, random_point(rng)).max_abs());
  CHECK(worst < 1e-10);
}

TEST_CASE("extended system: matched currents close the sourced equations") {
  std::mt19937_64 rng(23);
  const MultipletField pot = random_gauge_potentials(rng, 2);
  const MultipletField cur = matched_currents(pot);
  double worst = 0.0, worst_div = 0.0;
  for (int t = 0; t < 10; ++t) {
    const Vec4d x = random_point(rng);
    const auto r = extended_residual_from_potentials(pot, &cur, x);
    worst = std::max(worst, r.max_abs());
    worst_div = std::max({worst_div, std::abs(r.current_div.electric),
                          std::abs(r.current_div.magnetic)});
  }
  CHECK(worst < 1e-8);
  CHECK(worst_div < 1e-10);  // the matched currents are conserved

  // dropping the currents leaves a nonzero residual
  CHECK(extended_residual_from_potentials(pot, nullptr, {0.1, 0.2, 0.3, 0.4}).max_abs() > 1e-3);
}

TEST_CASE("zero fields and zero currents give zero extended residual") {
  CHECK(extended_residual(MultipletField{}, MultipletField{}, nullptr, {0, 0, 0, 0}).max_abs() ==
        0.0);
}

TEST_CASE("one current field satisfies the sector systems and the extended system") {
  // matched currents close the extended equations; the same stored current
  // must also close the sourced per-sector 3-vector systems
  std::mt19937_64 rng(43);
  const MultipletField pot = random_gauge_potentials(rng, 2);
  const MultipletField cur = matched_currents(pot);
  const SectorFields s = sector_fields_from_potentials(pot);
  double worst_vec = 0.0, worst_pseudo = 0.0;
  for (int t = 0; t < 10; ++t) {
    const Vec4d x = random_point(rng);
    worst_vec = std::max(worst_vec, maxwell_residual(s.vector_sector, &cur, x).max_abs());
    worst_pseudo =
        std::max(worst_pseudo, pseudo_maxwell_residual(s.pseudovector_sector, &cur, x).max_abs());
  }
  CHECK(worst_vec < 1e-8);
  CHECK(worst_pseudo < 1e-8);
}

TEST_CASE("two-charge combination: sum and difference of sector solutions") {
  std::mt19937_64 rng(47);
  // independent vacuum waves in the two sectors (distinct null wavevectors)
  const MultipletField s1 = vacuum_vector_wave({1.0, 0.0, 0.6, 0.8}, {0.0, cplx(0.7, 0.2), 0.0, 0.0});
  const MultipletField s1t =
      vacuum_pseudovector_wave({1.0, 1.0, 0.0, 0.0}, {0.0, 0.0, cplx(-0.3, 0.5), 0.0});
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const Vec4d x = random_point(rng);
    worst = std::max(worst, two_charge_residual(s1, s1t, nullptr, false, x).max_abs());
    worst = std::max(worst, two_charge_residual(s1, s1t, nullptr, true, x).max_abs());
  }
  CHECK(worst < 1e-10);

  // sourced version with matched currents
  const MultipletField pot = random_gauge_potentials(rng, 2);
  const MultipletField cur = matched_currents(pot);
  const SectorFields s = sector_fields_from_potentials(pot);
  for (int t = 0; t < 10; ++t) {
    const Vec4d x = random_point(rng);
    worst = std::max(
        worst, two_charge_residual(s.vector_sector, s.pseudovector_sector, &cur, false, x).max_abs());
    worst = std::max(
        worst, two_charge_residual(s.vector_sector, s.pseudovector_sector, &cur, true, x).max_abs());
  }
  CHECK(worst < 1e-8);

  // dropping one sector breaks the combined system only through its sources
  CHECK(two_charge_residual(MultipletField{}, MultipletField{}, nullptr, false, {0, 0, 0, 0})
            .max_abs() == 0.0);
}

TEST_CASE("duality rotation: group law and inverses") {
  std::mt19937_64 rng(29);
  const Antisym f = random_antisym(rng), ft = random_antisym(rng);
  const CombinedStrength c = combine_fields(f, ft);
  // chi = 0 is the identity
  CHECK(max_abs_diff(duality_rotate(c, 0.0).plus, c.plus) == 0.0);
  // rotate(a) then rotate(b) = rotate(a + b)
  const double a = 0.37, b = -1.21;
  const CombinedStrength ab = duality_rotate(duality_rotate(c, a), b);
  const CombinedStrength sum = duality_rotate(c, a + b);
  CHECK(max_abs_diff(ab.plus, sum.plus) < 1e-12);
  CHECK(max_abs_diff(ab.minus, sum.minus) < 1e-12);
  CHECK(max_abs_diff(ab.plus_dual, sum.plus_dual) < 1e-12);
  CHECK(max_abs_diff(ab.minus_dual, sum.minus_dual) < 1e-12);
  // rotate(chi) then rotate(-chi) is the identity
  const CombinedStrength id = duality_rotate(duality_rotate(c, 0.7), -0.7);
  CHECK(max_abs_diff(id.plus, c.plus) < 1e-12);
  CHECK(max_abs_diff(id.minus_dual, c.minus_dual) < 1e-12);
}

TEST_CASE("chi = pi/2 reproduces the discrete duality maps") {
  std::mt19937_64 rng(31);
  const double hpi = 0.5 * std::numbers::pi;

  // potentials/currents: A' = A~, A~' = -A
  MultipletField pot;
  PlaneWaveTerm term;
  term.k = {1.0, 0.2, 0.3, 0.4};
  term.amplitude = random_multiplet(rng);
  pot.terms.push_back(term);
  const MultipletField rot = duality_rotate_pair(pot, hpi);
  for (std::size_t l = 0; l < 4; ++l) {
    CHECK(std::abs(rot.terms[0].amplitude.vector[l] - term.amplitude.pseudovector[l]) < 1e-15);
    CHECK(std::abs(rot.terms[0].amplitude.pseudovector[l] + term.amplitude.vector[l]) < 1e-15);
  }
  // and chi = -pi/2 is the other discrete map: A' = -A~, A~' = +A
  const MultipletField rot2 = duality_rotate_pair(pot, -hpi);
  for (std::size_t l = 0; l < 4; ++l) {
    CHECK(std::abs(rot2.terms[0].amplitude.vector[l] + term.amplitude.pseudovector[l]) < 1e-15);
    CHECK(std::abs(rot2.terms[0].amplitude.pseudovector[l] - term.amplitude.vector[l]) < 1e-15);
  }

  // strengths: F+' = -F+*, F+*' = +F+, F-' = +F-*, F-*' = -F-
  const Antisym f = random_antisym(rng), ft = random_antisym(rng);
  const CombinedStrength c = combine_fields(f, ft);
  const CombinedStrength r = duality_rotate(c, hpi);
  CHECK(max_abs_diff(r.plus, -c.plus_dual) < 1e-12);
  CHECK(max_abs_diff(r.plus_dual, c.plus) < 1e-12);
  CHECK(max_abs_diff(r.minus, c.minus_dual) < 1e-12);
  CHECK(max_abs_diff(r.minus_dual, -c.minus) < 1e-12);
}

TEST_CASE("duality rotation commutes with the strength construction") {
  // rotating the potentials then building strengths equals building then
  // rotating
  std::mt19937_64 rng(37);
  const MultipletField pot = random_gauge_potentials(rng, 2);
  const double chi = 0.7;
  const MultipletField rot = duality_rotate_pair(pot, chi);
  for (int t = 0; t < 5; ++t) {
    const Vec4d x = random_point(rng);
    const CombinedStrength direct = strengths_from_potentials(rot, x).strengths;
    const CombinedStrength mixed = duality_rotate(strengths_from_potentials(pot, x).strengths, chi);
    CHECK(max_abs_diff(direct.plus, mixed.plus) < 1e-12);
    CHECK(max_abs_diff(direct.minus, mixed.minus) < 1e-12);
    CHECK(max_abs_diff(direct.plus_dual, mixed.plus_dual) < 1e-12);
    CHECK(max_abs_diff(direct.minus_dual, mixed.minus_dual) < 1e-12);
  }
}

TEST_CASE("full-system duality invariance on a sourced dyonic scenario") {
  std::mt19937_64 rng(41);
  DyonicScenario sc;
  sc.potentials = random_gauge_potentials(rng, 2);
  sc.currents = matched_currents(sc.potentials);
  std::vector<Vec4d> points;
  for (int t = 0; t < 8; ++t) points.push_back(random_point(rng));
  CHECK(duality_invariance_test(sc, 0.0, points) == 0.0);
  CHECK(duality_invariance_test(sc, 0.7, points) < 1e-10);
  CHECK(duality_invariance_test(sc, 0.5 * std::numbers::pi, points) < 1e-10);
  // equivariance holds even off shell
  DyonicScenario off;
  off.potentials = random_gauge_potentials(rng, 1);
  CHECK(duality_invariance_test(off, 1.1, points) < 1e-10);
}

TEST_CASE("monopole flux quadrature") {
  CHECK(monopole_flux_test(0.0, 1.0, 8) == 0.0);
  CHECK(std::abs(monopole_flux_test(1.0, 1.0, 8) + 1.0) < 1e-10);
  CHECK(std::abs(monopole_flux_test(2.5, 0.7, 12) + 2.5) < 1e-10);
  // flux independent of radius
  CHECK(std::abs(monopole_flux_test(1.0, 1.0, 8) - monopole_flux_test(1.0, 2.0, 8)) < 1e-10);
}

TEST_CASE("sphere flux converges for an off-center source") {
  // source at the origin, sphere centered off the origin but still
  // enclosing it: Gauss's law gives the same total flux
  auto field = [](const Vec3d& p) {
    const double r2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    const double f = 1.0 / (4.0 * std::numbers::pi * r2 * std::sqrt(r2));
    return Vec3d{f * p[0], f * p[1], f * p[2]};
  };
  const double flux = sphere_flux(field, {0.3, -0.2, 0.1}, 1.0, 48);
  CHECK(std::abs(flux - 1.0) < 1e-10);
  // and zero when the source is outside
  const double outside = sphere_flux(field, {3.0, 0.0, 0.0}, 1.0, 48);
  CHECK(std::abs(outside) < 1e-8);
}

TEST_CASE("gauss_legendre integrates polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre(5, x, w);
  // degree 9 is exact for a 5-point rule
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = x[i];
    acc += w[i] * (t * t * t * t * t * t * t * t);  // t^8
  }
  CHECK(std::abs(acc - 2.0 / 9.0) < 1e-14);
  CHECK_THROWS_AS(gauss_legendre(0, x, w), std::invalid_argument);
}
