#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "dkfield/bispinor.hpp"
#include "dkfield/fields.hpp"
#include "dkfield/sectors.hpp"

using namespace dkf;

namespace {
constexpr double kTol = 1e-12;

TensorMultiplet pure_vector(const Vec4c& a) {
  TensorMultiplet t;
  t.vector = a;
  return t;
}
}  // namespace

TEST_CASE("compose of a pure scalar is -i E^-1") {
  TensorMultiplet t;
  t.scalar = 1.0;
  const Bispinor u = compose(t);
  CHECK(max_abs_diff(u.u, metric_spinor().E_inv * cplx(0.0, -1.0)) < kTol);
  // and decompose inverts it
  const TensorMultiplet back = decompose(u);
  CHECK(std::abs(back.scalar - cplx(1.0, 0.0)) < kTol);
  CHECK((back - t).max_abs() < kTol);
}

TEST_CASE("compose of a pure Phi_0 produces the expected off-diagonal blocks") {
  TensorMultiplet t;
  t.vector[0] = 1.0;
  const Bispinor u = compose(t);
  const Mat2 is2 = cplx(0.0, 1.0) * pauli(2);
  CHECK(max_abs_diff(u.delta(), is2) < kTol);
  CHECK(max_abs_diff(u.h(), -is2) < kTol);
  CHECK(u.xi().max_abs() < kTol);
  CHECK(u.eta().max_abs() < kTol);
}

TEST_CASE("decompose of zero is zero, decompose inverts the scalar example") {
  CHECK(decompose(Bispinor{}).max_abs() == 0.0);
  const Bispinor u{metric_spinor().E_inv * cplx(0.0, -1.0)};
  const TensorMultiplet t = decompose(u);
  CHECK(std::abs(t.scalar - cplx(1.0, 0.0)) < kTol);
  TensorMultiplet rest = t;
  rest.scalar = 0.0;
  CHECK(rest.max_abs() < kTol);
}

TEST_CASE("compose and decompose are mutually inverse on random multiplets") {
  std::mt19937_64 rng(7);
  double worst_td = 0.0, worst_ut = 0.0;
  std::uniform_real_distribution<double> u01(-1.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const TensorMultiplet t = random_multiplet(rng);
    worst_td = std::max(worst_td, max_abs_diff(decompose(compose(t)), t));
    // opposite order on a random 4x4 matrix
    Bispinor u;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) u.u(r, c) = cplx(u01(rng), u01(rng));
    worst_ut = std::max(worst_ut, max_abs_diff(compose(decompose(u)), u));
  }
  CHECK(worst_td < kTol);
  CHECK(worst_ut < kTol);
}

TEST_CASE("compose is linear") {
  std::mt19937_64 rng(11);
  const TensorMultiplet t1 = random_multiplet(rng), t2 = random_multiplet(rng);
  const cplx a{0.3, -1.2}, b{-0.7, 0.4};
  const Bispinor lhs = compose(t1 * a + t2 * b);
  const Bispinor rhs = compose(t1) * a + compose(t2) * b;
  CHECK(max_abs_diff(lhs, rhs) < kTol);
}

TEST_CASE("pure vector blocks match the explicit forms") {
  // A = (A0, 0, 0, 0): delta = [[0, A0], [-A0, 0]]
  const cplx a0{1.3, -0.2};
  Bispinor u = compose(pure_vector({a0, 0.0, 0.0, 0.0}));
  CHECK(std::abs(u.delta()(0, 1) - a0) < kTol);
  CHECK(std::abs(u.delta()(1, 0) + a0) < kTol);
  CHECK(std::abs(u.delta()(0, 0)) < kTol);
  CHECK(std::abs(u.delta()(1, 1)) < kTol);

  // A = (0, A1, 0, 0): H_11 = A1, H_22 = -A1
  const cplx a1{0.8, 0.5};
  u = compose(pure_vector({0.0, a1, 0.0, 0.0}));
  CHECK(std::abs(u.h()(0, 0) - a1) < kTol);
  CHECK(std::abs(u.h()(1, 1) + a1) < kTol);

  // full explicit delta and H for a generic real A
  const cplx A0 = 0.7, A1 = -0.3, A2 = 1.1, A3 = 0.4;
  u = compose(pure_vector({A0, A1, A2, A3}));
  const cplx i{0.0, 1.0};
  CHECK(std::abs(u.delta()(0, 0) - (A1 - i * A2)) < kTol);
  CHECK(std::abs(u.delta()(0, 1) - (A0 - A3)) < kTol);
  CHECK(std::abs(u.delta()(1, 0) + (A0 + A3)) < kTol);
  CHECK(std::abs(u.delta()(1, 1) + (A1 + i * A2)) < kTol);
  CHECK(std::abs(u.h()(0, 0) - (A1 - i * A2)) < kTol);
  CHECK(std::abs(u.h()(0, 1) + (A0 + A3)) < kTol);
  CHECK(std::abs(u.h()(1, 0) - (A0 - A3)) < kTol);
  CHECK(std::abs(u.h()(1, 1) + (A1 + i * A2)) < kTol);

  CHECK(max_abs_diff(Bispinor{}.xi(), Mat2::zero()) == 0.0);
}

TEST_CASE("sector projection zeroes the complement and is idempotent") {
  std::mt19937_64 rng(3);
  const TensorMultiplet t = random_multiplet(rng);

  const TensorMultiplet s1 = project_sector(t, Sector::S1);
  CHECK(std::abs(s1.scalar) == 0.0);
  CHECK(std::abs(s1.pseudoscalar) == 0.0);
  for (const auto& c : s1.pseudovector) CHECK(std::abs(c) == 0.0);
  CHECK((s1.vector == t.vector));
  CHECK((s1.antisym == t.antisym));

  for (Sector s : {Sector::S0, Sector::S0Tilde, Sector::S1, Sector::S1Tilde}) {
    const TensorMultiplet once = project_sector(t, s);
    CHECK(max_abs_diff(project_sector(once, s), once) == 0.0);
  }

  // disjoint supports except the antisymmetric block shared by S1/S1Tilde
  const TensorMultiplet s0 = project_sector(t, Sector::S0);
  const TensorMultiplet s1t = project_sector(t, Sector::S1Tilde);
  CHECK(std::abs(s0.pseudoscalar) == 0.0);
  for (const auto& c : s0.pseudovector) CHECK(std::abs(c) == 0.0);
  for (const auto& c : s1t.vector) CHECK(std::abs(c) == 0.0);
}

TEST_CASE("block constraints hold on projected multiplets for every sector") {
  std::mt19937_64 rng(17);
  for (Sector s : {Sector::S0, Sector::S0Tilde, Sector::S1, Sector::S1Tilde}) {
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const TensorMultiplet t = project_sector(random_multiplet(rng), s);
      worst = std::max(worst, check_block_constraints(compose(t), s));
    }
    CHECK(worst < kTol);
  }
}

TEST_CASE("pure pseudovector satisfies the S=1~ constraints") {
  std::mt19937_64 rng(19);
  TensorMultiplet t;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& c : t.pseudovector) c = cplx(u(rng), u(rng));
  CHECK(check_block_constraints(compose(t), Sector::S1Tilde) < kTol);
}

TEST_CASE("pure vector violates the S=1~ constraint") {
  TensorMultiplet t;
  t.vector = {0.9, 0.4, -0.3, 0.2};
  CHECK(check_block_constraints(compose(t), Sector::S1Tilde) > 0.1);
}

TEST_CASE("primitive subspaces are orthogonal and span 16 components") {
  // dims 1 + 4 + 1 + 4 + 6
  TensorMultiplet t;
  std::size_t n = 0;
  n += 1;                   // scalar
  n += t.vector.size();     // 4
  n += 1;                   // pseudoscalar
  n += t.pseudovector.size();  // 4
  n += t.antisym.size();    // 6
  CHECK(n == TensorMultiplet::kComponents);
}
