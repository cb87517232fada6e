#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

#include "dkfield/matrix.hpp"

namespace dkf {

/// Storage order of the six independent antisymmetric components. Matches
/// the 3-vector identification F_{0k} <-> -E_k and (F_23, F_31, F_12) <-> B.
inline constexpr std::array<std::pair<int, int>, 6> kAntisymPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}}};

/// The 16-component multiplet {scalar, vector, pseudoscalar, pseudovector,
/// antisymmetric tensor}. Vector-type components carry a lower index.
struct TensorMultiplet {
  cplx scalar{};
  std::array<cplx, 4> vector{};
  cplx pseudoscalar{};
  std::array<cplx, 4> pseudovector{};
  std::array<cplx, 6> antisym{};  // order (01, 02, 03, 23, 31, 12)

  /// Signed lookup of Phi_{mn}; zero on the diagonal.
  cplx antisym_mn(int m, int n) const {
    if (m == n) return 0.0;
    for (std::size_t s = 0; s < 6; ++s) {
      if (kAntisymPairs[s].first == m && kAntisymPairs[s].second == n) return antisym[s];
      if (kAntisymPairs[s].first == n && kAntisymPairs[s].second == m) return -antisym[s];
    }
    return 0.0;
  }

  cplx& component(std::size_t i) {
    if (i == 0) return scalar;
    if (i < 5) return vector[i - 1];
    if (i == 5) return pseudoscalar;
    if (i < 10) return pseudovector[i - 6];
    return antisym[i - 10];
  }
  const cplx& component(std::size_t i) const {
    return const_cast<TensorMultiplet*>(this)->component(i);
  }
  static constexpr std::size_t kComponents = 16;

  TensorMultiplet operator+(const TensorMultiplet& o) const {
    TensorMultiplet t;
    for (std::size_t i = 0; i < kComponents; ++i) t.component(i) = component(i) + o.component(i);
    return t;
  }
  TensorMultiplet operator-(const TensorMultiplet& o) const {
    TensorMultiplet t;
    for (std::size_t i = 0; i < kComponents; ++i) t.component(i) = component(i) - o.component(i);
    return t;
  }
  TensorMultiplet operator*(const cplx& s) const {
    TensorMultiplet t;
    for (std::size_t i = 0; i < kComponents; ++i) t.component(i) = component(i) * s;
    return t;
  }
  friend TensorMultiplet operator*(const cplx& s, const TensorMultiplet& t) { return t * s; }

  double max_abs() const {
    double m = 0.0;
    for (std::size_t i = 0; i < kComponents; ++i) m = std::max(m, std::abs(component(i)));
    return m;
  }
};

inline double max_abs_diff(const TensorMultiplet& a, const TensorMultiplet& b) {
  return (a - b).max_abs();
}

}  // namespace dkf
