#pragma once

#include <algorithm>

#include "dkfield/bispinor.hpp"

namespace dkf {

/// The four parity sectors. S0 keeps {Phi, Phi_l}; S0Tilde keeps
/// {Phi~, Phi~_l}; S1 keeps {Phi_l, Phi_mn}; S1Tilde keeps {Phi~_l, Phi_mn}.
enum class Sector { S0, S0Tilde, S1, S1Tilde };

inline TensorMultiplet project_sector(const TensorMultiplet& t, Sector s) {
  TensorMultiplet p;
  switch (s) {
    case Sector::S0:
      p.scalar = t.scalar;
      p.vector = t.vector;
      break;
    case Sector::S0Tilde:
      p.pseudoscalar = t.pseudoscalar;
      p.pseudovector = t.pseudovector;
      break;
    case Sector::S1:
      p.vector = t.vector;
      p.antisym = t.antisym;
      break;
    case Sector::S1Tilde:
      p.pseudovector = t.pseudovector;
      p.antisym = t.antisym;
      break;
  }
  return p;
}

/// Transposition constraints on the Weyl blocks per sector:
///   S1:      delta^T = +h,  xi^T = +xi,  eta^T = +eta
///   S1Tilde: delta^T = -h,  xi^T = +xi,  eta^T = +eta
///   S0:      delta^T = +h,  xi = -eta,   xi^T = -xi,  eta^T = -eta
///   S0Tilde: delta^T = -h,  xi = +eta,   xi^T = -xi,  eta^T = -eta
/// Returns the maximum absolute violation.
inline double check_block_constraints(const Bispinor& b, Sector s) {
  const Mat2 xi = b.xi(), delta = b.delta(), h = b.h(), eta = b.eta();
  double worst = 0.0;
  switch (s) {
    case Sector::S1:
      worst = std::max(worst, max_abs_diff(delta.transpose(), h));
      worst = std::max(worst, max_abs_diff(xi.transpose(), xi));
      worst = std::max(worst, max_abs_diff(eta.transpose(), eta));
      break;
    case Sector::S1Tilde:
      worst = std::max(worst, max_abs_diff(delta.transpose(), -h));
      worst = std::max(worst, max_abs_diff(xi.transpose(), xi));
      worst = std::max(worst, max_abs_diff(eta.transpose(), eta));
      break;
    case Sector::S0:
      worst = std::max(worst, max_abs_diff(delta.transpose(), h));
      worst = std::max(worst, max_abs_diff(xi, -eta));
      worst = std::max(worst, max_abs_diff(xi.transpose(), -xi));
      worst = std::max(worst, max_abs_diff(eta.transpose(), -eta));
      break;
    case Sector::S0Tilde:
      worst = std::max(worst, max_abs_diff(delta.transpose(), -h));
      worst = std::max(worst, max_abs_diff(xi, eta));
      worst = std::max(worst, max_abs_diff(xi.transpose(), -xi));
      worst = std::max(worst, max_abs_diff(eta.transpose(), -eta));
      break;
  }
  return worst;
}

}  // namespace dkf
