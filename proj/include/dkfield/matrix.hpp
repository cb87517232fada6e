#pragma once

#include <array>
#include <complex>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <stdexcept>

namespace dkf {

using cplx = std::complex<double>;
using Vec3d = std::array<double, 3>;
using Vec4d = std::array<double, 4>;
using Vec4c = std::array<cplx, 4>;

/// Dense 2x2 complex matrix, row-major.
struct Mat2 {
  std::array<cplx, 4> e{};

  static Mat2 zero() { return {}; }
  static Mat2 identity() {
    Mat2 m;
    m.e[0] = m.e[3] = 1.0;
    return m;
  }

  cplx& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
  const cplx& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

  Mat2 operator+(const Mat2& o) const {
    Mat2 m;
    for (std::size_t i = 0; i < 4; ++i) m.e[i] = e[i] + o.e[i];
    return m;
  }
  Mat2 operator-(const Mat2& o) const {
    Mat2 m;
    for (std::size_t i = 0; i < 4; ++i) m.e[i] = e[i] - o.e[i];
    return m;
  }
  Mat2 operator-() const {
    Mat2 m;
    for (std::size_t i = 0; i < 4; ++i) m.e[i] = -e[i];
    return m;
  }
  Mat2 operator*(const Mat2& o) const {
    Mat2 m;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        m(r, c) = (*this)(r, 0) * o(0, c) + (*this)(r, 1) * o(1, c);
    return m;
  }
  Mat2 operator*(const cplx& s) const {
    Mat2 m;
    for (std::size_t i = 0; i < 4; ++i) m.e[i] = e[i] * s;
    return m;
  }
  friend Mat2 operator*(const cplx& s, const Mat2& m) { return m * s; }

  cplx trace() const { return e[0] + e[3]; }
  cplx det() const { return e[0] * e[3] - e[1] * e[2]; }

  Mat2 transpose() const { return {{e[0], e[2], e[1], e[3]}}; }
  Mat2 conj() const {
    Mat2 m;
    for (std::size_t i = 0; i < 4; ++i) m.e[i] = std::conj(e[i]);
    return m;
  }
  Mat2 adjoint() const { return conj().transpose(); }

  Mat2 inverse() const {
    const cplx d = det();
    if (std::abs(d) == 0.0) throw std::domain_error("Mat2::inverse: singular matrix");
    const cplx s = 1.0 / d;
    return {{e[3] * s, -e[1] * s, -e[2] * s, e[0] * s}};
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : e) m = std::max(m, std::abs(v));
    return m;
  }
};

inline double max_abs_diff(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

inline std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  os << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]";
  return os;
}

/// Dense 4x4 complex matrix, row-major.
struct Mat4 {
  std::array<cplx, 16> e{};

  static Mat4 zero() { return {}; }
  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }

  cplx& operator()(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }
  const cplx& operator()(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }

  Mat4 operator+(const Mat4& o) const {
    Mat4 m;
    for (std::size_t i = 0; i < 16; ++i) m.e[i] = e[i] + o.e[i];
    return m;
  }
  Mat4 operator-(const Mat4& o) const {
    Mat4 m;
    for (std::size_t i = 0; i < 16; ++i) m.e[i] = e[i] - o.e[i];
    return m;
  }
  Mat4 operator-() const {
    Mat4 m;
    for (std::size_t i = 0; i < 16; ++i) m.e[i] = -e[i];
    return m;
  }
  Mat4 operator*(const Mat4& o) const {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        cplx s = 0.0;
        for (int k = 0; k < 4; ++k) s += (*this)(r, k) * o(k, c);
        m(r, c) = s;
      }
    return m;
  }
  Mat4 operator*(const cplx& s) const {
    Mat4 m;
    for (std::size_t i = 0; i < 16; ++i) m.e[i] = e[i] * s;
    return m;
  }
  friend Mat4 operator*(const cplx& s, const Mat4& m) { return m * s; }

  cplx trace() const { return e[0] + e[5] + e[10] + e[15]; }

  Mat4 transpose() const {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(c, r) = (*this)(r, c);
    return m;
  }
  Mat4 conj() const {
    Mat4 m;
    for (std::size_t i = 0; i < 16; ++i) m.e[i] = std::conj(e[i]);
    return m;
  }
  Mat4 adjoint() const { return conj().transpose(); }

  /// 2x2 tile with block row/column in {0,1}.
  Mat2 block(int br, int bc) const {
    Mat2 m;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m(r, c) = (*this)(2 * br + r, 2 * bc + c);
    return m;
  }
  void set_block(int br, int bc, const Mat2& m) {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) (*this)(2 * br + r, 2 * bc + c) = m(r, c);
  }
  static Mat4 from_blocks(const Mat2& ul, const Mat2& ur, const Mat2& ll, const Mat2& lr) {
    Mat4 m;
    m.set_block(0, 0, ul);
    m.set_block(0, 1, ur);
    m.set_block(1, 0, ll);
    m.set_block(1, 1, lr);
    return m;
  }

  /// Gauss-Jordan with partial pivoting.
  Mat4 inverse() const {
    Mat4 a = *this;
    Mat4 inv = identity();
    for (int col = 0; col < 4; ++col) {
      int piv = col;
      for (int r = col + 1; r < 4; ++r)
        if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
      if (std::abs(a(piv, col)) == 0.0) throw std::domain_error("Mat4::inverse: singular matrix");
      if (piv != col)
        for (int c = 0; c < 4; ++c) {
          std::swap(a(piv, c), a(col, c));
          std::swap(inv(piv, c), inv(col, c));
        }
      const cplx s = 1.0 / a(col, col);
      for (int c = 0; c < 4; ++c) {
        a(col, c) *= s;
        inv(col, c) *= s;
      }
      for (int r = 0; r < 4; ++r) {
        if (r == col) continue;
        const cplx f = a(r, col);
        if (f == 0.0) continue;
        for (int c = 0; c < 4; ++c) {
          a(r, c) -= f * a(col, c);
          inv(r, c) -= f * inv(col, c);
        }
      }
    }
    return inv;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : e) m = std::max(m, std::abs(v));
    return m;
  }
};

inline double max_abs_diff(const Mat4& a, const Mat4& b) { return (a - b).max_abs(); }

inline std::ostream& operator<<(std::ostream& os, const Mat4& m) {
  os << "[";
  for (int r = 0; r < 4; ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < 4; ++c) os << (c ? ", " : "") << m(r, c);
    os << "]";
  }
  os << "]";
  return os;
}

/// Dense 4x4 real matrix (Lorentz transformations).
struct Mat4r {
  std::array<double, 16> e{};

  static Mat4r zero() { return {}; }
  static Mat4r identity() {
    Mat4r m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }
  const double& operator()(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }

  Mat4r operator*(const Mat4r& o) const {
    Mat4r m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += (*this)(r, k) * o(k, c);
        m(r, c) = s;
      }
    return m;
  }
  Mat4r operator-(const Mat4r& o) const {
    Mat4r m;
    for (std::size_t i = 0; i < 16; ++i) m.e[i] = e[i] - o.e[i];
    return m;
  }
  Mat4r transpose() const {
    Mat4r m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(c, r) = (*this)(r, c);
    return m;
  }
  double max_abs() const {
    double m = 0.0;
    for (double v : e) m = std::max(m, std::abs(v));
    return m;
  }
  double det() const {
    // expansion by minors is fine at this size
    auto m3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
      return (*this)(r0, c0) * ((*this)(r1, c1) * (*this)(r2, c2) - (*this)(r1, c2) * (*this)(r2, c1)) -
             (*this)(r0, c1) * ((*this)(r1, c0) * (*this)(r2, c2) - (*this)(r1, c2) * (*this)(r2, c0)) +
             (*this)(r0, c2) * ((*this)(r1, c0) * (*this)(r2, c1) - (*this)(r1, c1) * (*this)(r2, c0));
    };
    return (*this)(0, 0) * m3(1, 2, 3, 1, 2, 3) - (*this)(0, 1) * m3(1, 2, 3, 0, 2, 3) +
           (*this)(0, 2) * m3(1, 2, 3, 0, 1, 3) - (*this)(0, 3) * m3(1, 2, 3, 0, 1, 2);
  }
};

inline double max_abs_diff(const Mat4r& a, const Mat4r& b) { return (a - b).max_abs(); }

inline std::ostream& operator<<(std::ostream& os, const Mat4r& m) {
  os << "[";
  for (int r = 0; r < 4; ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < 4; ++c) os << (c ? ", " : "") << m(r, c);
    os << "]";
  }
  os << "]";
  return os;
}

}  // namespace dkf
