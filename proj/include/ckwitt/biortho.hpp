#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "ckwitt/cayley_klein.hpp"
#include "ckwitt/common.hpp"

// Biorthogonal spinor pairs and the deformed spin matrices they generate.
//
// Starting from the half-Pauli matrices S_m (standard Pauli over 2) and the
// orthonormal pair q_j = (1, (-1)^{j-1}) / sqrt(2), the non-unitary rotation
//
//   T(vartheta, varphi) = cos(vartheta/2) I
//                       + cos(varphi/2) sin(vartheta/2) (2 S_1)
//                       - sin(varphi/2) sin(vartheta/2) (2 S_2)
//
// produces phi_j = T q_j and the dual family chi_j = (T^dagger)^{-1} q_j,
// biorthogonal by construction: <chi_j | phi_l> = delta_jl.  At varphi = pi
// the dyadic combinations of the pairs close on the one-parameter family
//
//   S_1^g = 1/2 [[-i g, 1], [1, i g]]
//   S_2^g = 1/2 [[0, -i], [i, 0]]
//   S_3^g = 1/2 [[1, i g], [i g, -1]]
//
// with g = sin(vartheta), which deforms su(2):
//   [S_1^g, S_2^g] = i S_3^g, [S_2^g, S_3^g] = i S_1^g,
//   [S_3^g, S_1^g] = i (1 - g^2) S_2^g.
// Scaled versions of these deformed matrices realize all four Cayley-Klein
// commutator tables (matrix_generators).

namespace ckwitt::biortho {

struct Vec2 {
  cplx x, y;
};

struct Matrix2 {
  cplx m00, m01, m10, m11;
};

inline Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
  return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
}

inline Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
  return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}

inline Matrix2 operator*(cplx s, const Matrix2& a) {
  return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
}

inline Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

inline Vec2 operator*(const Matrix2& a, const Vec2& v) {
  return {a.m00 * v.x + a.m01 * v.y, a.m10 * v.x + a.m11 * v.y};
}

inline Matrix2 identity2() { return {1.0, 0.0, 0.0, 1.0}; }

inline Matrix2 commutator(const Matrix2& a, const Matrix2& b) {
  return a * b - b * a;
}

inline cplx det(const Matrix2& a) { return a.m00 * a.m11 - a.m01 * a.m10; }

inline cplx trace(const Matrix2& a) { return a.m00 + a.m11; }

inline Matrix2 adjoint(const Matrix2& a) {
  return {std::conj(a.m00), std::conj(a.m10), std::conj(a.m01),
          std::conj(a.m11)};
}

inline Matrix2 inverse(const Matrix2& a) {
  const cplx d = det(a);
  if (std::abs(d) < 1e-15)
    throw std::domain_error("matrix is singular");
  return {a.m11 / d, -a.m01 / d, -a.m10 / d, a.m00 / d};
}

inline double max_abs(const Matrix2& a) {
  return std::max(std::max(std::abs(a.m00), std::abs(a.m01)),
                  std::max(std::abs(a.m10), std::abs(a.m11)));
}

// <u|v> with the left slot conjugated
inline cplx inner(const Vec2& u, const Vec2& v) {
  return std::conj(u.x) * v.x + std::conj(u.y) * v.y;
}

// |u><v| so that outer(u, v) * w = u <v|w>
inline Matrix2 outer(const Vec2& u, const Vec2& v) {
  return {u.x * std::conj(v.x), u.x * std::conj(v.y), u.y * std::conj(v.x),
          u.y * std::conj(v.y)};
}

// Half-Pauli matrices, m in {1, 2, 3}.
inline Matrix2 spin_half(int m) {
  switch (m) {
    case 1: return {0.0, 0.5, 0.5, 0.0};
    case 2: return {0.0, cplx(0.0, -0.5), cplx(0.0, 0.5), 0.0};
    case 3: return {0.5, 0.0, 0.0, -0.5};
    default: throw std::invalid_argument("spin index must be 1, 2 or 3");
  }
}

inline Matrix2 build_T(double vartheta, double varphi) {
  const double ch = std::cos(0.5 * vartheta), sh = std::sin(0.5 * vartheta);
  const double cp = std::cos(0.5 * varphi), sp = std::sin(0.5 * varphi);
  const Matrix2 one = identity2();
  return (cplx(ch) * one) + (cplx(2.0 * cp * sh) * spin_half(1)) -
         (cplx(2.0 * sp * sh) * spin_half(2));
}

struct BiorthoSystem {
  double vartheta;
  double gamma;  // sin(vartheta)
  double omega;  // cos(vartheta)
  Matrix2 T;
  std::array<Vec2, 2> phi;
  std::array<Vec2, 2> chi;
};

// Biorthogonal pairs at varphi = pi.  Degenerates when cos(vartheta) = 0.
inline BiorthoSystem biortho_pairs(double vartheta) {
  const Matrix2 T = build_T(vartheta, pi);
  if (std::abs(det(T)) < 1e-12)
    throw std::domain_error("rotation is singular at this vartheta");
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<Vec2, 2> q = {Vec2{r, r}, Vec2{r, -r}};
  const Matrix2 dual = inverse(adjoint(T));
  BiorthoSystem s;
  s.vartheta = vartheta;
  s.gamma = std::sin(vartheta);
  s.omega = std::cos(vartheta);
  s.T = T;
  for (int j = 0; j < 2; ++j) {
    s.phi[j] = T * q[j];
    s.chi[j] = dual * q[j];
  }
  return s;
}

// Deformed spin matrices; requires |gamma| < 1.
inline Matrix2 sigma_gamma(int m, double gamma) {
  if (!(std::abs(gamma) < 1.0))
    throw std::domain_error("deformation parameter must satisfy |gamma| < 1");
  const cplx ig(0.0, gamma);
  switch (m) {
    case 1: return {-0.5 * ig, 0.5, 0.5, 0.5 * ig};
    case 2: return {0.0, cplx(0.0, -0.5), cplx(0.0, 0.5), 0.0};
    case 3: return {0.5, 0.5 * ig, 0.5 * ig, -0.5};
    default: throw std::invalid_argument("spin index must be 1, 2 or 3");
  }
}

// 2x2 generator triples (J, P1, P2) obeying the Cayley-Klein tables, built
// from the deformed spin matrices with omega = sqrt(1 - gamma^2).
inline std::array<Matrix2, 3> matrix_generators(CkType t, double gamma) {
  if (!(std::abs(gamma) < 1.0))
    throw std::domain_error("deformation parameter must satisfy |gamma| < 1");
  const double omega = std::sqrt((1.0 - gamma) * (1.0 + gamma));
  const cplx i(0.0, 1.0);
  const Matrix2 s1 = sigma_gamma(1, gamma);
  const Matrix2 s2 = sigma_gamma(2, gamma);
  const Matrix2 s3 = sigma_gamma(3, gamma);
  switch (t) {
    case CkType::elliptic:
      return {(i / omega) * s1, i * s2, (-i / omega) * s3};
    case CkType::hyperbolic:
      return {(i / omega) * s1, cplx(1.0) * s2, cplx(-1.0 / omega) * s3};
    case CkType::co_hyperbolic:
      return {cplx(-1.0 / omega) * s1, i * s2, cplx(1.0 / omega) * s3};
    case CkType::doubly_hyperbolic:
      return {cplx(1.0) * s2, cplx(-1.0 / omega) * s1, (i / omega) * s3};
  }
  throw std::invalid_argument("unknown algebra type");
}

}  // namespace ckwitt::biortho
