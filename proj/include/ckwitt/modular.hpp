#pragma once

#include <cstdint>
#include <stdexcept>

#include "ckwitt/common.hpp"
#include "ckwitt/jacobi.hpp"

// Modular transformations of the lattice parameter and the two induced
// function families used downstream.
//
// An element [[a,b],[c,d]] with ad - bc = 1 acts on the upper half-plane as
// tau -> (c + d tau) / (a + b tau).  With this convention composition of
// actions is the plain matrix product: apply(compose(m2, m1), tau) equals
// apply(m2, apply(m1, tau)).
//
// Two derived real-modulus families:
//   kprime_value:  f(z; k') expressed through functions of modulus k at the
//                  rotated argument i z (one quarter-turn of the lattice).
//   lambda_value:  the degree-two map lambda = i k / k', lambda' = 1 / k';
//                  sn, cn, dn of modulus lambda reduce to sd, cd, nd of
//                  modulus k at the stretched argument u / k'.

namespace ckwitt::modular {

struct ModularElement {
  long long a, b, c, d;
};

inline ModularElement modular_element(long long a, long long b, long long c,
                                      long long d) {
  if (a * d - b * c != 1)
    throw std::invalid_argument("modular element must have determinant 1");
  return {a, b, c, d};
}

// Generators: P shifts tau -> 1 + tau, Q inverts tau -> -1/tau.
inline ModularElement P() { return {1, 0, 1, 1}; }
inline ModularElement Q() { return {0, 1, -1, 0}; }

// Matrix product m2 * m1; the action applies m1 first.
inline ModularElement compose(const ModularElement& m2, const ModularElement& m1) {
  return {m2.a * m1.a + m2.b * m1.c, m2.a * m1.b + m2.b * m1.d,
          m2.c * m1.a + m2.d * m1.c, m2.c * m1.b + m2.d * m1.d};
}

inline ModularElement inverse(const ModularElement& m) {
  return {m.d, -m.b, -m.c, m.a};
}

inline cplx apply(const ModularElement& m, cplx tau) {
  if (!(tau.imag() > 0.0))
    throw std::domain_error("lattice parameter must have positive imaginary part");
  return (cplx(double(m.c)) + double(m.d) * tau) /
         (cplx(double(m.a)) + double(m.b) * tau);
}

// Complementary-modulus interchange: every function of modulus k' at z equals
// (up to a factor from {1, i, -i}) a partner function of modulus k at i z.
inline cplx kprime_value(jacobi::Fn f, cplx z, double k,
                         double pole_margin = jacobi::default_pole_margin) {
  using jacobi::Fn;
  const cplx zi = cplx(0.0, 1.0) * z;
  const cplx i(0.0, 1.0);
  auto at = [&](Fn g) { return jacobi::eval(g, zi, k, pole_margin); };
  switch (f) {
    case Fn::sn: return -i * at(Fn::sc);
    case Fn::cn: return at(Fn::nc);
    case Fn::dn: return at(Fn::dc);
    case Fn::ns: return i * at(Fn::cs);
    case Fn::nc: return at(Fn::cn);
    case Fn::nd: return at(Fn::cd);
    case Fn::sc: return -i * at(Fn::sn);
    case Fn::sd: return -i * at(Fn::sd);
    case Fn::cd: return at(Fn::nd);
    case Fn::cs: return i * at(Fn::ns);
    case Fn::ds: return i * at(Fn::ds);
    case Fn::dc: return at(Fn::dn);
  }
  throw std::invalid_argument("unknown function id");
}

struct TransformedModulus {
  cplx lambda;        // i k / k'
  cplx lambda_prime;  // 1 / k'
};

inline TransformedModulus lambda_modulus(double k) {
  if (!(k > 0.0 && k < 1.0))
    throw std::domain_error("modulus must lie in (0,1)");
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  return {cplx(0.0, k / kp), cplx(1.0 / kp, 0.0)};
}

// sn, cn, dn at modulus lambda; other ids do not reduce within this family.
inline cplx lambda_value(jacobi::Fn f, cplx u, double k,
                         double pole_margin = jacobi::default_pole_margin) {
  using jacobi::Fn;
  if (!(k > 0.0 && k < 1.0))
    throw std::domain_error("modulus must lie in (0,1)");
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  const cplx w = u / kp;
  switch (f) {
    case Fn::sn: return kp * jacobi::eval(Fn::sd, w, k, pole_margin);
    case Fn::cn: return jacobi::eval(Fn::cd, w, k, pole_margin);
    case Fn::dn: return jacobi::eval(Fn::nd, w, k, pole_margin);
    default:
      throw std::invalid_argument("lambda family is defined for sn, cn, dn only");
  }
}

}  // namespace ckwitt::modular
