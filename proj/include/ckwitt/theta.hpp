#pragma once

#include <complex>
#include <stdexcept>

#include "ckwitt/common.hpp"

// Jacobi theta functions of a complex argument.
//
// Conventions: the lattice parameter tau lives in the upper half-plane and
// the nome is q = exp(i*pi*tau), so |q| < 1.  The argument u is NOT scaled by
// pi; the four series are
//
//   theta1(u) = 2 * sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) u)
//   theta2(u) = 2 * sum_{n>=0}        q^{(n+1/2)^2} cos((2n+1) u)
//   theta3(u) = 1 + 2 * sum_{n>=1}        q^{n^2} cos(2 n u)
//   theta4(u) = 1 + 2 * sum_{n>=1} (-1)^n q^{n^2} cos(2 n u)
//
// theta1 is odd in u, the other three are even; theta3 has period pi.
// Successive q-powers come from the recurrences
//   q^{(n+3/2)^2} = q^{(n+1/2)^2} * q^{2n+2}
//   q^{(n+1)^2}   = q^{n^2}       * q^{2n+1}
// so no per-term pow() is needed.  Summation stops once a term's magnitude
// bound, 2|q^e| exp(order * |Im u|), falls below 1e-16 of the larger of the
// running sum and the biggest bound seen so far.  Testing the bound instead
// of the realized term matters: an accidental zero of the sin/cos factor
// (say cos((2n)u) at u = pi/4) would otherwise end the series while later
// terms are still significant.  Taking the max with the peak bound keeps the
// exact-zero cases (theta1 at u = 0) terminating.  If 64 terms do not get
// there (or |q| > 0.97, where the tail is hopeless) no_convergence is thrown.

namespace ckwitt::theta {

// Upper half-plane lattice parameter with its precomputed nome.
struct LatticeParam {
  cplx tau;
  cplx q;  // exp(i*pi*tau)
};

// Complementary modulus pair with k^2 + k_prime^2 = 1.
struct ModulusPair {
  cplx k;
  cplx k_prime;
};

inline cplx nome_from_tau(cplx tau) {
  if (!(tau.imag() > 0.0))
    throw std::domain_error("lattice parameter must have positive imaginary part");
  return std::exp(cplx(0.0, pi) * tau);
}

namespace detail {

inline constexpr int max_terms = 64;
inline constexpr double tail_bound = 1e-16;

inline cplx theta_series(int index, cplx u, cplx q) {
  if (index < 1 || index > 4)
    throw std::invalid_argument("theta index must be 1, 2, 3 or 4");
  if (std::abs(q) > 0.97)
    throw no_convergence("nome magnitude exceeds 0.97");

  const cplx qq = q * q;
  // exp(|Im u|) bounds |sin| and |cos| per unit of the angle multiplier; amp
  // tracks the bound for the current term's angle and egrow advances it by
  // one index step (the multiplier grows by 2 each term).
  const double egrow = std::exp(2.0 * std::abs(u.imag()));
  cplx sum;
  if (index <= 2) {
    sum = 0.0;
    cplx r = std::pow(q, 0.25);  // q^{(n+1/2)^2} at n = 0
    cplx step = qq;              // q^{2n+2}
    double sgn = 1.0;
    double amp = std::exp(std::abs(u.imag()));  // bound at angle (2n+1)u, n = 0
    double scale = 0.0;
    for (int n = 0; n < max_terms; ++n) {
      const cplx ang = double(2 * n + 1) * u;
      const cplx term = (index == 1) ? 2.0 * sgn * r * std::sin(ang)
                                     : 2.0 * r * std::cos(ang);
      sum += term;
      const double env = 2.0 * std::abs(r) * amp;
      scale = std::max(scale, env);
      if (env <= tail_bound * std::max(std::abs(sum), scale)) return sum;
      r *= step;
      step *= qq;
      sgn = -sgn;
      amp *= egrow;
    }
  } else {
    sum = 1.0;
    cplx r = q;         // q^{n^2} at n = 1
    cplx step = q * qq; // q^{2n+1}
    double sgn = (index == 4) ? -1.0 : 1.0;
    double amp = egrow;  // bound at angle 2nu, n = 1
    double scale = 1.0;  // the constant leading term
    for (int n = 1; n <= max_terms; ++n) {
      const cplx term = 2.0 * sgn * r * std::cos(double(2 * n) * u);
      sum += term;
      const double env = 2.0 * std::abs(r) * amp;
      scale = std::max(scale, env);
      if (env <= tail_bound * std::max(std::abs(sum), scale)) return sum;
      r *= step;
      step *= qq;
      if (index == 4) sgn = -sgn;
      amp *= egrow;
    }
  }
  throw no_convergence("theta series did not converge within the term cap");
}

}  // namespace detail

inline cplx theta(int index, cplx u, cplx tau) {
  return detail::theta_series(index, u, nome_from_tau(tau));
}

inline cplx theta(int index, cplx u, const LatticeParam& lp) {
  return detail::theta_series(index, u, lp.q);
}

// Modulus pair from the theta null quotients k = (theta2/theta3)^2 and
// k' = (theta4/theta3)^2 evaluated at u = 0.
inline ModulusPair modulus_from_tau(cplx tau) {
  const cplx q = nome_from_tau(tau);
  const cplx t2 = detail::theta_series(2, 0.0, q);
  const cplx t3 = detail::theta_series(3, 0.0, q);
  const cplx t4 = detail::theta_series(4, 0.0, q);
  const cplx r2 = t2 / t3;
  const cplx r4 = t4 / t3;
  return {r2 * r2, r4 * r4};
}

// Inverse map for a real modulus in (0,1): tau = i K'/K with the quarter
// periods from the arithmetic-geometric mean, q = exp(-pi K'/K).
inline LatticeParam tau_from_modulus(double k) {
  if (!(k > 0.0 && k < 1.0))
    throw std::domain_error("modulus must lie in (0,1)");
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  const double ratio = ckwitt::detail::agm(1.0, k) / ckwitt::detail::agm(1.0, kp);
  return {cplx(0.0, 1.0 / ratio), cplx(std::exp(-pi / ratio), 0.0)};
}

}  // namespace ckwitt::theta
