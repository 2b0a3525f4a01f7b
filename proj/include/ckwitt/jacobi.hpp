#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "ckwitt/common.hpp"
#include "ckwitt/theta.hpp"

// Jacobi elliptic functions of a complex argument and real modulus k in
// (0,1), built on theta quotients.  With u = z * pi / (2K):
//
//   sn z = (t3/t2) theta1(u) / theta4(u)
//   cn z = (t4/t2) theta2(u) / theta4(u)
//   dn z = (t4/t3) theta3(u) / theta4(u)
//
// where t2, t3, t4 are the theta nulls of the real nome q = exp(-pi K'/K).
// The other nine functions are quotients of these three, named by the
// Glaisher convention: the first letter is the numerator, the second the
// denominator, with n standing for 1 (so nd = 1/dn, sc = sn/cn, ...).
//
// Poles sit on translates of one point per denominator letter:
//   denominator n : i K'   (mod 2K, 2iK')
//   denominator s : 0
//   denominator c : K
//   denominator d : K + i K'
// eval() refuses points closer to the pole lattice than pole_margin and
// throws pole_error carrying the nearest pole.

namespace ckwitt::jacobi {

enum class Fn { sn, cn, dn, ns, nc, nd, sc, sd, cd, cs, ds, dc };

inline constexpr std::array<Fn, 12> all_functions = {
    Fn::sn, Fn::cn, Fn::dn, Fn::ns, Fn::nc, Fn::nd,
    Fn::sc, Fn::sd, Fn::cd, Fn::cs, Fn::ds, Fn::dc};

inline constexpr double default_pole_margin = 1e-3;

inline const char* name(Fn f) {
  switch (f) {
    case Fn::sn: return "sn";
    case Fn::cn: return "cn";
    case Fn::dn: return "dn";
    case Fn::ns: return "ns";
    case Fn::nc: return "nc";
    case Fn::nd: return "nd";
    case Fn::sc: return "sc";
    case Fn::sd: return "sd";
    case Fn::cd: return "cd";
    case Fn::cs: return "cs";
    case Fn::ds: return "ds";
    case Fn::dc: return "dc";
  }
  return "?";
}

inline std::optional<Fn> parse_fn(std::string_view s) {
  for (Fn f : all_functions)
    if (s == name(f)) return f;
  return std::nullopt;
}

struct QuarterPeriods {
  double K;
  double K_prime;
};

namespace detail {

inline char numerator_letter(Fn f) { return name(f)[0]; }
inline char denominator_letter(Fn f) { return name(f)[1]; }

struct Context {
  double k, kp, K, Kp, q;
  double n2, n3, n4;  // theta nulls at the real nome
};

inline Context make_context(double k) {
  if (!(k > 0.0 && k < 1.0))
    throw std::domain_error("modulus must lie in (0,1)");
  Context c;
  c.k = k;
  c.kp = std::sqrt((1.0 - k) * (1.0 + k));
  c.K = pi / (2.0 * ckwitt::detail::agm(1.0, c.kp));
  c.Kp = pi / (2.0 * ckwitt::detail::agm(1.0, k));
  c.q = std::exp(-pi * c.Kp / c.K);
  const cplx q = c.q;
  c.n2 = theta::detail::theta_series(2, 0.0, q).real();
  c.n3 = theta::detail::theta_series(3, 0.0, q).real();
  c.n4 = theta::detail::theta_series(4, 0.0, q).real();
  return c;
}

struct Triple {
  cplx sn, cn, dn;
};

inline Triple sn_cn_dn(cplx z, const Context& c) {
  const cplx u = z * (pi / (2.0 * c.K));
  const cplx q = c.q;
  const cplx t1 = theta::detail::theta_series(1, u, q);
  const cplx t2 = theta::detail::theta_series(2, u, q);
  const cplx t3 = theta::detail::theta_series(3, u, q);
  const cplx t4 = theta::detail::theta_series(4, u, q);
  return {(c.n3 / c.n2) * (t1 / t4), (c.n4 / c.n2) * (t2 / t4),
          (c.n4 / c.n3) * (t3 / t4)};
}

inline cplx letter_value(char letter, const Triple& t) {
  switch (letter) {
    case 's': return t.sn;
    case 'c': return t.cn;
    case 'd': return t.dn;
    default: return 1.0;  // 'n'
  }
}

// Base point of the pole lattice for a denominator letter.
inline cplx pole_origin(char den, double K, double Kp) {
  switch (den) {
    case 'n': return cplx(0.0, Kp);
    case 's': return cplx(0.0, 0.0);
    case 'c': return cplx(K, 0.0);
    default: return cplx(K, Kp);  // 'd'
  }
}

// The lattice is rectangular with periods (2K, 2K'), so the nearest translate
// separates into independent roundings of the two coordinates.
inline cplx nearest_lattice_point(cplx z, cplx origin, double K, double Kp) {
  const double dx = std::remainder(z.real() - origin.real(), 2.0 * K);
  const double dy = std::remainder(z.imag() - origin.imag(), 2.0 * Kp);
  return z - cplx(dx, dy);
}

}  // namespace detail

inline QuarterPeriods quarter_periods(double k) {
  const auto c = detail::make_context(k);
  return {c.K, c.Kp};
}

inline cplx nearest_pole(Fn f, cplx z, double k) {
  const auto c = detail::make_context(k);
  const cplx origin = detail::pole_origin(detail::denominator_letter(f), c.K, c.Kp);
  return detail::nearest_lattice_point(z, origin, c.K, c.Kp);
}

inline double pole_distance(Fn f, cplx z, double k) {
  return std::abs(z - nearest_pole(f, z, k));
}

namespace detail {

inline Triple eval_triple_checked(Fn f, cplx z, const Context& c, double pole_margin) {
  const cplx origin = pole_origin(denominator_letter(f), c.K, c.Kp);
  const cplx pole = nearest_lattice_point(z, origin, c.K, c.Kp);
  const double dist = std::abs(z - pole);
  if (dist < pole_margin)
    throw pole_error(std::string(name(f)) + ": argument within pole margin",
                     pole, dist);
  return sn_cn_dn(z, c);
}

}  // namespace detail

inline cplx eval(Fn f, cplx z, double k, double pole_margin = default_pole_margin) {
  const auto c = detail::make_context(k);
  const auto t = detail::eval_triple_checked(f, z, c, pole_margin);
  return detail::letter_value(detail::numerator_letter(f), t) /
         detail::letter_value(detail::denominator_letter(f), t);
}

// Closed-form z-derivatives.  Each right-hand side is a product of two other
// functions (times k^2 or k'^2 where needed), so a single theta evaluation
// serves all twelve.
inline cplx eval_derivative(Fn f, cplx z, double k,
                            double pole_margin = default_pole_margin) {
  const auto c = detail::make_context(k);
  const auto t = detail::eval_triple_checked(f, z, c, pole_margin);
  const cplx s = t.sn, cnv = t.cn, d = t.dn;
  const double k2 = k * k, kp2 = c.kp * c.kp;
  switch (f) {
    case Fn::sn: return cnv * d;
    case Fn::cn: return -s * d;
    case Fn::dn: return -k2 * s * cnv;
    case Fn::ns: return -(cnv / s) * (d / s);
    case Fn::cs: return -(1.0 / s) * (d / s);
    case Fn::ds: return -(cnv / s) * (1.0 / s);
    case Fn::nc: return (s / cnv) * (d / cnv);
    case Fn::sc: return (1.0 / cnv) * (d / cnv);
    case Fn::dc: return kp2 * (s / cnv) * (1.0 / cnv);
    case Fn::nd: return k2 * (cnv / d) * (s / d);
    case Fn::cd: return -kp2 * (1.0 / d) * (s / d);
    case Fn::sd: return (cnv / d) * (1.0 / d);
  }
  throw std::invalid_argument("unknown function id");
}

// Degenerate-modulus limits.  trig is k -> 0, hyperbolic is k -> 1.  A
// nullopt marks a prohibited limit: the function degenerates to something
// with the wrong periodicity structure (1/sin family as k -> 0 on both
// counts, the cn-denominator family as k -> 0, the sn-denominator family in
// both limits).
enum class Limit { trig, hyperbolic };

inline std::optional<cplx> eval_limit(Fn f, cplx z, Limit which) {
  if (which == Limit::trig) {
    switch (f) {
      case Fn::sn: return std::sin(z);
      case Fn::cn: return std::cos(z);
      case Fn::dn: return cplx(1.0);
      case Fn::nd: return cplx(1.0);
      case Fn::cd: return std::cos(z);
      case Fn::sd: return std::sin(z);
      default: return std::nullopt;
    }
  }
  switch (f) {
    case Fn::sn: return std::tanh(z);
    case Fn::cn: return 1.0 / std::cosh(z);
    case Fn::dn: return 1.0 / std::cosh(z);
    case Fn::nc: return std::cosh(z);
    case Fn::sc: return std::sinh(z);
    case Fn::dc: return cplx(1.0);
    case Fn::nd: return std::cosh(z);
    case Fn::cd: return cplx(1.0);
    case Fn::sd: return std::sinh(z);
    default: return std::nullopt;
  }
}

// Same rule table as eval_derivative with k^2 frozen at 0 or 1.
inline std::optional<cplx> eval_limit_derivative(Fn f, cplx z, Limit which) {
  if (which == Limit::trig) {
    switch (f) {
      case Fn::sn: return std::cos(z);
      case Fn::cn: return -std::sin(z);
      case Fn::dn: return cplx(0.0);
      case Fn::nd: return cplx(0.0);
      case Fn::cd: return -std::sin(z);
      case Fn::sd: return std::cos(z);
      default: return std::nullopt;
    }
  }
  const cplx ch = std::cosh(z);
  switch (f) {
    case Fn::sn: return 1.0 / (ch * ch);
    case Fn::cn: return -std::sinh(z) / (ch * ch);
    case Fn::dn: return -std::sinh(z) / (ch * ch);
    case Fn::nc: return std::sinh(z);
    case Fn::sc: return ch;
    case Fn::dc: return cplx(0.0);
    case Fn::nd: return std::sinh(z);
    case Fn::cd: return cplx(0.0);
    case Fn::sd: return ch;
    default: return std::nullopt;
  }
}

}  // namespace ckwitt::jacobi
