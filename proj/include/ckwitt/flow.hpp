#pragma once

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ckwitt/common.hpp"
#include "ckwitt/jacobi.hpp"

// The coupled quadratic system generating the elliptic coefficient triples:
//
//   f1' + l1 f2 f3 = 0
//   f2' + l2 f1 f3 = 0
//   f3' + l3 f2 f1 = 0        with l1 + l2 + l3 = 0.
//
// Any solution conserves the pairwise first integrals
//   I12 = l1 f2^2 - l2 f1^2,
//   I23 = l2 f3^2 - l3 f2^2,
//   I13 = l1 f3^2 - l3 f1^2.
//
// For (l1, l2, l3) = (k^2, 1 - k^2, -1) the closed-form solution through the
// right initial point is the elliptic triple
//   f1 = -dn(z)/omega,  f2 = i sn(z),  f3 = i cn(z)/omega,
// whose integrals take the values (-1, -1, 1).  integrate() is a fixed-step
// classical Runge-Kutta march with a blow-up guard; steps are halved-grid
// comparable, so convergence order can be read off two resolutions.

namespace ckwitt::flow {

struct LambdaTriple {
  double l1, l2, l3;
};

struct StateTriple {
  cplx f1, f2, f3;
};

class blowup_error : public std::runtime_error {
 public:
  blowup_error(double z, double magnitude)
      : std::runtime_error(format(z, magnitude)), z_(z), magnitude_(magnitude) {}
  double z() const { return z_; }
  double magnitude() const { return magnitude_; }

 private:
  static std::string format(double z, double m) {
    std::ostringstream os;
    os << "trajectory blew up at z = " << z << " (|state| = " << m << ")";
    return os.str();
  }
  double z_, magnitude_;
};

inline constexpr double blowup_threshold = 1e6;

inline void check_couplings(const LambdaTriple& l) {
  const double scale =
      std::max({std::abs(l.l1), std::abs(l.l2), std::abs(l.l3), 1.0});
  if (std::abs(l.l1 + l.l2 + l.l3) > 1e-12 * scale)
    throw std::invalid_argument("couplings must sum to zero");
}

inline StateTriple rhs(const LambdaTriple& l, const StateTriple& s) {
  return {-l.l1 * s.f2 * s.f3, -l.l2 * s.f1 * s.f3, -l.l3 * s.f2 * s.f1};
}

inline std::array<cplx, 3> first_integrals(const LambdaTriple& l,
                                           const StateTriple& s) {
  return {l.l1 * s.f2 * s.f2 - l.l2 * s.f1 * s.f1,
          l.l2 * s.f3 * s.f3 - l.l3 * s.f2 * s.f2,
          l.l1 * s.f3 * s.f3 - l.l3 * s.f1 * s.f1};
}

struct Trajectory {
  std::vector<double> z;
  std::vector<StateTriple> states;
};

namespace detail {

inline StateTriple axpy(const StateTriple& s, double a, const StateTriple& d) {
  return {s.f1 + a * d.f1, s.f2 + a * d.f2, s.f3 + a * d.f3};
}

inline double max_norm(const StateTriple& s) {
  return std::max({std::abs(s.f1), std::abs(s.f2), std::abs(s.f3)});
}

}  // namespace detail

// Classical fixed-step RK4 from 0 to z_end along the real axis.  Saves every
// step including the initial state.
inline Trajectory integrate(const LambdaTriple& l, const StateTriple& s0,
                            double z_end, int steps) {
  check_couplings(l);
  if (steps < 1) throw std::invalid_argument("step count must be positive");
  if (!(z_end >= 0.0)) throw std::invalid_argument("integration span must be non-negative");
  const double h = z_end / double(steps);
  Trajectory tr;
  tr.z.reserve(steps + 1);
  tr.states.reserve(steps + 1);
  StateTriple s = s0;
  tr.z.push_back(0.0);
  tr.states.push_back(s);
  if (z_end == 0.0) return tr;
  for (int n = 0; n < steps; ++n) {
    const StateTriple k1 = rhs(l, s);
    const StateTriple k2 = rhs(l, detail::axpy(s, 0.5 * h, k1));
    const StateTriple k3 = rhs(l, detail::axpy(s, 0.5 * h, k2));
    const StateTriple k4 = rhs(l, detail::axpy(s, h, k3));
    s.f1 += (h / 6.0) * (k1.f1 + 2.0 * k2.f1 + 2.0 * k3.f1 + k4.f1);
    s.f2 += (h / 6.0) * (k1.f2 + 2.0 * k2.f2 + 2.0 * k3.f2 + k4.f2);
    s.f3 += (h / 6.0) * (k1.f3 + 2.0 * k2.f3 + 2.0 * k3.f3 + k4.f3);
    const double z = double(n + 1) * h;
    if (detail::max_norm(s) > blowup_threshold)
      throw blowup_error(z, detail::max_norm(s));
    tr.z.push_back(z);
    tr.states.push_back(s);
  }
  return tr;
}

// Couplings whose closed-form solution is the elliptic coefficient triple.
inline LambdaTriple couplings_for_modulus(double k) {
  if (!(k > 0.0 && k < 1.0))
    throw std::domain_error("modulus must lie in (0,1)");
  return {k * k, (1.0 - k) * (1.0 + k), -1.0};
}

// (-dn/omega, i sn, i cn/omega) at real z.
inline StateTriple closed_form_state(double k, double z) {
  const double omega = std::sqrt((1.0 - k) * (1.0 + k));
  const cplx i(0.0, 1.0);
  using jacobi::Fn;
  return {-jacobi::eval(Fn::dn, z, k) / omega, i * jacobi::eval(Fn::sn, z, k),
          i * jacobi::eval(Fn::cn, z, k) / omega};
}

// Max deviation of the RK4 trajectory from the closed form, sampled at every
// saved step.
inline double closed_form_deviation(double k, double z_end, int steps) {
  const Trajectory tr =
      integrate(couplings_for_modulus(k), closed_form_state(k, 0.0), z_end, steps);
  double worst = 0.0;
  for (std::size_t n = 0; n < tr.states.size(); ++n) {
    const StateTriple ref = closed_form_state(k, tr.z[n]);
    const StateTriple d = {tr.states[n].f1 - ref.f1, tr.states[n].f2 - ref.f2,
                           tr.states[n].f3 - ref.f3};
    worst = std::max(worst, detail::max_norm(d));
  }
  return worst;
}

// Max drift of the three first integrals along a trajectory.
inline double integral_drift(const LambdaTriple& l, const Trajectory& tr) {
  if (tr.states.empty()) throw std::invalid_argument("empty trajectory");
  const auto ref = first_integrals(l, tr.states.front());
  double worst = 0.0;
  for (const auto& s : tr.states) {
    const auto cur = first_integrals(l, s);
    for (int i = 0; i < 3; ++i)
      worst = std::max(worst, std::abs(cur[i] - ref[i]));
  }
  return worst;
}

}  // namespace ckwitt::flow
