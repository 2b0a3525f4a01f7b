#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace ckwitt {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Evaluation point fell inside the pole-exclusion radius of a function with
// poles on the period lattice.  Carries the offending pole so callers can
// report or re-grid.
class pole_error : public std::domain_error {
 public:
  pole_error(const std::string& what, cplx nearest, double dist)
      : std::domain_error(what), nearest_pole_(nearest), distance_(dist) {}
  cplx nearest_pole() const { return nearest_pole_; }
  double distance() const { return distance_; }

 private:
  cplx nearest_pole_;
  double distance_;
};

// A series could not reach its tail bound: nome too close to the unit circle
// or argument too deep in the imaginary direction for the term cap.
class no_convergence : public std::runtime_error {
 public:
  explicit no_convergence(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Arithmetic-geometric mean of positive reals.  Quadratic convergence; the
// iteration cap is never reached for arguments away from zero.
inline double agm(double a, double b) {
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-17 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

}  // namespace detail
}  // namespace ckwitt
