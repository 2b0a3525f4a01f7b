#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ckwitt/common.hpp"

// First-order differential operators f(z) d/dz on one complex variable and
// their commutator.  For F = f d/dz and G = g d/dz,
//
//   [F, G] = (f g' - g f') d/dz
//
// so a field is represented by its coefficient together with the coefficient
// derivative.  Exact derivatives should be supplied when available (the
// elliptic-function realizations all have closed-form ones); field_numeric
// falls back to a fourth-order central difference.

namespace ckwitt::witt {

struct VectorField {
  std::function<cplx(cplx)> coeff;
  std::function<cplx(cplx)> deriv;
  // advisory exclusion radius around coefficient poles; 0 for entire functions
  double pole_margin = 0.0;
};

// Fourth-order central difference with a scale-aware step.
template <typename F>
inline cplx numeric_derivative(F&& f, cplx z) {
  const double h = 1e-4 * std::max(1.0, std::abs(z));
  return (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) /
         (12.0 * h);
}

inline VectorField field(std::function<cplx(cplx)> coeff,
                         std::function<cplx(cplx)> deriv,
                         double pole_margin = 0.0) {
  return {std::move(coeff), std::move(deriv), pole_margin};
}

inline VectorField field_numeric(std::function<cplx(cplx)> coeff,
                                 double pole_margin = 0.0) {
  VectorField v;
  v.coeff = coeff;
  v.deriv = [coeff](cplx z) { return numeric_derivative(coeff, z); };
  v.pole_margin = pole_margin;
  return v;
}

inline VectorField scaled(const VectorField& f, cplx s) {
  return {[c = f.coeff, s](cplx z) { return s * c(z); },
          [d = f.deriv, s](cplx z) { return s * d(z); }, f.pole_margin};
}

inline VectorField bracket(const VectorField& F, const VectorField& G) {
  auto coeff = [fc = F.coeff, fd = F.deriv, gc = G.coeff, gd = G.deriv](cplx z) {
    return fc(z) * gd(z) - gc(z) * fd(z);
  };
  // the bracket coefficient has no closed-form derivative in general
  return field_numeric(coeff, std::max(F.pole_margin, G.pole_margin));
}

struct SampleGrid {
  std::vector<cplx> points;
  double pole_margin = 0.0;  // margin the points were filtered against
  std::string description;
};

// max |[F,G] - target| over the grid
inline double relation_residual(const VectorField& F, const VectorField& G,
                                const VectorField& target,
                                const SampleGrid& grid) {
  if (grid.points.empty())
    throw std::invalid_argument("sample grid is empty");
  const VectorField B = bracket(F, G);
  double r = 0.0;
  for (cplx z : grid.points)
    r = std::max(r, std::abs(B.coeff(z) - target.coeff(z)));
  return r;
}

// Residuals of the three bracket relations of a triple (X0, X1, X2) against
// supplied targets: [X0,X1] vs targets[0], [X0,X2] vs targets[1],
// [X1,X2] vs targets[2].
inline std::array<double, 3> relation_residuals(
    const std::array<VectorField, 3>& triple,
    const std::array<VectorField, 3>& targets, const SampleGrid& grid) {
  return {relation_residual(triple[0], triple[1], targets[0], grid),
          relation_residual(triple[0], triple[2], targets[1], grid),
          relation_residual(triple[1], triple[2], targets[2], grid)};
}

inline double bracket_residual(const std::array<VectorField, 3>& triple,
                               const std::array<VectorField, 3>& targets,
                               const SampleGrid& grid) {
  const auto r = relation_residuals(triple, targets, grid);
  return std::max({r[0], r[1], r[2]});
}

}  // namespace ckwitt::witt
