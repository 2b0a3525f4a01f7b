#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ckwitt/biortho.hpp"
#include "ckwitt/cayley_klein.hpp"
#include "ckwitt/common.hpp"
#include "ckwitt/jacobi.hpp"
#include "ckwitt/witt.hpp"

// Catalog of realizations of the four Cayley-Klein commutator tables and the
// machinery to verify them numerically.
//
// Vector-field entries realize (J, P1, P2) as f(z) d/dz with coefficients
// sign * i^p * gamma^a * omega^b * fn(z), where fn is one of the twelve
// elliptic functions at modulus k, gamma = k and omega = k' = sqrt(1 - k^2).
// Four function families cover all four algebras each:
//
//   base      sn, cn, dn
//   nc_sc_dc  quotients with cn denominator
//   ns_cs_ds  quotients with sn denominator
//   nd_cd_sd  quotients with dn denominator
//
// plus two derived elliptic entries: kprime (the same coefficients read at
// the complementary modulus, reachable through the lattice quarter-turn) and
// lambda (the degree-two modulus map, arguments stretched by 1/k').  The
// matrix family realizes the same tables with 2x2 deformed spin matrices.
//
// Each entry records which degenerate-modulus limits stay finite: prefactors
// carrying 1/gamma diverge as k -> 0 and those carrying 1/omega diverge as
// k -> 1, and the ns_cs_ds family survives neither limit.
//
// Verification is by direct numerical comparison: assemble the brackets on a
// pole-aware sample grid, subtract the commutator-table targets, and report
// the max-abs residuals together with the quadratic Casimir combination
// (which vanishes identically for every cataloged triple).

namespace ckwitt::ck {

using biortho::Matrix2;
using witt::SampleGrid;
using witt::VectorField;

enum class Family { base, nc_sc_dc, ns_cs_ds, nd_cd_sd, kprime, lambda, matrix };

inline constexpr std::array<Family, 7> all_families = {
    Family::base,   Family::nc_sc_dc, Family::ns_cs_ds, Family::nd_cd_sd,
    Family::kprime, Family::lambda,   Family::matrix};

inline const char* name(Family f) {
  switch (f) {
    case Family::base: return "base";
    case Family::nc_sc_dc: return "nc_sc_dc";
    case Family::ns_cs_ds: return "ns_cs_ds";
    case Family::nd_cd_sd: return "nd_cd_sd";
    case Family::kprime: return "kprime";
    case Family::lambda: return "lambda";
    case Family::matrix: return "matrix";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (Family f : all_families)
    if (s == name(f)) return f;
  return std::nullopt;
}

// One coefficient: sign * i^i_pow * gamma^gamma_pow * omega^omega_pow * fn.
// Powers are restricted to {-1, 0, +1}.
struct CoeffSpec {
  int sign;
  int i_pow;
  int gamma_pow;
  int omega_pow;
  jacobi::Fn fn;
};

struct RealizationEntry {
  CkType type;
  Family family;
  std::array<CoeffSpec, 3> coeffs;  // (J, P1, P2); unused for matrix entries
  bool scale_arg_by_inv_kprime;     // lambda entry evaluates fn at z / k'
  bool limit_trig_allowed;
  bool limit_hyperbolic_allowed;
  bool derived;  // reached through a modular transformation
};

namespace detail {

inline RealizationEntry vf_entry(CkType t, Family fam, CoeffSpec j, CoeffSpec p1,
                                 CoeffSpec p2, bool trig_ok, bool hyp_ok,
                                 bool derived = false, bool scale_arg = false) {
  return {t, fam, {j, p1, p2}, scale_arg, trig_ok, hyp_ok, derived};
}

}  // namespace detail

inline const std::vector<RealizationEntry>& catalog() {
  using jacobi::Fn;
  using detail::vf_entry;
  static const std::vector<RealizationEntry> entries = [] {
    std::vector<RealizationEntry> v;
    const CkType E = CkType::elliptic, H = CkType::hyperbolic,
                 C = CkType::co_hyperbolic, D = CkType::doubly_hyperbolic;
    // base family: finite as k -> 0, prefactors 1/omega diverge as k -> 1
    v.push_back(vf_entry(E, Family::base, {-1, 0, 0, -1, Fn::dn},
                         {+1, 1, 0, -1, Fn::cn}, {+1, 1, 0, 0, Fn::sn}, true, false));
    v.push_back(vf_entry(H, Family::base, {-1, 0, 0, -1, Fn::dn},
                         {+1, 0, 0, -1, Fn::cn}, {+1, 0, 0, 0, Fn::sn}, true, false));
    v.push_back(vf_entry(C, Family::base, {+1, 0, 0, -1, Fn::cn},
                         {+1, 0, 0, -1, Fn::dn}, {+1, 0, 0, 0, Fn::sn}, true, false));
    v.push_back(vf_entry(D, Family::base, {+1, 0, 0, 0, Fn::sn},
                         {-1, 1, 0, -1, Fn::dn}, {+1, 1, 0, -1, Fn::cn}, true, false));
    // nc_sc_dc family: prefactors 1/gamma diverge as k -> 0, finite as k -> 1
    v.push_back(vf_entry(E, Family::nc_sc_dc, {+1, 1, -1, 0, Fn::dc},
                         {+1, 0, -1, 0, Fn::nc}, {+1, 1, 0, 0, Fn::sc}, false, true));
    v.push_back(vf_entry(H, Family::nc_sc_dc, {+1, 1, -1, 0, Fn::dc},
                         {-1, 0, 0, 0, Fn::sc}, {-1, 1, -1, 0, Fn::nc}, false, true));
    v.push_back(vf_entry(C, Family::nc_sc_dc, {+1, 0, -1, 0, Fn::dc},
                         {+1, 0, -1, 0, Fn::nc}, {+1, 0, 0, 0, Fn::sc}, false, true));
    v.push_back(vf_entry(D, Family::nc_sc_dc, {+1, 0, -1, 0, Fn::dc},
                         {+1, 1, -1, 0, Fn::nc}, {+1, 1, 0, 0, Fn::sc}, false, true));
    // ns_cs_ds family: prefactors diverge in both limits
    v.push_back(vf_entry(E, Family::ns_cs_ds, {+1, 1, -1, 0, Fn::ns},
                         {+1, 1, 0, -1, Fn::cs}, {+1, 0, -1, -1, Fn::ds}, false, false));
    v.push_back(vf_entry(H, Family::ns_cs_ds, {+1, 0, -1, -1, Fn::ds},
                         {+1, 0, -1, 0, Fn::ns}, {+1, 0, 0, -1, Fn::cs}, false, false));
    v.push_back(vf_entry(C, Family::ns_cs_ds, {+1, 0, 0, -1, Fn::cs},
                         {+1, 0, -1, -1, Fn::ds}, {+1, 0, -1, 0, Fn::ns}, false, false));
    v.push_back(vf_entry(D, Family::ns_cs_ds, {+1, 0, -1, 0, Fn::ns},
                         {+1, 0, 0, -1, Fn::cs}, {-1, 0, -1, -1, Fn::ds}, false, false));
    // nd_cd_sd family: no modulus-dependent prefactors, both limits finite
    v.push_back(vf_entry(E, Family::nd_cd_sd, {-1, 0, 0, 0, Fn::nd},
                         {+1, 1, 0, 0, Fn::cd}, {+1, 1, 0, 0, Fn::sd}, true, true));
    v.push_back(vf_entry(H, Family::nd_cd_sd, {+1, 0, 0, 0, Fn::nd},
                         {+1, 0, 0, 0, Fn::sd}, {+1, 0, 0, 0, Fn::cd}, true, true));
    v.push_back(vf_entry(C, Family::nd_cd_sd, {+1, 1, 0, 0, Fn::nd},
                         {+1, 1, 0, 0, Fn::sd}, {-1, 0, 0, 0, Fn::cd}, true, true));
    v.push_back(vf_entry(D, Family::nd_cd_sd, {+1, 0, 0, 0, Fn::sd},
                         {-1, 1, 0, 0, Fn::nd}, {+1, 1, 0, 0, Fn::cd}, true, true));
    // complementary-modulus copy of the elliptic base entry
    v.push_back(vf_entry(E, Family::kprime, {-1, 0, 0, -1, Fn::dn},
                         {+1, 1, 0, -1, Fn::cn}, {+1, 1, 0, 0, Fn::sn}, true,
                         false, true));
    // degree-two modulus map: nd, cd, sd at argument z / k', prefactor k'
    v.push_back(vf_entry(E, Family::lambda, {-1, 0, 0, +1, Fn::nd},
                         {+1, 1, 0, +1, Fn::cd}, {+1, 1, 0, +1, Fn::sd}, true,
                         false, true, true));
    // 2x2 matrix entries, one per algebra
    for (CkType t : all_ck_types) {
      RealizationEntry e{};
      e.type = t;
      e.family = Family::matrix;
      v.push_back(e);
    }
    return v;
  }();
  return entries;
}

inline const RealizationEntry& entry(CkType t, Family fam) {
  for (const auto& e : catalog())
    if (e.type == t && e.family == fam) return e;
  throw std::out_of_range("no catalog entry for this type/family combination");
}

namespace detail {

inline cplx coeff_prefactor(const CoeffSpec& s, double gamma, double omega) {
  double mag = double(s.sign);
  if (s.gamma_pow > 0) mag *= gamma;
  if (s.gamma_pow < 0) mag /= gamma;
  if (s.omega_pow > 0) mag *= omega;
  if (s.omega_pow < 0) mag /= omega;
  return (s.i_pow % 2) ? cplx(0.0, mag) : cplx(mag, 0.0);
}

}  // namespace detail

// Vector-field triple (J, P1, P2) of a catalog entry at modulus k.
inline std::array<VectorField, 3> realize(const RealizationEntry& e, double k,
                                          double pole_margin = jacobi::default_pole_margin) {
  if (e.family == Family::matrix)
    throw std::logic_error("matrix entries have no vector-field realization");
  if (!(k > 0.0 && k < 1.0))
    throw std::domain_error("modulus must lie in (0,1)");
  const double gamma = k;
  const double omega = std::sqrt((1.0 - k) * (1.0 + k));
  std::array<VectorField, 3> out;
  for (int j = 0; j < 3; ++j) {
    const CoeffSpec s = e.coeffs[j];
    const cplx pf = detail::coeff_prefactor(s, gamma, omega);
    if (!e.scale_arg_by_inv_kprime) {
      out[j] = witt::field(
          [pf, fn = s.fn, k, pole_margin](cplx z) {
            return pf * jacobi::eval(fn, z, k, pole_margin);
          },
          [pf, fn = s.fn, k, pole_margin](cplx z) {
            return pf * jacobi::eval_derivative(fn, z, k, pole_margin);
          },
          pole_margin);
    } else {
      out[j] = witt::field(
          [pf, fn = s.fn, k, omega, pole_margin](cplx z) {
            return pf * jacobi::eval(fn, z / omega, k, pole_margin);
          },
          [pf, fn = s.fn, k, omega, pole_margin](cplx z) {
            return pf * jacobi::eval_derivative(fn, z / omega, k, pole_margin) / omega;
          },
          pole_margin * omega);
    }
  }
  return out;
}

// Commutator-table targets for a triple: [J,P1] = P2, [J,P2] = s1 P1,
// [P1,P2] = s2 J.
inline std::array<VectorField, 3> bracket_targets(
    CkType t, const std::array<VectorField, 3>& g) {
  const CkSigns& s = signs(t);
  return {g[2], witt::scaled(g[1], cplx(double(s.s1))),
          witt::scaled(g[0], cplx(double(s.s2)))};
}

// Degenerate-modulus triple of an entry: trig (k -> 0) or hyperbolic
// (k -> 1) limits of the coefficients, prefactors evaluated at the limiting
// (gamma, omega).
inline std::array<VectorField, 3> limit_triple(const RealizationEntry& e,
                                               jacobi::Limit which) {
  if (e.family == Family::matrix)
    throw std::logic_error("matrix entries have no vector-field realization");
  const bool allowed = (which == jacobi::Limit::trig) ? e.limit_trig_allowed
                                                      : e.limit_hyperbolic_allowed;
  if (!allowed)
    throw std::logic_error("this entry does not survive the requested limit");
  const double gamma = (which == jacobi::Limit::trig) ? 0.0 : 1.0;
  const double omega = (which == jacobi::Limit::trig) ? 1.0 : 0.0;
  std::array<VectorField, 3> out;
  for (int j = 0; j < 3; ++j) {
    const CoeffSpec s = e.coeffs[j];
    const cplx pf = detail::coeff_prefactor(s, gamma, omega);
    out[j] = witt::field(
        [pf, fn = s.fn, which](cplx z) {
          return pf * jacobi::eval_limit(fn, z, which).value();
        },
        [pf, fn = s.fn, which](cplx z) {
          return pf * jacobi::eval_limit_derivative(fn, z, which).value();
        });
  }
  return out;
}

// Plain rectangle, row-major, im varying slowest.
inline SampleGrid rectangle_grid(double re0, double re1, double im0, double im1,
                                 int nx, int ny) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("grid must be at least 1x1");
  SampleGrid g;
  g.description = "rectangle";
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const double fx = (nx == 1) ? 0.0 : double(ix) / double(nx - 1);
      const double fy = (ny == 1) ? 0.0 : double(iy) / double(ny - 1);
      g.points.emplace_back(re0 + fx * (re1 - re0), im0 + fy * (im1 - im0));
    }
  return g;
}

// Verification grid spanning [0.15 K, 1.85 K] x [0.05 K', 0.85 K'], filtered
// against the pole lattices of all four denominator letters.
inline SampleGrid standard_grid(double k, int nx = 10, int ny = 10,
                                double pole_margin = 0.2) {
  const auto qp = jacobi::quarter_periods(k);
  SampleGrid raw = rectangle_grid(0.15 * qp.K, 1.85 * qp.K, 0.05 * qp.K_prime,
                                  0.85 * qp.K_prime, nx, ny);
  SampleGrid g;
  g.pole_margin = pole_margin;
  g.description = "standard";
  const std::array<cplx, 4> origins = {
      cplx(0.0, qp.K_prime), cplx(0.0, 0.0), cplx(qp.K, 0.0),
      cplx(qp.K, qp.K_prime)};
  for (cplx z : raw.points) {
    bool keep = true;
    for (cplx o : origins) {
      const cplx p = jacobi::detail::nearest_lattice_point(z, o, qp.K, qp.K_prime);
      if (std::abs(z - p) < pole_margin) {
        keep = false;
        break;
      }
    }
    if (keep) g.points.push_back(z);
  }
  if (g.points.empty()) throw std::invalid_argument("grid filtered to nothing");
  return g;
}

// Grid for the entire-function limit triples (no poles to avoid).
inline SampleGrid limit_grid(int nx = 10, int ny = 10) {
  SampleGrid g = rectangle_grid(0.2, 3.2, 0.1, 1.7, nx, ny);
  g.description = "limit";
  return g;
}

// ---------------------------------------------------------------------------
// Adjoint representation and the intrinsic Casimir probe.

using IntMat3 = std::array<std::array<long, 3>, 3>;

struct AdjointRep {
  IntMat3 ad_J, ad_P1, ad_P2;
};

// Matrices of ad_X on coordinates in the ordered basis (J, P1, P2).
inline AdjointRep structure_constants(CkType t) {
  const CkSigns& s = signs(t);
  AdjointRep r{};
  r.ad_J[2][1] = 1;      // [J, P1] = P2
  r.ad_J[1][2] = s.s1;   // [J, P2] = s1 P1
  r.ad_P1[2][0] = -1;    // [P1, J] = -P2
  r.ad_P1[0][2] = s.s2;  // [P1, P2] = s2 J
  r.ad_P2[1][0] = -s.s1; // [P2, J] = -s1 P1
  r.ad_P2[0][1] = -s.s2; // [P2, P1] = -s2 J
  return r;
}

namespace detail {

inline IntMat3 mat_mul(const IntMat3& a, const IntMat3& b) {
  IntMat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int m = 0; m < 3; ++m) c[i][j] += a[i][m] * b[m][j];
  return c;
}

inline IntMat3 mat_add_scaled(IntMat3 acc, const IntMat3& a, long s) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc[i][j] += s * a[i][j];
  return acc;
}

}  // namespace detail

// sum_i eps_i (ad_i)^2 over the ordered generators (J, P1, P2), exact
// integer arithmetic.
inline IntMat3 intrinsic_casimir(CkType t, std::array<int, 3> signature) {
  const AdjointRep r = structure_constants(t);
  IntMat3 c{};
  c = detail::mat_add_scaled(c, detail::mat_mul(r.ad_J, r.ad_J), signature[0]);
  c = detail::mat_add_scaled(c, detail::mat_mul(r.ad_P1, r.ad_P1), signature[1]);
  c = detail::mat_add_scaled(c, detail::mat_mul(r.ad_P2, r.ad_P2), signature[2]);
  return c;
}

inline std::optional<long> scalar_multiple_of_identity(const IntMat3& m) {
  const long d = m[0][0];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (m[i][j] != (i == j ? d : 0)) return std::nullopt;
  return d;
}

struct SignatureHit {
  std::array<int, 3> signature;
  long scalar;  // intrinsic Casimir = scalar * identity
};

// All sign patterns whose intrinsic Casimir is a nonzero multiple of the
// identity.  Exactly one pattern per algebra up to overall sign.
inline std::vector<SignatureHit> signature_search(CkType t) {
  std::vector<SignatureHit> hits;
  for (int a : {+1, -1})
    for (int b : {+1, -1})
      for (int c : {+1, -1}) {
        const std::array<int, 3> sig = {a, b, c};
        if (auto s = scalar_multiple_of_identity(intrinsic_casimir(t, sig));
            s && *s != 0)
          hits.push_back({sig, *s});
      }
  return hits;
}

// ---------------------------------------------------------------------------
// Quadratic Casimir combinations.

// Max over the grid of |sum_i eps_i f_i^2| and |sum_i eps_i f_i f_i'| for the
// sign pattern of the algebra; both vanish identically for catalog entries.
inline std::array<double, 2> quadratic_casimir_field(
    CkType t, const std::array<VectorField, 3>& g, const SampleGrid& grid) {
  if (grid.points.empty()) throw std::invalid_argument("sample grid is empty");
  const auto eps = signs(t).casimir;
  double worst_sq = 0.0, worst_cross = 0.0;
  for (cplx z : grid.points) {
    cplx sq = 0.0, cross = 0.0;
    for (int i = 0; i < 3; ++i) {
      const cplx f = g[i].coeff(z), fp = g[i].deriv(z);
      sq += double(eps[i]) * f * f;
      cross += double(eps[i]) * f * fp;
    }
    worst_sq = std::max(worst_sq, std::abs(sq));
    worst_cross = std::max(worst_cross, std::abs(cross));
  }
  return {worst_sq, worst_cross};
}

// sum_i eps_i X_i^2 for the matrix generators; a gamma-independent multiple
// of the identity for each algebra.
inline Matrix2 quadratic_casimir_matrix(CkType t, double gamma) {
  const auto g = biortho::matrix_generators(t, gamma);
  const auto eps = signs(t).casimir;
  Matrix2 c = {0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < 3; ++i)
    c = c + cplx(double(eps[i])) * (g[i] * g[i]);
  return c;
}

// ---------------------------------------------------------------------------
// Verification reports.

struct VerificationReport {
  CkType type{};
  Family family{};
  double modulus = 0.0;
  int grid_nx = 0, grid_ny = 0;
  std::size_t grid_points = 0;
  double grid_margin = 0.0;
  std::array<double, 3> residuals{};
  bool is_matrix = false;
  std::array<double, 2> casimir_field{};  // {max |sum e f^2|, max |sum e f f'|}
  cplx casimir_matrix_scalar{};
  double casimir_matrix_dev = 0.0;  // distance from scalar * I plus commutants
  bool pass = false;
  double seconds = 0.0;
};

inline constexpr double default_vector_tol = 1e-10;
inline constexpr double default_matrix_tol = 1e-13;
inline constexpr double default_casimir_tol = 1e-11;

inline VerificationReport verify_realization(const RealizationEntry& e, double k,
                                             const SampleGrid& grid,
                                             double tol = default_vector_tol,
                                             double casimir_tol = default_casimir_tol) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.type = e.type;
  rep.family = e.family;
  rep.modulus = k;
  rep.grid_points = grid.points.size();
  rep.grid_margin = grid.pole_margin;
  if (e.family == Family::matrix) {
    rep.is_matrix = true;
    rep.grid_points = 0;
    rep.grid_margin = 0.0;
    const double gamma = k;
    const auto g = biortho::matrix_generators(e.type, gamma);
    const CkSigns& s = signs(e.type);
    rep.residuals = {
        biortho::max_abs(biortho::commutator(g[0], g[1]) - g[2]),
        biortho::max_abs(biortho::commutator(g[0], g[2]) - cplx(double(s.s1)) * g[1]),
        biortho::max_abs(biortho::commutator(g[1], g[2]) - cplx(double(s.s2)) * g[0])};
    const Matrix2 c = quadratic_casimir_matrix(e.type, gamma);
    const cplx scalar = 0.5 * biortho::trace(c);
    double dev = biortho::max_abs(c - scalar * biortho::identity2());
    for (const auto& x : g)
      dev = std::max(dev, biortho::max_abs(biortho::commutator(c, x)));
    rep.casimir_matrix_scalar = scalar;
    rep.casimir_matrix_dev = dev;
    rep.pass = std::max({rep.residuals[0], rep.residuals[1], rep.residuals[2]}) <= tol &&
               dev <= tol;
  } else {
    const auto g = realize(e, k);
    rep.residuals = witt::relation_residuals(g, bracket_targets(e.type, g), grid);
    rep.casimir_field = quadratic_casimir_field(e.type, g, grid);
    rep.pass = std::max({rep.residuals[0], rep.residuals[1], rep.residuals[2]}) <= tol &&
               std::max(rep.casimir_field[0], rep.casimir_field[1]) <= casimir_tol;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline VerificationReport verify_realization(const RealizationEntry& e, double k,
                                             double tol, int nx, int ny,
                                             double grid_margin = 0.2) {
  if (e.family == Family::matrix)
    return verify_realization(e, k, SampleGrid{{0.0}, 0.0, "unused"}, tol);
  VerificationReport rep =
      verify_realization(e, k, standard_grid(k, nx, ny, grid_margin), tol);
  rep.grid_nx = nx;
  rep.grid_ny = ny;
  return rep;
}

// Un-normalized elliptic triple (i ns, i cs, ds): the brackets close on the
// curvature pair (kappa1, kappa2) = (omega^2, gamma^2) instead of units,
//   [J, P1] = P2,  [J, P2] = -kappa2 P1,  [P1, P2] = kappa1 J.
struct UnnormalizedReport {
  double modulus = 0.0;
  cplx kappa1, kappa2;                    // values the residuals were taken against
  cplx kappa1_measured, kappa2_measured;  // read back off the brackets
  std::array<double, 3> residuals{};
  bool pass = false;
  double seconds = 0.0;
};

inline UnnormalizedReport verify_unnormalized(double k, const SampleGrid& grid,
                                              double tol = default_vector_tol) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!(k > 0.0 && k < 1.0))
    throw std::domain_error("modulus must lie in (0,1)");
  if (grid.points.empty()) throw std::invalid_argument("sample grid is empty");
  const double omega2 = (1.0 - k) * (1.0 + k);
  UnnormalizedReport rep;
  rep.modulus = k;
  rep.kappa1 = omega2;
  rep.kappa2 = k * k;
  using jacobi::Fn;
  const cplx i(0.0, 1.0);
  auto make = [&](Fn f, cplx pf) {
    return witt::field(
        [pf, f, k](cplx z) { return pf * jacobi::eval(f, z, k); },
        [pf, f, k](cplx z) { return pf * jacobi::eval_derivative(f, z, k); });
  };
  const std::array<VectorField, 3> g = {make(Fn::ns, i), make(Fn::cs, i),
                                        make(Fn::ds, 1.0)};
  const std::array<VectorField, 3> targets = {
      g[2], witt::scaled(g[1], -rep.kappa2), witt::scaled(g[0], rep.kappa1)};
  rep.residuals = witt::relation_residuals(g, targets, grid);
  // read the curvature pair back off the brackets at the best-conditioned point
  const auto b12 = witt::bracket(g[0], g[2]);
  const auto b3 = witt::bracket(g[1], g[2]);
  double best1 = 0.0, best2 = 0.0;
  for (cplx z : grid.points) {
    const cplx p1 = g[1].coeff(z), j = g[0].coeff(z);
    if (std::abs(p1) > best2) {
      best2 = std::abs(p1);
      rep.kappa2_measured = -b12.coeff(z) / p1;
    }
    if (std::abs(j) > best1) {
      best1 = std::abs(j);
      rep.kappa1_measured = b3.coeff(z) / j;
    }
  }
  rep.pass = std::max({rep.residuals[0], rep.residuals[1], rep.residuals[2]}) <= tol;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace ckwitt::ck
