#include <gtest/gtest.h>

#include <map>
#include <set>

#include "ckwitt/ck.hpp"
#include "oracles.hpp"

using namespace ckwitt;
using ck::Family;
using jacobi::Fn;

namespace {

double max3(const std::array<double, 3>& r) { return std::max({r[0], r[1], r[2]}); }

}  // namespace

TEST(Ck, SignTable) {
  EXPECT_EQ(signs(CkType::elliptic).s1, -1);
  EXPECT_EQ(signs(CkType::elliptic).s2, +1);
  EXPECT_EQ(signs(CkType::hyperbolic).s1, -1);
  EXPECT_EQ(signs(CkType::hyperbolic).s2, -1);
  EXPECT_EQ(signs(CkType::co_hyperbolic).s1, +1);
  EXPECT_EQ(signs(CkType::co_hyperbolic).s2, +1);
  EXPECT_EQ(signs(CkType::doubly_hyperbolic).s1, +1);
  EXPECT_EQ(signs(CkType::doubly_hyperbolic).s2, -1);
  // curvature signs: s1 = -kappa2, s2 = kappa1
  for (CkType t : all_ck_types) {
    EXPECT_EQ(signs(t).s1, -signs(t).kappa2) << name(t);
    EXPECT_EQ(signs(t).s2, signs(t).kappa1) << name(t);
  }
  EXPECT_EQ(parse_ck_type("doubly_hyperbolic"), CkType::doubly_hyperbolic);
  EXPECT_FALSE(parse_ck_type("spherical").has_value());
}

TEST(Ck, CatalogShape) {
  const auto& cat = ck::catalog();
  ASSERT_EQ(cat.size(), 22u);
  std::set<std::pair<int, int>> seen;
  std::map<Family, int> per_family;
  for (const auto& e : cat) {
    EXPECT_TRUE(seen.insert({int(e.type), int(e.family)}).second);
    per_family[e.family]++;
  }
  EXPECT_EQ(per_family[Family::base], 4);
  EXPECT_EQ(per_family[Family::nc_sc_dc], 4);
  EXPECT_EQ(per_family[Family::ns_cs_ds], 4);
  EXPECT_EQ(per_family[Family::nd_cd_sd], 4);
  EXPECT_EQ(per_family[Family::kprime], 1);
  EXPECT_EQ(per_family[Family::lambda], 1);
  EXPECT_EQ(per_family[Family::matrix], 4);
  EXPECT_EQ(cat.front().type, CkType::elliptic);
  EXPECT_EQ(cat.front().family, Family::base);
  // derived entries are exactly the modular-transformed ones
  for (const auto& e : cat)
    EXPECT_EQ(e.derived, e.family == Family::kprime || e.family == Family::lambda);
}

TEST(Ck, EntryLookup) {
  EXPECT_NO_THROW(ck::entry(CkType::elliptic, Family::kprime));
  EXPECT_NO_THROW(ck::entry(CkType::elliptic, Family::lambda));
  EXPECT_THROW(ck::entry(CkType::hyperbolic, Family::kprime), std::out_of_range);
  EXPECT_THROW(ck::entry(CkType::doubly_hyperbolic, Family::lambda), std::out_of_range);
}

TEST(Ck, AllVectorEntriesVerify) {
  for (const auto& e : ck::catalog()) {
    if (e.family == Family::matrix) continue;
    const auto rep = ck::verify_realization(e, 0.6, 1e-10, 10, 10);
    EXPECT_TRUE(rep.pass) << name(e.type) << " " << ck::name(e.family);
    EXPECT_LE(max3(rep.residuals), 1e-10) << name(e.type) << " " << ck::name(e.family);
    EXPECT_LE(rep.casimir_field[0], 1e-11) << name(e.type) << " " << ck::name(e.family);
    EXPECT_LE(rep.casimir_field[1], 1e-11) << name(e.type) << " " << ck::name(e.family);
    EXPECT_GE(rep.seconds, 0.0);
    EXPECT_GE(rep.grid_points, 90u);
  }
}

TEST(Ck, VectorEntriesVerifyAcrossModuli) {
  for (double k : {0.3, 0.9})
    for (Family fam : {Family::base, Family::nc_sc_dc, Family::ns_cs_ds,
                       Family::nd_cd_sd})
      for (CkType t : all_ck_types) {
        const auto rep = ck::verify_realization(ck::entry(t, fam), k, 1e-10, 10, 10);
        EXPECT_TRUE(rep.pass) << name(t) << " " << ck::name(fam) << " k " << k;
      }
}

TEST(Ck, MatrixEntriesVerify) {
  for (CkType t : all_ck_types) {
    const auto rep =
        ck::verify_realization(ck::entry(t, Family::matrix), 0.6, 1e-13, 10, 10);
    EXPECT_TRUE(rep.pass) << name(t);
    EXPECT_LE(max3(rep.residuals), 1e-13) << name(t);
    EXPECT_TRUE(rep.is_matrix);
    EXPECT_LE(rep.casimir_matrix_dev, 1e-13);
    const double expected =
        (t == CkType::elliptic || t == CkType::doubly_hyperbolic) ? -0.75 : 0.75;
    EXPECT_NEAR(rep.casimir_matrix_scalar.real(), expected, 1e-13) << name(t);
    EXPECT_NEAR(rep.casimir_matrix_scalar.imag(), 0.0, 1e-13);
  }
}

TEST(Ck, MatrixCasimirIsDeformationIndependent) {
  for (CkType t : all_ck_types) {
    const auto a = ck::quadratic_casimir_matrix(t, 0.3);
    const auto b = ck::quadratic_casimir_matrix(t, 0.9);
    EXPECT_LE(biortho::max_abs(a - b), 1e-13) << name(t);
  }
}

TEST(Ck, SignFlipFailsEveryVectorEntry) {
  for (const auto& e : ck::catalog()) {
    if (e.family == Family::matrix) continue;
    auto triple = ck::realize(e, 0.6);
    triple[2] = witt::scaled(triple[2], -1.0);
    const double r = witt::bracket_residual(
        triple, ck::bracket_targets(e.type, triple), ck::standard_grid(0.6));
    EXPECT_GE(r, 0.1) << name(e.type) << " " << ck::name(e.family);
  }
}

TEST(Ck, SignFlipFailsEveryMatrixEntry) {
  for (CkType t : all_ck_types) {
    auto g = biortho::matrix_generators(t, 0.6);
    g[2] = cplx(-1.0) * g[2];
    const auto& s = signs(t);
    const double r = std::max(
        {biortho::max_abs(biortho::commutator(g[0], g[1]) - g[2]),
         biortho::max_abs(biortho::commutator(g[0], g[2]) - cplx(double(s.s1)) * g[1]),
         biortho::max_abs(biortho::commutator(g[1], g[2]) - cplx(double(s.s2)) * g[0])});
    EXPECT_GE(r, 0.1) << name(t);
  }
}

TEST(Ck, RealizeRejectsMatrixFamilyAndBadModulus) {
  EXPECT_THROW(ck::realize(ck::entry(CkType::elliptic, Family::matrix), 0.6),
               std::logic_error);
  EXPECT_THROW(ck::realize(ck::entry(CkType::elliptic, Family::base), 1.2),
               std::domain_error);
}

TEST(Ck, UnnormalizedTripleMeasuresCurvatures) {
  const double k = 0.5;
  const auto rep = ck::verify_unnormalized(k, ck::standard_grid(k), 1e-10);
  EXPECT_TRUE(rep.pass);
  EXPECT_LE(max3(rep.residuals), 1e-10);
  EXPECT_NEAR(rep.kappa1.real(), 0.75, 1e-15);
  EXPECT_NEAR(rep.kappa2.real(), 0.25, 1e-15);
  EXPECT_NEAR(std::abs(rep.kappa1_measured - rep.kappa1), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(rep.kappa2_measured - rep.kappa2), 0.0, 1e-10);
  // the measured pair is ordered (omega^2, gamma^2)
  EXPECT_GT(rep.kappa1_measured.real(), rep.kappa2_measured.real());
}

TEST(Ck, LimitFlagsPerFamily) {
  for (const auto& e : ck::catalog()) {
    switch (e.family) {
      case Family::base:
      case Family::kprime:
      case Family::lambda:
        EXPECT_TRUE(e.limit_trig_allowed);
        EXPECT_FALSE(e.limit_hyperbolic_allowed);
        break;
      case Family::nc_sc_dc:
        EXPECT_FALSE(e.limit_trig_allowed);
        EXPECT_TRUE(e.limit_hyperbolic_allowed);
        break;
      case Family::ns_cs_ds:
        EXPECT_FALSE(e.limit_trig_allowed);
        EXPECT_FALSE(e.limit_hyperbolic_allowed);
        break;
      case Family::nd_cd_sd:
        EXPECT_TRUE(e.limit_trig_allowed);
        EXPECT_TRUE(e.limit_hyperbolic_allowed);
        break;
      case Family::matrix:
        break;
    }
  }
}

TEST(Ck, LimitTriplesSatisfyTables) {
  const auto grid = ck::limit_grid();
  for (const auto& e : ck::catalog()) {
    if (e.family == Family::matrix) continue;
    for (jacobi::Limit which : {jacobi::Limit::trig, jacobi::Limit::hyperbolic}) {
      const bool allowed = (which == jacobi::Limit::trig)
                               ? e.limit_trig_allowed
                               : e.limit_hyperbolic_allowed;
      if (!allowed) {
        EXPECT_THROW(ck::limit_triple(e, which), std::logic_error);
        continue;
      }
      const auto triple = ck::limit_triple(e, which);
      const auto r = witt::relation_residuals(
          triple, ck::bracket_targets(e.type, triple), grid);
      EXPECT_LE(max3(r), 1e-10) << name(e.type) << " " << ck::name(e.family);
      const auto cas = ck::quadratic_casimir_field(e.type, triple, grid);
      EXPECT_LE(cas[0], 1e-12) << name(e.type) << " " << ck::name(e.family);
      EXPECT_LE(cas[1], 1e-12) << name(e.type) << " " << ck::name(e.family);
    }
  }
}

TEST(Ck, HyperbolicLimitOfContactFamily) {
  // the elliptic nc_sc_dc entry degenerates to (i, cosh, i sinh) d/dz
  const auto triple = ck::limit_triple(
      ck::entry(CkType::elliptic, Family::nc_sc_dc), jacobi::Limit::hyperbolic);
  for (cplx z : {cplx(0.3, 0.2), cplx(1.1, -0.4), cplx(2.0, 0.9)}) {
    EXPECT_NEAR(std::abs(triple[0].coeff(z) - cplx(0.0, 1.0)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(triple[1].coeff(z) - std::cosh(z)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(triple[2].coeff(z) - cplx(0.0, 1.0) * std::sinh(z)), 0.0,
                1e-14);
  }
}

TEST(Ck, AdjointMatricesMatchTable) {
  const auto r = ck::structure_constants(CkType::elliptic);
  const ck::IntMat3 ad_J = {{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}};
  const ck::IntMat3 ad_P1 = {{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}};
  const ck::IntMat3 ad_P2 = {{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}};
  EXPECT_EQ(r.ad_J, ad_J);
  EXPECT_EQ(r.ad_P1, ad_P1);
  EXPECT_EQ(r.ad_P2, ad_P2);
}

TEST(Ck, IntrinsicCasimirSignatures) {
  using A3 = std::array<int, 3>;
  // the canonical signature of each algebra and its overall-sign mirror
  const auto is_scalar = [](CkType t, A3 sig) {
    return ck::scalar_multiple_of_identity(ck::intrinsic_casimir(t, sig));
  };
  EXPECT_EQ(is_scalar(CkType::elliptic, {+1, +1, +1}), -2);
  EXPECT_EQ(is_scalar(CkType::elliptic, {-1, -1, -1}), +2);
  EXPECT_EQ(is_scalar(CkType::hyperbolic, {-1, +1, +1}), +2);
  EXPECT_EQ(is_scalar(CkType::co_hyperbolic, {+1, -1, +1}), +2);
  EXPECT_EQ(is_scalar(CkType::doubly_hyperbolic, {+1, +1, -1}), +2);
  // a wrong pattern leaves a non-scalar operator
  EXPECT_FALSE(is_scalar(CkType::elliptic, {+1, +1, -1}).has_value());
  const auto bad = ck::intrinsic_casimir(CkType::elliptic, {+1, +1, -1});
  EXPECT_EQ(bad[2][2], -2);
  EXPECT_EQ(bad[0][0], 0);
}

TEST(Ck, SignatureSearchFindsMirrorPair) {
  using A3 = std::array<int, 3>;
  const std::map<CkType, A3> canonical = {
      {CkType::elliptic, {+1, +1, +1}},
      {CkType::hyperbolic, {-1, +1, +1}},
      {CkType::co_hyperbolic, {+1, -1, +1}},
      {CkType::doubly_hyperbolic, {+1, +1, -1}}};
  for (CkType t : all_ck_types) {
    const auto hits = ck::signature_search(t);
    ASSERT_EQ(hits.size(), 2u) << name(t);
    bool found = false;
    for (const auto& h : hits) {
      EXPECT_EQ(std::abs(h.scalar), 2) << name(t);
      if (h.signature == canonical.at(t)) {
        found = true;
        EXPECT_EQ(h.scalar, t == CkType::elliptic ? -2 : +2) << name(t);
      }
    }
    EXPECT_TRUE(found) << name(t);
  }
}

TEST(Ck, StandardGridRespectsMargins) {
  const auto g = ck::standard_grid(0.6, 10, 10, 0.25);
  EXPECT_EQ(g.pole_margin, 0.25);
  for (cplx z : g.points)
    for (Fn f : {Fn::sn, Fn::ns, Fn::nc, Fn::nd})
      EXPECT_GE(jacobi::pole_distance(f, z, 0.6), 0.25);
}
