#include <doctest.h>

#include "doldef/cli.hpp"

using namespace doldef;

TEST_CASE("deformed cohomology dimensions on the Iwasawa model") {
  ModelSpec m = builtin_model("iwasawa");
  HodgeContext ctx(m);
  BeltramiSeries b = model_beltrami(ctx, 10);

  SUBCASE("t = 0 reproduces the classical dimensions") {
    std::vector<GaussRational> origin(6);
    for (int q = 0; q <= 2; ++q) {
      CHECK(deformed_cohomology_dim(ctx, BundleSpec::omega(2), q, b, origin) ==
            cohomology_dim(ctx, BundleSpec::omega(2), q));
      CHECK(deformed_cohomology_dim(ctx, BundleSpec::omega(1), q, b, origin) ==
            cohomology_dim(ctx, BundleSpec::omega(1), q));
    }
  }

  SUBCASE("h^{2,0} at the stratum points") {
    CHECK(deformed_cohomology_dim(ctx, BundleSpec::omega(2), 0, b, parse_point(m, "t11=1/2")) == 2);
    CHECK(deformed_cohomology_dim(ctx, BundleSpec::omega(2), 0, b,
                                  parse_point(m, "t11=1/2,t22=1/2")) == 1);
  }

  SUBCASE("h^{1,1} = 5 at class (ii)") {
    CHECK(deformed_cohomology_dim(ctx, BundleSpec::omega(1), 1, b, parse_point(m, "t11=1/2")) == 5);
  }

  SUBCASE("delbar_phi matrices compose to zero at integrable points") {
    DeformedComplex c =
        build_deformed_complex(ctx, BundleSpec::omega(1), b, parse_point(m, "t11=1/2,t21=1/3"));
    for (size_t q = 0; q + 1 < c.dphi.size(); ++q) CHECK((c.dphi[q + 1] * c.dphi[q]).is_zero());
  }
}

TEST_CASE("deformed harmonics") {
  ModelSpec m = builtin_model("iwasawa");
  HodgeContext ctx(m);
  BeltramiSeries b = model_beltrami(ctx, 10);

  SUBCASE("t = 0: classical harmonic space, inclusion trivially true") {
    std::vector<GaussRational> origin(6);
    DeformedHarmonics h = deformed_harmonics(ctx, BundleSpec::omega(1), 1, b, origin);
    CHECK(h.basis.size() == 6);
    CHECK(h.included_in_classical);
  }

  SUBCASE("Iwasawa (O^1, 1) at t11 = 1/2 is 5-dimensional") {
    DeformedHarmonics h =
        deformed_harmonics(ctx, BundleSpec::omega(1), 1, b, parse_point(m, "t11=1/2"));
    CHECK(h.basis.size() == 5);
  }

  SUBCASE("torus: deformed harmonics equal classical harmonics") {
    ModelSpec t = builtin_model("torus:2");
    HodgeContext tctx(t);
    BeltramiSeries tb = model_beltrami(tctx, 10);
    DeformedHarmonics h =
        deformed_harmonics(tctx, BundleSpec::omega(1), 1, tb, parse_point(t, "t11=1/2,t22=1/4"));
    CHECK(h.basis.size() == 4);
    CHECK(h.included_in_classical);
  }
}

TEST_CASE("full Iwasawa Hodge diamond across the three deformation classes") {
  // Golden table: every h^{p,q}(X_t) at t = 0 and one point per class.
  ModelSpec m = builtin_model("iwasawa");
  HodgeContext ctx(m);
  BeltramiSeries b = model_beltrami(ctx, 10);
  std::vector<std::vector<GaussRational>> pts = {
      parse_point(m, "0"), parse_point(m, "t31=1/2"), parse_point(m, "t11=1/2"),
      parse_point(m, "t11=1/2,t22=1/2")};
  // expected[p][q] = {t=0, class (i), class (ii), class (iii)}.
  const int expected[4][4][4] = {
      {{1, 1, 1, 1}, {2, 2, 2, 2}, {2, 2, 2, 2}, {1, 1, 1, 1}},  // p = 0
      {{3, 3, 2, 2}, {6, 6, 5, 5}, {6, 6, 5, 4}, {3, 3, 2, 1}},  // p = 1
      {{3, 3, 2, 1}, {6, 6, 5, 4}, {6, 6, 5, 5}, {3, 3, 2, 2}},  // p = 2
      {{1, 1, 1, 1}, {2, 2, 2, 2}, {2, 2, 2, 2}, {1, 1, 1, 1}},  // p = 3
  };
  for (int p = 0; p <= 3; ++p) {
    BundleSpec bundle = p == 0 ? BundleSpec::trivial() : BundleSpec::omega(p);
    for (int q = 0; q <= 3; ++q)
      for (size_t i = 0; i < pts.size(); ++i) {
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(i);
        CHECK(deformed_cohomology_dim(ctx, bundle, q, b, pts[i]) == expected[p][q][i]);
      }
  }
  // Consistency highlights: the Frolicher degeneration pattern at degree 3.
  // b_3 = 10 = 1 + 4 + 4 + 1 exactly in class (iii).
}

TEST_CASE("Nakamura III-(3b): h^{0,1} jumps 3 -> 1 along the integrable t11 direction") {
  // The classical first example of a non-invariant h^{0,1}. The Maurer-Cartan
  // residual of phi_1 vanishes identically along the t11/t22/t33 diagonal, so
  // these are honest points of the deformed complex.
  ModelSpec m = builtin_model("nakamura_iii_3b");
  HodgeContext ctx(m);
  BeltramiSeries b = model_beltrami(ctx, 10);
  struct Row {
    const char* point;
    int h01, h02, h10;
  };
  for (const Row& row : {Row{"0", 3, 3, 3}, Row{"t11=1/2", 1, 1, 1}, Row{"t22=1/2", 3, 3, 3},
                         Row{"t22=1/2,t33=1/3", 3, 3, 3}}) {
    auto pt = parse_point(m, row.point);
    REQUIRE(b.residual.evaluated(pt).is_zero());
    CAPTURE(row.point);
    CHECK(deformed_cohomology_dim(ctx, BundleSpec::trivial(), 1, b, pt) == row.h01);
    CHECK(deformed_cohomology_dim(ctx, BundleSpec::trivial(), 2, b, pt) == row.h02);
    CHECK(deformed_cohomology_dim(ctx, BundleSpec::omega(1), 0, b, pt) == row.h10);
  }
}

TEST_CASE("deformed Hodge operator identities at a point") {
  ModelSpec m = builtin_model("iwasawa");
  HodgeContext ctx(m);
  BeltramiSeries b = model_beltrami(ctx, 10);
  DeformedComplex c =
      build_deformed_complex(ctx, BundleSpec::omega(1), b, parse_point(m, "t11=1/2"));
  for (int q = 1; q <= 2; ++q) {
    HodgeOps ops = HodgeOps::make(c.dphi[q - 1], c.dphi[q]);
    HodgeOps up = HodgeOps::make(c.dphi[q], c.dphi[q + 1]);
    Matrix eye = Matrix::identity(c.dims[q]);
    CHECK(ops.H + ops.box * ops.G == eye);  // 1 = H_phi + box_phi G_phi
    CHECK((c.dphi[q] * ops.H).is_zero());   // delbar_phi H_phi = 0
    CHECK((up.H * c.dphi[q]).is_zero());    // H_phi delbar_phi = 0
    CHECK((ops.G * ops.H).is_zero());
    CHECK((ops.H * ops.G).is_zero());
    CHECK(c.dphi[q] * ops.G == up.G * c.dphi[q]);  // [delbar_phi, G_phi] = 0
  }
}

TEST_CASE("non-integrable points are refused with a diagnostic") {
  ModelSpec m = builtin_model("nakamura_iii_3b");
  HodgeContext ctx(m);
  BeltramiSeries b = model_beltrami(ctx, 10);
  // t12 = t21 = 1/2 makes the residual component -t12*t21 nonzero.
  CHECK_THROWS_AS(
      deformed_cohomology_dim(ctx, BundleSpec::omega(1), 0, b, parse_point(m, "t12=1/2,t21=1/2")),
      ComputationRefused);
  // Along the diagonal direction the residual vanishes and the computation runs.
  CHECK(deformed_cohomology_dim(ctx, BundleSpec::omega(1), 0, b, parse_point(m, "t22=1/2")) == 3);
}

TEST_CASE("re-bigrading cross-check") {
  ModelSpec m = builtin_model("iwasawa");
  HodgeContext ctx(m);
  BeltramiSeries b = model_beltrami(ctx, 10);

  SUBCASE("t = 0: both sides classical") {
    std::vector<GaussRational> origin(6);
    RebigradeResult r = rebigrade_crosscheck(ctx, BundleSpec::omega(2), 0, b, origin);
    CHECK(r.dims_equal);
    CHECK(r.dim_via_delbar_phi == 3);
    CHECK(r.frame_integrable);
    CHECK(r.dt_squares_to_zero);
    CHECK(r.closedness_equivalence);
  }

  SUBCASE("O^2 at t11 = t22 = 1/2: both sides give 1") {
    RebigradeResult r =
        rebigrade_crosscheck(ctx, BundleSpec::omega(2), 0, b, parse_point(m, "t11=1/2,t22=1/2"));
    CHECK(r.dim_via_delbar_phi == 1);
    CHECK(r.dim_via_rebigrading == 1);
    CHECK(r.dims_equal);
    CHECK(r.closedness_equivalence);
  }

  SUBCASE("trivial bundle q = 1 at t11 = 1/2: equal dims") {
    RebigradeResult r =
        rebigrade_crosscheck(ctx, BundleSpec::trivial(), 1, b, parse_point(m, "t11=1/2"));
    CHECK(r.dims_equal);
    CHECK(r.dt_squares_to_zero);
  }

  SUBCASE("tangent bundle at a stratum point: equal dims") {
    RebigradeResult r =
        rebigrade_crosscheck(ctx, BundleSpec::tangent(), 0, b, parse_point(m, "t11=1/2"));
    CHECK(r.dims_equal);
    CHECK(r.dt_squares_to_zero);
    CHECK(r.closedness_equivalence);
  }
}
