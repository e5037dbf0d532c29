#include <doctest.h>

#include <random>

#include "doldef/hodge.hpp"
#include "doldef/models.hpp"

using namespace doldef;

TEST_CASE("inner product basics") {
  ModelSpec m = builtin_model("iwasawa");
  TensorBasis basis = TensorBasis::enumerate(3, BundleSpec::tangent(), 1);
  TensorForm a(3, BundleSpec::tangent()), b(3, BundleSpec::tangent());
  a.add(basis.keys[0], Poly::constant(m.params, GaussRational(1)));  // fb1 (x) v1
  b.add(basis.keys[1], Poly::constant(m.params, GaussRational(1)));
  CHECK(inner_product(a, a) == Poly::constant(m.params, GaussRational(1)));
  CHECK(inner_product(a, b).is_zero());
  CHECK(inner_product(a.scaled(Poly::parse(m.params, "t11")), a) == Poly::parse(m.params, "t11"));
}

TEST_CASE("cohomology dimensions of the builtin models") {
  ModelSpec m = builtin_model("iwasawa");
  HodgeContext ctx(m);
  CHECK(cohomology_dim(ctx, BundleSpec::tangent(), 1) == 6);
  CHECK(cohomology_dim(ctx, BundleSpec::trivial(), 1) == 2);
  CHECK(cohomology_dim(ctx, BundleSpec::omega(1), 0) == 3);
  CHECK(cohomology_dim(ctx, BundleSpec::omega(2), 0) == 3);
  CHECK(cohomology_dim(ctx, BundleSpec::omega(1), 1) == 6);

  ModelSpec nk = builtin_model("nakamura_iii_3b");
  HodgeContext nctx(nk);
  CHECK(cohomology_dim(nctx, BundleSpec::tangent(), 1) == 9);
  CHECK(cohomology_dim(nctx, BundleSpec::omega(1), 0) == 3);
  CHECK(cohomology_dim(nctx, BundleSpec::trivial(), 1) == 3);

  ModelSpec t2 = builtin_model("torus:2");
  HodgeContext tctx(t2);
  CHECK(cohomology_dim(tctx, BundleSpec::tangent(), 1) == 4);
  CHECK(cohomology_dim(tctx, BundleSpec::trivial(), 1) == 2);

  SUBCASE("dim ker box equals dim ker delbar - rank of the incoming delbar") {
    for (int q = 0; q <= 3; ++q) {
      const HodgePackage& pkg = ctx.package(BundleSpec::omega(1), q);
      int nullity = pkg.basis.dim() - pkg.d_to.rank();
      int rank_in = pkg.d_from.rank();
      CHECK(static_cast<int>(pkg.hodge.harmonics.size()) == nullity - rank_in);
    }
  }
}

TEST_CASE("harmonic projection and Green operator") {
  ModelSpec m = builtin_model("iwasawa");
  HodgeContext ctx(m);

  SUBCASE("fb^l ^ f1^f2 is harmonic in (O^2, 1) for l = 1,2") {
    for (int l = 3; l <= 4; ++l) {
      Form x = wedge(m.generator(l), wedge(m.generator(0), m.generator(1)));
      TensorForm t = tensor_from_scalar(x, 2);
      CHECK(harmonic_projection(ctx, t) == t);
      CHECK(green(ctx, t).is_zero());
      CHECK(delbar_star(ctx, green(ctx, t)).is_zero());
    }
  }

  SUBCASE("H(delbar x) = 0 and box G + H = 1 on random forms") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coeff(-2, 2), q(0, 2);
    for (const BundleSpec& bundle :
         {BundleSpec::trivial(), BundleSpec::omega(1), BundleSpec::tangent()}) {
      for (int trial = 0; trial < 20; ++trial) {
        int qq = q(rng);
        TensorBasis basis = TensorBasis::enumerate(3, bundle, qq);
        if (basis.dim() == 0) continue;
        TensorForm s(3, bundle);
        for (int i = 0; i < 2; ++i)
          s.add(basis.keys[std::uniform_int_distribution<int>(0, basis.dim() - 1)(rng)],
                Poly::constant(m.params, GaussRational(coeff(rng))));
        CHECK(harmonic_projection(ctx, delbar(m, s)).is_zero());
        // Hodge decomposition on s.
        const HodgePackage& pkg = ctx.package(bundle, qq);
        auto coords = pkg.basis.coords(s);
        auto lhs = apply_matrix(pkg.hodge.box, apply_matrix(pkg.hodge.G, coords));
        auto h = apply_matrix(pkg.hodge.H, coords);
        for (size_t i = 0; i < coords.size(); ++i) CHECK(lhs[i] + h[i] == coords[i]);
      }
    }
  }

  SUBCASE("torus: everything invariant is harmonic") {
    ModelSpec t = builtin_model("torus:2");
    HodgeContext tctx(t);
    TensorBasis basis = TensorBasis::enumerate(2, BundleSpec::trivial(), 1);
    for (const auto& key : basis.keys) {
      TensorForm s(2, BundleSpec::trivial());
      s.add(key, Poly::constant(t.params, GaussRational(1)));
      CHECK(harmonic_projection(tctx, s) == s);
    }
  }
}

TEST_CASE("Hodge operator identities as exact matrices") {
  ModelSpec m = builtin_model("iwasawa");
  HodgeContext ctx(m);
  for (const BundleSpec& bundle : {BundleSpec::omega(2), BundleSpec::tangent()}) {
    for (int q = 0; q <= 2; ++q) {
      const HodgePackage& pkg = ctx.package(bundle, q);
      const HodgePackage& up = ctx.package(bundle, q + 1);
      const Matrix& h = pkg.hodge.H;
      const Matrix& g = pkg.hodge.G;
      Matrix eye = Matrix::identity(pkg.basis.dim());
      CHECK(h * h == h);
      CHECK(pkg.hodge.box * g == eye - h);
      CHECK((g * h).is_zero());
      CHECK((h * g).is_zero());
      // delbar H = 0, H delbar = 0 (as maps q -> q+1).
      CHECK((pkg.d_to * h).is_zero());
      CHECK((up.hodge.H * pkg.d_to).is_zero());
      // delbar* H = 0 and H delbar* = 0 (as maps q+1 -> q).
      CHECK((pkg.dstar_up * up.hodge.H).is_zero());
      CHECK((h * pkg.dstar_up).is_zero());
      // [delbar, G] = 0 and [delbar*, G] = 0 across degrees.
      CHECK(pkg.d_to * g == up.hodge.G * pkg.d_to);
      CHECK(pkg.dstar_up * up.hodge.G == g * pkg.dstar_up);
      // ker box = ker delbar ∩ ker delbar*.
      Matrix stacked = pkg.d_to.stacked(pkg.dstar_down);
      CHECK(pkg.hodge.box.rank() == stacked.rank());
    }
  }
}
