#include <doctest.h>

#include <random>

#include "doldef/cli.hpp"

using namespace doldef;

TEST_CASE("T_u contraction map") {
  ModelSpec m = builtin_model("iwasawa");
  Form u = canonical_form(m);

  SUBCASE("T_u(fb1 (x) v1) = fb1 ^ f2 ^ f3") {
    VectorForm k(3, VecType::T10);
    k.add(Word{3}, 0, Poly::constant(m.params, GaussRational(1)));
    Form expect(3);
    expect.add(Word{1, 2, 3}, Poly::constant(m.params, GaussRational(1)));
    CHECK(tu_map(m, u, k) == expect);
  }

  SUBCASE("T_u(fb1 (x) v3) = fb1 ^ f1^f2 with the (-1)^2 contraction sign") {
    VectorForm k(3, VecType::T10);
    k.add(Word{3}, 2, Poly::constant(m.params, GaussRational(1)));
    Form expect(3);
    expect.add(Word{0, 1, 3}, Poly::constant(m.params, GaussRational(1)));
    CHECK(tu_map(m, u, k) == expect);
  }

  SUBCASE("T_u(0) = 0, zero residual for phi = 0, and T_u delbar = delbar T_u") {
    VectorForm zero(3, VecType::T10);
    CHECK(tu_map(m, u, zero).is_zero());
    VectorForm psi(3, VecType::T10);
    psi.add(Word{4}, 1, Poly::constant(m.params, GaussRational(1)));
    CHECK(tian_todorov_residual(m, zero, psi, u).is_zero());
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> fb(3, 5), vec(0, 2), coeff(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
      VectorForm k(3, VecType::T10);
      k.add(Word{static_cast<std::uint8_t>(fb(rng))}, static_cast<std::uint8_t>(vec(rng)),
            Poly::constant(m.params, GaussRational(coeff(rng))));
      CHECK(tu_map(m, u, delbar(m, k)) == delbar(m, tu_map(m, u, k)));
    }
  }
}

TEST_CASE("Tian-Todorov residual vanishes on all 81 Iwasawa basis pairs") {
  ModelSpec m = builtin_model("iwasawa");
  Form u = canonical_form(m);
  int checked = 0;
  for (int l1 = 3; l1 <= 5; ++l1)
    for (int v1 = 0; v1 <= 2; ++v1)
      for (int l2 = 3; l2 <= 5; ++l2)
        for (int v2 = 0; v2 <= 2; ++v2) {
          VectorForm phi(3, VecType::T10), psi(3, VecType::T10);
          phi.add(Word{static_cast<std::uint8_t>(l1)}, static_cast<std::uint8_t>(v1),
                  Poly::constant(m.params, GaussRational(1)));
          psi.add(Word{static_cast<std::uint8_t>(l2)}, static_cast<std::uint8_t>(v2),
                  Poly::constant(m.params, GaussRational(1)));
          CHECK(tian_todorov_residual(m, phi, psi, u).is_zero());
          ++checked;
        }
  CHECK(checked == 81);
}

TEST_CASE("Tian-Todorov residual vanishes trivially on the torus") {
  ModelSpec m = builtin_model("torus:3");
  Form u = canonical_form(m);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> fb(3, 5), vec(0, 2), coeff(-2, 2), deg(1, 2);
  for (int trial = 0; trial < 30; ++trial) {
    VectorForm phi(3, VecType::T10), psi(3, VecType::T10);
    phi.add(Word{static_cast<std::uint8_t>(fb(rng))}, static_cast<std::uint8_t>(vec(rng)),
            Poly::constant(m.params, GaussRational(coeff(rng))));
    Word w{static_cast<std::uint8_t>(fb(rng))};
    if (deg(rng) == 2) w.push_back(static_cast<std::uint8_t>(fb(rng)));
    psi.add(std::move(w), static_cast<std::uint8_t>(vec(rng)),
            Poly::constant(m.params, GaussRational(coeff(rng))));
    CHECK(tian_todorov_residual(m, phi, psi, u).is_zero());
  }
}

TEST_CASE("kahler_deformation on the torus") {
  ModelSpec m = builtin_model("torus:2");
  HodgeContext ctx(m);
  BeltramiSeries b = model_beltrami(ctx, 10);

  SUBCASE("every (p,q)-class has a constant canonical series") {
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q) {
        BundleSpec bundle = p == 0 ? BundleSpec::trivial() : BundleSpec::omega(p);
        for (const auto& h : harmonic_basis(ctx, bundle, q)) {
          DeformationReport rep = kahler_deformation(ctx, h, b, 10);
          CHECK(rep.sigma == rep.sigma0);
          CHECK(rep.unobstructed);
          CHECK(rep.method == "kahler");
        }
      }
  }

  SUBCASE("f_t is an isomorphism at five random rational points") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> num(-2, 2);
    std::vector<TensorForm> v = harmonic_basis(ctx, BundleSpec::omega(1), 1);
    std::vector<std::vector<GaussRational>> points;
    for (int i = 0; i < 5; ++i) {
      std::vector<GaussRational> pt(4);
      for (auto& c : pt) c = GaussRational(Rational(num(rng), 4));
      points.push_back(pt);
    }
    VtAnalysis an = vt_analysis(ctx, v, BundleSpec::omega(1), 1, b, points, 10);
    for (const auto& row : an.rows) {
      CHECK(row.dim_vt == static_cast<int>(v.size()));
      CHECK(row.dim_ker_ft == 0);
      CHECK(row.hq == static_cast<int>(v.size()));
    }
  }
}

TEST_CASE("kahler_deformation refuses the Iwasawa model") {
  ModelSpec m = builtin_model("iwasawa");
  HodgeContext ctx(m);
  BeltramiSeries b = model_beltrami(ctx, 10);
  TensorForm s0 = parse_class_expr(m, BundleSpec::omega(2), "f1^f2");
  CHECK_THROWS_AS(kahler_deformation(ctx, s0, b, 10), ComputationRefused);
}

TEST_CASE("cy_deformation on the torus") {
  ModelSpec m = builtin_model("torus:2");
  HodgeContext ctx(m);
  BeltramiSeries b = model_beltrami(ctx, 10);
  Form u = canonical_form(m);

  SUBCASE("vector classes deform constantly") {
    for (int q = 0; q <= 1; ++q)
      for (const auto& h : harmonic_basis(ctx, BundleSpec::tangent(), q)) {
        DeformationReport rep = cy_deformation(ctx, h, b, u, 10);
        CHECK(rep.sigma == rep.sigma0);
        CHECK(rep.unobstructed);
        CHECK(rep.method == "cy");
      }
  }

  SUBCASE("q = n is trivial for any model") {
    ModelSpec iw = builtin_model("iwasawa");
    HodgeContext ictx(iw);
    BeltramiSeries ib = model_beltrami(ictx, 10);
    for (const auto& h : harmonic_basis(ictx, BundleSpec::tangent(), 3)) {
      DeformationReport rep = cy_deformation(ictx, h, ib, canonical_form(iw), 10);
      CHECK(rep.sigma == rep.sigma0);
      CHECK(rep.unobstructed);
    }
  }

  SUBCASE("H T_u = T_u H on random vector forms") {
    HodgeContext tctx(m);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> fb(2, 3), vec(0, 1), coeff(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
      VectorForm k(2, VecType::T10);
      k.add(Word{static_cast<std::uint8_t>(fb(rng))}, static_cast<std::uint8_t>(vec(rng)),
            Poly::constant(m.params, GaussRational(coeff(rng))));
      TensorForm kt = tensor_from_vector(k);
      Form lhs = tu_map(m, u, vector_from_tensor(harmonic_projection(tctx, kt)));
      TensorForm rhs_t = harmonic_projection(tctx, tensor_from_scalar(tu_map(m, u, k), 1));
      CHECK(tensor_from_scalar(lhs, 1) == rhs_t);
    }
  }
}
