#include <doctest.h>

#include <random>

#include "doldef/calculus.hpp"
#include "doldef/models.hpp"

using namespace doldef;

namespace {

// Tiny helper to build invariant forms from generator words.
Form word(const ModelSpec& m, std::initializer_list<int> gens, const std::string& coeff = "1") {
  Word w;
  for (int g : gens) w.push_back(static_cast<std::uint8_t>(g));
  Form f(m.n);
  f.add(std::move(w), Poly::parse(m.params, coeff));
  return f;
}

}  // namespace

TEST_CASE("d, del, delbar on the Iwasawa model") {
  ModelSpec m = builtin_model("iwasawa");
  // delbar fb3 = -fb1^fb2 (conjugate of d f3 = -f1^f2).
  CHECK(delbar(m, m.generator(5)) == word(m, {3, 4}, "-1"));
  // d f3 is pure (2,0): delbar f3 = 0.
  CHECK(delbar(m, m.generator(2)).is_zero());
  CHECK(del(m, m.generator(2)) == word(m, {0, 1}, "-1"));
  // torus: d kills every invariant form.
  ModelSpec t = builtin_model("torus:2");
  CHECK(d_op(t, t.generator(0)).is_zero());
  CHECK(d_op(t, word(t, {0, 2})).is_zero());
}

TEST_CASE("L^{1,0} formulas displayed for Example III-(2)") {
  ModelSpec m = builtin_model("iwasawa");
  VectorForm phi1 = m.beltrami->coefficient_degree_part(1);

  SUBCASE("L phi1 kills f1, f2 and all fb's") {
    for (int g : {0, 1, 3, 4, 5}) CHECK(lie10(m, phi1, m.generator(g)).is_zero());
  }

  SUBCASE("L phi1 f3 = sum (t1l f2 - t2l f1) ^ fb^l") {
    Form expect(3);
    for (int l = 0; l < 2; ++l) {
      std::string t1 = "t1" + std::to_string(l + 1), t2 = "t2" + std::to_string(l + 1);
      expect += wedge(word(m, {1}, t1) - word(m, {0}, t2), m.generator(3 + l));
    }
    CHECK(lie10(m, phi1, m.generator(2)) == expect);
  }

  SUBCASE("L phi1 (f2^f3) = -t2l fb^l ^ f1 ^ f2") {
    Form expect = word(m, {0, 1, 3}, "-t21") + word(m, {0, 1, 4}, "-t22");
    CHECK(lie10(m, phi1, wedge(m.generator(1), m.generator(2))) == expect);
  }

  SUBCASE("L phi2 kills every generator") {
    VectorForm phi2 = m.beltrami->coefficient_degree_part(2);
    for (int g = 0; g < 6; ++g) CHECK(lie10(m, phi2, m.generator(g)).is_zero());
  }
}

TEST_CASE("L^{1,0} formula displayed for Example III-(3b)") {
  ModelSpec m = builtin_model("nakamura_iii_3b");
  VectorForm phi1 = *m.beltrami;

  SUBCASE("L phi1 f1 = -t12 f1^fb2 + t13 f1^fb3") {
    CHECK(lie10(m, phi1, m.generator(0)) ==
          word(m, {0, 4}, "-t12") + word(m, {0, 5}, "t13"));
  }

  SUBCASE("L phi1 f2 = -t1l f2^fb^l + t21 f1^fb1 + 2 t23 f1^fb3") {
    Form expect = word(m, {1, 3}, "-t11") + word(m, {1, 4}, "-t12") + word(m, {1, 5}, "-t13") +
                  word(m, {0, 3}, "t21") + word(m, {0, 5}, "2*t23");
    CHECK(lie10(m, phi1, m.generator(1)) == expect);
  }

  SUBCASE("L phi1 f3 = t1l f3^fb^l - t31 f1^fb1 - 2 t32 f1^fb2") {
    Form expect = word(m, {2, 3}, "t11") + word(m, {2, 4}, "t12") + word(m, {2, 5}, "t13") +
                  word(m, {0, 3}, "-t31") + word(m, {0, 4}, "-2*t32");
    CHECK(lie10(m, phi1, m.generator(2)) == expect);
  }
}

TEST_CASE("algebraic-derivation identity L^{0,1}_K = (-1)^k i_{delbar K}") {
  ModelSpec m = builtin_model("iwasawa");
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> fb(3, 5), vec(0, 2), coeff(-2, 2), deg(1, 2);
  std::uniform_int_distribution<int> len(0, 6), gen(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    int k = deg(rng);
    VectorForm K(3, VecType::T10);
    Word w;
    for (int i = 0; i < k; ++i) w.push_back(static_cast<std::uint8_t>(fb(rng)));
    K.add(std::move(w), static_cast<std::uint8_t>(vec(rng)),
          Poly::constant(m.params, GaussRational(coeff(rng))));
    if (K.is_zero()) continue;
    Form x(3);
    Word xw;
    int l = len(rng);
    for (int i = 0; i < l; ++i) xw.push_back(static_cast<std::uint8_t>(gen(rng)));
    x.add(std::move(xw), Poly::constant(m.params, GaussRational(coeff(rng))));

    Form lhs = lie01(m, K, x);
    VectorForm dk = delbar(m, K);
    Form rhs = dk.is_zero() ? Form(3) : contract(dk, x);
    if (k % 2) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Frolicher-Nijenhuis bracket") {
  ModelSpec m = builtin_model("iwasawa");
  set_debug_checks(true);

  SUBCASE("[fb1 (x) v1, fb2 (x) v2] = fb1^fb2 (x) v3") {
    VectorForm a(3, VecType::T10), b(3, VecType::T10);
    a.add(Word{3}, 0, Poly::constant(m.params, GaussRational(1)));
    b.add(Word{4}, 1, Poly::constant(m.params, GaussRational(1)));
    VectorForm expect(3, VecType::T10);
    expect.add(Word{3, 4}, 2, Poly::constant(m.params, GaussRational(1)));
    CHECK(fn_bracket(m, a, b) == expect);
  }

  SUBCASE("[K, K] = 0 for K = fb1 (x) v1") {
    VectorForm k(3, VecType::T10);
    k.add(Word{3}, 0, Poly::constant(m.params, GaussRational(1)));
    CHECK(fn_bracket(m, k, k).is_zero());
  }

  SUBCASE("1/2 [phi1, phi1] = D(t) fb1^fb2 (x) v3") {
    VectorForm phi1 = m.beltrami->coefficient_degree_part(1);
    VectorForm half = fn_bracket(m, phi1, phi1).scaled(
        Poly::constant(m.params, GaussRational(Rational(1, 2))));
    VectorForm expect(3, VecType::T10);
    expect.add(Word{3, 4}, 2, Poly::parse(m.params, "t11*t22 - t21*t12"));
    CHECK(half == expect);
  }

  SUBCASE("graded antisymmetry for (0,1) pairs") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> fb(3, 5), vec(0, 2), coeff(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
      VectorForm a(3, VecType::T10), b(3, VecType::T10);
      a.add(Word{static_cast<std::uint8_t>(fb(rng))}, static_cast<std::uint8_t>(vec(rng)),
            Poly::constant(m.params, GaussRational(coeff(rng))));
      b.add(Word{static_cast<std::uint8_t>(fb(rng))}, static_cast<std::uint8_t>(vec(rng)),
            Poly::constant(m.params, GaussRational(coeff(rng))));
      CHECK(fn_bracket(m, a, b) == fn_bracket(m, b, a));  // k = l = 1: [a,b] = +[b,a]
    }
  }

  SUBCASE("mixed bidegrees are rejected") {
    VectorForm bad(3, VecType::T10);
    bad.add(Word{0}, 0, Poly::constant(m.params, GaussRational(1)));  // (1,0)-word
    VectorForm ok(3, VecType::T10);
    ok.add(Word{3}, 0, Poly::constant(m.params, GaussRational(1)));
    CHECK_THROWS_AS(fn_bracket(m, bad, ok), std::invalid_argument);
  }
  set_debug_checks(false);
}

TEST_CASE("pairing against tensor bundles") {
  ModelSpec m = builtin_model("iwasawa");
  VectorForm phi1 = m.beltrami->coefficient_degree_part(1);

  SUBCASE("E = O^2: <phi1 | f2^f3> = -t2l fb^l ^ f1^f2 as a tensor form") {
    TensorForm s = tensor_from_scalar(wedge(m.generator(1), m.generator(2)), 2);
    TensorForm got = pairing(m, phi1, s);
    Form expect = word(m, {0, 1, 3}, "-t21") + word(m, {0, 1, 4}, "-t22");
    CHECK(scalar_from_tensor(got) == expect);
  }

  SUBCASE("<0 | s> = 0") {
    VectorForm zero(3, VecType::T10);
    TensorForm s = tensor_from_scalar(wedge(m.generator(0), m.generator(3)), 1);
    CHECK(delbar_phi(m, zero, s) == delbar(m, s));
  }

  SUBCASE("E = T: pairing coincides with the FN bracket") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> fb(3, 5), vec(0, 2), coeff(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
      VectorForm psi(3, VecType::T10);
      psi.add(Word{static_cast<std::uint8_t>(fb(rng))}, static_cast<std::uint8_t>(vec(rng)),
              Poly::constant(m.params, GaussRational(coeff(rng))));
      TensorForm got = pairing(m, phi1, tensor_from_vector(psi));
      CHECK(vector_from_tensor(got) == fn_bracket(m, phi1, psi));
    }
  }
}

TEST_CASE("delbar_phi on the Iwasawa model") {
  ModelSpec m = builtin_model("iwasawa");
  VectorForm phi = *m.beltrami;

  SUBCASE("delbar_phi f3 = t21 f1^fb1 + t22 f1^fb2 - t11 f2^fb1 - t12 f2^fb2") {
    TensorForm f3 = tensor_from_scalar(m.generator(2), 1);
    Form expect = word(m, {0, 3}, "t21") + word(m, {0, 4}, "t22") + word(m, {1, 3}, "-t11") +
                  word(m, {1, 4}, "-t12");
    CHECK(scalar_from_tensor(delbar_phi(m, phi, f3)) == expect);
  }

  SUBCASE("delbar_phi^2 = 0 on random tensor forms (certified MC)") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> q(0, 2), pick(0, 100), coeff(-2, 2);
    for (const BundleSpec& bundle :
         {BundleSpec::omega(1), BundleSpec::omega(2), BundleSpec::tangent(),
          BundleSpec::tangent().tensor(BundleSpec::omega(1))}) {
      for (int trial = 0; trial < 15; ++trial) {
        TensorBasis basis = TensorBasis::enumerate(3, bundle, q(rng));
        if (basis.dim() == 0) continue;
        TensorForm s(3, bundle);
        s.add(basis.keys[pick(rng) % basis.dim()],
              Poly::constant(m.params, GaussRational(coeff(rng))));
        CHECK(delbar_phi(m, phi, delbar_phi(m, phi, s)).is_zero());
      }
    }
  }
}
