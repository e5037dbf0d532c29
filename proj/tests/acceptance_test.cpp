// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout (tolerances are zero unless a runtime bound is stated).

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "doldef/cli.hpp"
#include "doldef/errors.hpp"

using namespace doldef;

namespace {

int failures = 0;
std::vector<std::string> notes;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    notes.push_back("failed: " + what);
  }
}

void criterion(int number, const std::string& title, const std::function<void()>& body) {
  int before = failures;
  notes.clear();
  auto start = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    ++failures;
    notes.push_back(std::string("exception: ") + e.what());
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  bool ok = failures == before;
  std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " [" << ms << " ms] "
            << title << "\n";
  for (const auto& n : notes) std::cout << "    " << n << "\n";
}

void note(const std::string& s) { notes.push_back("note: " + s); }

Form word_form(const ModelSpec& m, std::initializer_list<int> gens, const std::string& coeff) {
  Word w;
  for (int g : gens) w.push_back(static_cast<std::uint8_t>(g));
  Form f(m.n);
  f.add(std::move(w), Poly::parse(m.params, coeff));
  return f;
}

double elapsed_seconds(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  // 1. Iwasawa Maurer-Cartan series, exact, residual and obstructions zero.
  criterion(1, "Iwasawa Maurer-Cartan series phi(t) = t_{il} v_i fb^l - D(t) v3 fb3", [] {
    auto start = std::chrono::steady_clock::now();
    ModelSpec m = builtin_model("iwasawa");
    HodgeContext ctx(m);
    BeltramiSeries b = solve_mc(ctx, 10);
    VectorForm expect(3, VecType::T10);
    for (int i = 1; i <= 3; ++i)
      for (int l = 1; l <= 2; ++l)
        expect.add(Word{static_cast<std::uint8_t>(2 + l)}, static_cast<std::uint8_t>(i - 1),
                   Poly::parse(m.params, "t" + std::to_string(i) + std::to_string(l)));
    expect.add(Word{5}, 2, Poly::parse(m.params, "-t11*t22 + t21*t12"));
    check(b.phi == expect, "phi(t) equals the displayed series exactly");
    check(b.max_degree == 2 && b.terminated, "series terminates at degree 2");
    check(b.residual.is_zero(), "Maurer-Cartan residual is identically zero");
    check(b.mc_certified, "series is certified");
    for (const auto& p : b.kuranishi_obstructions)
      check(p.is_zero(), "Kuranishi obstruction polynomials vanish");
    check(elapsed_seconds(start) < 1.0, "runtime under 1 s");
  });

  // 2. Iwasawa h^{2,0} jump table via both routes.
  criterion(2, "Iwasawa h^{2,0} jump table: 3 / 2 / 1, both computation routes agree", [] {
    auto start = std::chrono::steady_clock::now();
    ModelSpec m = builtin_model("iwasawa");
    HodgeContext ctx(m);
    BeltramiSeries b = model_beltrami(ctx, 10);
    std::vector<std::vector<GaussRational>> points = {
        parse_point(m, "0"), parse_point(m, "t11=1/2"), parse_point(m, "t11=1/2,t22=1/2")};
    std::vector<TensorForm> v = harmonic_basis(ctx, BundleSpec::omega(2), 0);
    VtAnalysis an = vt_analysis(ctx, v, BundleSpec::omega(2), 0, b, points, 10);
    const int expected[3] = {3, 2, 1};
    for (int i = 0; i < 3; ++i) {
      check(an.rows[i].hq == expected[i],
            "vt_analysis h^{2,0} at point " + std::to_string(i) + " equals " +
                std::to_string(expected[i]));
      int via_phi = deformed_cohomology_dim(ctx, BundleSpec::omega(2), 0, b, points[i]);
      check(via_phi == expected[i], "deformed_cohomology_dim agrees at point " + std::to_string(i));
    }
    check(elapsed_seconds(start) < 5.0, "runtime under 5 s");
  });

  // 3. Iwasawa h^{1,1} jump table with ker f_t and its displayed generator.
  criterion(3, "Iwasawa h^{1,1} table: (6,0,6), (6,1,5), (6,1,5); ker generator delbar_phi f3", [] {
    ModelSpec m = builtin_model("iwasawa");
    HodgeContext ctx(m);
    BeltramiSeries b = model_beltrami(ctx, 10);
    std::vector<std::vector<GaussRational>> points = {
        parse_point(m, "t31=1/2"), parse_point(m, "t11=1/2"), parse_point(m, "t11=1/2,t22=1/2")};
    std::vector<TensorForm> v = harmonic_basis(ctx, BundleSpec::omega(1), 1);
    VtAnalysis an = vt_analysis(ctx, v, BundleSpec::omega(1), 1, b, points, 10);
    const int expected[3][3] = {{6, 0, 6}, {6, 1, 5}, {6, 1, 5}};
    for (int i = 0; i < 3; ++i) {
      check(an.rows[i].dim_vt == expected[i][0], "dim V_t at class point " + std::to_string(i));
      check(an.rows[i].dim_ker_ft == expected[i][1], "dim ker f_t at class point " + std::to_string(i));
      check(an.rows[i].hq == expected[i][2], "h^{1,1} at class point " + std::to_string(i));
    }

    // The displayed kernel generator: delbar_phi f3 = t21 f1^fb1 + t22 f1^fb2
    // - t11 f2^fb1 - t12 f2^fb2, exactly.
    TensorForm f3 = tensor_from_scalar(m.generator(2), 1);
    Form displayed = word_form(m, {0, 3}, "t21") + word_form(m, {0, 4}, "t22") +
                     word_form(m, {1, 3}, "-t11") + word_form(m, {1, 4}, "-t12");
    check(scalar_from_tensor(delbar_phi(m, b.phi, f3)) == displayed,
          "delbar_phi f3 equals the displayed polynomial identity");

    // At class (ii), ker delbar* ∩ Im delbar_phi is spanned by its value.
    const HodgePackage& pkg = ctx.package(BundleSpec::omega(1), 1);
    std::vector<GaussRational> pt = points[1];
    VectorForm phi_at = b.phi.evaluated(pt);
    std::vector<std::vector<GaussRational>> image_cols;
    for (int i = 0; i < 3; ++i) {
      TensorForm unit = tensor_from_scalar(m.generator(i), 1);
      auto coords = pkg.basis.coords_at(delbar_phi(m, phi_at, unit), pt);
      bool zero = true;
      for (const auto& c : coords) zero = zero && c.is_zero();
      if (!zero) image_cols.push_back(coords);
    }
    Matrix image = Matrix::from_columns(image_cols);
    // Everything in (O^1, 1) is delbar*-closed on this model, so the exact
    // part is the image itself; it must be one-dimensional and spanned by
    // the displayed generator.
    check((pkg.dstar_down * image).is_zero(), "image is delbar*-closed at class (ii)");
    check(image.rank() == 1, "ker delbar* cap Im delbar_phi is one-dimensional at class (ii)");
    Matrix gen = Matrix::from_columns(
        {pkg.basis.coords_at(tensor_from_scalar(displayed.evaluated(pt), 1), pt)});
    check(subspace_contains(image, gen) && subspace_contains(gen, image),
          "the kernel generator is exactly delbar_phi f3");
  });

  // 4. Obstruction locus of f2^f3.
  criterion(4, "B(C f2^f3) generators reduce to {t21, t22} up to unit scalars", [] {
    ModelSpec m = builtin_model("iwasawa");
    HodgeContext ctx(m);
    BeltramiSeries b = model_beltrami(ctx, 10);
    TensorForm s0 = parse_class_expr(m, BundleSpec::omega(2), "f2^f3");
    DeformationReport rep = canonical_deformation(ctx, s0, b, 10);
    std::vector<Poly> gens;
    for (const auto& p : rep.obstruction_polys)
      if (!p.is_zero()) gens.push_back(p);
    check(gens.size() == 2, "exactly two nonzero generators");
    bool has21 = false, has22 = false;
    for (const auto& p : gens) {
      has21 = has21 || p == Poly::parse(m.params, "t21") || p == Poly::parse(m.params, "-t21");
      has22 = has22 || p == Poly::parse(m.params, "t22") || p == Poly::parse(m.params, "-t22");
    }
    check(has21 && has22, "generators are t21 and t22 up to sign");
  });

  // 5. Nakamura III-(3b) h^{1,0} stratification under the asserted phi = phi_1.
  criterion(5, "Nakamura III-(3b) h^{1,0} rank-of-T stratification and first-order formula", [] {
    ModelSpec m = builtin_model("nakamura_iii_3b");
    HodgeContext ctx(m);
    BeltramiSeries b = model_beltrami(ctx, 10);
    check(b.mc_asserted, "Beltrami series is carried as asserted, not certified");

    // The displayed first-order formula, reproduced verbatim as polynomial
    // identities on the basis classes (L^{1,0}_{phi_1} f^i).
    VectorForm phi1 = *m.beltrami;
    check(lie10(m, phi1, m.generator(0)) ==
              word_form(m, {0, 4}, "-t12") + word_form(m, {0, 5}, "t13"),
          "L phi1 f1 = -t12 f1^fb2 + t13 f1^fb3");
    check(lie10(m, phi1, m.generator(1)) ==
              word_form(m, {1, 3}, "-t11") + word_form(m, {1, 4}, "-t12") +
                  word_form(m, {1, 5}, "-t13") + word_form(m, {0, 3}, "t21") +
                  word_form(m, {0, 5}, "2*t23"),
          "L phi1 f2 = -t1l f2^fb^l + t21 f1^fb1 + 2 t23 f1^fb3");
    check(lie10(m, phi1, m.generator(2)) ==
              word_form(m, {2, 3}, "t11") + word_form(m, {2, 4}, "t12") +
                  word_form(m, {2, 5}, "t13") + word_form(m, {0, 3}, "-t31") +
                  word_form(m, {0, 4}, "-2*t32"),
          "L phi1 f3 = t1l f3^fb^l - t31 f1^fb1 - 2 t32 f1^fb2");

    // The Maurer-Cartan residual is computed and reported, not asserted.
    check(!b.residual.is_zero(), "MC residual of phi_1 is nonzero and reported");
    note("MC residual of the declared phi(t) = phi_1 (classically taken as the Kuranishi\n         Beltrami differential of this solvmanifold; computed here, not assumed): " +
         b.residual.str());

    // Rank-of-T stratification over representative points of every rank.
    std::vector<TensorForm> v = harmonic_basis(ctx, BundleSpec::omega(1), 0);
    std::vector<std::pair<std::string, int>> strata = {
        {"0", 3}, {"t22=1/2", 3}, {"t21=1/2", 2}, {"t11=1/2", 1}, {"t12=1/2", 0}};
    std::vector<std::vector<GaussRational>> points;
    for (const auto& [s, h] : strata) points.push_back(parse_point(m, s));
    VtAnalysis an = vt_analysis(ctx, v, BundleSpec::omega(1), 0, b, points, 10);
    std::vector<int> seen_ranks;
    for (size_t i = 0; i < strata.size(); ++i) {
      Matrix tval(static_cast<int>(an.tmatrix.size()), 3);
      for (size_t r = 0; r < an.tmatrix.size(); ++r)
        for (int l = 0; l < 3; ++l) tval.at(static_cast<int>(r), l) = an.tmatrix[r][l].eval(points[i]);
      int rank = tval.rank();
      seen_ranks.push_back(rank);
      check(an.rows[i].hq == 3 - rank,
            "h^{1,0} matches the rank-of-T stratification at " + strata[i].first);
      check(an.rows[i].hq == strata[i].second,
            "h^{1,0}(" + strata[i].first + ") = " + std::to_string(strata[i].second));
    }
    check(seen_ranks == std::vector<int>{0, 0, 1, 2, 3},
          "ranks 0,1,2,3 all witnessed across the sample points");
    note("t22 does not occur in the first-order system at all (its coefficients cancel "
         "against d fb2 = f1^fb2), so rank T = 0 and h^{1,0} = 3 at t22=1/2, consistent "
         "with the classical stratification; the rank-1 stratum is witnessed at t21=1/2");
  });

  // 6. Seeded identity suite on three models.
  criterion(6, "identity suite (>= 50 cases per identity) on torus:2, torus:3, iwasawa", [] {
    for (const std::string name : {"torus:2", "torus:3", "iwasawa"}) {
      ModelSpec m = builtin_model(name);
      HodgeContext ctx(m);
      std::vector<IdentityReport> reports = run_identity_suite(ctx, 20260810, 50);
      for (const auto& r : reports)
        check(r.passed, name + ": " + r.name + (r.detail.empty() ? "" : " (" + r.detail + ")"));
      bool has_mc = false;
      for (const auto& r : reports)
        has_mc = has_mc || r.name.find("delbar_phi^2") != std::string::npos;
      check(has_mc, name + ": delbar_phi^2 = 0 ran under certified MC");
    }
  });

  // 7. Extension isomorphism cross-check via re-bigrading.
  criterion(7, "extension isomorphism: delbar_phi dims equal re-bigraded delbar_t dims", [] {
    ModelSpec m = builtin_model("iwasawa");
    HodgeContext ctx(m);
    BeltramiSeries b = model_beltrami(ctx, 10);
    std::vector<std::vector<GaussRational>> points = {
        parse_point(m, "t31=1/2"), parse_point(m, "t11=1/2"), parse_point(m, "t11=1/2,t22=1/2")};
    for (const auto& pt : points) {
      for (auto [bundle, q] : std::vector<std::pair<BundleSpec, int>>{
               {BundleSpec::omega(2), 0}, {BundleSpec::omega(1), 1}}) {
        RebigradeResult r = rebigrade_crosscheck(ctx, bundle, q, b, pt);
        std::string where = bundle.str() + " q=" + std::to_string(q);
        check(r.frame_integrable, where + ": deformed frame bigrading is integrable");
        check(r.dt_squares_to_zero, where + ": delbar_t^2 = 0");
        check(r.dims_equal, where + ": dimensions agree");
        check(r.closedness_equivalence,
              where + ": delbar_t rho sigma = 0 iff delbar_phi sigma = 0 on degree 0");
      }
    }
  });

  // 8. Tian-Todorov identity on all 81 basis pairs.
  criterion(8, "Tian-Todorov residual vanishes for all 81 Iwasawa basis pairs", [] {
    ModelSpec m = builtin_model("iwasawa");
    Form u = canonical_form(m);
    int count = 0;
    for (int l1 = 3; l1 <= 5; ++l1)
      for (int v1 = 0; v1 <= 2; ++v1)
        for (int l2 = 3; l2 <= 5; ++l2)
          for (int v2 = 0; v2 <= 2; ++v2) {
            VectorForm phi(3, VecType::T10), psi(3, VecType::T10);
            phi.add(Word{static_cast<std::uint8_t>(l1)}, static_cast<std::uint8_t>(v1),
                    Poly::constant(m.params, GaussRational(1)));
            psi.add(Word{static_cast<std::uint8_t>(l2)}, static_cast<std::uint8_t>(v2),
                    Poly::constant(m.params, GaussRational(1)));
            if (tian_todorov_residual(m, phi, psi, u).is_zero()) ++count;
          }
    check(count == 81, "all 81 residuals vanish (" + std::to_string(count) + "/81)");
  });

  // 9. Torus unobstructedness and f_t isomorphisms.
  criterion(9, "torus:2: every class deforms constantly; f_t is an isomorphism", [] {
    ModelSpec m = builtin_model("torus:2");
    HodgeContext ctx(m);
    BeltramiSeries b = model_beltrami(ctx, 10);
    check(b.mc_certified, "torus Maurer-Cartan is certified");

    std::vector<BundleSpec> bundles = {BundleSpec::trivial(), BundleSpec::omega(1),
                                       BundleSpec::omega(2), BundleSpec::tangent()};
    std::mt19937_64 rng(20260810);
    std::uniform_int_distribution<int> num(-2, 2);
    std::vector<std::vector<GaussRational>> points;
    for (int i = 0; i < 5; ++i) {
      std::vector<GaussRational> pt(4);
      for (auto& c : pt)
        c = GaussRational(Rational(num(rng), 4), Rational(num(rng), 8));
      points.push_back(pt);
    }

    for (const auto& bundle : bundles)
      for (int q = 0; q <= 2; ++q) {
        std::vector<TensorForm> v = harmonic_basis(ctx, bundle, q);
        if (v.empty()) continue;
        for (const auto& h : v) {
          DeformationReport rep = canonical_deformation(ctx, h, b, 10);
          check(rep.sigma == rep.sigma0,
                bundle.str() + " q=" + std::to_string(q) + ": constant canonical deformation");
          check(rep.unobstructed, bundle.str() + ": empty obstruction set");
        }
        VtAnalysis an = vt_analysis(ctx, v, bundle, q, b, points, 10);
        for (const auto& row : an.rows) {
          check(row.dim_vt == static_cast<int>(v.size()) && row.dim_ker_ft == 0,
                bundle.str() + " q=" + std::to_string(q) + ": f_t injective with full V_t");
          check(row.hq == static_cast<int>(v.size()),
                bundle.str() + " q=" + std::to_string(q) + ": h^q preserved at sample points");
        }
      }
  });

  // 10. Determinism and pullback.
  criterion(10, "byte-identical reruns; pullback of B(C f2^f3) along t21=s, t22=s^2", [] {
    ModelSpec m = builtin_model("iwasawa");
    HodgeContext ctx(m);
    BeltramiSeries b = model_beltrami(ctx, 10);
    TensorForm s0 = parse_class_expr(m, BundleSpec::omega(2), "f2^f3");
    DeformationReport r1 = canonical_deformation(ctx, s0, b, 10);
    DeformationReport r2 = canonical_deformation(ctx, s0, b, 10);
    std::ostringstream a, c;
    a << r1.sigma.str();
    c << r2.sigma.str();
    for (const auto& p : r1.obstruction_polys) a << "|" << p.str();
    for (const auto& p : r2.obstruction_polys) c << "|" << p.str();
    check(a.str() == c.str(), "rerun produces byte-identical series and polynomials");

    auto sparams = make_params({"ts"});
    std::vector<Poly> images(6, Poly(sparams));
    images[2] = Poly::variable(sparams, 0);
    images[3] = Poly::variable(sparams, 0) * Poly::variable(sparams, 0);
    DeformationReport pulled = pullback_report(r1, images);
    std::vector<Poly> gens;
    for (const auto& p : pulled.obstruction_polys)
      if (!p.is_zero()) gens.push_back(p);
    Poly s = Poly::variable(sparams, 0);
    bool ok_shape = gens.size() == 2;
    bool linear = false, quadratic = false;
    for (const auto& p : gens) {
      linear = linear || p == s || p == -s;
      quadratic = quadratic || p == s * s || p == -(s * s);
    }
    check(ok_shape && linear && quadratic, "pulled-back generators are {s, s^2} up to sign");
    // {s, s^2} cuts out exactly {s = 0}: the linear generator witnesses it.
    GaussRational zero(0), half(Rational(1, 2));
    for (const auto& p : gens) check(p.eval({zero}).is_zero(), "generators vanish at s = 0");
    bool nonvanishing = false;
    for (const auto& p : gens) nonvanishing = nonvanishing || !p.eval({half}).is_zero();
    check(nonvanishing, "locus excludes s != 0");
  });

  if (failures == 0) {
    std::cout << "acceptance: all criteria PASS\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " check(s) FAILED\n";
  return 1;
}
