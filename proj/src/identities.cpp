#include "doldef/identities.hpp"

#include <functional>
#include <random>

namespace doldef {

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  GaussRational coeff() {
    int re = uniform(-3, 3);
    int im = uniform(0, 3) == 0 ? uniform(-2, 2) : 0;
    return GaussRational(Rational(re), Rational(im));
  }
};

Form random_form(const ModelSpec& m, Rng& rng, int degree = -1) {
  Form f(m.n);
  int terms = rng.uniform(1, 4);
  for (int t = 0; t < terms; ++t) {
    int len = degree >= 0 ? degree : rng.uniform(0, 2 * m.n);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(static_cast<std::uint8_t>(rng.uniform(0, 2 * m.n - 1)));
    f.add(std::move(w), Poly::constant(m.params, rng.coeff()));
  }
  return f;
}

VectorForm random_vector_form(const ModelSpec& m, Rng& rng, int k) {
  VectorForm v(m.n, VecType::T10);
  int terms = rng.uniform(1, 3);
  for (int t = 0; t < terms; ++t) {
    Word w;
    for (int i = 0; i < k; ++i)
      w.push_back(static_cast<std::uint8_t>(m.n + rng.uniform(0, m.n - 1)));
    v.add(std::move(w), static_cast<std::uint8_t>(rng.uniform(0, m.n - 1)),
          Poly::constant(m.params, rng.coeff()));
  }
  return v;
}

BundleSpec random_bundle(const ModelSpec& m, Rng& rng) {
  switch (rng.uniform(0, 5)) {
    case 0: return BundleSpec::trivial();
    case 1: return BundleSpec::omega(1);
    case 2: return BundleSpec::omega(std::min(2, m.n));
    case 3: return BundleSpec::tangent();
    case 4: return BundleSpec::omega(m.n);
    default: return BundleSpec::tangent().tensor(BundleSpec::omega(1));
  }
}

TensorForm random_tensor(const ModelSpec& m, Rng& rng, const BundleSpec& bundle, int q) {
  TensorBasis basis = TensorBasis::enumerate(m.n, bundle, q);
  TensorForm out(m.n, bundle);
  if (basis.dim() == 0) return out;
  int terms = rng.uniform(1, 3);
  for (int t = 0; t < terms; ++t)
    out.add(basis.keys[rng.uniform(0, basis.dim() - 1)], Poly::constant(m.params, rng.coeff()));
  return out;
}

std::vector<GaussRational> random_point(const ModelSpec& m, Rng& rng) {
  std::vector<GaussRational> pt(m.params->count());
  for (auto& v : pt) v = GaussRational(Rational(rng.uniform(-2, 2), 4));
  return pt;
}

using CheckFn = std::function<bool(Rng&, std::string&)>;

IdentityReport run_check(const std::string& name, int cases, Rng& rng, const CheckFn& fn) {
  IdentityReport rep;
  rep.name = name;
  rep.cases = cases;
  rep.passed = true;
  for (int i = 0; i < cases && rep.passed; ++i) {
    std::string detail;
    if (!fn(rng, detail)) {
      rep.passed = false;
      rep.detail = detail.empty() ? "case " + std::to_string(i) : detail;
    }
  }
  return rep;
}

}  // namespace

std::vector<IdentityReport> run_identity_suite(const HodgeContext& ctx, std::uint64_t seed,
                                               int cases) {
  const ModelSpec& m = ctx.model();
  Rng rng(seed);
  std::vector<IdentityReport> out;

  out.push_back(run_check("d^2 = 0, del^2 = delbar^2 = del delbar + delbar del = 0", cases, rng,
                          [&](Rng& r, std::string&) {
                            Form x = random_form(m, r);
                            return d_op(m, d_op(m, x)).is_zero() &&
                                   del(m, del(m, x)).is_zero() &&
                                   delbar(m, delbar(m, x)).is_zero() &&
                                   (del(m, delbar(m, x)) + delbar(m, del(m, x))).is_zero();
                          }));

  out.push_back(run_check("[delbar, L^{1,0}_phi] = L^{1,0}_{delbar phi}", cases, rng,
                          [&](Rng& r, std::string&) {
                            VectorForm phi = random_vector_form(m, r, 1);
                            Form x = random_form(m, r);
                            Form lhs = delbar(m, lie10(m, phi, x)) + lie10(m, phi, delbar(m, x));
                            VectorForm dphi = delbar(m, phi);
                            Form rhs = dphi.is_zero() ? Form(m.n) : lie10(m, dphi, x);
                            return lhs == rhs;
                          }));

  out.push_back(run_check("L_{[K,L]} = [L_K, L_L]", cases, rng, [&](Rng& r, std::string&) {
    int kd = r.uniform(1, 2), ld = r.uniform(1, 2);
    VectorForm k = random_vector_form(m, r, kd);
    VectorForm l = random_vector_form(m, r, ld);
    VectorForm br = fn_bracket(m, k, l);
    Form x = random_form(m, r);
    Form lhs = br.is_zero() ? Form(m.n) : lie_full(m, br, x);
    Form rhs = lie_full(m, k, lie_full(m, l, x));
    Form rl = lie_full(m, l, lie_full(m, k, x));
    if ((kd * ld) % 2 == 0)
      rhs -= rl;
    else
      rhs += rl;
    return lhs == rhs;
  }));

  out.push_back(run_check("<phi|<psi|s>> = <[phi,psi]|s> + (-1)^{kl} <psi|<phi|s>>", cases, rng,
                          [&](Rng& r, std::string&) {
                            int kd = r.uniform(1, 2), ld = r.uniform(1, 2);
                            VectorForm phi = random_vector_form(m, r, kd);
                            VectorForm psi = random_vector_form(m, r, ld);
                            BundleSpec bundle = random_bundle(m, r);
                            TensorForm s = random_tensor(m, r, bundle, r.uniform(0, m.n));
                            TensorForm lhs = pairing(m, phi, pairing(m, psi, s));
                            VectorForm br = fn_bracket(m, phi, psi);
                            TensorForm rhs = br.is_zero() ? TensorForm(m.n, bundle)
                                                          : pairing(m, br, s);
                            TensorForm swap = pairing(m, psi, pairing(m, phi, s));
                            if ((kd * ld) % 2 == 0)
                              rhs += swap;
                            else
                              rhs -= swap;
                            return lhs == rhs;
                          }));

  out.push_back(run_check("<phi|<phi|s>> = 1/2 <[phi,phi]|s>", cases, rng,
                          [&](Rng& r, std::string&) {
                            VectorForm phi = random_vector_form(m, r, 1);
                            BundleSpec bundle = random_bundle(m, r);
                            TensorForm s = random_tensor(m, r, bundle, r.uniform(0, m.n));
                            TensorForm lhs = pairing(m, phi, pairing(m, phi, s));
                            VectorForm br = fn_bracket(m, phi, phi);
                            TensorForm rhs = br.is_zero()
                                                 ? TensorForm(m.n, bundle)
                                                 : pairing(m, br, s).scaled(
                                                       GaussRational(Rational(1, 2)));
                            return lhs == rhs;
                          }));

  BeltramiSeries beltrami = m.beltrami ? asserted_beltrami(ctx, *m.beltrami, 10)
                                       : solve_mc(ctx, 10);

  out.push_back(run_check("rho(a ^ b) = rho(a) ^ rho(b)", cases, rng, [&](Rng& r, std::string&) {
    Form a = random_form(m, r), b = random_form(m, r);
    return rho_extend(beltrami.phi, wedge(a, b)) ==
           wedge(rho_extend(beltrami.phi, a), rho_extend(beltrami.phi, b));
  }));

  out.push_back(run_check("rho^{-1} rho = id at three rational points", 3, rng,
                          [&](Rng& r, std::string& detail) {
                            std::vector<GaussRational> pt = random_point(m, r);
                            Form x = random_form(m, r);
                            Form y = rho_inverse_at(beltrami.phi, pt,
                                                    rho_extend_at(beltrami.phi, pt, x));
                            if (y != x) {
                              detail = "mismatch at a random rational point";
                              return false;
                            }
                            return true;
                          }));

  out.push_back(run_check("Hodge package identities (H^2 = H, box G = 1 - H, GH = HG = 0)", 6, rng,
                          [&](Rng& r, std::string& detail) {
                            BundleSpec bundle = random_bundle(m, r);
                            int q = r.uniform(0, m.n);
                            const HodgePackage& pkg = ctx.package(bundle, q);
                            const Matrix& h = pkg.hodge.H;
                            const Matrix& g = pkg.hodge.G;
                            const Matrix& box = pkg.hodge.box;
                            Matrix eye = Matrix::identity(h.rows());
                            if (!(h * h == h)) detail = "H^2 != H";
                            if (!(box * g == eye - h)) detail = "box G != 1 - H";
                            if (!(g * h).is_zero() || !(h * g).is_zero()) detail = "GH or HG != 0";
                            if (!(box * g == g * box)) detail = "[box, G] != 0";
                            return detail.empty();
                          }));

  if (beltrami.mc_certified) {
    out.push_back(run_check("delbar_phi^2 = 0 under certified Maurer-Cartan", cases, rng,
                            [&](Rng& r, std::string&) {
                              BundleSpec bundle = random_bundle(m, r);
                              TensorForm s = random_tensor(m, r, bundle, r.uniform(0, m.n - 1));
                              return delbar_phi(m, beltrami.phi,
                                                delbar_phi(m, beltrami.phi, s))
                                  .is_zero();
                            }));

    out.push_back(run_check("[delbar_phi, <psi|] = <delbar_phi psi| under certified MC", cases,
                            rng, [&](Rng& r, std::string&) {
                              VectorForm psi = random_vector_form(m, r, 1);
                              BundleSpec bundle = random_bundle(m, r);
                              TensorForm s = random_tensor(m, r, bundle, r.uniform(0, m.n - 1));
                              TensorForm lhs =
                                  delbar_phi(m, beltrami.phi, pairing(m, psi, s)) +
                                  pairing(m, psi, delbar_phi(m, beltrami.phi, s));
                              VectorForm dpsi = delbar(m, psi) - fn_bracket(m, beltrami.phi, psi);
                              TensorForm rhs =
                                  dpsi.is_zero() ? TensorForm(m.n, bundle) : pairing(m, dpsi, s);
                              return lhs == rhs;
                            }));
  }

  return out;
}

bool all_passed(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

}  // namespace doldef
