#include "doldef/kuranishi.hpp"

#include <stdexcept>

namespace doldef {

namespace {

int max_coeff_degree(const VectorForm& v) {
  int d = 0;
  for (const auto& [k, c] : v.terms()) d = std::max(d, c.degree());
  return d;
}

VectorForm truncated(const VectorForm& v, int order) {
  VectorForm out(v.n(), v.type());
  for (const auto& [k, c] : v.terms()) out.add(k.first, k.second, c.truncated(order));
  return out;
}

std::vector<Poly> kuranishi_obstruction_polys(const HodgeContext& ctx, const VectorForm& phi,
                                              int order) {
  VectorForm br = fn_bracket(ctx.model(), phi, phi);
  TensorForm brt = tensor_from_vector(truncated(br, order));
  if (brt.is_zero()) {
    int d = cohomology_dim(ctx, BundleSpec::tangent(), 2);
    return std::vector<Poly>(d);
  }
  return harmonic_components(ctx, brt);
}

/// Applies delbar^* G on the (0,2; T) piece to a vector form.
VectorForm propagate(const HodgeContext& ctx, const VectorForm& x) {
  if (x.is_zero()) return x;
  TensorForm t = tensor_from_vector(x);
  return vector_from_tensor(delbar_star(ctx, green(ctx, t)));
}

}  // namespace

VectorForm mc_residual_series(const ModelSpec& m, const VectorForm& phi, int order) {
  VectorForm res = delbar(m, phi);
  if (!phi.is_zero()) {
    VectorForm br = fn_bracket(m, phi, phi);
    for (const auto& [k, c] : br.terms())
      res.add(k.first, k.second, c.scaled(GaussRational(Rational(-1, 2))));
  }
  return truncated(res, order);
}

BeltramiSeries solve_mc(const HodgeContext& ctx, int order,
                        const std::optional<VectorForm>& phi1_in) {
  const ModelSpec& m = ctx.model();
  BeltramiSeries out;
  out.order = order;

  VectorForm phi1(m.n, VecType::T10);
  if (phi1_in) {
    phi1 = *phi1_in;
  } else if (m.beltrami) {
    phi1 = m.beltrami->coefficient_degree_part(1);
  } else {
    // Default linear part: one parameter per harmonic basis element of
    // H^{0,1}(X, T^{1,0}), matched to the declared parameters by the
    // t<vector><form> naming convention where possible.
    std::vector<TensorForm> eta = harmonic_basis(ctx, BundleSpec::tangent(), 1);
    if (!m.params || static_cast<int>(eta.size()) != m.params->count())
      throw std::invalid_argument(
          "solve_mc: model must declare one parameter per harmonic (0,1;T) basis element");
    for (size_t nu = 0; nu < eta.size(); ++nu) {
      Poly t = Poly::variable(m.params, static_cast<int>(nu));
      if (eta[nu].terms().size() == 1) {
        const TensorKey& key = eta[nu].terms().begin()->first;
        std::string name = "t" + std::to_string(key.factors[0][0] + 1) +
                           std::to_string(key.qword[0] - m.n + 1);
        for (int i = 0; i < m.params->count(); ++i)
          if (m.params->name(i) == name) t = Poly::variable(m.params, i);
      }
      VectorForm v = vector_from_tensor(eta[nu]);
      for (const auto& [k, c] : v.terms()) phi1.add(k.first, k.second, c * t);
    }
  }

  VectorForm phi = phi1;
  int max_deg = phi.is_zero() ? 0 : 1;
  for (int mu = 2; mu <= order; ++mu) {
    // phi_mu = 1/2 delbar^* G (degree-mu part of [phi, phi]).
    VectorForm br = fn_bracket(m, phi, phi).coefficient_degree_part(mu);
    VectorForm piece = propagate(ctx, br).scaled(
        Poly::constant(m.params, GaussRational(Rational(1, 2))));
    if (!piece.is_zero()) {
      phi += piece;
      max_deg = mu;
    }
    if (mu >= 2 * max_deg) break;  // no higher degree can repopulate
  }
  out.phi = phi;
  out.max_degree = max_deg;
  out.terminated = order >= 2 * max_deg;
  out.residual = mc_residual_series(m, phi, out.terminated ? 2 * max_deg : order);
  out.kuranishi_obstructions = kuranishi_obstruction_polys(ctx, phi, order);
  bool residual_zero = out.residual.is_zero();
  out.mc_certified = residual_zero && out.terminated;
  return out;
}

BeltramiSeries asserted_beltrami(const HodgeContext& ctx, const VectorForm& phi, int order) {
  BeltramiSeries out;
  out.order = order;
  out.phi = phi;
  out.max_degree = max_coeff_degree(phi);
  out.terminated = true;  // declared series is finite by construction
  out.residual = mc_residual_series(ctx.model(), phi, 2 * std::max(out.max_degree, 1));
  out.kuranishi_obstructions = kuranishi_obstruction_polys(ctx, phi, order);
  out.mc_certified = out.residual.is_zero();
  // A declared series whose residual vanishes identically is certified after
  // the fact; the asserted caveat only applies when it does not.
  out.mc_asserted = !out.mc_certified;
  return out;
}

}  // namespace doldef
