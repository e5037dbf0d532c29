#include "doldef/extension.hpp"

#include <stdexcept>

namespace doldef {

namespace {

TensorForm truncated(const TensorForm& x, int order) {
  TensorForm out(x.n(), x.bundle());
  for (const auto& [k, c] : x.terms()) out.add(k, c.truncated(order));
  return out;
}

}  // namespace

DeformationReport canonical_deformation(const HodgeContext& ctx, const TensorForm& sigma0_in,
                                        const BeltramiSeries& beltrami, int order) {
  const ModelSpec& m = ctx.model();
  DeformationReport rep;
  rep.order = order;
  rep.mc_certified = beltrami.mc_certified;
  rep.mc_asserted = beltrami.mc_asserted;

  auto qopt = sigma0_in.q();
  if (!qopt) throw std::invalid_argument("canonical_deformation: class must be a (0,q)-form");
  int q = *qopt;

  TensorForm sigma0 = harmonic_projection(ctx, sigma0_in);
  rep.projected = !(sigma0 == sigma0_in);
  rep.sigma0 = sigma0;
  if (sigma0.is_zero()) {
    rep.sigma = sigma0;
    rep.terminated = true;
    rep.unobstructed = true;
    rep.closed_identity = true;
    rep.gauge_star_ok = rep.gauge_harmonic_ok = true;
    int dim_up = cohomology_dim(ctx, sigma0_in.bundle(), q + 1);
    rep.obstruction_basis = harmonic_basis(ctx, sigma0_in.bundle(), q + 1);
    rep.obstruction_polys.assign(dim_up, Poly());
    return rep;
  }

  const int phi_deg = std::max(beltrami.max_degree, 1);
  TensorForm sigma = sigma0;
  int max_deg = 0;
  for (int k = 1; k <= order; ++k) {
    TensorForm rhs = pairing(m, beltrami.phi, sigma).coefficient_degree_part(k);
    TensorForm piece = delbar_star(ctx, green(ctx, rhs));
    if (!piece.is_zero()) {
      sigma += piece;
      max_deg = k;
    }
    if (beltrami.terminated && k >= max_deg + phi_deg) break;
  }
  rep.sigma = sigma;
  rep.max_degree = max_deg;
  rep.terminated = beltrami.terminated && order >= max_deg + phi_deg;

  int cap = rep.terminated ? max_deg + phi_deg + beltrami.max_degree : order;
  TensorForm paired = truncated(pairing(m, beltrami.phi, sigma), cap);
  rep.obstruction_basis = harmonic_basis(ctx, sigma.bundle(), q + 1);
  rep.obstruction_polys.clear();
  for (const auto& alpha : rep.obstruction_basis)
    rep.obstruction_polys.push_back(inner_product(paired, alpha));
  rep.unobstructed = true;
  for (const auto& p : rep.obstruction_polys)
    if (!p.is_zero()) rep.unobstructed = false;

  // Exact identity up to the computed order; `terminated` distinguishes an
  // actual deformation from a formal one.
  TensorForm closed_residual = truncated(delbar_phi(m, beltrami.phi, sigma), cap);
  rep.closed_identity = closed_residual.is_zero() && beltrami.mc_certified;

  rep.gauge_star_ok = delbar_star(ctx, sigma).is_zero();
  rep.gauge_harmonic_ok = harmonic_projection(ctx, sigma) == sigma0;
  return rep;
}

DeformationReport holomorphic_section_deformation(const HodgeContext& ctx,
                                                  const TensorForm& sigma0,
                                                  const BeltramiSeries& beltrami, int order) {
  auto qopt = sigma0.q();
  if (qopt && *qopt != 0)
    throw std::invalid_argument("holomorphic_section_deformation: q must be 0");
  DeformationReport rep = canonical_deformation(ctx, sigma0, beltrami, order);
  rep.precertified = cohomology_dim(ctx, sigma0.bundle(), 1) == 0;
  return rep;
}

namespace {

/// Basis of ker delbar^* ∩ Im delbar_phi on the (bundle, q) piece at a
/// numeric point, as columns in the (bundle, q) coordinates.
Matrix exact_closed_image(const HodgeContext& ctx, const BundleSpec& bundle, int q,
                          const VectorForm& phi_at, const std::vector<GaussRational>& point) {
  const ModelSpec& m = ctx.model();
  const HodgePackage& pkg = ctx.package(bundle, q);
  if (q == 0) return Matrix(pkg.basis.dim(), 0);
  const TensorBasis& below = pkg.basis_down;
  Matrix dphi(pkg.basis.dim(), below.dim());
  for (int j = 0; j < below.dim(); ++j) {
    TensorForm unit(m.n, bundle);
    unit.add(below.keys[j], Poly::constant(m.params, GaussRational(1)));
    TensorForm img = delbar_phi(m, phi_at, unit);
    auto coords = pkg.basis.coords_at(img, point);
    for (int i = 0; i < pkg.basis.dim(); ++i) dphi.at(i, j) = coords[i];
  }
  // y = dphi x with dstar y = 0  <=>  x in ker(dstar dphi).
  Matrix sc = pkg.dstar_down * dphi;
  std::vector<std::vector<GaussRational>> xs = sc.nullspace();
  std::vector<std::vector<GaussRational>> cols;
  for (const auto& x : xs) {
    auto y = dphi.apply(x);
    bool zero = true;
    for (const auto& v : y) zero = zero && v.is_zero();
    if (!zero) cols.push_back(y);
  }
  if (cols.empty()) return Matrix(pkg.basis.dim(), 0);
  return Matrix::from_columns(cols);
}

}  // namespace

VtAnalysis vt_analysis(const HodgeContext& ctx, const std::vector<TensorForm>& v_basis,
                       const BundleSpec& bundle, int q, const BeltramiSeries& beltrami,
                       const std::vector<std::vector<GaussRational>>& points, int order) {
  const ModelSpec& m = ctx.model();
  VtAnalysis out;
  out.bundle = bundle;
  out.q = q;
  const int nclasses = static_cast<int>(v_basis.size());

  for (const auto& s0 : v_basis)
    out.reports.push_back(canonical_deformation(ctx, s0, beltrami, order));

  int nrows = nclasses ? static_cast<int>(out.reports[0].obstruction_polys.size()) : 0;
  out.tmatrix.assign(nrows, std::vector<Poly>(nclasses));
  for (int l = 0; l < nclasses; ++l)
    for (int r = 0; r < nrows; ++r) out.tmatrix[r][l] = out.reports[l].obstruction_polys[r];

  out.v_is_full = nclasses == cohomology_dim(ctx, bundle, q);
  if (out.v_is_full) {
    // V must actually span the harmonic space.
    const HodgePackage& pkg = ctx.package(bundle, q);
    std::vector<std::vector<GaussRational>> cols;
    std::vector<GaussRational> zero_pt(m.params ? m.params->count() : 0);
    for (const auto& s0 : v_basis) cols.push_back(pkg.basis.coords_at(s0, zero_pt));
    out.v_is_full = Matrix::from_columns(cols).rank() == nclasses;
  }

  const HodgePackage& pkg = ctx.package(bundle, q);
  for (const auto& point : points) {
    VtRow row;
    row.point = point;
    row.mc_zero_at_point = beltrami.residual.evaluated(point).is_zero();

    Matrix tval(nrows, nclasses);
    for (int r = 0; r < nrows; ++r)
      for (int l = 0; l < nclasses; ++l) tval.at(r, l) = out.tmatrix[r][l].eval(point);
    std::vector<std::vector<GaussRational>> kernel = tval.nullspace();
    row.dim_vt = static_cast<int>(kernel.size());

    // Evaluated deformed representatives of a basis of V_t.
    VectorForm phi_at = beltrami.phi.evaluated(point);
    std::vector<std::vector<GaussRational>> wcols;
    row.closed_at_point = true;
    for (const auto& a : kernel) {
      TensorForm s(m.n, bundle);
      for (int l = 0; l < nclasses; ++l)
        if (!a[l].is_zero()) s += out.reports[l].sigma.evaluated(point).scaled(a[l]);
      if (!delbar_phi(m, phi_at, s).is_zero()) row.closed_at_point = false;
      wcols.push_back(pkg.basis.coords_at(s, point));
    }
    Matrix w = wcols.empty() ? Matrix(pkg.basis.dim(), 0) : Matrix::from_columns(wcols);
    row.reps_independent = w.rank() == row.dim_vt;
    Matrix exact = exact_closed_image(ctx, bundle, q, phi_at, point);
    row.dim_ker_ft = intersection_dim(w, exact);
    row.hq = row.dim_vt - row.dim_ker_ft;
    out.rows.push_back(std::move(row));
  }
  return out;
}

TensorForm pullback_series(const TensorForm& x, const std::vector<Poly>& images) {
  for (const auto& img : images)
    if (!img.constant_term().is_zero())
      throw std::invalid_argument("pullback: substitution must map 0 to 0");
  TensorForm out(x.n(), x.bundle());
  for (const auto& [k, c] : x.terms()) out.add(k, c.substituted(images));
  return out;
}

DeformationReport pullback_report(const DeformationReport& r, const std::vector<Poly>& images) {
  DeformationReport out = r;
  out.sigma0 = pullback_series(r.sigma0, images);
  out.sigma = pullback_series(r.sigma, images);
  out.obstruction_polys.clear();
  for (const auto& p : r.obstruction_polys) out.obstruction_polys.push_back(p.substituted(images));
  out.unobstructed = true;
  for (const auto& p : out.obstruction_polys)
    if (!p.is_zero()) out.unobstructed = false;
  return out;
}

}  // namespace doldef
