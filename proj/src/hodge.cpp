#include "doldef/hodge.hpp"

#include <stdexcept>

namespace doldef {

HodgeOps HodgeOps::make(const Matrix& d_from, const Matrix& d_to) {
  HodgeOps ops;
  int dim = d_to.cols();
  Matrix dstar_up = d_to.conj_transpose();
  Matrix dstar_down = d_from.conj_transpose();
  ops.box = dstar_up * d_to + d_from * dstar_down;
  ops.harmonics = ops.box.nullspace();
  Matrix b = Matrix::from_columns(ops.harmonics);
  if (b.cols() == 0) {
    ops.H = Matrix(dim, dim);
    ops.harmonic_pinv = Matrix(0, dim);
  } else {
    Matrix bstar = b.conj_transpose();
    ops.harmonic_pinv = (bstar * b).inverse() * bstar;
    ops.H = b * ops.harmonic_pinv;
  }
  // box + H is invertible (block diagonal across ker box and its
  // complement), so G = (box + H)^{-1} (I - H) is the exact pseudoinverse
  // vanishing on harmonics.
  Matrix eye = Matrix::identity(dim);
  ops.G = (ops.box + ops.H).inverse() * (eye - ops.H);
  return ops;
}

namespace {

Matrix delbar_matrix(const ModelSpec& m, const TensorBasis& from, const TensorBasis& to) {
  Matrix out(to.dim(), from.dim());
  ParamSetPtr params = m.params;
  for (int j = 0; j < from.dim(); ++j) {
    TensorForm unit(m.n, from.bundle);
    unit.add(from.keys[j], Poly::constant(params, GaussRational(1)));
    TensorForm img = delbar(m, unit);
    for (const auto& [key, c] : img.terms()) {
      auto it = to.index.find(key);
      if (it == to.index.end()) throw std::logic_error("delbar image left the graded piece");
      out.at(it->second, j) = c.constant_term();
    }
  }
  return out;
}

}  // namespace

const HodgePackage& HodgeContext::package(const BundleSpec& bundle, int q) const {
  std::scoped_lock lock(mu_);
  auto key = std::make_pair(bundle, q);
  auto it = cache_.find(key);
  if (it != cache_.end()) return *it->second;

  auto pkg = std::make_unique<HodgePackage>();
  const ModelSpec& m = *model_;
  pkg->basis = TensorBasis::enumerate(m.n, bundle, q);
  pkg->basis_up = TensorBasis::enumerate(m.n, bundle, q + 1);
  pkg->basis_down =
      q > 0 ? TensorBasis::enumerate(m.n, bundle, q - 1) : TensorBasis{m.n, bundle, -1, {}, {}};
  pkg->d_to = delbar_matrix(m, pkg->basis, pkg->basis_up);
  pkg->d_from = q > 0 ? delbar_matrix(m, pkg->basis_down, pkg->basis)
                      : Matrix(pkg->basis.dim(), 0);
  pkg->dstar_up = pkg->d_to.conj_transpose();
  pkg->dstar_down = pkg->d_from.conj_transpose();
  pkg->hodge = HodgeOps::make(pkg->d_from, pkg->d_to);
  auto [pos, inserted] = cache_.emplace(key, std::move(pkg));
  return *pos->second;
}

std::vector<Poly> apply_matrix(const Matrix& m, const std::vector<Poly>& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw std::invalid_argument("apply_matrix: dimension mismatch");
  std::vector<Poly> out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += v[j].scaled(m.at(i, j));
    }
  return out;
}

namespace {

TensorForm from_poly_coords(const TensorBasis& basis, const std::vector<Poly>& coords) {
  TensorForm out(basis.n, basis.bundle);
  for (size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out.add(basis.keys[i], coords[i]);
  return out;
}

}  // namespace

TensorForm harmonic_projection(const HodgeContext& ctx, const TensorForm& x) {
  if (x.is_zero()) return x;
  auto q = x.q();
  if (!q) throw std::invalid_argument("harmonic_projection: inhomogeneous input");
  const HodgePackage& pkg = ctx.package(x.bundle(), *q);
  return from_poly_coords(pkg.basis, apply_matrix(pkg.hodge.H, pkg.basis.coords(x)));
}

TensorForm green(const HodgeContext& ctx, const TensorForm& x) {
  if (x.is_zero()) return x;
  auto q = x.q();
  if (!q) throw std::invalid_argument("green: inhomogeneous input");
  const HodgePackage& pkg = ctx.package(x.bundle(), *q);
  return from_poly_coords(pkg.basis, apply_matrix(pkg.hodge.G, pkg.basis.coords(x)));
}

TensorForm delbar_star(const HodgeContext& ctx, const TensorForm& x) {
  if (x.is_zero()) return x;
  auto q = x.q();
  if (!q) throw std::invalid_argument("delbar_star: inhomogeneous input");
  if (*q == 0) return TensorForm(x.n(), x.bundle());
  const HodgePackage& pkg = ctx.package(x.bundle(), *q);
  return from_poly_coords(pkg.basis_down, apply_matrix(pkg.dstar_down, pkg.basis.coords(x)));
}

int cohomology_dim(const HodgeContext& ctx, const BundleSpec& bundle, int q) {
  return static_cast<int>(ctx.package(bundle, q).hodge.harmonics.size());
}

std::vector<TensorForm> harmonic_basis(const HodgeContext& ctx, const BundleSpec& bundle, int q) {
  const HodgePackage& pkg = ctx.package(bundle, q);
  std::vector<TensorForm> out;
  for (const auto& h : pkg.hodge.harmonics)
    out.push_back(pkg.basis.from_coords(ctx.model().params, h));
  return out;
}

std::vector<Poly> harmonic_components(const HodgeContext& ctx, const TensorForm& x) {
  if (x.is_zero()) return {};
  auto q = x.q();
  if (!q) throw std::invalid_argument("harmonic_components: inhomogeneous input");
  const HodgePackage& pkg = ctx.package(x.bundle(), *q);
  return apply_matrix(pkg.hodge.harmonic_pinv, pkg.basis.coords(x));
}

}  // namespace doldef
