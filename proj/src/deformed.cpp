#include "doldef/deformed.hpp"

namespace doldef {

DeformedFrame::DeformedFrame(const ModelSpec& m, const VectorForm& phi,
                             const std::vector<GaussRational>& point)
    : model_(&m) {
  m_ = rho_degree_one_matrix(phi, point);
  try {
    minv_ = m_.inverse();
  } catch (const std::domain_error&) {
    throw ComputationRefused("deformed frame is singular at this point");
  }
  int g = 2 * m.n;
  for (int j = 0; j < g; ++j) {
    Form img(m.n);
    for (int h = 0; h < g; ++h)
      img.add(Word{static_cast<std::uint8_t>(h)}, Poly::constant(m.params, m_.at(h, j)));
    old_images_.push_back(std::move(img));
  }
  for (int h = 0; h < g; ++h) {
    Form img(m.n);
    for (int j = 0; j < g; ++j)
      img.add(Word{static_cast<std::uint8_t>(j)}, Poly::constant(m.params, minv_.at(j, h)));
    new_images_.push_back(std::move(img));
  }
}

Form DeformedFrame::to_old(const Form& x_new) const { return substitute_letters(x_new, old_images_); }
Form DeformedFrame::to_new(const Form& x_old) const { return substitute_letters(x_old, new_images_); }

Form DeformedFrame::d_new(const Form& x_new) const {
  return to_new(model_->apply_d(to_old(x_new)));
}

Form DeformedFrame::del_t(const Form& x_new) const {
  Form out(model_->n);
  for (const auto& [w, c] : x_new.terms()) {
    Form t(model_->n);
    t.add(w, c);
    auto [p, q] = word_bidegree(w, model_->n);
    out += d_new(t).component(p + 1, q);
  }
  return out;
}

Form DeformedFrame::delbar_t(const Form& x_new) const {
  Form out(model_->n);
  for (const auto& [w, c] : x_new.terms()) {
    Form t(model_->n);
    t.add(w, c);
    auto [p, q] = word_bidegree(w, model_->n);
    out += d_new(t).component(p, q + 1);
  }
  return out;
}

bool DeformedFrame::integrable() const {
  int n = model_->n;
  for (int j = 0; j < 2 * n; ++j) {
    Form gen(n);
    gen.add(Word{static_cast<std::uint8_t>(j)}, Poly::constant(model_->params, GaussRational(1)));
    Form d = d_new(gen);
    if (j < n && !d.component(0, 2).is_zero()) return false;
    if (j >= n && !d.component(2, 0).is_zero()) return false;
  }
  return true;
}

std::vector<GaussRational> DeformedFrame::bracket_new(int x, int y) const {
  int g = 2 * model_->n;
  const BracketTable& lie = model_->brackets();
  std::vector<GaussRational> old_coords(g);
  for (int h = 0; h < g; ++h) {
    if (minv_.at(x, h).is_zero()) continue;
    for (int k = 0; k < g; ++k) {
      if (minv_.at(y, k).is_zero()) continue;
      const auto& br = lie.bracket(h, k);
      GaussRational f = minv_.at(x, h) * minv_.at(y, k);
      for (int z = 0; z < g; ++z)
        if (!br[z].is_zero()) old_coords[z] += f * br[z];
    }
  }
  // old_h = sum_j M[h][j] W_j, then keep the (1,0)_t part.
  std::vector<GaussRational> out(g);
  for (int h = 0; h < g; ++h) {
    if (old_coords[h].is_zero()) continue;
    for (int j = 0; j < model_->n; ++j) out[j] += m_.at(h, j) * old_coords[h];
  }
  out.resize(g);
  return out;
}

std::vector<GaussRational> DeformedFrame::old_vector_in_new(int a) const {
  int g = 2 * model_->n;
  std::vector<GaussRational> out(g);
  for (int j = 0; j < g; ++j) out[j] = m_.at(a, j);
  return out;
}

int DeformedComplex::cohomology_dim(int q) const {
  int nullity = dims[q] - dphi[q].rank();
  int boundaries = (q > 0) ? dphi[q - 1].rank() : 0;
  return nullity - boundaries;
}

namespace {

void require_integrable_point(const BeltramiSeries& beltrami,
                              const std::vector<GaussRational>& point) {
  if (!beltrami.terminated && !beltrami.mc_certified)
    throw ComputationRefused(
        "Beltrami series is a truncated formal series; the Maurer-Cartan residual cannot be "
        "certified at a point");
  if (!beltrami.residual.evaluated(point).is_zero())
    throw ComputationRefused("Maurer-Cartan residual is nonzero at the requested point");
}

}  // namespace

DeformedComplex build_deformed_complex(const HodgeContext& ctx, const BundleSpec& bundle,
                                       const BeltramiSeries& beltrami,
                                       const std::vector<GaussRational>& point) {
  require_integrable_point(beltrami, point);
  const ModelSpec& m = ctx.model();
  DeformedComplex out;
  out.bundle = bundle;
  out.point = point;
  VectorForm phi_at = beltrami.phi.evaluated(point);

  std::vector<TensorBasis> bases;
  for (int q = 0; q <= m.n + 1; ++q) bases.push_back(TensorBasis::enumerate(m.n, bundle, q));
  for (int q = 0; q <= m.n; ++q) {
    out.dims.push_back(bases[q].dim());
    Matrix d(bases[q + 1].dim(), bases[q].dim());
    for (int j = 0; j < bases[q].dim(); ++j) {
      TensorForm unit(m.n, bundle);
      unit.add(bases[q].keys[j], Poly::constant(m.params, GaussRational(1)));
      TensorForm img = delbar_phi(m, phi_at, unit);
      auto coords = bases[q + 1].coords_at(img, point);
      for (int i = 0; i < bases[q + 1].dim(); ++i) d.at(i, j) = coords[i];
    }
    out.dphi.push_back(std::move(d));
  }
  // Exactness of the complex at an integrable point.
  for (int q = 0; q + 1 <= m.n; ++q)
    if (!(out.dphi[q + 1] * out.dphi[q]).is_zero())
      throw ComputationRefused("delbar_phi does not square to zero at the requested point");
  return out;
}

int deformed_cohomology_dim(const HodgeContext& ctx, const BundleSpec& bundle, int q,
                            const BeltramiSeries& beltrami,
                            const std::vector<GaussRational>& point) {
  return build_deformed_complex(ctx, bundle, beltrami, point).cohomology_dim(q);
}

DeformedHarmonics deformed_harmonics(const HodgeContext& ctx, const BundleSpec& bundle, int q,
                                     const BeltramiSeries& beltrami,
                                     const std::vector<GaussRational>& point) {
  DeformedComplex c = build_deformed_complex(ctx, bundle, beltrami, point);
  Matrix d_from = (q > 0) ? c.dphi[q - 1] : Matrix(c.dims[q], 0);
  HodgeOps ops = HodgeOps::make(d_from, c.dphi[q]);
  DeformedHarmonics out;
  out.basis = ops.harmonics;
  const HodgePackage& pkg = ctx.package(bundle, q);
  out.included_in_classical = true;
  for (const auto& h : out.basis) {
    auto img = pkg.hodge.box.apply(h);
    bool harm = true;
    for (const auto& v : img) harm = harm && v.is_zero();
    out.classically_harmonic.push_back(harm);
    out.included_in_classical = out.included_in_classical && harm;
  }
  return out;
}

namespace {

/// Matrices of delbar_t on the E_t-valued (0,q)_t pieces, built from the
/// deformed frame via the smooth-frame Leibniz rule.
struct RebigradedComplex {
  std::vector<TensorBasis> bases;
  std::vector<Matrix> dt;  // (q) -> (q+1)
};

TensorForm delbar_t_tensor(const DeformedFrame& frame, const BundleSpec& bundle,
                           const TensorKey& key, const Poly& c) {
  const ModelSpec& m = frame.model();
  int n = m.n;
  TensorForm out(n, bundle);
  int q = static_cast<int>(key.qword.size());
  bool flip = (q % 2) != 0;

  // Coefficient part.
  Form jform(n);
  jform.add(key.qword, c);
  Form dj = frame.delbar_t(jform);
  for (const auto& [w, cw] : dj.terms()) {
    TensorKey nk = key;
    nk.qword = w;
    out.add(std::move(nk), cw);
  }

  for (size_t i = 0; i < bundle.factors.size(); ++i) {
    if (bundle.factors[i].kind == BundleSpec::Factor::Tangent) {
      int a = key.factors[i][0];
      for (int lam = 0; lam < n; ++lam) {
        std::vector<GaussRational> br = frame.bracket_new(n + lam, a);
        for (int b = 0; b < n; ++b) {
          if (br[b].is_zero()) continue;
          Word nq(key.qword);
          nq.push_back(static_cast<std::uint8_t>(n + lam));
          TensorKey nk = key;
          nk.qword = std::move(nq);
          nk.factors[i] = Word{static_cast<std::uint8_t>(b)};
          Poly coeff = c.scaled(br[b]);
          out.add(std::move(nk), flip ? -coeff : coeff);
        }
      }
    } else {
      int p = bundle.factors[i].p;
      Form fform(n);
      fform.add(key.factors[i], Poly::constant(c.params(), GaussRational(1)));
      Form df = frame.delbar_t(fform);  // (p,1)_t component
      bool split_flip = (p % 2) != 0;   // moving the single fb letter left
      for (const auto& [w, cw] : df.terms()) {
        Word fpart, fbpart;
        for (auto g : w) (g < n ? fpart : fbpart).push_back(g);
        if (static_cast<int>(fpart.size()) != p || fbpart.size() != 1)
          throw std::logic_error("delbar_t: factor image has unexpected bidegree");
        Word nq(key.qword);
        nq.insert(nq.end(), fbpart.begin(), fbpart.end());
        TensorKey nk = key;
        nk.qword = std::move(nq);
        nk.factors[i] = fpart;
        Poly coeff = c * cw;
        bool neg = flip != split_flip;
        out.add(std::move(nk), neg ? -coeff : coeff);
      }
    }
  }
  return out;
}

RebigradedComplex build_rebigraded(const DeformedFrame& frame, const BundleSpec& bundle,
                                   const std::vector<GaussRational>& point) {
  const ModelSpec& m = frame.model();
  RebigradedComplex out;
  for (int q = 0; q <= m.n + 1; ++q) out.bases.push_back(TensorBasis::enumerate(m.n, bundle, q));
  for (int q = 0; q <= m.n; ++q) {
    Matrix d(out.bases[q + 1].dim(), out.bases[q].dim());
    for (int j = 0; j < out.bases[q].dim(); ++j) {
      TensorForm img = delbar_t_tensor(frame, bundle, out.bases[q].keys[j],
                                       Poly::constant(m.params, GaussRational(1)));
      auto coords = out.bases[q + 1].coords_at(img, point);
      for (int i = 0; i < out.bases[q + 1].dim(); ++i) d.at(i, j) = coords[i];
    }
    out.dt.push_back(std::move(d));
  }
  return out;
}

}  // namespace

Matrix rho_tensor_matrix(const DeformedFrame& frame, const BundleSpec& bundle,
                         const TensorBasis& basis) {
  const ModelSpec& m = frame.model();
  Matrix out(basis.dim(), basis.dim());
  for (int j = 0; j < basis.dim(); ++j) {
    TensorForm img(m.n, bundle);
    std::vector<std::pair<TensorKey, GaussRational>> acc{{basis.keys[j], GaussRational(1)}};
    for (size_t i = 0; i < bundle.factors.size(); ++i) {
      if (bundle.factors[i].kind != BundleSpec::Factor::Tangent) continue;
      std::vector<std::pair<TensorKey, GaussRational>> next;
      for (const auto& [key, c] : acc) {
        int a = key.factors[i][0];
        std::vector<GaussRational> w = frame.old_vector_in_new(a);
        for (int b = 0; b < m.n; ++b) {
          if (w[b].is_zero()) continue;
          TensorKey nk = key;
          nk.factors[i] = Word{static_cast<std::uint8_t>(b)};
          next.emplace_back(std::move(nk), c * w[b]);
        }
      }
      acc = std::move(next);
    }
    for (const auto& [key, c] : acc) {
      auto it = basis.index.find(key);
      if (it == basis.index.end()) throw std::logic_error("rho_tensor_matrix: key escaped basis");
      out.at(it->second, j) += c;
    }
  }
  return out;
}

RebigradeResult rebigrade_crosscheck(const HodgeContext& ctx, const BundleSpec& bundle, int q,
                                     const BeltramiSeries& beltrami,
                                     const std::vector<GaussRational>& point) {
  const ModelSpec& m = ctx.model();
  DeformedComplex phi_side = build_deformed_complex(ctx, bundle, beltrami, point);
  VectorForm phi_at = beltrami.phi.evaluated(point);
  DeformedFrame frame(m, phi_at, point);

  RebigradeResult res;
  res.frame_integrable = frame.integrable();
  res.dim_via_delbar_phi = phi_side.cohomology_dim(q);

  RebigradedComplex tside = build_rebigraded(frame, bundle, point);
  res.dt_squares_to_zero = true;
  for (int k = 0; k + 1 <= m.n; ++k)
    if (!(tside.dt[k + 1] * tside.dt[k]).is_zero()) res.dt_squares_to_zero = false;
  int nullity = tside.bases[q].dim() - tside.dt[q].rank();
  int bound = (q > 0) ? tside.dt[q - 1].rank() : 0;
  res.dim_via_rebigrading = nullity - bound;
  res.dims_equal = res.dim_via_delbar_phi == res.dim_via_rebigrading;

  // Pointwise extension equation on degree 0: delbar_t(rho sigma) = 0 iff
  // delbar_phi sigma = 0, checked as equality of kernels.
  Matrix rho0 = rho_tensor_matrix(frame, bundle, tside.bases[0]);
  Matrix a = tside.dt[0] * rho0;
  const Matrix& b = phi_side.dphi[0];
  int ra = a.rank();
  int rb = b.rank();
  res.closedness_equivalence = (ra == rb) && (a.stacked(b).rank() == ra);
  return res;
}

}  // namespace doldef
