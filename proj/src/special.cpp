#include "doldef/special.hpp"

#include <map>

namespace doldef {

namespace {

void enum_subsets(int lo, int hi, int size, Word& cur, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (int g = lo; g <= hi - (size - static_cast<int>(cur.size())) + 1; ++g) {
    cur.push_back(static_cast<std::uint8_t>(g));
    enum_subsets(g + 1, hi, size, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> bidegree_words(int n, int p, int q) {
  std::vector<Word> fs, fbs, out;
  Word cur;
  if (p <= n) enum_subsets(0, n - 1, p, cur, fs);
  if (q <= n) enum_subsets(n, 2 * n - 1, q, cur, fbs);
  for (const auto& a : fs)
    for (const auto& b : fbs) {
      Word w(a);
      w.insert(w.end(), b.begin(), b.end());
      out.push_back(std::move(w));
    }
  return out;
}

Form canonical_form(const ModelSpec& m) {
  Word w;
  for (int i = 0; i < m.n; ++i) w.push_back(static_cast<std::uint8_t>(i));
  Form u(m.n);
  u.add(std::move(w), Poly::constant(m.params, GaussRational(1)));
  return u;
}

Form tu_map(const ModelSpec& m, const Form& u, const VectorForm& k) {
  if (!k.is_zero() && k.type() != VecType::T10)
    throw std::invalid_argument("tu_map: vector form must be T^{1,0}-valued");
  (void)m;
  return contract(k, u);
}

Form tian_todorov_residual(const ModelSpec& m, const VectorForm& phi, const VectorForm& psi,
                           const Form& u) {
  Form lhs = contract(fn_bracket(m, phi, psi), u);
  Form rhs = -del(m, contract(psi, contract(phi, u)));
  rhs += contract(phi, del(m, contract(psi, u)));
  rhs += contract(psi, del(m, contract(phi, u)));
  return lhs - rhs;
}

namespace {

/// Scalar (p,q) graded piece with exact operator matrices.
struct ScalarPiece {
  std::vector<Word> words;
  std::map<Word, int> index;
  int dim() const { return static_cast<int>(words.size()); }
};

ScalarPiece make_piece(int n, int p, int q) {
  ScalarPiece out;
  if (p >= 0 && q >= 0) out.words = bidegree_words(n, p, q);
  for (size_t i = 0; i < out.words.size(); ++i) out.index[out.words[i]] = static_cast<int>(i);
  return out;
}

std::vector<Poly> piece_coords(const ScalarPiece& piece, const Form& x) {
  std::vector<Poly> out(piece.dim());
  for (const auto& [w, c] : x.terms()) {
    auto it = piece.index.find(w);
    if (it == piece.index.end()) throw std::logic_error("scalar piece: term outside piece");
    out[it->second] = c;
  }
  return out;
}

Form piece_form(const ScalarPiece& piece, int n, const std::vector<Poly>& coords) {
  Form out(n);
  for (size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out.add(piece.words[i], coords[i]);
  return out;
}

template <typename Op>
Matrix op_matrix(const ModelSpec& m, const ScalarPiece& from, const ScalarPiece& to, Op&& op) {
  Matrix out(to.dim(), from.dim());
  for (int j = 0; j < from.dim(); ++j) {
    Form unit(m.n);
    unit.add(from.words[j], Poly::constant(m.params, GaussRational(1)));
    Form img = op(unit);
    for (const auto& [w, c] : img.terms()) {
      auto it = to.index.find(w);
      if (it == to.index.end()) throw std::logic_error("scalar op left the target piece");
      out.at(it->second, j) = c.constant_term();
    }
  }
  return out;
}

/// Operators around the scalar (p,q) piece needed by the special recursions.
struct ScalarOps {
  ScalarPiece here;
  Matrix delbar_to;      // (p,q) -> (p,q+1)
  Matrix dstar_from_up;  // (p,q+1) -> (p,q), adjoint of delbar_to
  HodgeOps hodge;        // on (p,q)

  static ScalarOps make(const ModelSpec& m, int p, int q) {
    ScalarOps ops;
    ops.here = make_piece(m.n, p, q);
    ScalarPiece up = make_piece(m.n, p, q + 1);
    ScalarPiece below = make_piece(m.n, p, q - 1);
    ops.delbar_to = op_matrix(m, ops.here, up, [&](const Form& x) { return delbar(m, x); });
    Matrix d_from = q > 0 ? op_matrix(m, below, ops.here, [&](const Form& x) { return delbar(m, x); })
                          : Matrix(ops.here.dim(), 0);
    ops.dstar_from_up = ops.delbar_to.conj_transpose();
    ops.hodge = HodgeOps::make(d_from, ops.delbar_to);
    return ops;
  }
};

bool in_image_poly(const Matrix& a, const std::vector<Poly>& v) {
  std::map<Mono, std::vector<GaussRational>> per_mono;
  for (size_t i = 0; i < v.size(); ++i)
    for (const auto& [mono, c] : v[i].terms()) {
      auto& vec = per_mono[mono];
      vec.resize(v.size());
      vec[i] = c;
    }
  int base_rank = a.rank();
  for (const auto& [mono, vec] : per_mono) {
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
      aug.at(i, a.cols()) = vec[i];
    }
    if (aug.rank() != base_rank) return false;
  }
  return true;
}

/// [del, delbar*] = del delbar* + delbar* del and [del, G] = del G - G del
/// must vanish out of the (p,q) piece.
void require_kahler_identities(const ModelSpec& m, int p, int q, const std::string& who) {
  ScalarPiece here = make_piece(m.n, p, q);
  ScalarPiece up_p = make_piece(m.n, p + 1, q);
  ScalarPiece down_q = make_piece(m.n, p, q - 1);
  ScalarPiece up_p_down_q = make_piece(m.n, p + 1, q - 1);

  auto del_op = [&](const Form& x) { return del(m, x); };
  auto delbar_op = [&](const Form& x) { return delbar(m, x); };

  // delbar* out of (p,q) is the adjoint of delbar into (p,q).
  Matrix dstar_here = q > 0 ? op_matrix(m, down_q, here, delbar_op).conj_transpose()
                            : Matrix(0, here.dim());
  Matrix dstar_upp = q > 0 ? op_matrix(m, up_p_down_q, up_p, delbar_op).conj_transpose()
                           : Matrix(0, up_p.dim());
  Matrix del_here = op_matrix(m, here, up_p, del_op);
  Matrix del_down = q > 0 ? op_matrix(m, down_q, up_p_down_q, del_op) : Matrix(0, 0);

  if (q > 0) {
    Matrix anti = dstar_upp * del_here + del_down * dstar_here;
    if (!anti.is_zero())
      throw ComputationRefused(who + ": [del, delbar*] != 0 on the (" + std::to_string(p) + "," +
                               std::to_string(q) + ") piece; model is not Kahler-like");
  }

  ScalarOps ops_here = ScalarOps::make(m, p, q);
  ScalarOps ops_upp = ScalarOps::make(m, p + 1, q);
  Matrix comm = ops_upp.hodge.G * del_here - del_here * ops_here.hodge.G;
  if (!comm.is_zero())
    throw ComputationRefused(who + ": [del, G] != 0 on the (" + std::to_string(p) + "," +
                             std::to_string(q) + ") piece; model is not Kahler-like");
}

void require_laplacian_agreement(const ModelSpec& m, int p, int q, const std::string& who) {
  ScalarOps ops = ScalarOps::make(m, p, q);
  ScalarPiece up_p = make_piece(m.n, p + 1, q);
  ScalarPiece down_p = make_piece(m.n, p - 1, q);
  auto del_op = [&](const Form& x) { return del(m, x); };
  Matrix del_to = op_matrix(m, ops.here, up_p, del_op);
  Matrix del_from = p > 0 ? op_matrix(m, down_p, ops.here, del_op) : Matrix(ops.here.dim(), 0);
  Matrix box_del = del_to.conj_transpose() * del_to + del_from * del_from.conj_transpose();
  if (!(box_del == ops.hodge.box))
    throw ComputationRefused(who + ": del- and delbar-Laplacians disagree on the (" +
                             std::to_string(p) + "," + std::to_string(q) +
                             ") piece; model is not Kahler-like");
}

}  // namespace

DeformationReport kahler_deformation(const HodgeContext& ctx, const TensorForm& sigma0_in,
                                     const BeltramiSeries& beltrami, int order) {
  const ModelSpec& m = ctx.model();
  const auto& factors = sigma0_in.bundle().factors;
  if (factors.size() > 1 ||
      (factors.size() == 1 && factors[0].kind != BundleSpec::Factor::WedgeOmega))
    throw std::invalid_argument("kahler_deformation: class must be a scalar (p,q)-form");
  int p = factors.empty() ? 0 : factors[0].p;
  auto qopt = sigma0_in.q();
  if (!qopt) throw std::invalid_argument("kahler_deformation: class must be homogeneous");
  int q = *qopt;

  require_kahler_identities(m, p - 1, q + 1, "kahler_deformation");
  require_laplacian_agreement(m, p, q, "kahler_deformation");

  TensorForm sigma0 = harmonic_projection(ctx, sigma0_in);
  Form sig0 = scalar_from_tensor(sigma0);
  if (!del(m, sig0).is_zero())
    throw ComputationRefused("kahler_deformation: harmonic class is not del-closed");

  ScalarOps mid = ScalarOps::make(m, p - 1, q + 1);  // receives i_phi sigma
  ScalarPiece down_piece = make_piece(m.n, p - 1, q);
  Matrix dstar_mid =
      op_matrix(m, down_piece, mid.here, [&](const Form& x) { return delbar(m, x); })
          .conj_transpose();

  ScalarOps here = ScalarOps::make(m, p, q);
  Matrix del_back = op_matrix(m, down_piece, here.here, [&](const Form& x) { return del(m, x); });

  const int phi_deg = std::max(beltrami.max_degree, 1);
  Form sigma = sig0;
  int max_deg = 0;
  for (int k = 1; k <= order; ++k) {
    Form y = contract(beltrami.phi, sigma).coefficient_degree_part(k);
    if (!y.is_zero()) {
      auto w = apply_matrix(dstar_mid, apply_matrix(mid.hodge.G, piece_coords(mid.here, y)));
      Form piece = -del(m, piece_form(down_piece, m.n, w));
      if (!piece.is_zero()) {
        // Per-degree certificates of the canonical shape.
        if (!in_image_poly(del_back, piece_coords(here.here, piece)))
          throw std::logic_error("kahler_deformation: sigma_k is not del-exact");
        if (!in_image_poly(here.dstar_from_up, piece_coords(here.here, piece)))
          throw std::logic_error("kahler_deformation: sigma_k is not delbar*-exact");
        sigma += piece;
        max_deg = k;
      }
    }
    if (beltrami.terminated && k >= max_deg + phi_deg) break;
  }

  // The del-exact route solves the same canonical equation, so it must agree
  // with the generic recursion degree by degree.
  DeformationReport rep = canonical_deformation(ctx, sigma0_in, beltrami, order);
  TensorForm sigma_tensor = tensor_from_scalar(sigma, p);
  if (!(sigma_tensor == rep.sigma))
    throw std::logic_error("kahler_deformation: disagrees with the generic canonical recursion");
  rep.method = "kahler";
  return rep;
}

DeformationReport cy_deformation(const HodgeContext& ctx, const TensorForm& sigma0_in,
                                 const BeltramiSeries& beltrami, const Form& u, int order) {
  const ModelSpec& m = ctx.model();
  if (!(sigma0_in.bundle() == BundleSpec::tangent()))
    throw std::invalid_argument("cy_deformation: class must be T^{1,0}-valued");
  auto qopt = sigma0_in.q();
  if (!qopt) throw std::invalid_argument("cy_deformation: class must be homogeneous");
  int q = *qopt;
  int n = m.n;

  DeformationReport rep = canonical_deformation(ctx, sigma0_in, beltrami, order);
  rep.method = "cy";
  if (q == n) {
    // A (0,n)-class deforms trivially: there is no (0,n+1) obstruction space.
    return rep;
  }

  if (!del(m, u).is_zero() || !delbar(m, u).is_zero())
    throw ComputationRefused("cy_deformation: u is not a holomorphic volume form");

  // T_u as a matrix from the (T, q) piece onto the (n-1, q) piece.
  const HodgePackage& pkg_q = ctx.package(BundleSpec::tangent(), q);
  ScalarOps scalar_q = ScalarOps::make(m, n - 1, q);
  auto tu_matrix = [&](const TensorBasis& basis, const ScalarPiece& target) {
    Matrix out(static_cast<int>(target.words.size()), basis.dim());
    for (int j = 0; j < basis.dim(); ++j) {
      TensorForm unit(m.n, BundleSpec::tangent());
      unit.add(basis.keys[j], Poly::constant(m.params, GaussRational(1)));
      Form img = tu_map(m, u, vector_from_tensor(unit));
      for (const auto& [w, c] : img.terms()) {
        auto it = target.index.find(w);
        if (it == target.index.end()) throw std::logic_error("T_u left the target piece");
        out.at(it->second, j) = c.constant_term();
      }
    }
    return out;
  };
  Matrix tu_q = tu_matrix(pkg_q.basis, scalar_q.here);
  if (tu_q.rank() != tu_q.cols() || tu_q.rows() != tu_q.cols())
    throw ComputationRefused("cy_deformation: T_u is not an isomorphism on the (0,q;T) piece");

  // Metric compatibility for the orthonormal metric: T_u must intertwine the
  // Laplacians and preserve Im delbar*.
  if (!(tu_q * pkg_q.hodge.box == scalar_q.hodge.box * tu_q))
    throw ComputationRefused("cy_deformation: T_u does not commute with the Laplacian");
  {
    Matrix img_tensor = tu_q * pkg_q.dstar_up;  // T_u Im(delbar*) on the tensor side
    const Matrix& img_scalar = scalar_q.dstar_from_up;
    if (!subspace_contains(img_scalar, img_tensor) ||
        Matrix(img_tensor).rank() != img_scalar.rank())
      throw ComputationRefused("cy_deformation: T_u does not preserve Im(delbar*)");
  }

  require_kahler_identities(m, n - 2, q + 1, "cy_deformation");

  ScalarOps mid = ScalarOps::make(m, n - 2, q + 1);
  ScalarPiece down_piece = make_piece(m.n, n - 2, q);
  Matrix dstar_mid =
      op_matrix(m, down_piece, mid.here, [&](const Form& x) { return delbar(m, x); })
          .conj_transpose();
  Matrix del_back =
      op_matrix(m, down_piece, scalar_q.here, [&](const Form& x) { return del(m, x); });

  const int phi_deg = std::max(beltrami.max_degree, 1);
  VectorForm sigma = vector_from_tensor(rep.sigma0);
  Form iu_phi = contract(beltrami.phi, u);
  int max_deg = 0;
  for (int k = 1; k <= order; ++k) {
    Form z = contract(sigma, iu_phi).coefficient_degree_part(k);
    Form tu_piece(m.n);
    if (!z.is_zero()) {
      auto w = apply_matrix(dstar_mid, apply_matrix(mid.hodge.G, piece_coords(mid.here, z)));
      tu_piece = -del(m, piece_form(down_piece, m.n, w));
    }
    if (!tu_piece.is_zero()) {
      if (!in_image_poly(del_back, piece_coords(scalar_q.here, tu_piece)))
        throw std::logic_error("cy_deformation: T_u sigma_k is not del-exact");
      if (!in_image_poly(scalar_q.dstar_from_up, piece_coords(scalar_q.here, tu_piece)))
        throw std::logic_error("cy_deformation: T_u sigma_k is not delbar*-exact");
      // sigma_k = T_u^{-1} of the piece, one exact solve per monomial.
      std::vector<Poly> coords = piece_coords(scalar_q.here, tu_piece);
      std::map<Mono, std::vector<GaussRational>> per_mono;
      for (size_t i = 0; i < coords.size(); ++i)
        for (const auto& [mono, c] : coords[i].terms()) {
          auto& vec = per_mono[mono];
          vec.resize(coords.size());
          vec[i] = c;
        }
      VectorForm piece(m.n, VecType::T10);
      for (const auto& [mono, vec] : per_mono) {
        auto sol = tu_q.solve(vec);
        Poly mono_poly(m.params);
        mono_poly.add_term(mono, GaussRational(1));
        for (size_t i = 0; i < sol.size(); ++i) {
          if (sol[i].is_zero()) continue;
          const TensorKey& key = pkg_q.basis.keys[i];
          piece.add(key.qword, key.factors[0][0], mono_poly.scaled(sol[i]));
        }
      }
      sigma += piece;
      max_deg = k;
    }
    if (beltrami.terminated && k >= max_deg + phi_deg) break;
  }

  if (!(tensor_from_vector(sigma) == rep.sigma))
    throw std::logic_error("cy_deformation: disagrees with the generic canonical recursion");
  return rep;
}

}  // namespace doldef
