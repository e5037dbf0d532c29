#ifndef DOLDEF_HODGE_HPP
#define DOLDEF_HODGE_HPP

#include <memory>
#include <mutex>

#include "doldef/calculus.hpp"

namespace doldef {

/// Exact Hodge operators for one pair of differentials D_{q-1}: V_{q-1}->V_q
/// and D_q: V_q -> V_{q+1} with the monomial basis orthonormal.
struct HodgeOps {
  Matrix box;                                        // D* D + D D* on V_q
  Matrix H;                                          // orthogonal projector onto ker box
  Matrix G;                                          // exact Green operator
  std::vector<std::vector<GaussRational>> harmonics;  // basis of ker box
  Matrix harmonic_pinv;                              // ambient -> harmonic coordinates

  static HodgeOps make(const Matrix& d_from, const Matrix& d_to);
};

/// All operator data for the invariant graded piece (bundle, q).
struct HodgePackage {
  TensorBasis basis_down, basis, basis_up;
  Matrix d_from;  // (q-1) -> q
  Matrix d_to;    // q -> q+1
  Matrix dstar_up;    // (q+1) -> q, adjoint of d_to
  Matrix dstar_down;  // q -> (q-1), adjoint of d_from
  HodgeOps hodge;
};

/// Memoized per-(bundle, q) operator assembly for one model; reads after
/// assembly are lock-free on the returned reference.
class HodgeContext {
 public:
  explicit HodgeContext(const ModelSpec& m) : model_(&m) {}

  const ModelSpec& model() const { return *model_; }
  const HodgePackage& package(const BundleSpec& bundle, int q) const;

 private:
  const ModelSpec* model_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<BundleSpec, int>, std::unique_ptr<HodgePackage>> cache_;
};

std::vector<Poly> apply_matrix(const Matrix& m, const std::vector<Poly>& v);

TensorForm harmonic_projection(const HodgeContext& ctx, const TensorForm& x);
/// Green operator; box G x = x - Hx and Gx is orthogonal to the harmonics.
TensorForm green(const HodgeContext& ctx, const TensorForm& x);
/// delbar^* : (bundle, q) -> (bundle, q-1).
TensorForm delbar_star(const HodgeContext& ctx, const TensorForm& x);

int cohomology_dim(const HodgeContext& ctx, const BundleSpec& bundle, int q);

/// Harmonic basis of the (bundle, q) piece as tensor forms.
std::vector<TensorForm> harmonic_basis(const HodgeContext& ctx, const BundleSpec& bundle, int q);

/// Coordinates of the harmonic projection of x in the harmonic basis.
std::vector<Poly> harmonic_components(const HodgeContext& ctx, const TensorForm& x);

}  // namespace doldef

#endif
