#ifndef DOLDEF_DEFORMED_HPP
#define DOLDEF_DEFORMED_HPP

#include "doldef/errors.hpp"
#include "doldef/extension.hpp"

namespace doldef {

/// Change of frame to F^i = (1 + i_phi) f^i, Fb^l = (1 + i_{conj phi}) fb^l
/// at a numeric point, with exact conversions between the two letter bases
/// and the differential expressed in the deformed frame. New letters reuse
/// the old index convention (j < n means (1,0)_t).
class DeformedFrame {
 public:
  DeformedFrame(const ModelSpec& m, const VectorForm& phi,
                const std::vector<GaussRational>& point);

  const ModelSpec& model() const { return *model_; }
  const Matrix& frame_matrix() const { return m_; }

  Form to_old(const Form& x_new) const;
  Form to_new(const Form& x_old) const;
  Form d_new(const Form& x_new) const;
  Form del_t(const Form& x_new) const;
  Form delbar_t(const Form& x_new) const;

  /// d of every new generator splits as (1,0)+(0,1)-shifts only.
  bool integrable() const;

  /// pr^{(1,0)_t} [W_x, W_y] in deformed-frame coordinates (first n entries);
  /// W are the frame vectors dual to the deformed coframe.
  std::vector<GaussRational> bracket_new(int x, int y) const;

  /// Old frame vector theta_a expanded in the deformed frame vectors.
  std::vector<GaussRational> old_vector_in_new(int a) const;

 private:
  const ModelSpec* model_;
  Matrix m_, minv_;
  std::vector<Form> old_images_;  // new letter -> old-frame 1-form
  std::vector<Form> new_images_;  // old letter -> new-frame 1-form
};

/// The delbar_phi complex of one bundle at a numeric integrable point.
struct DeformedComplex {
  BundleSpec bundle;
  std::vector<GaussRational> point;
  std::vector<int> dims;     // piece dimensions, q = 0..n
  std::vector<Matrix> dphi;  // dphi[q]: (q) -> (q+1)
  int cohomology_dim(int q) const;
};

DeformedComplex build_deformed_complex(const HodgeContext& ctx, const BundleSpec& bundle,
                                       const BeltramiSeries& beltrami,
                                       const std::vector<GaussRational>& point);

int deformed_cohomology_dim(const HodgeContext& ctx, const BundleSpec& bundle, int q,
                            const BeltramiSeries& beltrami,
                            const std::vector<GaussRational>& point);

struct DeformedHarmonics {
  std::vector<std::vector<GaussRational>> basis;  // coordinates in the (bundle, q) piece
  std::vector<bool> classically_harmonic;
  bool included_in_classical = false;
};

DeformedHarmonics deformed_harmonics(const HodgeContext& ctx, const BundleSpec& bundle, int q,
                                     const BeltramiSeries& beltrami,
                                     const std::vector<GaussRational>& point);

/// rho on E-valued (0,q)-forms in deformed-frame coordinates: a relabel on
/// the coefficient and WedgeOmega words, the (1,0)_t frame projection on
/// Tangent factors. Columns and rows are indexed by the same tensor basis,
/// read over old and new letters respectively.
Matrix rho_tensor_matrix(const DeformedFrame& frame, const BundleSpec& bundle,
                         const TensorBasis& basis);

struct RebigradeResult {
  int dim_via_delbar_phi = 0;
  int dim_via_rebigrading = 0;
  bool dims_equal = false;
  bool frame_integrable = false;
  bool dt_squares_to_zero = false;
  /// ker(delbar_t ∘ rho) == ker(delbar_phi) on the degree-0 piece.
  bool closedness_equivalence = false;
};

RebigradeResult rebigrade_crosscheck(const HodgeContext& ctx, const BundleSpec& bundle, int q,
                                     const BeltramiSeries& beltrami,
                                     const std::vector<GaussRational>& point);

}  // namespace doldef

#endif
