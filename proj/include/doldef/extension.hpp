#ifndef DOLDEF_EXTENSION_HPP
#define DOLDEF_EXTENSION_HPP

#include "doldef/kuranishi.hpp"

namespace doldef {

/// Canonical deformation of one Dolbeault class, with its obstruction
/// polynomials against the harmonic (0,q+1)-basis.
struct DeformationReport {
  TensorForm sigma0;     // harmonic initial class actually deformed
  bool projected = false;  // input was not harmonic and got projected
  TensorForm sigma;      // full series, sigma(0) = sigma0
  int order = 0;
  int max_degree = 0;
  bool terminated = false;
  std::vector<TensorForm> obstruction_basis;  // harmonic alpha_q's
  std::vector<Poly> obstruction_polys;        // a_q(t) = <<phi|sigma>, alpha_q>
  bool unobstructed = false;      // all polynomials identically zero
  bool closed_identity = false;   // delbar_phi sigma == 0 as polynomial identity
  bool precertified = false;      // q = 0 fast path with H^1(X,E) = 0
  bool gauge_star_ok = false;     // delbar^* sigma(t) == 0
  bool gauge_harmonic_ok = false; // H sigma(t) == sigma0
  bool mc_certified = false;
  bool mc_asserted = false;
  std::string method = "generic";
};

DeformationReport canonical_deformation(const HodgeContext& ctx, const TensorForm& sigma0,
                                        const BeltramiSeries& beltrami, int order);

/// q = 0 specialization; pre-certifies unobstructedness when H^1(X,E) = 0.
DeformationReport holomorphic_section_deformation(const HodgeContext& ctx,
                                                  const TensorForm& sigma0,
                                                  const BeltramiSeries& beltrami, int order);

/// One evaluated point of a V_t analysis.
struct VtRow {
  std::vector<GaussRational> point;
  int dim_vt = 0;
  int dim_ker_ft = 0;
  int hq = 0;               // dim V_t - dim ker f_t
  bool mc_zero_at_point = false;
  bool closed_at_point = false;   // evaluated deformations certified closed
  bool reps_independent = false;  // evaluated representatives of V_t stay independent
};

struct VtAnalysis {
  BundleSpec bundle;
  int q = 0;
  std::vector<DeformationReport> reports;   // one per basis class
  std::vector<std::vector<Poly>> tmatrix;   // rows: harmonic directions; cols: classes
  std::vector<VtRow> rows;
  bool v_is_full = false;  // V equals the whole harmonic space
};

VtAnalysis vt_analysis(const HodgeContext& ctx, const std::vector<TensorForm>& v_basis,
                       const BundleSpec& bundle, int q, const BeltramiSeries& beltrami,
                       const std::vector<std::vector<GaussRational>>& points, int order);

/// Coefficientwise substitution t_i -> images[i] (new parameters); conjugate
/// variables substitute the conjugated images. Requires every image to vanish
/// at 0.
DeformationReport pullback_report(const DeformationReport& r, const std::vector<Poly>& images);
TensorForm pullback_series(const TensorForm& x, const std::vector<Poly>& images);

}  // namespace doldef

#endif
