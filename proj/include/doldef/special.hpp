#ifndef DOLDEF_SPECIAL_HPP
#define DOLDEF_SPECIAL_HPP

#include "doldef/deformed.hpp"

namespace doldef {

/// Scalar-piece operator data used by the Kähler and Calabi-Yau recursions.
std::vector<Word> bidegree_words(int n, int p, int q);

/// The trivializing (n,0)-form f1^...^fn of a parallelizable model.
Form canonical_form(const ModelSpec& m);

/// T_u K = sum xi ∧ (X ⌟ u) mapping T^{1,0}-valued (0,q)-forms to
/// (n-1,q)-forms.
Form tu_map(const ModelSpec& m, const Form& u, const VectorForm& k);

/// T_u[phi,psi] - (-del i_psi i_phi u + i_phi del i_psi u + i_psi del i_phi u);
/// identically zero certifies the Tian-Todorov identity on the inputs.
Form tian_todorov_residual(const ModelSpec& m, const VectorForm& phi, const VectorForm& psi,
                           const Form& u);

/// Canonical deformation of a scalar (p,q)-class through the del-exact
/// recursion sigma_k = -sum del delbar* G i_{phi_j} sigma_i. Refuses when the
/// commutator identities the recursion relies on fail on the traversed
/// graded pieces.
DeformationReport kahler_deformation(const HodgeContext& ctx, const TensorForm& sigma0,
                                     const BeltramiSeries& beltrami, int order);

/// Canonical deformation of a vector (0,q)-class through the T_u-conjugated
/// recursion; refuses when the T_u-compatibility or commutator hypotheses
/// fail for the orthonormal metric.
DeformationReport cy_deformation(const HodgeContext& ctx, const TensorForm& sigma0,
                                 const BeltramiSeries& beltrami, const Form& u, int order);

}  // namespace doldef

#endif
