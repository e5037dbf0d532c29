#ifndef DOLDEF_CALCULUS_HPP
#define DOLDEF_CALCULUS_HPP

#include "doldef/model.hpp"

namespace doldef {

/// Enables the runtime certification of the Frölicher–Nijenhuis bracket
/// against the derivation identity L_{[K,L]} = [L_K, L_L]; a mismatch throws.
void set_debug_checks(bool on);
bool debug_checks();

Form d_op(const ModelSpec& m, const Form& x);
/// Bidegree projections of d, taken per homogeneous term.
Form del(const ModelSpec& m, const Form& x);
Form delbar(const ModelSpec& m, const Form& x);

/// Dolbeault operator on vector / tensor-bundle valued forms; acts on the
/// (0,q)-coefficients only (holomorphic-frame model invariant).
VectorForm delbar(const ModelSpec& m, const VectorForm& x);
TensorForm delbar(const ModelSpec& m, const TensorForm& x);

/// L_K^{1,0} = [i_K, del] and L_K^{0,1} = [i_K, delbar] for a vector k-form K.
Form lie10(const ModelSpec& m, const VectorForm& k, const Form& x);
Form lie01(const ModelSpec& m, const VectorForm& k, const Form& x);
/// Full Lie derivative L_K = [i_K, d].
Form lie_full(const ModelSpec& m, const VectorForm& k, const Form& x);

/// Frölicher–Nijenhuis bracket of T^{1,0}-valued (0,k)- and (0,l)-forms via
/// the decomposable formula; other bidegree combinations are rejected.
VectorForm fn_bracket(const ModelSpec& m, const VectorForm& k, const VectorForm& l);

/// The DGLA-module pairing <phi | sigma>: L^{1,0} on the coefficient, Leibniz
/// with sign (-1)^q over the tensor factors (fn_bracket on Tangent factors,
/// L^{1,0} on WedgeOmega factors).
TensorForm pairing(const ModelSpec& m, const VectorForm& phi, const TensorForm& sigma);

/// delbar_phi = delbar - <phi(t)| applied to sigma.
TensorForm delbar_phi(const ModelSpec& m, const VectorForm& phi, const TensorForm& sigma);

}  // namespace doldef

#endif
