#ifndef DOLDEF_KURANISHI_HPP
#define DOLDEF_KURANISHI_HPP

#include "doldef/hodge.hpp"

namespace doldef {

/// Power-series Beltrami differential with its Maurer-Cartan certification
/// data. `phi` holds every computed homogeneous piece at once.
struct BeltramiSeries {
  VectorForm phi;
  int order = 0;           // requested truncation order
  int max_degree = 0;      // highest nonzero degree of phi
  bool terminated = false; // all later degrees provably vanish
  VectorForm residual;     // delbar phi - 1/2 [phi, phi]
  bool mc_certified = false;  // residual identically zero and series terminated
  bool mc_asserted = false;   // user-declared phi taken as-is
  std::vector<Poly> kuranishi_obstructions;  // components of H[phi,phi] in the
                                             // harmonic (0,2;T)-basis
};

/// Per-degree Maurer-Cartan residual of an arbitrary series, collected into
/// one T^{1,0}-valued (0,2)-form with graded polynomial coefficients.
VectorForm mc_residual_series(const ModelSpec& m, const VectorForm& phi, int order);

/// Solves phi = phi_1 + 1/2 delbar^* G [phi, phi] degreewise up to `order`.
/// phi_1 defaults to the declared Beltrami's linear part when the model has
/// one, else to sum t_nu eta_nu over the computed harmonic basis of
/// H^{0,1}(X, T^{1,0}). Obstructions are reported as data, never as errors.
BeltramiSeries solve_mc(const HodgeContext& ctx, int order,
                        const std::optional<VectorForm>& phi1 = std::nullopt);

/// Wraps a user-declared phi(t): residual and obstructions are computed, the
/// recursion is bypassed.
BeltramiSeries asserted_beltrami(const HodgeContext& ctx, const VectorForm& phi, int order);

}  // namespace doldef

#endif
