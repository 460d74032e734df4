#pragma once

#include "qcorr/state.hpp"

namespace qcorr {

/// Eigenvalues below this are treated as exact zeros: excluded from
/// logarithms and counted as kernel for the support check.
inline constexpr double kEigCutoff = 1e-12;

/// Support leakage threshold: S(rho||sigma) is declared infinite when
/// tr(P_ker(sigma) rho) exceeds this.
inline constexpr double kSupportTol = 1e-10;

/// S(rho) = -tr(rho log2 rho), in bits. Result clamped into [0, log2 d].
double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho||sigma) = -S(rho) - tr(rho log2 sigma), in bits; +infinity when
/// support(rho) leaks outside support(sigma).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// I(rho_AB) = S(rho_A) + S(rho_B) - S(rho_AB). Also evaluated as
/// S(rho_AB || rho_A x rho_B); the two routes must agree within xcheck_tol.
double mutual_information(const BipartiteState& s, double xcheck_tol = 1e-9);

}  // namespace qcorr
