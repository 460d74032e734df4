#pragma once

// Test-only oracles, kept independent of the library's optimizer and of the
// operations they are used to check.

#include <Eigen/Dense>
#include <complex>

#include "qcorr/state.hpp"

namespace qcorr::oracles {

/// Element-wise Kronecker product by direct index summation.
Matrix kron_indexwise(const Matrix& a, const Matrix& b);

/// Partial trace by direct double-sum over the discarded index.
Matrix partial_trace_indexwise(const Matrix& m, int da, int db, Subsystem keep);

/// Shannon-style entropy of a probability vector, bits.
double entropy_of_probs(const Eigen::VectorXd& p);

/// Holevo value of measuring side A of a 2 x db state with the Bloch-angle
/// projective measurement (theta, phi), computed from raw projector algebra.
double qubit_holevo(const Matrix& rho, int db, double theta, double phi,
                    Subsystem side);

/// Exhaustive 1-degree grid over Bloch angles plus one 0.05-degree
/// refinement pass. Independent route to the classical correlation for a
/// qubit measured side.
double grid_classical_correlation(const Matrix& rho, int d_other, Subsystem side);

struct BellDiagonalValues {
  double mutual_info;
  double classical_corr;
  double discord;
};

/// Closed-form I, C, D for a two-qubit Bell-diagonal state, from its
/// correlation-vector components and eigenvalues.
BellDiagonalValues bell_diagonal_discord(const Matrix& rho);

}  // namespace qcorr::oracles
