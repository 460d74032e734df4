#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcorr/errors.hpp"

namespace qcorr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class Subsystem { A, B };

inline const char* subsystem_name(Subsystem s) { return s == Subsystem::A ? "A" : "B"; }

struct StateTolerances {
  double herm = 1e-10;
  double trace = 1e-10;
  double psd = 1e-10;
};

struct Violation {
  std::string invariant;  // "hermiticity", "trace", "psd"
  double magnitude;
};

/// Checks hermiticity, unit trace and positivity of a candidate density
/// matrix. Empty result means valid. Non-square input throws.
std::vector<Violation> validate_state(const Matrix& m,
                                      const StateTolerances& tol = {});

/// (m + m^dagger)/2. Applied after numerically noisy constructions.
Matrix symmetrize(const Matrix& m);

/// Immutable density matrix. Construction validates; all operations
/// return fresh values.
class DensityMatrix {
public:
  explicit DensityMatrix(Matrix m, const StateTolerances& tol = {});

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

  /// Maximally mixed state I/d.
  static DensityMatrix maximally_mixed(int dim);
  /// Computational basis projector |i><i|.
  static DensityMatrix basis_projector(int dim, int i);

private:
  Matrix m_;
};

/// Unit vector |psi>.
class PureState {
public:
  explicit PureState(Vector amplitudes, double norm_tol = 1e-10);

  int dim() const { return static_cast<int>(v_.size()); }
  const Vector& amplitudes() const { return v_; }

private:
  Vector v_;
};

/// Rank-1 projector |v><v|.
DensityMatrix pure_to_density(const PureState& v);

/// Density matrix with declared tensor factorization dim_a x dim_b.
/// Composite index convention: i = i_A * dim_b + i_B (A is the slow index).
class BipartiteState {
public:
  BipartiteState(DensityMatrix state, int dim_a, int dim_b);

  const DensityMatrix& state() const { return state_; }
  const Matrix& matrix() const { return state_.matrix(); }
  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return state_.dim(); }

  int dim_of(Subsystem s) const { return s == Subsystem::A ? dim_a_ : dim_b_; }

private:
  DensityMatrix state_;
  int dim_a_;
  int dim_b_;
};

/// Kronecker product a (x) b as a bipartite state.
BipartiteState tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state of the kept subsystem.
DensityMatrix partial_trace(const BipartiteState& s, Subsystem keep);

/// Plain Kronecker product of matrices, same index convention as tensor().
Matrix kron(const Matrix& a, const Matrix& b);

/// Ginibre sample: G is dim x rank complex Gaussian, result G G^dagger
/// normalized to unit trace. Deterministic given seed.
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);
DensityMatrix random_density(int dim, int rank, std::mt19937_64& rng);

/// Haar-distributed unitary via QR of a Ginibre matrix.
Matrix random_unitary(int dim, std::mt19937_64& rng);

/// Random unit vector.
PureState random_pure(int dim, std::mt19937_64& rng);

/// (|00> + |11>)/sqrt(2) as a 2x2 bipartite state.
BipartiteState bell_state();

}  // namespace qcorr
