#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "qcorr/state.hpp"

namespace qcorr {

inline constexpr double kCptpTol = 1e-10;

/// CPTP map in Kraus form: rho -> sum_i K_i rho K_i^dagger.
/// Construction checks the completeness relation sum K_i^dagger K_i = I.
class KrausChannel {
public:
  KrausChannel(std::vector<Matrix> kraus_ops, double cptp_tol = kCptpTol);

  /// Skips the completeness check: for maps that are trace-preserving only
  /// on a subspace (support-restricted Petz maps).
  static KrausChannel unchecked(std::vector<Matrix> kraus_ops);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }

private:
  struct Unchecked {};
  KrausChannel(std::vector<Matrix> kraus_ops, Unchecked);

  std::vector<Matrix> kraus_;
  int dim_in_;
  int dim_out_;
};

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// Product channel Lambda_a (x) Lambda_b acting on a bipartite state.
struct LocalChannelPair {
  KrausChannel channel_a;
  KrausChannel channel_b;
};

BipartiteState apply_local(const LocalChannelPair& pair, const BipartiteState& s);

/// Choi state J = sum_ij Lambda(|i><j|) (x) |i><j| / d, trace 1, output
/// factor first. PSD iff the map is completely positive.
Matrix choi_matrix(const KrausChannel& ch);

/// Column-stacking superoperator: vec(Lambda rho) = M vec(rho),
/// M = sum_i conj(K_i) (x) K_i.
Matrix superoperator_matrix(const KrausChannel& ch);

/// Kraus decomposition from a (PSD, trace-1) Choi state with the same
/// layout as choi_matrix. Throws ValidationError when the Choi matrix has
/// an eigenvalue below -psd_tol, reporting the most negative one.
KrausChannel channel_from_choi(const Matrix& choi, int dim_in, int dim_out,
                               double psd_tol = 1e-10);

/// True iff the channel has a CPTP left inverse, tested by composing with
/// its Petz map taken against the maximally mixed reference. For equal
/// dimensions this singles out unitary conjugations.
bool is_reversible_cptp(const KrausChannel& ch, double tol = 1e-6);

struct CommutingWitness {
  Matrix rho;
  Matrix sigma;
  double commutator_norm;  // max-norm of [Lambda rho, Lambda sigma]
};

struct ProbeVerdict {
  bool preserves;  // statistical verdict only; see trials/tol
  int trials;
  double tol;
  std::optional<CommutingWitness> witness;
};

/// Samples commuting state pairs as spectral polynomials of a shared random
/// Hermitian and looks for an output pair that fails to commute.
ProbeVerdict preserves_commutativity_probe(const KrausChannel& ch, int trials,
                                           std::uint64_t seed, double tol = 1e-7);

// --- channel zoo ---------------------------------------------------------

KrausChannel identity_channel(int dim);
KrausChannel unitary_channel(const Matrix& u, double unitary_tol = 1e-10);

/// (1-p) rho + p I/d: p = 1 is full depolarization.
KrausChannel depolarizing(double p, int dim);

/// Erases off-diagonals in the given orthonormal basis (columns of `basis`);
/// Kraus set {|b_i><b_i|}.
KrausChannel completely_decohering(const Matrix& basis);

/// Eigenvalue-preserving ingredient of an isotropic channel: a unitary
/// conjugation or the transpose.
struct GammaUnitary { Matrix u; };
struct GammaTranspose {};
using IsotropicGamma = std::variant<GammaUnitary, GammaTranspose>;

/// p Gamma(rho) + (1-p) I/d. The transpose ingredient is admitted only when
/// the resulting Choi matrix is PSD (p <= 1/(d+1)); otherwise throws
/// ValidationError with the most negative Choi eigenvalue.
KrausChannel isotropic(double p, const IsotropicGamma& gamma, int dim);

/// Measures in `basis` and prepares `prepared[i]` on outcome i.
KrausChannel measure_and_prepare(const Matrix& basis,
                                 const std::vector<DensityMatrix>& prepared);

/// Random channel from a Haar-ish isometry with n_kraus Kraus operators.
KrausChannel random_channel(int dim, int n_kraus, std::mt19937_64& rng);

// --- classification ------------------------------------------------------

struct ChannelVerdict {
  bool cptp_valid;
  bool unital;
  int linear_rank;  // rank of the superoperator, in [0, d^2]
  bool reversible_cptp;
  ProbeVerdict commutativity;
};

ChannelVerdict classify(const KrausChannel& ch, int probe_trials, std::uint64_t seed);

}  // namespace qcorr
