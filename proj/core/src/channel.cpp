#include "qcorr/channel.hpp"

#include <cmath>

#include "qcorr/recovery.hpp"

namespace qcorr {

KrausChannel::KrausChannel(std::vector<Matrix> kraus_ops, double cptp_tol)
    : kraus_(std::move(kraus_ops)) {
  if (kraus_.empty()) throw StructuralError("channel needs at least one Kraus operator");
  dim_out_ = static_cast<int>(kraus_.front().rows());
  dim_in_ = static_cast<int>(kraus_.front().cols());
  for (const auto& k : kraus_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_) {
      throw StructuralError("Kraus operators have inconsistent shapes");
    }
  }
  Matrix sum = Matrix::Zero(dim_in_, dim_in_);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  const double dev = (sum - Matrix::Identity(dim_in_, dim_in_)).cwiseAbs().maxCoeff();
  if (dev > cptp_tol) {
    throw ValidationError("channel is not trace-preserving: ||sum K^dag K - I||_max = " +
                          std::to_string(dev));
  }
}

KrausChannel::KrausChannel(std::vector<Matrix> kraus_ops, Unchecked)
    : kraus_(std::move(kraus_ops)) {
  if (kraus_.empty()) throw StructuralError("channel needs at least one Kraus operator");
  dim_out_ = static_cast<int>(kraus_.front().rows());
  dim_in_ = static_cast<int>(kraus_.front().cols());
  for (const auto& k : kraus_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_) {
      throw StructuralError("Kraus operators have inconsistent shapes");
    }
  }
}

KrausChannel KrausChannel::unchecked(std::vector<Matrix> kraus_ops) {
  return KrausChannel(std::move(kraus_ops), Unchecked{});
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.dim_in()) {
    throw StructuralError("apply: state dim " + std::to_string(rho.dim()) +
                          " != channel input dim " + std::to_string(ch.dim_in()));
  }
  Matrix out = Matrix::Zero(ch.dim_out(), ch.dim_out());
  for (const auto& k : ch.kraus()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix(symmetrize(out));
}

BipartiteState apply_local(const LocalChannelPair& pair, const BipartiteState& s) {
  if (pair.channel_a.dim_in() != s.dim_a() || pair.channel_b.dim_in() != s.dim_b()) {
    throw StructuralError("apply_local: channel/state dimension mismatch");
  }
  // Product Kraus set {A_i (x) B_j}.
  Matrix out = Matrix::Zero(s.dim(), s.dim());
  for (const auto& a : pair.channel_a.kraus()) {
    for (const auto& b : pair.channel_b.kraus()) {
      const Matrix k = kron(a, b);
      out += k * s.matrix() * k.adjoint();
    }
  }
  return BipartiteState(DensityMatrix(symmetrize(out)), pair.channel_a.dim_out(),
                        pair.channel_b.dim_out());
}

Matrix choi_matrix(const KrausChannel& ch) {
  const int din = ch.dim_in();
  const int dout = ch.dim_out();
  Matrix choi = Matrix::Zero(dout * din, dout * din);
  // J = sum_k w_k w_k^dag / d_in with w_k the row-major flattening of K_k.
  for (const auto& k : ch.kraus()) {
    Vector w(dout * din);
    for (int a = 0; a < dout; ++a)
      for (int i = 0; i < din; ++i) w(a * din + i) = k(a, i);
    choi += w * w.adjoint();
  }
  return choi / static_cast<double>(din);
}

Matrix superoperator_matrix(const KrausChannel& ch) {
  const int din = ch.dim_in();
  const int dout = ch.dim_out();
  Matrix m = Matrix::Zero(dout * dout, din * din);
  for (const auto& k : ch.kraus()) m += kron(k.conjugate(), k);
  return m;
}

KrausChannel channel_from_choi(const Matrix& choi, int dim_in, int dim_out,
                               double psd_tol) {
  if (choi.rows() != dim_in * dim_out || choi.cols() != dim_in * dim_out) {
    throw StructuralError("channel_from_choi: Choi matrix has wrong size");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrize(choi));
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -psd_tol) {
    throw ValidationError("map is not completely positive: most negative Choi eigenvalue " +
                          std::to_string(min_eig));
  }
  std::vector<Matrix> kraus;
  for (int n = 0; n < es.eigenvalues().size(); ++n) {
    const double lam = es.eigenvalues()(n);
    if (lam <= 1e-12) continue;
    const double scale = std::sqrt(lam * dim_in);
    Matrix k(dim_out, dim_in);
    for (int a = 0; a < dim_out; ++a)
      for (int i = 0; i < dim_in; ++i) k(a, i) = scale * es.eigenvectors()(a * dim_in + i, n);
    kraus.push_back(std::move(k));
  }
  return KrausChannel(std::move(kraus));
}

bool is_reversible_cptp(const KrausChannel& ch, double tol) {
  if (ch.dim_in() != ch.dim_out()) {
    throw StructuralError("is_reversible_cptp: requires equal input/output dimensions");
  }
  const int d = ch.dim_in();
  const KrausChannel petz = petz_map(ch, DensityMatrix::maximally_mixed(d));
  const Matrix composed = superoperator_matrix(petz) * superoperator_matrix(ch);
  const double dev = (composed - Matrix::Identity(d * d, d * d)).cwiseAbs().maxCoeff();
  return dev <= tol;
}

ProbeVerdict preserves_commutativity_probe(const KrausChannel& ch, int trials,
                                           std::uint64_t seed, double tol) {
  if (trials < 1) throw StructuralError("preserves_commutativity_probe: trials must be >= 1");
  const int d = ch.dim_in();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  for (int t = 0; t < trials; ++t) {
    // Shared random Hermitian; commuting pair as spectral polynomials of it.
    Matrix h(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) h(i, j) = Complex(gauss(rng), gauss(rng));
    h = symmetrize(h);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);

    auto spectral_state = [&](const std::vector<double>& coeffs) {
      Eigen::VectorXd vals(d);
      for (int i = 0; i < d; ++i) {
        double x = es.eigenvalues()(i), p = 0.0, xn = 1.0;
        for (double c : coeffs) {
          p += c * xn;
          xn *= x;
        }
        vals(i) = p;
      }
      vals.array() -= vals.minCoeff() - 0.1;  // strictly positive
      vals /= vals.sum();
      return Matrix(es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint());
    };

    std::vector<double> cf(d), cg(d);
    for (int i = 0; i < d; ++i) cf[i] = gauss(rng);
    for (int i = 0; i < d; ++i) cg[i] = gauss(rng);

    const Matrix rho = spectral_state(cf);
    const Matrix sig = spectral_state(cg);
    const Matrix out_r = apply(ch, DensityMatrix(symmetrize(rho))).matrix();
    const Matrix out_s = apply(ch, DensityMatrix(symmetrize(sig))).matrix();
    const double comm = (out_r * out_s - out_s * out_r).cwiseAbs().maxCoeff();
    if (comm > tol) {
      return ProbeVerdict{false, t + 1, tol, CommutingWitness{rho, sig, comm}};
    }
  }
  return ProbeVerdict{true, trials, tol, std::nullopt};
}

// --- zoo ------------------------------------------------------------------

KrausChannel identity_channel(int dim) {
  return KrausChannel({Matrix::Identity(dim, dim)});
}

KrausChannel unitary_channel(const Matrix& u, double unitary_tol) {
  const double dev =
      (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (dev > unitary_tol) {
    throw ValidationError("unitary_channel: matrix not unitary, ||U^dag U - I||_max = " +
                          std::to_string(dev));
  }
  return KrausChannel({u});
}

namespace {

// Kraus set of the full-depolarization map rho -> tr(rho) I/d, scaled by
// sqrt(weight): {sqrt(weight/d) |i><j|}.
void append_depolarizing_kraus(std::vector<Matrix>& kraus, double weight, int d) {
  if (weight <= 0.0) return;
  const double s = std::sqrt(weight / d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Matrix k = Matrix::Zero(d, d);
      k(i, j) = s;
      kraus.push_back(std::move(k));
    }
  }
}

void check_probability(double p) {
  if (p < 0.0 || p > 1.0) {
    throw StructuralError("probability parameter out of [0,1]: " + std::to_string(p));
  }
}

void check_orthonormal_columns(const Matrix& basis) {
  const double dev = (basis.adjoint() * basis -
                      Matrix::Identity(basis.cols(), basis.cols()))
                         .cwiseAbs()
                         .maxCoeff();
  if (dev > 1e-10) {
    throw ValidationError("basis columns are not orthonormal, deviation " +
                          std::to_string(dev));
  }
}

}  // namespace

KrausChannel depolarizing(double p, int dim) {
  check_probability(p);
  std::vector<Matrix> kraus;
  if (p < 1.0) kraus.push_back(std::sqrt(1.0 - p) * Matrix::Identity(dim, dim));
  append_depolarizing_kraus(kraus, p, dim);
  return KrausChannel(std::move(kraus));
}

KrausChannel completely_decohering(const Matrix& basis) {
  if (basis.rows() != basis.cols()) throw StructuralError("decohering basis must be square");
  check_orthonormal_columns(basis);
  std::vector<Matrix> kraus;
  for (Eigen::Index i = 0; i < basis.cols(); ++i) {
    kraus.push_back(basis.col(i) * basis.col(i).adjoint());
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel isotropic(double p, const IsotropicGamma& gamma, int dim) {
  check_probability(p);
  if (std::holds_alternative<GammaUnitary>(gamma)) {
    const Matrix& u = std::get<GammaUnitary>(gamma).u;
    if (u.rows() != dim) throw StructuralError("isotropic: unitary dimension mismatch");
    std::vector<Matrix> kraus;
    if (p > 0.0) {
      const double dev =
          (u.adjoint() * u - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
      if (dev > 1e-10) throw ValidationError("isotropic: Gamma unitary is not unitary");
      kraus.push_back(std::sqrt(p) * u);
    }
    append_depolarizing_kraus(kraus, 1.0 - p, dim);
    return KrausChannel(std::move(kraus));
  }

  // Transpose ingredient: no Kraus form of its own; admissible only when the
  // mixed map's Choi matrix stays PSD (p <= 1/(d+1)).
  const int d2 = dim * dim;
  Matrix choi = Matrix::Identity(d2, d2) * ((1.0 - p) / d2);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) choi(j * dim + i, i * dim + j) += p / dim;
  return channel_from_choi(choi, dim, dim);
}

KrausChannel measure_and_prepare(const Matrix& basis,
                                 const std::vector<DensityMatrix>& prepared) {
  if (basis.rows() != basis.cols()) throw StructuralError("measurement basis must be square");
  check_orthonormal_columns(basis);
  if (static_cast<Eigen::Index>(prepared.size()) != basis.cols()) {
    throw StructuralError("measure_and_prepare: need one prepared state per outcome");
  }
  std::vector<Matrix> kraus;
  for (Eigen::Index i = 0; i < basis.cols(); ++i) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(prepared[i].matrix());
    for (int n = 0; n < prepared[i].dim(); ++n) {
      const double lam = es.eigenvalues()(n);
      if (lam <= 1e-14) continue;
      kraus.push_back(std::sqrt(lam) * es.eigenvectors().col(n) * basis.col(i).adjoint());
    }
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel random_channel(int dim, int n_kraus, std::mt19937_64& rng) {
  // Isometry from dim to dim*n_kraus via QR; Kraus operators are its blocks.
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim * n_kraus, dim);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = Matrix(qr.householderQ()).leftCols(dim);
  std::vector<Matrix> kraus;
  for (int k = 0; k < n_kraus; ++k) kraus.push_back(q.middleRows(k * dim, dim));
  return KrausChannel(std::move(kraus));
}

ChannelVerdict classify(const KrausChannel& ch, int probe_trials, std::uint64_t seed) {
  ChannelVerdict v{};

  Matrix sum = Matrix::Zero(ch.dim_in(), ch.dim_in());
  for (const auto& k : ch.kraus()) sum += k.adjoint() * k;
  const double tp_dev =
      (sum - Matrix::Identity(ch.dim_in(), ch.dim_in())).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Matrix> choi_es(choi_matrix(ch), Eigen::EigenvaluesOnly);
  v.cptp_valid = tp_dev <= kCptpTol && choi_es.eigenvalues().minCoeff() >= -1e-10;

  if (ch.dim_in() == ch.dim_out()) {
    const auto mixed = DensityMatrix::maximally_mixed(ch.dim_in());
    v.unital = (apply(ch, mixed).matrix() - mixed.matrix()).cwiseAbs().maxCoeff() <= 1e-10;
    v.reversible_cptp = is_reversible_cptp(ch);
  } else {
    v.unital = false;
    v.reversible_cptp = false;
  }

  Eigen::JacobiSVD<Matrix> svd(superoperator_matrix(ch));
  v.linear_rank = static_cast<int>(
      (svd.singularValues().array() > 1e-10 * svd.singularValues()(0)).count());

  v.commutativity = preserves_commutativity_probe(ch, probe_trials, seed);
  return v;
}

}  // namespace qcorr
