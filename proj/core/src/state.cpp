#include "qcorr/state.hpp"

#include <cmath>

namespace qcorr {

std::vector<Violation> validate_state(const Matrix& m, const StateTolerances& tol) {
  if (m.rows() != m.cols()) {
    throw StructuralError("validate_state: matrix is not square (" +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
  }
  std::vector<Violation> out;

  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol.herm) out.push_back({"hermiticity", herm});

  const double tr_dev = std::abs(m.trace() - Complex(1.0, 0.0));
  if (tr_dev > tol.trace) out.push_back({"trace", tr_dev});

  // Eigenvalues of the symmetrized matrix; for near-Hermitian input this is
  // the spectrum up to herm-scale perturbation.
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrize(m), Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol.psd) out.push_back({"psd", -min_eig});

  return out;
}

Matrix symmetrize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

namespace {

std::string describe(const std::vector<Violation>& v) {
  std::string s;
  for (const auto& viol : v) {
    if (!s.empty()) s += ", ";
    s += viol.invariant + " (violation " + std::to_string(viol.magnitude) + ")";
  }
  return s;
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix m, const StateTolerances& tol) : m_(std::move(m)) {
  const auto violations = validate_state(m_, tol);
  if (!violations.empty()) {
    throw ValidationError("invalid density matrix: " + describe(violations));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::basis_projector(int dim, int i) {
  Matrix m = Matrix::Zero(dim, dim);
  m(i, i) = 1.0;
  return DensityMatrix(std::move(m));
}

PureState::PureState(Vector amplitudes, double norm_tol) : v_(std::move(amplitudes)) {
  const double norm = v_.norm();
  if (std::abs(norm - 1.0) > norm_tol) {
    throw ValidationError("pure state is not normalized: ||v|| = " + std::to_string(norm));
  }
}

DensityMatrix pure_to_density(const PureState& v) {
  Matrix m = v.amplitudes() * v.amplitudes().adjoint();
  return DensityMatrix(std::move(m));
}

BipartiteState::BipartiteState(DensityMatrix state, int dim_a, int dim_b)
    : state_(std::move(state)), dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a <= 0 || dim_b <= 0 || dim_a * dim_b != state_.dim()) {
    throw StructuralError("bipartite factorization " + std::to_string(dim_a) + "x" +
                          std::to_string(dim_b) + " does not match dim " +
                          std::to_string(state_.dim()));
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

BipartiteState tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return BipartiteState(DensityMatrix(kron(a.matrix(), b.matrix())), a.dim(), b.dim());
}

DensityMatrix partial_trace(const BipartiteState& s, Subsystem keep) {
  const int da = s.dim_a();
  const int db = s.dim_b();
  const Matrix& m = s.matrix();

  if (keep == Subsystem::A) {
    Matrix out = Matrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return DensityMatrix(symmetrize(out));
  }
  Matrix out = Matrix::Zero(db, db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k) out(i, j) += m(k * db + i, k * db + j);
  return DensityMatrix(symmetrize(out));
}

DensityMatrix random_density(int dim, int rank, std::mt19937_64& rng) {
  if (rank <= 0 || rank > dim) {
    throw StructuralError("random_density: rank " + std::to_string(rank) +
                          " out of range for dim " + std::to_string(dim));
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, rank);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(symmetrize(m));
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_density(dim, rank, rng);
}

Matrix random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase convention so the distribution is Haar.
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

PureState random_pure(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v.normalize();
  return PureState(std::move(v));
}

BipartiteState bell_state() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return BipartiteState(pure_to_density(PureState(std::move(v))), 2, 2);
}

}  // namespace qcorr
