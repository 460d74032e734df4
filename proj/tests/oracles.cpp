#include "oracles.hpp"

#include <cmath>

namespace qcorr::oracles {

Matrix kron_indexwise(const Matrix& a, const Matrix& b) {
  const int ra = static_cast<int>(a.rows()), ca = static_cast<int>(a.cols());
  const int rb = static_cast<int>(b.rows()), cb = static_cast<int>(b.cols());
  Matrix out(ra * rb, ca * cb);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ca; ++j)
      for (int k = 0; k < rb; ++k)
        for (int l = 0; l < cb; ++l) out(i * rb + k, j * cb + l) = a(i, j) * b(k, l);
  return out;
}

Matrix partial_trace_indexwise(const Matrix& m, int da, int db, Subsystem keep) {
  if (keep == Subsystem::A) {
    Matrix out = Matrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return out;
  }
  Matrix out = Matrix::Zero(db, db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k) out(i, j) += m(k * db + i, k * db + j);
  return out;
}

double entropy_of_probs(const Eigen::VectorXd& p) {
  double s = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p(i) > 1e-12) s -= p(i) * std::log2(p(i));
  }
  return s;
}

namespace {

double matrix_entropy(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return entropy_of_probs(es.eigenvalues());
}

}  // namespace

double qubit_holevo(const Matrix& rho, int d_other, double theta, double phi,
                    Subsystem side) {
  const Complex ephi(std::cos(phi), std::sin(phi));
  Eigen::Vector2cd u0, u1;
  u0 << std::cos(theta / 2.0), ephi * std::sin(theta / 2.0);
  u1 << -std::conj(ephi) * std::sin(theta / 2.0), std::cos(theta / 2.0);

  const Matrix eye = Matrix::Identity(d_other, d_other);
  double avg_entropy;
  {
    const int da = side == Subsystem::A ? 2 : d_other;
    const int db = side == Subsystem::A ? d_other : 2;
    const Subsystem other = side == Subsystem::A ? Subsystem::B : Subsystem::A;
    avg_entropy = matrix_entropy(partial_trace_indexwise(rho, da, db, other));
  }

  double cond = 0.0;
  for (const auto& u : {u0, u1}) {
    const Matrix embed = side == Subsystem::A ? kron_indexwise(u, eye)
                                              : kron_indexwise(eye, u);
    const Matrix post = embed.adjoint() * rho * embed;
    const double p = post.trace().real();
    if (p <= 1e-14) continue;
    cond += p * matrix_entropy(post / p);
  }
  const double h = avg_entropy - cond;
  return h < 0.0 ? 0.0 : h;
}

double grid_classical_correlation(const Matrix& rho, int d_other, Subsystem side) {
  const double deg = M_PI / 180.0;
  double best = 0.0, best_theta = 0.0, best_phi = 0.0;
  for (int t = 0; t <= 180; ++t) {
    for (int f = 0; f < 360; ++f) {
      const double h = qubit_holevo(rho, d_other, t * deg, f * deg, side);
      if (h > best) {
        best = h;
        best_theta = t * deg;
        best_phi = f * deg;
      }
    }
  }
  // refinement pass at 0.05 degrees around the best grid point
  for (int dt = -20; dt <= 20; ++dt) {
    for (int df = -20; df <= 20; ++df) {
      const double h = qubit_holevo(rho, d_other, best_theta + dt * 0.05 * deg,
                                    best_phi + df * 0.05 * deg, side);
      if (h > best) best = h;
    }
  }
  return best;
}

BellDiagonalValues bell_diagonal_discord(const Matrix& rho) {
  Matrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  sz << 1, 0, 0, -1;

  double c = 0.0;
  for (const auto& s : {sx, sy, sz}) {
    c = std::max(c, std::abs((rho * kron_indexwise(s, s)).trace().real()));
  }

  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  BellDiagonalValues v{};
  v.mutual_info = 2.0 - entropy_of_probs(es.eigenvalues());
  v.classical_corr = 0.0;
  for (double sign : {1.0, -1.0}) {
    const double q = (1.0 + sign * c) / 2.0;
    if (q > 1e-12) v.classical_corr += q * std::log2(2.0 * q);
  }
  v.discord = v.mutual_info - v.classical_corr;
  return v;
}

}  // namespace qcorr::oracles
