#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qcorr/channel.hpp"
#include "qcorr/entropy.hpp"

using namespace qcorr;

TEST_CASE("entropy of pure states is zero, of I/d is log2 d") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 5; ++t) {
    CHECK(von_neumann_entropy(pure_to_density(random_pure(3, rng))) == doctest::Approx(0.0).epsilon(1e-9));
  }
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(4)) == doctest::Approx(2.0));
}

TEST_CASE("entropy of diag(0.25, 0.75)") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 0.25;
  m(1, 1) = 0.75;
  // frozen from the scalar oracle -sum p log2 p
  const double expected = -(0.25 * std::log2(0.25) + 0.75 * std::log2(0.75));
  CHECK(expected == doctest::Approx(0.811278).epsilon(1e-6));
  CHECK(von_neumann_entropy(DensityMatrix(m)) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("entropy is unitarily invariant") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const auto rho = random_density(3, 2, rng);
    const Matrix u = random_unitary(3, rng);
    const DensityMatrix rotated(symmetrize(u * rho.matrix() * u.adjoint()));
    CHECK(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)) < 1e-10);
  }
}

TEST_CASE("relative entropy: identical arguments, pure vs mixed, support violation") {
  const auto rho = random_density(3, 3, 11);
  CHECK(relative_entropy(rho, rho) == doctest::Approx(0.0).epsilon(1e-10));

  // S(|0><0| || I/2) = log2 2 = 1
  CHECK(relative_entropy(DensityMatrix::basis_projector(2, 0), DensityMatrix::maximally_mixed(2)) ==
        doctest::Approx(1.0));

  CHECK(std::isinf(relative_entropy(DensityMatrix::maximally_mixed(2),
                                    DensityMatrix::basis_projector(2, 0))));

  CHECK_THROWS_AS(relative_entropy(DensityMatrix::maximally_mixed(2),
                                   DensityMatrix::maximally_mixed(3)),
                  StructuralError);
}

TEST_CASE("relative entropy is nonnegative and zero only at equality") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto rho = random_density(3, 3, rng);
    const auto sigma = random_density(3, 3, rng);
    const double s = relative_entropy(rho, sigma);
    CHECK(s >= 0.0);
    if ((rho.matrix() - sigma.matrix()).cwiseAbs().maxCoeff() > 1e-3) CHECK(s > 1e-6);
  }
}

TEST_CASE("data-processing inequality over random channels") {
  std::mt19937_64 rng(4);
  int finite = 0;
  while (finite < 1000) {
    const int d = 2 + (finite % 2);
    const auto rho = random_density(d, d, rng);
    const auto sigma = random_density(d, d, rng);
    const double before = relative_entropy(rho, sigma);
    if (std::isinf(before)) continue;
    ++finite;
    const auto ch = random_channel(d, 1 + static_cast<int>(finite % 3), rng);
    const double after = relative_entropy(apply(ch, rho), apply(ch, sigma));
    CHECK(after <= before + 1e-9);
  }
}

TEST_CASE("mutual information: product state, Bell state, formula cross-check") {
  const auto prod = tensor(random_density(2, 2, 21), random_density(3, 3, 22));
  CHECK(mutual_information(prod) == doctest::Approx(0.0).epsilon(1e-9));

  CHECK(mutual_information(bell_state()) == doctest::Approx(2.0));

  // both routes evaluated explicitly on random two-qubit states
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const BipartiteState s(random_density(4, 4, rng), 2, 2);
    const auto ra = partial_trace(s, Subsystem::A);
    const auto rb = partial_trace(s, Subsystem::B);
    const double additive = von_neumann_entropy(ra) + von_neumann_entropy(rb) -
                            von_neumann_entropy(s.state());
    const double relent = relative_entropy(s.state(), tensor(ra, rb).state());
    CHECK(std::abs(additive - relent) < 1e-9);
    CHECK_NOTHROW(mutual_information(s));
  }
}

TEST_CASE("mutual information bounds") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 30; ++t) {
    const BipartiteState s(random_density(6, 1 + t % 6, rng), 2, 3);
    const double mi = mutual_information(s);
    CHECK(mi >= -1e-9);
    CHECK(mi <= 2.0 * std::log2(2.0) + 1e-9);  // 2 min(log2 2, log2 3)
  }
}
