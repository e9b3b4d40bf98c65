#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "mflip/errors.hpp"
#include "mflip/random.hpp"
#include "mflip/state.hpp"

using namespace mflip;

namespace {

StateVector bell() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return StateVector(Dims({2, 2}), v);
}

}  // namespace

TEST_CASE("state vector validates and normalizes") {
  const Dims d({2, 2});
  CHECK_THROWS_AS(StateVector(d, Eigen::VectorXcd::Zero(3)), invalid_input);
  CHECK_THROWS_AS(StateVector(d, Eigen::VectorXcd::Zero(4)), invalid_input);

  Eigen::VectorXcd bad = Eigen::VectorXcd::Zero(4);
  bad(0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(StateVector(d, bad), invalid_input);

  Eigen::VectorXcd unnormalized = Eigen::VectorXcd::Zero(4);
  unnormalized(1) = 2.0;
  const StateVector psi(d, unnormalized);
  CHECK(psi.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(psi.amp(1).real() == doctest::Approx(1.0));
}

TEST_CASE("density matrix constructor enforces its invariants") {
  const Dims d({2});
  Eigen::MatrixXcd ok(2, 2);
  ok << 0.5, 0.25, 0.25, 0.5;
  CHECK_NOTHROW(DensityMatrix(d, ok));

  Eigen::MatrixXcd not_hermitian(2, 2);
  not_hermitian << 0.5, 0.3, 0.1, 0.5;
  CHECK_THROWS_AS(DensityMatrix(d, not_hermitian), invalid_input);

  Eigen::MatrixXcd bad_trace(2, 2);
  bad_trace << 0.7, 0.0, 0.0, 0.5;
  CHECK_THROWS_AS(DensityMatrix(d, bad_trace), invalid_input);

  Eigen::MatrixXcd not_psd(2, 2);
  not_psd << 1.2, 0.0, 0.0, -0.2;
  CHECK_THROWS_AS(DensityMatrix(d, not_psd), invalid_input);

  CHECK_THROWS_AS(DensityMatrix(d, Eigen::MatrixXcd::Identity(3, 3)),
                  invalid_input);
}

TEST_CASE("pure states become rank-one projectors") {
  const DensityMatrix rho = pure_to_density(bell());
  CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rho.matrix()(0, 3).real() == doctest::Approx(0.5));
}

TEST_CASE("partial trace of a maximally entangled pair is maximally mixed") {
  const DensityMatrix rho = pure_to_density(bell());
  for (int side : {0, 1}) {
    const DensityMatrix reduced = partial_trace(rho, {side});
    CHECK(reduced.dims().total() == 2);
    CHECK((reduced.matrix() - Eigen::MatrixXcd::Identity(2, 2) / 2.0)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("partial trace preserves trace and hermiticity") {
  Rng rng(42);
  const Dims dims({2, 3, 2});
  const DensityMatrix rho = random_mixed(dims, 5, rng);
  const DensityMatrix reduced = partial_trace(rho, {1});
  CHECK(reduced.dims().local() == std::vector<int>{2, 2});
  CHECK(reduced.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((reduced.matrix() - reduced.matrix().adjoint()).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("partial trace validates the discard set") {
  const DensityMatrix rho = pure_to_density(bell());
  CHECK_THROWS_AS(partial_trace(rho, {}), invalid_input);
  CHECK_THROWS_AS(partial_trace(rho, {0, 1}), invalid_input);
  CHECK_THROWS_AS(partial_trace(rho, {2}), invalid_input);
  CHECK_THROWS_AS(partial_trace(rho, {0, 0}), invalid_input);
}

TEST_CASE("conjugation is an involution") {
  const StateVector psi = haar_random_pure(Dims({2, 3}), 7);
  const StateVector twice = conjugate(conjugate(psi));
  CHECK((twice.amplitudes() - psi.amplitudes()).norm() < 1e-15);
}

TEST_CASE("local unitaries act on one site only") {
  Rng rng(11);
  const Dims dims({2, 3, 2});
  const StateVector psi = haar_random_pure(dims, rng);
  const Eigen::MatrixXcd u = random_unitary(3, rng);

  const StateVector rotated = apply_local_unitary(psi, 1, u);
  CHECK(rotated.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-12));

  // The density-matrix overload must agree with the vector one.
  const DensityMatrix direct = apply_local_unitary(pure_to_density(psi), 1, u);
  const DensityMatrix via_vector = pure_to_density(rotated);
  CHECK((direct.matrix() - via_vector.matrix()).cwiseAbs().maxCoeff() < 1e-12);

  // Tracing out the rotated site leaves the other marginals untouched.
  const DensityMatrix before = partial_trace(pure_to_density(psi), {1});
  const DensityMatrix after = partial_trace(direct, {1});
  CHECK((before.matrix() - after.matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("local unitary application validates its arguments") {
  const StateVector psi = haar_random_pure(Dims({2, 2}), 3);
  Eigen::MatrixXcd not_unitary(2, 2);
  not_unitary << 1.0, 0.0, 0.0, 2.0;
  CHECK_THROWS_AS(apply_local_unitary(psi, 0, not_unitary), invalid_input);
  CHECK_THROWS_AS(apply_local_unitary(psi, 2, Eigen::MatrixXcd::Identity(2, 2)),
                  invalid_input);
  CHECK_THROWS_AS(apply_local_unitary(psi, 0, Eigen::MatrixXcd::Identity(3, 3)),
                  invalid_input);
}

TEST_CASE("random sampling is deterministic per seed") {
  const Dims dims({2, 2, 2});
  const StateVector a = haar_random_pure(dims, 123);
  const StateVector b = haar_random_pure(dims, 123);
  const StateVector c = haar_random_pure(dims, 124);
  CHECK((a.amplitudes() - b.amplitudes()).norm() == 0.0);
  CHECK((a.amplitudes() - c.amplitudes()).norm() > 1e-3);

  const DensityMatrix m1 = random_mixed(dims, 3, 55);
  const DensityMatrix m2 = random_mixed(dims, 3, 55);
  CHECK((m1.matrix() - m2.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("random mixed states are valid density matrices") {
  Rng rng(9);
  const Dims dims({2, 3});
  for (int rank : {1, 2, 6}) {
    const DensityMatrix rho = random_mixed(dims, rank, rng);
    CHECK(rho.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix(),
                                                       Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
    if (rank == 1) CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-12));
    if (rank > 1) CHECK(purity(rho) < 1.0);
  }
  CHECK_THROWS_AS(random_mixed(dims, 0, rng), invalid_input);
  CHECK_THROWS_AS(random_mixed(dims, 7, rng), invalid_input);
}

TEST_CASE("random unitaries are unitary") {
  Rng rng(17);
  for (int d : {2, 3, 5}) {
    const Eigen::MatrixXcd u = random_unitary(d, rng);
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("purity of the maximally mixed state is 1/d") {
  const DensityMatrix rho(Dims({2, 2}),
                          Eigen::MatrixXcd::Identity(4, 4) / 4.0);
  CHECK(purity(rho) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("psd_sqrt squares back to its input") {
  Rng rng(23);
  const DensityMatrix rho = random_mixed(Dims({2, 2}), 3, rng);
  const Eigen::MatrixXcd root = psd_sqrt(rho.matrix());
  CHECK((root * root - rho.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((root - root.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

  Eigen::MatrixXcd negative(2, 2);
  negative << 1.0, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(psd_sqrt(negative), numerical_failure);
}
