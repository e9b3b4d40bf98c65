#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "mflip/multi_index.hpp"
#include "mflip/random.hpp"

namespace mflip {

using Complex = std::complex<double>;

// Normalized pure state over a tensor product of finite factors.
class StateVector {
 public:
  StateVector(Dims dims, Eigen::VectorXcd amplitudes);

  const Dims& dims() const { return dims_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex amp(long flat) const { return amplitudes_(flat); }

 private:
  Dims dims_;
  Eigen::VectorXcd amplitudes_;
};

// Hermitian, trace-one, positive-semidefinite matrix with tensor structure.
// The public constructor validates all three properties; internal
// operations that preserve them construct results without re-validating.
class DensityMatrix {
 public:
  DensityMatrix(Dims dims, Eigen::MatrixXcd matrix);

  const Dims& dims() const { return dims_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPsdTol = -1e-10;

  // Constructs without validation; for results that are valid by
  // construction (outer products, partial traces, convex mixtures).
  static DensityMatrix trusted(Dims dims, Eigen::MatrixXcd matrix);

 private:
  struct Trusted {};
  DensityMatrix(Trusted, Dims dims, Eigen::MatrixXcd matrix);

  Dims dims_;
  Eigen::MatrixXcd matrix_;
};

DensityMatrix pure_to_density(const StateVector& psi);

// Traces out the listed subsystems (0-based); `discard` must be a proper
// nonempty subset.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& discard);

double purity(const DensityMatrix& rho);

StateVector conjugate(const StateVector& psi);

StateVector apply_local_unitary(const StateVector& psi, int site,
                                const Eigen::MatrixXcd& u);
DensityMatrix apply_local_unitary(const DensityMatrix& rho, int site,
                                  const Eigen::MatrixXcd& u);

StateVector haar_random_pure(const Dims& dims, Rng& rng);
StateVector haar_random_pure(const Dims& dims, std::uint64_t seed);

// Convex mixture of `rank` Haar-random pure states with Dirichlet-uniform
// weights.
DensityMatrix random_mixed(const Dims& dims, int rank, Rng& rng);
DensityMatrix random_mixed(const Dims& dims, int rank, std::uint64_t seed);

// Haar-distributed d x d unitary (QR of a Gaussian matrix with the phase
// convention fixed from the R diagonal).
Eigen::MatrixXcd random_unitary(int d, Rng& rng);

// Hermitian square root of a PSD matrix. Eigenvalues in (-1e-8, 0) are
// treated as rounding and clamped to zero; below that raises
// numerical_failure.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m);

}  // namespace mflip
