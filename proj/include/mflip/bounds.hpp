#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "mflip/flip.hpp"
#include "mflip/state.hpp"

namespace mflip {

// One elementary term of the mixed-state machinery: a pattern, an
// admissible base index, and the pivot site of the minor.
struct FlipTerm {
  FlipPattern pattern;
  std::vector<int> base;
  int pivot = 0;
};

// One-sided term operator T = |F(a)><a| - |F(a_s)><a_s| where F flips all
// pattern sites and a_s is the base with the pivot flipped. Rank 2; for a
// pure state <psi|T|psi*> is the conjugated minor.
Eigen::MatrixXcd flip_term_operator(const FlipTerm& term, const Dims& dims);

// Auxiliary matrix T rho* T^dagger; positive semidefinite, not normalized.
Eigen::MatrixXcd flip_density_matrix(const DensityMatrix& rho,
                                     const FlipTerm& term);

// Descending nonnegative singular values of sqrt(rho) T sqrt(rho*); their
// squares are the eigenvalues of rho times the flip density matrix. At
// most two are nonzero for the rank-2 term operator.
struct LambdaSpectrum {
  std::vector<double> lambdas;
};

LambdaSpectrum lambda_spectrum(const DensityMatrix& rho, const FlipTerm& term);

// Hermitian flip-pair operator used by the bound: the one-sided operator
// plus its adjoint,
//   |F(a)><a| + |a><F(a)| - |F(a_s)><a_s| - |a_s><F(a_s)|.
// The base and F(base) share one operator, so terms are aggregated over
// orbit representatives. For two qubits every such operator is, up to
// sign, the familiar spin-flip sigma_y (x) sigma_y.
Eigen::MatrixXcd symmetric_flip_operator(const FlipTerm& term,
                                         const Dims& dims);

// Up to four nonzero values (the Hermitian pair operator has rank <= 4).
LambdaSpectrum symmetric_lambda_spectrum(const DensityMatrix& rho,
                                         const FlipTerm& term);

// Lower bound B^m on the convex roof of C_(m)^2's square root:
//   (B^m)^2 = sum over patterns, orbit representatives and pivots of
//             (w_s / 2) * max(0, 2 lambda_max - sum lambda)^2
// with lambdas from the Hermitian pair operator. Equals C_(m)^2 exactly on
// pure inputs, and 2 * wootters_mixed(rho)^2 exactly for two qubits.
double bound(const DensityMatrix& rho, int m);

struct BoundResult {
  std::map<int, double> per_m;  // m -> B^m
  bool detected = false;        // any B^m above the detection threshold
};

// Detection threshold on B^m, above accumulated eigensolve noise.
inline constexpr double kDetectionThreshold = 1e-7;

BoundResult bound_result(const DensityMatrix& rho);

// Closed-form 2-qubit mixed concurrence:
// max(0, l1 - l2 - l3 - l4) with l's the descending square roots of the
// eigenvalues of rho (sy x sy) rho* (sy x sy).
double wootters_mixed(const DensityMatrix& rho);

// True iff the partial transpose over the listed subsystems has an
// eigenvalue below -1e-10. Exact entanglement test for 2-qubit systems.
bool ppt_negative(const DensityMatrix& rho,
                  const std::vector<int>& transpose_side);

}  // namespace mflip
