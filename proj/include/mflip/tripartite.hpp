#pragma once

#include "mflip/bounds.hpp"
#include "mflip/state.hpp"

namespace mflip {

// Local-unitary-invariant split of a three-qubit state's total
// entanglement into pairwise and genuinely tripartite parts.
struct TripartiteDecomposition {
  double e12 = 0.0;
  double e13 = 0.0;
  double e23 = 0.0;
  double e2_total = 0.0;
  double e3 = 0.0;
  double total = 0.0;      // e2_total + e3
  bool estimate = false;   // true when built from mixed-state bounds
};

// E_(jk) = 2 * wootters_mixed(pair marginal)^2; subsystems 0-based.
double pair_entanglement(const DensityMatrix& rho, int j, int k);

// Pure three-qubit split: e3 = C_(2)^2 + C_(3)^2 minus the pair terms.
// e3 in (-1e-9, 0) is rounding and clamps to 0; below raises
// numerical_failure (the pure-state value is provably nonnegative).
TripartiteDecomposition decompose(const StateVector& psi);

// Mixed variant: pair terms stay exact, the concurrence totals are
// replaced by the squared lower bounds, and the result is flagged as an
// estimate. The e3 estimate may be negative for valid inputs (the bound
// can undershoot while the pair terms are exact); tiny negatives clamp,
// larger ones are reported as-is.
TripartiteDecomposition decompose_mixed(const DensityMatrix& rho);

}  // namespace mflip
