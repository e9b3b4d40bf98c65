#pragma once

#include <vector>

#include "mflip/state.hpp"

namespace mflip {

// Which-way knowledge, interference capability, and classical uncertainty
// of one subsystem; the three squares always sum to one.
struct ComplementarityTriple {
  double predictability = 0.0;
  double coherence = 0.0;
  double mixedness = 0.0;
  double single_property_sq = 0.0;  // predictability^2 + coherence^2
};

// The quantities below treat the whole matrix as a single d-level system.
double predictability(const DensityMatrix& rho);
double coherence(const DensityMatrix& rho);
double mixedness(const DensityMatrix& rho);

ComplementarityTriple single_system_triple(const DensityMatrix& rho);

// Reduces to subsystem s (0-based) first.
ComplementarityTriple subsystem_triple(const DensityMatrix& rho, int s);

// Partition of the n-dit information content: local single properties,
// entanglement (supplied by the caller: exact for pure states, a lower
// bound for mixed ones), and the residual completing the budget to n.
struct InfoBudget {
  int n = 0;
  double local_info = 0.0;
  double entanglement = 0.0;
  double residual = 0.0;
  std::vector<ComplementarityTriple> per_subsystem;
};

InfoBudget info_budget(const DensityMatrix& rho, double entanglement_value);

}  // namespace mflip
