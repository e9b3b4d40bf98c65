#include "mflip/complementarity.hpp"

#include <cmath>
#include <string>

#include "mflip/errors.hpp"

namespace mflip {

namespace {

// Square root with the clamp policy: arguments in (-1e-8, 0) are rounding
// and clamp to zero; anything more negative is a broken input.
double clamped_sqrt(double x, const char* what) {
  if (x < 0.0) {
    if (x < -1e-8)
      throw numerical_failure(std::string(what) +
                              ": square-root argument " + std::to_string(x));
    return 0.0;
  }
  return std::sqrt(x);
}

double diagonal_moment(const DensityMatrix& rho) {
  double sum = 0.0;
  for (long i = 0; i < rho.dims().total(); ++i) {
    const double p = rho.matrix()(i, i).real();
    sum += p * p;
  }
  return sum;
}

}  // namespace

double predictability(const DensityMatrix& rho) {
  const double d = static_cast<double>(rho.dims().total());
  const double value =
      clamped_sqrt(d / (d - 1.0) * diagonal_moment(rho) - 1.0 / (d - 1.0),
                   "predictability");
  return std::min(value, 1.0);
}

double coherence(const DensityMatrix& rho) {
  const double d = static_cast<double>(rho.dims().total());
  const double value = clamped_sqrt(
      d / (d - 1.0) * (purity(rho) - diagonal_moment(rho)), "coherence");
#ifndef NDEBUG
  // Cross-check against the off-diagonal form.
  double off = 0.0;
  for (long i = 0; i < rho.dims().total(); ++i)
    for (long j = i + 1; j < rho.dims().total(); ++j)
      off += std::norm(rho.matrix()(i, j));
  const double alt = clamped_sqrt(2.0 * d / (d - 1.0) * off, "coherence");
  if (std::abs(alt - value) > 1e-10)
    throw numerical_failure("coherence: algebraic forms disagree by " +
                            std::to_string(std::abs(alt - value)));
#endif
  return std::min(value, 1.0);
}

double mixedness(const DensityMatrix& rho) {
  const double d = static_cast<double>(rho.dims().total());
  const double value =
      clamped_sqrt(d / (d - 1.0) * (1.0 - purity(rho)), "mixedness");
  return std::min(value, 1.0);
}

ComplementarityTriple single_system_triple(const DensityMatrix& rho) {
  ComplementarityTriple t;
  t.predictability = predictability(rho);
  t.coherence = coherence(rho);
  t.mixedness = mixedness(rho);
  t.single_property_sq =
      t.predictability * t.predictability + t.coherence * t.coherence;
  return t;
}

ComplementarityTriple subsystem_triple(const DensityMatrix& rho, int s) {
  const Dims& dims = rho.dims();
  if (s < 0 || s >= dims.n())
    throw invalid_input("subsystem_triple: subsystem index out of range");
  if (dims.n() == 1) return single_system_triple(rho);
  std::vector<int> discard;
  for (int t = 0; t < dims.n(); ++t)
    if (t != s) discard.push_back(t);
  return single_system_triple(partial_trace(rho, discard));
}

InfoBudget info_budget(const DensityMatrix& rho, double entanglement_value) {
  if (entanglement_value < 0.0)
    throw invalid_input("info_budget: entanglement value must be >= 0");
  InfoBudget budget;
  budget.n = rho.dims().n();
  for (int s = 0; s < budget.n; ++s) {
    budget.per_subsystem.push_back(subsystem_triple(rho, s));
    budget.local_info += budget.per_subsystem.back().single_property_sq;
  }
  budget.entanglement = entanglement_value;
  budget.residual =
      static_cast<double>(budget.n) - budget.local_info - entanglement_value;
  return budget;
}

}  // namespace mflip
