#include "mflip/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

#include "mflip/bounds.hpp"
#include "mflip/complementarity.hpp"
#include "mflip/errors.hpp"
#include "mflip/families.hpp"
#include "mflip/flip.hpp"
#include "mflip/random.hpp"
#include "mflip/state.hpp"
#include "mflip/tripartite.hpp"

namespace mflip {

namespace {

struct Reporter {
  explicit Reporter(std::ostream& stream) : out(stream) {}

  std::ostream& out;
  int passed = 0;
  int failed = 0;

  void line(const char* name, double deviation, double tolerance) {
    const bool ok = deviation <= tolerance;
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer),
                  "%-32s max deviation %.3e (tolerance %.0e) %s", name,
                  deviation, tolerance, ok ? "PASS" : "FAIL");
    out << buffer << '\n';
    (ok ? passed : failed) += 1;
  }
};

void track(double& worst, double deviation) {
  worst = std::max(worst, deviation);
}

// Pick a deterministic cycle of shapes so every run of a given length
// covers the same mix of dimensions.
const std::vector<std::vector<int>>& single_shapes() {
  static const std::vector<std::vector<int>> shapes = {{2}, {3}, {4}, {5}};
  return shapes;
}

const std::vector<std::vector<int>>& multi_shapes() {
  static const std::vector<std::vector<int>> shapes = {
      {2, 2},         {2, 2, 2}, {2, 2, 2, 2}, {2, 3},
      {3, 3},         {2, 2, 3}, {3, 3, 3}};
  return shapes;
}

double triple_closure(const ComplementarityTriple& t) {
  return std::abs(t.predictability * t.predictability +
                  t.coherence * t.coherence + t.mixedness * t.mixedness - 1.0);
}

void suite_identities(Reporter& r, int samples, std::uint64_t seed) {
  Rng rng(seed);

  double triple_dev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Dims dims(single_shapes()[static_cast<std::size_t>(i) %
                                    single_shapes().size()]);
    const int rank = 1 + i % static_cast<int>(dims.total());
    const DensityMatrix rho = random_mixed(dims, rank, rng);
    track(triple_dev, triple_closure(single_system_triple(rho)));
  }
  r.line("triple_identity", triple_dev, 1e-10);

  double master_dev = 0.0;
  double mixedness_dev = 0.0;
  double pure_mixedness = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Dims dims(multi_shapes()[static_cast<std::size_t>(i) %
                                   multi_shapes().size()]);
    const StateVector psi = haar_random_pure(dims, rng);
    const DensityMatrix rho = pure_to_density(psi);
    double local = 0.0;
    double marginal_mixedness_sq = 0.0;
    for (int s = 0; s < dims.n(); ++s) {
      const ComplementarityTriple t = subsystem_triple(rho, s);
      local += t.single_property_sq;
      marginal_mixedness_sq += t.mixedness * t.mixedness;
    }
    const ConcurrenceSpectrum spectrum = concurrence_spectrum(psi);
    track(master_dev, std::abs(local + spectrum.total - dims.n()));
    track(mixedness_dev, std::abs(marginal_mixedness_sq - spectrum.total));
    track(pure_mixedness, mixedness(rho));
  }
  r.line("master_identity", master_dev, 1e-9);
  r.line("mixedness_concurrence_link", mixedness_dev, 1e-9);
  r.line("pure_state_zero_mixedness", pure_mixedness, 1e-6);
}

DensityMatrix werner(double p) {
  const Dims dims({2, 2});
  const Eigen::MatrixXcd mix =
      p * pure_to_density(bell_state()).matrix() +
      (1.0 - p) * Eigen::MatrixXcd::Identity(4, 4) / 4.0;
  return DensityMatrix::trusted(dims, mix);
}

void suite_oracles(Reporter& r, int samples, std::uint64_t seed) {
  Rng rng(seed);

  {
    const ConcurrenceSpectrum ghz = concurrence_spectrum(ghz_state());
    const double dev = std::max(std::abs(ghz.per_m.at(2)),
                                std::abs(ghz.per_m.at(3) - 3.0));
    r.line("ghz_concurrence_anchor", dev, 1e-10);
  }
  {
    const ConcurrenceSpectrum w = concurrence_spectrum(w_state());
    const double dev = std::max(std::abs(w.per_m.at(2) - 8.0 / 3.0),
                                std::abs(w.per_m.at(3)));
    r.line("w_concurrence_anchor", dev, 1e-10);
  }
  {
    double dev = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double alpha = 3.141592653589793 * i / std::max(1, samples - 1);
      const auto state = make_state({Family::bisep, alpha});
      const TripartiteDecomposition d =
          decompose(std::get<StateVector>(state));
      track(dev, std::abs(d.e12 - 2.0));
      track(dev, std::abs(d.e13));
      track(dev, std::abs(d.e23));
      track(dev, std::abs(d.e3));
    }
    r.line("bisep_pair_anchor", dev, 1e-10);
  }
  {
    double dev = 0.0;
    for (const double alpha :
         {3.141592653589793 / 3.0, 2.0 * 3.141592653589793 / 3.0}) {
      const auto state = make_state({Family::phi_w, alpha});
      const TripartiteDecomposition d =
          decompose(std::get<StateVector>(state));
      track(dev, std::abs(d.e3 - 3.0));
    }
    r.line("phi_w_tripartite_peak", dev, 1e-6);
  }
  {
    double dev = 0.0;
    for (int i = 0; i < samples; ++i) {
      const StateVector psi = haar_random_pure(Dims({2, 2}), rng);
      const double closed = wootters_concurrence_pure(psi);
      track(dev,
            std::abs(m_flip_concurrence_sq(psi, 2) - 2.0 * closed * closed));
    }
    r.line("pure_wootters_link", dev, 1e-10);
  }
  {
    double dev = 0.0;
    for (int i = 0; i <= samples; ++i) {
      const double p = static_cast<double>(i) / std::max(1, samples);
      const double closed = std::max(0.0, (3.0 * p - 1.0) / 2.0);
      track(dev, std::abs(wootters_mixed(werner(p)) - closed));
    }
    r.line("werner_closed_form", dev, 1e-10);
  }
}

void suite_decomposition(Reporter& r, int samples, std::uint64_t seed) {
  Rng rng(seed);
  const Dims dims({2, 2, 2});

  double negative_e3 = 0.0;
  double budget_dev = 0.0;
  double mixed_agreement = 0.0;
  for (int i = 0; i < samples; ++i) {
    const StateVector psi = haar_random_pure(dims, rng);
    const TripartiteDecomposition d = decompose(psi);
    track(negative_e3, std::max(0.0, -d.e3));
    const DensityMatrix rho = pure_to_density(psi);
    const InfoBudget budget = info_budget(rho, d.total);
    track(budget_dev, std::abs(budget.local_info + budget.entanglement +
                               budget.residual - 3.0));
    const TripartiteDecomposition est = decompose_mixed(rho);
    track(mixed_agreement, std::abs(est.e3 - d.e3));
  }
  r.line("pure_e3_nonnegative", negative_e3, 1e-9);
  r.line("info_budget_closure", budget_dev, 1e-9);
  r.line("mixed_split_matches_pure", mixed_agreement, 1e-7);

  double lu_dev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const StateVector psi = haar_random_pure(dims, rng);
    StateVector rotated = psi;
    for (int s = 0; s < 3; ++s)
      rotated = apply_local_unitary(rotated, s, random_unitary(2, rng));
    const TripartiteDecomposition a = decompose(psi);
    const TripartiteDecomposition b = decompose(rotated);
    track(lu_dev, std::abs(a.e3 - b.e3));
    track(lu_dev, std::abs(a.e2_total - b.e2_total));
  }
  r.line("local_unitary_invariance", lu_dev, 1e-8);
}

void suite_bounds(Reporter& r, int samples, std::uint64_t seed) {
  Rng rng(seed);

  double pure_equality = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Dims dims(multi_shapes()[static_cast<std::size_t>(i) % 3]);
    const StateVector psi = haar_random_pure(dims, rng);
    const DensityMatrix rho = pure_to_density(psi);
    for (int m = 2; m <= dims.n(); ++m) {
      const double b = bound(rho, m);
      track(pure_equality, std::abs(b * b - m_flip_concurrence_sq(psi, m)));
    }
  }
  r.line("pure_state_equality", pure_equality, 1e-8);

  double qubit_link = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Dims dims({2, 2});
    const DensityMatrix rho = random_mixed(dims, 1 + i % 4, rng);
    const double b = bound(rho, 2);
    const double c = wootters_mixed(rho);
    track(qubit_link, std::abs(b * b - 2.0 * c * c));
  }
  r.line("two_qubit_closed_form", qubit_link, 1e-8);

  double soundness = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Dims dims(multi_shapes()[static_cast<std::size_t>(i) % 3]);
    const int rank = 1 + i % 4;
    std::vector<double> weights;
    std::vector<StateVector> members;
    double norm = 0.0;
    for (int k = 0; k < rank; ++k) {
      weights.push_back(rng.exponential());
      norm += weights.back();
      members.push_back(haar_random_pure(dims, rng));
    }
    Eigen::MatrixXcd mix =
        Eigen::MatrixXcd::Zero(dims.total(), dims.total());
    for (int k = 0; k < rank; ++k) {
      weights[static_cast<std::size_t>(k)] /= norm;
      mix += weights[static_cast<std::size_t>(k)] *
             pure_to_density(members[static_cast<std::size_t>(k)]).matrix();
    }
    const DensityMatrix rho = DensityMatrix::trusted(dims, mix);
    for (int m = 2; m <= dims.n(); ++m) {
      // Any explicit decomposition upper-bounds the convex roof the bound
      // sits below, so the bound must not exceed the ensemble average.
      double ensemble = 0.0;
      for (int k = 0; k < rank; ++k)
        ensemble += weights[static_cast<std::size_t>(k)] *
                    m_flip_concurrence_sq(members[static_cast<std::size_t>(k)], m);
      const double b = bound(rho, m);
      track(soundness, std::max(0.0, b * b - ensemble));
    }
  }
  r.line("bound_below_ensemble", soundness, 1e-9);

  double separable = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Dims dims({2, 2});
    Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(4, 4);
    const int rank = 1 + i % 3;
    std::vector<double> weights;
    double norm = 0.0;
    for (int k = 0; k < rank; ++k) {
      weights.push_back(rng.exponential());
      norm += weights.back();
    }
    for (int k = 0; k < rank; ++k) {
      Eigen::VectorXcd v(4);
      const StateVector left = haar_random_pure(Dims({2}), rng);
      const StateVector right = haar_random_pure(Dims({2}), rng);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          v(2 * a + b) = left.amp(a) * right.amp(b);
      const StateVector product(dims, v);
      mix += weights[static_cast<std::size_t>(k)] / norm *
             pure_to_density(product).matrix();
    }
    const DensityMatrix rho = DensityMatrix::trusted(dims, mix);
    track(separable, bound(rho, 2));
  }
  r.line("separable_states_undetected", separable, kDetectionThreshold);
}

}  // namespace

bool is_known_suite(const std::string& suite) {
  return suite == "identities" || suite == "oracles" ||
         suite == "decomposition" || suite == "bounds";
}

bool run_check_suite(const std::string& suite, int samples,
                     std::uint64_t seed, std::ostream& out) {
  if (!is_known_suite(suite))
    throw invalid_input("unknown check suite '" + suite +
                        "' (expected identities, oracles, decomposition or "
                        "bounds)");
  if (samples < 1) throw invalid_input("check: samples must be positive");

  Reporter reporter(out);
  if (suite == "identities") suite_identities(reporter, samples, seed);
  if (suite == "oracles") suite_oracles(reporter, samples, seed);
  if (suite == "decomposition") suite_decomposition(reporter, samples, seed);
  if (suite == "bounds") suite_bounds(reporter, samples, seed);

  char buffer[96];
  std::snprintf(buffer, sizeof(buffer), "%s: %d/%d invariants passed",
                suite.c_str(), reporter.passed,
                reporter.passed + reporter.failed);
  out << buffer << '\n';
  return reporter.failed == 0;
}

}  // namespace mflip
