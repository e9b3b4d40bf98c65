#pragma once

#include <Eigen/Dense>
#include <map>
#include <utility>
#include <vector>

#include "mflip/state.hpp"

namespace mflip {

// Two-level exchange operator on a single d-level factor: maps |k> <-> |l>
// and annihilates every other basis state.
struct FlipOperator {
  int d = 2;
  int k = 0;
  int l = 1;
};

Eigen::MatrixXcd flip_matrix(const FlipOperator& op);

// A set of m >= 2 sites flipped simultaneously, with one level pair per
// site. One pattern indexes one family of elementary terms.
struct FlipPattern {
  std::vector<int> sites;                         // strictly increasing
  std::vector<std::pair<int, int>> level_pairs;   // (k, l), k < l, per site
};

// Every site subset of size m crossed with every per-site level pair,
// each exactly once.
std::vector<FlipPattern> enumerate_patterns(const Dims& dims, int m);

// All base indices whose pattern-site coordinates lie in the pattern's
// level pairs; spectator sites range freely.
std::vector<std::vector<int>> admissible_indices(const Dims& dims,
                                                 const FlipPattern& pattern);

// Swaps k <-> l at each pattern site listed in `subset` (indices into
// pattern.sites); coordinates elsewhere are untouched.
std::vector<int> flip_coords(const std::vector<int>& coords,
                             const FlipPattern& pattern,
                             const std::vector<int>& subset);
// Flips every pattern site.
std::vector<int> flip_all(const std::vector<int>& coords,
                          const FlipPattern& pattern);

bool is_admissible(const std::vector<int>& coords, const FlipPattern& pattern);

// Elementary term of the m-flip sum: the 2x2 minor of the amplitude matrix
// across the pivot-site-vs-rest split,
//   minor_s(a) = psi_a psi_F(a) - psi_{a with pivot flipped} psi_{F(a) with pivot flipped}
// where F flips every pattern site.
Complex minor_term(const StateVector& psi, const FlipPattern& pattern,
                   const std::vector<int>& base, int pivot_site);

// Per-site weight d_s / (2(d_s - 1)); the unique choice that makes the
// m-summed concurrences add up to the marginal mixednesses.
double site_weight(int d);

// C_(m)^2: weighted sum of |minor|^2 over all patterns of m sites, all
// admissible base indices, and all pivots.
double m_flip_concurrence_sq(const StateVector& psi, int m);

// All m-flip concurrences of a pure state and their total, which equals
// the sum of squared subsystem mixednesses.
struct ConcurrenceSpectrum {
  std::map<int, double> per_m;  // m = 2..n
  double total = 0.0;
};

ConcurrenceSpectrum concurrence_spectrum(const StateVector& psi);

// Closed-form 2-qubit concurrence of a pure state: 2|psi00 psi11 - psi01 psi10|.
double wootters_concurrence_pure(const StateVector& psi);

}  // namespace mflip
