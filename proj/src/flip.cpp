#include "mflip/flip.hpp"

#include <algorithm>
#include <string>

#include "mflip/errors.hpp"

namespace mflip {

Eigen::MatrixXcd flip_matrix(const FlipOperator& op) {
  if (op.d < 2 || op.k < 0 || op.k >= op.l || op.l >= op.d)
    throw invalid_input("flip_matrix: need 0 <= k < l < d");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(op.d, op.d);
  m(op.k, op.l) = 1.0;
  m(op.l, op.k) = 1.0;
  return m;
}

namespace {

void site_subsets(int n, int m, int first, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == m) {
    out.push_back(current);
    return;
  }
  for (int s = first; s <= n - (m - static_cast<int>(current.size())); ++s) {
    current.push_back(s);
    site_subsets(n, m, s + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<FlipPattern> enumerate_patterns(const Dims& dims, int m) {
  if (m < 2 || m > dims.n())
    throw invalid_input("enumerate_patterns: need 2 <= m <= n, got m = " +
                        std::to_string(m));
  std::vector<std::vector<int>> subsets;
  std::vector<int> scratch;
  site_subsets(dims.n(), m, 0, scratch, subsets);

  std::vector<FlipPattern> patterns;
  for (const auto& sites : subsets) {
    // Odometer over per-site level pairs.
    std::vector<std::vector<std::pair<int, int>>> choices(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i) {
      const int d = dims.dim(sites[i]);
      for (int k = 0; k < d; ++k)
        for (int l = k + 1; l < d; ++l) choices[i].emplace_back(k, l);
    }
    std::vector<std::size_t> pick(sites.size(), 0);
    while (true) {
      FlipPattern p;
      p.sites = sites;
      for (std::size_t i = 0; i < sites.size(); ++i)
        p.level_pairs.push_back(choices[i][pick[i]]);
      patterns.push_back(std::move(p));
      std::size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < choices[i].size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  }
  return patterns;
}

bool is_admissible(const std::vector<int>& coords,
                   const FlipPattern& pattern) {
  for (std::size_t i = 0; i < pattern.sites.size(); ++i) {
    const int a = coords[static_cast<std::size_t>(pattern.sites[i])];
    if (a != pattern.level_pairs[i].first && a != pattern.level_pairs[i].second)
      return false;
  }
  return true;
}

std::vector<std::vector<int>> admissible_indices(const Dims& dims,
                                                 const FlipPattern& pattern) {
  std::vector<std::vector<int>> per_site(static_cast<std::size_t>(dims.n()));
  for (int s = 0; s < dims.n(); ++s) {
    const auto it =
        std::find(pattern.sites.begin(), pattern.sites.end(), s);
    auto& options = per_site[static_cast<std::size_t>(s)];
    if (it == pattern.sites.end()) {
      for (int a = 0; a < dims.dim(s); ++a) options.push_back(a);
    } else {
      const auto& pair =
          pattern.level_pairs[static_cast<std::size_t>(it - pattern.sites.begin())];
      options.push_back(pair.first);
      options.push_back(pair.second);
    }
  }
  std::vector<std::vector<int>> result;
  std::vector<int> coords(static_cast<std::size_t>(dims.n()));
  std::vector<std::size_t> pick(static_cast<std::size_t>(dims.n()), 0);
  while (true) {
    for (int s = 0; s < dims.n(); ++s)
      coords[static_cast<std::size_t>(s)] =
          per_site[static_cast<std::size_t>(s)][pick[static_cast<std::size_t>(s)]];
    result.push_back(coords);
    int s = dims.n() - 1;
    for (; s >= 0; --s) {
      auto& p = pick[static_cast<std::size_t>(s)];
      if (++p < per_site[static_cast<std::size_t>(s)].size()) break;
      p = 0;
    }
    if (s < 0) break;
  }
  return result;
}

std::vector<int> flip_coords(const std::vector<int>& coords,
                             const FlipPattern& pattern,
                             const std::vector<int>& subset) {
  std::vector<int> out = coords;
  for (int i : subset) {
    const auto& pair = pattern.level_pairs[static_cast<std::size_t>(i)];
    int& a = out[static_cast<std::size_t>(pattern.sites[static_cast<std::size_t>(i)])];
    if (a == pair.first)
      a = pair.second;
    else if (a == pair.second)
      a = pair.first;
    else
      throw invalid_input("flip_coords: coordinate not admissible");
  }
  return out;
}

std::vector<int> flip_all(const std::vector<int>& coords,
                          const FlipPattern& pattern) {
  std::vector<int> everything(pattern.sites.size());
  for (std::size_t i = 0; i < everything.size(); ++i)
    everything[i] = static_cast<int>(i);
  return flip_coords(coords, pattern, everything);
}

Complex minor_term(const StateVector& psi, const FlipPattern& pattern,
                   const std::vector<int>& base, int pivot_site) {
  if (!is_admissible(base, pattern))
    throw invalid_input("minor_term: base index not admissible");
  const auto it =
      std::find(pattern.sites.begin(), pattern.sites.end(), pivot_site);
  if (it == pattern.sites.end())
    throw invalid_input("minor_term: pivot must be a pattern site");
  const int pivot = static_cast<int>(it - pattern.sites.begin());

  std::vector<int> rest;
  for (std::size_t i = 0; i < pattern.sites.size(); ++i)
    if (static_cast<int>(i) != pivot) rest.push_back(static_cast<int>(i));

  const Dims& dims = psi.dims();
  const Complex a = psi.amp(flat_index(base, dims));
  const Complex fa = psi.amp(flat_index(flip_all(base, pattern), dims));
  const Complex b =
      psi.amp(flat_index(flip_coords(base, pattern, {pivot}), dims));
  const Complex fb = psi.amp(flat_index(flip_coords(base, pattern, rest), dims));
  return a * fa - b * fb;
}

double site_weight(int d) {
  return static_cast<double>(d) / (2.0 * (static_cast<double>(d) - 1.0));
}

double m_flip_concurrence_sq(const StateVector& psi, int m) {
  const Dims& dims = psi.dims();
  double total = 0.0;
  for (const FlipPattern& pattern : enumerate_patterns(dims, m)) {
    for (const auto& base : admissible_indices(dims, pattern)) {
      for (int site : pattern.sites) {
        const double w = site_weight(dims.dim(site));
        total += w * std::norm(minor_term(psi, pattern, base, site));
      }
    }
  }
  return total;
}

ConcurrenceSpectrum concurrence_spectrum(const StateVector& psi) {
  ConcurrenceSpectrum spectrum;
  for (int m = 2; m <= psi.dims().n(); ++m) {
    const double value = m_flip_concurrence_sq(psi, m);
    spectrum.per_m[m] = value;
    spectrum.total += value;
  }
  return spectrum;
}

double wootters_concurrence_pure(const StateVector& psi) {
  if (psi.dims().local() != std::vector<int>{2, 2})
    throw invalid_input("wootters_concurrence_pure: requires two qubits");
  const auto& v = psi.amplitudes();
  return 2.0 * std::abs(v(0) * v(3) - v(1) * v(2));
}

}  // namespace mflip
