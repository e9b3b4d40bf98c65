#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "mflip/state.hpp"

namespace mflip {

// Named three-qubit parameter families.
//   bisep:    (|00> + |11>)/sqrt2 (x) (cos a |0> + sin a |1>)
//   phi_w:    sin a / sqrt3 (|001> + |010> + |100>) + cos a |111>
//   psi_wghz: sin a / sqrt3 (|001> + |010> + |100>)
//               + cos a / sqrt2 (|000> + |111>)
//   ghzw_mix: sin^2(a/2) rho_W + cos^2(a/2) rho_GHZ   (mixed)
enum class Family { bisep, phi_w, psi_wghz, ghzw_mix };

struct FamilySpec {
  Family name = Family::bisep;
  double alpha = 0.0;
};

Family family_from_string(const std::string& name);
std::string family_name(Family family);

std::variant<StateVector, DensityMatrix> make_state(const FamilySpec& spec);

// Canonical fixed states used across tests and tools.
StateVector ghz_state();
StateVector w_state();
StateVector bell_state();

struct SweepRow {
  double alpha = 0.0;
  double local_info = 0.0;  // I
  double e12 = 0.0;
  double e13 = 0.0;
  double e23 = 0.0;
  double e2_total = 0.0;
  double e3 = 0.0;
  double residual = 0.0;    // 3 - I - e2_total - e3
  double c2_sq = 0.0;       // bound-based estimate for the mixed family
  double c3_sq = 0.0;
  bool estimate = false;
};

// Uniform inclusive grid of `steps` >= 2 points over [alpha_start,
// alpha_end]. Errors from individual rows are re-thrown with the
// offending alpha in the message.
std::vector<SweepRow> sweep(Family family, double alpha_start,
                            double alpha_end, int steps);

// CSV with header alpha,I,E12,E13,E23,E2,E3,R,C2sq,C3sq; 12 significant
// digits, one newline-terminated row per grid point.
void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace mflip
