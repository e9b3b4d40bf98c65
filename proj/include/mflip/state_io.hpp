#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "mflip/state.hpp"

namespace mflip {

using StateData = std::variant<StateVector, DensityMatrix>;

// JSON state document:
//   { "dims": [2,2], "kind": "pure",  "amplitudes": [[re,im], ...] }
//   { "dims": [2,2], "kind": "mixed", "matrix": [[[re,im], ...], ...] }
// Amplitudes are row-major over the flat index; the matrix is a list of
// rows. Throws invalid_input with a diagnostic on any malformed content.
StateData read_state_json(std::istream& in);
StateData read_state_file(const std::string& path);

void write_state_json(const StateData& state, std::ostream& out);

// Full analysis report (schema field, per-subsystem triples, concurrences
// or bounds, three-qubit decomposition when applicable, info budget).
std::string analysis_report_json(const StateData& state);

}  // namespace mflip
