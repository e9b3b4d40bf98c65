#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace mflip {

// Self-check suites runnable from the CLI. Each prints one line per
// invariant with the maximum observed deviation and PASS/FAIL, and
// returns true iff every invariant passed. Output is byte-identical for
// identical (suite, samples, seed).
//
// Suites: identities, oracles, decomposition, bounds.
bool run_check_suite(const std::string& suite, int samples,
                     std::uint64_t seed, std::ostream& out);

bool is_known_suite(const std::string& suite);

}  // namespace mflip
