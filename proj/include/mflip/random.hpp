#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace mflip {

// Deterministic random source. The distributions are implemented by hand
// on top of the raw mt19937_64 stream because the standard library does
// not pin down distribution algorithms, and the CLI promises byte-identical
// output for a fixed seed across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; generates pairs, caches one.
  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * uniform();
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  // Unit-rate exponential deviate.
  double exponential() {
    double u = uniform();
    if (u <= 0.0) u = 0x1.0p-53;
    return -std::log(u);
  }

  std::complex<double> complex_gauss() {
    const double re = gauss();
    const double im = gauss();
    return {re, im};
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace mflip
