#pragma once

#include <cstdint>
#include <random>

#include "logsmooth/core_signal.hpp"

namespace logsmooth {

// Deterministic across platforms: draws use raw mt19937_64 bits, not std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  double uniform();  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  long integer(long lo, long hi);  // inclusive
  double normal();
  bool coin(double p_true = 0.5) { return uniform() < p_true; }

 private:
  std::mt19937_64 engine_;
};

struct SpectrumLaw {
  long k_min = 8, k_max = 128;  // range of the cutoff frequency K
  double decay = 1.2;           // amplitude |k|^{-decay}
  bool zero_mean = false;
};

// Real signal: c_{-k} = conj(c_k), |c_k| = |k|^{-decay} U[0.5,1.5], uniform phase, |k| <= K.
Spectrum random_spectrum(Rng& rng, const SpectrumLaw& law = {});

}  // namespace logsmooth
