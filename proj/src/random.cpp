#include "logsmooth/random.hpp"

#include <cmath>

namespace logsmooth {

double Rng::uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

long Rng::integer(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(bits() % span);
}

double Rng::normal() {
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

Spectrum random_spectrum(Rng& rng, const SpectrumLaw& law) {
  const long K = rng.integer(law.k_min, law.k_max);
  Spectrum c;
  for (long k = 1; k <= K; ++k) {
    double amp = std::pow(static_cast<double>(k), -law.decay) * rng.uniform(0.5, 1.5);
    double phase = rng.uniform(0.0, kTwoPi);
    cplx v = std::polar(amp, phase);
    c.set(k, v);
    c.set(-k, std::conj(v));
  }
  double c0 = rng.uniform(-1.0, 1.0);
  if (!law.zero_mean) c.set(0, c0);
  return c;
}

}  // namespace logsmooth
