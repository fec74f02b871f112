#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <vector>

#include <json.hpp>

namespace logsmooth {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr int kDefaultJ = 12;

struct Grid {
  int J = kDefaultJ;

  explicit Grid(int level = kDefaultJ);
  long N() const { return 1L << J; }
  double x(long n) const { return kTwoPi * static_cast<double>(n) / static_cast<double>(N()); }
  double step() const { return kTwoPi / static_cast<double>(N()); }
};

struct Signal {
  Grid grid;
  std::vector<cplx> values;

  Signal() = default;
  Signal(Grid g, std::vector<cplx> v);
  static Signal from_function(Grid g, const std::function<cplx(double)>& f);
  long N() const { return grid.N(); }
};

// Sparse Fourier coefficients; only nonzero entries are stored.
struct Spectrum {
  std::map<long, cplx> coeffs;

  cplx at(long k) const;
  void set(long k, cplx c);
  // Largest |k| with a stored coefficient, 0 for the empty spectrum.
  long support() const;
  bool empty() const { return coeffs.empty(); }
};

using Multiplier = std::function<cplx(long)>;

Spectrum dft(const Signal& f);
Signal idft(const Spectrum& c, const Grid& g);

double lp_norm(const Signal& f, double p);
// Exact L_2 norm through Parseval.
double l2_norm(const Spectrum& c);
double lp_norm(const Spectrum& c, double p, int J);

Spectrum apply_multiplier(const Spectrum& c, const Multiplier& m);

Spectrum operator+(const Spectrum& a, const Spectrum& b);
Spectrum operator-(const Spectrum& a, const Spectrum& b);
Spectrum operator*(cplx s, const Spectrum& a);

// A real cosine/sine mode helper: a cos(kx) + b sin(kx).
Spectrum trig_mode(long k, double a_cos, double b_sin = 0.0);

void check_exponent(double p);

nlohmann::json to_json(const Signal& f);
nlohmann::json to_json(const Spectrum& c);
Signal signal_from_json(const nlohmann::json& j);
Spectrum spectrum_from_json(const nlohmann::json& j);

}  // namespace logsmooth
