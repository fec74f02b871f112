#pragma once

#include <string>
#include <utility>
#include <vector>

#include "logsmooth/core_signal.hpp"

namespace logsmooth {

struct ModulusCurve {
  std::vector<std::pair<double, double>> entries;  // (t, value)
  double order = 1.0;
  double p = 2.0;

  std::string to_csv() const;
};

// Sup over grid shifts 0 < h <= t of ||Delta_h^k f||_p.
double modulus(const Signal& f, int k, double t, double p);

// Running sup of ||Delta_h^k f||_p over grid shifts h = 2 pi m / N up to
// t_max; entry m-1 is the modulus at t = 2 pi m / N.
std::vector<double> modulus_table(const Signal& f, int k, double p, double t_max = kPi);
// Look up a value in a table produced by modulus_table.
double modulus_from_table(const std::vector<double>& table, const Grid& g, double t);

ModulusCurve modulus_curve(const Signal& f, int k, double p, const std::vector<double>& ts);

// L_2 modulus of real order alpha, read off the symbol (2|sin(kh/2)|)^alpha.
double modulus_frac_l2(const Spectrum& f, double alpha, double t);
// Same quantity at a single step h (no sup).
double difference_norm_l2(const Spectrum& f, double alpha, double h);

struct BestApprox {
  double value = 0.0;
  bool exact = true;  // false when the partial-sum surrogate was used
  std::string note;
};

BestApprox best_approx(const Spectrum& f, long n, double p, int J = kDefaultJ);

Spectrum partial_sum(const Spectrum& f, long n);

// Smooth cutoff: 1 on [0,1], 0 on [3/2, inf).
double vp_eta(double u);
Spectrum vallee_poussin(const Spectrum& f, double R);

}  // namespace logsmooth
