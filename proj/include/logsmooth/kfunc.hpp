#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "logsmooth/core_signal.hpp"

namespace logsmooth {

// The couple (L_2, {f : w f^ in l_2}) given by multiplier weights w_k >= 0.
struct WeightedCouple {
  std::function<double(long)> weight;
};

// Exact quadratic K-functional: (2 pi sum |c_k|^2 t^2 w_k^2 / (1 + t^2 w_k^2))^{1/2}.
double k_hilbert_quadratic(const Spectrum& f, const WeightedCouple& couple, double t);

// ||f - eta_{1/t} f||_p + t^alpha || |k|^alpha eta_{1/t} f ||_p with the de la Vallee-Poussin cutoff.
double k_realization(const Spectrum& f, double alpha, double t, double p, int J = kDefaultJ);

// min{1, t^k} ||f||_p + omega_k(f, min(t, pi))_p
double k_sobolev_closed_form(const Signal& f, int k, double t, double p);

enum class KFormula {
  LpBesov,         // (i)   (L_p, B^{s,b}_{p,q})
  BesovSobolev,    // (ii)  (B^{s,b}_{p,q}, W^k_p)
  LpLipschitz,     // (iii) (L_p, Lip^{(k,-alpha)}_{p,r})
  LogBesovSobolev, // (iv)  (B^{0,b}_{p,q}, W^k_p)
  LpLogBesov,      // (v)   (L_p, B^{0,b}_{p,q})
  LipschitzSobolev,// (vi)  (Lip^{(k,-alpha)}_{p,r}, W^k_p)
  LogBesovLipschitz// (vii) (B^{0,b}_{p,q}, Lip^{(k,-alpha)}_{p,r})
};

KFormula kformula_from_name(const std::string& name);  // "i" .. "vii"
std::string kformula_name(KFormula f);

struct KFormulaParams {
  int k = 1;
  double p = 2.0;
  double s = 0.5;
  double b = 0.0;
  double q = 2.0;
  double alpha = 1.0;
  double r = kInf;
};

struct KFormulaTerms {
  std::vector<std::pair<std::string, double>> terms;
  double total() const;
};

// Right-hand side of the two-sided K-functional estimate, inner integrals discretized on
// u = 2^{-i}; below the grid step the modulus is extended by (u/h)^k omega_k(f,h).
KFormulaTerms holmstedt_formula(const Signal& f, KFormula which, const KFormulaParams& prm, double t);

// sup over cyclic sub-partitions of the grid of (sum |f(x_{i+1}) - f(x_i)|^p)^{1/p}.
// Grids above 2^12 points are subsampled (a warning goes to stderr).
double vp_seminorm(const Signal& f, double p);

// Lower and upper bounds for K(t, f; L_p, V_p) / t expressed through omega_1, times t.
std::pair<double, double> bv_bound_check(const Signal& f, double t, double p);

// omega_k(f, u)_p for any u > 0 on a precomputed table; below the grid step the
// modulus is extended by (u/h)^k omega_k(f,h).
class ModulusLookup {
 public:
  ModulusLookup(const Signal& f, int k, double p, double t_max = 1.0);
  double operator()(double u) const;

 private:
  Grid grid_;
  int k_;
  std::vector<double> table_;
};

}  // namespace logsmooth
