#pragma once

#include <string>
#include <utility>

#include "logsmooth/core_signal.hpp"

namespace logsmooth {

enum class OperatorKind { Derivative, Riesz, Bessel, FracLap };

struct OperatorSpec {
  OperatorKind kind = OperatorKind::Derivative;
  double param = 1.0;   // m, sigma, sigma or s
  bool solve = false;   // fraclap only: apply the inverse |k|^{-2s}

  static OperatorSpec derivative(int m);
  static OperatorSpec riesz(double sigma);
  static OperatorSpec bessel(double sigma);
  static OperatorSpec fraclap(double s, bool solve = false);
};

std::string operator_name(const OperatorSpec& op);

// Homogeneous multipliers (riesz with sigma < 0, fraclap) need a zero mean.
Spectrum apply_operator(const Spectrum& f, const OperatorSpec& op);

// Dyadic Riemann sum of (int_0^t g(u)^q du/u)^{1/q} on u = t 2^{-i}; q = inf gives the sup.
double dyadic_integral_to_zero(const std::function<double(double)>& g, double t, double q);

// omega_k(f^{(m)}, t)_p against (int_0^t (u^{-m} omega_{k+m}(f,u)_p)^q du/u)^{1/q}.
std::pair<double, double> trebels_bound(const Spectrum& f, int k, int m, double t, double p, double q,
                                        int J = kDefaultJ);
// omega_alpha(J_sigma f, t)_2 against (int_0^t (u^{-sigma} omega_{alpha+sigma}(f,u)_2)^2 du/u)^{1/2}.
std::pair<double, double> riesz_equiv(const Spectrum& f, double sigma, double alpha, double t);
// The same with min{1,t^alpha} ||.||_2 added on each side and the Bessel lift in place of J_sigma.
std::pair<double, double> bessel_equiv(const Spectrum& f, double sigma, double alpha, double t);
// (int_0^t (x^{-2s} omega_{lambda+2s}(u,x)_2)^2 dx/x)^{1/2} against omega_lambda(f,t)_2,
// where u solves (-Delta)^s u = f.
std::pair<double, double> fraclap_equiv(const Spectrum& f, double s, double lambda, double t);

}  // namespace logsmooth
