#include "logsmooth/operators.hpp"

#include <algorithm>
#include <cmath>

#include "logsmooth/errors.hpp"
#include "logsmooth/kfunc.hpp"
#include "logsmooth/smoothness.hpp"

namespace logsmooth {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

void require_zero_mean(const Spectrum& f, const char* what) {
  double scale = 0.0;
  for (const auto& [k, v] : f.coeffs) scale = std::max(scale, std::abs(v));
  if (std::abs(f.at(0)) > 1e-14 * std::max(scale, 1.0))
    throw ZeroModeError(std::string(what) + " needs a zero-mean input");
}

}  // namespace

OperatorSpec OperatorSpec::derivative(int m) {
  if (m < 0) throw BadParams("derivative order must be a natural number");
  return {OperatorKind::Derivative, static_cast<double>(m), false};
}

OperatorSpec OperatorSpec::riesz(double sigma) { return {OperatorKind::Riesz, sigma, false}; }

OperatorSpec OperatorSpec::bessel(double sigma) { return {OperatorKind::Bessel, sigma, false}; }

OperatorSpec OperatorSpec::fraclap(double s, bool solve) {
  if (!(s > 0.0 && s < 1.0)) throw BadParams("fractional Laplacian needs 0 < s < 1");
  return {OperatorKind::FracLap, s, solve};
}

std::string operator_name(const OperatorSpec& op) {
  switch (op.kind) {
    case OperatorKind::Derivative: return "derivative";
    case OperatorKind::Riesz: return "riesz";
    case OperatorKind::Bessel: return "bessel";
    case OperatorKind::FracLap: return op.solve ? "fraclap-solve" : "fraclap";
  }
  return "";
}

Spectrum apply_operator(const Spectrum& f, const OperatorSpec& op) {
  const double a = op.param;
  switch (op.kind) {
    case OperatorKind::Derivative: {
      const int m = static_cast<int>(a);
      return apply_multiplier(f, [m](long k) {
        static const cplx powers[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
        return powers[m % 4] * std::pow(static_cast<double>(k), m);
      });
    }
    case OperatorKind::Riesz:
      if (a < 0.0) require_zero_mean(f, "negative-order Riesz potential");
      return apply_multiplier(f, [a](long k) {
        return k == 0 ? cplx(0.0) : cplx(std::pow(std::abs(static_cast<double>(k)), a));
      });
    case OperatorKind::Bessel:
      return apply_multiplier(f, [a](long k) {
        double kk = static_cast<double>(k);
        return cplx(std::pow(1.0 + kk * kk, a / 2.0));
      });
    case OperatorKind::FracLap: {
      if (!(a > 0.0 && a < 1.0)) throw BadParams("fractional Laplacian needs 0 < s < 1");
      require_zero_mean(f, "fractional Laplacian");
      const double e = op.solve ? -2.0 * a : 2.0 * a;
      return apply_multiplier(f, [e](long k) {
        return k == 0 ? cplx(0.0) : cplx(std::pow(std::abs(static_cast<double>(k)), e));
      });
    }
  }
  return f;
}

double dyadic_integral_to_zero(const std::function<double(double)>& g, double t, double q) {
  const bool sup = std::isinf(q);
  double acc = 0.0;
  for (int i = 0; i < 400; ++i) {
    double v = g(t * std::ldexp(1.0, -i));
    double term = sup ? v : std::pow(v, q);
    if (sup)
      acc = std::max(acc, term);
    else
      acc += term;
    // Band-limited inputs make the integrand decay geometrically near zero.
    if (i > 8 && term <= 1e-18 * std::max(acc, 1e-300)) break;
  }
  return sup ? acc : std::pow(kLn2 * acc, 1.0 / q);
}

std::pair<double, double> trebels_bound(const Spectrum& f, int k, int m, double t, double p, double q,
                                        int J) {
  if (k < 1 || m < 0) throw BadParams("need k >= 1 and m >= 0");
  if (!(t > 0.0)) throw BadParams("t must be positive");
  check_exponent(p);
  if (!(q > 0.0)) throw BadParams("q must be positive");
  const Spectrum d = apply_operator(f, OperatorSpec::derivative(m));
  if (p == 2.0) {
    double lhs = modulus_frac_l2(d, k, t);
    double rhs = dyadic_integral_to_zero(
        [&](double u) { return std::pow(u, -m) * modulus_frac_l2(f, k + m, u); }, t, q);
    return {lhs, rhs};
  }
  const Grid grid(J);
  const double tt = std::min(t, kPi);
  double lhs = ModulusLookup(idft(d, grid), k, p, tt)(tt);
  ModulusLookup omega(idft(f, grid), k + m, p, tt);
  double rhs = dyadic_integral_to_zero([&](double u) { return std::pow(u, -m) * omega(std::min(u, kPi)); }, t, q);
  return {lhs, rhs};
}

std::pair<double, double> riesz_equiv(const Spectrum& f, double sigma, double alpha, double t) {
  if (!(alpha > 0.0) || !(alpha + sigma > 0.0)) throw BadParams("need alpha > 0 and alpha + sigma > 0");
  if (!(t > 0.0)) throw BadParams("t must be positive");
  const Spectrum g = apply_operator(f, OperatorSpec::riesz(sigma));
  double lhs = modulus_frac_l2(g, alpha, t);
  double rhs = dyadic_integral_to_zero(
      [&](double u) { return std::pow(u, -sigma) * modulus_frac_l2(f, alpha + sigma, u); }, t, 2.0);
  return {lhs, rhs};
}

std::pair<double, double> bessel_equiv(const Spectrum& f, double sigma, double alpha, double t) {
  if (!(alpha > 0.0) || !(alpha + sigma > 0.0)) throw BadParams("need alpha > 0 and alpha + sigma > 0");
  if (!(t > 0.0)) throw BadParams("t must be positive");
  const Spectrum g = apply_operator(f, OperatorSpec::bessel(sigma));
  const double w = std::min(1.0, std::pow(t, alpha));
  double lhs = w * l2_norm(g) + modulus_frac_l2(g, alpha, t);
  double rhs = w * l2_norm(f) +
               dyadic_integral_to_zero(
                   [&](double u) { return std::pow(u, -sigma) * modulus_frac_l2(f, alpha + sigma, u); }, t, 2.0);
  return {lhs, rhs};
}

std::pair<double, double> fraclap_equiv(const Spectrum& f, double s, double lambda, double t) {
  if (!(lambda > 0.0)) throw BadParams("lambda must be positive");
  if (!(t > 0.0)) throw BadParams("t must be positive");
  const Spectrum u = apply_operator(f, OperatorSpec::fraclap(s, true));
  double lhs = dyadic_integral_to_zero(
      [&](double x) { return std::pow(x, -2.0 * s) * modulus_frac_l2(u, lambda + 2.0 * s, x); }, t, 2.0);
  return {lhs, modulus_frac_l2(f, lambda, t)};
}

}  // namespace logsmooth
