#include "logsmooth/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "logsmooth/errors.hpp"

namespace logsmooth {

namespace {

std::vector<double> binomial_row(int k) {
  std::vector<double> c(k + 1, 1.0);
  for (int j = 1; j <= k; ++j) c[j] = c[j - 1] * static_cast<double>(k - j + 1) / j;
  return c;
}

double difference_norm(const Signal& f, int k, long m, double p, const std::vector<double>& binom) {
  const long N = f.N();
  std::vector<cplx> d(N);
  for (long n = 0; n < N; ++n) {
    cplx acc = 0.0;
    for (int j = 0; j <= k; ++j) {
      double sign = (j % 2 == 0) ? 1.0 : -1.0;
      acc += sign * binom[j] * f.values[(n + static_cast<long>(k - j) * m) % N];
    }
    d[n] = acc;
  }
  return lp_norm(Signal(f.grid, std::move(d)), p);
}

long max_shift(const Grid& g, double t) {
  long m = static_cast<long>(std::floor(t / g.step() + 1e-9));
  return std::min(m, g.N() / 2);
}

}  // namespace

std::string ModulusCurve::to_csv() const {
  std::ostringstream os;
  os.precision(12);
  os << "t,value\n";
  for (const auto& [t, v] : entries) os << t << ',' << v << '\n';
  return os.str();
}

double modulus(const Signal& f, int k, double t, double p) {
  check_exponent(p);
  if (k < 1) throw BadOrder("difference order must be >= 1");
  long mmax = max_shift(f.grid, t);
  if (mmax < 1) throw StepTooSmall("t=" + std::to_string(t) + " is below the grid step");
  auto binom = binomial_row(k);
  double best = 0.0;
  for (long m = 1; m <= mmax; ++m) best = std::max(best, difference_norm(f, k, m, p, binom));
  return best;
}

std::vector<double> modulus_table(const Signal& f, int k, double p, double t_max) {
  check_exponent(p);
  if (k < 1) throw BadOrder("difference order must be >= 1");
  auto binom = binomial_row(k);
  const long half = std::max(1L, max_shift(f.grid, t_max));
  std::vector<double> table(half);
  double best = 0.0;
  for (long m = 1; m <= half; ++m) {
    best = std::max(best, difference_norm(f, k, m, p, binom));
    table[m - 1] = best;
  }
  return table;
}

double modulus_from_table(const std::vector<double>& table, const Grid& g, double t) {
  long m = max_shift(g, t);
  if (m < 1) throw StepTooSmall("t=" + std::to_string(t) + " is below the grid step");
  if (m > static_cast<long>(table.size())) throw BadParams("t exceeds the range of the modulus table");
  return table[m - 1];
}

ModulusCurve modulus_curve(const Signal& f, int k, double p, const std::vector<double>& ts) {
  ModulusCurve c;
  c.order = k;
  c.p = p;
  double t_max = 0.0;
  for (double t : ts) t_max = std::max(t_max, t);
  auto table = modulus_table(f, k, p, t_max);
  for (double t : ts) c.entries.emplace_back(t, modulus_from_table(table, f.grid, t));
  return c;
}

double difference_norm_l2(const Spectrum& f, double alpha, double h) {
  double s = 0.0;
  for (const auto& [k, v] : f.coeffs) {
    if (k == 0) continue;
    double sym = 2.0 * std::abs(std::sin(0.5 * static_cast<double>(k) * h));
    s += std::pow(sym, 2.0 * alpha) * std::norm(v);
  }
  return std::sqrt(kTwoPi * s);
}

double modulus_frac_l2(const Spectrum& f, double alpha, double t) {
  if (!(alpha > 0.0)) throw BadOrder("fractional order must be positive");
  if (!(t > 0.0)) throw StepTooSmall("t must be positive");
  // Every symbol term increases on (0, t] once t max|k| <= pi, so the sup sits at h = t.
  long k_max = 0;
  for (const auto& [k, v] : f.coeffs)
    if (v != cplx(0.0)) k_max = std::max(k_max, std::labs(k));
  if (t * static_cast<double>(k_max) <= kPi) return difference_norm_l2(f, alpha, t);
  constexpr int kPoints = 512;
  double best = 0.0;
  for (int i = 1; i <= kPoints; ++i)
    best = std::max(best, difference_norm_l2(f, alpha, t * i / kPoints));
  return best;
}

Spectrum partial_sum(const Spectrum& f, long n) {
  Spectrum out;
  for (const auto& [k, v] : f.coeffs)
    if (std::labs(k) < n) out.coeffs.emplace(k, v);
  return out;
}

BestApprox best_approx(const Spectrum& f, long n, double p, int J) {
  check_exponent(p);
  if (n < 1) throw BadOrder("degree must be >= 1");
  Spectrum tail = f - partial_sum(f, n);
  BestApprox r;
  if (p == 2.0) {
    r.value = l2_norm(tail);
    return r;
  }
  r.value = lp_norm(tail, p, J);
  r.exact = false;
  if (p == 1.0 || std::isinf(p))
    r.note = "partial-sum surrogate; equivalent to the best approximation only for 1<p<inf";
  else
    r.note = "partial-sum surrogate";
  return r;
}

double vp_eta(double u) {
  u = std::abs(u);
  if (u <= 1.0) return 1.0;
  if (u >= 1.5) return 0.0;
  auto psi = [](double v) { return v > 0.0 ? std::exp(-1.0 / v) : 0.0; };
  double a = psi(1.5 - u), b = psi(u - 1.0);
  return a / (a + b);
}

Spectrum vallee_poussin(const Spectrum& f, double R) {
  if (!(R > 0.0)) throw BadParams("R must be positive");
  return apply_multiplier(f, [R](long k) { return cplx(vp_eta(static_cast<double>(k) / R)); });
}

}  // namespace logsmooth
