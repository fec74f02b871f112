#include "logsmooth/hardy.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

#include "logsmooth/errors.hpp"
#include "logsmooth/quadrature.hpp"

namespace logsmooth {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

struct Weights {
  double lhs_power;  // t^{lhs_power} (1 - log t)^b on the averaged side
  double rhs_power;  // t^{rhs_power} (1 - log t)^{rhs_log} psi on the other
  double rhs_log;
  bool from_zero;  // int_0^t rather than int_t^1
};

Weights weights_for(const HardyCell& c) {
  switch (c.form) {
    case HardyForm::AverageFromZero: return {-c.lambda, 1.0 - c.lambda, c.b, true};
    case HardyForm::AverageToOne: return {c.lambda, 1.0 + c.lambda, c.b, false};
    case HardyForm::LogAverageFromZero: return {0.0, 1.0, c.b + 1.0, true};
    case HardyForm::LogAverageToOne: return {0.0, 1.0, c.b + 1.0, false};
    default: throw BadParams("not an integral Hardy form");
  }
}

}  // namespace

std::string hardy_form_name(HardyForm f) {
  switch (f) {
    case HardyForm::AverageFromZero: return "average-from-zero";
    case HardyForm::AverageToOne: return "average-to-one";
    case HardyForm::LogAverageFromZero: return "log-average-from-zero";
    case HardyForm::LogAverageToOne: return "log-average-to-one";
    case HardyForm::TailPower: return "tail-power";
    case HardyForm::TailGeometric: return "tail-geometric";
  }
  return "unknown";
}

bool is_sequence_form(HardyForm f) { return f == HardyForm::TailPower || f == HardyForm::TailGeometric; }

bool hardy_applicable(const HardyCell& c) {
  if (!(c.q >= 1.0)) return false;
  switch (c.form) {
    case HardyForm::LogAverageFromZero: return c.b + 1.0 / c.q > 0.0;
    case HardyForm::LogAverageToOne: return c.b + 1.0 / c.q < 0.0;
    default: return c.lambda > 0.0;
  }
}

double StepFunction::operator()(double t) const {
  if (!(t > 0.0 && t <= 1.0)) return 0.0;
  int i = static_cast<int>(std::floor(-std::log2(t)));
  if (std::ldexp(1.0, -i) < t) --i;  // guard the dyadic endpoints against rounding
  if (i < 0 || i >= static_cast<int>(values.size())) return 0.0;
  return values[i];
}

HardySides hardy_sides(const StepFunction& psi, const HardyCell& cell) {
  if (!hardy_applicable(cell)) throw BadParams("Hardy inequality is not asserted for these parameters");
  const Weights w = weights_for(cell);
  const int K = static_cast<int>(psi.values.size());
  const double q = cell.q;
  // mass[i] = int over piece i, total = int_0^1
  std::vector<double> mass(K);
  double total = 0.0;
  for (int i = 0; i < K; ++i) total += mass[i] = psi.values[i] * std::ldexp(1.0, -i - 1);
  std::vector<double> below(K + 1, 0.0);  // int_0^{2^{-i}} psi
  for (int i = K - 1; i >= 0; --i) below[i] = below[i + 1] + mass[i];

  using GL = boost::math::quadrature::gauss<double, 20>;
  double lhs = 0.0, rhs = 0.0;
  for (int i = 0; i < K; ++i) {
    const double lo = std::ldexp(1.0, -i - 1), v = psi.values[i];
    auto prim = [&](double t) {
      double from_zero = below[i + 1] + v * (t - lo);
      return w.from_zero ? from_zero : total - from_zero;
    };
    lhs += GL::integrate(
        [&](double u) {
          double t = std::exp(-u);
          double x = std::pow(t, w.lhs_power) * std::pow(1.0 + u, cell.b) * prim(t);
          return std::pow(x, q);
        },
        i * kLn2, (i + 1) * kLn2);
    if (v > 0.0)
      rhs += GL::integrate(
          [&](double u) {
            double t = std::exp(-u);
            return std::pow(std::pow(t, w.rhs_power) * std::pow(1.0 + u, w.rhs_log) * v, q);
          },
          i * kLn2, (i + 1) * kLn2);
  }
  if (!w.from_zero && total > 0.0) {
    LogExpr tail;
    tail.c0 = q * std::log(total);
    tail.cu = -w.lhs_power * q;
    tail.cv = cell.b * q;
    lhs += std::exp(log_tail_integral(tail, LogPoint::from_u(K * kLn2)));
  }
  return {std::pow(lhs, 1.0 / q), std::pow(rhs, 1.0 / q)};
}

HardySides hardy_sides(const std::vector<double>& seq, int j0, const HardyCell& cell) {
  if (!is_sequence_form(cell.form)) throw BadParams("not a sequence Hardy form");
  if (!hardy_applicable(cell)) throw BadParams("Hardy inequality is not asserted for these parameters");
  if (j0 < 1) throw BadParams("sequence index must start at j0 >= 1");
  const double q = cell.q;
  const bool power = cell.form == HardyForm::TailPower;
  double lhs = 0.0, rhs = 0.0, tail = 0.0;
  for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i) {
    const double j = j0 + i;
    tail += seq[i];
    double wl = power ? std::pow(j, cell.lambda) * std::pow(1.0 + std::log(j), cell.b)
                      : std::exp2(j * cell.lambda) * std::pow(1.0 + j, cell.b);
    double wr = power ? j * wl : wl;
    double mu = power ? 1.0 / j : 1.0;
    lhs += std::pow(wl * tail, q) * mu;
    rhs += std::pow(wr * seq[i], q) * mu;
  }
  return {std::pow(lhs, 1.0 / q), std::pow(rhs, 1.0 / q)};
}

StepFunction random_step_function(Rng& rng, int pieces) {
  StepFunction f;
  f.values.assign(pieces, 0.0);
  // Power-like envelope t^{-gamma} with random jitter and gaps.
  const double gamma = rng.uniform(-1.5, 1.5);
  const double density = rng.uniform(0.2, 1.0);
  for (int i = 0; i < pieces; ++i)
    if (rng.coin(density)) f.values[i] = std::exp2(gamma * i) * std::exp(rng.normal());
  f.values[rng.integer(0, pieces - 1)] += std::exp2(gamma * 0.5 * pieces);
  return f;
}

std::vector<double> random_sequence(Rng& rng, int length) {
  std::vector<double> s(length, 0.0);
  const bool geometric = rng.coin();
  const double rate = geometric ? rng.uniform(0.0, 2.0) : rng.uniform(-1.0, 3.0);
  const double density = rng.uniform(0.2, 1.0);
  for (int i = 0; i < length; ++i) {
    if (!rng.coin(density)) continue;
    double j = i + 1.0;
    double env = geometric ? std::exp2(-rate * j) : std::pow(j, -rate);
    s[i] = env * std::exp(rng.normal());
  }
  s[rng.integer(0, length - 1)] += 1.0;
  return s;
}

std::vector<HardyCell> hardy_grid() {
  std::vector<HardyCell> cells;
  for (HardyForm f : {HardyForm::AverageFromZero, HardyForm::AverageToOne, HardyForm::LogAverageFromZero,
                      HardyForm::LogAverageToOne, HardyForm::TailPower, HardyForm::TailGeometric}) {
    bool uses_lambda = f != HardyForm::LogAverageFromZero && f != HardyForm::LogAverageToOne;
    for (double lambda : {0.5, 1.0}) {
      if (!uses_lambda && lambda != 1.0) continue;
      for (double q : {1.0, 2.0})
        for (double b : {-1.5, -0.5, 0.0, 1.0}) {
          HardyCell c{f, lambda, q, b};
          if (hardy_applicable(c)) cells.push_back(c);
        }
    }
  }
  return cells;
}

std::vector<HardyCellResult> hardy_suite(int trials, std::uint64_t seed) {
  std::vector<HardyCellResult> out;
  std::uint64_t index = 0;
  for (const HardyCell& c : hardy_grid()) {
    Rng rng(seed + 7919 * index++);
    HardyCellResult r{c, 0.0, trials};
    for (int t = 0; t < trials; ++t) {
      HardySides s = is_sequence_form(c.form) ? hardy_sides(random_sequence(rng), 1, c)
                                              : hardy_sides(random_step_function(rng), c);
      r.max_constant = std::max(r.max_constant, s.ratio());
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace logsmooth
