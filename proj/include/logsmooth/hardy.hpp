#pragma once

#include <string>
#include <vector>

#include "logsmooth/random.hpp"

namespace logsmooth {

// Nonnegative step function on (0,1): values[i] on (2^{-i-1}, 2^{-i}], zero below.
struct StepFunction {
  std::vector<double> values;

  double operator()(double t) const;
};

// Weighted Hardy inequalities on (0,1), written with (1 - log t):
//   AverageFromZero:     t^{-lambda} (..)^b int_0^t psi  <~  t^{1-lambda} (..)^b psi
//   AverageToOne:        t^{lambda}  (..)^b int_t^1 psi  <~  t^{1+lambda} (..)^b psi
//   LogAverageFromZero:  (..)^b int_0^t psi  <~  t (..)^{b+1} psi,  needs b + 1/q > 0
//   LogAverageToOne:     (..)^b int_t^1 psi  <~  t (..)^{b+1} psi,  needs b + 1/q < 0
// each measured in L_q(dt/t).  The sequence forms use tails sum_{k >= j} b_k:
//   TailPower:      j^lambda (1+log j)^b,  measure 1/j
//   TailGeometric:  2^{j lambda} (1+j)^b,  counting measure
enum class HardyForm { AverageFromZero, AverageToOne, LogAverageFromZero, LogAverageToOne, TailPower, TailGeometric };

std::string hardy_form_name(HardyForm f);
bool is_sequence_form(HardyForm f);

struct HardyCell {
  HardyForm form = HardyForm::AverageFromZero;
  double lambda = 1.0;
  double q = 1.0;
  double b = 0.0;
};

// Whether the inequality is asserted for these parameters.
bool hardy_applicable(const HardyCell& cell);

struct HardySides {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio() const { return rhs > 0.0 ? lhs / rhs : 0.0; }
};

// Both sides, already raised to 1/q.
HardySides hardy_sides(const StepFunction& psi, const HardyCell& cell);
HardySides hardy_sides(const std::vector<double>& seq, int j0, const HardyCell& cell);

StepFunction random_step_function(Rng& rng, int pieces = 30);
std::vector<double> random_sequence(Rng& rng, int length = 200);

struct HardyCellResult {
  HardyCell cell;
  double max_constant = 0.0;
  int trials = 0;
};

// The standard parameter grid: lambda in {0.5, 1}, q in {1, 2}, b in {-0.5, 0, 1}, plus b = -1.5
// so the LogAverageToOne form has cells to run.  Inapplicable cells are skipped.
std::vector<HardyCell> hardy_grid();
std::vector<HardyCellResult> hardy_suite(int trials, std::uint64_t seed);

}  // namespace logsmooth
