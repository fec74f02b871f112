#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "logsmooth/errors.hpp"
#include "logsmooth/hardy.hpp"

using namespace logsmooth;

namespace {

const double kLn2 = std::log(2.0);

// psi = 1 on (1/2, 1], zero below.
StepFunction top_piece() { return StepFunction{{1.0}}; }

// Direct sums for the sequence forms, indices j0 .. j0 + n - 1.
HardySides direct_tail(const std::vector<double>& s, int j0, const HardyCell& c) {
  double lhs = 0, rhs = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    double j = j0 + double(i), tail = 0;
    for (size_t k = i; k < s.size(); ++k) tail += s[k];
    if (c.form == HardyForm::TailPower) {
      double w = std::pow(j, c.lambda) * std::pow(1 + std::log(j), c.b);
      lhs += std::pow(w * tail, c.q) / j;
      rhs += std::pow(j * w * s[i], c.q) / j;
    } else {
      double w = std::exp2(j * c.lambda) * std::pow(1 + j, c.b);
      lhs += std::pow(w * tail, c.q);
      rhs += std::pow(w * s[i], c.q);
    }
  }
  return {std::pow(lhs, 1 / c.q), std::pow(rhs, 1 / c.q)};
}

}  // namespace

TEST_CASE("step function evaluation") {
  StepFunction f{{1.0, 2.0, 3.0}};
  CHECK(f(1.0) == 1.0);
  CHECK(f(0.75) == 1.0);
  CHECK(f(0.5) == 2.0);
  CHECK(f(0.3) == 2.0);
  CHECK(f(0.25) == 3.0);
  CHECK(f(0.2) == 3.0);
  CHECK(f(0.125) == 0.0);
  CHECK(f(0.1) == 0.0);
  CHECK(f(1.5) == 0.0);
}

TEST_CASE("integral forms on a single piece") {
  // int_{1/2}^1 (t - 1/2) t^{-2} dt = log 2 - 1/2, against int_{1/2}^1 dt/t
  HardySides s = hardy_sides(top_piece(), {HardyForm::AverageFromZero, 1.0, 1.0, 0.0});
  CHECK(s.lhs == doctest::Approx(kLn2 - 0.5).epsilon(1e-12));
  CHECK(s.rhs == doctest::Approx(kLn2).epsilon(1e-12));
  // int_0^{1/2} 1/2 dt + int_{1/2}^1 (1 - t) dt = 3/8 = int_{1/2}^1 t dt
  s = hardy_sides(top_piece(), {HardyForm::AverageToOne, 1.0, 1.0, 0.0});
  CHECK(s.lhs == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(s.rhs == doctest::Approx(0.375).epsilon(1e-12));
  s = hardy_sides(top_piece(), {HardyForm::LogAverageFromZero, 1.0, 1.0, 0.0});
  CHECK(s.lhs == doctest::Approx(0.5 - 0.5 * kLn2).epsilon(1e-12));
  CHECK(s.rhs == doctest::Approx(1.0 - 0.5 * kLn2).epsilon(1e-12));
  // q = 2: int_{1/2}^1 (t - 1/2)^2 t^{-3} dt = log 2 - 5/8
  s = hardy_sides(top_piece(), {HardyForm::AverageFromZero, 1.0, 2.0, 0.0});
  CHECK(s.lhs == doctest::Approx(std::sqrt(kLn2 - 0.625)).epsilon(1e-12));
  // the tail below the last piece: int_0^{1/2} (1/2)^2 (1 - log t)^{-3} dt/t = 1/8 (1 + log 2)^{-2}
  s = hardy_sides(top_piece(), {HardyForm::LogAverageToOne, 1.0, 2.0, -1.5});
  double piece = 0.0;
  for (int i = 0; i < 200000; ++i) {
    double t = 0.5 + (i + 0.5) * 0.5 / 200000;
    piece += std::pow(1 - std::log(t), -3.0) * (1 - t) * (1 - t) / t * 0.5 / 200000;
  }
  CHECK(s.lhs == doctest::Approx(std::sqrt(piece + 0.125 / std::pow(1 + kLn2, 2))).epsilon(1e-8));
}

TEST_CASE("applicability") {
  CHECK(hardy_applicable({HardyForm::AverageFromZero, 0.5, 1, 3}));
  CHECK_FALSE(hardy_applicable({HardyForm::AverageFromZero, 0.0, 1, 0}));
  CHECK_FALSE(hardy_applicable({HardyForm::AverageToOne, 1.0, 0.5, 0}));
  CHECK(hardy_applicable({HardyForm::LogAverageFromZero, 1, 2, -0.4}));
  CHECK_FALSE(hardy_applicable({HardyForm::LogAverageFromZero, 1, 2, -0.5}));
  CHECK(hardy_applicable({HardyForm::LogAverageToOne, 1, 2, -0.6}));
  CHECK_FALSE(hardy_applicable({HardyForm::LogAverageToOne, 1, 1, -1.0}));
  CHECK_THROWS_AS(hardy_sides(top_piece(), {HardyForm::LogAverageToOne, 1, 1, 0}), BadParams);
  CHECK_THROWS_AS(hardy_sides(top_piece(), {HardyForm::TailPower, 1, 1, 0}), BadParams);
  CHECK_THROWS_AS(hardy_sides(std::vector<double>{1.0}, 1, {HardyForm::AverageToOne, 1, 1, 0}), BadParams);
  CHECK_THROWS_AS(hardy_sides(std::vector<double>{1.0}, 0, {HardyForm::TailPower, 1, 1, 0}), BadParams);
  for (const HardyCell& c : hardy_grid()) CHECK(hardy_applicable(c));
}

TEST_CASE("sequence forms against direct sums") {
  Rng rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> s = random_sequence(rng, 50);
    int j0 = int(rng.integer(1, 5));
    for (HardyForm f : {HardyForm::TailPower, HardyForm::TailGeometric}) {
      HardyCell c{f, rng.uniform(0.3, 1.5), rng.coin() ? 1.0 : 2.0, rng.uniform(-1, 1)};
      HardySides a = hardy_sides(s, j0, c), b = direct_tail(s, j0, c);
      CHECK(a.lhs == doctest::Approx(b.lhs).epsilon(1e-12));
      CHECK(a.rhs == doctest::Approx(b.rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("homogeneity of both sides") {
  Rng rng(52);
  StepFunction f = random_step_function(rng, 20), g = f;
  for (double& v : g.values) v *= 3.0;
  for (const HardyCell& c : hardy_grid()) {
    if (is_sequence_form(c.form)) continue;
    HardySides a = hardy_sides(f, c), b = hardy_sides(g, c);
    CHECK(b.lhs == doctest::Approx(3 * a.lhs).epsilon(1e-12));
    CHECK(b.rhs == doctest::Approx(3 * a.rhs).epsilon(1e-12));
  }
}

TEST_CASE("empirical constants stay bounded") {
  for (const HardyCellResult& r : hardy_suite(100, 5)) {
    CHECK_MESSAGE(r.max_constant <= 100.0, hardy_form_name(r.cell.form));
    CHECK(r.max_constant > 0.0);
  }
}
