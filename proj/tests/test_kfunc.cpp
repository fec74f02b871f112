#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "logsmooth/errors.hpp"
#include "logsmooth/kfunc.hpp"
#include "logsmooth/random.hpp"
#include "logsmooth/smoothness.hpp"

using namespace logsmooth;

namespace {

const double kSqrtPi = std::sqrt(kPi);

double grid_cos_modulus(double t, int J) {
  Grid g(J);
  long m = std::lround(std::floor(t / g.step() + 1e-9));
  return 2 * std::sin(m * g.step() / 2) * kSqrtPi;
}

// min over splittings f = (f - g) + g with g_k = theta_k c_k of ||f - g||_2^2 + t^2 ||w g||_2^2,
// by coordinate sweeps of a theta grid; ||f - g||_2 is taken from grid samples.
double brute_k2(const Spectrum& f, const WeightedCouple& w, double t, const Grid& grid) {
  std::vector<long> ks;
  for (const auto& [k, v] : f.coeffs) ks.push_back(k);
  std::vector<double> theta(ks.size(), 0.5);
  auto objective = [&] {
    Spectrum g, rest;
    double smooth = 0.0;
    for (size_t i = 0; i < ks.size(); ++i) {
      cplx c = f.at(ks[i]);
      g.set(ks[i], theta[i] * c);
      rest.set(ks[i], (1 - theta[i]) * c);
      smooth += std::norm(theta[i] * c * w.weight(ks[i]));
    }
    double r = lp_norm(idft(rest, grid), 2.0);
    return r * r + t * t * kTwoPi * smooth;
  };
  for (int sweep = 0; sweep < 3; ++sweep)
    for (size_t i = 0; i < ks.size(); ++i) {
      double best = 1e300, arg = 0.0;
      for (int m = 0; m <= 1000; ++m) {
        theta[i] = m / 1000.0;
        double v = objective();
        if (v < best) best = v, arg = theta[i];
      }
      theta[i] = arg;
    }
  return std::sqrt(objective());
}

// Every cyclic sub-partition of 8 points, enumerated as subsets.
double brute_vp(const std::vector<double>& x, double p) {
  const int n = int(x.size());
  double best = 0.0;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<double> pts;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) pts.push_back(x[i]);
    double s = 0.0;
    for (size_t i = 0; i < pts.size(); ++i) s += std::pow(std::abs(pts[(i + 1) % pts.size()] - pts[i]), p);
    best = std::max(best, s);
  }
  return std::pow(best, 1.0 / p);
}

}  // namespace

TEST_CASE("quadratic K-functional") {
  WeightedCouple w{[](long k) { return double(std::abs(k)); }};
  Spectrum c = trig_mode(3, 1.0);
  double t = 0.2, tw2 = 0.36;
  CHECK(k_hilbert_quadratic(c, w, t) == doctest::Approx(std::sqrt(kTwoPi * 0.5 * tw2 / (1 + tw2))).epsilon(1e-14));
  CHECK(k_hilbert_quadratic(c, w, 1e8) == doctest::Approx(l2_norm(c)).epsilon(1e-12));
  CHECK_THROWS_AS(k_hilbert_quadratic(c, w, 0.0), BadParams);

  Rng rng(71);
  Grid grid(6);
  for (int trial = 0; trial < 3; ++trial) {
    Spectrum f;
    for (int i = 0; i < 8; ++i) f.set(rng.integer(-20, 20), std::polar(rng.uniform(0.2, 1.0), rng.uniform(0, kTwoPi)));
    double tt = rng.uniform(0.02, 0.5);
    CHECK(k_hilbert_quadratic(f, w, tt) == doctest::Approx(brute_k2(f, w, tt, grid)).epsilon(1e-3));
  }
}

TEST_CASE("realization K-functional") {
  Spectrum cosine = trig_mode(1, 1.0);
  CHECK(k_realization(cosine, 1.0, 0.5, 2.0) == doctest::Approx(0.5 * kSqrtPi).epsilon(1e-14));
  CHECK(k_realization(trig_mode(3, 1.0), 2.0, 0.25, 2.0) == doctest::Approx(0.0625 * 9 * kSqrtPi).epsilon(1e-14));
  // everything above the cutoff: the whole norm sits in the first term
  CHECK(k_realization(trig_mode(8, 1.0), 1.0, 1.0, 2.0) == doctest::Approx(kSqrtPi).epsilon(1e-14));
  CHECK_THROWS_AS(k_realization(cosine, 1.0, 1.5, 2.0), BadParams);

  Rng rng(72);
  WeightedCouple w{[](long k) { return std::abs(double(k)); }};
  for (int trial = 0; trial < 5; ++trial) {
    Spectrum f = random_spectrum(rng, {8, 128, 1.0, true});
    for (double t = 1.0; t > 1e-3; t /= 2) {
      double r = k_realization(f, 1.0, t, 2.0, 10) / k_hilbert_quadratic(f, w, t);
      CHECK(r <= 4.0);
      CHECK(r >= 0.25);
    }
  }
}

TEST_CASE("Sobolev closed form") {
  const int J = 12;
  Signal constant = Signal::from_function(Grid(J), [](double) { return 2.0; });
  CHECK(k_sobolev_closed_form(constant, 2, 0.3, 2.0) == doctest::Approx(0.09 * 2 * std::sqrt(kTwoPi)).epsilon(1e-12));
  Signal cosine = idft(trig_mode(1, 1.0), Grid(J));
  CHECK(k_sobolev_closed_form(cosine, 1, 1.0, 2.0) == doctest::Approx(kSqrtPi + grid_cos_modulus(1.0, J)).epsilon(1e-10));
  CHECK(k_sobolev_closed_form(cosine, 1, 1.0, 2.0) == doctest::Approx(kSqrtPi + 2 * std::sin(0.5) * kSqrtPi).epsilon(1e-3));
  CHECK(k_sobolev_closed_form(cosine, 1, 1e-9, 2.0) < 1e-8);
}

TEST_CASE("K is nondecreasing and K(t)/t nonincreasing") {
  Rng rng(73);
  WeightedCouple w{[](long k) { return double(k * k); }};
  for (int trial = 0; trial < 10; ++trial) {
    Spectrum f = random_spectrum(rng);
    double prev = 0.0, prev_ratio = kInf;
    for (double t = 1e-4; t < 10; t *= 1.5) {
      double k = k_hilbert_quadratic(f, w, t);
      CHECK(k >= prev * (1 - 1e-12));
      CHECK(k / t <= prev_ratio * (1 + 1e-12));
      prev = k, prev_ratio = k / t;
    }
  }
}

TEST_CASE("two-sided formulas") {
  const int J = 12;
  Signal constant = Signal::from_function(Grid(J), [](double) { return 1.0; });
  for (int i = 0; i < 7; ++i) {
    KFormulaParams prm;
    prm.b = 0.5;
    KFormulaTerms terms = holmstedt_formula(constant, KFormula(i), prm, 0.3);
    for (const auto& [name, v] : terms.terms)
      if (name != "lp") CHECK_MESSAGE(v < 1e-12, name);
    CHECK(kformula_from_name(kformula_name(KFormula(i))) == KFormula(i));
  }

  Signal cosine = idft(trig_mode(1, 1.0), Grid(J));
  KFormulaParams prm;
  prm.alpha = 0.0;
  KFormulaTerms terms = holmstedt_formula(cosine, KFormula::LpLipschitz, prm, 0.5);
  double w = grid_cos_modulus(0.5, J);
  CHECK(terms.total() == doctest::Approx(0.5 * kSqrtPi + w + 0.5 * 2 * w).epsilon(1e-10));

  // b = 0 is reached continuously
  Rng rng(74);
  Signal f = idft(random_spectrum(rng), Grid(J));
  KFormulaParams a, b;
  a.b = 0.0;
  b.b = 1e-7;
  CHECK(holmstedt_formula(f, KFormula::LpBesov, a, 0.1).total() ==
        doctest::Approx(holmstedt_formula(f, KFormula::LpBesov, b, 0.1).total()).epsilon(1e-5));
  CHECK_THROWS_AS(holmstedt_formula(f, KFormula::LpBesov, [] { KFormulaParams p; p.s = 2; return p; }(), 0.1), BadParams);
  CHECK_THROWS_AS(holmstedt_formula(f, KFormula::LpLogBesov, [] { KFormulaParams p; p.b = -0.6; return p; }(), 0.1), BadParams);
  CHECK_THROWS_AS(holmstedt_formula(f, KFormula::LpBesov, a, 1.0), BadParams);
  CHECK_THROWS_AS(kformula_from_name("viii"), BadParams);
}

TEST_CASE("p-variation") {
  Grid g(3);
  CHECK(vp_seminorm(Signal::from_function(g, [](double) { return 4.0; }), 1.0) == 0.0);
  std::vector<cplx> spike(8, 0.0);
  spike[1] = 1.0;
  CHECK(vp_seminorm(Signal(g, spike), 1.0) == doctest::Approx(2.0));
  CHECK(vp_seminorm(Signal(g, spike), 2.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(vp_seminorm(Signal(g, spike), kInf), BadExponent);
  spike[2] = cplx(0.0, 1.0);
  CHECK_THROWS_AS(vp_seminorm(Signal(g, spike), 1.0), BadParams);

  Rng rng(75);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> x(8);
    std::vector<cplx> v(8);
    for (int i = 0; i < 8; ++i) v[i] = x[i] = rng.normal();
    for (double p : {1.0, 1.5, 2.0, 3.0})
      CHECK(vp_seminorm(Signal(g, v), p) == doctest::Approx(brute_vp(x, p)).epsilon(1e-12));
  }
}

TEST_CASE("bounded-variation bounds") {
  Grid g(10);
  Signal constant = Signal::from_function(g, [](double) { return 3.0; });
  auto [lo, hi] = bv_bound_check(constant, 0.25, 2.0);
  CHECK(lo == doctest::Approx(0.25 * 3 * std::sqrt(kTwoPi)).epsilon(1e-12));
  CHECK(hi == doctest::Approx(lo).epsilon(1e-12));
  Rng rng(76);
  Signal f = idft(random_spectrum(rng, {8, 64, 1.0, false}), g);
  for (double t : {0.5, 0.1, 0.01}) {
    auto [a, b] = bv_bound_check(f, t, 2.0);
    CHECK(a > 0.0);
    CHECK(a <= b * (1 + 1e-12));
  }
  CHECK_THROWS_AS(bv_bound_check(f, 1.0, 2.0), BadParams);
}

TEST_CASE("modulus lookup") {
  Rng rng(77);
  Grid g(9);
  Signal f = idft(random_spectrum(rng, {8, 64, 1.0, false}), g);
  ModulusLookup omega(f, 2, 2.0, 1.0);
  for (long m : {1L, 5L, 40L}) CHECK(omega(m * g.step()) == doctest::Approx(modulus(f, 2, m * g.step(), 2.0)).epsilon(1e-12));
  CHECK(omega(g.step() / 4) == doctest::Approx(modulus(f, 2, g.step(), 2.0) / 16).epsilon(1e-12));
}
