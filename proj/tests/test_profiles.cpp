#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "logsmooth/errors.hpp"
#include "logsmooth/norms.hpp"
#include "logsmooth/profiles.hpp"
#include "logsmooth/random.hpp"

using namespace logsmooth;

namespace {

// The convergence rule for t^A (1+|log t|)^B (1+log(1+|log t|))^C dt/t at infinity,
// transcribed separately from the library's version.
bool converges_at_inf(double A, double B, double C) {
  if (A != 0) return A < 0;
  if (B != -1) return B < -1;
  return C < -1;
}

// Composite Simpson in u = |log t| over [0, U].
template <class F>
double simpson(F f, double U, int n) {
  double h = U / n, s = f(0.0) + f(U);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

PowerLogProfile window_profile(double beta) {
  PowerLogProfile F;
  F.inner = {1.0, -0.5, -beta, 0.0};
  F.outer = F.inner;
  return F;
}

}  // namespace

TEST_CASE("finiteness oracle") {
  CHECK(finiteness_oracle(-0.5, 0, 0, End::Infinity));
  CHECK(finiteness_oracle(0, -1, -1.2, End::Infinity));
  CHECK_FALSE(finiteness_oracle(0, -1, -1, End::Infinity));
  CHECK(finiteness_oracle(0.5, 3, 0, End::Zero));
  CHECK_FALSE(finiteness_oracle(-0.5, -3, 0, End::Zero));

  Rng rng(41);
  const double grid[] = {-2, -1, -0.5, 0, 0.5, 1, 2};
  for (int trial = 0; trial < 500; ++trial) {
    double A = grid[rng.integer(0, 6)], B = grid[rng.integer(0, 6)], C = grid[rng.integer(0, 6)];
    CHECK(finiteness_oracle(A, B, C, End::Infinity) == converges_at_inf(A, B, C));
    CHECK(finiteness_oracle(A, B, C, End::Zero) == converges_at_inf(-A, B, C));
  }
}

TEST_CASE("power-log integrals") {
  auto v = powerlog_integral({1.0, -1.0, 0, 0}, 1.0, kInf);
  REQUIRE(v.finite);
  CHECK(*v.value == doctest::Approx(1.0).epsilon(1e-6));
  v = powerlog_integral({1.0, 0, -2.0, 0}, 0.0, 1.0);
  REQUIRE(v.finite);
  CHECK(*v.value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_FALSE(powerlog_integral({1.0, 0, -1.0, 0}, 1.0, kInf).finite);
  CHECK_THROWS_AS(powerlog_integral({1.0, 0, 0, 0}, 2.0, 1.0), BadParams);

  // all three factors active, against Simpson in u
  PLTerm g{2.0, 0.5, 1.5, -0.7};
  auto in = [](double u) { return 2.0 * std::exp(-0.5 * u) * std::pow(1 + u, 1.5) * std::pow(1 + std::log1p(u), -0.7); };
  v = powerlog_integral(g, 0.0, 1.0);
  REQUIRE(v.finite);
  CHECK(*v.value == doctest::Approx(simpson(in, 150.0, 300000)).epsilon(1e-6));
  // finite range crossing t = 1
  auto both = [&](double u) { return in(u); };
  v = powerlog_integral(g, 0.25, 2.0);
  double expect = simpson(both, std::log(4.0), 2000) +
                  simpson([](double u) { return 2.0 * std::exp(0.5 * u) * std::pow(1 + u, 1.5) * std::pow(1 + std::log1p(u), -0.7); },
                          std::log(2.0), 2000);
  CHECK(*v.value == doctest::Approx(expect).epsilon(1e-8));
}

TEST_CASE("power-log series") {
  auto v = powerlog_series({1.0, -2.0, 0, 0});
  REQUIRE(v.finite);
  CHECK(*v.value == doctest::Approx(kPi * kPi / 6).epsilon(1e-9));
  v = powerlog_series({1.0, -1.5, 0, 0});
  REQUIRE(v.finite);
  CHECK(*v.value == doctest::Approx(2.612375348685488).epsilon(1e-9));
  CHECK_FALSE(powerlog_series({1.0, -1.0, 0, 0}).finite);
  CHECK(powerlog_series({1.0, -1.0, -2.0, 0}).finite);
  CHECK_FALSE(powerlog_series({1.0, -1.0, -1.0, 0}).finite);
  CHECK(powerlog_series({1.0, -1.0, -1.0, -1.5}).finite);
}

TEST_CASE("general monotone check") {
  CoeffSeq harmonic;
  harmonic.law = PLTerm{1.0, -1.0, 0, 0};
  CHECK(gm_check(harmonic, 500) == doctest::Approx(0.5).epsilon(1e-12));
  CoeffSeq constant;
  constant.law = PLTerm{1.0, 0, 0, 0};
  CHECK(gm_check(constant, 100) == 0.0);
  CoeffSeq alternating;
  for (int i = 0; i < 400; ++i) alternating.list.push_back(i % 2 ? 2.0 : 1.0);
  double c10 = gm_check(alternating, 10), c100 = gm_check(alternating, 100);
  CHECK(c100 > 5 * c10);
  CoeffSeq gap;
  gap.list = {1.0, 0.0, 1.0};
  CHECK_THROWS_AS(gm_check(gap, 1), ZeroValue);

  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    CoeffSeq dec;
    double x = 1.0;
    for (int i = 0; i < 200; ++i) dec.list.push_back(x *= rng.uniform(0.5, 1.0));
    CHECK(gm_check(dec, 100) <= 1.0 + 1e-12);
  }
}

TEST_CASE("profile characterizations") {
  // beta = 0.625 sits in the window (1/2, 3/4) for p = 2, q = 4, b = 0
  PowerLogProfile F = window_profile(0.625);
  CHECK_FALSE(gm_besov_diff_char(F, 1, 0, 0, 2, 4).finite);
  CHECK(gm_sobolev_char(F, 1, 0, 0, 2).finite);
  CHECK(gm_besov_diff_char(PowerLogProfile::indicator(1.0), 1, 0.5, 0.3, 2, 2).finite);

  PowerLogProfile inner_only;
  inner_only.inner = {1.0, -0.1, 0, 0};
  auto v = gm_besov_diff_char(inner_only, 1, 0, 0, 2, 4);
  REQUIRE(v.finite);
  CHECK(*v.value == doctest::Approx(std::sqrt(1.25)).epsilon(1e-6));

  v = hl_norm(PowerLogProfile::indicator(1.0), 1, 2);
  REQUIRE(v.finite);
  CHECK(*v.value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_FALSE(hl_norm(window_profile(0.0), 1, 2).finite);
  auto z = hl_norm(PowerLogProfile::zero(), 1, 2);
  CHECK(z.finite);
  CHECK(*z.value == 0.0);
  CHECK_THROWS_AS(hl_norm(F, 1, 1.0), BadExponent);
  CHECK_THROWS_AS(gm_besov_diff_char(F, 1, -0.5, 0, 2, 2), BadExponent);

  // Indicator(2^nu): Fourier-analytic B^{0,b}_{2,2} grows like 2^{nu/2} (1+nu)^b
  for (double b : {0.0, 0.7}) {
    double prev = 0.0;
    for (int nu = 2; nu <= 10; nu += 2) {
      auto w = gm_besov_fourier_char(PowerLogProfile::indicator(std::exp2(nu)), 1, 0, b, 2, 2);
      REQUIRE(w.finite);
      double scaled = *w.value / (std::exp2(nu / 2.0) * std::pow(1.0 + nu, b));
      if (prev > 0) CHECK(scaled / prev == doctest::Approx(1.0).epsilon(0.5));
      prev = scaled;
    }
  }
}

TEST_CASE("profile characterizations agree at positive s") {
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    PowerLogProfile F;
    F.inner = {1.0, rng.uniform(-0.4, 1.0), rng.uniform(-2, 2), 0};
    F.outer = {1.0, rng.uniform(-3.0, -0.5), rng.uniform(-2, 2), rng.uniform(-1, 1)};
    double s = rng.uniform(0.1, 1.5), b = rng.uniform(-1, 1), q = rng.coin() ? 2.0 : kInf;
    auto x = gm_besov_diff_char(F, 1, s, b, 2, q), y = gm_besov_fourier_char(F, 1, s, b, 2, q);
    CHECK(x.finite == y.finite);
  }
}

TEST_CASE("sequence characterizations") {
  GMSequence delta;
  delta.a.list = {1.0};
  auto v = gm_seq_besov_char(delta, 0, 0, 2, 2);
  REQUIRE(v.finite);
  CHECK(*v.value == doctest::Approx(1.0));

  GMSequence slow;
  slow.a.law = PLTerm{1.0, -0.5, -0.75, 0};
  CHECK(gm_seq_besov_char(slow, 0, 0, 2, 2).finite);
  GMSequence critical;
  critical.a.law = PLTerm{1.0, -0.5, 0, 0};
  CHECK_FALSE(gm_seq_besov_char(critical, 0, 0, 2, 2).finite);
  CHECK_FALSE(gm_seq_sobolev_char(critical, 0, 0, 2).finite);

  GMSequence beta1, beta2;
  beta1.a.law = PLTerm{1.0, -0.5, -1.0, 0};
  beta2.a.law = PLTerm{1.0, -0.5, -2.0, 0};
  CHECK_FALSE(gm_seq_bbesov_char(beta1, 0, 0, 2, 1).finite);
  CHECK(gm_seq_bbesov_char(beta2, 0, 0, 2, 1).finite);
  CHECK(gm_seq_bbesov_char(delta, 0, 0, 2, 1).finite);
  CHECK_THROWS_AS(gm_seq_besov_char(delta, 0, 0, 1.0, 2), BadExponent);

  // s = 0 nested form against a direct double sum for a finite list
  GMSequence list;
  for (int n = 1; n <= 40; ++n) list.a.list.push_back(1.0 / n);
  double direct = 0.0;
  for (int j = 1; j <= 40; ++j) {
    double tail = 0.0;
    for (int n = j; n <= 40; ++n) tail += std::pow(1.0 / n, 2.0);
    direct += std::pow(1 + std::log(j), 0.5) * std::sqrt(tail) / j;
  }
  v = gm_seq_bbesov_char(list, 0, 0.5, 2, 1);
  REQUIRE(v.finite);
  CHECK(*v.value == doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("realized series against the Sobolev formula at p = 2") {
  Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    GMSequence seq;
    double x = 1.0;
    for (int n = 0; n < 60; ++n) seq.a.list.push_back(x *= rng.uniform(0.6, 1.0));
    double s = rng.uniform(0.0, 1.5);
    auto v = gm_seq_sobolev_char(seq, s, 0, 2);
    REQUIRE(v.finite);
    Spectrum c = realize(seq, 60);
    CHECK(std::abs(c.at(3) - seq.a.list[2] / 2.0) < 1e-15);
    double direct = norm_sobolev(c, {Family::Sobolev, s, 0, 2, 2, 1}, 10).value;
    CHECK(direct / *v.value < 10.0);
    CHECK(*v.value / direct < 10.0);
  }
}

TEST_CASE("profile json") {
  PowerLogProfile F = window_profile(0.3);
  F.cutoff = 8.0;
  PowerLogProfile G = profile_from_json(to_json(F));
  CHECK(G.inner.b == -0.3);
  CHECK(G.cutoff == 8.0);
  CHECK(G(0.5) == doctest::Approx(F(0.5)));
  CHECK(G(9.0) == 0.0);
  CHECK(profile_from_json(to_json(PowerLogProfile::indicator(4.0))).is_indicator());
  CHECK_THROWS_AS(profile_from_json({{"inner", {{"C", -1.0}}}}), BadParams);
}
