#include "logsmooth/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "logsmooth/errors.hpp"
#include "logsmooth/smoothness.hpp"

namespace logsmooth {

std::string family_name(Family f) {
  switch (f) {
    case Family::BesovDiff: return "besov-diff";
    case Family::BesovFourier: return "besov-fourier";
    case Family::TriebelLizorkin: return "triebel-lizorkin";
    case Family::Sobolev: return "sobolev";
    case Family::LogLipschitz: return "log-lipschitz";
    case Family::ClassicalSobolev: return "classical-sobolev";
    case Family::HeatLambda: return "heat-lambda";
  }
  return "unknown";
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::BesovDiff, Family::BesovFourier, Family::TriebelLizorkin, Family::Sobolev,
                   Family::LogLipschitz, Family::ClassicalSobolev, Family::HeatLambda})
    if (family_name(f) == name) return f;
  throw BadParams("unknown space family '" + name + "'");
}

void validate(const SpaceSpec& spec) {
  check_exponent(spec.p);
  if (!(spec.q > 0.0)) throw BadExponent("fine index q must be positive");
  switch (spec.family) {
    case Family::BesovDiff:
      if (spec.s < 0.0) throw DomainError("difference Besov spaces need s >= 0");
      if (!(spec.k > spec.s))
        throw OrderTooLow("difference order k=" + std::to_string(spec.k) + " must exceed s");
      break;
    case Family::TriebelLizorkin:
    case Family::Sobolev:
      if (!(spec.p > 1.0 && std::isfinite(spec.p))) throw BadExponent("this family needs 1 < p < inf");
      break;
    case Family::LogLipschitz:
      if (spec.k < 1) throw OrderTooLow("Lipschitz order must be >= 1");
      if (std::isinf(spec.q) ? spec.b < 0.0 : !(spec.b > 1.0 / spec.q))
        throw TrivialSpace("log-Lipschitz space needs b > 1/q (b >= 0 when q = inf)");
      break;
    case Family::ClassicalSobolev:
      if (spec.k < 1) throw OrderTooLow("Sobolev order must be >= 1");
      break;
    case Family::HeatLambda:
      if (!(spec.s > 0.0)) throw DomainError("heat Lambda space needs s > 0");
      if (!std::isinf(spec.p)) throw DomainError("heat Lambda space needs p = inf");
      break;
    case Family::BesovFourier:
      break;
  }
}

nlohmann::json to_json(const SpaceSpec& spec) {
  auto num = [](double v) -> nlohmann::json {
    if (std::isinf(v)) return "inf";
    return v;
  };
  return {{"family", family_name(spec.family)}, {"s", spec.s}, {"b", spec.b},
          {"p", num(spec.p)},                   {"q", num(spec.q)}, {"k", spec.k}};
}

nlohmann::json to_json(const NormEstimate& e) {
  return {{"value", e.value},
          {"method", e.method},
          {"spec", to_json(e.spec)},
          {"resolution", {{"J", e.resolution.J}, {"j_max", e.resolution.j_max}, {"t_points", e.resolution.t_points}}},
          {"notes", e.notes}};
}

double partition_phi0(double x) {
  x = std::abs(x);
  if (x <= 1.0) return 1.0;
  if (x >= 2.0) return 0.0;
  auto psi = [](double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; };
  double a = psi(2.0 - x), b = psi(x - 1.0);
  return a / (a + b);
}

double DyadicPartition::at(int j, long k) const {
  if (j < 0 || j > j_max) return 0.0;
  long a = std::labs(k);
  if (a >= static_cast<long>(phi[j].size())) return 0.0;
  return phi[j][a];
}

DyadicPartition make_partition(int j_max) {
  if (j_max < 2) throw BadParams("partition needs j_max >= 2");
  DyadicPartition part;
  part.j_max = j_max;
  const long kmax = 1L << (j_max + 1);
  part.phi.assign(j_max + 1, std::vector<double>(kmax + 1, 0.0));
  for (long k = 0; k <= kmax; ++k) {
    double x = static_cast<double>(k);
    part.phi[0][k] = partition_phi0(x);
    for (int j = 1; j <= j_max; ++j)
      part.phi[j][k] = partition_phi0(std::ldexp(x, -j)) - partition_phi0(std::ldexp(x, -j + 1));
  }
  return part;
}

DyadicPartition partition_for_grid(int J) { return make_partition(J - 2); }

double lq_sum(const std::vector<double>& terms, double q) {
  if (std::isinf(q)) {
    double m = 0.0;
    for (double t : terms) m = std::max(m, t);
    return m;
  }
  double s = 0.0;
  for (double t : terms) s += std::pow(t, q);
  return std::pow(s, 1.0 / q);
}

int difference_j_max(int J) { return J - 3; }

namespace {

double norm_p(const Spectrum& c, double p, int J) {
  if (c.empty()) return 0.0;
  if (p == 2.0) return l2_norm(c);
  return lp_norm(c, p, J);
}

double dyadic_weight(int j, double s, double b) { return std::exp2(j * s) * std::pow(1.0 + j, b); }

void require_family(const SpaceSpec& spec, Family f, const char* method) {
  if (spec.family != f)
    throw BadParams(std::string(method) + " evaluates the " + family_name(f) + " family, got " +
                    family_name(spec.family));
}

NormEstimate make_estimate(double value, const std::string& method, const SpaceSpec& spec, int J, int j_max,
                           int t_points) {
  NormEstimate e;
  e.value = value;
  e.method = method;
  e.spec = spec;
  e.resolution = {J, j_max, t_points};
  return e;
}

std::vector<Spectrum> blocks(const Spectrum& f, const DyadicPartition& part) {
  if (f.support() > (1L << part.j_max))
    throw SupportOverflow("support " + std::to_string(f.support()) + " exceeds 2^" + std::to_string(part.j_max));
  std::vector<Spectrum> out(part.j_max + 1);
  for (const auto& [k, v] : f.coeffs)
    for (int j = 0; j <= part.j_max; ++j) {
      double w = part.at(j, k);
      if (w != 0.0) out[j].set(k, w * v);
    }
  return out;
}

// lp_norm(f) + l_q sum over t = 2^{-j}, j < J, of
// 2^{j s scale} (1+j)^b ||(multiplier at t) f||_p.
NormEstimate semigroup_norm(const Spectrum& f, const SpaceSpec& spec, int J, double scale,
                            const std::function<double(long, double)>& symbol, const std::string& method) {
  std::vector<double> terms;
  for (int j = 0; j < J; ++j) {
    double t = std::ldexp(1.0, -j);
    Spectrum g = apply_multiplier(f, [&](long k) { return cplx(symbol(k, t)); });
    terms.push_back(dyadic_weight(j, spec.s * scale, spec.b) * norm_p(g, spec.p, J));
  }
  double value = norm_p(f, spec.p, J) + lq_sum(terms, spec.q);
  return make_estimate(value, method, spec, J, J - 1, J);
}

}  // namespace

double weierstrass_symbol(long k, double t, double alpha) {
  return std::exp(-std::pow(t * std::abs(static_cast<double>(k)), alpha));
}

double heat_symbol(long k, double t) {
  double kk = static_cast<double>(k);
  return std::exp(-t * kk * kk);
}

double poisson_symbol(long k, double t) { return std::exp(-t * std::abs(static_cast<double>(k))); }

double bochner_riesz_symbol(long k, double t, double lambda, double alpha) {
  double u = std::pow(std::abs(static_cast<double>(k)) * t, alpha);
  return u >= 1.0 ? 0.0 : std::pow(1.0 - u, lambda);
}

double ball_average_symbol(long k, double t, int l) {
  auto sinc = [](double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; };
  auto binom = [](int n, int r) {
    double c = 1.0;
    for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
    return c;
  };
  double sum = 0.0;
  for (int j = 1; j <= l; ++j) {
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binom(2 * l, l - j) * sinc(static_cast<double>(k) * j * t);
  }
  return -2.0 / binom(2 * l, l) * sum;
}

NormEstimate norm_besov_diff(const Signal& f, const SpaceSpec& spec) {
  require_family(spec, Family::BesovDiff, "norm_besov_diff");
  validate(spec);
  const int J = f.grid.J;
  const int jm = difference_j_max(J);
  auto table = modulus_table(f, spec.k, spec.p, 1.0);
  std::vector<double> terms;
  for (int j = 0; j <= jm; ++j)
    terms.push_back(dyadic_weight(j, spec.s, spec.b) * modulus_from_table(table, f.grid, std::ldexp(1.0, -j)));
  double value = lp_norm(f, spec.p) + lq_sum(terms, spec.q);
  auto e = make_estimate(value, "differences", spec, J, jm, jm + 1);
  e.notes.push_back("moduli over grid-commensurate shifts; t = 2^-j stops at the grid step");
  return e;
}

NormEstimate norm_besov_fourier(const Spectrum& f, const SpaceSpec& spec, const DyadicPartition& part, int J) {
  require_family(spec, Family::BesovFourier, "norm_besov_fourier");
  validate(spec);
  auto bl = blocks(f, part);
  std::vector<double> terms;
  for (int j = 0; j <= part.j_max; ++j) terms.push_back(dyadic_weight(j, spec.s, spec.b) * norm_p(bl[j], spec.p, J));
  return make_estimate(lq_sum(terms, spec.q), "fourier", spec, J, part.j_max, part.j_max + 1);
}

NormEstimate norm_triebel_lizorkin(const Spectrum& f, const SpaceSpec& spec, const DyadicPartition& part,
                                   int J) {
  require_family(spec, Family::TriebelLizorkin, "norm_triebel_lizorkin");
  validate(spec);
  auto bl = blocks(f, part);
  Grid g(J);
  std::vector<double> agg(g.N(), 0.0);
  for (int j = 0; j <= part.j_max; ++j) {
    if (bl[j].empty()) continue;
    double w = dyadic_weight(j, spec.s, spec.b);
    Signal s = idft(bl[j], g);
    for (long n = 0; n < g.N(); ++n) {
      double v = w * std::abs(s.values[n]);
      if (std::isinf(spec.q))
        agg[n] = std::max(agg[n], v);
      else
        agg[n] += std::pow(v, spec.q);
    }
  }
  std::vector<cplx> vals(g.N());
  for (long n = 0; n < g.N(); ++n) vals[n] = std::isinf(spec.q) ? agg[n] : std::pow(agg[n], 1.0 / spec.q);
  double value = lp_norm(Signal(g, std::move(vals)), spec.p);
  return make_estimate(value, "triebel-lizorkin", spec, J, part.j_max, part.j_max + 1);
}

NormEstimate norm_sobolev(const Spectrum& f, const SpaceSpec& spec, int J) {
  require_family(spec, Family::Sobolev, "norm_sobolev");
  validate(spec);
  Spectrum g = apply_multiplier(f, [&](long k) {
    double kk = static_cast<double>(k) * static_cast<double>(k);
    return cplx(std::pow(1.0 + kk, spec.s / 2.0) * std::pow(1.0 + std::log1p(kk), spec.b));
  });
  return make_estimate(norm_p(g, spec.p, J), "sobolev", spec, J, 0, 0);
}

NormEstimate norm_lipschitz(const Signal& f, const SpaceSpec& spec) {
  require_family(spec, Family::LogLipschitz, "norm_lipschitz");
  validate(spec);
  const int J = f.grid.J;
  const int jm = difference_j_max(J);
  auto table = modulus_table(f, spec.k, spec.p, 1.0);
  std::vector<double> terms;
  for (int j = 0; j <= jm; ++j)
    terms.push_back(std::exp2(j * spec.k) * std::pow(1.0 + j, -spec.b) *
                    modulus_from_table(table, f.grid, std::ldexp(1.0, -j)));
  double value = lp_norm(f, spec.p) + lq_sum(terms, spec.q);
  return make_estimate(value, "lipschitz", spec, J, jm, jm + 1);
}

NormEstimate norm_truncated_lp(const Spectrum& f, const SpaceSpec& spec, const DyadicPartition& part, int J) {
  require_family(spec, Family::BesovDiff, "norm_truncated_lp");
  validate(spec);
  if (spec.s != 0.0) throw DomainError("truncated Littlewood-Paley form needs s = 0");
  if (!(spec.p > 1.0 && std::isfinite(spec.p))) throw BadExponent("truncated form needs 1 < p < inf");
  if (!(spec.b > -1.0 / spec.q)) throw DomainError("truncated form needs b > -1/q");
  auto bl = blocks(f, part);
  Grid g(J);
  std::vector<double> acc(g.N(), 0.0);
  std::vector<double> terms(part.j_max + 1, 0.0);
  for (int j = part.j_max; j >= 0; --j) {
    if (!bl[j].empty()) {
      Signal s = idft(bl[j], g);
      for (long n = 0; n < g.N(); ++n) acc[n] += std::norm(s.values[n]);
    }
    std::vector<cplx> vals(g.N());
    for (long n = 0; n < g.N(); ++n) vals[n] = std::sqrt(acc[n]);
    terms[j] = std::pow(1.0 + j, spec.b) * lp_norm(Signal(g, std::move(vals)), spec.p);
  }
  return make_estimate(lq_sum(terms, spec.q), "truncated-lp", spec, J, part.j_max, part.j_max + 1);
}

NormEstimate norm_approximation(const Spectrum& f, const SpaceSpec& spec, int J) {
  require_family(spec, Family::BesovDiff, "norm_approximation");
  validate(spec);
  std::vector<double> terms;
  std::string note;
  for (int nu = 0; nu < J; ++nu) {
    auto e = best_approx(f, 1L << nu, spec.p, J);
    if (!e.note.empty()) note = e.note;
    terms.push_back(dyadic_weight(nu, spec.s, spec.b) * e.value);
  }
  double value = norm_p(f, spec.p, J) + lq_sum(terms, spec.q);
  auto est = make_estimate(value, "approximation", spec, J, J - 1, J);
  if (!note.empty()) est.notes.push_back(note);
  return est;
}

NormEstimate norm_weierstrass(const Spectrum& f, const SpaceSpec& spec, double alpha, int J) {
  require_family(spec, Family::BesovDiff, "norm_weierstrass");
  validate(spec);
  if (!(alpha > spec.s)) throw BadOrder("Weierstrass order alpha must exceed s");
  return semigroup_norm(f, spec, J, 1.0,
                        [alpha](long k, double t) { return 1.0 - weierstrass_symbol(k, t, alpha); }, "weierstrass");
}

NormEstimate norm_heat_poisson(const Spectrum& f, const SpaceSpec& spec, SemigroupKernel kernel, int m, int J) {
  require_family(spec, Family::BesovDiff, "norm_heat_poisson");
  validate(spec);
  if (kernel == SemigroupKernel::Heat) {
    if (!(m > spec.s / 2.0)) throw BadOrder("heat kernel needs m > s/2");
    return semigroup_norm(
        f, spec, J, 0.5, [m](long k, double t) { return std::pow(heat_symbol(k, t) - 1.0, m); }, "heat");
  }
  if (!(m > spec.s)) throw BadOrder("Poisson kernel needs m > s");
  return semigroup_norm(
      f, spec, J, 1.0, [m](long k, double t) { return std::pow(poisson_symbol(k, t) - 1.0, m); }, "poisson");
}

NormEstimate norm_bochner_riesz(const Spectrum& f, const SpaceSpec& spec, double lambda, double alpha, int J) {
  require_family(spec, Family::BesovDiff, "norm_bochner_riesz");
  validate(spec);
  if (!(lambda > 0.0)) throw BadOrder("Bochner-Riesz index lambda must be positive");
  if (!(alpha > spec.s)) throw BadOrder("Bochner-Riesz order alpha must exceed s");
  return semigroup_norm(
      f, spec, J, 1.0,
      [lambda, alpha](long k, double t) { return 1.0 - bochner_riesz_symbol(k, t, lambda, alpha); },
      "bochner-riesz");
}

NormEstimate norm_ball_average(const Spectrum& f, const SpaceSpec& spec, int l, int J) {
  require_family(spec, Family::BesovDiff, "norm_ball_average");
  validate(spec);
  if (!(l >= 1 && l > spec.s / 2.0)) throw BadOrder("ball average order l must exceed s/2");
  return semigroup_norm(f, spec, J, 1.0, [l](long k, double t) { return 1.0 - ball_average_symbol(k, t, l); },
                        "ball");
}

NormEstimate norm_lambda_heat(const Spectrum& f, const SpaceSpec& spec, int k, int J) {
  require_family(spec, Family::HeatLambda, "norm_lambda_heat");
  validate(spec);
  if (!(k > spec.s / 2.0)) throw BadOrder("heat Lambda order k must exceed s/2");
  Grid g(J);
  const int per_octave = 8;
  const int lo = -2 * J * per_octave, hi = 8 * per_octave;
  double best = 0.0;
  int points = 0;
  for (int i = lo; i <= hi; ++i, ++points) {
    double t = std::exp2(static_cast<double>(i) / per_octave);
    Spectrum h = apply_multiplier(f, [&](long kk) {
      double x = t * static_cast<double>(kk) * static_cast<double>(kk);
      return cplx(std::pow(-x, k) * std::exp(-x));
    });
    if (h.empty()) continue;
    double w = std::pow(t, -spec.s / 2.0) * std::pow(1.0 + std::abs(std::log(t)), spec.b);
    best = std::max(best, w * lp_norm(idft(h, g), kInf));
  }
  double value = (f.empty() ? 0.0 : lp_norm(idft(f, g), kInf)) + best;
  return make_estimate(value, "lambda-heat", spec, J, 0, points);
}

const std::vector<std::string>& norm_methods() {
  static const std::vector<std::string> names = {
      "differences", "fourier", "triebel-lizorkin", "sobolev",      "lipschitz",     "truncated",  "approximation",
      "weierstrass", "heat",    "poisson",          "bochner-riesz", "ball",          "lambda-heat"};
  return names;
}

NormEstimate norm_by_method(const std::string& method, const Spectrum& f, SpaceSpec spec, int J,
                            const MethodOptions& opt) {
  spec.family = Family::BesovDiff;
  if (method == "differences") return norm_besov_diff(idft(f, Grid(J)), spec);
  if (method == "fourier") {
    spec.family = Family::BesovFourier;
    return norm_besov_fourier(f, spec, partition_for_grid(J), J);
  }
  if (method == "triebel-lizorkin") {
    spec.family = Family::TriebelLizorkin;
    return norm_triebel_lizorkin(f, spec, partition_for_grid(J), J);
  }
  if (method == "sobolev") {
    spec.family = Family::Sobolev;
    return norm_sobolev(f, spec, J);
  }
  if (method == "lipschitz") {
    spec.family = Family::LogLipschitz;
    return norm_lipschitz(idft(f, Grid(J)), spec);
  }
  if (method == "truncated") return norm_truncated_lp(f, spec, partition_for_grid(J), J);
  if (method == "approximation") return norm_approximation(f, spec, J);
  if (method == "weierstrass") return norm_weierstrass(f, spec, opt.alpha, J);
  if (method == "heat") return norm_heat_poisson(f, spec, SemigroupKernel::Heat, opt.m, J);
  if (method == "poisson") return norm_heat_poisson(f, spec, SemigroupKernel::Poisson, opt.m, J);
  if (method == "bochner-riesz") return norm_bochner_riesz(f, spec, opt.lambda, opt.alpha, J);
  if (method == "ball") return norm_ball_average(f, spec, opt.l, J);
  if (method == "lambda-heat") {
    spec.family = Family::HeatLambda;
    return norm_lambda_heat(f, spec, spec.k, J);
  }
  throw BadParams("unknown norm method '" + method + "'");
}

}  // namespace logsmooth
