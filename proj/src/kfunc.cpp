#include "logsmooth/kfunc.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "logsmooth/errors.hpp"
#include "logsmooth/smoothness.hpp"

namespace logsmooth {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

// (ln 2 sum over u_i = 2^{-i} in [lo, hi] of (u^{-sigma} (1 + i ln 2)^beta omega(u))^q)^{1/q},
// the dyadic Riemann sum of the du/u integral; lo = 0 runs the sum to convergence.
double dyadic_norm(const ModulusLookup& omega, int k, double sigma, double beta, double lo, double hi,
                   double q) {
  const int i_lo = static_cast<int>(std::ceil(-std::log2(hi) - 1e-12));
  const bool to_zero = lo <= 0.0;
  const int i_hi = to_zero ? std::max(i_lo, 0) + 400 : static_cast<int>(std::floor(-std::log2(lo) + 1e-12));
  const bool sup = std::isinf(q);
  double acc = 0.0;
  for (int i = i_lo; i <= i_hi; ++i) {
    double u = std::ldexp(1.0, -i);
    double L = 1.0 + i * kLn2;
    double g = std::exp(-sigma * std::log(u) + beta * std::log(L)) * omega(u);
    if (sup)
      acc = std::max(acc, g);
    else
      acc += std::pow(g, q);
  }
  if (sup) return acc;
  if (to_zero && std::abs(sigma - k) < 1e-12) {
    // Far below the grid u^{-k} omega(u) is constant, leaving sum_i (C L_i^beta)^q.
    double u = std::ldexp(1.0, -i_hi);
    double C = std::pow(u, -sigma) * omega(u);
    double e = beta * q + 1.0;
    if (e >= 0.0) return kInf;
    double L = 1.0 + i_hi * kLn2;
    acc += std::pow(C, q) * std::pow(L, e) / (-e * kLn2);
  }
  return std::pow(kLn2 * acc, 1.0 / q);
}

double one_minus_log(double t) { return 1.0 - std::log(t); }

}  // namespace

ModulusLookup::ModulusLookup(const Signal& f, int k, double p, double t_max)
    : grid_(f.grid), k_(k), table_(modulus_table(f, k, p, std::max(t_max, f.grid.step()))) {}

double ModulusLookup::operator()(double u) const {
  const double h = grid_.step();
  if (u >= h) return modulus_from_table(table_, grid_, u);
  return std::pow(u / h, k_) * table_[0];
}

double k_hilbert_quadratic(const Spectrum& f, const WeightedCouple& couple, double t) {
  if (!(t > 0.0)) throw BadParams("t must be positive");
  double s = 0.0;
  for (const auto& [k, v] : f.coeffs) {
    double tw = t * couple.weight(k);
    double tw2 = tw * tw;
    s += std::norm(v) * (std::isinf(tw2) ? 1.0 : tw2 / (1.0 + tw2));
  }
  return std::sqrt(kTwoPi * s);
}

double k_realization(const Spectrum& f, double alpha, double t, double p, int J) {
  if (!(alpha > 0.0)) throw BadParams("alpha must be positive");
  if (!(t > 0.0 && t <= 1.0)) throw BadParams("t must lie in (0,1]");
  check_exponent(p);
  Spectrum g = vallee_poussin(f, 1.0 / t);
  Spectrum rest = f - g;
  Spectrum lifted = apply_multiplier(g, [alpha](long k) { return cplx(std::pow(std::abs((double)k), alpha)); });
  auto norm = [&](const Spectrum& c) {
    if (c.empty()) return 0.0;
    return p == 2.0 ? l2_norm(c) : lp_norm(c, p, J);
  };
  return norm(rest) + std::pow(t, alpha) * norm(lifted);
}

double k_sobolev_closed_form(const Signal& f, int k, double t, double p) {
  if (!(t > 0.0)) throw BadParams("t must be positive");
  double tt = std::min(t, kPi);
  ModulusLookup omega(f, k, p, tt);
  return std::min(1.0, std::pow(t, k)) * lp_norm(f, p) + omega(tt);
}

KFormula kformula_from_name(const std::string& name) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
  for (int i = 0; i < 7; ++i)
    if (name == names[i]) return static_cast<KFormula>(i);
  throw BadParams("unknown K-functional formula '" + name + "'");
}

std::string kformula_name(KFormula f) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
  return names[static_cast<int>(f)];
}

double KFormulaTerms::total() const {
  double s = 0.0;
  for (const auto& [name, v] : terms) s += v;
  return s;
}

KFormulaTerms holmstedt_formula(const Signal& f, KFormula which, const KFormulaParams& prm, double t) {
  if (!(t > 0.0 && t < 1.0)) throw BadParams("t must lie in (0,1)");
  if (prm.k < 1) throw BadParams("order k must be >= 1");
  check_exponent(prm.p);
  const int k = prm.k;
  const double inv_q = std::isinf(prm.q) ? 0.0 : 1.0 / prm.q;
  const double inv_r = std::isinf(prm.r) ? 0.0 : 1.0 / prm.r;
  auto need_s = [&] {
    if (!(prm.s > 0.0 && prm.s < k)) throw BadParams("this formula needs 0 < s < k");
  };
  auto need_alpha = [&] {
    bool ok = std::isinf(prm.r) ? prm.alpha >= 0.0 : prm.alpha > inv_r;
    if (!ok) throw BadParams("this formula needs alpha > 1/r (alpha >= 0 when r = inf)");
  };
  auto need_b = [&] {
    if (!(prm.b > -inv_q)) throw BadParams("this formula needs b > -1/q");
  };
  if (!(prm.q > 0.0) || !(prm.r > 0.0)) throw BadParams("q and r must be positive");

  const double norm = lp_norm(f, prm.p);
  const ModulusLookup omega(f, k, prm.p, 1.0);
  const double L = one_minus_log(t);
  KFormulaTerms out;
  auto add = [&](const char* name, double v) { out.terms.emplace_back(name, v); };

  switch (which) {
    case KFormula::LpBesov: {
      need_s();
      double w = std::pow(t, prm.s / k) * std::pow(L, prm.b);
      add("lp", w * norm);
      add("integral", w * dyadic_norm(omega, k, prm.s, prm.b, std::pow(t, 1.0 / k), 1.0, prm.q));
      break;
    }
    case KFormula::BesovSobolev: {
      need_s();
      add("lp", std::pow(t, 1.0 - prm.s / k) * std::pow(L, prm.b) * norm);
      add("integral", dyadic_norm(omega, k, prm.s, prm.b, 0.0, std::pow(t, 1.0 / k), prm.q));
      break;
    }
    case KFormula::LpLipschitz: {
      need_alpha();
      double w = std::pow(t, k) * std::pow(L, prm.alpha - inv_r);
      add("lp", w * norm);
      add("modulus", omega(t));
      add("integral", w * dyadic_norm(omega, k, k, -prm.alpha, t, 1.0, prm.r));
      break;
    }
    case KFormula::LogBesovSobolev: {
      need_b();
      add("lp", std::pow(t, k) * std::pow(L, prm.b + inv_q) * norm);
      add("modulus", std::pow(L, prm.b + inv_q) * omega(t));
      add("integral", dyadic_norm(omega, k, 0.0, prm.b, 0.0, t, prm.q));
      break;
    }
    case KFormula::LpLogBesov: {
      need_b();
      double w = std::pow(L, -prm.b - inv_q);
      add("lp", w * norm);
      add("integral", w * dyadic_norm(omega, k, 0.0, prm.b, t, 1.0, prm.q));
      break;
    }
    case KFormula::LipschitzSobolev: {
      need_alpha();
      add("lp", std::pow(L, -prm.alpha + inv_r) * norm);
      add("integral", dyadic_norm(omega, k, k, -prm.alpha, 0.0, t, prm.r));
      break;
    }
    case KFormula::LogBesovLipschitz: {
      need_b();
      need_alpha();
      double w = std::pow(t, k) * std::pow(L, prm.b + inv_q + prm.alpha - inv_r);
      add("lp", w * norm);
      add("modulus", std::pow(L, prm.b + inv_q) * omega(t));
      add("integral-low", dyadic_norm(omega, k, 0.0, prm.b, 0.0, t, prm.q));
      add("integral-high", w * dyadic_norm(omega, k, k, -prm.alpha, t, 1.0, prm.r));
      break;
    }
  }
  return out;
}

double vp_seminorm(const Signal& f, double p) {
  check_exponent(p);
  if (std::isinf(p)) throw BadExponent("V_p needs a finite exponent");
  constexpr long kMaxPoints = 1L << 12;
  double scale = 0.0, imag = 0.0;
  for (const auto& v : f.values) {
    scale = std::max(scale, std::abs(v));
    imag = std::max(imag, std::abs(v.imag()));
  }
  if (imag > 1e-12 * std::max(scale, 1.0)) throw BadParams("V_p seminorm needs a real signal");
  long stride = 1;
  if (f.N() > kMaxPoints) {
    stride = f.N() / kMaxPoints;
    std::cerr << "warning: V_p seminorm subsamples the grid by " << stride << '\n';
  }
  std::vector<double> g;
  for (long n = 0; n < f.N(); n += stride) g.push_back(f.values[n].real());
  const long n = static_cast<long>(g.size());
  // Inserting the global maximum into a cyclic partition never lowers the sum,
  // so the cycle can start there.
  const long s = std::max_element(g.begin(), g.end()) - g.begin();
  std::vector<double> h(n);
  for (long j = 0; j < n; ++j) h[j] = g[(s + j) % n];
  auto cost = [p](double d) {
    d = std::abs(d);
    if (p == 1.0) return d;
    if (p == 2.0) return d * d;
    return std::pow(d, p);
  };
  std::vector<double> best(n, 0.0);
  double answer = 0.0;
  for (long j = 1; j < n; ++j) {
    double b = 0.0;
    for (long i = 0; i < j; ++i) b = std::max(b, best[i] + cost(h[j] - h[i]));
    best[j] = b;
    answer = std::max(answer, b + cost(h[0] - h[j]));
  }
  return std::pow(answer, 1.0 / p);
}

std::pair<double, double> bv_bound_check(const Signal& f, double t, double p) {
  if (!(t > 0.0 && t < 1.0)) throw BadParams("t must lie in (0,1)");
  check_exponent(p);
  const double norm = lp_norm(f, p);
  const ModulusLookup omega(f, 1, p, 1.0);
  const double lo = std::pow(t, p);
  const double sup = dyadic_norm(omega, 1, 1.0 / p, 0.0, lo, 1.0, kInf);
  const double integral = dyadic_norm(omega, 1, 1.0 / p, 0.0, lo, 1.0, 1.0);
  return {t * (norm + sup), t * (norm + integral)};
}

}  // namespace logsmooth
