#include "logsmooth/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <stdexcept>
#include <tuple>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace logsmooth {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

// Coefficients within the exponent tolerance count as zero where the coordinate overflowed.
double term(double c, double y) {
  if (c == 0.0 || (std::isinf(y) && std::abs(c) < kExponentTol)) return 0.0;
  return c * y;
}

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

// int_0^inf f(y) dy for a decaying integrand; dyadic Gauss-Kronrod if exp_sinh gives up.
double half_line(const std::function<double(double)>& f) {
  thread_local boost::math::quadrature::exp_sinh<double> es;
  try {
    double err = 0.0;
    double v = es.integrate(f, 0.0, kPosInf, 1e-10, &err);
    if (std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  double total = GK::integrate(f, 0.0, 1.0, 12, 1e-12);
  for (double a = 1.0; a < 1e300; a *= 2.0) {
    double piece = GK::integrate(f, a, 2.0 * a, 12, 1e-12);
    total += piece;
    if (std::abs(piece) <= 1e-16 * std::abs(total) && a > 64.0) break;
  }
  return total;
}

}  // namespace

LogPoint LogPoint::at(int level, double x) {
  LogPoint P;
  P.level = level;
  P.x = x;
  if (level == 0) {
    P.u = x;
    P.v = std::log1p(x);
    P.w = std::log1p(P.v);
  } else if (level == 1) {
    P.v = x;
    P.u = x > 709.0 ? kPosInf : std::expm1(x);
    P.w = std::log1p(x);
  } else {
    P.w = x;
    P.v = x > 709.0 ? kPosInf : std::expm1(x);
    P.u = P.v > 709.0 ? kPosInf : std::expm1(P.v);
  }
  return P;
}

LogExpr LogExpr::zero() {
  LogExpr e;
  e.c0 = kNegInf;
  return e;
}

bool LogExpr::is_zero() const { return c0 == kNegInf; }

double LogExpr::eval(const LogPoint& P, bool with_jacobian) const {
  if (is_zero()) return kNegInf;
  double cv_eff = cv + ((with_jacobian && P.level >= 1) ? 1.0 : 0.0);
  double cw_eff = cw + ((with_jacobian && P.level >= 2) ? 1.0 : 0.0);
  double r = c0 + term(cu, P.u) + term(cv_eff, P.v) + term(cw_eff, P.w);
  if (rem && r != kNegInf) r += rem(P);
  if (std::isnan(r)) return kNegInf;
  return r;
}

LogExpr operator+(const LogExpr& a, const LogExpr& b) {
  if (a.is_zero() || b.is_zero()) return LogExpr::zero();
  LogExpr r;
  r.c0 = a.c0 + b.c0;
  r.cu = a.cu + b.cu;
  r.cv = a.cv + b.cv;
  r.cw = a.cw + b.cw;
  if (a.rem && b.rem)
    r.rem = [ra = a.rem, rb = b.rem](const LogPoint& P) { return ra(P) + rb(P); };
  else
    r.rem = a.rem ? a.rem : b.rem;
  return r;
}

LogExpr scaled(const LogExpr& a, double k) {
  if (a.is_zero()) return a;
  LogExpr r;
  r.c0 = k * a.c0;
  r.cu = k * a.cu;
  r.cv = k * a.cv;
  r.cw = k * a.cw;
  if (a.rem) r.rem = [ra = a.rem, k](const LogPoint& P) { return k * ra(P); };
  return r;
}

LogExpr log_sum(const LogExpr& a, const LogExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto key = [](const LogExpr& e) { return std::make_tuple(e.cu, e.cv, e.cw, e.c0); };
  auto close = [](double x, double y) { return std::abs(x - y) <= kExponentTol; };
  bool a_dom;
  if (!close(a.cu, b.cu))
    a_dom = a.cu > b.cu;
  else if (!close(a.cv, b.cv))
    a_dom = a.cv > b.cv;
  else if (!close(a.cw, b.cw))
    a_dom = a.cw > b.cw;
  else
    a_dom = key(a) >= key(b);
  const LogExpr& d = a_dom ? a : b;
  const LogExpr& o = a_dom ? b : a;
  LogExpr r = d;
  r.rem = [d, o](const LogPoint& P) {
    double ld = d.eval(P), lo = o.eval(P);
    double base = d.rem ? d.rem(P) : 0.0;
    if (ld == kNegInf) return base;
    return base + std::log1p(std::exp(std::min(lo - ld, 700.0)));
  };
  return r;
}

bool converges_at_infinity(double A, double B, double C) {
  if (A < -kExponentTol) return true;
  if (A > kExponentTol) return false;
  if (B < -1.0 - kExponentTol) return true;
  if (B > -1.0 + kExponentTol) return false;
  return C < -1.0 - kExponentTol;
}

bool bounded_at_infinity(double A, double B, double C) {
  if (A < -kExponentTol) return true;
  if (A > kExponentTol) return false;
  if (B < -kExponentTol) return true;
  if (B > kExponentTol) return false;
  return C <= kExponentTol;
}

int decay_level(double A, double B, double /*C*/) {
  if (A < -kExponentTol) return 0;
  if (B < -1.0 - kExponentTol) return 1;
  return 2;
}

Exponents tail_exponents(const Exponents& e) {
  if (!converges_at_infinity(e.A, e.B, e.C)) throw std::logic_error("tail of a divergent integrand");
  if (e.A < -kExponentTol) return e;
  if (e.B < -1.0 - kExponentTol) return {0.0, e.B + 1.0, e.C};
  return {0.0, 0.0, e.C + 1.0};
}

double log_tail_integral(const LogExpr& g, const LogPoint& start) {
  if (g.is_zero()) return kNegInf;
  const int lvl = std::max(decay_level(g.cu, g.cv, g.cw), start.level);
  const double x0 = start.coord(lvl);
  if (!std::isfinite(x0)) return kNegInf;
  auto logf = [&](double y) { return g.eval(LogPoint::at(lvl, x0 + y), true); };
  double ref = kNegInf;
  for (int i = 0; i <= 40; ++i) ref = std::max(ref, logf(std::ldexp(1.0, i) - 1.0));
  if (ref == kNegInf) return kNegInf;
  double I = half_line([&](double y) { return std::exp(std::min(logf(y) - ref, 700.0)); });
  if (!(I > 0.0)) return kNegInf;
  return std::log(I) + ref;
}

double range_integral(const LogExpr& g, double u0, double u1) {
  if (g.is_zero() || !(u1 > u0)) return 0.0;
  auto f = [&](double u) { return std::exp(g.eval(LogPoint::from_u(u))); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, u0, u1, 15, 1e-12);
}

double log_sup(const LogExpr& g, double u0, double u1) {
  if (g.is_zero()) return kNegInf;
  double best = kNegInf;
  auto probe = [&](double u) {
    if (u >= u0 && u <= u1) best = std::max(best, g.eval(LogPoint::from_u(u)));
  };
  for (int i = 0; i <= 4000; ++i) probe(u0 + i * 0.0125);
  for (double u = u0 + 50.0; u < 1e300 && u <= u1; u *= 1.05) probe(u);
  if (std::isfinite(u1)) probe(u1);
  // Far out the level-2 coordinate is the only finite one.
  if (!std::isfinite(u1))
    for (double w = 5.0; w < 700.0; w *= 1.1) best = std::max(best, g.eval(LogPoint::at(2, w)));
  return best;
}

LogPoint series_point(const SeriesSpec& s, double n) {
  return LogPoint::from_u(s.log_scale ? std::log(n) : n);
}

Exponents series_exponents(const SeriesSpec& s) {
  return {s.g.cu + (s.log_scale ? 1.0 : 0.0), s.g.cv, s.g.cw};
}

double log_series_tail(const SeriesSpec& s, const LogPoint& start) {
  if (s.g.is_zero()) return kNegInf;
  LogExpr gi = s.g;
  if (s.log_scale) gi.cu += 1.0;
  double logI = log_tail_integral(gi, start);
  return log_add(logI, s.g.eval(start) - std::log(2.0));
}

double series_sum(const SeriesSpec& s) {
  const long M = std::max(s.n0, s.n_direct);
  long double acc = 0.0L;
  for (long n = s.n0; n < M; ++n)
    acc += s.exact ? s.exact(n) : std::exp(s.g.eval(series_point(s, static_cast<double>(n))));
  if (!s.g.is_zero()) acc += std::exp(log_series_tail(s, series_point(s, static_cast<double>(M))));
  return static_cast<double>(acc);
}

namespace {

double envelope_log(const Exponents& e, const LogPoint& P) {
  double r = term(e.A, P.u) + term(e.B, P.v) + term(e.C, P.w);
  return std::isnan(r) ? 0.0 : r;
}

// Outer summand weight * T^r written as a LogExpr, with T = exp(log_tail(P)) ~ envelope T_env.
LogExpr outer_expr(const LogExpr& weight, double r, const Exponents& T_env,
                   std::function<double(const LogPoint&)> log_tail) {
  LogExpr o = weight;
  o.cu += r * T_env.A;
  o.cv += r * T_env.B;
  o.cw += r * T_env.C;
  auto wrem = weight.rem;
  o.rem = [wrem, r, T_env, log_tail](const LogPoint& P) {
    double lt = log_tail(P);
    double extra = lt == kNegInf ? kNegInf : r * (lt - envelope_log(T_env, P));
    if (std::isnan(extra)) extra = 0.0;
    return (wrem ? wrem(P) : 0.0) + extra;
  };
  return o;
}

std::string exps(const Exponents& e) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "(%.6g, %.6g, %.6g)", e.A, e.B, e.C);
  return buf;
}

}  // namespace

NestedResult nested_series(const SeriesSpec& inner, const LogExpr& weight, double r, bool sup) {
  NestedResult res;
  const long M = std::max(inner.n0, inner.n_direct);
  auto exact_f = [&](long n) {
    return inner.exact ? inner.exact(n) : std::exp(inner.g.eval(series_point(inner, static_cast<double>(n))));
  };
  Exponents T_env{0.0, 0.0, 0.0};
  double T_M = 0.0;
  if (!inner.g.is_zero()) {
    Exponents ie = series_exponents(inner);
    if (!converges_at_infinity(ie.A, ie.B, ie.C)) {
      res.finite = false;
      res.reason = "inner tail diverges, exponents " + exps(ie);
      return res;
    }
    T_env = tail_exponents(ie);
    T_M = std::exp(log_series_tail(inner, series_point(inner, static_cast<double>(M))));
  }
  std::vector<double> T(M - inner.n0 + 1, 0.0);
  T[M - inner.n0] = T_M;
  for (long n = M - 1; n >= inner.n0; --n) T[n - inner.n0] = T[n + 1 - inner.n0] + exact_f(n);

  SeriesSpec outer;
  outer.log_scale = inner.log_scale;
  outer.n0 = inner.n0;
  outer.n_direct = inner.n_direct;
  outer.exact = [&](long n) {
    double t = T[n - inner.n0];
    if (t <= 0.0) return 0.0;
    return std::exp(weight.eval(series_point(inner, static_cast<double>(n))) + r * std::log(t));
  };
  if (inner.g.is_zero()) {
    outer.g = LogExpr::zero();
  } else {
    outer.g = outer_expr(weight, r, T_env, [&inner](const LogPoint& P) { return log_series_tail(inner, P); });
  }
  res.outer = {outer.g.cu, outer.g.cv, outer.g.cw};
  if (sup) {
    if (!outer.g.is_zero() && !bounded_at_infinity(outer.g.cu, outer.g.cv, outer.g.cw)) {
      res.finite = false;
      res.reason = "unbounded, exponents " + exps(res.outer);
      return res;
    }
    double best = 0.0;
    for (long n = inner.n0; n < M; ++n) best = std::max(best, outer.exact(n));
    if (!outer.g.is_zero()) {
      double u0 = series_point(inner, static_cast<double>(M)).u;
      best = std::max(best, std::exp(log_sup(outer.g, u0, kPosInf)));
    }
    res.value = best;
    return res;
  }
  if (!outer.g.is_zero()) {
    Exponents oe = series_exponents(outer);
    if (!converges_at_infinity(oe.A, oe.B, oe.C)) {
      res.finite = false;
      res.reason = "outer sum diverges, exponents " + exps(oe);
      return res;
    }
  }
  res.value = series_sum(outer);
  return res;
}

NestedResult nested_integral(const LogExpr& inner, const LogExpr& weight, double r, double u0, double u1,
                             bool sup) {
  NestedResult res;
  if (inner.is_zero()) return res;
  if (std::isfinite(u1)) {
    auto T = [&](double u) { return range_integral(inner, u, u1); };
    if (sup) {
      double best = 0.0;
      for (int i = 0; i <= 2000; ++i) {
        double u = u0 + (u1 - u0) * i / 2000.0;
        double t = T(u);
        if (t > 0.0) best = std::max(best, std::exp(weight.eval(LogPoint::from_u(u))) * std::pow(t, r));
      }
      res.value = best;
      return res;
    }
    auto f = [&](double u) {
      double t = T(u);
      return t > 0.0 ? std::exp(weight.eval(LogPoint::from_u(u))) * std::pow(t, r) : 0.0;
    };
    res.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, u0, u1, 10, 1e-9);
    return res;
  }
  if (!converges_at_infinity(inner.cu, inner.cv, inner.cw)) {
    res.finite = false;
    res.reason = "inner tail diverges, exponents " + exps({inner.cu, inner.cv, inner.cw});
    return res;
  }
  Exponents T_env = tail_exponents({inner.cu, inner.cv, inner.cw});
  LogExpr outer = outer_expr(weight, r, T_env, [inner](const LogPoint& P) { return log_tail_integral(inner, P); });
  res.outer = {outer.cu, outer.cv, outer.cw};
  if (sup) {
    if (!bounded_at_infinity(outer.cu, outer.cv, outer.cw)) {
      res.finite = false;
      res.reason = "unbounded, exponents " + exps(res.outer);
      return res;
    }
    res.value = std::exp(log_sup(outer, u0, kPosInf));
    return res;
  }
  if (!converges_at_infinity(outer.cu, outer.cv, outer.cw)) {
    res.finite = false;
    res.reason = "outer integral diverges, exponents " + exps(res.outer);
    return res;
  }
  res.value = std::exp(log_tail_integral(outer, LogPoint::from_u(u0)));
  return res;
}

}  // namespace logsmooth
