#pragma once

#include <functional>
#include <string>

namespace logsmooth {

// A point on the half line u >= 0 described at one of three scales:
// level 0 uses u, level 1 uses v = log(1+u), level 2 uses w = log(1+v).
// Coordinates below the chosen level may overflow to +inf.
struct LogPoint {
  int level = 0;
  double x = 0.0;
  double u = 0.0, v = 0.0, w = 0.0;

  static LogPoint at(int level, double x);
  static LogPoint from_u(double u) { return at(0, u); }
  double coord(int lvl) const { return lvl == 0 ? u : (lvl == 1 ? v : w); }
};

// log g(u) = c0 + cu*u + cv*v + cw*w + rem(P), rem bounded as u -> inf.
struct LogExpr {
  double c0 = 0.0, cu = 0.0, cv = 0.0, cw = 0.0;
  std::function<double(const LogPoint&)> rem;

  static LogExpr zero();
  bool is_zero() const;
  // Value of log g at P; with_jacobian adds log du/dx for P's level.
  double eval(const LogPoint& P, bool with_jacobian = false) const;
};

// Product, power and sum of the represented functions.
LogExpr operator+(const LogExpr& a, const LogExpr& b);
LogExpr scaled(const LogExpr& a, double r);
LogExpr log_sum(const LogExpr& a, const LogExpr& b);

// Zero is compared with this tolerance in every exponent test.
inline constexpr double kExponentTol = 1e-9;

// int_0^inf e^{A u}(1+u)^B(1+log(1+u))^C du < inf.
bool converges_at_infinity(double A, double B, double C);
// Sup of the same expression over u >= 0 is finite.
bool bounded_at_infinity(double A, double B, double C);
// Coarsest substitution level under which a convergent tail decays exponentially.
int decay_level(double A, double B, double C);

// Exponents (A', B', C') with int_u^inf g ~ e^{A'u}(1+u)^{B'}(..)^{C'}; requires convergence.
struct Exponents {
  double A = 0.0, B = 0.0, C = 0.0;
};
Exponents tail_exponents(const Exponents& e);

// log int_{start}^inf g(u) du; the tail must converge.
double log_tail_integral(const LogExpr& g, const LogPoint& start);
// int_{u0}^{u1} g(u) du over a finite range.
double range_integral(const LogExpr& g, double u0, double u1);
// Numerical sup of g over [u0, u1] (u1 may be inf).
double log_sup(const LogExpr& g, double u0, double u1);

// Sum of f(n) over integers n >= n0, where log f(n) = g at u(n) and u(n) = log n
// (log_scale) or u(n) = n.  Exact summation up to n_direct, then
// int_{n_direct}^inf f + f(n_direct)/2.
struct SeriesSpec {
  LogExpr g;
  bool log_scale = true;
  long n0 = 1;
  long n_direct = 1L << 14;
  std::function<double(long)> exact;  // exact term for n < n_direct; defaults to exp(g)
};
double series_sum(const SeriesSpec& s);
// log of sum_{k >= n} f(k) for a real n >= n_direct, via the integral approximation.
double log_series_tail(const SeriesSpec& s, const LogPoint& start);
// LogPoint at integer index n under the chosen scale.
LogPoint series_point(const SeriesSpec& s, double n);
// Exponents of the integrand int f(t) dt in the u variable.
Exponents series_exponents(const SeriesSpec& s);

// sum_{n >= n0} e^{weight(n)} (sum_{k >= n} f(k))^r with f described by inner;
// with sup set, the sup over n replaces the outer sum.
struct NestedResult {
  bool finite = true;
  double value = 0.0;
  Exponents outer;  // exponents of the outer summand (finite case)
  std::string reason;
};
NestedResult nested_series(const SeriesSpec& inner, const LogExpr& weight, double r, bool sup = false);
// Continuous analogue on [u0, u1]: int e^{weight(u)} (int_u^{u1} e^{inner})^r du.
NestedResult nested_integral(const LogExpr& inner, const LogExpr& weight, double r, double u0, double u1,
                             bool sup = false);

}  // namespace logsmooth
