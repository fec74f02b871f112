#include "logsmooth/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "logsmooth/errors.hpp"

namespace logsmooth {

namespace {

constexpr long kDirectTerms = 1L << 14;

std::string triple(double A, double B, double C) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "(%.6g, %.6g, %.6g)", A, B, C);
  return buf;
}

// The term as a function of u = |log t| on the piece t <= 1 (inner) or t >= 1.
LogExpr expr_of(const PLTerm& g, bool inner) {
  if (g.is_zero()) return LogExpr::zero();
  LogExpr e;
  e.c0 = std::log(g.C);
  e.cu = inner ? -g.a : g.a;
  e.cv = g.b;
  e.cw = g.c;
  return e;
}

LogExpr weight_expr(double A, double B) {
  LogExpr e;
  e.cu = A;
  e.cv = B;
  return e;
}

// int over u in [ua, ub) of e^{expr}; ub may be inf, in which case convergence is decided first.
FiniteVerdict u_integral(const LogExpr& e, double ua, double ub, const std::string& where) {
  if (e.is_zero() || !(ub > ua)) return FiniteVerdict::of(0.0);
  if (std::isfinite(ub)) return FiniteVerdict::of(range_integral(e, ua, ub));
  if (!converges_at_infinity(e.cu, e.cv, e.cw))
    return FiniteVerdict::divergent("divergent at " + where + ", exponents " + triple(e.cu, e.cv, e.cw));
  return FiniteVerdict::of(std::exp(log_tail_integral(e, LogPoint::from_u(ua))));
}

FiniteVerdict plus(const FiniteVerdict& x, const FiniteVerdict& y) {
  if (!x.finite) return x;
  if (!y.finite) return y;
  return FiniteVerdict::of(*x.value + *y.value);
}

FiniteVerdict root(FiniteVerdict v, double r) {
  if (v.finite) v.value = std::pow(*v.value, 1.0 / r);
  return v;
}

// int over the inner piece of weight * F^r dt/t.
FiniteVerdict inner_piece(const PowerLogProfile& F, const PLTerm& weight, double r) {
  return powerlog_integral(weight * pow(F.inner, r), 0.0, std::min(1.0, F.cutoff));
}

FiniteVerdict outer_piece(const PowerLogProfile& F, const PLTerm& weight, double r) {
  if (F.cutoff <= 1.0) return FiniteVerdict::of(0.0);
  return powerlog_integral(weight * pow(F.outer, r), 1.0, F.cutoff);
}

FiniteVerdict outer_sup(const PowerLogProfile& F, const PLTerm& weight) {
  if (F.cutoff <= 1.0 || F.outer.is_zero()) return FiniteVerdict::of(0.0);
  LogExpr e = expr_of(weight * F.outer, false);
  double u1 = std::isfinite(F.cutoff) ? std::log(F.cutoff) : kInf;
  if (!std::isfinite(u1) && !bounded_at_infinity(e.cu, e.cv, e.cw))
    return FiniteVerdict::divergent("unbounded at t -> inf, exponents " + triple(e.cu, e.cv, e.cw));
  return FiniteVerdict::of(std::exp(log_sup(e, 0.0, u1)));
}

void check_gm_params(int d, double p, double q) {
  if (d < 1) throw BadParams("dimension must be >= 1");
  if (!(p > 2.0 * d / (d + 1.0))) throw BadExponent("GM characterizations need p > 2d/(d+1)");
  if (!(q > 0.0)) throw BadExponent("q must be positive");
}

FiniteVerdict first_term(const PowerLogProfile& F, int d, double p) {
  return root(inner_piece(F, {1.0, d * p - d, 0.0, 0.0}, p), p);
}

// The term's law raised to r, as a function of u = log n.
LogExpr law_expr(const CoeffSeq& c, double r) {
  if (!c.law || c.law->is_zero()) return LogExpr::zero();
  return expr_of(pow(*c.law, r), false);
}

long direct_terms(const GMSequence& s) {
  return std::max<long>(kDirectTerms, static_cast<long>(std::max(s.a.list.size(), s.b.list.size())) + 1);
}

FiniteVerdict run_series(const SeriesSpec& spec) {
  if (!spec.g.is_zero()) {
    Exponents e = series_exponents(spec);
    if (!converges_at_infinity(e.A, e.B, e.C))
      return FiniteVerdict::divergent("divergent series, exponents " + triple(e.A, e.B, e.C));
  }
  return FiniteVerdict::of(series_sum(spec));
}

// sum_n n^A (1+log n)^B (a_n^r + b_n^r)
FiniteVerdict separable_series(const GMSequence& seq, double A, double B, double r) {
  SeriesSpec spec;
  LogExpr w = weight_expr(A, B);
  LogExpr la = law_expr(seq.a, r), lb = law_expr(seq.b, r);
  spec.g = log_sum(la.is_zero() ? la : w + la, lb.is_zero() ? lb : w + lb);
  spec.n_direct = direct_terms(seq);
  spec.exact = [&seq, A, B, r](long n) {
    double u = std::log(static_cast<double>(n));
    double s = std::pow(seq.a.at(n), r) + std::pow(seq.b.at(n), r);
    return s == 0.0 ? 0.0 : std::exp(A * u) * std::pow(1.0 + u, B) * s;
  };
  return run_series(spec);
}

// sup_n n^A (1+log n)^B max(a_n, b_n)
FiniteVerdict sup_series(const GMSequence& seq, double A, double B) {
  const long M = direct_terms(seq);
  double best = 0.0;
  for (long n = 1; n < M; ++n) {
    double u = std::log(static_cast<double>(n));
    best = std::max(best, std::exp(A * u) * std::pow(1.0 + u, B) * std::max(seq.a.at(n), seq.b.at(n)));
  }
  for (const CoeffSeq* c : {&seq.a, &seq.b}) {
    LogExpr l = law_expr(*c, 1.0);
    if (l.is_zero()) continue;
    LogExpr e = weight_expr(A, B) + l;
    if (!bounded_at_infinity(e.cu, e.cv, e.cw))
      return FiniteVerdict::divergent("unbounded sequence, exponents " + triple(e.cu, e.cv, e.cw));
    best = std::max(best, std::exp(log_sup(e, std::log(static_cast<double>(M)), kInf)));
  }
  return FiniteVerdict::of(best);
}

void check_seq_exponent(double p) {
  if (!(p > 1.0 && std::isfinite(p))) throw BadExponent("sequence characterizations need 1 < p < inf");
}

}  // namespace

double PLTerm::operator()(double t) const {
  if (C == 0.0) return 0.0;
  double L = 1.0 + std::abs(std::log(t));
  return C * std::pow(t, a) * std::pow(L, b) * std::pow(1.0 + std::log(L), c);
}

PLTerm operator*(const PLTerm& x, const PLTerm& y) { return {x.C * y.C, x.a + y.a, x.b + y.b, x.c + y.c}; }

PLTerm pow(const PLTerm& x, double r) { return {std::pow(x.C, r), x.a * r, x.b * r, x.c * r}; }

PowerLogProfile PowerLogProfile::indicator(double R) {
  if (!(R > 0.0)) throw BadParams("indicator radius must be positive");
  PowerLogProfile f;
  f.inner = {1.0, 0.0, 0.0, 0.0};
  f.outer = {1.0, 0.0, 0.0, 0.0};
  f.cutoff = R;
  return f;
}

double PowerLogProfile::operator()(double t) const {
  if (t <= 0.0 || t >= cutoff) return 0.0;
  return t < 1.0 ? inner(t) : outer(t);
}

bool PowerLogProfile::is_indicator() const {
  auto unit = [](const PLTerm& x) { return x.C == 1.0 && x.a == 0.0 && x.b == 0.0 && x.c == 0.0; };
  return unit(inner) && unit(outer) && std::isfinite(cutoff);
}

nlohmann::json to_json(const PLTerm& t) { return {{"C", t.C}, {"a", t.a}, {"b", t.b}, {"c", t.c}}; }

nlohmann::json to_json(const PowerLogProfile& f) {
  if (f.is_indicator()) return {{"indicator", f.cutoff}};
  nlohmann::json j = {{"inner", to_json(f.inner)}, {"outer", to_json(f.outer)}};
  if (std::isfinite(f.cutoff)) j["cutoff"] = f.cutoff;
  return j;
}

nlohmann::json to_json(const FiniteVerdict& v) {
  nlohmann::json j = {{"finite", v.finite}, {"reason", v.reason}};
  if (v.value) j["value"] = *v.value;
  return j;
}

PowerLogProfile profile_from_json(const nlohmann::json& j) {
  if (j.contains("indicator")) return PowerLogProfile::indicator(j.at("indicator").get<double>());
  auto term = [&](const char* key) {
    PLTerm t;
    if (!j.contains(key)) return t;
    const auto& o = j.at(key);
    t.C = o.value("C", 0.0);
    t.a = o.value("a", 0.0);
    t.b = o.value("b", 0.0);
    t.c = o.value("c", 0.0);
    if (t.C < 0.0) throw BadParams("profile constants must be nonnegative");
    return t;
  };
  PowerLogProfile f;
  f.inner = term("inner");
  f.outer = term("outer");
  if (j.contains("cutoff") && j.at("cutoff").is_number()) f.cutoff = j.at("cutoff").get<double>();
  return f;
}

bool finiteness_oracle(double A, double B, double C, End end) {
  return end == End::Infinity ? converges_at_infinity(A, B, C) : converges_at_infinity(-A, B, C);
}

FiniteVerdict powerlog_integral(const PLTerm& g, double lo, double hi) {
  if (!(lo >= 0.0 && hi > lo)) throw BadParams("integration range must satisfy 0 <= lo < hi");
  FiniteVerdict total = FiniteVerdict::of(0.0);
  if (lo < 1.0) {
    double ua = -std::log(std::min(hi, 1.0));
    double ub = lo > 0.0 ? -std::log(lo) : kInf;
    total = plus(total, u_integral(expr_of(g, true), ua, ub, "t -> 0"));
  }
  if (hi > 1.0) {
    double ua = std::log(std::max(lo, 1.0));
    double ub = std::isfinite(hi) ? std::log(hi) : kInf;
    total = plus(total, u_integral(expr_of(g, false), ua, ub, "t -> inf"));
  }
  return total;
}

FiniteVerdict powerlog_series(const PLTerm& g, long n0) {
  if (n0 < 1) throw BadParams("series must start at n >= 1");
  SeriesSpec spec;
  spec.g = expr_of(g, false);
  spec.n0 = n0;
  return run_series(spec);
}

double CoeffSeq::at(long n) const {
  if (n < 1) return 0.0;
  if (n <= static_cast<long>(list.size())) return list[n - 1];
  if (law) return (*law)(static_cast<double>(n));
  return 0.0;
}

double gm_check(const CoeffSeq& a, long n_max) {
  if (n_max < 1) throw BadParams("n_max must be >= 1");
  std::vector<double> v(2 * n_max + 1);
  for (long n = 1; n <= 2 * n_max; ++n) {
    v[n] = a.at(n);
    if (v[n] == 0.0) throw ZeroValue("a_" + std::to_string(n) + " = 0 in the tested range");
    if (v[n] < 0.0) throw BadParams("GM sequences are nonnegative");
  }
  // Summed per window: prefix-sum differences cancel badly once a_n decays.
  double C = 0.0;
  for (long n = 1; n <= n_max; ++n) {
    double s = 0.0;
    for (long k = n; k < 2 * n; ++k) s += std::abs(v[k] - v[k + 1]);
    C = std::max(C, s / v[n]);
  }
  return C;
}

FiniteVerdict gm_besov_diff_char(const PowerLogProfile& F0, int d, double s, double b, double p, double q) {
  check_gm_params(d, p, q);
  if (s < 0.0) throw BadExponent("difference Besov characterization needs s >= 0");
  FiniteVerdict head = first_term(F0, d, p);
  if (s > 0.0) {
    if (std::isinf(q)) return plus(head, outer_sup(F0, {1.0, s + d - d / p, b, 0.0}));
    return plus(head, root(outer_piece(F0, {1.0, s * q + d * q - d * q / p, b * q, 0.0}, q), q));
  }
  // s = 0: the tail int_t^inf u^{dp-d-1} F0^p du sits inside the outer integral.
  if (F0.cutoff <= 1.0 || F0.outer.is_zero()) return head;
  LogExpr inner = expr_of(PLTerm{1.0, d * p - d, 0.0, 0.0} * pow(F0.outer, p), false);
  double u1 = std::isfinite(F0.cutoff) ? std::log(F0.cutoff) : kInf;
  bool sup = std::isinf(q);
  NestedResult r = sup ? nested_integral(inner, weight_expr(0.0, b), 1.0 / p, 0.0, u1, true)
                       : nested_integral(inner, weight_expr(0.0, b * q), q / p, 0.0, u1);
  if (!r.finite) return FiniteVerdict::divergent(r.reason);
  return plus(head, FiniteVerdict::of(sup ? r.value : std::pow(r.value, 1.0 / q)));
}

FiniteVerdict gm_besov_fourier_char(const PowerLogProfile& F0, int d, double s, double b, double p, double q) {
  check_gm_params(d, p, q);
  FiniteVerdict head = first_term(F0, d, p);
  if (std::isinf(q)) return plus(head, outer_sup(F0, {1.0, s + d - d / p, b, 0.0}));
  return plus(head, root(outer_piece(F0, {1.0, s * q + d * q - d * q / p, b * q, 0.0}, q), q));
}

FiniteVerdict gm_sobolev_char(const PowerLogProfile& F0, int d, double s, double b, double p) {
  check_gm_params(d, p, 1.0);
  FiniteVerdict head = first_term(F0, d, p);
  return plus(head, root(outer_piece(F0, {1.0, s * p + d * p - d, b * p, 0.0}, p), p));
}

FiniteVerdict hl_norm(const PowerLogProfile& F0, int d, double p) {
  check_gm_params(d, p, 1.0);
  PLTerm w{1.0, d * p - d, 0.0, 0.0};
  return root(plus(inner_piece(F0, w, p), outer_piece(F0, w, p)), p);
}

FiniteVerdict gm_seq_besov_char(const GMSequence& seq, double s, double b, double p, double q) {
  check_seq_exponent(p);
  if (!(q > 0.0)) throw BadExponent("q must be positive");
  if (std::isinf(q)) return sup_series(seq, s + 1.0 - 1.0 / p, b);
  return root(separable_series(seq, s * q + q - q / p - 1.0, b * q, q), q);
}

FiniteVerdict gm_seq_sobolev_char(const GMSequence& seq, double s, double b, double p) {
  check_seq_exponent(p);
  return root(separable_series(seq, s * p + p - 2.0, b * p, p), p);
}

FiniteVerdict gm_seq_bbesov_char(const GMSequence& seq, double s, double b, double p, double q) {
  check_seq_exponent(p);
  if (!(q > 0.0)) throw BadExponent("q must be positive");
  if (s < 0.0) throw BadExponent("difference Besov characterization needs s >= 0");
  const long M = direct_terms(seq);
  if (s > 0.0) {
    const double A = s + 1.0 - 1.0 / p;
    LogExpr ab = log_sum(law_expr(seq.a, 1.0), law_expr(seq.b, 1.0));
    if (std::isinf(q)) {
      double best = 0.0;
      for (long n = 1; n < M; ++n) {
        double u = std::log(static_cast<double>(n));
        best = std::max(best, std::exp(A * u) * std::pow(1.0 + u, b) * (seq.a.at(n) + seq.b.at(n)));
      }
      if (!ab.is_zero()) {
        LogExpr e = weight_expr(A, b) + ab;
        if (!bounded_at_infinity(e.cu, e.cv, e.cw))
          return FiniteVerdict::divergent("unbounded sequence, exponents " + triple(e.cu, e.cv, e.cw));
        best = std::max(best, std::exp(log_sup(e, std::log(static_cast<double>(M)), kInf)));
      }
      return FiniteVerdict::of(best);
    }
    SeriesSpec spec;
    spec.g = ab.is_zero() ? ab : scaled(weight_expr(A, b) + ab, q) + weight_expr(-1.0, 0.0);
    spec.n_direct = M;
    spec.exact = [&seq, A, b, q](long n) {
      double u = std::log(static_cast<double>(n));
      double x = std::exp(A * u) * std::pow(1.0 + u, b) * (seq.a.at(n) + seq.b.at(n));
      return x == 0.0 ? 0.0 : std::pow(x, q) / static_cast<double>(n);
    };
    return root(run_series(spec), q);
  }
  SeriesSpec inner;
  inner.g = log_sum(law_expr(seq.a, p), law_expr(seq.b, p));
  if (!inner.g.is_zero()) inner.g = inner.g + weight_expr(p - 2.0, 0.0);
  inner.n_direct = M;
  inner.exact = [&seq, p](long n) {
    double x = std::pow(seq.a.at(n), p) + std::pow(seq.b.at(n), p);
    return x == 0.0 ? 0.0 : std::pow(static_cast<double>(n), p - 2.0) * x;
  };
  bool sup = std::isinf(q);
  NestedResult r = sup ? nested_series(inner, weight_expr(0.0, b), 1.0 / p, true)
                       : nested_series(inner, weight_expr(-1.0, b * q), q / p);
  if (!r.finite) return FiniteVerdict::divergent(r.reason);
  return FiniteVerdict::of(sup ? r.value : std::pow(r.value, 1.0 / q));
}

Spectrum realize(const GMSequence& seq, long n_max) {
  Spectrum c;
  for (long n = 1; n <= n_max; ++n) {
    double a = seq.a.at(n), b = seq.b.at(n);
    if (a == 0.0 && b == 0.0) continue;
    c.set(n, cplx(a, -b) / 2.0);
    c.set(-n, cplx(a, b) / 2.0);
  }
  return c;
}

}  // namespace logsmooth
