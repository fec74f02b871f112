#include "logsmooth/lacunary.hpp"

#include <algorithm>
#include <cmath>

#include "logsmooth/errors.hpp"

namespace logsmooth {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

// Terms |b_j|^r 2^{j s r}(1+j)^{b r} as a series in u = j.
SeriesSpec weighted_series(const LacunarySeq& seq, double s, double b, double r) {
  SeriesSpec spec;
  spec.log_scale = false;
  spec.n0 = seq.j_min();
  int last = seq.coeffs.empty() ? 0 : seq.coeffs.rbegin()->first;
  spec.n_direct = std::max<long>(4096, last + 1);
  if (seq.law && seq.law->C != 0.0) {
    const LacunaryLaw& L = *seq.law;
    spec.g.c0 = r * std::log(std::abs(L.C));
    spec.g.cu = r * (L.r + s) * kLn2;
    spec.g.cv = r * (L.a + b);
    spec.g.cw = r * L.c;
  } else {
    spec.g = LogExpr::zero();
  }
  spec.exact = [&seq, s, b, r](long j) {
    double m = std::abs(seq.at(static_cast<int>(j)));
    if (m == 0.0) return 0.0;
    return std::exp(r * (j * s * kLn2 + b * std::log1p(static_cast<double>(j)) + std::log(m)));
  };
  return spec;
}

FiniteVerdict lq_series(const LacunarySeq& seq, double s, double b, double q) {
  if (std::isinf(q)) {
    SeriesSpec spec = weighted_series(seq, s, b, 1.0);
    double best = 0.0;
    for (long j = spec.n0; j < spec.n_direct; ++j) best = std::max(best, spec.exact(j));
    if (!spec.g.is_zero()) {
      if (!bounded_at_infinity(spec.g.cu, spec.g.cv, spec.g.cw))
        return FiniteVerdict::divergent("unbounded coefficients");
      best = std::max(best, std::exp(log_sup(spec.g, static_cast<double>(spec.n_direct), kInf)));
    }
    return FiniteVerdict::of(best);
  }
  SeriesSpec spec = weighted_series(seq, s, b, q);
  if (!spec.g.is_zero()) {
    Exponents e = series_exponents(spec);
    if (!converges_at_infinity(e.A, e.B, e.C)) return FiniteVerdict::divergent("divergent coefficient sum");
  }
  return FiniteVerdict::of(std::pow(series_sum(spec), 1.0 / q));
}

}  // namespace

double LacunaryLaw::operator()(int j) const {
  if (C == 0.0) return 0.0;
  return C * std::exp2(r * j) * std::pow(1.0 + j, a) * std::pow(1.0 + std::log1p(static_cast<double>(j)), c);
}

cplx LacunarySeq::at(int j) const {
  if (j < j_min()) return 0.0;
  auto it = coeffs.find(j);
  if (it != coeffs.end()) return it->second;
  if (law) return (*law)(j);
  return 0.0;
}

long LacunarySeq::frequency(int j) const {
  if (convention == LacConvention::Continuous) return (1L << j) - 2;
  long n = 1;
  for (int i = 0; i < j; ++i) n *= lambda;
  return n;
}

LacunaryNorms lac_norm_fourier(const LacunarySeq& seq, double s, double b, double q) {
  if (!(q > 0.0)) throw BadExponent("q must be positive");
  return {lq_series(seq, s, b, q), lq_series(seq, s, b, 2.0), lq_series(seq, 0.0, 0.0, 2.0)};
}

FiniteVerdict lac_norm_bbesov(const LacunarySeq& seq, double s, double b, double q) {
  if (!(q > 0.0)) throw BadExponent("q must be positive");
  if (s < 0.0) throw BadExponent("difference Besov norms need s >= 0");
  if (s > 0.0) return lq_series(seq, s, b, q);
  // s = 0: (sum_j (1+j)^{bq} (sum_{k>=j} |b_k|^2)^{q/2})^{1/q}
  SeriesSpec inner = weighted_series(seq, 0.0, 0.0, 2.0);
  LogExpr weight;
  bool sup = std::isinf(q);
  weight.cv = sup ? b : b * q;
  NestedResult r = nested_series(inner, weight, sup ? 0.5 : q / 2.0, sup);
  if (!r.finite) return FiniteVerdict::divergent(r.reason);
  return FiniteVerdict::of(sup ? r.value : std::pow(r.value, 1.0 / q));
}

Spectrum realize(const LacunarySeq& seq, int j_max) {
  Spectrum c;
  for (int j = seq.j_min(); j <= j_max; ++j) {
    cplx v = seq.at(j);
    if (v == cplx(0.0)) continue;
    long n = seq.frequency(j);
    if (n == 0) {
      c.set(0, c.at(0) + v.real());
      continue;
    }
    c.set(n, c.at(n) + v / 2.0);
    c.set(-n, c.at(-n) + std::conj(v) / 2.0);
  }
  return c;
}

nlohmann::json to_json(const LacunarySeq& seq) {
  nlohmann::json co = nlohmann::json::object();
  for (const auto& [j, v] : seq.coeffs) co[std::to_string(j)] = {v.real(), v.imag()};
  nlohmann::json out = {
      {"coeffs", co}, {"convention", seq.convention == LacConvention::Continuous ? "continuous" : "periodic"}};
  if (seq.law) out["law"] = {{"C", seq.law->C}, {"r", seq.law->r}, {"a", seq.law->a}, {"c", seq.law->c}};
  return out;
}

LacunarySeq lacunary_from_json(const nlohmann::json& j) {
  LacunarySeq s;
  std::string conv = j.value("convention", "periodic");
  if (conv == "continuous")
    s.convention = LacConvention::Continuous;
  else if (conv != "periodic")
    throw BadParams("unknown lacunary convention '" + conv + "'");
  if (j.contains("coeffs"))
    for (const auto& [key, val] : j.at("coeffs").items()) {
      cplx v = val.is_number() ? cplx(val.get<double>()) : cplx(val.at(0).get<double>(), val.at(1).get<double>());
      s.coeffs[std::stoi(key)] = v;
    }
  if (j.contains("law")) {
    const auto& L = j.at("law");
    s.law = LacunaryLaw{L.value("C", 0.0), L.value("r", 0.0), L.value("a", 0.0), L.value("c", 0.0)};
  }
  return s;
}

}  // namespace logsmooth
