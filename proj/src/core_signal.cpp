#include "logsmooth/core_signal.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include <fftw3.h>

#include "logsmooth/errors.hpp"

namespace logsmooth {

namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

// Unnormalized transform: out[n] = sum_m in[m] e^{sign 2 pi i n m / N}.
std::vector<cplx> fft(const std::vector<cplx>& in, int sign) {
  const int n = static_cast<int>(in.size());
  auto* buf = reinterpret_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_1d(n, buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  for (int i = 0; i < n; ++i) {
    buf[i][0] = in[i].real();
    buf[i][1] = in[i].imag();
  }
  fftw_execute(plan);
  std::vector<cplx> out(n);
  for (int i = 0; i < n; ++i) out[i] = cplx(buf[i][0], buf[i][1]);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(buf);
  return out;
}

}  // namespace

Grid::Grid(int level) : J(level) {
  if (level < 3 || level > 20) throw BadGrid("J must lie in [3,20], got " + std::to_string(level));
}

Signal::Signal(Grid g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
  if (static_cast<long>(values.size()) != grid.N())
    throw BadGrid("signal length " + std::to_string(values.size()) + " does not match N=" +
                  std::to_string(grid.N()));
}

Signal Signal::from_function(Grid g, const std::function<cplx(double)>& f) {
  std::vector<cplx> v(g.N());
  for (long n = 0; n < g.N(); ++n) v[n] = f(g.x(n));
  return Signal(g, std::move(v));
}

cplx Spectrum::at(long k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? cplx(0.0) : it->second;
}

void Spectrum::set(long k, cplx c) {
  if (c == cplx(0.0))
    coeffs.erase(k);
  else
    coeffs[k] = c;
}

long Spectrum::support() const {
  if (coeffs.empty()) return 0;
  return std::max(std::labs(coeffs.begin()->first), std::labs(coeffs.rbegin()->first));
}

Spectrum dft(const Signal& f) {
  const long N = f.N();
  auto out = fft(f.values, -1);
  double scale = 0.0;
  for (const auto& v : f.values) scale = std::max(scale, std::abs(v));
  // Roundoff floor: coefficients below it are FFT noise, not signal content.
  const double floor = 1e-14 * scale;
  Spectrum c;
  for (long k = -(N / 2 - 1); k <= N / 2 - 1; ++k) {
    cplx v = out[(k + N) % N] / static_cast<double>(N);
    if (std::abs(v) > floor) c.coeffs.emplace(k, v);
  }
  return c;
}

Signal idft(const Spectrum& c, const Grid& g) {
  const long N = g.N();
  if (c.support() >= N / 2)
    throw AliasError("support " + std::to_string(c.support()) + " needs N > " +
                     std::to_string(2 * c.support()) + ", grid has N=" + std::to_string(N));
  std::vector<cplx> in(N, cplx(0.0));
  for (const auto& [k, v] : c.coeffs) in[(k % N + N) % N] = v;
  return Signal(g, fft(in, +1));
}

void check_exponent(double p) {
  if (!(p >= 1.0)) throw BadExponent("exponent must satisfy p >= 1, got " + std::to_string(p));
}

double lp_norm(const Signal& f, double p) {
  check_exponent(p);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : f.values) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  if (p == 2.0) {
    for (const auto& v : f.values) s += std::norm(v);
    return std::sqrt(f.grid.step() * s);
  }
  for (const auto& v : f.values) s += std::pow(std::abs(v), p);
  return std::pow(f.grid.step() * s, 1.0 / p);
}

double l2_norm(const Spectrum& c) {
  double s = 0.0;
  for (const auto& [k, v] : c.coeffs) s += std::norm(v);
  return std::sqrt(kTwoPi * s);
}

double lp_norm(const Spectrum& c, double p, int J) {
  check_exponent(p);
  return lp_norm(idft(c, Grid(J)), p);
}

Spectrum apply_multiplier(const Spectrum& c, const Multiplier& m) {
  Spectrum out;
  for (const auto& [k, v] : c.coeffs) out.set(k, m(k) * v);
  return out;
}

Spectrum operator+(const Spectrum& a, const Spectrum& b) {
  Spectrum out = a;
  for (const auto& [k, v] : b.coeffs) out.set(k, out.at(k) + v);
  return out;
}

Spectrum operator-(const Spectrum& a, const Spectrum& b) {
  Spectrum out = a;
  for (const auto& [k, v] : b.coeffs) out.set(k, out.at(k) - v);
  return out;
}

Spectrum operator*(cplx s, const Spectrum& a) {
  Spectrum out;
  for (const auto& [k, v] : a.coeffs) out.set(k, s * v);
  return out;
}

Spectrum trig_mode(long k, double a_cos, double b_sin) {
  Spectrum c;
  if (k == 0) {
    c.set(0, a_cos);
    return c;
  }
  // a cos kx + b sin kx = (a - ib)/2 e^{ikx} + (a + ib)/2 e^{-ikx}
  c.set(k, cplx(a_cos, -b_sin) / 2.0);
  c.set(-k, cplx(a_cos, b_sin) / 2.0);
  return c;
}

nlohmann::json to_json(const Signal& f) {
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& v : f.values) vals.push_back({v.real(), v.imag()});
  return {{"J", f.grid.J}, {"values", vals}};
}

nlohmann::json to_json(const Spectrum& c) {
  nlohmann::json co = nlohmann::json::object();
  for (const auto& [k, v] : c.coeffs) co[std::to_string(k)] = {v.real(), v.imag()};
  return {{"coeffs", co}};
}

namespace {
cplx parse_complex(const nlohmann::json& v) {
  if (v.is_number()) return cplx(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2) return cplx(v[0].get<double>(), v[1].get<double>());
  throw BadParams("complex value must be a number or a [re,im] pair");
}
}  // namespace

Signal signal_from_json(const nlohmann::json& j) {
  Grid g(j.value("J", kDefaultJ));
  const auto& vals = j.at("values");
  std::vector<cplx> v;
  v.reserve(vals.size());
  for (const auto& e : vals) v.push_back(parse_complex(e));
  return Signal(g, std::move(v));
}

Spectrum spectrum_from_json(const nlohmann::json& j) {
  Spectrum c;
  for (const auto& [key, val] : j.at("coeffs").items()) c.set(std::stol(key), parse_complex(val));
  return c;
}

}  // namespace logsmooth
