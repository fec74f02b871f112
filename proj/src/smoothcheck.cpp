#include "logsmooth/smoothcheck.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "logsmooth/catalog.hpp"
#include "logsmooth/cli.hpp"
#include "logsmooth/errors.hpp"
#include "logsmooth/hardy.hpp"
#include "logsmooth/kfunc.hpp"
#include "logsmooth/lacunary.hpp"
#include "logsmooth/norms.hpp"
#include "logsmooth/operators.hpp"
#include "logsmooth/profiles.hpp"
#include "logsmooth/quadrature.hpp"
#include "logsmooth/random.hpp"
#include "logsmooth/smoothness.hpp"

namespace logsmooth {

using nlohmann::json;

const std::vector<RatioProtocol>& threshold_table() {
  // One row per suite.  Ratio suites compare two sides of an equivalence or an
  // inequality; error suites bound a relative error or a mismatch count.
  static const std::vector<RatioProtocol> table = {
      {"parseval", "random spectra", Bound::Error, 1e-10, 1e300, 20},
      {"holder-monotonicity", "random spectra", Bound::Upper, 1.0 + 1e-12, 1e300, 100},
      {"multiplier-composition", "random spectra", Bound::Error, 1e-13, 1e300, 20},
      {"modulus-monotone-doubling", "random spectra, J <= 10", Bound::Upper, 1.0 + 1e-9, 1e300, 10},
      {"marchaud", "random spectra, J <= 10", Bound::Upper, 50.0, 1e300, 50},
      {"sharp-jackson", "random spectra", Bound::Upper, 50.0, 1e300, 20},
      {"modulus-l2-agreement", "random spectra", Bound::Error, 0.005, 1e300, 10},
      {"equivalence-ratio", "random spectra", Bound::TwoSided, 50.0, 10.0, 20},
      {"homogeneity", "random spectra", Bound::Error, 1e-12, 1e300, 5},
      {"quasi-triangle", "random spectrum pairs", Bound::Upper, 2.0, 1e300, 10},
      {"partition-of-unity", "all frequencies", Bound::Error, 1e-12, 1e300, 1},
      {"embedding-monotonicity", "random spectra", Bound::Upper, 50.0, 1e300, 10},
      {"oracle-soundness", "random exponent triples", Bound::Error, 0.0, 1e300, 200},
      {"hardy-integrals", "random step functions and sequences", Bound::Upper, 100.0, 1e300, 1000},
      {"gm-characterization-consistency", "power-log profiles", Bound::Error, 0.0, 1e300, 100},
      {"gm-periodic-realization", "random monotone lists", Bound::Error, 1e-8, 1e300, 20},
      {"lacunary-p-independence", "random finite lacunary sequences", Bound::TwoSided, 10.0, 1e300, 20},
      {"lacunary-positive-s", "power-log lacunary laws", Bound::Error, 1e-12, 1e300, 50},
      {"lacunary-hardy-collapse", "power-log lacunary laws", Bound::Error, 0.0, 1e300, 100},
      {"k-moduli", "random zero-mean spectra", Bound::TwoSided, 20.0, 1e300, 20},
      {"k-monotone-concave", "random spectra", Bound::Error, 1e-12, 1e300, 10},
      {"k-weierstrass", "random spectra", Bound::TwoSided, 10.0, 1e300, 20},
      {"k-ball-average", "random spectra", Bound::TwoSided, 20.0, 1e300, 20},
      {"vp-embedding", "random spectra, J <= 10", Bound::Upper, 50.0, 1e300, 20},
      {"derivative-modulus", "random zero-mean spectra", Bound::TwoSided, 20.0, 1e300, 20},
      {"riesz-equivalence", "random zero-mean spectra", Bound::TwoSided, 20.0, 1e300, 20},
      {"bessel-equivalence", "random zero-mean spectra", Bound::TwoSided, 20.0, 1e300, 20},
      {"fraclap-equivalence", "random zero-mean spectra", Bound::TwoSided, 20.0, 1e300, 20},
      {"lift-identity", "random spectra", Bound::Error, 1e-12, 1e300, 10},
      {"derivative-norm", "random spectra", Bound::TwoSided, 50.0, 1e300, 10},
      {"registry-soundness", "claim samplers", Bound::Error, 0.0, 1e300, 50},
      {"witness-soundness", "registered witnesses", Bound::Error, 0.0, 1e300, 1},
      {"predicate-consistency", "p = q = 2 parameter draws", Bound::Error, 0.0, 1e300, 200},
      {"determinism", "repeated command runs", Bound::Error, 0.0, 1e300, 2},
      {"builtin-documentation", "builtin families", Bound::Error, 0.0, 1e300, 1},
      {"suite-completeness", "invariant ids", Bound::Error, 0.0, 1e300, 1},
  };
  return table;
}

const RatioProtocol& protocol_for(const std::string& suite) {
  for (const auto& row : threshold_table())
    if (row.suite == suite) return row;
  throw BadParams("no threshold row for suite '" + suite + "'");
}

namespace {

constexpr double kLn2 = 0.69314718055994530942;

json num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

std::string show(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

std::uint64_t stream_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (h | 1ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class CellAcc {
 public:
  CellAcc(json params, Bound bound, double C, double S)
      : params_(std::move(params)), bound_(bound), C_(C), S_(S) {}

  void ratio(double num, double den, const std::string& input) {
    if (num == 0.0 && den == 0.0) return;  // both sides vanish: nothing to compare
    double r = den > 0.0 ? num / den : kInf;
    ++n_;
    lo_ = std::min(lo_, r);
    hi_ = std::max(hi_, r);
    double w = bound_ == Bound::TwoSided ? (r > 0.0 ? std::max(r, 1.0 / r) : kInf) : r;
    if (std::isnan(w)) w = kInf;
    if (w > worst_ || n_ == 1) {
      worst_ = w;
      input_ = input;
    }
  }

  void error(double e, const std::string& input) {
    ++n_;
    if (std::isnan(e)) e = kInf;
    if (e > worst_ || n_ == 1) {
      worst_ = e;
      input_ = input;
    }
  }

  void relative(double a, double b, const std::string& input) {
    double scale = std::max(std::abs(a), std::abs(b));
    error(scale == 0.0 ? 0.0 : std::abs(a - b) / scale, input);
  }

  SuiteCell finish() const {
    SuiteCell c;
    c.params = params_;
    c.threshold = C_;
    c.samples = n_;
    c.max_ratio = n_ > 0 ? worst_ : 0.0;
    if (bound_ != Bound::Error && n_ > 0) c.spread = lo_ > 0.0 ? hi_ / lo_ : kInf;
    c.pass = c.max_ratio <= C_ && c.spread <= S_;
    if (!c.pass) c.offending = input_;
    return c;
  }

 private:
  json params_;
  Bound bound_;
  double C_, S_;
  int n_ = 0;
  double lo_ = kInf, hi_ = 0.0, worst_ = 0.0;
  std::string input_;
};

struct Ctx {
  const SuiteOptions& o;
  const RatioProtocol& proto;
  Rng rng;
  SuiteReport report;

  Ctx(const SuiteOptions& opt, const RatioProtocol& pr)
      : o(opt), proto(pr), rng(stream_seed(opt.seed, pr.suite)) {
    report.suite = pr.suite;
  }

  int samples() const { return o.samples > 0 ? o.samples : proto.samples; }
  double C() const { return o.threshold_C > 0.0 && proto.bound != Bound::Error ? o.threshold_C : proto.C; }
  CellAcc cell(json params) const { return CellAcc(std::move(params), proto.bound, C(), proto.S); }
  void add(const CellAcc& c) { report.cells.push_back(c.finish()); }

  SpectrumLaw law(int J, bool zero_mean = false) const {
    SpectrumLaw L;
    L.k_max = std::min<long>(L.k_max, 1L << std::max(J - 3, 1));
    L.k_min = std::min(L.k_min, L.k_max);
    L.zero_mean = zero_mean;
    return L;
  }
  Spectrum signal(int J, bool zero_mean = false) {
    Spectrum f = random_spectrum(rng, law(J, zero_mean));
    return o.zero_signal ? Spectrum{} : f;
  }
  std::vector<Spectrum> signals(int n, int J, bool zero_mean = false) {
    std::vector<Spectrum> v;
    for (int i = 0; i < n; ++i) v.push_back(signal(J, zero_mean));
    return v;
  }
};

std::string sample_tag(int i) { return "sample " + std::to_string(i); }

// int_a^b g(u) du/u by the midpoint rule in log u.
double log_integral(const std::function<double(double)>& g, double a, double b, int per_octave = 8) {
  if (!(b > a)) return 0.0;
  double L = std::log(b / a);
  int n = std::max(1, static_cast<int>(std::ceil(per_octave * L / kLn2)));
  double h = L / n, acc = 0.0;
  for (int i = 0; i < n; ++i) acc += g(a * std::exp((i + 0.5) * h));
  return acc * h;
}

double max_abs_diff(const Spectrum& a, const Spectrum& b) {
  double d = 0.0;
  for (const auto& [k, v] : a.coeffs) d = std::max(d, std::abs(v - b.at(k)));
  for (const auto& [k, v] : b.coeffs) d = std::max(d, std::abs(v - a.at(k)));
  return d;
}

double max_abs(const Spectrum& a) {
  double m = 0.0;
  for (const auto& [k, v] : a.coeffs) m = std::max(m, std::abs(v));
  return m;
}

SpaceSpec bspec(Family fam, double s, double b, double p, double q, int k = 1) {
  SpaceSpec sp;
  sp.family = fam;
  sp.s = s;
  sp.b = b;
  sp.p = p;
  sp.q = q;
  sp.k = k;
  return sp;
}

double method_norm(const std::string& m, const Spectrum& f, SpaceSpec spec, int J) {
  if (m == "differences") spec.k = static_cast<int>(std::floor(spec.s)) + 1;
  return norm_by_method(m, f, spec, J).value;
}

// ---- core_signal ---------------------------------------------------------

SuiteReport parseval(Ctx& c) {
  const int J = c.o.J;
  CellAcc pars = c.cell({{"check", "parseval"}, {"J", J}});
  CellAcc trip = c.cell({{"check", "dft-roundtrip"}, {"J", J}});
  for (int i = 0; i < c.samples(); ++i) {
    Spectrum f = c.signal(J);
    Signal x = idft(f, Grid(J));
    double direct = 0.0;
    for (const auto& [k, v] : f.coeffs) direct += std::norm(v);
    direct *= kTwoPi;
    double l2 = lp_norm(x, 2.0);
    pars.relative(l2 * l2, direct, sample_tag(i));
    double scale = max_abs(f);
    trip.error(scale > 0.0 ? max_abs_diff(dft(x), f) / scale : 0.0, sample_tag(i));
  }
  c.add(pars);
  c.add(trip);
  return c.report;
}

SuiteReport holder(Ctx& c) {
  const int J = c.o.J;
  const std::vector<double> ps = {1.0, 1.5, 2.0, 3.0, 4.0, kInf};
  std::vector<CellAcc> cells;
  std::vector<std::pair<int, int>> pairs;
  for (size_t a = 0; a < ps.size(); ++a)
    for (size_t b = a + 1; b < ps.size(); ++b) {
      pairs.emplace_back(a, b);
      cells.push_back(c.cell({{"p1", num(ps[a])}, {"p2", num(ps[b])}}));
    }
  for (int i = 0; i < c.samples(); ++i) {
    Signal x = idft(c.signal(J), Grid(J));
    std::vector<double> avg;
    for (double p : ps) avg.push_back(lp_norm(x, p) * (std::isinf(p) ? 1.0 : std::pow(kTwoPi, -1.0 / p)));
    for (size_t n = 0; n < pairs.size(); ++n) cells[n].ratio(avg[pairs[n].first], avg[pairs[n].second], sample_tag(i));
  }
  for (auto& cell : cells) c.add(cell);
  return c.report;
}

SuiteReport multiplier_composition(Ctx& c) {
  struct Pair {
    const char* name;
    Multiplier m1, m2;
  };
  const std::vector<Pair> pairs = {
      {"bessel-then-derivative", [](long k) { return cplx(1.0 / (1.0 + double(k) * k)); },
       [](long k) { return cplx(0.0, double(k)); }},
      {"heat-then-poisson", [](long k) { return cplx(heat_symbol(k, 0.01)); },
       [](long k) { return cplx(poisson_symbol(k, 0.1)); }},
      {"shift-then-riesz", [](long k) { return std::polar(1.0, 0.3 * k); },
       [](long k) { return cplx(std::pow(std::abs(double(k)), 0.7)); }},
  };
  std::vector<CellAcc> cells;
  for (const auto& pr : pairs) cells.push_back(c.cell({{"multipliers", pr.name}}));
  for (int i = 0; i < c.samples(); ++i) {
    Spectrum f = c.signal(c.o.J);
    for (size_t n = 0; n < pairs.size(); ++n) {
      const auto& pr = pairs[n];
      Spectrum seq = apply_multiplier(apply_multiplier(f, pr.m1), pr.m2);
      Spectrum once = apply_multiplier(f, [&](long k) { return pr.m1(k) * pr.m2(k); });
      double scale = max_abs(once);
      cells[n].error(scale > 0.0 ? max_abs_diff(seq, once) / scale : max_abs(seq), sample_tag(i));
    }
  }
  for (auto& cell : cells) c.add(cell);
  return c.report;
}

// ---- smoothness ----------------------------------------------------------

SuiteReport monotone_doubling(Ctx& c) {
  const int J = std::min(c.o.J, 10);
  Grid g(J);
  std::vector<Signal> xs;
  for (int i = 0; i < c.samples(); ++i) xs.push_back(idft(c.signal(J), g));
  for (int k : {1, 2})
    for (double p : {1.0, 2.0, 4.0}) {
      CellAcc cell = c.cell({{"k", k}, {"p", p}, {"J", J}});
      for (size_t i = 0; i < xs.size(); ++i) {
        auto table = modulus_table(xs[i], k, p, 1.0);
        const size_t n = table.size();
        for (size_t m = 1; m < n; ++m) cell.ratio(table[m - 1], table[m], sample_tag(i) + " shift " + std::to_string(m));
        // entry m-1 is t = m h, so 2t sits at entry 2m-1
        for (size_t m = 1; 2 * m <= n; ++m)
          cell.ratio(table[2 * m - 1], std::ldexp(table[m - 1], k), sample_tag(i) + " doubling " + std::to_string(m));
      }
      c.add(cell);
    }
  return c.report;
}

SuiteReport marchaud(Ctx& c) {
  const int J = std::min(c.o.J, 10);
  Grid g(J);
  const double alpha = 1.0;
  for (double p : {2.0, 4.0}) {
    CellAcc cell = c.cell({{"alpha", 1}, {"beta", 2}, {"p", p}, {"J", J}});
    for (int i = 0; i < c.samples(); ++i) {
      Signal x = idft(c.signal(J), g);
      ModulusLookup w1(x, 1, p, 1.0), w2(x, 2, p, 1.0);
      double norm = lp_norm(x, p);
      for (int j = 1; j <= 7; ++j) {
        double t = std::ldexp(1.0, -j);
        double tail = log_integral([&](double u) { return std::pow(u, -alpha) * w2(u); }, t, 1.0);
        cell.ratio(w1(t), std::pow(t, alpha) * (norm + tail), sample_tag(i) + " t=2^-" + std::to_string(j));
      }
    }
    c.add(cell);
  }
  return c.report;
}

SuiteReport sharp_jackson(Ctx& c) {
  auto fs = c.signals(c.samples(), c.o.J);
  for (int k : {1, 2}) {
    CellAcc cell = c.cell({{"k", k}, {"p", 2}});
    for (size_t i = 0; i < fs.size(); ++i) {
      const Spectrum& f = fs[i];
      for (int j = 1; j <= 8; ++j) {
        double t = std::ldexp(1.0, -j);
        double lhs = std::sqrt(log_integral(
            [&](double u) { return std::pow(std::pow(u, -k) * modulus_frac_l2(f, k + 1, u), 2.0); }, t, 1.0, 4));
        double rhs = std::pow(t, -k) * modulus_frac_l2(f, k, t);
        cell.ratio(lhs, rhs, sample_tag(i) + " t=2^-" + std::to_string(j));
      }
    }
    c.add(cell);
  }
  return c.report;
}

SuiteReport modulus_l2(Ctx& c) {
  const int J = c.o.J;
  Grid g(J);
  const double t = 512 * g.step();
  auto fs = c.signals(c.samples(), J);
  for (int k : {1, 2}) {
    CellAcc cell = c.cell({{"k", k}, {"t", t}, {"h_points", 512}});
    for (size_t i = 0; i < fs.size(); ++i)
      cell.relative(modulus(idft(fs[i], g), k, t, 2.0), modulus_frac_l2(fs[i], k, t), sample_tag(i));
    c.add(cell);
  }
  return c.report;
}

// ---- norms ---------------------------------------------------------------

SuiteReport equivalence(Ctx& c) {
  const int J = c.o.J;
  const std::vector<std::string> methods = {"fourier", "approximation", "weierstrass", "heat",
                                            "poisson", "ball",          "bochner-riesz"};
  auto fs = c.signals(c.samples(), J);
  std::vector<Signal> xs;
  for (const auto& f : fs) xs.push_back(idft(f, Grid(J)));
  for (double s : {0.3, 0.7})
    for (double b : {-0.4, 0.0, 1.0})
      for (double q : {1.0, 2.0, kInf}) {
        SpaceSpec spec = bspec(Family::BesovDiff, s, b, 2.0, q, 1);
        std::vector<double> diff;
        for (const auto& x : xs) diff.push_back(norm_besov_diff(x, spec).value);
        for (const auto& m : methods) {
          CellAcc cell = c.cell({{"method", m}, {"s", s}, {"b", b}, {"q", num(q)}});
          for (size_t i = 0; i < fs.size(); ++i) cell.ratio(method_norm(m, fs[i], spec, J), diff[i], sample_tag(i));
          c.add(cell);
        }
      }
  return c.report;
}

SuiteReport homogeneity(Ctx& c) {
  const int J = c.o.J;
  struct Row {
    std::string method;
    SpaceSpec spec;
  };
  const std::vector<Row> rows = {
      {"differences", bspec(Family::BesovDiff, 0.5, 0.0, 2.0, 2.0)},
      {"fourier", bspec(Family::BesovDiff, 0.5, 0.0, 3.0, 2.0)},
      {"triebel-lizorkin", bspec(Family::BesovDiff, 0.5, 0.0, 3.0, 2.0)},
      {"sobolev", bspec(Family::BesovDiff, 0.5, 0.3, 2.0, 2.0)},
      {"truncated", bspec(Family::BesovDiff, 0.0, 0.5, 2.0, 2.0)},
      {"approximation", bspec(Family::BesovDiff, 0.5, 0.0, 2.0, 1.0)},
      {"weierstrass", bspec(Family::BesovDiff, 0.5, 0.0, 2.0, 2.0)},
      {"heat", bspec(Family::BesovDiff, 0.5, 0.0, 2.0, kInf)},
      {"poisson", bspec(Family::BesovDiff, 0.5, 0.0, 2.0, 2.0)},
      {"ball", bspec(Family::BesovDiff, 0.5, 0.0, 2.0, 2.0)},
      {"bochner-riesz", bspec(Family::BesovDiff, 0.5, 0.0, 2.0, 2.0)},
      {"lambda-heat", bspec(Family::BesovDiff, 0.5, 0.0, kInf, 2.0)},
      {"lipschitz", bspec(Family::BesovDiff, 0.0, 1.0, 2.0, 2.0)},
  };
  auto fs = c.signals(c.samples(), J);
  for (const auto& row : rows) {
    CellAcc cell = c.cell({{"method", row.method}});
    for (size_t i = 0; i < fs.size(); ++i) {
      double base = method_norm(row.method, fs[i], row.spec, J);
      for (double lam : {-2.5, 0.3, 1000.0})
        cell.relative(method_norm(row.method, cplx(lam) * fs[i], row.spec, J), std::abs(lam) * base,
                      sample_tag(i) + " lambda=" + show(lam));
    }
    c.add(cell);
  }
  return c.report;
}

SuiteReport quasi_triangle(Ctx& c) {
  const int J = c.o.J;
  const std::vector<std::string> methods = {"differences", "fourier", "triebel-lizorkin", "sobolev",
                                            "approximation", "heat"};
  std::vector<std::pair<Spectrum, Spectrum>> pairs;
  for (int i = 0; i < c.samples(); ++i) {
    Spectrum f = c.signal(J);
    pairs.emplace_back(f, c.signal(J));
  }
  for (const auto& m : methods)
    for (double p : {2.0, 4.0})
      for (double q : {1.0, 2.0}) {
        SpaceSpec spec = bspec(Family::BesovDiff, 0.5, 0.0, p, q);
        CellAcc cell = c.cell({{"method", m}, {"p", p}, {"q", q}});
        for (size_t i = 0; i < pairs.size(); ++i) {
          const auto& [f, g] = pairs[i];
          cell.ratio(method_norm(m, f + g, spec, J), method_norm(m, f, spec, J) + method_norm(m, g, spec, J),
                     sample_tag(i));
        }
        c.add(cell);
      }
  return c.report;
}

SuiteReport partition_unity(Ctx& c) {
  for (int jm = 2; jm <= std::max(2, c.o.J - 2); ++jm) {
    CellAcc cell = c.cell({{"j_max", jm}});
    DyadicPartition part = make_partition(jm);
    for (long k = -(1L << jm); k <= (1L << jm); ++k) {
      double sum = 0.0;
      for (int j = 0; j <= jm; ++j) sum += part.at(j, k);
      cell.error(std::abs(sum - 1.0), "k=" + std::to_string(k));
    }
    c.add(cell);
  }
  return c.report;
}

SuiteReport embedding_monotonicity(Ctx& c) {
  const int J = c.o.J;
  const EmbeddingClaim& claim = find_claim("besov-scale");
  auto fs = c.signals(c.samples(), J);
  auto part = partition_for_grid(J);
  int found = 0;
  for (int tries = 0; found < 10 && tries < 1000; ++tries) {
    Params P = claim.sample(c.rng);
    if (!claim.predicate(P)) continue;
    ++found;
    json cp = to_json(P);
    CellAcc cell = c.cell(cp);
    SpaceSpec s0 = bspec(Family::BesovFourier, P.at("s0"), P.at("b0"), P.at("p"), P.at("q0"));
    SpaceSpec s1 = bspec(Family::BesovFourier, P.at("s1"), P.at("b1"), P.at("p"), P.at("q1"));
    for (size_t i = 0; i < fs.size(); ++i)
      cell.ratio(norm_besov_fourier(fs[i], s1, part, J).value, norm_besov_fourier(fs[i], s0, part, J).value,
                 sample_tag(i));
    c.add(cell);
  }
  return c.report;
}

// ---- profiles ------------------------------------------------------------

SuiteReport oracle_soundness(Ctx& c) {
  CellAcc cell = c.cell({{"X", 200}, {"divergent_above", 1.5}, {"convergent_below", 1.01}});
  int disagreements = 0;
  std::string first;
  for (int i = 0; i < c.samples(); ++i) {
    int level = static_cast<int>(c.rng.integer(0, 2));
    bool at_zero = c.rng.coin();
    double sign = c.rng.coin() ? 1.0 : -1.0;
    double margin = c.rng.uniform(0.1, 1.0);
    double A = 0.0, B = c.rng.uniform(-2.0, 2.0), C = c.rng.uniform(-2.0, 2.0);
    if (level == 0) A = sign * margin;
    if (level == 1) B = -1.0 + sign * margin;
    if (level == 2) {
      B = -1.0;
      C = -1.0 + sign * margin;
    }
    bool oracle = finiteness_oracle(A, B, C, at_zero ? End::Zero : End::Infinity);
    double growth = partial_integral_growth(A, B, C, at_zero);
    bool agree = oracle ? growth < 1.01 : growth > 1.5;
    if (!agree && disagreements++ == 0)
      first = "A=" + show(A) + " B=" + show(B) + " C=" + show(C) + (at_zero ? " at 0" : " at inf") +
              " growth=" + show(growth);
  }
  // the cell value is the number of disagreements
  cell.error(disagreements, first);
  SuiteCell out = cell.finish();
  out.samples = c.samples();
  c.report.cells.push_back(out);
  return c.report;
}

SuiteReport hardy(Ctx& c) {
  auto results = hardy_suite(c.samples(), stream_seed(c.o.seed, "hardy-integrals/trials"));
  for (const auto& r : results) {
    CellAcc cell = c.cell({{"form", hardy_form_name(r.cell.form)},
                           {"lambda", r.cell.lambda},
                           {"q", r.cell.q},
                           {"b", r.cell.b}});
    cell.ratio(r.max_constant, 1.0, std::to_string(r.trials) + " trials");
    SuiteCell out = cell.finish();
    out.samples = r.trials;
    c.report.cells.push_back(out);
  }
  return c.report;
}

SuiteReport gm_consistency(Ctx& c) {
  CellAcc diff = c.cell({{"pair", "difference characterizations"}});
  CellAcc four = c.cell({{"pair", "Fourier characterizations"}});
  for (int i = 0; i < c.samples(); ++i) {
    const double ps[] = {1.5, 2.0, 3.0}, qs[] = {1.0, 2.0, 4.0, kInf};
    double s = c.rng.coin() ? 0.3 : 0.7;
    double p = ps[c.rng.integer(0, 2)], q = qs[c.rng.integer(0, 3)];
    double b = c.rng.uniform(-1.0, 1.0);
    // place the power exponent at, or near, the critical decay rate
    double crit = -(s + 1.0 - 1.0 / p);
    double a = c.rng.coin(0.4) ? crit : crit + c.rng.uniform(-0.5, 0.5);
    PLTerm law{1.0, a, c.rng.uniform(-3.0, 3.0), c.rng.uniform(-2.0, 2.0)};
    PowerLogProfile F;
    F.inner = {1.0, 0.0, 0.0, 0.0};
    F.outer = law;
    GMSequence seq;
    seq.a.law = law;
    std::string tag = "s=" + show(s) + " b=" + show(b) + " p=" + show(p) + " q=" + show(q) + " law=(" + show(a) +
                      "," + show(law.b) + "," + show(law.c) + ")";
    bool f1 = gm_besov_diff_char(F, 1, s, b, p, q).finite;
    bool f2 = gm_seq_bbesov_char(seq, s, b, p, q).finite;
    diff.error(f1 == f2 ? 0.0 : 1.0, tag);
    bool g1 = gm_besov_fourier_char(F, 1, s, b, p, q).finite;
    bool g2 = gm_seq_besov_char(seq, s, b, p, q).finite;
    four.error(g1 == g2 ? 0.0 : 1.0, tag);
  }
  c.add(diff);
  c.add(four);
  return c.report;
}

GMSequence random_monotone(Rng& rng) {
  GMSequence g;
  long n = rng.integer(4, 64);
  double v = rng.uniform(0.5, 1.5);
  for (long i = 0; i < n; ++i) {
    g.a.list.push_back(v);
    v *= rng.uniform(0.5, 1.0);
  }
  return g;
}

SuiteReport gm_realization(Ctx& c) {
  CellAcc cell = c.cell({{"s", 0}, {"b", 0}, {"p", 2}, {"factor", "sqrt(pi)"}});
  SpaceSpec spec = bspec(Family::Sobolev, 0.0, 0.0, 2.0, 2.0);
  for (int i = 0; i < c.samples(); ++i) {
    GMSequence g = random_monotone(c.rng);
    if (c.o.zero_signal) g.a.list.assign(g.a.list.size(), 0.0);
    double seq = gm_seq_sobolev_char(g, 0.0, 0.0, 2.0).value.value_or(kInf);
    double direct = norm_sobolev(realize(g, static_cast<long>(g.a.list.size())), spec, c.o.J).value;
    cell.relative(std::sqrt(kPi) * seq, direct, sample_tag(i) + " length " + std::to_string(g.a.list.size()));
  }
  c.add(cell);
  return c.report;
}

// ---- lacunary ------------------------------------------------------------

SuiteReport lacunary_p(Ctx& c) {
  const int J = c.o.J;
  const int jm = std::min(7, J - 5);
  std::vector<LacunarySeq> seqs;
  for (int i = 0; i < c.samples(); ++i) {
    LacunarySeq s;
    for (int j = 0; j <= jm; ++j) s.coeffs[j] = c.o.zero_signal ? 0.0 : c.rng.uniform(0.1, 1.0) / (1.0 + j);
    seqs.push_back(s);
  }
  struct Idx {
    double s, b, q;
  };
  const std::vector<Idx> idx = {{0.3, 0.0, 2.0}, {0.0, 0.5, 1.0}, {0.5, -0.3, kInf}};
  auto part = partition_for_grid(J);
  for (double p : {1.5, 2.0, 4.0})
    for (const auto& x : idx) {
      CellAcc cell = c.cell({{"p", p}, {"s", x.s}, {"b", x.b}, {"q", num(x.q)}});
      SpaceSpec spec = bspec(Family::BesovFourier, x.s, x.b, p, x.q);
      for (size_t i = 0; i < seqs.size(); ++i) {
        double fourier = norm_besov_fourier(realize(seqs[i], jm), spec, part, J).value;
        double seq = lac_norm_fourier(seqs[i], x.s, x.b, x.q).besov.value.value_or(kInf);
        cell.ratio(fourier, seq, sample_tag(i));
      }
      c.add(cell);
    }
  return c.report;
}

LacunarySeq random_law(Rng& rng, double s) {
  LacunarySeq seq;
  double r = rng.coin() ? -s : -s + rng.uniform(-0.3, 0.3);
  seq.law = LacunaryLaw{1.0, r, rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
  return seq;
}

std::string law_tag(const LacunarySeq& seq) {
  const auto& L = *seq.law;
  return "law r=" + show(L.r) + " a=" + show(L.a) + " c=" + show(L.c);
}

SuiteReport lacunary_positive_s(Ctx& c) {
  CellAcc cell = c.cell({{"s", "> 0"}});
  const double qs[] = {1.0, 2.0, 4.0, kInf};
  for (int i = 0; i < c.samples(); ++i) {
    double s = c.rng.uniform(0.1, 1.0), b = c.rng.uniform(-1.0, 1.0), q = qs[c.rng.integer(0, 3)];
    LacunarySeq seq = random_law(c.rng, s);
    if (c.rng.coin(0.3)) {
      seq.law.reset();
      for (int j = 0; j < 10; ++j) seq.coeffs[j] = c.rng.uniform(0.0, 1.0);
    }
    FiniteVerdict x = lac_norm_bbesov(seq, s, b, q);
    FiniteVerdict y = lac_norm_fourier(seq, s, b, q).besov;
    std::string tag = "s=" + show(s) + " b=" + show(b) + " q=" + show(q) + " " + (seq.law ? law_tag(seq) : "finite list");
    if (x.finite != y.finite)
      cell.error(1.0, tag);
    else if (x.finite)
      cell.relative(*x.value, *y.value, tag);
    else
      cell.error(0.0, tag);
  }
  c.add(cell);
  return c.report;
}

SuiteReport lacunary_collapse(Ctx& c) {
  CellAcc cell = c.cell({{"q", ">= 2"}, {"s", "> 0"}});
  const double qs[] = {2.0, 3.0, 4.0, kInf};
  for (int i = 0; i < c.samples(); ++i) {
    double s = c.rng.uniform(0.1, 1.0), b = c.rng.uniform(-1.0, 1.0), q = qs[c.rng.integer(0, 3)];
    LacunarySeq seq = random_law(c.rng, s);
    const LacunaryLaw L = *seq.law;
    // nested form: sum_j 2^{jsq}(1+j)^{bq} (sum_{k>=j} |b_k|^2)^{q/2}
    SeriesSpec inner;
    inner.log_scale = false;
    inner.n0 = 0;
    inner.n_direct = 256;
    inner.g.cu = 2.0 * L.r * kLn2;
    inner.g.cv = 2.0 * L.a;
    inner.g.cw = 2.0 * L.c;
    inner.exact = [L](long j) { return std::pow(L(static_cast<int>(j)), 2.0); };
    bool sup = std::isinf(q);
    LogExpr weight;
    weight.cu = (sup ? 1.0 : q) * s * kLn2;
    weight.cv = (sup ? 1.0 : q) * b;
    bool nested = nested_series(inner, weight, sup ? 0.5 : q / 2.0, sup).finite;
    bool flat = lac_norm_fourier(seq, s, b, q).besov.finite;
    cell.error(nested == flat ? 0.0 : 1.0, "s=" + show(s) + " b=" + show(b) + " q=" + show(q) + " " + law_tag(seq));
  }
  c.add(cell);
  return c.report;
}

// ---- kfunc ---------------------------------------------------------------

WeightedCouple power_weights(double alpha) {
  return {[alpha](long k) { return std::pow(std::abs(static_cast<double>(k)), alpha); }};
}

SuiteReport k_moduli(Ctx& c) {
  auto fs = c.signals(c.samples(), c.o.J, true);
  for (double alpha : {0.7, 1.0, 2.0}) {
    CellAcc cell = c.cell({{"alpha", alpha}, {"p", 2}});
    for (size_t i = 0; i < fs.size(); ++i)
      for (int j = 1; j <= 8; ++j) {
        double t = std::ldexp(1.0, -j);
        cell.ratio(k_realization(fs[i], alpha, t, 2.0, c.o.J), modulus_frac_l2(fs[i], alpha, t),
                   sample_tag(i) + " t=2^-" + std::to_string(j));
      }
    c.add(cell);
  }
  return c.report;
}

SuiteReport k_monotone(Ctx& c) {
  auto fs = c.signals(c.samples(), c.o.J);
  for (double alpha : {1.0, 2.0}) {
    CellAcc mono = c.cell({{"alpha", alpha}, {"check", "K nondecreasing"}});
    CellAcc conc = c.cell({{"alpha", alpha}, {"check", "K/t nonincreasing"}});
    WeightedCouple w = power_weights(alpha);
    for (size_t i = 0; i < fs.size(); ++i) {
      double prev_t = 0.0, prev_K = 0.0;
      for (int e = -40; e <= 8; ++e) {
        double t = std::exp2(e / 4.0);
        double K = k_hilbert_quadratic(fs[i], w, t);
        if (e > -40) {
          std::string tag = sample_tag(i) + " t=" + show(t);
          mono.error(K > 0.0 ? std::max(0.0, prev_K - K) / K : 0.0, tag);
          double a = prev_K / prev_t, b = K / t;
          conc.error(a > 0.0 ? std::max(0.0, b - a) / a : 0.0, tag);
        }
        prev_t = t;
        prev_K = K;
      }
    }
    c.add(mono);
    c.add(conc);
  }
  return c.report;
}

SuiteReport k_weierstrass(Ctx& c) {
  auto fs = c.signals(c.samples(), c.o.J);
  for (double alpha : {0.7, 1.0, 2.0}) {
    CellAcc cell = c.cell({{"alpha", alpha}});
    WeightedCouple w = power_weights(alpha);
    for (size_t i = 0; i < fs.size(); ++i)
      for (int j = 0; j <= 8; ++j) {
        double t = std::ldexp(1.0, -j);
        Spectrum r = apply_multiplier(fs[i], [&](long k) { return cplx(1.0 - weierstrass_symbol(k, t, alpha)); });
        cell.ratio(l2_norm(r), k_hilbert_quadratic(fs[i], w, std::pow(t, alpha)),
                   sample_tag(i) + " t=2^-" + std::to_string(j));
      }
    c.add(cell);
  }
  return c.report;
}

SuiteReport k_ball(Ctx& c) {
  auto fs = c.signals(c.samples(), c.o.J);
  const int l = 1;
  CellAcc cell = c.cell({{"l", l}});
  WeightedCouple w = power_weights(2.0 * l);
  for (size_t i = 0; i < fs.size(); ++i)
    for (int j = 0; j <= 8; ++j) {
      double t = std::ldexp(1.0, -j);
      Spectrum r = apply_multiplier(fs[i], [&](long k) { return cplx(1.0 - ball_average_symbol(k, t, l)); });
      cell.ratio(l2_norm(r), k_hilbert_quadratic(fs[i], w, std::pow(t, 2.0 * l)),
                 sample_tag(i) + " t=2^-" + std::to_string(j));
    }
  c.add(cell);
  return c.report;
}

SuiteReport vp_embedding(Ctx& c) {
  const int J = std::min(c.o.J, 10);
  Grid g(J);
  const double p = 2.0;
  CellAcc cell = c.cell({{"p", p}, {"s", 1.0 / p}, {"b", 0}, {"q", "inf"}, {"J", J}});
  SpaceSpec spec = bspec(Family::BesovDiff, 1.0 / p, 0.0, p, kInf, 1);
  for (int i = 0; i < c.samples(); ++i) {
    Signal x = idft(c.signal(J), g);
    cell.ratio(norm_besov_diff(x, spec).value, lp_norm(x, p) + vp_seminorm(x, p), sample_tag(i));
  }
  c.add(cell);
  return c.report;
}

// ---- operators -----------------------------------------------------------

template <class F>
SuiteReport t_sweep(Ctx& c, json params, F sides) {
  auto fs = c.signals(c.samples(), c.o.J, true);
  CellAcc cell = c.cell(std::move(params));
  for (size_t i = 0; i < fs.size(); ++i)
    for (int j = 1; j <= 8; ++j) {
      auto [a, b] = sides(fs[i], std::ldexp(1.0, -j));
      cell.ratio(a, b, sample_tag(i) + " t=2^-" + std::to_string(j));
    }
  c.add(cell);
  return c.report;
}

SuiteReport derivative_modulus(Ctx& c) {
  int J = c.o.J;
  return t_sweep(c, {{"k", 1}, {"m", 1}, {"p", 2}, {"q", 2}},
                 [J](const Spectrum& f, double t) { return trebels_bound(f, 1, 1, t, 2.0, 2.0, J); });
}

SuiteReport riesz(Ctx& c) {
  return t_sweep(c, {{"sigma", 0.5}, {"alpha", 1}},
                 [](const Spectrum& f, double t) { return riesz_equiv(f, 0.5, 1.0, t); });
}

SuiteReport bessel(Ctx& c) {
  return t_sweep(c, {{"sigma", 0.5}, {"alpha", 1}},
                 [](const Spectrum& f, double t) { return bessel_equiv(f, 0.5, 1.0, t); });
}

SuiteReport fraclap(Ctx& c) {
  auto fs = c.signals(c.samples(), c.o.J, true);
  for (double s : {0.25, 0.5, 0.75}) {
    CellAcc cell = c.cell({{"s", s}, {"lambda", 1}});
    for (size_t i = 0; i < fs.size(); ++i)
      for (int j = 1; j <= 8; ++j) {
        auto [a, b] = fraclap_equiv(fs[i], s, 1.0, std::ldexp(1.0, -j));
        cell.ratio(a, b, sample_tag(i) + " t=2^-" + std::to_string(j));
      }
    c.add(cell);
  }
  return c.report;
}

SuiteReport lift_identity(Ctx& c) {
  auto fs = c.signals(c.samples(), c.o.J);
  for (double sigma : {0.5, 1.5, -0.7}) {
    CellAcc cell = c.cell({{"sigma", sigma}});
    for (size_t i = 0; i < fs.size(); ++i) {
      Spectrum back =
          apply_operator(apply_operator(fs[i], OperatorSpec::bessel(sigma)), OperatorSpec::bessel(-sigma));
      double scale = max_abs(fs[i]);
      cell.error(scale > 0.0 ? max_abs_diff(back, fs[i]) / scale : max_abs(back), sample_tag(i));
    }
    c.add(cell);
  }
  return c.report;
}

SuiteReport derivative_norm(Ctx& c) {
  const int J = c.o.J;
  auto part = partition_for_grid(J);
  auto fs = c.signals(c.samples(), J);
  const double s = 1.5;
  const int m = 1;
  for (double p : {2.0, 3.0})
    for (double b : {0.0, 1.0})
      for (double q : {1.0, 2.0, kInf}) {
        CellAcc cell = c.cell({{"m", m}, {"s", s}, {"b", b}, {"p", p}, {"q", num(q)}});
        SpaceSpec hi = bspec(Family::BesovFourier, s, b, p, q);
        SpaceSpec lo = bspec(Family::BesovFourier, s - m, b, p, q);
        for (size_t i = 0; i < fs.size(); ++i) {
          double sum = 0.0;
          for (int d = 0; d <= m; ++d)
            sum += norm_besov_fourier(apply_operator(fs[i], OperatorSpec::derivative(d)), lo, part, J).value;
          cell.ratio(norm_besov_fourier(fs[i], hi, part, J).value, sum, sample_tag(i));
        }
        c.add(cell);
      }
  return c.report;
}

// ---- catalog -------------------------------------------------------------

SuiteReport registry_soundness(Ctx& c) {
  for (const auto& claim : claim_registry()) {
    CellAcc cell = c.cell({{"claim", claim.id}});
    for (int i = 0; i < c.samples(); ++i) {
      std::string tag = sample_tag(i);
      double bad = 0.0;
      try {
        Params P = claim.sample(c.rng);
        tag += " " + to_json(P).dump();
        Params full = complete_params(claim, P);
        bool a = claim.predicate(full);
        if (a != claim.predicate(full) || a != embed_predicate(claim.id, P)) bad = 1.0;
      } catch (const std::exception& e) {
        bad = 1.0;
        tag += std::string(" threw ") + e.what();
      }
      cell.error(bad, tag);
    }
    c.add(cell);
  }
  return c.report;
}

struct WitnessCase {
  std::string id;
  Params params;
  bool in_scope;  // false: the route is expected to raise NoWitness
};

std::vector<WitnessCase> witness_cases() {
  std::vector<WitnessCase> cases;
  for (const auto& claim : claim_registry()) {
    if (!claim.witness) continue;
    cases.push_back({claim.id, {}, true});
  }
  const std::vector<WitnessCase> routes = {
      {"fourier-besov-into-sobolev", {{"p", 3}, {"q", 4}}, true},
      {"fourier-besov-gap-into-bbesov", {{"p", 3}, {"q", 3}}, true},
      {"fourier-besov-sharp-into-bbesov", {{"p", 3}, {"q", 4}}, true},
      {"fourier-besov-sharp-into-bbesov", {{"p", 3}, {"q", 1.5}}, false},
      {"bbesov-into-fourier-besov-sharp", {{"p", 1.5}, {"q", 1.5}}, true},
      {"bbesov-into-fourier-besov-sharp", {{"p", 1.5}, {"q", 4}}, false},
      {"derivative-bbesov-sharp", {{"p", 3}, {"q", 4}}, true},
      {"lift-bbesov-into-fourier-besov-sharp", {{"p", 1.5}, {"q", 1.5}}, true},
      {"lift-fourier-besov-into-bbesov-sharp", {{"p", 3}, {"q", 4}}, true},
  };
  cases.insert(cases.end(), routes.begin(), routes.end());
  return cases;
}

SuiteReport witness_soundness(Ctx& c) {
  for (const auto& wc : witness_cases()) {
    CellAcc cell = c.cell({{"claim", wc.id}, {"params", to_json(wc.params)}});
    double bad = 1.0;
    std::string tag;
    try {
      Verdict v = verify_claim(wc.id, wc.params);
      tag = v.note;
      if (wc.in_scope)
        bad = (!v.holds && v.source && v.target && v.source->finite && !v.target->finite) ? 0.0 : 1.0;
      else
        bad = (!v.holds && !v.witness && v.pass) ? 0.0 : 1.0;
    } catch (const std::exception& e) {
      tag = e.what();
    }
    cell.error(bad, tag);
    c.add(cell);
  }
  return c.report;
}

SuiteReport predicate_consistency(Ctx& c) {
  CellAcc cell = c.cell({{"p", 2}, {"q", 2}});
  auto pred = [](const char* id, const Params& P) { return embed_predicate(id, P); };
  for (int i = 0; i < c.samples(); ++i) {
    double b = c.rng.uniform(-0.45, 1.0);
    double xi = b + 0.5;
    int mode = static_cast<int>(c.rng.integer(0, 2));
    if (mode == 1) xi += c.rng.uniform(-0.5, 0.5);
    if (mode == 2) xi += c.rng.coin() ? 1e-3 : -1e-3;
    Params P = {{"p", 2.0}, {"q", 2.0}, {"b", b}, {"xi", xi}};
    Params Q = {{"p", 2.0}, {"q", 2.0}, {"b", b}};
    int bad = 0;
    // B^{0,xi}_{2,2} and H^{0,xi}_2 are the same space
    bad += pred("fourier-besov-into-bbesov", P) != pred("sobolev-log-into-bbesov", P);
    bad += pred("bbesov-into-fourier-besov", P) != pred("bbesov-into-sobolev-log", P);
    bad += pred("bbesov-equals-fourier-besov", P) != pred("bbesov-equals-sobolev", P);
    if (mode == 0) {
      bad += pred("fourier-besov-into-bbesov", P) != pred("sobolev-into-bbesov", Q);
      bad += pred("bbesov-into-fourier-besov", P) != pred("bbesov-into-sobolev", Q);
    }
    cell.error(bad, "b=" + show(b) + " xi=" + show(xi));
  }
  c.add(cell);
  return c.report;
}

// ---- cli -----------------------------------------------------------------

SuiteReport determinism(Ctx& c) {
  const std::string seed = std::to_string(c.o.seed);
  const std::vector<std::vector<std::string>> commands = {
      {"sweep", "--quantity", "norm-ratio", "--method", "heat", "--s", "0.3,0.7", "--family", "random", "--count",
       "3", "--grid-J", "10", "--seed", seed},
      {"sweep", "--quantity", "fraclap-trace", "--order", "0.5", "--family", "random-zero-mean", "--seed", seed},
      {"verify", "sobolev-gap-into-bbesov"},
      {"norm", "--builtin", "random", "--methods", "differences,fourier", "--seed", seed, "--format", "csv"},
  };
  for (const auto& cmd : commands) {
    std::string joined;
    for (const auto& a : cmd) joined += (joined.empty() ? "" : " ") + a;
    CellAcc cell = c.cell({{"command", joined}});
    std::ostringstream out1, out2, err;
    int r1 = run_cli(cmd, out1, err);
    int r2 = run_cli(cmd, out2, err);
    bool same = r1 == 0 && r2 == 0 && out1.str() == out2.str() && !out1.str().empty();
    cell.error(same ? 0.0 : 1.0, "exit " + std::to_string(r1) + "/" + std::to_string(r2) + " " + err.str());
    c.add(cell);
  }
  return c.report;
}

SuiteReport builtin_docs(Ctx& c) {
  std::ostringstream out, err;
  int rc = run_cli({"list", "families"}, out, err);
  const std::string listing = out.str();
  for (const auto& fam : builtin_families()) {
    CellAcc cell = c.cell({{"family", fam.name}});
    bool ok = rc == 0 && !fam.description.empty() && listing.find(fam.name) != std::string::npos &&
              listing.find(fam.description) != std::string::npos;
    cell.error(ok ? 0.0 : 1.0, "missing from the family listing");
    c.add(cell);
  }
  return c.report;
}

SuiteReport completeness(Ctx& c) {
  for (const auto& id : declared_invariants()) {
    CellAcc cell = c.cell({{"invariant", id}});
    auto miss = uncovered_invariants();
    cell.error(std::count(miss.begin(), miss.end(), id) ? 1.0 : 0.0, "no suite covers it");
    c.add(cell);
  }
  return c.report;
}

using SuiteFn = SuiteReport (*)(Ctx&);

SuiteInfo make(const std::string& name, const std::string& description, const std::string& module, SuiteFn fn) {
  return {name, description, {module + "/" + name}, [name, fn](const SuiteOptions& o) {
            Ctx c(o, protocol_for(name));
            return fn(c);
          }};
}

}  // namespace

double partial_integral_growth(double A, double B, double C, bool at_zero, double X) {
  // With u = |log t| the integrand is e^{sA u}(1+u)^B(1+log(1+u))^C du, s = -1 near 0.
  const double sA = at_zero ? -A : A;
  std::function<double(double)> g;
  if (A != 0.0)
    g = [=](double u) { return std::exp(sA * u + B * std::log1p(u) + C * std::log1p(std::log1p(u))); };
  else if (B != -1.0)  // v = log(1+u): e^{(B+1)v}(1+v)^C dv
    g = [=](double v) { return std::exp((B + 1.0) * v + C * std::log1p(v)); };
  else  // w = log(1+v): e^{(C+1)w} dw
    g = [=](double w) { return std::exp((C + 1.0) * w); };
  auto I = [&](double hi) {
    double acc = 0.0;
    for (double a = 0.0; a < hi; a += 1.0)
      acc += boost::math::quadrature::gauss<double, 20>::integrate(g, a, std::min(a + 1.0, hi));
    return acc;
  };
  return I(2.0 * X) / I(X);
}

bool SuiteReport::pass() const {
  return std::all_of(cells.begin(), cells.end(), [](const SuiteCell& c) { return c.pass; });
}

double SuiteReport::worst() const {
  double w = 0.0;
  for (const auto& c : cells) w = std::max(w, c.max_ratio);
  return w;
}

json SuiteReport::to_json() const {
  json cs = json::array();
  for (const auto& c : cells) {
    json j = {{"params", c.params}, {"max_ratio", num(c.max_ratio)}, {"spread", num(c.spread)}, {"pass", c.pass}};
    j["threshold"] = num(c.threshold);
    j["samples"] = c.samples;
    if (!c.pass) j["offending"] = c.offending;
    cs.push_back(std::move(j));
  }
  json out = {{"suite", suite}, {"cells", cs}, {"pass", pass()}};
  if (!note.empty()) out["note"] = note;
  return out;
}

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> reg = {
      make("parseval", "L2 norm on the grid against the coefficient sum; dft/idft round trip", "core_signal",
           parseval),
      make("holder-monotonicity", "normalized Lp norms increase with p", "core_signal", holder),
      make("multiplier-composition", "two multipliers in sequence equal their product", "core_signal",
           multiplier_composition),
      make("modulus-monotone-doubling", "moduli are nondecreasing and at most double per order", "smoothness",
           monotone_doubling),
      make("marchaud", "lower-order modulus bounded by the higher-order tail integral", "smoothness", marchaud),
      make("sharp-jackson", "tail integral of higher moduli bounded by the lower modulus at p = 2", "smoothness",
           sharp_jackson),
      make("modulus-l2-agreement", "grid modulus against the symbol formula at p = 2", "smoothness", modulus_l2),
      make("equivalence-ratio", "seven characterizations against the difference norm at p = 2", "norms",
           equivalence),
      make("homogeneity", "N(lambda f) = |lambda| N(f) for every norm method", "norms", homogeneity),
      make("quasi-triangle", "N(f+g) <= C (N(f) + N(g))", "norms", quasi_triangle),
      make("partition-of-unity", "the dyadic resolution sums to one", "norms", partition_unity),
      make("embedding-monotonicity", "norms respect the Besov scale embeddings", "norms", embedding_monotonicity),
      make("oracle-soundness", "finiteness oracle against numeric partial integrals", "profiles",
           oracle_soundness),
      make("hardy-integrals", "empirical Hardy constants", "profiles", hardy),
      make("gm-characterization-consistency", "profile and sequence characterizations agree at s > 0",
           "profiles", gm_consistency),
      make("gm-periodic-realization", "sequence Sobolev formula against the realized series at p = 2",
           "profiles", gm_realization),
      make("lacunary-p-independence", "lacunary Fourier-analytic norms do not depend on p", "lacunary",
           lacunary_p),
      make("lacunary-positive-s", "difference and Fourier lacunary norms coincide for s > 0", "lacunary",
           lacunary_positive_s),
      make("lacunary-hardy-collapse", "nested and flat lacunary forms agree in finiteness", "lacunary",
           lacunary_collapse),
      make("k-moduli", "realization K-functional against the fractional modulus", "kfunc", k_moduli),
      make("k-monotone-concave", "K(t) nondecreasing, K(t)/t nonincreasing", "kfunc", k_monotone),
      make("k-weierstrass", "Weierstrass approximation error against the quadratic K-functional", "kfunc",
           k_weierstrass),
      make("k-ball-average", "ball average error against the quadratic K-functional", "kfunc", k_ball),
      make("vp-embedding", "difference norm at s = 1/p bounded by the p-variation", "kfunc", vp_embedding),
      make("derivative-modulus", "modulus of the derivative against the higher-order integral", "operators",
           derivative_modulus),
      make("riesz-equivalence", "Riesz potential modulus against the integral form", "operators", riesz),
      make("bessel-equivalence", "Bessel potential modulus against the integral form", "operators", bessel),
      make("fraclap-equivalence", "fractional Laplacian solve against the modulus of the data", "operators",
           fraclap),
      make("lift-identity", "Bessel lift followed by its inverse is the identity", "operators", lift_identity),
      make("derivative-norm", "Besov norm against the sum of derivative norms one order down", "operators",
           derivative_norm),
      make("registry-soundness", "every claim predicate is total and deterministic on in-domain draws", "catalog",
           registry_soundness),
      make("witness-soundness", "registered witnesses give source finite, target infinite", "catalog",
           witness_soundness),
      make("predicate-consistency", "embedding predicates agree where spaces coincide", "catalog",
           predicate_consistency),
      make("determinism", "repeated commands give byte-identical output", "cli", determinism),
      make("builtin-documentation", "every builtin family is described in the listing", "cli", builtin_docs),
      make("suite-completeness", "every declared invariant has a suite", "smoothcheck", completeness),
  };
  return reg;
}

const SuiteInfo& find_suite(const std::string& name) {
  for (const auto& s : suite_registry())
    if (s.name == name) return s;
  throw BadParams("unknown suite '" + name + "'");
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const SuiteInfo& info = find_suite(name);
  SuiteReport r = info.run(options);
  if (options.zero_signal && r.cells.size() > 0 &&
      std::all_of(r.cells.begin(), r.cells.end(), [](const SuiteCell& c) { return c.samples == 0; }))
    r.note = "vacuous: every sample was the zero signal";
  return r;
}

const std::vector<std::string>& declared_invariants() {
  static const std::vector<std::string> ids = {
      "core_signal/parseval",
      "core_signal/holder-monotonicity",
      "core_signal/multiplier-composition",
      "smoothness/modulus-monotone-doubling",
      "smoothness/marchaud",
      "smoothness/sharp-jackson",
      "smoothness/modulus-l2-agreement",
      "norms/equivalence-ratio",
      "norms/homogeneity",
      "norms/quasi-triangle",
      "norms/partition-of-unity",
      "norms/embedding-monotonicity",
      "profiles/oracle-soundness",
      "profiles/hardy-integrals",
      "profiles/gm-characterization-consistency",
      "profiles/gm-periodic-realization",
      "lacunary/lacunary-p-independence",
      "lacunary/lacunary-positive-s",
      "lacunary/lacunary-hardy-collapse",
      "kfunc/k-moduli",
      "kfunc/k-monotone-concave",
      "kfunc/k-weierstrass",
      "kfunc/k-ball-average",
      "kfunc/vp-embedding",
      "operators/derivative-modulus",
      "operators/riesz-equivalence",
      "operators/bessel-equivalence",
      "operators/fraclap-equivalence",
      "operators/lift-identity",
      "operators/derivative-norm",
      "catalog/registry-soundness",
      "catalog/witness-soundness",
      "catalog/predicate-consistency",
      "cli/determinism",
      "cli/builtin-documentation",
      "smoothcheck/suite-completeness",
  };
  return ids;
}

std::vector<std::string> uncovered_invariants() {
  std::vector<std::string> out;
  for (const auto& id : declared_invariants()) {
    bool covered = false;
    for (const auto& s : suite_registry())
      covered = covered || std::count(s.covers.begin(), s.covers.end(), id) > 0;
    if (!covered) out.push_back(id);
  }
  return out;
}

}  // namespace logsmooth
