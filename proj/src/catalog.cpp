#include "logsmooth/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "logsmooth/errors.hpp"
#include "logsmooth/lacunary.hpp"
#include "logsmooth/norms.hpp"
#include "logsmooth/operators.hpp"

namespace logsmooth {

namespace {

constexpr double kTol = 1e-12;

bool ge(double a, double b) { return a == b || a >= b - kTol; }
bool le(double a, double b) { return a == b || a <= b + kTol; }
bool eq(double a, double b) { return a == b || std::abs(a - b) <= kTol; }
double inv(double x) { return std::isinf(x) ? 0.0 : 1.0 / x; }
double min3(double p, double q) { return std::min({2.0, p, q}); }
double max3(double p, double q) { return std::max({2.0, p, q}); }

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}
void open_p(double p, const char* name = "p") {
  require(p > 1.0 && std::isfinite(p), std::string("needs 1 < ") + name + " < inf");
}
void positive(double q, const char* name = "q") { require(q > 0.0, std::string("needs ") + name + " > 0"); }
void log_b(double b, double q) { require(b > -inv(q), "needs b > -1/q"); }
void positive_eps(double e) { require(e > 0.0, "needs eps > 0"); }

// Midpoint of (lo, hi), or of (lo, hi] when the upper end is admissible.
double window_mid(double lo, double hi) {
  if (!(lo < hi - kTol)) throw DomainError("empty parameter window");
  return 0.5 * (lo + hi);
}

PLTerm pl(double a, double b, double c = 0.0) { return {1.0, a, b, c}; }

PowerLogProfile profile(const PLTerm& inner, const PLTerm& outer) {
  PowerLogProfile F;
  F.inner = inner;
  F.outer = outer;
  return F;
}

LacunarySeq lacunary(double r, double a, double c = 0.0) {
  LacunarySeq s;
  s.law = LacunaryLaw{1.0, r, a, c};
  return s;
}

WitnessFamily profile_witness(std::string route, const PowerLogProfile& F, nlohmann::json window,
                              std::string src, std::function<FiniteVerdict()> source, std::string tgt,
                              std::function<FiniteVerdict()> target) {
  return {"profile", std::move(route), {{"profile", to_json(F)}, {"window", std::move(window)}},
          std::move(src), std::move(tgt), std::move(source), std::move(target)};
}

WitnessFamily lacunary_witness(std::string route, const LacunarySeq& seq, nlohmann::json window,
                               std::string src, std::function<FiniteVerdict()> source, std::string tgt,
                               std::function<FiniteVerdict()> target) {
  return {"lacunary", std::move(route), {{"sequence", to_json(seq)}, {"window", std::move(window)}},
          std::move(src), std::move(tgt), std::move(source), std::move(target)};
}

nlohmann::json window_json(const char* name, double lo, double hi, double value) {
  return {{"parameter", name}, {"lo", lo}, {"hi", hi}, {"value", value}};
}

enum class Extreme { P, Two, Q };

Extreme min_route(double p, double q) {
  if (p <= 2.0 && p <= q) return Extreme::P;
  if (q >= 2.0) return Extreme::Two;
  return Extreme::Q;
}

Extreme max_route(double p, double q) {
  if (p >= 2.0 && p >= q) return Extreme::P;
  if (q <= 2.0) return Extreme::Two;
  return Extreme::Q;
}

[[noreturn]] void no_route(const std::string& what) {
  throw NoWitness("the case where q is the extreme exponent (" + what + ") has no in-scope witness");
}

// ---- holds-branch probes -------------------------------------------------

struct NormKit {
  int J;
  Grid grid;
  DyadicPartition part;

  explicit NormKit(int level) : J(level), grid(level), part(partition_for_grid(level)) {}

  double bdiff(const Spectrum& f, double s, double b, double p, double q) const {
    SpaceSpec sp{Family::BesovDiff, s, b, p, q, static_cast<int>(std::floor(s)) + 1};
    return norm_besov_diff(idft(f, grid), sp).value;
  }
  double bfour(const Spectrum& f, double s, double b, double p, double q) const {
    return norm_besov_fourier(f, {Family::BesovFourier, s, b, p, q, 1}, part, J).value;
  }
  double tl(const Spectrum& f, double s, double b, double p, double q) const {
    return norm_triebel_lizorkin(f, {Family::TriebelLizorkin, s, b, p, q, 1}, part, J).value;
  }
  double sob(const Spectrum& f, double s, double b, double p) const {
    return norm_sobolev(f, {Family::Sobolev, s, b, p, 2.0, 1}, J).value;
  }
};

using Sides = std::function<std::pair<double, double>(const Spectrum&, const NormKit&)>;

ProbeResult finish_probe(ProbeResult r) {
  r.pass = r.max_ratio <= r.threshold;
  return r;
}

double ratio_of(double source, double target, bool two_sided) {
  if (source == 0.0 && target == 0.0) return 1.0;
  double r = target / source;
  return two_sided ? std::max(r, 1.0 / r) : r;
}

// target/source over random real spectra; two_sided also bounds source/target.
ProbeResult spectrum_probe(const ProbeOptions& o, const Sides& sides, bool two_sided, bool zero_mean = false) {
  ProbeResult r;
  r.threshold = o.threshold;
  try {
    NormKit kit(o.J);
    Rng rng(o.seed);
    SpectrumLaw law;
    law.k_max = std::min<long>(law.k_max, 1L << (o.J - 4));
    law.k_min = std::min(law.k_min, law.k_max);
    law.zero_mean = zero_mean;
    for (int i = 0; i < o.samples; ++i) {
      Spectrum f = random_spectrum(rng, law);
      auto [src, tgt] = sides(f, kit);
      r.max_ratio = std::max(r.max_ratio, ratio_of(src, tgt, two_sided));
      ++r.samples;
    }
  } catch (const Error& e) {
    r.note = std::string("probe not applicable: ") + e.what();
    r.max_ratio = 0.0;
  }
  return finish_probe(r);
}

// Monotone (hence general monotone) finite cosine sequences.
GMSequence random_gm(Rng& rng) {
  GMSequence g;
  long n = rng.integer(4, 64);
  double a = 1.0;
  for (long k = 0; k < n; ++k) {
    g.a.list.push_back(a);
    a *= rng.uniform(0.5, 1.0);
  }
  return g;
}

LacunarySeq random_lacunary(Rng& rng, int j_max) {
  LacunarySeq s;
  int n = static_cast<int>(rng.integer(3, j_max));
  for (int j = 0; j <= n; ++j) s.coeffs[j] = rng.uniform(0.1, 1.0) / (1.0 + j);
  return s;
}

double value_of(const FiniteVerdict& v) {
  if (!v.finite || !v.value) throw DomainError("probe quantity is not finite");
  return *v.value;
}

template <class Gen, class Side>
ProbeResult family_probe(const ProbeOptions& o, Gen gen, Side sides, bool two_sided) {
  ProbeResult r;
  r.threshold = o.threshold;
  try {
    Rng rng(o.seed);
    for (int i = 0; i < o.samples; ++i) {
      auto x = gen(rng);
      auto [src, tgt] = sides(x);
      r.max_ratio = std::max(r.max_ratio, ratio_of(src, tgt, two_sided));
      ++r.samples;
    }
  } catch (const Error& e) {
    r.note = std::string("probe not applicable: ") + e.what();
    r.max_ratio = 0.0;
  }
  return finish_probe(r);
}

// ---- parameter sampling --------------------------------------------------

const std::vector<double> kPoolP = {1.25, 1.5, 2.0, 3.0, 4.0};
const std::vector<double> kPoolQ = {0.5, 1.0, 1.5, 2.0, 3.0, 4.0, kInf};
const std::vector<double> kPoolB = {-0.2, 0.0, 0.3, 1.0};

double pick(Rng& rng, const std::vector<double>& pool) {
  return pool[static_cast<size_t>(rng.integer(0, static_cast<long>(pool.size()) - 1))];
}

using Pools = std::map<std::string, std::vector<double>>;

const Pools& default_pools() {
  static const Pools pools = {
      {"p", kPoolP},          {"q", kPoolQ},           {"r", kPoolQ},          {"q0", kPoolQ},
      {"q1", kPoolQ},         {"b", kPoolB},           {"b0", kPoolB},         {"b1", kPoolB},
      {"s", {0.3, 0.5, 1.5}}, {"s0", {0.0, 0.3, 0.5}}, {"s1", {0.0, 0.3, 0.5}}, {"m", {1.0, 2.0}},
      {"sigma", {-0.5, 0.5, 1.0}}, {"p0", {1.25, 1.5}}, {"p1", {5.0, 6.0}},  {"eps", {0.1, 0.25, 0.5}}};
  return pools;
}

// Draw names in order; xi is placed at b plus a threshold offset so that
// boundary cases occur with positive probability.
std::function<Params(Rng&)> sampler(std::vector<std::string> names, Pools overrides = {}) {
  return [names, overrides](Rng& rng) {
    Params P;
    for (const auto& n : names) {
      if (n == "xi") {
        double p = P.count("p") ? P["p"] : 2.0, q = P.count("q") ? P["q"] : 2.0;
        double off = pick(rng, {0.5, inv(p), inv(q), 1.0 / min3(p, q), 1.0 / max3(p, q),
                                1.0 / std::min(p, q), 1.0 / std::max(p, q), 0.0});
        P["xi"] = P["b"] + off + pick(rng, {0.0, 0.0, 0.05, -0.05});
      } else if (n == "b1" && rng.coin(0.3)) {
        P["b1"] = P["b0"] + inv(P["q0"]) - inv(P["q1"]);
      } else if (n == "s1" && rng.coin(0.5)) {
        P["s1"] = P["s0"];
      } else {
        auto it = overrides.find(n);
        P[n] = pick(rng, it != overrides.end() ? it->second : default_pools().at(n));
      }
    }
    return P;
  };
}

// ---- registry construction ----------------------------------------------

struct Builder {
  std::vector<EmbeddingClaim> claims;

  EmbeddingClaim& add(std::string id, std::string statement, std::vector<std::pair<std::string, double>> defaults,
                      std::function<void(const Params&)> domain, std::function<bool(const Params&)> predicate,
                      std::function<Params(Rng&)> draw) {
    EmbeddingClaim c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.defaults = std::move(defaults);
    c.check_domain = std::move(domain);
    c.predicate = std::move(predicate);
    auto check = c.check_domain;
    c.sample = [draw, check](Rng& rng) {
      for (int tries = 0; tries < 10000; ++tries) {
        Params P = draw(rng);
        try {
          check(P);
          return P;
        } catch (const DomainError&) {
        }
      }
      throw DomainError("could not draw an in-domain parameter tuple");
    };
    claims.push_back(std::move(c));
    return claims.back();
  }
};

#define P_(name) P.at(name)

void add_predicate_claims(Builder& B) {
  B.add("identity", "X into X for every space X", {{"p", 2}, {"s", 0.5}, {"b", 0}, {"q", 2}},
        [](const Params& P) {
          require(P_("p") >= 1.0, "needs p >= 1");
          positive(P_("q"));
        },
        [](const Params&) { return true; }, sampler({"p", "s", "b", "q"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          double v = k.bfour(f, P_("s"), P_("b"), P_("p"), P_("q"));
          return std::make_pair(v, v);
        }, true);
      };

  auto fb_domain = [](const Params& P) {
    open_p(P_("p"));
    positive(P_("q"));
    positive(P_("r"), "r");
  };
  B.add("triebel-into-besov", "F^{s,b}_{p,r} into B^{s,b}_{p,q}; holds iff q >= max{p,r}",
        {{"p", 2}, {"q", 2}, {"r", 2}, {"s", 0.5}, {"b", 0}}, fb_domain,
        [](const Params& P) { return ge(P_("q"), std::max(P_("p"), P_("r"))); },
        sampler({"p", "q", "r", "s", "b"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          return std::make_pair(k.tl(f, P_("s"), P_("b"), P_("p"), P_("r")),
                                k.bfour(f, P_("s"), P_("b"), P_("p"), P_("q")));
        }, false);
      };
  B.add("besov-into-triebel", "B^{s,b}_{p,q} into F^{s,b}_{p,r}; holds iff q <= min{p,r}",
        {{"p", 2}, {"q", 2}, {"r", 2}, {"s", 0.5}, {"b", 0}}, fb_domain,
        [](const Params& P) { return le(P_("q"), std::min(P_("p"), P_("r"))); },
        sampler({"p", "q", "r", "s", "b"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          return std::make_pair(k.bfour(f, P_("s"), P_("b"), P_("p"), P_("q")),
                                k.tl(f, P_("s"), P_("b"), P_("p"), P_("r")));
        }, false);
      };

  auto pos_domain = [](const Params& P) {
    open_p(P_("p"));
    positive(P_("q"));
    require(P_("s") > 0.0, "needs s > 0");
  };
  B.add("sobolev-into-bbesov-positive", "H^{s,b}_p into Bdiff^{s,b}_{p,q} (s > 0); holds iff q >= max{p,2}",
        {{"p", 2}, {"q", 2}, {"s", 0.5}, {"b", 0}}, pos_domain,
        [](const Params& P) { return ge(P_("q"), std::max(P_("p"), 2.0)); }, sampler({"p", "q", "s", "b"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          return std::make_pair(k.sob(f, P_("s"), P_("b"), P_("p")),
                                k.bdiff(f, P_("s"), P_("b"), P_("p"), P_("q")));
        }, false);
      };
  B.add("bbesov-into-sobolev-positive", "Bdiff^{s,b}_{p,q} into H^{s,b}_p (s > 0); holds iff q <= min{p,2}",
        {{"p", 2}, {"q", 2}, {"s", 0.5}, {"b", 0}}, pos_domain,
        [](const Params& P) { return le(P_("q"), std::min(P_("p"), 2.0)); }, sampler({"p", "q", "s", "b"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          return std::make_pair(k.bdiff(f, P_("s"), P_("b"), P_("p"), P_("q")),
                                k.sob(f, P_("s"), P_("b"), P_("p")));
        }, false);
      };

  std::vector<std::pair<std::string, double>> scale_defaults = {{"p", 2},  {"s0", 0.5}, {"b0", 0}, {"q0", 2},
                                                                {"s1", 0.5}, {"b1", 0},  {"q1", 2}};
  B.add("besov-scale",
        "B^{s0,b0}_{p,q0} into B^{s1,b1}_{p,q1}; holds iff s0 > s1, or s0 = s1 with q0 <= q1 and b0 >= b1, "
        "or s0 = s1 with q0 > q1 and b0 + 1/q0 > b1 + 1/q1",
        scale_defaults,
        [](const Params& P) {
          require(P_("p") >= 1.0, "needs p >= 1");
          positive(P_("q0"), "q0");
          positive(P_("q1"), "q1");
        },
        [](const Params& P) {
          double s0 = P_("s0"), s1 = P_("s1"), b0 = P_("b0"), b1 = P_("b1"), q0 = P_("q0"), q1 = P_("q1");
          if (s0 > s1 + kTol) return true;
          if (!eq(s0, s1)) return false;
          if (le(q0, q1)) return ge(b0, b1);
          return b0 + inv(q0) > b1 + inv(q1) + kTol;
        },
        sampler({"p", "s0", "b0", "q0", "s1", "q1", "b1"}, {{"s0", {0.3, 0.5}}, {"s1", {0.3, 0.5}}}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          return std::make_pair(k.bfour(f, P_("s0"), P_("b0"), P_("p"), P_("q0")),
                                k.bfour(f, P_("s1"), P_("b1"), P_("p"), P_("q1")));
        }, false);
      };
  B.add("bbesov-scale",
        "Bdiff^{s0,b0}_{p,q0} into Bdiff^{s1,b1}_{p,q1}; at s0 = s1 = 0 holds iff b0 + 1/q0 > b1 + 1/q1, "
        "or equality there with q0 <= q1; for s > 0 as for the Fourier-analytic scale",
        scale_defaults,
        [](const Params& P) {
          require(P_("p") >= 1.0, "needs p >= 1");
          for (const char* i : {"0", "1"}) {
            double s = P.at(std::string("s") + i), b = P.at(std::string("b") + i), q = P.at(std::string("q") + i);
            require(s >= 0.0, "needs s >= 0");
            require(q > 0.0, "needs q > 0");
            if (s == 0.0) require(b > -inv(q), "needs b > -1/q at s = 0");
          }
        },
        [](const Params& P) {
          double s0 = P_("s0"), s1 = P_("s1"), b0 = P_("b0"), b1 = P_("b1"), q0 = P_("q0"), q1 = P_("q1");
          if (s0 > s1 + kTol) return true;
          if (!eq(s0, s1)) return false;
          double l0 = b0 + inv(q0), l1 = b1 + inv(q1);
          if (s0 > 0.0) return le(q0, q1) ? ge(b0, b1) : l0 > l1 + kTol;
          if (l0 > l1 + kTol) return true;
          return eq(l0, l1) && le(q0, q1);
        },
        sampler({"p", "s0", "b0", "q0", "s1", "q1", "b1"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          return std::make_pair(k.bdiff(f, P_("s0"), P_("b0"), P_("p"), P_("q0")),
                                k.bdiff(f, P_("s1"), P_("b1"), P_("p"), P_("q1")));
        }, false);
      };

  auto zero_domain = [](const Params& P) {
    open_p(P_("p"));
    positive(P_("q"));
    log_b(P_("b"), P_("q"));
  };
  B.add("sobolev-into-bbesov", "H^{0,b+1/q}_p into Bdiff^{0,b}_{p,q}; holds iff q >= max{p,2}",
        {{"p", 2}, {"q", 2}, {"b", 0}}, zero_domain,
        [](const Params& P) { return ge(P_("q"), std::max(P_("p"), 2.0)); }, sampler({"p", "q", "b"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          double p = P_("p"), q = P_("q"), b = P_("b");
          return std::make_pair(k.sob(f, 0.0, b + inv(q), p), k.bdiff(f, 0.0, b, p, q));
        }, false);
      };
  B.add("bbesov-into-sobolev", "Bdiff^{0,b}_{p,q} into H^{0,b+1/q}_p; holds iff q <= min{p,2}",
        {{"p", 2}, {"q", 2}, {"b", 0}}, zero_domain,
        [](const Params& P) { return le(P_("q"), std::min(P_("p"), 2.0)); }, sampler({"p", "q", "b"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          double p = P_("p"), q = P_("q"), b = P_("b");
          return std::make_pair(k.bdiff(f, 0.0, b, p, q), k.sob(f, 0.0, b + inv(q), p));
        }, false);
      };

  auto equal_pred = [](const Params& P) {
    return eq(P_("p"), 2.0) && eq(P_("q"), 2.0) && eq(P_("xi"), P_("b") + 0.5);
  };
  B.add("bbesov-equals-sobolev", "Bdiff^{0,b}_{p,q} = H^{0,xi}_p; holds iff p = q = 2 and xi = b + 1/2",
        {{"p", 2}, {"q", 2}, {"b", 0}, {"xi", 0.5}}, zero_domain, equal_pred, sampler({"p", "q", "b", "xi"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          return std::make_pair(k.sob(f, 0.0, P_("xi"), P_("p")), k.bdiff(f, 0.0, P_("b"), P_("p"), P_("q")));
        }, true);
      };
  B.add("bbesov-equals-fourier-besov", "Bdiff^{0,b}_{p,q} = B^{0,xi}_{p,q}; holds iff p = q = 2 and xi = b + 1/2",
        {{"p", 2}, {"q", 2}, {"b", 0}, {"xi", 0.5}}, zero_domain, equal_pred, sampler({"p", "q", "b", "xi"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          return std::make_pair(k.bfour(f, 0.0, P_("xi"), P_("p"), P_("q")),
                                k.bdiff(f, 0.0, P_("b"), P_("p"), P_("q")));
        }, true);
      };

  B.add("fourier-besov-into-bbesov", "B^{0,xi}_{p,q} into Bdiff^{0,b}_{p,q}; holds iff xi >= b + 1/min{2,p,q}",
        {{"p", 2}, {"q", 2}, {"b", 0}, {"xi", 0.5}}, zero_domain,
        [](const Params& P) { return ge(P_("xi"), P_("b") + 1.0 / min3(P_("p"), P_("q"))); },
        sampler({"p", "q", "b", "xi"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          return std::make_pair(k.bfour(f, 0.0, P_("xi"), P_("p"), P_("q")),
                                k.bdiff(f, 0.0, P_("b"), P_("p"), P_("q")));
        }, false);
      };
  B.add("bbesov-into-fourier-besov", "Bdiff^{0,b}_{p,q} into B^{0,xi}_{p,q}; holds iff xi <= b + 1/max{2,p,q}",
        {{"p", 2}, {"q", 2}, {"b", 0}, {"xi", 0.5}}, zero_domain,
        [](const Params& P) { return le(P_("xi"), P_("b") + 1.0 / max3(P_("p"), P_("q"))); },
        sampler({"p", "q", "b", "xi"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          return std::make_pair(k.bdiff(f, 0.0, P_("b"), P_("p"), P_("q")),
                                k.bfour(f, 0.0, P_("xi"), P_("p"), P_("q")));
        }, false);
      };

  B.add("fourier-besov-into-lp",
        "B^{0,b}_{p,q} into L_p; holds iff b >= 0 when q <= min{2,p}, b > 1/p - 1/q when p <= 2 and p < q, "
        "b > 1/2 - 1/q when p > 2 and q > 2",
        {{"p", 2}, {"q", 2}, {"b", 0}},
        [](const Params& P) {
          open_p(P_("p"));
          positive(P_("q"));
        },
        [](const Params& P) {
          double p = P_("p"), q = P_("q"), b = P_("b");
          if (le(q, std::min(2.0, p))) return ge(b, 0.0);
          if (p <= 2.0) return b > inv(p) - inv(q) + kTol;
          return b > 0.5 - inv(q) + kTol;
        },
        sampler({"p", "q", "b"}, {{"b", {-0.2, 0.0, 0.1, 0.2, 0.5}}}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          return std::make_pair(k.bfour(f, 0.0, P_("b"), P_("p"), P_("q")), lp_norm(f, P_("p"), k.J));
        }, false);
      };

  B.add("sobolev-log-into-bbesov", "H^{0,xi}_p into Bdiff^{0,b}_{p,q} for q >= max{p,2}; holds iff xi >= b + 1/q",
        {{"p", 2}, {"q", 2}, {"b", 0}, {"xi", 0.5}},
        [zero_domain](const Params& P) {
          zero_domain(P);
          require(ge(P_("q"), std::max(P_("p"), 2.0)), "needs q >= max{p,2}");
        },
        [](const Params& P) { return ge(P_("xi"), P_("b") + inv(P_("q"))); }, sampler({"p", "q", "b", "xi"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          return std::make_pair(k.sob(f, 0.0, P_("xi"), P_("p")), k.bdiff(f, 0.0, P_("b"), P_("p"), P_("q")));
        }, false);
      };
  B.add("bbesov-into-sobolev-log", "Bdiff^{0,b}_{p,q} into H^{0,xi}_p for q <= min{p,2}; holds iff xi <= b + 1/q",
        {{"p", 2}, {"q", 2}, {"b", 0}, {"xi", 0.5}},
        [zero_domain](const Params& P) {
          zero_domain(P);
          require(le(P_("q"), std::min(P_("p"), 2.0)), "needs q <= min{p,2}");
        },
        [](const Params& P) { return le(P_("xi"), P_("b") + inv(P_("q"))); }, sampler({"p", "q", "b", "xi"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          return std::make_pair(k.bdiff(f, 0.0, P_("b"), P_("p"), P_("q")), k.sob(f, 0.0, P_("xi"), P_("p")));
        }, false);
      };

  // General monotone and lacunary restrictions.
  auto gm_domain = [](const Params& P) {
    open_p(P_("p"));
    positive(P_("q"));
    require(std::isfinite(P_("q")), "needs q < inf");
    log_b(P_("b"), P_("q"));
  };
  auto gm_sides_sob_bb = [](const Params& P, bool sob_first) {
    return [P, sob_first](const ProbeOptions& o) {
      double p = P_("p"), q = P_("q"), b = P_("b");
      return family_probe(o, random_gm, [=](const GMSequence& g) {
        double sob = value_of(gm_seq_sobolev_char(g, 0.0, b + inv(q), p));
        double bb = value_of(gm_seq_bbesov_char(g, 0.0, b, p, q));
        return sob_first ? std::make_pair(sob, bb) : std::make_pair(bb, sob);
      }, false);
    };
  };
  B.add("gm-sobolev-into-bbesov", "GM and H^{0,b+1/q}_p into Bdiff^{0,b}_{p,q}; holds iff q >= p",
        {{"p", 2}, {"q", 2}, {"b", 0}}, gm_domain, [](const Params& P) { return ge(P_("q"), P_("p")); },
        sampler({"p", "q", "b"}))
      .probe = [gm_sides_sob_bb](const Params& P, const ProbeOptions& o) { return gm_sides_sob_bb(P, true)(o); };
  B.add("gm-bbesov-into-sobolev", "GM and Bdiff^{0,b}_{p,q} into H^{0,b+1/q}_p; holds iff q <= p",
        {{"p", 2}, {"q", 2}, {"b", 0}}, gm_domain, [](const Params& P) { return le(P_("q"), P_("p")); },
        sampler({"p", "q", "b"}))
      .probe = [gm_sides_sob_bb](const Params& P, const ProbeOptions& o) { return gm_sides_sob_bb(P, false)(o); };
  B.add("gm-bbesov-equals-sobolev", "GM: Bdiff^{0,b}_{p,q} = H^{0,b+1/q}_p; holds iff q = p",
        {{"p", 2}, {"q", 2}, {"b", 0}}, gm_domain, [](const Params& P) { return eq(P_("q"), P_("p")); },
        sampler({"p", "q", "b"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        double p = P_("p"), q = P_("q"), b = P_("b");
        return family_probe(o, random_gm, [=](const GMSequence& g) {
          return std::make_pair(value_of(gm_seq_sobolev_char(g, 0.0, b + inv(q), p)),
                                value_of(gm_seq_bbesov_char(g, 0.0, b, p, q)));
        }, true);
      };

  auto gm_s_domain = [](const Params& P) {
    open_p(P_("p"));
    positive(P_("q"));
    require(std::isfinite(P_("q")), "needs q < inf");
  };
  B.add("gm-sobolev-into-fourier-besov", "GM and H^{s,b}_p into B^{s,b}_{p,q}; holds iff q >= p",
        {{"p", 2}, {"q", 2}, {"s", 0.5}, {"b", 0}}, gm_s_domain, [](const Params& P) { return ge(P_("q"), P_("p")); },
        sampler({"p", "q", "s", "b"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        double p = P_("p"), q = P_("q"), s = P_("s"), b = P_("b");
        return family_probe(o, random_gm, [=](const GMSequence& g) {
          return std::make_pair(value_of(gm_seq_sobolev_char(g, s, b, p)), value_of(gm_seq_besov_char(g, s, b, p, q)));
        }, false);
      };
  B.add("gm-fourier-besov-into-sobolev", "GM and B^{s,b}_{p,q} into H^{s,b}_p; holds iff q <= p",
        {{"p", 2}, {"q", 2}, {"s", 0.5}, {"b", 0}}, gm_s_domain, [](const Params& P) { return le(P_("q"), P_("p")); },
        sampler({"p", "q", "s", "b"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        double p = P_("p"), q = P_("q"), s = P_("s"), b = P_("b");
        return family_probe(o, random_gm, [=](const GMSequence& g) {
          return std::make_pair(value_of(gm_seq_besov_char(g, s, b, p, q)), value_of(gm_seq_sobolev_char(g, s, b, p)));
        }, false);
      };
  B.add("gm-bbesov-equals-fourier-besov", "GM: B^{0,b+1/q}_{p,q} = Bdiff^{0,b}_{p,q}; holds iff q = p",
        {{"p", 2}, {"q", 2}, {"b", 0}}, gm_domain, [](const Params& P) { return eq(P_("q"), P_("p")); },
        sampler({"p", "q", "b"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        double p = P_("p"), q = P_("q"), b = P_("b");
        return family_probe(o, random_gm, [=](const GMSequence& g) {
          return std::make_pair(value_of(gm_seq_besov_char(g, 0.0, b + inv(q), p, q)),
                                value_of(gm_seq_bbesov_char(g, 0.0, b, p, q)));
        }, true);
      };

  auto lac_gen = [](Rng& rng) { return random_lacunary(rng, 12); };
  auto lac_sob_bb = [lac_gen](const Params& P, const ProbeOptions& o, int mode) {
    double q = P_("q"), b = P_("b");
    return family_probe(o, lac_gen, [=](const LacunarySeq& s) {
      double sob = value_of(lac_norm_fourier(s, 0.0, b + inv(q), q).sobolev);
      double bb = value_of(lac_norm_bbesov(s, 0.0, b, q));
      return mode == 1 ? std::make_pair(bb, sob) : std::make_pair(sob, bb);
    }, mode == 2);
  };
  B.add("lacunary-sobolev-into-bbesov", "lacunary and H^{0,b+1/q}_p into Bdiff^{0,b}_{p,q}; holds iff q >= 2",
        {{"p", 2}, {"q", 2}, {"b", 0}}, zero_domain, [](const Params& P) { return ge(P_("q"), 2.0); },
        sampler({"p", "q", "b"}))
      .probe = [lac_sob_bb](const Params& P, const ProbeOptions& o) { return lac_sob_bb(P, o, 0); };
  B.add("lacunary-bbesov-into-sobolev", "lacunary and Bdiff^{0,b}_{p,q} into H^{0,b+1/q}_p; holds iff q <= 2",
        {{"p", 2}, {"q", 2}, {"b", 0}}, zero_domain, [](const Params& P) { return le(P_("q"), 2.0); },
        sampler({"p", "q", "b"}))
      .probe = [lac_sob_bb](const Params& P, const ProbeOptions& o) { return lac_sob_bb(P, o, 1); };
  B.add("lacunary-bbesov-equals-sobolev", "lacunary: Bdiff^{0,b}_{p,q} = H^{0,b+1/q}_p; holds iff q = 2",
        {{"p", 2}, {"q", 2}, {"b", 0}}, zero_domain, [](const Params& P) { return eq(P_("q"), 2.0); },
        sampler({"p", "q", "b"}))
      .probe = [lac_sob_bb](const Params& P, const ProbeOptions& o) { return lac_sob_bb(P, o, 2); };
  B.add("lacunary-fourier-besov-equals-bbesov", "lacunary: B^{0,b+1/q}_{p,q} = Bdiff^{0,b}_{p,q}; holds iff q = 2",
        {{"p", 2}, {"q", 2}, {"b", 0}}, zero_domain, [](const Params& P) { return eq(P_("q"), 2.0); },
        sampler({"p", "q", "b"}))
      .probe = [lac_gen](const Params& P, const ProbeOptions& o) {
        double q = P_("q"), b = P_("b");
        return family_probe(o, lac_gen, [=](const LacunarySeq& s) {
          return std::make_pair(value_of(lac_norm_fourier(s, 0.0, b + inv(q), q).besov),
                                value_of(lac_norm_bbesov(s, 0.0, b, q)));
        }, true);
      };

  auto lac_tl = [](const Params& P, const ProbeOptions& o, bool tl_first) {
    double p = P_("p"), q = P_("q"), r = P_("r"), s = P_("s"), b = P_("b");
    NormKit kit(o.J);
    return family_probe(o, [&](Rng& rng) { return realize(random_lacunary(rng, o.J - 4), o.J - 4); },
                        [&](const Spectrum& f) {
                          double tl = kit.tl(f, s, b, p, r), bf = kit.bfour(f, s, b, p, q);
                          return tl_first ? std::make_pair(tl, bf) : std::make_pair(bf, tl);
                        }, false);
  };
  B.add("lacunary-triebel-into-besov", "lacunary and F^{s,b}_{p,r} into B^{s,b}_{p,q}; holds iff q >= r",
        {{"p", 2}, {"q", 2}, {"r", 2}, {"s", 0.5}, {"b", 0}}, fb_domain,
        [](const Params& P) { return ge(P_("q"), P_("r")); }, sampler({"p", "q", "r", "s", "b"}))
      .probe = [lac_tl](const Params& P, const ProbeOptions& o) { return lac_tl(P, o, true); };
  B.add("lacunary-besov-into-triebel", "lacunary and B^{s,b}_{p,q} into F^{s,b}_{p,r}; holds iff q <= r",
        {{"p", 2}, {"q", 2}, {"r", 2}, {"s", 0.5}, {"b", 0}}, fb_domain,
        [](const Params& P) { return le(P_("q"), P_("r")); }, sampler({"p", "q", "r", "s", "b"}))
      .probe = [lac_tl](const Params& P, const ProbeOptions& o) { return lac_tl(P, o, false); };

  auto lp_domain = [](const Params& P) {
    open_p(P_("p"));
    positive(P_("q"));
  };
  B.add("gm-fourier-besov-into-lp",
        "GM and B^{0,b}_{p,q} into L_p; holds iff b >= 0 when q <= p and b > 1/p - 1/q when q > p",
        {{"p", 2}, {"q", 2}, {"b", 0}},
        [lp_domain](const Params& P) {
          lp_domain(P);
          require(std::isfinite(P_("q")), "needs q < inf");
        },
        [](const Params& P) {
          double p = P_("p"), q = P_("q"), b = P_("b");
          return le(q, p) ? ge(b, 0.0) : b > inv(p) - inv(q) + kTol;
        },
        sampler({"p", "q", "b"}, {{"b", {-0.2, 0.0, 0.1, 0.2, 0.5}}}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        double p = P_("p"), q = P_("q"), b = P_("b");
        return family_probe(o, random_gm, [=](const GMSequence& g) {
          return std::make_pair(value_of(gm_seq_besov_char(g, 0.0, b, p, q)),
                                value_of(gm_seq_sobolev_char(g, 0.0, 0.0, p)));
        }, false);
      };
  B.add("lacunary-fourier-besov-into-lp",
        "lacunary and B^{0,b}_{p,q} into L_p; holds iff b >= 0 when q <= 2 and b > 1/2 - 1/q when q > 2",
        {{"p", 2}, {"q", 2}, {"b", 0}}, lp_domain,
        [](const Params& P) {
          double q = P_("q"), b = P_("b");
          return le(q, 2.0) ? ge(b, 0.0) : b > 0.5 - inv(q) + kTol;
        },
        sampler({"p", "q", "b"}, {{"b", {-0.2, 0.0, 0.1, 0.2, 0.5}}}))
      .probe = [lac_gen](const Params& P, const ProbeOptions& o) {
        double q = P_("q"), b = P_("b");
        return family_probe(o, lac_gen, [=](const LacunarySeq& s) {
          LacunaryNorms n = lac_norm_fourier(s, 0.0, b, q);
          return std::make_pair(value_of(n.besov), value_of(n.lp));
        }, false);
      };
  B.add("weak-lacunary-fourier-besov-into-lp",
        "weakly monotone lacunary and B^{0,b}_{p,q} into L_p; holds iff b >= 1/2 - 1/q when q <= 2 "
        "and b > 1/2 - 1/q when q > 2",
        {{"p", 2}, {"q", 2}, {"b", 0}}, lp_domain,
        [](const Params& P) {
          double q = P_("q"), b = P_("b");
          return le(q, 2.0) ? ge(b, 0.5 - inv(q)) : b > 0.5 - inv(q) + kTol;
        },
        sampler({"p", "q", "b"}, {{"b", {-1.5, -0.5, -0.2, 0.0, 0.1, 0.2, 0.5}}}));

  B.add("sobolev-embedding-into-bbesov",
        "B^{1/p0-1/p,xi}_{p0,q} into Bdiff^{0,b}_{p,q} (p0 < p); holds iff xi >= b + 1/min{p,q}",
        {{"p0", 1.5}, {"p", 2}, {"q", 2}, {"b", 0}, {"xi", 0.5}},
        [zero_domain](const Params& P) {
          zero_domain(P);
          require(P_("p0") > 1.0 && P_("p0") < P_("p"), "needs 1 < p0 < p");
        },
        [](const Params& P) { return ge(P_("xi"), P_("b") + 1.0 / std::min(P_("p"), P_("q"))); },
        sampler({"p0", "p", "q", "b", "xi"}));
  B.add("bbesov-sobolev-embedding",
        "Bdiff^{0,b}_{p,q} into B^{1/p1-1/p,xi}_{p1,q} (p < p1); holds iff xi <= b + 1/max{p,q}",
        {{"p", 2}, {"p1", 6}, {"q", 2}, {"b", 0}, {"xi", 0.5}},
        [zero_domain](const Params& P) {
          zero_domain(P);
          require(P_("p1") > P_("p") && std::isfinite(P_("p1")), "needs p < p1 < inf");
        },
        [](const Params& P) { return le(P_("xi"), P_("b") + 1.0 / std::max(P_("p"), P_("q"))); },
        sampler({"p", "p1", "q", "b", "xi"}));

  B.add("derivative-bbesov", "D^m maps Bdiff^{m,xi}_{p,q} into Bdiff^{0,b}_{p,q}; holds iff xi >= b + 1/min{2,p,q}",
        {{"m", 1}, {"p", 2}, {"q", 2}, {"b", 0}, {"xi", 0.5}},
        [zero_domain](const Params& P) {
          zero_domain(P);
          require(P_("m") >= 1.0 && P_("m") == std::floor(P_("m")), "needs a natural number m");
        },
        [](const Params& P) { return ge(P_("xi"), P_("b") + 1.0 / min3(P_("p"), P_("q"))); },
        sampler({"m", "p", "q", "b", "xi"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          double m = P_("m");
          Spectrum d = apply_operator(f, OperatorSpec::derivative(static_cast<int>(m)));
          return std::make_pair(k.bdiff(f, m, P_("xi"), P_("p"), P_("q")), k.bdiff(d, 0.0, P_("b"), P_("p"), P_("q")));
        }, false);
      };

  auto lift_domain = [zero_domain](const Params& P) {
    zero_domain(P);
    require(std::isfinite(P_("sigma")), "needs a finite sigma");
  };
  B.add("lift-bbesov-into-fourier-besov",
        "I_sigma maps Bdiff^{0,b}_{p,q} into B^{-sigma,xi}_{p,q}; holds iff xi <= b + 1/max{2,p,q}",
        {{"sigma", 0.5}, {"p", 2}, {"q", 2}, {"b", 0}, {"xi", 0.5}}, lift_domain,
        [](const Params& P) { return le(P_("xi"), P_("b") + 1.0 / max3(P_("p"), P_("q"))); },
        sampler({"sigma", "p", "q", "b", "xi"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          Spectrum g = apply_operator(f, OperatorSpec::bessel(P_("sigma")));
          return std::make_pair(k.bdiff(f, 0.0, P_("b"), P_("p"), P_("q")),
                                k.bfour(g, -P_("sigma"), P_("xi"), P_("p"), P_("q")));
        }, false);
      };
  B.add("lift-fourier-besov-into-bbesov",
        "I_sigma maps B^{sigma,xi}_{p,q} into Bdiff^{0,b}_{p,q}; holds iff xi >= b + 1/min{2,p,q}",
        {{"sigma", 0.5}, {"p", 2}, {"q", 2}, {"b", 0}, {"xi", 0.5}}, lift_domain,
        [](const Params& P) { return ge(P_("xi"), P_("b") + 1.0 / min3(P_("p"), P_("q"))); },
        sampler({"sigma", "p", "q", "b", "xi"}))
      .probe = [](const Params& P, const ProbeOptions& o) {
        return spectrum_probe(o, [&](const Spectrum& f, const NormKit& k) {
          Spectrum g = apply_operator(f, OperatorSpec::bessel(P_("sigma")));
          return std::make_pair(k.bfour(f, P_("sigma"), P_("xi"), P_("p"), P_("q")),
                                k.bdiff(g, 0.0, P_("b"), P_("p"), P_("q")));
        }, false);
      };

  auto modulus_probe = [](const Params& P, const ProbeOptions& o, bool upper) {
    ProbeResult r;
    r.threshold = o.threshold;
    try {
      Rng rng(o.seed);
      SpectrumLaw law;
      law.k_max = std::min<long>(law.k_max, 1L << (o.J - 4));
      law.k_min = std::min(law.k_min, law.k_max);
      law.zero_mean = true;
      for (int i = 0; i < o.samples; ++i) {
        Spectrum f = random_spectrum(rng, law);
        for (int j = 1; j <= 6; ++j) {
          auto [lhs, rhs] = trebels_bound(f, 1, 1, std::ldexp(1.0, -j), P_("p"), P_("q"), o.J);
          r.max_ratio = std::max(r.max_ratio, upper ? ratio_of(rhs, lhs, false) : ratio_of(lhs, rhs, false));
        }
        ++r.samples;
      }
    } catch (const Error& e) {
      r.note = std::string("probe not applicable: ") + e.what();
      r.max_ratio = 0.0;
    }
    return finish_probe(r);
  };
  auto dm_domain = [](const Params& P) {
    open_p(P_("p"));
    positive(P_("q"));
  };
  B.add("derivative-modulus-upper",
        "omega_k(f^(m),t)_p <= C (int_0^t (u^-m omega_{k+m}(f,u)_p)^q du/u)^{1/q}; holds iff q <= min{p,2}",
        {{"p", 2}, {"q", 2}}, dm_domain, [](const Params& P) { return le(P_("q"), std::min(P_("p"), 2.0)); },
        sampler({"p", "q"}))
      .probe = [modulus_probe](const Params& P, const ProbeOptions& o) { return modulus_probe(P, o, true); };
  B.add("derivative-modulus-lower",
        "(int_0^t (u^-m omega_{k+m}(f,u)_p)^q du/u)^{1/q} <= C omega_k(f^(m),t)_p; holds iff q >= max{p,2}",
        {{"p", 2}, {"q", 2}}, dm_domain, [](const Params& P) { return ge(P_("q"), std::max(P_("p"), 2.0)); },
        sampler({"p", "q"}))
      .probe = [modulus_probe](const Params& P, const ProbeOptions& o) { return modulus_probe(P, o, false); };

  auto pm_domain = [](const Params& P) {
    require(P_("p") >= 1.0, "needs p >= 1");
    positive(P_("q"));
  };
  const Pools pm_pools = {{"p", {1.0, 1.5, 2.0, 3.0, kInf}}};
  B.add("potential-modulus-upper",
        "omega_k(J_sigma f,t)_p bounded by the q-integral of u^-sigma omega_{k+sigma}(f,u)_p; holds iff "
        "q <= min{p,2} for 1 < p < inf and q <= 1 for p = 1, inf",
        {{"p", 2}, {"q", 2}}, pm_domain,
        [](const Params& P) {
          double p = P_("p"), q = P_("q");
          if (p == 1.0 || std::isinf(p)) return le(q, 1.0);
          return le(q, std::min(p, 2.0));
        },
        sampler({"p", "q"}, pm_pools));
  B.add("potential-modulus-lower",
        "the q-integral of u^-sigma omega_{k+sigma}(f,u)_p bounded by omega_k(J_sigma f,t)_p; holds iff "
        "q >= max{p,2} for 1 < p < inf and q = inf for p = 1, inf",
        {{"p", 2}, {"q", 2}}, pm_domain,
        [](const Params& P) {
          double p = P_("p"), q = P_("q");
          if (p == 1.0 || std::isinf(p)) return std::isinf(q);
          return ge(q, std::max(p, 2.0));
        },
        sampler({"p", "q"}, pm_pools));
}

// Every claim below fails throughout its domain; the witness exhibits it.
void add_witness_claims(Builder& B) {
  auto never = [](const Params&) { return false; };

  B.add("sobolev-gap-into-bbesov", "H^{0,b+1/q-eps}_p into Bdiff^{0,b}_{p,q} for p <= q; never holds",
        {{"p", 2}, {"q", 4}, {"b", 0}, {"eps", 0.25}},
        [](const Params& P) {
          open_p(P_("p"));
          require(P_("q") >= P_("p"), "needs p <= q");
          log_b(P_("b"), P_("q"));
          positive_eps(P_("eps"));
        },
        never, sampler({"p", "q", "b", "eps"}))
      .witness = [](const Params& P) {
        double p = P_("p"), q = P_("q"), b = P_("b"), e = P_("eps");
        double lo = std::max(1.0 / p, b + inv(q) + 1.0 / p - e), hi = b + inv(q) + 1.0 / p;
        double beta = window_mid(lo, hi);
        PLTerm t = pl(-1.0 + 1.0 / p, -beta);
        PowerLogProfile F = profile(t, t);
        return profile_witness(
            "profile", F, window_json("beta", lo, hi, beta), "H^{0,b+1/q-eps}_p",
            [=] { return gm_sobolev_char(F, 1, 0.0, b + inv(q) - e, p); }, "Bdiff^{0,b}_{p,q}",
            [=] { return gm_besov_diff_char(F, 1, 0.0, b, p, q); });
      };

  B.add("lacunary-sobolev-gap-into-bbesov",
        "lacunary and H^{0,b+1/q-eps}_p into Bdiff^{0,b}_{p,q} for q >= 2; never holds",
        {{"p", 2}, {"q", 4}, {"b", 0}, {"eps", 0.25}},
        [](const Params& P) {
          open_p(P_("p"));
          require(P_("q") >= 2.0, "needs q >= 2");
          log_b(P_("b"), P_("q"));
          positive_eps(P_("eps"));
        },
        never, sampler({"p", "q", "b", "eps"}))
      .witness = [](const Params& P) {
        double q = P_("q"), b = P_("b"), e = P_("eps");
        double lo = std::max(0.5, b + inv(q) + 0.5 - e), hi = b + inv(q) + 0.5;
        double delta = window_mid(lo, hi);
        LacunarySeq s = lacunary(0.0, -delta);
        return lacunary_witness(
            "lacunary", s, window_json("delta", lo, hi, delta), "H^{0,b+1/q-eps}_p",
            [=] { return lac_norm_fourier(s, 0.0, b + inv(q) - e, 2.0).sobolev; }, "Bdiff^{0,b}_{p,q}",
            [=] { return lac_norm_bbesov(s, 0.0, b, q); });
      };

  B.add("bbesov-into-sobolev-gap", "Bdiff^{0,b}_{p,q} into H^{0,b+1/q+eps}_p for q <= p; never holds",
        {{"p", 4}, {"q", 2}, {"b", 0}, {"eps", 0.25}},
        [](const Params& P) {
          open_p(P_("p"));
          positive(P_("q"));
          require(P_("q") <= P_("p"), "needs q <= p");
          log_b(P_("b"), P_("q"));
          positive_eps(P_("eps"));
        },
        never, sampler({"p", "q", "b", "eps"}))
      .witness = [](const Params& P) {
        double p = P_("p"), q = P_("q"), b = P_("b"), e = P_("eps");
        double lo = b + inv(q) + 1.0 / p, hi = lo + e;
        double beta = window_mid(lo, hi);
        PLTerm t = pl(-1.0 + 1.0 / p, -beta);
        PowerLogProfile F = profile(t, t);
        return profile_witness(
            "profile", F, window_json("beta", lo, hi, beta), "Bdiff^{0,b}_{p,q}",
            [=] { return gm_besov_diff_char(F, 1, 0.0, b, p, q); }, "H^{0,b+1/q+eps}_p",
            [=] { return gm_sobolev_char(F, 1, 0.0, b + inv(q) + e, p); });
      };

  B.add("lacunary-bbesov-into-sobolev-gap",
        "lacunary and Bdiff^{0,b}_{p,q} into H^{0,b+1/q+eps}_p for q <= 2; never holds",
        {{"p", 3}, {"q", 2}, {"b", 0}, {"eps", 0.25}},
        [](const Params& P) {
          open_p(P_("p"));
          positive(P_("q"));
          require(P_("q") <= 2.0, "needs q <= 2");
          log_b(P_("b"), P_("q"));
          positive_eps(P_("eps"));
        },
        never, sampler({"p", "q", "b", "eps"}))
      .witness = [](const Params& P) {
        double q = P_("q"), b = P_("b"), e = P_("eps");
        double lo = b + inv(q) + 0.5, hi = lo + e;
        double delta = window_mid(lo, hi);
        LacunarySeq s = lacunary(0.0, -delta);
        return lacunary_witness(
            "lacunary", s, window_json("delta", lo, hi, delta), "Bdiff^{0,b}_{p,q}",
            [=] { return lac_norm_bbesov(s, 0.0, b, q); }, "H^{0,b+1/q+eps}_p",
            [=] { return lac_norm_fourier(s, 0.0, b + inv(q) + e, 2.0).sobolev; });
      };

  auto high_q = [](const Params& P) {
    double p = P_("p"), q = P_("q");
    open_p(p);
    require(q >= std::max(p, 2.0) && (p != 2.0 || q > 2.0), "needs q >= max{p,2} (q > 2 when p = 2)");
  };
  B.add("fourier-besov-into-sobolev",
        "B^{0,b+1/min{2,p}}_{p,q} into H^{0,b+1/q}_p for q >= max{p,2}; never holds",
        {{"p", 1.5}, {"q", 3}, {"b", 0}}, high_q, never, sampler({"p", "q", "b"}))
      .witness = [](const Params& P) {
        double p = P_("p"), q = P_("q"), b = P_("b");
        if (p < 2.0) {
          double lo = inv(q), hi = 1.0 / p, eta = window_mid(lo, hi);
          PowerLogProfile F = profile(pl(-1.0 + 1.0 / p + 0.5, 0.0), pl(-1.0 + 1.0 / p, -(b + 1.0 / p + inv(q)), -eta));
          return profile_witness(
              "profile", F, window_json("eta", lo, hi, eta), "B^{0,b+1/p}_{p,q}",
              [=] { return gm_besov_fourier_char(F, 1, 0.0, b + 1.0 / p, p, q); }, "H^{0,b+1/q}_p",
              [=] { return gm_sobolev_char(F, 1, 0.0, b + inv(q), p); });
        }
        double lo = inv(q), hi = 0.5, delta = window_mid(lo, hi);
        LacunarySeq s = lacunary(0.0, -b - 0.5 - inv(q), -delta);
        return lacunary_witness(
            "lacunary", s, window_json("delta", lo, hi, delta), "B^{0,b+1/2}_{p,q}",
            [=] { return lac_norm_fourier(s, 0.0, b + 0.5, q).besov; }, "H^{0,b+1/q}_p",
            [=] { return lac_norm_fourier(s, 0.0, b + inv(q), 2.0).sobolev; });
      };

  B.add("fourier-besov-gap-into-bbesov", "B^{0,b+1/q}_{p,q} into Bdiff^{0,b}_{p,q} for q >= max{p,2}; never holds",
        {{"p", 2}, {"q", 4}, {"b", 0}},
        [high_q](const Params& P) {
          high_q(P);
          log_b(P_("b"), P_("q"));
        },
        never, sampler({"p", "q", "b"}))
      .witness = [](const Params& P) {
        double p = P_("p"), q = P_("q"), b = P_("b");
        if (q > p) {
          double lo = std::max(inv(q), 1.0 / p - b - inv(q)), hi = 1.0 / p, beta = window_mid(lo, hi);
          PowerLogProfile F = profile(pl(-1.0 + 1.0 / p + 0.5, 0.0), pl(-1.0 + 1.0 / p, -(b + inv(q) + beta)));
          return profile_witness(
              "profile", F, window_json("beta", lo, hi, beta), "B^{0,b+1/q}_{p,q}",
              [=] { return gm_besov_fourier_char(F, 1, 0.0, b + inv(q), p, q); }, "Bdiff^{0,b}_{p,q}",
              [=] { return gm_besov_diff_char(F, 1, 0.0, b, p, q); });
        }
        double lo = std::max(1.0 / p, 0.5 - 1.0 / p - b), hi = 0.5, e = window_mid(lo, hi);
        LacunarySeq s = lacunary(0.0, -(b + 1.0 / p + e));
        return lacunary_witness(
            "lacunary", s, window_json("eps", lo, hi, e), "B^{0,b+1/q}_{p,q}",
            [=] { return lac_norm_fourier(s, 0.0, b + inv(q), q).besov; }, "Bdiff^{0,b}_{p,q}",
            [=] { return lac_norm_bbesov(s, 0.0, b, q); });
      };

  auto sharp_domain = [](const Params& P) {
    open_p(P_("p"));
    positive(P_("q"));
    log_b(P_("b"), P_("q"));
    positive_eps(P_("eps"));
  };
  B.add("fourier-besov-sharp-into-bbesov", "B^{0,b+1/min{2,p,q}-eps}_{p,q} into Bdiff^{0,b}_{p,q}; never holds",
        {{"p", 1.5}, {"q", 3}, {"b", 0}, {"eps", 0.25}}, sharp_domain, never, sampler({"p", "q", "b", "eps"}))
      .witness = [](const Params& P) {
        double p = P_("p"), q = P_("q"), b = P_("b"), e = P_("eps");
        switch (min_route(p, q)) {
          case Extreme::P: {
            double lo = std::max(1.0 / p, b + inv(q) + 1.0 / p - e), hi = b + inv(q) + 1.0 / p;
            double beta = window_mid(lo, hi);
            PLTerm t = pl(-1.0 + 1.0 / p, -beta);
            PowerLogProfile F = profile(t, t);
            return profile_witness(
                "p-min", F, window_json("beta", lo, hi, beta), "B^{0,b+1/p-eps}_{p,q}",
                [=] { return gm_besov_fourier_char(F, 1, 0.0, b + 1.0 / p - e, p, q); }, "Bdiff^{0,b}_{p,q}",
                [=] { return gm_besov_diff_char(F, 1, 0.0, b, p, q); });
          }
          case Extreme::Two: {
            double lo = std::max(0.5, b + inv(q) + 0.5 - e), hi = b + inv(q) + 0.5;
            double delta = window_mid(lo, hi);
            LacunarySeq s = lacunary(0.0, -delta);
            return lacunary_witness(
                "2-min", s, window_json("delta", lo, hi, delta), "B^{0,b+1/2-eps}_{p,q}",
                [=] { return lac_norm_fourier(s, 0.0, b + 0.5 - e, q).besov; }, "Bdiff^{0,b}_{p,q}",
                [=] { return lac_norm_bbesov(s, 0.0, b, q); });
          }
          default: no_route("q = min{2,p,q}");
        }
      };

  B.add("bbesov-into-fourier-besov-sharp", "Bdiff^{0,b}_{p,q} into B^{0,b+1/max{2,p,q}+eps}_{p,q}; never holds",
        {{"p", 4}, {"q", 2}, {"b", 0}, {"eps", 0.25}}, sharp_domain, never, sampler({"p", "q", "b", "eps"}))
      .witness = [](const Params& P) {
        double p = P_("p"), q = P_("q"), b = P_("b"), e = P_("eps");
        switch (max_route(p, q)) {
          case Extreme::P: {
            double lo = b + inv(q) + 1.0 / p, hi = lo + e, beta = window_mid(lo, hi);
            PLTerm t = pl(-1.0 + 1.0 / p, -beta);
            PowerLogProfile F = profile(t, t);
            return profile_witness(
                "p-max", F, window_json("beta", lo, hi, beta), "Bdiff^{0,b}_{p,q}",
                [=] { return gm_besov_diff_char(F, 1, 0.0, b, p, q); }, "B^{0,b+1/p+eps}_{p,q}",
                [=] { return gm_besov_fourier_char(F, 1, 0.0, b + 1.0 / p + e, p, q); });
          }
          case Extreme::Two: {
            double lo = b + inv(q) + 0.5, hi = lo + e, delta = window_mid(lo, hi);
            LacunarySeq s = lacunary(0.0, -delta);
            return lacunary_witness(
                "2-max", s, window_json("delta", lo, hi, delta), "Bdiff^{0,b}_{p,q}",
                [=] { return lac_norm_bbesov(s, 0.0, b, q); }, "B^{0,b+1/2+eps}_{p,q}",
                [=] { return lac_norm_fourier(s, 0.0, b + 0.5 + e, q).besov; });
          }
          default: no_route("q = max{2,p,q}");
        }
      };

  B.add("sobolev-embedding-into-bbesov-sharp",
        "B^{1/p0-1/p,b+1/min{p,q}-eps}_{p0,q} into Bdiff^{0,b}_{p,q} (p0 < p); never holds",
        {{"p0", 1.5}, {"p", 2}, {"q", 4}, {"b", 0}, {"eps", 0.25}},
        [sharp_domain](const Params& P) {
          sharp_domain(P);
          require(P_("p0") > 1.0 && P_("p0") < P_("p"), "needs 1 < p0 < p");
        },
        never, sampler({"p0", "p", "q", "b", "eps"}))
      .witness = [](const Params& P) {
        double p0 = P_("p0"), p = P_("p"), q = P_("q"), b = P_("b"), e = P_("eps");
        if (p > q) no_route("q = min{p,q}");
        double s0 = 1.0 / p0 - 1.0 / p;
        double lo = std::max(b + 1.0 / p + inv(q) - e, 1.0 / p), hi = b + 1.0 / p + inv(q);
        double beta = window_mid(lo, hi);
        PowerLogProfile F = profile(pl(-1.0 + 1.0 / p0 + 0.5, 0.0), pl(-1.0 + 1.0 / p, -beta));
        return profile_witness(
            "p-min", F, window_json("beta", lo, hi, beta), "B^{s0,b+1/p-eps}_{p0,q}",
            [=] { return gm_besov_fourier_char(F, 1, s0, b + 1.0 / p - e, p0, q); }, "Bdiff^{0,b}_{p,q}",
            [=] { return gm_besov_diff_char(F, 1, 0.0, b, p, q); });
      };

  B.add("bbesov-sobolev-embedding-sharp",
        "Bdiff^{0,b}_{p,q} into B^{1/p1-1/p,b+1/max{p,q}+eps}_{p1,q} (p < p1); never holds",
        {{"p", 4}, {"p1", 6}, {"q", 2}, {"b", 0}, {"eps", 0.25}},
        [sharp_domain](const Params& P) {
          sharp_domain(P);
          require(P_("p1") > P_("p") && std::isfinite(P_("p1")), "needs p < p1 < inf");
        },
        never, sampler({"p", "p1", "q", "b", "eps"}))
      .witness = [](const Params& P) {
        double p = P_("p"), p1 = P_("p1"), q = P_("q"), b = P_("b"), e = P_("eps");
        if (q > p) no_route("q = max{p,q}");
        double s1 = 1.0 / p1 - 1.0 / p;
        double lo = b + inv(q) + 1.0 / p, hi = lo + e, beta = window_mid(lo, hi);
        PowerLogProfile F = profile(pl(1.0 / p1, 0.0), pl(-1.0 + 1.0 / p, -beta));
        return profile_witness(
            "p-max", F, window_json("beta", lo, hi, beta), "Bdiff^{0,b}_{p,q}",
            [=] { return gm_besov_diff_char(F, 1, 0.0, b, p, q); }, "B^{s1,b+1/p+eps}_{p1,q}",
            [=] { return gm_besov_fourier_char(F, 1, s1, b + 1.0 / p + e, p1, q); });
      };

  B.add("derivative-bbesov-sharp", "D^m maps Bdiff^{m,b+1/min{2,p,q}-eps}_{p,q} into Bdiff^{0,b}_{p,q}; never holds",
        {{"m", 1}, {"p", 1.5}, {"q", 3}, {"b", 0}, {"eps", 0.25}},
        [sharp_domain](const Params& P) {
          sharp_domain(P);
          require(P_("m") >= 1.0 && P_("m") == std::floor(P_("m")), "needs a natural number m");
        },
        never, sampler({"m", "p", "q", "b", "eps"}))
      .witness = [](const Params& P) {
        double m = P_("m"), p = P_("p"), q = P_("q"), b = P_("b"), e = P_("eps");
        switch (min_route(p, q)) {
          case Extreme::P: {
            double lo = std::max(b + inv(q) + 1.0 / p - e, 1.0 / p), hi = b + inv(q) + 1.0 / p;
            double beta = window_mid(lo, hi);
            GMSequence f, d;
            f.a.law = pl(-m - 1.0 + 1.0 / p, -beta);
            d.b.law = pl(-1.0 + 1.0 / p, -beta);
            return WitnessFamily{
                "gm-sequence", "p-min",
                {{"cosine", to_json(*f.a.law)}, {"derivative-sine", to_json(*d.b.law)},
                 {"window", window_json("beta", lo, hi, beta)}},
                "Bdiff^{m,b+1/p-eps}_{p,q}", "Bdiff^{0,b}_{p,q} of D^m f",
                [=] { return gm_seq_bbesov_char(f, m, b + 1.0 / p - e, p, q); },
                [=] { return gm_seq_bbesov_char(d, 0.0, b, p, q); }};
          }
          case Extreme::Two: {
            double lo = std::max(0.5, b + inv(q) + 0.5 - e), hi = b + inv(q) + 0.5;
            double delta = window_mid(lo, hi);
            LacunarySeq s = lacunary(-m, -delta), ds = lacunary(0.0, -delta);
            WitnessFamily w = lacunary_witness(
                "2-min", s, window_json("delta", lo, hi, delta), "Bdiff^{m,b+1/2-eps}_{p,q}",
                [=] { return lac_norm_bbesov(s, m, b + 0.5 - e, q); }, "Bdiff^{0,b}_{p,q} of D^m f",
                [=] { return lac_norm_bbesov(ds, 0.0, b, q); });
            w.descriptor["derivative"] = to_json(ds);
            return w;
          }
          default: no_route("q = min{2,p,q}");
        }
      };

  auto lift_sharp_domain = [sharp_domain](const Params& P) {
    sharp_domain(P);
    require(std::isfinite(P_("sigma")), "needs a finite sigma");
  };
  B.add("lift-bbesov-into-fourier-besov-sharp",
        "I_sigma maps Bdiff^{0,b}_{p,q} into B^{-sigma,b+1/max{2,p,q}+eps}_{p,q}; never holds",
        {{"sigma", 0.5}, {"p", 4}, {"q", 2}, {"b", 0}, {"eps", 0.25}}, lift_sharp_domain, never,
        sampler({"sigma", "p", "q", "b", "eps"}))
      .witness = [](const Params& P) {
        double sg = P_("sigma"), p = P_("p"), q = P_("q"), b = P_("b"), e = P_("eps");
        switch (max_route(p, q)) {
          case Extreme::P: {
            double lo = b + inv(q) + 1.0 / p, hi = lo + e, beta = window_mid(lo, hi);
            PLTerm t = pl(-1.0 + 1.0 / p, -beta);
            PowerLogProfile F = profile(t, t), G = profile(t, pl(-1.0 + 1.0 / p + sg, -beta));
            WitnessFamily w = profile_witness(
                "p-max", F, window_json("beta", lo, hi, beta), "Bdiff^{0,b}_{p,q}",
                [=] { return gm_besov_diff_char(F, 1, 0.0, b, p, q); }, "B^{-sigma,b+1/p+eps}_{p,q} of I_sigma f",
                [=] { return gm_besov_fourier_char(G, 1, -sg, b + 1.0 / p + e, p, q); });
            w.descriptor["lifted"] = to_json(G);
            return w;
          }
          case Extreme::Two: {
            double lo = b + inv(q) + 0.5, hi = lo + e, delta = window_mid(lo, hi);
            LacunarySeq s = lacunary(0.0, -delta), ls = lacunary(sg, -delta);
            WitnessFamily w = lacunary_witness(
                "2-max", s, window_json("delta", lo, hi, delta), "Bdiff^{0,b}_{p,q}",
                [=] { return lac_norm_bbesov(s, 0.0, b, q); }, "B^{-sigma,b+1/2+eps}_{p,q} of I_sigma f",
                [=] { return lac_norm_fourier(ls, -sg, b + 0.5 + e, q).besov; });
            w.descriptor["lifted"] = to_json(ls);
            return w;
          }
          default: no_route("q = max{2,p,q}");
        }
      };

  B.add("lift-fourier-besov-into-bbesov-sharp",
        "I_sigma maps B^{sigma,b+1/min{2,p,q}-eps}_{p,q} into Bdiff^{0,b}_{p,q}; never holds",
        {{"sigma", 0.5}, {"p", 1.5}, {"q", 3}, {"b", 0}, {"eps", 0.25}}, lift_sharp_domain, never,
        sampler({"sigma", "p", "q", "b", "eps"}))
      .witness = [](const Params& P) {
        double sg = P_("sigma"), p = P_("p"), q = P_("q"), b = P_("b"), e = P_("eps");
        switch (min_route(p, q)) {
          case Extreme::P: {
            double lo = std::max(1.0 / p, b + inv(q) + 1.0 / p - e), hi = b + inv(q) + 1.0 / p;
            double beta = window_mid(lo, hi);
            PLTerm t = pl(-1.0 + 1.0 / p, -beta);
            PowerLogProfile F = profile(t, pl(-1.0 + 1.0 / p - sg, -beta)), G = profile(t, t);
            WitnessFamily w = profile_witness(
                "p-min", F, window_json("beta", lo, hi, beta), "B^{sigma,b+1/p-eps}_{p,q}",
                [=] { return gm_besov_fourier_char(F, 1, sg, b + 1.0 / p - e, p, q); },
                "Bdiff^{0,b}_{p,q} of I_sigma f", [=] { return gm_besov_diff_char(G, 1, 0.0, b, p, q); });
            w.descriptor["lifted"] = to_json(G);
            return w;
          }
          case Extreme::Two: {
            double lo = std::max(0.5, b + inv(q) + 0.5 - e), hi = b + inv(q) + 0.5;
            double delta = window_mid(lo, hi);
            LacunarySeq s = lacunary(-sg, -delta), ls = lacunary(0.0, -delta);
            WitnessFamily w = lacunary_witness(
                "2-min", s, window_json("delta", lo, hi, delta), "B^{sigma,b+1/2-eps}_{p,q}",
                [=] { return lac_norm_fourier(s, sg, b + 0.5 - e, q).besov; }, "Bdiff^{0,b}_{p,q} of I_sigma f",
                [=] { return lac_norm_bbesov(ls, 0.0, b, q); });
            w.descriptor["lifted"] = to_json(ls);
            return w;
          }
          default: no_route("q = min{2,p,q}");
        }
      };

  B.add("bbesov-into-fourier-besov-low-q",
        "Bdiff^{0,b}_{p,q} into B^{0,b+1/q}_{p,q} for q <= min{p,2} (q < 2 when p = 2); never holds",
        {{"p", 2}, {"q", 1}, {"b", 0}},
        [](const Params& P) {
          double p = P_("p"), q = P_("q");
          require(p >= 1.0, "needs p >= 1");
          positive(q);
          require(q <= std::min(p, 2.0) && (p != 2.0 || q < 2.0), "needs q <= min{p,2} (q < 2 when p = 2)");
          log_b(P_("b"), q);
        },
        never, sampler({"p", "q", "b"}));
  B.add("lift-atoms", "I_sigma maps B^{sigma,b+1/min{1,q}-eps}_{p,q} into Bdiff^{0,b}_{p,q} for p = 1, inf; never holds",
        {{"sigma", 0.5}, {"p", 1}, {"q", 2}, {"b", 0}, {"eps", 0.25}},
        [](const Params& P) {
          require(P_("p") == 1.0 || std::isinf(P_("p")), "needs p = 1 or p = inf");
          positive(P_("q"));
          log_b(P_("b"), P_("q"));
          positive_eps(P_("eps"));
        },
        never, sampler({"sigma", "p", "q", "b", "eps"}, {{"p", {1.0, kInf}}}));
}

#undef P_

std::vector<EmbeddingClaim> build_registry() {
  Builder B;
  add_predicate_claims(B);
  add_witness_claims(B);
  return std::move(B.claims);
}

}  // namespace

const std::vector<EmbeddingClaim>& claim_registry() {
  static const std::vector<EmbeddingClaim> registry = build_registry();
  return registry;
}

const EmbeddingClaim& find_claim(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw UnknownClaim("no claim named '" + id + "'");
}

Params complete_params(const EmbeddingClaim& claim, const Params& given) {
  Params P;
  for (const auto& [name, def] : claim.defaults) P[name] = def;
  for (const auto& [name, v] : given) {
    if (!P.count(name)) throw BadParams("claim '" + claim.id + "' has no parameter '" + name + "'");
    if (std::isnan(v)) throw BadParams("parameter '" + name + "' is NaN");
    P[name] = v;
  }
  claim.check_domain(P);
  return P;
}

bool embed_predicate(const std::string& id, const Params& params) {
  const EmbeddingClaim& c = find_claim(id);
  return c.predicate(complete_params(c, params));
}

WitnessFamily counterexample_for(const std::string& id, const Params& params) {
  const EmbeddingClaim& c = find_claim(id);
  Params P = complete_params(c, params);
  if (c.predicate(P)) throw NoWitness("claim '" + id + "' holds at these parameters");
  if (!c.witness) throw NoWitness("claim '" + id + "' is predicate-only");
  return c.witness(P);
}

Verdict verify_claim(const std::string& id, const Params& params, const ProbeOptions& options) {
  const EmbeddingClaim& c = find_claim(id);
  Verdict v;
  v.id = id;
  v.params = complete_params(c, params);
  v.holds = c.predicate(v.params);
  if (!v.holds) {
    if (!c.witness) {
      v.note = "predicate-only: no in-scope witness";
      return v;
    }
    try {
      v.witness = c.witness(v.params);
    } catch (const NoWitness& e) {
      v.note = e.what();
      return v;
    }
    v.source = v.witness->source();
    v.target = v.witness->target();
    v.pass = v.source->finite && !v.target->finite;
    if (!v.pass) v.note = "witness verdicts differ from (finite, infinite)";
    return v;
  }
  if (!c.probe) {
    v.note = "no numeric probe registered";
    return v;
  }
  v.probe = c.probe(v.params, options);
  v.pass = v.probe->pass;
  if (!v.probe->note.empty()) v.note = v.probe->note;
  return v;
}

nlohmann::json to_json(const Params& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : p) {
    if (std::isinf(v))
      j[k] = v > 0 ? "inf" : "-inf";
    else
      j[k] = v;
  }
  return j;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["id"] = v.id;
  j["params"] = to_json(v.params);
  j["predicate"] = v.holds ? "holds" : "fails";
  nlohmann::json ev = nlohmann::json::object();
  if (v.witness) {
    ev["family"] = v.witness->kind;
    ev["route"] = v.witness->route;
    ev["descriptor"] = v.witness->descriptor;
    ev["source_space"] = v.witness->source_space;
    ev["target_space"] = v.witness->target_space;
  }
  if (v.source) ev["source_verdict"] = to_json(*v.source);
  if (v.target) ev["target_verdict"] = to_json(*v.target);
  if (v.probe) {
    ev["max_ratio"] = v.probe->max_ratio;
    ev["threshold"] = v.probe->threshold;
    ev["samples"] = v.probe->samples;
  }
  j["evidence"] = ev;
  j["pass"] = v.pass;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

nlohmann::json registry_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : claim_registry()) {
    nlohmann::json d = nlohmann::json::object();
    for (const auto& [n, v] : c.defaults) d[n] = v;
    arr.push_back({{"id", c.id},
                   {"statement", c.statement},
                   {"defaults", d},
                   {"witness", static_cast<bool>(c.witness)},
                   {"probe", static_cast<bool>(c.probe)}});
  }
  return arr;
}

}  // namespace logsmooth
