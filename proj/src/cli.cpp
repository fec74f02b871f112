#include "logsmooth/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <locale>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "logsmooth/catalog.hpp"
#include "logsmooth/errors.hpp"
#include "logsmooth/kfunc.hpp"
#include "logsmooth/norms.hpp"
#include "logsmooth/operators.hpp"
#include "logsmooth/random.hpp"
#include "logsmooth/smoothcheck.hpp"

namespace logsmooth {

using nlohmann::json;

namespace {

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(12);
  os << x;
  return os.str();
}

json jnum(double x) {
  if (std::isfinite(x)) return x;
  return fmt(x);
}

double parse_number(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), ::tolower);
  if (t == "inf" || t == "+inf" || t == "infinity") return kInf;
  if (t == "-inf") return -kInf;
  std::istringstream is(text);
  is.imbue(std::locale::classic());
  double v;
  if (!(is >> v) || !is.eof()) throw BadParams("'" + text + "' is not a number");
  return v;
}

// "a,b,c" lists, "lo:hi:step" inclusive ranges, "" for nothing.
std::vector<double> parse_range(const std::string& text) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find(':') != std::string::npos && item.find(':') != 0) {
      std::vector<std::string> parts;
      std::stringstream is(item);
      std::string p;
      while (std::getline(is, p, ':')) parts.push_back(p);
      if (parts.size() != 3) throw BadParams("range '" + item + "' must read lo:hi:step");
      double lo = parse_number(parts[0]), hi = parse_number(parts[1]), step = parse_number(parts[2]);
      if (!(std::isfinite(lo) && std::isfinite(hi) && std::isfinite(step)) || step <= 0.0)
        throw BadParams("range '" + item + "' needs finite ends and a positive step");
      if (hi < lo) throw BadParams("range '" + item + "' runs backwards");
      long n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
      if (n > 100000) throw BadParams("range '" + item + "' has too many points");
      for (long i = 0; i <= n; ++i) out.push_back(lo + i * step);
    } else {
      double v = parse_number(item);
      out.push_back(v);
    }
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::string> words(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> w;
  std::string x;
  while (is >> x) w.push_back(x);
  return w;
}

double word_arg(const std::vector<std::string>& w, size_t i, double fallback) {
  return w.size() > i ? parse_number(w[i]) : fallback;
}

// Spectra of the builtin families; random families draw from rng.
Spectrum draw_builtin(const std::string& text, Rng& rng, int J) {
  auto w = words(text);
  if (w.empty()) throw BadParams("empty builtin family");
  const std::string& name = w[0];
  const long top = 1L << std::max(J - 3, 1);
  auto freq = [&](size_t i, double fallback) {
    double K = word_arg(w, i, fallback);
    if (K < 0 || K != std::floor(K)) throw BadParams(name + " needs a nonnegative integer frequency");
    if (K > static_cast<double>(1L << (J - 2))) throw SupportOverflow(name + " frequency exceeds 2^(J-2)");
    return static_cast<long>(K);
  };
  if (name == "cosine") return trig_mode(freq(1, 1), 1.0);
  if (name == "sine") return trig_mode(freq(1, 1), 0.0, 1.0);
  if (name == "zero") return {};
  if (name == "random" || name == "random-zero-mean") {
    SpectrumLaw law;
    law.k_max = std::min(law.k_max, top);
    law.k_min = std::min(law.k_min, law.k_max);
    law.decay = word_arg(w, 1, law.decay);
    law.zero_mean = name == "random-zero-mean";
    return random_spectrum(rng, law);
  }
  if (name == "lacunary") {
    double r = word_arg(w, 1, 0.5);
    Spectrum c;
    for (long n = 1; n <= top; n *= 2) c = c + trig_mode(n, std::exp2(-r * std::log2(static_cast<double>(n))));
    return c;
  }
  if (name == "power") {
    double a = word_arg(w, 1, 1.5);
    Spectrum c;
    for (long n = 1; n <= top; ++n) c = c + trig_mode(n, std::pow(static_cast<double>(n), -a));
    return c;
  }
  if (name == "dirichlet" || name == "fejer") {
    long K = freq(1, 8);
    Spectrum c;
    for (long k = -K; k <= K; ++k)
      c.set(k, name == "dirichlet" ? 1.0 : 1.0 - std::abs(static_cast<double>(k)) / (K + 1.0));
    return c;
  }
  throw BadParams("unknown builtin family '" + name + "'");
}

bool is_random_family(const std::string& text) {
  auto w = words(text);
  return !w.empty() && (w[0] == "random" || w[0] == "random-zero-mean");
}

Spectrum load_input(const std::string& path, int J) {
  std::ifstream in(path);
  if (!in) throw BadParams("cannot read input file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw BadParams("input file '" + path + "' is not valid JSON");
  }
  if (j.contains("coeffs")) return spectrum_from_json(j);
  if (j.contains("values")) {
    Signal s = signal_from_json(j);
    if (s.grid.J != J) throw BadGrid("input grid J=" + std::to_string(s.grid.J) + " differs from --grid-J");
    return dft(s);
  }
  throw BadParams("input JSON needs 'coeffs' or 'values'");
}

// Options shared by every subcommand.
struct Common {
  int J = kDefaultJ;
  std::uint64_t seed = 1;
  std::string format;  // empty: json, or csv for sweeps
  std::string out_path;
  double threshold_C = 0.0;
  std::string config;
};

void emit_csv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& r : rows) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "\n";
  }
}

// ---- subcommands ---------------------------------------------------------

struct NormArgs {
  std::string input, builtin = "cosine 1", methods = "differences";
  double s = 0.5, b = 0.0, p = 2.0, q = 2.0;
  int k = 0;
  MethodOptions mo;
};

void cmd_norm(const Common& c, const NormArgs& a, std::ostream& os) {
  Rng rng(c.seed);
  Spectrum f = a.input.empty() ? draw_builtin(a.builtin, rng, c.J) : load_input(a.input, c.J);
  SpaceSpec spec;
  spec.s = a.s;
  spec.b = a.b;
  spec.p = a.p;
  spec.q = a.q;
  spec.k = a.k > 0 ? a.k : static_cast<int>(std::floor(std::max(a.s, 0.0))) + 1;
  std::vector<NormEstimate> rows;
  for (const auto& m : split(a.methods, ',')) rows.push_back(norm_by_method(m, f, spec, c.J, a.mo));
  if (c.format == "csv") {
    std::vector<std::vector<std::string>> body;
    for (const auto& e : rows)
      body.push_back({e.method, fmt(spec.s), fmt(spec.b), fmt(spec.p), fmt(spec.q), std::to_string(spec.k),
                      std::to_string(c.J), fmt(e.value)});
    emit_csv(os, {"method", "s", "b", "p", "q", "k", "J", "value"}, body);
  } else {
    json arr = json::array();
    for (const auto& e : rows) arr.push_back(to_json(e));
    os << arr.dump(2) << "\n";
  }
}

struct VerifyArgs {
  std::string target;
  std::string suite;
  std::vector<std::string> params;
  int samples = 0;
  bool zero_signal = false;
};

Params parse_params(const std::vector<std::string>& items) {
  Params P;
  for (const auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos || eq == 0) throw BadParams("--param needs name=value, got '" + it + "'");
    P[it.substr(0, eq)] = parse_number(it.substr(eq + 1));
  }
  return P;
}

void cmd_verify(const Common& c, const VerifyArgs& a, std::ostream& os) {
  if (!a.suite.empty()) {
    SuiteOptions so;
    so.seed = c.seed;
    so.J = c.J;
    so.samples = a.samples;
    so.zero_signal = a.zero_signal;
    so.threshold_C = c.threshold_C;
    std::vector<std::string> names;
    if (a.suite == "all")
      for (const auto& s : suite_registry()) names.push_back(s.name);
    else
      names.push_back(find_suite(a.suite).name);
    json reports = json::array();
    bool ok = true;
    std::vector<std::vector<std::string>> body;
    for (const auto& n : names) {
      SuiteReport r = run_suite(n, so);
      ok = ok && r.pass();
      reports.push_back(r.to_json());
      for (const auto& cell : r.cells)
        body.push_back({n, cell.params.dump(), fmt(cell.max_ratio), fmt(cell.spread), cell.pass ? "pass" : "fail"});
    }
    if (c.format == "csv")
      emit_csv(os, {"suite", "params", "max_ratio", "spread", "pass"}, body);
    else
      os << (names.size() == 1 ? reports[0] : json{{"suites", reports}, {"pass", ok}}).dump(2) << "\n";
    if (!ok) throw VerificationFailed("suite check failed");
    return;
  }
  if (a.target.empty()) throw BadParams("verify needs a claim id, 'all' or --suite NAME");
  ProbeOptions po;
  po.seed = c.seed;
  po.J = std::min(c.J, 11);
  if (c.threshold_C > 0.0) po.threshold = c.threshold_C;
  if (a.samples > 0) po.samples = a.samples;
  Params given = parse_params(a.params);
  std::vector<Verdict> verdicts;
  if (a.target == "all") {
    if (!given.empty()) throw BadParams("--param cannot be combined with 'all'");
    for (const auto& claim : claim_registry()) verdicts.push_back(verify_claim(claim.id, {}, po));
  } else {
    verdicts.push_back(verify_claim(a.target, given, po));
  }
  bool ok = std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
  if (c.format == "csv") {
    std::vector<std::vector<std::string>> body;
    for (const auto& v : verdicts)
      body.push_back({v.id, v.holds ? "holds" : "fails", v.pass ? "pass" : "fail"});
    emit_csv(os, {"id", "predicate", "pass"}, body);
  } else if (verdicts.size() == 1) {
    os << to_json(verdicts[0]).dump(2) << "\n";
  } else {
    json arr = json::array();
    for (const auto& v : verdicts) arr.push_back(to_json(v));
    os << json{{"verdicts", arr}, {"pass", ok}}.dump(2) << "\n";
  }
  if (!ok) throw VerificationFailed("witness check failed");
}

struct KArgs {
  std::string input, builtin = "cosine 1", kind = "realization", formula = "i", t = "0.5,0.25,0.125";
  KFormulaParams fp;
};

void cmd_kfunc(const Common& c, const KArgs& a, std::ostream& os) {
  Rng rng(c.seed);
  Spectrum f = a.input.empty() ? draw_builtin(a.builtin, rng, c.J) : load_input(a.input, c.J);
  auto ts = parse_range(a.t);
  for (double t : ts)
    if (!(t > 0.0) || !std::isfinite(t)) throw BadParams("every t must be positive and finite");
  std::sort(ts.begin(), ts.end());
  Signal x;
  auto signal = [&]() -> const Signal& {
    if (x.values.empty()) x = idft(f, Grid(c.J));
    return x;
  };
  std::vector<std::vector<std::string>> body;
  json arr = json::array();
  for (double t : ts) {
    std::vector<std::pair<std::string, double>> terms;
    if (a.kind == "hilbert") {
      double al = a.fp.alpha;
      WeightedCouple w{[al](long k) { return std::pow(std::abs(static_cast<double>(k)), al); }};
      terms.push_back({"total", k_hilbert_quadratic(f, w, t)});
    } else if (a.kind == "realization") {
      terms.push_back({"total", k_realization(f, a.fp.alpha, t, a.fp.p, c.J)});
    } else if (a.kind == "sobolev") {
      terms.push_back({"total", k_sobolev_closed_form(signal(), a.fp.k, t, a.fp.p)});
    } else if (a.kind == "formula") {
      KFormulaTerms kt = holmstedt_formula(signal(), kformula_from_name(a.formula), a.fp, t);
      terms = kt.terms;
      terms.push_back({"total", kt.total()});
    } else if (a.kind == "bv") {
      auto [lo, hi] = bv_bound_check(signal(), t, a.fp.p);
      terms = {{"lower", lo}, {"upper", hi}};
    } else {
      throw BadParams("unknown K-functional kind '" + a.kind + "'");
    }
    json row = {{"t", jnum(t)}};
    for (const auto& [name, v] : terms) {
      body.push_back({fmt(t), name, fmt(v)});
      row[name] = jnum(v);
    }
    arr.push_back(row);
  }
  if (c.format == "csv")
    emit_csv(os, {"t", "term", "value"}, body);
  else
    os << arr.dump(2) << "\n";
}

struct SweepArgs {
  std::string quantity = "norm-ratio", method = "heat", family = "random";
  std::string s = "0.5", b = "0", p = "2", q = "2", t;
  bool t_given = false;
  int count = 1;
  double order = 0.5, lambda = 1.0;
};

void cmd_sweep(const Common& c, const SweepArgs& a, std::ostream& os) {
  if (a.count < 0) throw BadParams("--count must be nonnegative");
  Rng rng(c.seed);
  int draws = is_random_family(a.family) ? a.count : std::min(a.count, 1);
  std::vector<Spectrum> fam;
  for (int i = 0; i < draws; ++i) fam.push_back(draw_builtin(a.family, rng, c.J));

  std::vector<std::string> header;
  std::vector<std::vector<double>> keys;
  std::vector<std::vector<std::string>> rows;
  if (a.quantity == "norm-ratio") {
    if (std::find(norm_methods().begin(), norm_methods().end(), a.method) == norm_methods().end())
      throw BadParams("unknown norm method '" + a.method + "'");
    auto S = parse_range(a.s), B = parse_range(a.b), P = parse_range(a.p), Q = parse_range(a.q);
    header = {"s", "b", "p", "q", "sample", "differences", a.method, "ratio"};
    for (double s : S)
      for (double b : B)
        for (double p : P)
          for (double q : Q) {
            SpaceSpec spec;
            spec.s = s;
            spec.b = b;
            spec.p = p;
            spec.q = q;
            spec.k = static_cast<int>(std::floor(std::max(s, 0.0))) + 1;
            for (size_t i = 0; i < fam.size(); ++i) {
              double d = norm_by_method("differences", fam[i], spec, c.J).value;
              double m = norm_by_method(a.method, fam[i], spec, c.J).value;
              keys.push_back({s, b, p, q, static_cast<double>(i)});
              rows.push_back({fmt(s), fmt(b), fmt(p), fmt(q), std::to_string(i), fmt(d), fmt(m),
                              fmt(d > 0.0 ? m / d : (m == 0.0 ? 1.0 : kInf))});
            }
          }
  } else if (a.quantity == "fraclap-trace") {
    std::vector<double> T;
    if (a.t_given)
      T = parse_range(a.t);
    else
      for (int j = 1; j <= 8; ++j) T.push_back(std::ldexp(1.0, -j));
    for (double t : T)
      if (!(t > 0.0 && t <= 1.0)) throw BadParams("fraclap-trace needs 0 < t <= 1");
    header = {"t", "ratio"};
    if (!fam.empty())
      for (double t : T) {
        auto [lhs, rhs] = fraclap_equiv(fam[0], a.order, a.lambda, t);
        keys.push_back({t});
        rows.push_back({fmt(t), fmt(rhs > 0.0 ? lhs / rhs : (lhs == 0.0 ? 1.0 : kInf))});
      }
  } else {
    throw BadParams("unknown sweep quantity '" + a.quantity + "'");
  }
  std::vector<size_t> order(rows.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return keys[x] < keys[y]; });
  std::vector<std::vector<std::string>> sorted;
  for (size_t i : order) sorted.push_back(rows[i]);
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& r : sorted) {
      json o;
      for (size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
      arr.push_back(o);
    }
    os << arr.dump(2) << "\n";
  } else {
    emit_csv(os, header, sorted);
  }
}

void cmd_list(const Common& c, const std::string& what, std::ostream& os) {
  bool js = c.format == "json";
  if (what == "claims") {
    if (js) {
      os << registry_json().dump(2) << "\n";
    } else {
      for (const auto& claim : claim_registry())
        os << claim.id << (claim.witness ? "  [witness]" : "") << "\n    " << claim.statement << "\n";
    }
  } else if (what == "families") {
    if (js) {
      json arr = json::array();
      for (const auto& f : builtin_families())
        arr.push_back({{"name", f.name}, {"usage", f.usage}, {"description", f.description}});
      os << arr.dump(2) << "\n";
    } else {
      for (const auto& f : builtin_families()) os << f.usage << "\n    " << f.description << "\n";
    }
  } else if (what == "suites") {
    if (js) {
      json arr = json::array();
      for (const auto& s : suite_registry())
        arr.push_back({{"name", s.name}, {"description", s.description}, {"covers", s.covers}});
      os << arr.dump(2) << "\n";
    } else {
      for (const auto& s : suite_registry()) os << s.name << "\n    " << s.description << "\n";
    }
  } else if (what == "methods") {
    if (js)
      os << json(norm_methods()).dump(2) << "\n";
    else
      for (const auto& m : norm_methods()) os << m << "\n";
  } else {
    throw BadParams("list takes claims, families, suites or methods");
  }
}

// key=value lines; '#' starts a comment.  Keys become --key unless already given.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end() || it + 1 == args.end()) return args;
  std::string path = *(it + 1);
  std::ifstream in(path);
  if (!in) throw BadParams("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw BadParams("config line " + std::to_string(lineno) + " is not key=value");
    std::string key = "--" + trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    bool given = std::any_of(args.begin(), args.end(),
                             [&](const std::string& a) { return a == key || a.rfind(key + "=", 0) == 0; });
    if (given) continue;
    if (key == "--param") {
      args.push_back(key);
      args.push_back(value);
    } else if (value == "true") {
      args.push_back(key);
    } else {
      args.push_back(key);
      args.push_back(value);
    }
  }
  return args;
}

}  // namespace

const std::vector<BuiltinFamily>& builtin_families() {
  static const std::vector<BuiltinFamily> fams = {
      {"cosine", "cosine K", "the single mode cos(Kx), K = 1 by default"},
      {"sine", "sine K", "the single mode sin(Kx), K = 1 by default"},
      {"zero", "zero", "the zero function; every norm and modulus vanishes"},
      {"random", "random [decay]",
       "seeded real trigonometric polynomial, |c_k| = |k|^-decay U[0.5,1.5] with uniform phase, degree "
       "K uniform in [8, min(128, 2^(J-3))], decay 1.2 by default"},
      {"random-zero-mean", "random-zero-mean [decay]", "the random family with the mean coefficient removed"},
      {"lacunary", "lacunary r", "sum of 2^(-r j) cos(2^j x) over 2^j <= 2^(J-3), r = 0.5 by default"},
      {"power", "power a", "sum of n^-a cos(nx) for n <= 2^(J-3), a = 1.5 by default"},
      {"dirichlet", "dirichlet K", "Dirichlet kernel: all modes |k| <= K with coefficient 1, K = 8 by default"},
      {"fejer", "fejer K", "Fejer kernel: modes |k| <= K with coefficient 1 - |k|/(K+1), K = 8 by default"},
  };
  return fams;
}

Spectrum builtin_spectrum(const std::string& text, std::uint64_t seed, int J) {
  Rng rng(seed);
  return draw_builtin(text, rng, J);
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Besov norms, moduli of smoothness, K-functionals and embedding checks on the circle"};
  app.name("logsmooth");
  app.require_subcommand(1);
  app.fallthrough();

  Common c;
  app.add_option("--grid-J", c.J, "grid level: N = 2^J points")->check(CLI::Range(3, 20));
  app.add_option("--seed", c.seed, "seed of the random families and probes");
  app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", c.out_path, "write the output to this file");
  app.add_option("--threshold-C", c.threshold_C, "ratio threshold for probes and suites");
  app.add_option("--config", c.config, "key=value lines; command-line flags win");

  NormArgs na;
  auto* norm = app.add_subcommand("norm", "compute norms by one or more methods");
  norm->add_option("--input", na.input, "JSON file with 'coeffs' or grid 'values'");
  norm->add_option("--builtin", na.builtin, "builtin family, e.g. \"cosine 3\"");
  norm->add_option("--methods", na.methods, "comma-separated methods (see list methods)");
  norm->add_option("--s", na.s);
  norm->add_option("--b", na.b);
  norm->add_option("--p", na.p);
  norm->add_option("--q", na.q);
  norm->add_option("--k", na.k, "difference order; floor(s)+1 when omitted");
  norm->add_option("--alpha", na.mo.alpha, "weierstrass and bochner-riesz order");
  norm->add_option("--m", na.mo.m, "heat and poisson order");
  norm->add_option("--l", na.mo.l, "ball average order");
  norm->add_option("--lambda", na.mo.lambda, "bochner-riesz index");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a claim, every claim, or an invariant suite");
  verify->add_option("id", va.target, "claim id or 'all'");
  verify->add_option("--suite", va.suite, "suite name or 'all'");
  verify->add_option("--param", va.params, "name=value, repeatable");
  verify->add_option("--samples", va.samples, "sample count override");
  verify->add_flag("--zero-signal", va.zero_signal, "run suites on the zero signal");

  KArgs ka;
  auto* kf = app.add_subcommand("kfunc", "evaluate K-functionals");
  kf->add_option("--input", ka.input);
  kf->add_option("--builtin", ka.builtin);
  kf->add_option("--kind", ka.kind, "hilbert, realization, sobolev, formula or bv")
      ->check(CLI::IsMember({"hilbert", "realization", "sobolev", "formula", "bv"}));
  kf->add_option("--formula", ka.formula, "i .. vii");
  kf->add_option("--t", ka.t, "values of t: list or lo:hi:step");
  kf->add_option("--k", ka.fp.k);
  kf->add_option("--p", ka.fp.p);
  kf->add_option("--s", ka.fp.s);
  kf->add_option("--b", ka.fp.b);
  kf->add_option("--q", ka.fp.q);
  kf->add_option("--alpha", ka.fp.alpha);
  kf->add_option("--r", ka.fp.r);

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "parameter sweeps as CSV");
  sweep->add_option("--quantity", sa.quantity, "norm-ratio or fraclap-trace");
  sweep->add_option("--method", sa.method, "method compared against differences");
  sweep->add_option("--family", sa.family, "builtin family the samples come from");
  sweep->add_option("--count", sa.count, "samples drawn from a random family");
  sweep->add_option("--s", sa.s, "list or lo:hi:step");
  sweep->add_option("--b", sa.b);
  sweep->add_option("--p", sa.p);
  sweep->add_option("--q", sa.q);
  sweep->add_option("--t", sa.t, "fraclap-trace: values of t (default 2^-1 .. 2^-8)");
  sweep->add_option("--order", sa.order, "fraclap-trace: order s of the fractional Laplacian");
  sweep->add_option("--lambda", sa.lambda, "fraclap-trace: modulus order");

  std::string what;
  auto* list = app.add_subcommand("list", "list claims, families, suites or methods");
  list->add_option("what", what)->required()->check(CLI::IsMember({"claims", "families", "suites", "methods"}));

  try {
    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  if (c.format.empty()) c.format = sweep->parsed() ? "csv" : (list->parsed() ? "text" : "json");
  sa.t_given = sweep->count("--t") > 0;

  std::ostringstream buf;
  int rc = 0;
  try {
    if (norm->parsed()) cmd_norm(c, na, buf);
    if (verify->parsed()) cmd_verify(c, va, buf);
    if (kf->parsed()) cmd_kfunc(c, ka, buf);
    if (sweep->parsed()) cmd_sweep(c, sa, buf);
    if (list->parsed()) cmd_list(c, what, buf);
  } catch (const VerificationFailed& e) {
    err << e.what() << "\n";
    rc = 3;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "BadParams: " << e.what() << "\n";
    return 2;
  }
  if (c.out_path.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) {
      err << "BadParams: cannot write '" << c.out_path << "'\n";
      return 2;
    }
    f << buf.str();
  }
  return rc;
}

}  // namespace logsmooth
