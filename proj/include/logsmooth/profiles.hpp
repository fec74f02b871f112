#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logsmooth/core_signal.hpp"
#include "logsmooth/quadrature.hpp"

namespace logsmooth {

// C t^a (1+|log t|)^b (1+log(1+|log t|))^c
struct PLTerm {
  double C = 0.0, a = 0.0, b = 0.0, c = 0.0;

  double operator()(double t) const;
  bool is_zero() const { return C == 0.0; }
};

PLTerm operator*(const PLTerm& x, const PLTerm& y);
PLTerm pow(const PLTerm& x, double r);

// inner on (0,1], outer on [1,inf); the profile vanishes from cutoff on.
struct PowerLogProfile {
  PLTerm inner;
  PLTerm outer;
  double cutoff = kInf;

  static PowerLogProfile indicator(double R);
  static PowerLogProfile zero() { return {}; }
  double operator()(double t) const;
  bool is_indicator() const;
};

struct FiniteVerdict {
  bool finite = true;
  std::optional<double> value;
  std::string reason;

  static FiniteVerdict of(double v) { return {true, v, ""}; }
  static FiniteVerdict divergent(std::string why) { return {false, std::nullopt, std::move(why)}; }
};

nlohmann::json to_json(const PLTerm& t);
nlohmann::json to_json(const PowerLogProfile& f);
nlohmann::json to_json(const FiniteVerdict& v);
PowerLogProfile profile_from_json(const nlohmann::json& j);

enum class End { Zero, Infinity };

// Decides int t^A (1+|log t|)^B (1+log(1+|log t|))^C dt/t < inf near the given end.
bool finiteness_oracle(double A, double B, double C, End end);

// int_lo^hi g(t) dt/t for 0 <= lo < hi <= inf.
FiniteVerdict powerlog_integral(const PLTerm& g, double lo, double hi);
// sum_{n >= n0} g(n).
FiniteVerdict powerlog_series(const PLTerm& g, long n0 = 1);

// A coefficient sequence indexed from n = 1: an explicit finite list or a power-log law.
struct CoeffSeq {
  std::vector<double> list;
  std::optional<PLTerm> law;

  double at(long n) const;
  bool is_zero() const { return list.empty() && (!law || law->is_zero()); }
};

struct GMSequence {
  CoeffSeq a;  // cosine coefficients
  CoeffSeq b;  // sine coefficients
};

// Smallest C with sum_{k=n}^{2n-1} |a_k - a_{k+1}| <= C a_n for all n <= n_max.
double gm_check(const CoeffSeq& a, long n_max);

FiniteVerdict gm_besov_diff_char(const PowerLogProfile& F0, int d, double s, double b, double p, double q);
FiniteVerdict gm_besov_fourier_char(const PowerLogProfile& F0, int d, double s, double b, double p, double q);
FiniteVerdict gm_sobolev_char(const PowerLogProfile& F0, int d, double s, double b, double p);
FiniteVerdict hl_norm(const PowerLogProfile& F0, int d, double p);

FiniteVerdict gm_seq_besov_char(const GMSequence& seq, double s, double b, double p, double q);
FiniteVerdict gm_seq_sobolev_char(const GMSequence& seq, double s, double b, double p);
FiniteVerdict gm_seq_bbesov_char(const GMSequence& seq, double s, double b, double p, double q);

// sum_{n=1}^{n_max} a_n cos nx + b_n sin nx
Spectrum realize(const GMSequence& seq, long n_max);

}  // namespace logsmooth
