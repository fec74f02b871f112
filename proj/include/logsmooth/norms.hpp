#pragma once

#include <string>
#include <vector>

#include "logsmooth/core_signal.hpp"

namespace logsmooth {

enum class Family {
  BesovDiff,
  BesovFourier,
  TriebelLizorkin,
  Sobolev,
  LogLipschitz,
  ClassicalSobolev,
  HeatLambda
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct SpaceSpec {
  Family family = Family::BesovDiff;
  double s = 0.0;
  double b = 0.0;
  double p = 2.0;
  double q = 2.0;
  int k = 1;
};

// Throws the error that names the first violated invariant.
void validate(const SpaceSpec& spec);

nlohmann::json to_json(const SpaceSpec& spec);

struct Resolution {
  int J = kDefaultJ;
  int j_max = 0;
  int t_points = 0;
};

struct NormEstimate {
  double value = 0.0;
  std::string method;
  SpaceSpec spec;
  Resolution resolution;
  std::vector<std::string> notes;
};

nlohmann::json to_json(const NormEstimate& e);

struct DyadicPartition {
  int j_max = 2;
  // phi[j][k] for 0 <= k <= 2^{j_max+1}; symmetric in k.
  std::vector<std::vector<double>> phi;

  double at(int j, long k) const;
};

double partition_phi0(double x);
DyadicPartition make_partition(int j_max);
// The partition sized for grid level J: j_max = J - 2.
DyadicPartition partition_for_grid(int J);

// Weighted l_q aggregation of a sequence (q = inf gives the sup).
double lq_sum(const std::vector<double>& terms, double q);

// Difference-norm dyadic sums stop where t = 2^{-j} falls below the grid step.
int difference_j_max(int J);

NormEstimate norm_besov_diff(const Signal& f, const SpaceSpec& spec);
NormEstimate norm_besov_fourier(const Spectrum& f, const SpaceSpec& spec, const DyadicPartition& part,
                                int J = kDefaultJ);
NormEstimate norm_triebel_lizorkin(const Spectrum& f, const SpaceSpec& spec, const DyadicPartition& part,
                                   int J = kDefaultJ);
NormEstimate norm_sobolev(const Spectrum& f, const SpaceSpec& spec, int J = kDefaultJ);
NormEstimate norm_lipschitz(const Signal& f, const SpaceSpec& spec);
NormEstimate norm_truncated_lp(const Spectrum& f, const SpaceSpec& spec, const DyadicPartition& part,
                               int J = kDefaultJ);
NormEstimate norm_approximation(const Spectrum& f, const SpaceSpec& spec, int J = kDefaultJ);
NormEstimate norm_weierstrass(const Spectrum& f, const SpaceSpec& spec, double alpha, int J = kDefaultJ);

enum class SemigroupKernel { Heat, Poisson };
NormEstimate norm_heat_poisson(const Spectrum& f, const SpaceSpec& spec, SemigroupKernel kernel, int m,
                               int J = kDefaultJ);
NormEstimate norm_bochner_riesz(const Spectrum& f, const SpaceSpec& spec, double lambda, double alpha,
                                int J = kDefaultJ);
NormEstimate norm_ball_average(const Spectrum& f, const SpaceSpec& spec, int l, int J = kDefaultJ);
NormEstimate norm_lambda_heat(const Spectrum& f, const SpaceSpec& spec, int k, int J = kDefaultJ);

// Method dispatch by name.  The method fixes the family; spec.k is used as given.
struct MethodOptions {
  double alpha = 2.0;   // weierstrass and bochner-riesz order
  int m = 1;            // heat and poisson order
  int l = 1;            // ball average order
  double lambda = 1.0;  // bochner-riesz index
};

const std::vector<std::string>& norm_methods();
NormEstimate norm_by_method(const std::string& method, const Spectrum& f, SpaceSpec spec, int J = kDefaultJ,
                            const MethodOptions& opt = {});

// Operator symbols shared with the K-functional and operator modules.
double weierstrass_symbol(long k, double t, double alpha);
double heat_symbol(long k, double t);
double poisson_symbol(long k, double t);
double bochner_riesz_symbol(long k, double t, double lambda, double alpha);
double ball_average_symbol(long k, double t, int l);

}  // namespace logsmooth
