#pragma once

#include <map>
#include <optional>

#include "logsmooth/profiles.hpp"

namespace logsmooth {

enum class LacConvention {
  Continuous,  // frequencies 2^j - 2, j >= 3
  Periodic     // frequencies lambda^j, j >= 0
};

// b_j = C 2^{r j} (1+j)^a (1+log(1+j))^c
struct LacunaryLaw {
  double C = 0.0, r = 0.0, a = 0.0, c = 0.0;
  double operator()(int j) const;
};

struct LacunarySeq {
  std::map<int, cplx> coeffs;       // explicit entries; override the law
  std::optional<LacunaryLaw> law;   // fills every other j >= j_min
  LacConvention convention = LacConvention::Periodic;
  int lambda = 2;

  int j_min() const { return convention == LacConvention::Continuous ? 3 : 0; }
  cplx at(int j) const;
  long frequency(int j) const;
};

struct LacunaryNorms {
  FiniteVerdict besov;    // (sum_j (2^{js}(1+j)^b |b_j|)^q)^{1/q}
  FiniteVerdict sobolev;  // the same with q = 2
  FiniteVerdict lp;       // (sum_j |b_j|^2)^{1/2}, the L_p norm up to constants
};

LacunaryNorms lac_norm_fourier(const LacunarySeq& seq, double s, double b, double q);
FiniteVerdict lac_norm_bbesov(const LacunarySeq& seq, double s, double b, double q);

// sum_j (b_j e^{i n_j x} + conj(b_j) e^{-i n_j x}) / 2 for j <= j_max
Spectrum realize(const LacunarySeq& seq, int j_max);

nlohmann::json to_json(const LacunarySeq& seq);
LacunarySeq lacunary_from_json(const nlohmann::json& j);

}  // namespace logsmooth
