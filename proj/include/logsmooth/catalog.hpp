#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logsmooth/profiles.hpp"
#include "logsmooth/random.hpp"

namespace logsmooth {

using Params = std::map<std::string, double>;

// A concrete counterexample: the family plus the two verdicts it is expected
// to produce (source finite, target infinite).
struct WitnessFamily {
  std::string kind;  // "profile", "gm-sequence" or "lacunary"
  std::string route;
  nlohmann::json descriptor;
  std::string source_space, target_space;
  std::function<FiniteVerdict()> source;
  std::function<FiniteVerdict()> target;
};

struct ProbeResult {
  double max_ratio = 0.0;
  double threshold = 0.0;
  int samples = 0;
  bool pass = true;
  std::string note;
};

struct ProbeOptions {
  std::uint64_t seed = 1;
  double threshold = 50.0;
  int samples = 6;
  int J = 11;
};

struct EmbeddingClaim {
  std::string id;
  std::string statement;
  std::vector<std::pair<std::string, double>> defaults;
  std::function<void(const Params&)> check_domain;  // throws DomainError
  std::function<bool(const Params&)> predicate;
  std::function<WitnessFamily(const Params&)> witness;                 // empty: predicate-only
  std::function<ProbeResult(const Params&, const ProbeOptions&)> probe;  // empty: no holds-branch probe
  std::function<Params(Rng&)> sample;                                   // random in-domain tuple
};

const std::vector<EmbeddingClaim>& claim_registry();
const EmbeddingClaim& find_claim(const std::string& id);

// Defaults filled in; unknown names raise BadParams and the domain is checked.
Params complete_params(const EmbeddingClaim& claim, const Params& given);

bool embed_predicate(const std::string& id, const Params& params);
WitnessFamily counterexample_for(const std::string& id, const Params& params);

struct Verdict {
  std::string id;
  Params params;
  bool holds = true;
  std::optional<FiniteVerdict> source, target;
  std::optional<WitnessFamily> witness;
  std::optional<ProbeResult> probe;
  bool pass = true;
  std::string note;
};

Verdict verify_claim(const std::string& id, const Params& params, const ProbeOptions& options = {});

nlohmann::json to_json(const Params& p);
nlohmann::json to_json(const Verdict& v);
nlohmann::json registry_json();

}  // namespace logsmooth
