#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace logsmooth {

// How a cell's measured quantity is judged against its threshold C.
enum class Bound {
  TwoSided,  // ratios in [1/C, C]
  Upper,     // ratios <= C
  Error      // errors (or mismatch counts) <= C
};

// One row of the threshold table; S bounds max/min of the ratios inside a cell.
struct RatioProtocol {
  std::string suite;
  std::string generator;  // test family the ratios are taken over
  Bound bound = Bound::TwoSided;
  double C = 1.0;
  double S = 1e300;
  int samples = 20;
};

const std::vector<RatioProtocol>& threshold_table();
const RatioProtocol& protocol_for(const std::string& suite);

struct SuiteCell {
  nlohmann::json params = nlohmann::json::object();
  double max_ratio = 0.0;  // worst measured value: max(r, 1/r), max r or max error
  double spread = 1.0;
  double threshold = 0.0;
  int samples = 0;  // samples that entered the statistic
  bool pass = true;
  std::string offending;  // worst input, filled on failure
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCell> cells;
  std::string note;

  bool pass() const;
  double worst() const;
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  int samples = 0;  // 0: the protocol's count
  int J = 12;
  bool zero_signal = false;  // replace every random signal by 0
  double threshold_C = 0.0;  // 0: the table's C (ratio suites only)
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::vector<std::string> covers;  // invariant ids
  std::function<SuiteReport(const SuiteOptions&)> run;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo& find_suite(const std::string& name);  // BadParams when unknown
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

// Every invariant the modules declare, as "module/id".
const std::vector<std::string>& declared_invariants();
std::vector<std::string> uncovered_invariants();

// Growth test for int t^A (1+|log t|)^B (1+log(1+|log t|))^C dt/t near 0 or inf, done by
// plain Gauss-Kronrod in the variable that decides convergence: I(2X)/I(X).
double partial_integral_growth(double A, double B, double C, bool at_zero, double X = 200.0);

}  // namespace logsmooth
