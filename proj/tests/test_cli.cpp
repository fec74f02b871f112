#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <sstream>

#include "logsmooth/cli.hpp"
#include "logsmooth/errors.hpp"

using namespace logsmooth;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) v.push_back(l);
  return v;
}

std::string shell(const std::string& cmd) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

}  // namespace

TEST_CASE("norm") {
  Run r = run({"norm", "--builtin", "cosine 1", "--methods", "differences,fourier", "--s", "0.5", "--p", "2", "--q", "2"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0].at("method") == "differences");
  CHECK(j[1].at("method") == "fourier");
  CHECK(j[1].at("value").get<double>() == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));

  r = run({"--format", "csv", "norm", "--builtin", "zero", "--methods", "differences,fourier,heat"});
  REQUIRE(r.code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].substr(rows[i].rfind(',') + 1) == "0");

  r = run({"norm", "--builtin", "cosine 1", "--p", "0.5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("BadExponent") != std::string::npos);
  CHECK(run({"norm", "--builtin", "no-such-family"}).code == 2);
  CHECK(run({"norm", "--builtin", "cosine 1", "--methods", "guesswork"}).code == 2);
}

TEST_CASE("verify") {
  Run r = run({"verify", "sobolev-gap-into-bbesov"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  if (j.is_array()) j = j.at(0);
  CHECK(j.at("predicate") == "fails");
  CHECK(j.at("pass") == true);
  CHECK(j.at("evidence").at("source_verdict").at("finite") == true);

  r = run({"verify", "sobolev-into-bbesov", "--param", "p=2", "--param", "q=4"});
  CHECK(r.code == 0);
  CHECK(run({"verify", "no-such-claim"}).code == 2);
  CHECK(run({"verify", "sobolev-into-bbesov", "--param", "p=0.5"}).code == 2);
  CHECK(run({"verify", "--suite", "parseval"}).code == 0);
  CHECK(run({"verify", "--suite", "no-such-suite"}).code == 2);
}

TEST_CASE("sweep") {
  Run r = run({"sweep", "--quantity", "norm-ratio", "--method", "fourier", "--family", "cosine 2", "--s", "0.5",
               "--b", "0,1", "--p", "2", "--q", "1,2"});
  REQUIRE(r.code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "s,b,p,q,sample,differences,fourier,ratio");
  // rows come ordered by their parameters
  CHECK(rows[1].rfind("0.5,0,2,1,", 0) == 0);
  CHECK(rows[4].rfind("0.5,1,2,2,", 0) == 0);

  r = run({"sweep", "--quantity", "norm-ratio", "--method", "heat", "--family", "random", "--count", "3", "--s",
           "0.3", "--b", "0", "--p", "2", "--q", "2"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 4);

  r = run({"sweep", "--quantity", "fraclap-trace", "--family", "random-zero-mean"});
  REQUIRE(r.code == 0);
  rows = lines(r.out);
  CHECK(rows[0] == "t,ratio");
  CHECK(rows.size() == 9);

  r = run({"sweep", "--quantity", "fraclap-trace", "--family", "random-zero-mean", "--t", ""});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"t,ratio"});

  CHECK(run({"sweep", "--quantity", "norm-ratio", "--s", "1:0:0.1"}).code == 2);
  CHECK(run({"sweep", "--quantity", "norm-ratio", "--s", "x"}).code == 2);
}

TEST_CASE("list") {
  Run r = run({"list", "claims"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("sobolev-into-bbesov") != std::string::npos);
  r = run({"list", "families"});
  REQUIRE(r.code == 0);
  for (const BuiltinFamily& f : builtin_families()) CHECK(r.out.find(f.usage) != std::string::npos);
  CHECK(run({"list", "suites"}).code == 0);
  CHECK(run({"list", "methods"}).code == 0);
  CHECK(run({"list", "nothing"}).code == 2);
}

TEST_CASE("builtin families") {
  Spectrum c = builtin_spectrum("cosine 3", 1, 10);
  CHECK(c.at(3) == cplx(0.5));
  CHECK(c.at(-3) == cplx(0.5));
  CHECK(builtin_spectrum("zero", 1, 10).coeffs.empty());
  Spectrum a = builtin_spectrum("random", 7, 10), b = builtin_spectrum("random", 7, 10);
  CHECK(a.coeffs == b.coeffs);
  CHECK(builtin_spectrum("random-zero-mean", 7, 10).at(0) == cplx(0.0));
  CHECK_THROWS_AS(builtin_spectrum("hexagon", 1, 10), BadParams);
}

TEST_CASE("the installed binary is deterministic") {
  const char* bin = std::getenv("LOGSMOOTH_CLI");
  if (!bin) return;
  std::string cmd = std::string(bin) +
                    " --seed 9 sweep --quantity norm-ratio --method poisson --family random --count 2 --s 0.3,0.7"
                    " --b 0 --p 2 --q 2";
  std::string first = shell(cmd), second = shell(cmd);
  CHECK(lines(first).size() == 5);
  CHECK(first == second);
  CHECK(std::system((std::string(bin) + " verify no-such-claim 2>/dev/null").c_str()) != 0);
}
