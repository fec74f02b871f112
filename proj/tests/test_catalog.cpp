#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "logsmooth/catalog.hpp"
#include "logsmooth/errors.hpp"

using namespace logsmooth;

namespace {

const std::vector<std::string> kWitnessClaims = {
    "sobolev-gap-into-bbesov",         "lacunary-sobolev-gap-into-bbesov",    "bbesov-into-sobolev-gap",
    "lacunary-bbesov-into-sobolev-gap", "fourier-besov-into-sobolev",          "fourier-besov-gap-into-bbesov",
    "fourier-besov-sharp-into-bbesov",  "bbesov-into-fourier-besov-sharp",     "sobolev-embedding-into-bbesov-sharp",
    "bbesov-sobolev-embedding-sharp",   "derivative-bbesov-sharp",             "lift-bbesov-into-fourier-besov-sharp",
    "lift-fourier-besov-into-bbesov-sharp"};

double window_value(const WitnessFamily& w) { return w.descriptor.at("window").at("value").get<double>(); }

}  // namespace

TEST_CASE("predicate examples") {
  CHECK(embed_predicate("sobolev-into-bbesov", {{"p", 2}, {"q", 2}}));
  CHECK_FALSE(embed_predicate("sobolev-into-bbesov", {{"p", 3}, {"q", 2}}));
  CHECK(embed_predicate("sobolev-into-bbesov", {{"p", 3}, {"q", 3}}));

  CHECK(embed_predicate("bbesov-equals-sobolev", {{"p", 2}, {"q", 2}, {"b", 0.3}, {"xi", 0.8}}));
  CHECK_FALSE(embed_predicate("bbesov-equals-sobolev", {{"p", 2}, {"q", 2}, {"b", 0.3}, {"xi", 0.9}}));
  CHECK_FALSE(embed_predicate("bbesov-equals-sobolev", {{"p", 3}, {"q", 2}, {"b", 0}, {"xi", 0.5}}));
  CHECK_FALSE(embed_predicate("bbesov-equals-fourier-besov", {{"p", 2}, {"q", 3}, {"b", 0}, {"xi", 0.5}}));

  // p = q = 3 needs b > 1/2 - 1/3
  CHECK(embed_predicate("fourier-besov-into-lp", {{"p", 3}, {"q", 3}, {"b", 0.17}}));
  CHECK(embed_predicate("fourier-besov-into-lp", {{"p", 3}, {"q", 3}, {"b", 0.2}}));
  CHECK_FALSE(embed_predicate("fourier-besov-into-lp", {{"p", 3}, {"q", 3}, {"b", 1.0 / 6}}));
  CHECK_FALSE(embed_predicate("fourier-besov-into-lp", {{"p", 3}, {"q", 3}, {"b", 0.1}}));
  CHECK(embed_predicate("identity", {}));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(find_claim("no-such-claim"), UnknownClaim);
  CHECK_THROWS_AS(embed_predicate("no-such-claim", {}), UnknownClaim);
  CHECK_THROWS_AS(embed_predicate("sobolev-into-bbesov", {{"p", 0.5}}), DomainError);
  CHECK_THROWS_AS(embed_predicate("sobolev-into-bbesov", {{"b", -0.6}, {"q", 2}}), DomainError);
  CHECK_THROWS_AS(embed_predicate("sobolev-into-bbesov", {{"zeta", 1}}), BadParams);
  CHECK_THROWS_AS(embed_predicate("sobolev-into-bbesov", {{"p", std::nan("")}}), BadParams);
  CHECK_THROWS_AS(counterexample_for("sobolev-into-bbesov", {}), NoWitness);
  CHECK_THROWS_AS(counterexample_for("lift-atoms", {}), NoWitness);
  CHECK_THROWS_AS(counterexample_for("bbesov-into-fourier-besov-low-q", {}), NoWitness);
  CHECK_THROWS_AS(counterexample_for("fourier-besov-sharp-into-bbesov", {{"p", 3}, {"q", 1.5}}), NoWitness);
  CHECK_THROWS_AS(counterexample_for("bbesov-into-fourier-besov-sharp", {{"p", 1.5}, {"q", 4}}), NoWitness);
}

TEST_CASE("counterexample windows at their midpoints") {
  Params P = {{"p", 2}, {"q", 4}, {"b", 0}, {"eps", 0.25}};
  WitnessFamily w = counterexample_for("sobolev-gap-into-bbesov", P);
  CHECK(w.kind == "profile");
  CHECK(window_value(w) == doctest::Approx(0.625));
  w = counterexample_for("lacunary-sobolev-gap-into-bbesov", P);
  CHECK(w.kind == "lacunary");
  CHECK(window_value(w) == doctest::Approx(0.625));
  // (max{1/q, 1/p - b - 1/q}, 1/p) = (1/4, 1/2)
  w = counterexample_for("fourier-besov-gap-into-bbesov", {{"p", 2}, {"q", 4}, {"b", 0}});
  CHECK(w.kind == "profile");
  CHECK(window_value(w) == doctest::Approx(0.375));
  // q = p takes the lacunary route
  CHECK(counterexample_for("fourier-besov-gap-into-bbesov", {{"p", 3}, {"q", 3}}).kind == "lacunary");
  CHECK(counterexample_for("fourier-besov-sharp-into-bbesov", {{"p", 3}, {"q", 4}}).route == "2-min");
  CHECK(counterexample_for("fourier-besov-sharp-into-bbesov", {{"p", 1.5}, {"q", 3}}).route == "p-min");
}

TEST_CASE("witness verdicts") {
  for (const std::string& id : kWitnessClaims) {
    Verdict v = verify_claim(id, {});
    CHECK_FALSE(v.holds);
    REQUIRE_MESSAGE(v.witness, id);
    CHECK_MESSAGE(v.source->finite, id);
    CHECK_MESSAGE(!v.target->finite, id);
    CHECK_MESSAGE(v.pass, id);
  }
  const std::vector<std::pair<std::string, Params>> routes = {
      {"fourier-besov-into-sobolev", {{"p", 3}, {"q", 4}}},
      {"fourier-besov-gap-into-bbesov", {{"p", 3}, {"q", 3}}},
      {"fourier-besov-sharp-into-bbesov", {{"p", 3}, {"q", 4}}},
      {"bbesov-into-fourier-besov-sharp", {{"p", 1.5}, {"q", 1.5}}},
      {"derivative-bbesov-sharp", {{"p", 3}, {"q", 4}}},
      {"lift-bbesov-into-fourier-besov-sharp", {{"p", 1.5}, {"q", 1.5}}},
      {"lift-fourier-besov-into-bbesov-sharp", {{"p", 3}, {"q", 4}}}};
  for (const auto& [id, P] : routes) CHECK_MESSAGE(verify_claim(id, P).pass, id);

  Verdict none = verify_claim("lift-atoms", {});
  CHECK(none.pass);
  CHECK_FALSE(none.witness);
}

TEST_CASE("holds-branch probes") {
  Verdict id = verify_claim("identity", {});
  REQUIRE(id.probe);
  CHECK(id.probe->max_ratio == 1.0);
  CHECK(id.pass);

  Verdict v = verify_claim("sobolev-into-bbesov", {{"p", 2}, {"q", 4}});
  CHECK(v.holds);
  REQUIRE(v.probe);
  CHECK(v.probe->samples == 6);
  CHECK(v.probe->max_ratio > 0.0);
  CHECK(v.pass);
  CHECK(to_json(v).at("predicate") == "holds");
}

TEST_CASE("two-sided bounds meet exactly at p = q = 2") {
  Rng rng(91);
  const EmbeddingClaim& c = find_claim("fourier-besov-into-bbesov");
  for (int i = 0; i < 300; ++i) {
    Params P = c.sample(rng);
    bool both = embed_predicate("fourier-besov-into-bbesov", P) && embed_predicate("bbesov-into-fourier-besov", P);
    CHECK(both == embed_predicate("bbesov-equals-fourier-besov", P));
  }
}

TEST_CASE("registry") {
  std::set<std::string> ids;
  for (const EmbeddingClaim& c : claim_registry()) {
    CHECK_MESSAGE(ids.insert(c.id).second, c.id);
    CHECK_NOTHROW(complete_params(c, {}));
    Rng a(5), b(5);
    for (int i = 0; i < 5; ++i) {
      Params P = c.sample(a);
      CHECK(P == c.sample(b));
      CHECK_NOTHROW(c.check_domain(P));
    }
  }
  nlohmann::json j = registry_json();
  CHECK(j.size() == claim_registry().size());
  CHECK(j.at(0).at("id") == "identity");
  for (const std::string& id : kWitnessClaims) CHECK(ids.count(id));
}
