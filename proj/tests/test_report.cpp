#include <doctest.h>

#include <atomic>

#include "nash/report.hpp"
#include "nash/verify.hpp"

using namespace nash;

TEST_CASE("nash JSON for the A3 example") {
  auto rs = RootSystem::build({Family::A, 3});
  WeylGroup W(rs);
  SchubertDatum d(W, ParabolicSubset::from_levi(3, {1, 3}), W.from_word({1, 3, 2}));
  auto j = nash_json(d, nash_data(d));
  CHECK(j["delta_w"].empty());
  CHECK(j["Q_levi"].empty());
  CHECK(j["fixed_point_count"] == 8);
  CHECK(j["fibers"].size() == 5);
  CHECK(j["fibers"][0]["v_word"] == "e");
  CHECK(j["fibers"][0]["fiber_words"].size() == 4);
  CHECK(j["fibers"][0]["smooth"] == false);
  CHECK(j["singular"] == json::array({"e"}));
  CHECK(nash_text(d, nash_data(d)).find("Delta_w = {}") != std::string::npos);
}

TEST_CASE("peterson JSON mirrors the table and DOT is a labelled digraph") {
  auto rs = RootSystem::build({Family::A, 3});
  WeylGroup W(rs);
  auto P = ParabolicSubset::from_levi(3, {1, 3});
  auto w = W.from_word({1, 3, 2});
  SchubertDatum d(W, P, w);
  auto g = eventual_translates(W, w, P);
  auto j = peterson_json(W, P, g, &d);
  REQUIRE(j["translates"].size() == 8);
  for (const auto& row : j["translates"]) {
    CHECK(row.contains("v"));
    CHECK(row.contains("v_tilde"));
    CHECK(row["N"].size() == 3);
  }
  CHECK(j["translates"][0]["v"] == "s1s3s2");
  CHECK(j["edges"].size() == 8);

  auto dot = peterson_dot(W, g);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.back() == '\n');
  CHECK(dot.find("[label=\"s1s3s2\"]") != std::string::npos);
  CHECK(dot.find("[label=\"r_{1,2,3}\"]") != std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++arrows;
  CHECK(arrows == 8);
  CHECK(peterson_dot(W, eventual_translates(W, w, P)) == dot);

  // without a cominuscule datum the v column is null
  auto j2 = peterson_json(W, P, g, nullptr);
  CHECK(j2["translates"][0]["v"].is_null());
}

TEST_CASE("grassmann JSON schema") {
  auto c = config_description(Permutation::parse("2,5,7,1,3,4,6,8"), 3, 8);
  auto j = grassmann_json(c);
  for (const char* key : {"coess", "lambda", "corners", "nash_smooth", "conditions"}) CHECK(j.contains(key));
  CHECK(j["lambda"] == json::array({4, 3, 1}));
  CHECK(j["corners"] == json::array({0, 1, 2}));
  CHECK(j["nash_smooth"] == false);
  CHECK(j["coess"][0] == json({{"p", 2}, {"q", 3}, {"r", 1}}));
  CHECK(j["conditions"].size() == 3);
  CHECK(grassmann_text(c).find("NOT smooth") != std::string::npos);
}

TEST_CASE("conjecture JSON schema") {
  auto rep = conjecture_check(Permutation::parse("2,4,1,3"));
  auto j = conjecture_json(rep);
  CHECK(j["w"] == "2,4,1,3");
  CHECK(j["covexillary"] == true);
  CHECK(j["verdict"] == "pass");
  for (const auto& p : j["points"])
    for (const char* key : {"flag", "z_count", "zdual_count", "product", "peterson_count", "match"})
      CHECK(p.contains(key));
  CHECK(j.dump() == conjecture_json(conjecture_check(Permutation::parse("2,4,1,3"))).dump());
}

TEST_CASE("parallel_for visits every index once and forwards exceptions") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS(parallel_for(10, 3, [](std::size_t i) {
    if (i == 7) throw std::runtime_error("boom");
  }));
  parallel_for(0, 2, [](std::size_t) { FAIL("no work expected"); });
}

TEST_CASE("verification sweeps at reduced bounds") {
  SweepBounds b;
  b.max_rank_a = 3;
  b.max_rank_bc = 2;
  b.include_d4 = false;
  b.coess_max_n = 5;
  b.fiber_max_n = 5;
  b.conjecture_max_n = 4;
  b.threads = 2;
  for (const auto& r : {check_theorem2(b), check_singular_locus(b), check_coess_nash(b),
                        check_grassmann_fiberproduct(b), check_translate_invariants(b), check_conjecture(b)}) {
    CAPTURE(r.name);
    CHECK(r.passed());
    CHECK(r.checked > 0);
  }
  auto cases = cominuscule_cases(b);
  CHECK(cases.size() == 1 + 2 + 3 + 1 + 1);  // A1, A2, A3, B2, C2
}
