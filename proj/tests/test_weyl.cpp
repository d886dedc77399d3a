#include <doctest.h>

#include <cstdlib>

#include "nash/error.hpp"
#include "nash/weyl.hpp"
#include "oracles.hpp"

using namespace nash;

TEST_CASE("group orders by breadth-first enumeration") {
  auto order = [](Family f, int n) {
    auto rs = RootSystem::build({f, n});
    return WeylGroup(rs).elements().size();
  };
  CHECK(order(Family::A, 3) == 24);
  CHECK(order(Family::A, 4) == 120);
  CHECK(order(Family::B, 3) == 48);
  CHECK(order(Family::C, 3) == 48);
  CHECK(order(Family::D, 4) == 192);
}

TEST_CASE("words, lengths and products in A3") {
  auto rs = RootSystem::build({Family::A, 3});
  WeylGroup W(rs);
  CHECK(W.from_word({}).is_identity());
  auto w = W.from_word({1, 3, 2});
  CHECK(w.length() == 3);
  CHECK(W.word_string(w) == "s1s3s2");
  CHECK(W.word_string(W.identity()) == "e");
  CHECK(W.multiply(W.simple_reflection(1), W.simple_reflection(1)).is_identity());
  CHECK(W.from_word({3, 1, 2}) == w);  // s1 and s3 commute
}

TEST_CASE("element invariants over small groups") {
  for (auto t : {CartanType{Family::A, 3}, CartanType{Family::B, 3}, CartanType{Family::D, 4}}) {
    CAPTURE(t.name());
    auto rs = RootSystem::build(t);
    WeylGroup W(rs);
    for (const auto& w : W.elements()) {
      auto word = W.reduced_word(w);
      REQUIRE(static_cast<int>(word.size()) == w.length());
      CHECK(W.from_word(word) == w);
      CHECK(W.multiply(w, W.inverse(w)).is_identity());
      CHECK(static_cast<int>(W.left_inversions(w).size()) == w.length());
      for (const auto& b : rs.roots()) CHECK(rs.is_root(w.apply(b)));
    }
  }
}

TEST_CASE("left inversion sets") {
  auto rs = RootSystem::build({Family::A, 3});
  WeylGroup W(rs);
  CHECK(W.left_inversions(W.identity()).empty());
  auto w = W.from_word({1, 3, 2});
  std::vector<Root> expect{Root{0, 0, 1}, Root{1, 0, 0}, Root{1, 1, 1}};
  std::sort(expect.begin(), expect.end());
  CHECK(W.left_inversions(w) == expect);
  auto P = ParabolicSubset::from_levi(3, {1, 3});
  CHECK(W.left_inversions_P(w, P) == expect);
  CHECK(W.left_inversions_P(W.identity(), P).empty());
  auto w0 = W.longest_element(ParabolicSubset::from_levi(3, {1, 2, 3}));
  CHECK(W.left_inversions(w0).size() == 6);
  // LInv^P is constant on cosets
  for (const auto& u : {W.from_word({1}), W.from_word({3}), W.from_word({1, 3})})
    CHECK(W.left_inversions_P(W.multiply(w, u), P) == expect);
}

TEST_CASE("bruhat order agrees with the subword oracle on S4 and B3") {
  for (auto t : {CartanType{Family::A, 3}, CartanType{Family::B, 3}}) {
    CAPTURE(t.name());
    auto rs = RootSystem::build(t);
    WeylGroup W(rs);
    auto all = W.elements();
    for (const auto& w : all) {
      auto below = oracle::subword_products(W, W.reduced_word(w));
      for (const auto& v : all) REQUIRE(W.bruhat_leq(v, w) == (below.count(v) > 0));
    }
  }
}

TEST_CASE("bruhat order on S4 agrees with the rank-matrix criterion") {
  auto rs = RootSystem::build({Family::A, 3});
  WeylGroup W(rs);
  auto perms = oracle::all_perms(4);
  // Build elements from one-line notation by bubble sort, independently of grassmann.
  auto element = [&](std::vector<int> p) {
    std::vector<int> word;
    for (bool swapped = true; swapped;) {
      swapped = false;
      for (int i = 0; i + 1 < 4; ++i)
        if (p[i] > p[i + 1]) {
          std::swap(p[i], p[i + 1]);
          word.push_back(i + 1);
          swapped = true;
        }
    }
    std::reverse(word.begin(), word.end());
    return W.from_word(word);
  };
  for (const auto& u : perms)
    for (const auto& w : perms) CHECK(W.bruhat_leq(element(u), element(w)) == oracle::perm_bruhat_leq(u, w));
}

TEST_CASE("bruhat spot checks") {
  auto rs = RootSystem::build({Family::A, 3});
  WeylGroup W(rs);
  auto w = W.from_word({1, 3, 2});
  CHECK(W.bruhat_leq(W.identity(), w));
  CHECK(W.bruhat_leq(W.from_word({3, 2}), w));
  CHECK_FALSE(W.bruhat_leq(W.from_word({2, 1}), w));
}

TEST_CASE("coset representatives") {
  for (auto t : {CartanType{Family::A, 4}, CartanType{Family::C, 3}, CartanType{Family::D, 4}}) {
    auto rs = RootSystem::build(t);
    WeylGroup W(rs);
    const auto all = W.elements();
    for (std::uint32_t m = 0; m < (1u << t.rank); ++m) {
      ParabolicSubset P(t.rank, m);
      auto reps = W.min_coset_reps(P);
      auto wp = W.lower_interval(W.longest_element(P));
      CHECK(reps.size() * wp.size() == all.size());
      for (const auto& w : all) {
        auto lo = W.min_coset_rep(w, P);
        auto hi = W.max_coset_rep(w, P);
        CHECK(W.is_min_coset_rep(lo, P));
        CHECK(W.min_coset_rep(hi, P) == lo);
        CHECK(W.bruhat_leq(lo, w));
        CHECK(W.bruhat_leq(w, hi));
        if (W.is_min_coset_rep(w, P)) CHECK(lo == w);
      }
    }
  }
}

TEST_CASE("lower intervals") {
  auto rs = RootSystem::build({Family::A, 3});
  WeylGroup W(rs);
  CHECK(W.lower_interval(W.identity()).size() == 1);
  auto iv = W.lower_interval(W.from_word({1, 3, 2}));
  CHECK(iv.size() == 8);
  std::set<std::string> words;
  for (const auto& x : iv) words.insert(W.word_string(x));
  CHECK(words == std::set<std::string>{"e", "s1", "s2", "s3", "s1s3", "s1s2", "s3s2", "s1s3s2"});
  auto w0 = W.longest_element(ParabolicSubset::from_levi(3, {1, 2, 3}));
  CHECK(W.lower_interval(w0).size() == 24);
  CHECK_THROWS_AS(W.lower_interval(w0, 5), Error);
}

TEST_CASE("interval minimal representatives match filtering the full interval") {
  auto rs = RootSystem::build({Family::A, 4});
  WeylGroup W(rs);
  for (const auto& w : W.elements())
    for (std::uint32_t m : {0u, 1u, 5u, 6u, 13u}) {
      ParabolicSubset P(4, m);
      std::vector<WeylElement> expect;
      for (const auto& v : oracle::subword_products(W, W.reduced_word(w)))
        if (W.is_min_coset_rep(v, P)) expect.push_back(v);
      std::sort(expect.begin(), expect.end());
      CHECK(W.interval_min_reps(w, P) == expect);
    }
}

TEST_CASE("reflections from roots") {
  auto rs = RootSystem::build({Family::A, 3});
  WeylGroup W(rs);
  CHECK(W.reflection_from_root(Root::simple(3, 2)) == W.simple_reflection(2));
  auto r = W.reflection_from_root(Root{1, 1, 1});
  CHECK(r.length() == 5);
  CHECK(W.multiply(r, r).is_identity());
}

TEST_CASE("parabolic subsets") {
  auto P = ParabolicSubset::maximal(5, 3);
  CHECK(P.levi() == std::vector<int>{1, 2, 4, 5});
  CHECK(P.omitted() == std::vector<int>{3});
  CHECK(P.is_maximal());
  CHECK(P.contains_root(Root{1, 1, 0, 0, 0}));
  CHECK_FALSE(P.contains_root(Root{0, 1, 1, 0, 0}));
  CHECK(ParabolicSubset::from_levi(3, {1, 3}) == ParabolicSubset(3, 0b101));
}

TEST_CASE("index list parsing") {
  CHECK(parse_index_list("1,3,2") == std::vector<int>{1, 3, 2});
  CHECK(parse_index_list("1 3 2") == std::vector<int>{1, 3, 2});
  CHECK(parse_index_list("").empty());
  CHECK(parse_index_list("e").empty());
  CHECK_THROWS_AS(parse_index_list("1,x"), Error);
}
