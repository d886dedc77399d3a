#include <doctest.h>

#include <set>

#include "nash/error.hpp"
#include "nash/grassmann.hpp"
#include "nash/nashcore.hpp"
#include "oracles.hpp"

using namespace nash;

namespace {

std::set<std::string> words(const WeylGroup& W, const std::vector<WeylElement>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(W.word_string(x));
  return out;
}

}  // namespace

TEST_CASE("A3 example: Q is the Borel and the fiber over e has four points") {
  auto rs = RootSystem::build({Family::A, 3});
  WeylGroup W(rs);
  SchubertDatum d(W, ParabolicSubset::from_levi(3, {1, 3}), W.from_word({1, 3, 2}));
  CHECK(d.cominuscule_index() == 2);
  CHECK(delta_w(d).empty());
  CHECK(nash_parabolic(d).levi().empty());
  auto fps = nash_fixed_points(d);
  CHECK(words(W, fps) == std::set<std::string>{"s1s3s2", "s3s2", "s1s2", "s2", "s1s3", "s3", "s1", "e"});
  CHECK(words(W, nash_fiber(W.identity(), d)) == std::set<std::string>{"e", "s1", "s3", "s1s3"});
  CHECK(nash_fiber(d.element(), d) == std::vector<WeylElement>{d.element()});
  CHECK(is_smooth_point(d.element(), d));
  CHECK_FALSE(is_smooth_point(W.identity(), d));
  CHECK(singular_fixed_points(d) == std::vector<WeylElement>{W.identity()});
  CHECK(nash_E(d).size() == 3);
  CHECK(tangent_weights(d).size() == 3);
}

TEST_CASE("Gr(3,8) example: Delta_w = {alpha_5}") {
  auto rs = RootSystem::build({Family::A, 7});
  WeylGroup W(rs);
  auto w = perm_to_weyl(W, Permutation::parse("2,5,7,1,3,4,6,8"));
  SchubertDatum d(W, ParabolicSubset::maximal(7, 3), w);
  CHECK(delta_w(d) == std::vector<int>{5});
  auto data = nash_data(d);
  std::size_t total = 0;
  for (const auto& f : data.fibers) total += f.points.size();
  CHECK(total == data.fixed_points.size());
  CHECK_FALSE(singular_fixed_points(d).empty());
}

TEST_CASE("identity datum") {
  auto rs = RootSystem::build({Family::D, 4});
  WeylGroup W(rs);
  auto P = ParabolicSubset::maximal(4, 1);
  SchubertDatum d(W, P, W.identity());
  CHECK(delta_w(d) == P.levi());
  CHECK(nash_fixed_points(d) == std::vector<WeylElement>{W.identity()});
  CHECK(singular_fixed_points(d).empty());
}

TEST_CASE("datum validation") {
  auto b3 = RootSystem::build({Family::B, 3});
  WeylGroup W(b3);
  try {
    SchubertDatum d(W, ParabolicSubset::maximal(3, 3), W.identity());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("alpha_3") != std::string::npos);
  }
  CHECK_THROWS_AS(SchubertDatum(W, ParabolicSubset::from_levi(3, {1}), W.identity()), Error);
  auto a3 = RootSystem::build({Family::A, 3});
  WeylGroup A(a3);
  // s2 s1 ends in s1, which lies in the Levi {1,3}
  CHECK_THROWS_AS(SchubertDatum(A, ParabolicSubset::from_levi(3, {1, 3}), A.from_word({2, 1})), Error);
  SchubertDatum ok(A, ParabolicSubset::from_levi(3, {1, 3}), A.from_word({1, 3, 2}));
  CHECK_THROWS_AS(nash_fiber(A.from_word({1}), ok), Error);
}

TEST_CASE("structural properties over every cominuscule datum of small rank") {
  std::vector<CartanType> types{{Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 3},
                                {Family::C, 3}, {Family::D, 4}};
  for (const auto& t : types) {
    auto rs = RootSystem::build(t);
    WeylGroup W(rs);
    const auto all = W.elements();
    for (int c : rs.cominuscule_simples()) {
      auto P = ParabolicSubset::maximal(t.rank, c);
      for (const auto& w : W.min_coset_reps(P)) {
        CAPTURE(t.name());
        CAPTURE(W.word_string(w));
        SchubertDatum d(W, P, w);
        auto dw = delta_w(d);
        for (int i : dw) CHECK(P.contains(i));
        auto Q = nash_parabolic(d);
        CHECK(Q.levi() == dw);
        // fixed points by brute force over the whole group
        std::vector<WeylElement> expect;
        for (const auto& z : all)
          if (W.is_min_coset_rep(z, Q) && W.bruhat_leq(z, w)) expect.push_back(z);
        auto fps = nash_fixed_points(d);
        CHECK(fps == expect);
        auto E = nash_E(d);
        CHECK(static_cast<int>(E.size()) == w.length());
        for (const auto& e : E) CHECK((e.is_negative() && !P.contains_root(e)));
        std::size_t total = 0;
        for (const auto& v : W.interval_min_reps(w, P)) {
          auto f = nash_fiber(v, d);
          total += f.size();
          CHECK(std::find(f.begin(), f.end(), v) != f.end());
          CHECK(is_smooth_point(v, d) == (f.size() == 1));
          for (const auto& x : f) CHECK(W.min_coset_rep(x, P) == v);
        }
        CHECK(total == fps.size());
      }
    }
  }
}
