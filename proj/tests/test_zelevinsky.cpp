#include <doctest.h>

#include "nash/error.hpp"
#include "nash/nashcore.hpp"
#include "nash/peterson.hpp"
#include "nash/zelevinsky.hpp"
#include "oracles.hpp"

#include <map>

using namespace nash;

namespace {

std::uint64_t brute_z(const CoordFlag& f, const CovexillaryDatum& d) {
  std::vector<std::uint32_t> bounds;
  std::vector<int> sizes;
  for (std::size_t i = 0; i < d.boxes().size(); ++i) {
    const auto& b = d.boxes()[i];
    auto slot = std::find(d.flag_steps().begin(), d.flag_steps().end(), b.q) - d.flag_steps().begin();
    bounds.push_back(oracle::prefix(b.p) & f.sets[slot]);
    sizes.push_back(b.r);
  }
  return oracle::enumerate_chains(d.n(), bounds, sizes);
}

// Chains T_1 ⊆ ... ⊆ T_m with T_i ⊇ E_p ∪ S_q, enumerated directly.
std::uint64_t brute_zdual(const CoordFlag& f, const CovexillaryDatum& d) {
  const int n = d.n();
  std::uint64_t count = 0;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t prev) {
    if (i == d.boxes().size()) {
      ++count;
      return;
    }
    const auto& b = d.boxes()[i];
    auto slot = std::find(d.flag_steps().begin(), d.flag_steps().end(), b.q) - d.flag_steps().begin();
    const std::uint32_t must = oracle::prefix(b.p) | f.sets[slot];
    for (auto s : oracle::subsets_of_size(n, b.q + b.p - b.r))
      if ((s & must) == must && (s & prev) == prev) rec(i + 1, s);
  };
  rec(0, 0);
  return count;
}

}  // namespace

TEST_CASE("subset chain counting against explicit enumeration") {
  CHECK(count_subset_chains({}, {}) == 1);  // m = 0
  CHECK(count_subset_chains({0b0011}, {1}) == 2);
  CHECK(count_subset_chains({0b0011, 0b0111}, {1, 2}) == 4);
  CHECK(count_subset_chains({0b0111, 0b0011}, {2, 1}) == 0);  // not a chain of increasing subsets
  CHECK_THROWS_AS(count_subset_chains({1}, {}), Error);
  std::vector<std::vector<std::uint32_t>> bounds{{0x3F}, {0x0F, 0x3F}, {0x07, 0x1F, 0x3F}, {0x0C, 0x3C, 0x3E}};
  std::vector<std::vector<int>> sizes{{3}, {2, 4}, {1, 2, 5}, {1, 3, 4}};
  for (std::size_t i = 0; i < bounds.size(); ++i)
    CHECK(count_subset_chains(bounds[i], sizes[i]) == oracle::enumerate_chains(6, bounds[i], sizes[i]));
}

TEST_CASE("Gr(3,8) example: fixed flags are the rank-filtered 3-subsets") {
  auto w = Permutation::parse("2,5,7,1,3,4,6,8");
  auto d = CovexillaryDatum::from_grassmannian(w, 3);
  CHECK(d.boxes() == std::vector<CoessBox>{{2, 3, 1}, {5, 3, 2}, {7, 3, 3}});
  std::vector<CoordFlag> expect;
  for (auto s : oracle::subsets_of_size(8, 3)) {
    bool ok = true;
    for (const auto& b : d.boxes()) ok = ok && __builtin_popcount(s & oracle::prefix(b.p)) >= b.r;
    if (ok) expect.push_back({{s}});
  }
  std::sort(expect.begin(), expect.end());
  auto flags = schubert_fixed_flags(d);
  CHECK(flags == expect);
  auto W = d.group();
  CHECK(flags.size() == W.interval_min_reps(perm_to_weyl(W, d.max_rep()), d.parabolic()).size());
}

TEST_CASE("single-point varieties and the identity") {
  auto d = CovexillaryDatum::from_covexillary(Permutation::identity(4));
  CHECK(d.boxes() == std::vector<CoessBox>{{1, 1, 1}, {2, 2, 2}, {3, 3, 3}});
  CHECK(d.parabolic().levi().empty());
  auto flags = schubert_fixed_flags(d);
  CHECK(flags.size() == 1);
  CHECK(z_fiber_count(flags[0], d) == 1);
  CHECK(zdual_fiber_count(flags[0], d) == 1);
  auto rep = conjecture_check(Permutation::identity(4));
  CHECK(rep.mismatches == 0);
  CHECK(rep.verdict == "pass");
}

TEST_CASE("Gr(2,4) singular point against brute force") {
  auto w = Permutation::parse("2,4,1,3");
  auto d = CovexillaryDatum::from_grassmannian(w, 2);
  for (const auto& f : schubert_fixed_flags(d)) {
    CHECK(z_fiber_count(f, d) == brute_z(f, d));
    CHECK(zdual_fiber_count(f, d) == brute_zdual(f, d));
  }
  // the most singular point {1,2}
  CoordFlag e{{0b0011}};
  CHECK(fiberproduct_count(e, d) == 4);
  CHECK_THROWS_AS(z_fiber_count(CoordFlag{{0b1100}}, d), Error);
}

TEST_CASE("Z and Z' counts: brute force, positivity, order independence, generic point") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : covexillary_permutations(n)) {
      CAPTURE(w.to_string());
      auto d = CovexillaryDatum::from_covexillary(w);
      auto rev = d.boxes();
      std::reverse(rev.begin(), rev.end());
      auto d2 = d.with_boxes(rev);
      auto top = flag_of(d.min_rep(), d);
      CHECK(fiberproduct_count(top, d) == 1);
      for (const auto& f : schubert_fixed_flags(d)) {
        auto z = z_fiber_count(f, d);
        auto zd = zdual_fiber_count(f, d);
        CHECK(z >= 1);
        CHECK(zd >= 1);
        CHECK(z == brute_z(f, d));
        CHECK(zd == brute_zdual(f, d));
        CHECK(fiberproduct_count(f, d2) == z * zd);
      }
    }
}

TEST_CASE("covexillary data") {
  auto d = CovexillaryDatum::from_covexillary(Permutation::parse("5,2,3,4,1"));
  CHECK(d.parabolic().levi() == std::vector<int>{1, 4});
  CHECK(d.flag_steps() == std::vector<int>{2, 3});
  CHECK(d.min_rep() == Permutation::parse("2,5,3,1,4"));
  CHECK(d.boxes() == std::vector<CoessBox>{{2, 2, 1}, {3, 3, 2}});
  for (std::size_t i = 1; i < d.boxes().size(); ++i) {
    CHECK(d.boxes()[i - 1].p <= d.boxes()[i].p);
    CHECK(d.boxes()[i - 1].q <= d.boxes()[i].q);
  }
  CHECK_THROWS_AS(CovexillaryDatum::from_covexillary(Permutation::parse("3,4,1,2")), Error);
  CHECK(covexillary_permutations(4).size() == 23);
  CHECK(covexillary_permutations(5).size() == 103);
}

TEST_CASE("Grassmannian data: fiber product = Nash fiber = Peterson count") {
  for (int n = 2; n <= 6; ++n) {
    auto rs = RootSystem::build({Family::A, n - 1});
    WeylGroup W(rs);
    for (int k = 1; k < n; ++k)
      for (const auto& w : grassmannian_permutations(k, n)) {
        CAPTURE(w.to_string());
        auto P = grassmannian_parabolic(k, n);
        auto we = perm_to_weyl(W, w);
        SchubertDatum sd(W, P, we);
        auto g = eventual_translates(W, we, P);
        auto d = CovexillaryDatum::from_grassmannian(w, k);
        std::uint64_t total = 0;
        for (const auto& fp : schubert_fixed_points(d)) {
          auto v = perm_to_weyl(W, fp.v);
          auto prod = fiberproduct_count(fp.flag, d);
          CHECK(prod == nash_fiber(v, sd).size());
          CHECK(prod == g.count_at(v));
          total += prod;
        }
        CHECK(total == nash_fixed_points(sd).size());
      }
  }
}

TEST_CASE("conjecture reports for Grassmannian permutations pass") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for (const auto& w : grassmannian_permutations(k, n)) {
        auto rep = conjecture_check(CovexillaryDatum::from_grassmannian(w, k));
        CHECK(rep.mismatches == 0);
      }
}

TEST_CASE("conjecture report for 5,2,3,4,1 records the disagreement over e") {
  // Fiber product 4 x 4 over the coordinate flag E_2 < E_3, against 8 translates.
  auto rep = conjecture_check(Permutation::parse("5,2,3,4,1"));
  REQUIRE(!rep.points.empty());
  const auto& e = rep.points.front();
  CHECK(e.v.is_identity());
  CHECK(e.z_count == 4);
  CHECK(e.zdual_count == 4);
  CHECK(e.peterson_count == 8);
  CHECK_FALSE(e.match);
  CHECK(rep.mismatches == 1);
  CHECK(rep.verdict == "counterexample");
  CHECK(rep.seed == Permutation::parse("2,5,3,1,4"));
}

TEST_CASE("conjecture_check rejects non-covexillary input") {
  CHECK_THROWS_AS(conjecture_check(Permutation::parse("3,4,1,2")), Error);
}

TEST_CASE("translate counts see exactly the singular locus (Carrell-Peterson reflection count)") {
  // X_w is smooth at u iff every x in [u, w] has #{reflections t : tx <= w} = l(w)
  // (type A: rational smoothness = smoothness); the Nash blow-up is an isomorphism there.
  for (int n = 3; n <= 5; ++n) {
    auto rs = RootSystem::build({Family::A, n - 1});
    WeylGroup W(rs);
    std::vector<WeylElement> refl;
    for (const auto& a : rs.positive_roots()) refl.push_back(W.reflection_from_root(a));
    for (const auto& p : covexillary_permutations(n)) {
      CAPTURE(p.to_string());
      auto d = CovexillaryDatum::from_covexillary(p);
      auto w = perm_to_weyl(W, d.max_rep());
      auto iv = oracle::subword_products(W, W.reduced_word(w));
      std::map<WeylElement, bool> full_rank;
      for (const auto& x : iv) {
        int c = 0;
        for (const auto& t : refl) c += iv.count(W.multiply(t, x)) > 0;
        full_rank[x] = c == w.length();
      }
      auto g = eventual_translates(W, perm_to_weyl(W, d.min_rep()), d.parabolic());
      for (const auto& fp : schubert_fixed_points(d)) {
        auto v = perm_to_weyl(W, fp.v);
        bool smooth = true;
        for (const auto& x : iv)
          if (W.bruhat_leq(v, x) && !full_rank[x]) smooth = false;
        CHECK((g.count_at(v) == 1) == smooth);
        if (smooth) CHECK(fiberproduct_count(fp.flag, d) == 1);
      }
    }
  }
}
