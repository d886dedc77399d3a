#include "nash/zelevinsky.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "nash/error.hpp"
#include "nash/peterson.hpp"

namespace nash {

namespace {

std::uint32_t prefix_mask(int p) { return p >= 32 ? ~0u : ((1u << p) - 1u); }

std::shared_ptr<const RootSystem> type_a(int n) {
  if (n < 2) throw Error("permutations need n >= 2");
  return std::make_shared<const RootSystem>(RootSystem::build({Family::A, n - 1}));
}

bool sortable(const std::vector<CoessBox>& boxes) {
  for (std::size_t i = 1; i < boxes.size(); ++i) {
    if (boxes[i].p < boxes[i - 1].p || boxes[i].q < boxes[i - 1].q) return false;
  }
  return true;
}

std::size_t step_slot(const CovexillaryDatum& d, int q) {
  const auto& steps = d.flag_steps();
  auto it = std::lower_bound(steps.begin(), steps.end(), q);
  if (it == steps.end() || *it != q) throw InvariantViolation("coessential box column " + std::to_string(q) + " is not a flag step");
  return static_cast<std::size_t>(it - steps.begin());
}

void require_point(const CoordFlag& flag, const CovexillaryDatum& d) {
  if (flag.sets.size() != d.flag_steps().size()) throw Error("flag has the wrong number of steps");
  for (std::size_t i = 0; i < flag.sets.size(); ++i) {
    if (std::popcount(flag.sets[i]) != d.flag_steps()[i] || (i > 0 && (flag.sets[i - 1] & ~flag.sets[i]) != 0)) {
      throw Error("not a coordinate flag of the right shape");
    }
  }
  for (const CoessBox& b : d.boxes()) {
    if (std::popcount(flag.sets[step_slot(d, b.q)] & prefix_mask(b.p)) < b.r) {
      throw Error("flag is not a point of the Schubert variety");
    }
  }
}

}  // namespace

CovexillaryDatum::CovexillaryDatum(Permutation max_rep, ParabolicSubset P, std::vector<CoessBox> boxes)
    : max_rep_(std::move(max_rep)), P_(P), steps_(P.omitted()), boxes_(std::move(boxes)), rs_(type_a(max_rep_.size())) {
  min_rep_ = nash::min_coset_rep(max_rep_, P_);
  if (nash::max_coset_rep(max_rep_, P_) != max_rep_) throw Error(max_rep_.to_string() + " is not a maximal coset representative");
  if (!sortable(boxes_)) throw Error("coessential boxes cannot be sorted in both coordinates");
  for (const CoessBox& b : boxes_) step_slot(*this, b.q);
}

CovexillaryDatum CovexillaryDatum::from_covexillary(const Permutation& w) {
  if (!is_covexillary(w)) throw Error(w.to_string() + " is not covexillary");
  auto boxes = coessential_set(w);
  std::sort(boxes.begin(), boxes.end(), [](const CoessBox& a, const CoessBox& b) {
    return std::tie(a.p, a.q, a.r) < std::tie(b.p, b.q, b.r);
  });
  return {w, ParabolicSubset::from_levi(w.size() - 1, w.descents()), std::move(boxes)};
}

CovexillaryDatum CovexillaryDatum::from_grassmannian(const Permutation& w, int k) {
  const int n = w.size();
  if (k < 1 || k >= n || !w.is_grassmannian(k)) throw Error(w.to_string() + " is not Grassmannian with descent at " + std::to_string(k));
  const ParabolicSubset P = grassmannian_parabolic(k, n);
  const Permutation v = nash::max_coset_rep(w, P);
  auto boxes = coessential_set(v);
  std::sort(boxes.begin(), boxes.end());
  return {v, P, std::move(boxes)};
}

CovexillaryDatum CovexillaryDatum::with_boxes(std::vector<CoessBox> boxes) const {
  std::sort(boxes.begin(), boxes.end());
  if (boxes != boxes_) throw Error("with_boxes expects a reordering of the same boxes");
  CovexillaryDatum d = *this;
  d.boxes_ = std::move(boxes);
  return d;
}

CoordFlag flag_of(const Permutation& v, const CovexillaryDatum& d) {
  CoordFlag f;
  for (int q : d.flag_steps()) {
    std::uint32_t mask = 0;
    for (int j = 1; j <= q; ++j) mask |= 1u << (v(j) - 1);
    f.sets.push_back(mask);
  }
  return f;
}

std::vector<FixedPoint> schubert_fixed_points(const CovexillaryDatum& d) {
  const WeylGroup W = d.group();
  std::vector<FixedPoint> out;
  for (const WeylElement& v : W.interval_min_reps(perm_to_weyl(W, d.max_rep()), d.parabolic())) {
    Permutation pv = weyl_to_perm(v);
    CoordFlag f = flag_of(pv, d);
    out.push_back({std::move(pv), std::move(f)});
  }
  std::sort(out.begin(), out.end(), [](const FixedPoint& a, const FixedPoint& b) { return a.flag < b.flag; });
  return out;
}

std::vector<CoordFlag> schubert_fixed_flags(const CovexillaryDatum& d) {
  std::vector<CoordFlag> out;
  for (auto& fp : schubert_fixed_points(d)) out.push_back(std::move(fp.flag));
  return out;
}

std::uint64_t count_subset_chains(const std::vector<std::uint32_t>& bounds, const std::vector<int>& sizes) {
  if (bounds.size() != sizes.size()) throw Error("bounds and sizes differ in length");
  // ways[X] = number of admissible chains ending in X at the current step.
  std::map<std::uint32_t, std::uint64_t> ways{{0u, 1u}};
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    std::map<std::uint32_t, std::uint64_t> next;
    for (const auto& [prev, count] : ways) {
      if ((prev & ~bounds[i]) != 0) continue;
      const int need = sizes[i] - std::popcount(prev);
      if (need < 0) continue;
      const std::uint32_t free = bounds[i] & ~prev;
      // Every submask of `free` with `need` bits.
      for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
        if (std::popcount(sub) == need) next[prev | sub] += count;
        if (sub == 0) break;
      }
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& [mask, count] : ways) total += count;
  return total;
}

std::uint64_t z_fiber_count(const CoordFlag& flag, const CovexillaryDatum& d) {
  require_point(flag, d);
  std::vector<std::uint32_t> bounds;
  std::vector<int> sizes;
  for (const CoessBox& b : d.boxes()) {
    bounds.push_back(prefix_mask(b.p) & flag.sets[step_slot(d, b.q)]);
    sizes.push_back(b.r);
  }
  return count_subset_chains(bounds, sizes);
}

std::uint64_t zdual_fiber_count(const CoordFlag& flag, const CovexillaryDatum& d) {
  require_point(flag, d);
  // T_i ⊇ E_p ∪ S_q with |T_i| = q + p - r; count the complements as an increasing chain.
  const std::uint32_t all = prefix_mask(d.n());
  std::vector<std::uint32_t> bounds;
  std::vector<int> sizes;
  const auto& boxes = d.boxes();
  for (auto it = boxes.rbegin(); it != boxes.rend(); ++it) {
    bounds.push_back(all & ~(prefix_mask(it->p) | flag.sets[step_slot(d, it->q)]));
    sizes.push_back(d.n() - (it->q + it->p - it->r));
  }
  return count_subset_chains(bounds, sizes);
}

std::uint64_t fiberproduct_count(const CoordFlag& flag, const CovexillaryDatum& d) {
  return z_fiber_count(flag, d) * zdual_fiber_count(flag, d);
}

ConjectureReport conjecture_check(const CovexillaryDatum& d) {
  ConjectureReport rep;
  rep.w = d.max_rep();
  rep.covexillary = true;
  rep.seed = d.min_rep();
  rep.levi = d.parabolic().levi();
  rep.boxes = d.boxes();

  const WeylGroup W = d.group();
  const TranslationGraph graph = eventual_translates(W, perm_to_weyl(W, d.min_rep()), d.parabolic());
  std::map<Permutation, std::uint64_t> per_point;
  for (const auto& s : graph.nodes) ++per_point[weyl_to_perm(s.z)];

  for (auto& fp : schubert_fixed_points(d)) {
    ConjecturePoint pt;
    pt.z_count = z_fiber_count(fp.flag, d);
    pt.zdual_count = zdual_fiber_count(fp.flag, d);
    pt.product = pt.z_count * pt.zdual_count;
    auto it = per_point.find(fp.v);
    pt.peterson_count = it == per_point.end() ? 0 : it->second;
    pt.match = pt.product == pt.peterson_count;
    if (!pt.match) ++rep.mismatches;
    pt.v = std::move(fp.v);
    pt.flag = std::move(fp.flag);
    rep.points.push_back(std::move(pt));
  }
  // Translates sitting over a point outside the variety would also contradict the count.
  for (const auto& [v, count] : per_point) {
    const bool known = std::any_of(rep.points.begin(), rep.points.end(), [&](const auto& pt) { return pt.v == v; });
    if (known) continue;
    ConjecturePoint pt;
    pt.v = v;
    pt.flag = flag_of(v, d);
    pt.peterson_count = count;
    rep.points.push_back(std::move(pt));
    ++rep.mismatches;
  }
  rep.verdict = rep.mismatches == 0 ? "pass" : "counterexample";
  return rep;
}

ConjectureReport conjecture_check(const Permutation& w) { return conjecture_check(CovexillaryDatum::from_covexillary(w)); }

std::vector<Permutation> covexillary_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p(v);
    if (is_covexillary(p)) out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace nash
