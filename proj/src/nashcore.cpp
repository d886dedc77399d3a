#include "nash/nashcore.hpp"

#include <algorithm>
#include <set>

#include "nash/error.hpp"

namespace nash {

SchubertDatum::SchubertDatum(const WeylGroup& group, ParabolicSubset P, WeylElement w)
    : group_(&group), P_(P), w_(std::move(w)) {
  const RootSystem& rs = group.root_system();
  if (P_.rank() != rs.rank() || w_.rank() != rs.rank()) throw Error("parabolic/element rank does not match the root system");
  const auto omitted = P_.omitted();
  if (omitted.size() != 1) {
    throw Error("parabolic must be maximal (Levi omits exactly one simple root); it omits " +
                std::to_string(omitted.size()));
  }
  omitted_ = omitted.front();
  const auto comin = rs.cominuscule_simples();
  if (std::find(comin.begin(), comin.end(), omitted_) == comin.end()) {
    throw Error("parabolic is not cominuscule: alpha_" + std::to_string(omitted_) + " has coefficient " +
                std::to_string(rs.highest_root()[omitted_ - 1]) + " in the highest root " +
                rs.highest_root().to_string() + " of " + rs.cartan_type().name());
  }
  if (!group.is_min_coset_rep(w_, P_)) {
    throw Error(group.word_string(w_) + " is not a minimal coset representative for the Levi set");
  }
}

std::vector<int> delta_w(const SchubertDatum& d) {
  std::vector<int> out;
  for (int i : d.parabolic().levi()) {
    const Root img = d.element().image(i);
    if (img.is_positive() && img.height() == 1) out.push_back(i);
  }
  return out;
}

ParabolicSubset nash_parabolic(const SchubertDatum& d) { return ParabolicSubset::from_levi(d.root_system().rank(), delta_w(d)); }

std::vector<Root> nash_E(const SchubertDatum& d) {
  const WeylGroup& W = d.group();
  const WeylElement winv = W.inverse(d.element());
  std::vector<Root> out;
  for (const Root& a : W.left_inversions(d.element())) out.push_back(winv.apply(a));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Root> tangent_weights(const SchubertDatum& d) {
  std::vector<Root> out;
  for (const Root& a : d.root_system().positive_roots()) {
    if (d.parabolic().contains_root(a)) continue;
    if (d.element().apply(a).is_negative()) out.push_back(-a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylElement> nash_fixed_points(const SchubertDatum& d) {
  return d.group().interval_min_reps(d.element(), nash_parabolic(d));
}

std::vector<WeylElement> nash_fiber(const WeylElement& v, const SchubertDatum& d) {
  const WeylGroup& W = d.group();
  const ParabolicSubset& P = d.parabolic();
  if (!W.is_min_coset_rep(v, P) || !W.bruhat_leq(v, d.element())) {
    throw Error(W.word_string(v) + " is not a torus-fixed point of the Schubert variety (need v in W^P and v <= w)");
  }
  const ParabolicSubset Q = nash_parabolic(d);
  const auto levi = P.levi();

  // Breadth-first search over u in W_P cap W^Q, growing u on the left. Both
  // constraints are inherited by left factors, so pruning is exact.
  std::set<WeylElement> found{W.identity()};
  std::vector<WeylElement> frontier{W.identity()};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& u : frontier) {
      for (int i : levi) {
        WeylElement x = W.left_multiply(i, u);
        if (x.length() <= u.length() || !W.is_min_coset_rep(x, Q)) continue;
        if (found.contains(x)) continue;
        if (!W.bruhat_leq(W.multiply(v, x), d.element())) continue;
        found.insert(x);
        next.push_back(std::move(x));
      }
    }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  out.reserve(found.size());
  for (const WeylElement& u : found) out.push_back(W.multiply(v, u));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_smooth_point(const WeylElement& v, const SchubertDatum& d) { return nash_fiber(v, d).size() == 1; }

std::vector<WeylElement> singular_fixed_points(const SchubertDatum& d) {
  std::vector<WeylElement> out;
  for (const WeylElement& v : d.group().interval_min_reps(d.element(), d.parabolic())) {
    if (!is_smooth_point(v, d)) out.push_back(v);
  }
  return out;
}

NashData nash_data(const SchubertDatum& d) {
  NashData data;
  data.delta_w = delta_w(d);
  data.Q = ParabolicSubset::from_levi(d.root_system().rank(), data.delta_w);
  data.fixed_points = nash_fixed_points(d);
  data.E = nash_E(d);
  data.tangent_weights = tangent_weights(d);
  for (const WeylElement& v : d.group().interval_min_reps(d.element(), d.parabolic())) {
    FiberInfo f{v, nash_fiber(v, d), false};
    f.smooth = f.points.size() == 1;
    data.fibers.push_back(std::move(f));
  }
  return data;
}

}  // namespace nash
