#pragma once

// Combinatorics of the Nash blow-up of a cominuscule Schubert variety X_w^P.
//
// The blow-up is again a Schubert variety X_w^Q, where Q is the standard parabolic
// generated by Delta_w = {i in Levi(P) : w(alpha_i) is simple}. Its torus-fixed
// points are {z in W^Q : z <= w}, and the fiber over vP is {vu : u in W_P cap W^Q, vu <= w}.

#include <vector>

#include "nash/weyl.hpp"

namespace nash {

// A validated triple (root system, cominuscule maximal P, w in W^P).
class SchubertDatum {
 public:
  // Throws nash::Error naming the offending simple root when P is not
  // cominuscule, or when w is not a minimal coset representative.
  SchubertDatum(const WeylGroup& group, ParabolicSubset P, WeylElement w);

  const WeylGroup& group() const { return *group_; }
  const RootSystem& root_system() const { return group_->root_system(); }
  const ParabolicSubset& parabolic() const { return P_; }
  const WeylElement& element() const { return w_; }
  int cominuscule_index() const { return omitted_; }

 private:
  const WeylGroup* group_;
  ParabolicSubset P_;
  WeylElement w_;
  int omitted_ = 0;
};

struct FiberInfo {
  WeylElement v;
  std::vector<WeylElement> points;
  bool smooth = false;
};

struct NashData {
  std::vector<int> delta_w;
  ParabolicSubset Q;
  std::vector<WeylElement> fixed_points;
  std::vector<Root> E;                // w^{-1}(LInv(w))
  std::vector<Root> tangent_weights;  // {-a : a in (R^+ \ R_L^+) cap w^{-1}(R^-)}
  std::vector<FiberInfo> fibers;      // one per v in W^P cap [e, w]
};

std::vector<int> delta_w(const SchubertDatum& d);
ParabolicSubset nash_parabolic(const SchubertDatum& d);
std::vector<Root> nash_E(const SchubertDatum& d);
std::vector<Root> tangent_weights(const SchubertDatum& d);

std::vector<WeylElement> nash_fixed_points(const SchubertDatum& d);
// Requires v in W^P cap [e, w]; throws nash::Error otherwise.
std::vector<WeylElement> nash_fiber(const WeylElement& v, const SchubertDatum& d);
bool is_smooth_point(const WeylElement& v, const SchubertDatum& d);
std::vector<WeylElement> singular_fixed_points(const SchubertDatum& d);

NashData nash_data(const SchubertDatum& d);

}  // namespace nash
