#pragma once

// Torus-fixed-point counts for the Cortez-Zelevinsky resolution Z_w, its dual Z'_w,
// and their fiber product over a covexillary Schubert variety X_w^P.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nash/grassmann.hpp"
#include "nash/rootsystem.hpp"
#include "nash/weyl.hpp"

namespace nash {

// A torus-fixed partial flag: one coordinate subset (bit i-1 <-> e_i) per flag step.
struct CoordFlag {
  std::vector<std::uint32_t> sets;
  auto operator<=>(const CoordFlag&) const = default;
};

class CovexillaryDatum {
 public:
  // P is the largest parabolic with w a maximal coset representative, i.e. Levi = descents of w.
  // Throws nash::Error if w is not covexillary.
  static CovexillaryDatum from_covexillary(const Permutation& w);
  // The Grassmannian Schubert variety of a w with descent at k: P maximal, boxes Coess(v_P(w)).
  static CovexillaryDatum from_grassmannian(const Permutation& w, int k);

  int n() const { return max_rep_.size(); }
  const Permutation& max_rep() const { return max_rep_; }
  const Permutation& min_rep() const { return min_rep_; }
  const ParabolicSubset& parabolic() const { return P_; }
  const std::vector<int>& flag_steps() const { return steps_; }
  // Sorted with p and q both weakly increasing.
  const std::vector<CoessBox>& boxes() const { return boxes_; }

  const RootSystem& root_system() const { return *rs_; }
  WeylGroup group() const { return WeylGroup(*rs_); }

  // Replace the box order (counts must not depend on it).
  CovexillaryDatum with_boxes(std::vector<CoessBox> boxes) const;

 private:
  CovexillaryDatum(Permutation max_rep, ParabolicSubset P, std::vector<CoessBox> boxes);

  Permutation max_rep_;
  Permutation min_rep_;
  ParabolicSubset P_;
  std::vector<int> steps_;
  std::vector<CoessBox> boxes_;
  std::shared_ptr<const RootSystem> rs_;
};

struct FixedPoint {
  Permutation v;  // minimal coset representative
  CoordFlag flag;
};

std::vector<FixedPoint> schubert_fixed_points(const CovexillaryDatum& d);
std::vector<CoordFlag> schubert_fixed_flags(const CovexillaryDatum& d);
CoordFlag flag_of(const Permutation& v, const CovexillaryDatum& d);

// Chains X_1 ⊆ ... ⊆ X_m of subsets with |X_i| = sizes[i] and X_i ⊆ bounds[i].
std::uint64_t count_subset_chains(const std::vector<std::uint32_t>& bounds, const std::vector<int>& sizes);

std::uint64_t z_fiber_count(const CoordFlag& flag, const CovexillaryDatum& d);
std::uint64_t zdual_fiber_count(const CoordFlag& flag, const CovexillaryDatum& d);
std::uint64_t fiberproduct_count(const CoordFlag& flag, const CovexillaryDatum& d);

struct ConjecturePoint {
  Permutation v;
  CoordFlag flag;
  std::uint64_t z_count = 0;
  std::uint64_t zdual_count = 0;
  std::uint64_t product = 0;
  std::uint64_t peterson_count = 0;
  bool match = false;
};

struct ConjectureReport {
  Permutation w;
  bool covexillary = false;
  Permutation seed;  // the minimal representative that seeds Peterson translation
  std::vector<int> levi;
  std::vector<CoessBox> boxes;
  std::vector<ConjecturePoint> points;
  std::size_t mismatches = 0;
  std::string verdict;
};

ConjectureReport conjecture_check(const CovexillaryDatum& d);
// Throws nash::Error if w is not covexillary.
ConjectureReport conjecture_check(const Permutation& w);

std::vector<Permutation> covexillary_permutations(int n);

}  // namespace nash
