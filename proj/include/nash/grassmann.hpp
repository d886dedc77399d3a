#pragma once

// Type A specialisation. Permutations are in 1-indexed one-line notation;
// s_i swaps i and i+1 and acts on roots by w(e_i - e_j) = e_{w(i)} - e_{w(j)}.
// A parabolic of S_n is a ParabolicSubset of rank n-1.

#include <compare>
#include <string>
#include <vector>

#include "nash/weyl.hpp"

namespace nash {

class Permutation {
 public:
  Permutation() = default;
  // Throws nash::Error unless oneline is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> oneline);

  static Permutation identity(int n);
  // "2,5,7,1,3,4,6,8", "2 5 7 1", or "25713468" (bare digits only when n <= 9).
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(oneline_.size()); }
  int operator()(int i) const { return oneline_[i - 1]; }
  const std::vector<int>& oneline() const { return oneline_; }

  Permutation inverse() const;
  // (u * v)(i) = u(v(i))
  friend Permutation operator*(const Permutation& u, const Permutation& v);

  std::vector<int> descents() const;
  bool is_grassmannian(int k) const;  // no descent outside position k
  bool is_identity() const;
  int length() const;
  std::string to_string() const;  // "2,5,7,1,3,4,6,8"

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> oneline_;
};

// One essential rank condition dim(E_p cap F_q) >= r.
struct CoessBox {
  int p = 0;
  int q = 0;
  int r = 0;
  auto operator<=>(const CoessBox&) const = default;
};

struct PartitionShape {
  std::vector<int> parts;  // weakly decreasing, length k
  auto operator<=>(const PartitionShape&) const = default;
};

// W must be of type A_{n-1}.
WeylElement perm_to_weyl(const WeylGroup& W, const Permutation& p);
Permutation weyl_to_perm(const WeylElement& w);

// r_{i,q}(w) = #{j <= q : w(j) <= i}
int rank_number(const Permutation& w, int i, int q);
std::vector<CoessBox> coessential_set(const Permutation& w);

Permutation min_coset_rep(const Permutation& w, const ParabolicSubset& P);
Permutation max_coset_rep(const Permutation& w, const ParabolicSubset& P);
ParabolicSubset grassmannian_parabolic(int k, int n);
// All Grassmannian permutations with descent at k (identity included), sorted.
std::vector<Permutation> grassmannian_permutations(int k, int n);

PartitionShape partition_of(const Permutation& w, int k, int n);
std::vector<int> inner_corners(const PartitionShape& lambda, int k, int n);
// Corner c gives the box (k - c + lambda_{c+1}, k) of rank k - c.
std::vector<CoessBox> corner_boxes(const PartitionShape& lambda, int k, int n);

// {j != k : w(j+1) = w(j) + 1}
std::vector<int> grassmannian_delta_w(const Permutation& w, int k);

// Coess(v_Q(w)) = A cup B in the indexed form; throws nash::Error for the identity.
std::vector<CoessBox> coess_nash_formula(const Permutation& w, int k, int n);

bool defined_by_inclusions(const Permutation& w);
bool is_covexillary(const Permutation& w);
std::vector<CoessBox> inclusion_boxes(const Permutation& w);

struct SmoothnessVerdict {
  int non_inclusion_boxes = 0;
  bool by_count = false;  // at most one non-inclusion box in Coess(v_P(w))
  bool by_gr = false;     // v_Q(w) defined by inclusions and covexillary
  bool smooth = false;
};

SmoothnessVerdict nash_smoothness(const Permutation& w, int k, int n);
// Throws InvariantViolation if the two routes disagree.
bool nash_blowup_smooth(const Permutation& w, int k, int n);

// F_lower ⊆ E_p ⊆ F_upper
struct ChainCondition {
  int lower = 0;
  int p = 0;
  int upper = 0;
  bool lower_essential = true;  // F_lower ⊆ E_p is a coessential condition of v_Q(w)
  bool upper_essential = true;  // E_p ⊆ F_upper likewise
  std::string text() const;
};

struct ConfigDescription {
  int k = 0;
  int n = 0;
  Permutation w;
  PartitionShape lambda;
  std::vector<int> corners;
  std::vector<CoessBox> coess;          // Coess(v_P(w))
  std::vector<int> delta_w;
  std::vector<int> flag_steps;          // G/Q = Fl(flag_steps)
  std::vector<ChainCondition> conditions;
  bool top_degenerate = false;          // w(k) < n
  bool bottom_degenerate = false;       // w(k+1) > 1
  SmoothnessVerdict smoothness;
};

ConfigDescription config_description(const Permutation& w, int k, int n);

}  // namespace nash
