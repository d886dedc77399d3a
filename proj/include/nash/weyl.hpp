#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nash/rootsystem.hpp"

namespace nash {

// A standard parabolic, identified by its Levi simple indices (1-based).
class ParabolicSubset {
 public:
  ParabolicSubset() = default;
  ParabolicSubset(int rank, std::uint32_t levi_mask);

  static ParabolicSubset from_levi(int rank, const std::vector<int>& levi);
  static ParabolicSubset maximal(int rank, int omitted);
  static ParabolicSubset borel(int rank) { return {rank, 0}; }

  int rank() const { return rank_; }
  std::uint32_t mask() const { return mask_; }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  std::vector<int> levi() const;
  std::vector<int> omitted() const;
  bool is_maximal() const { return omitted().size() == 1; }
  // Whether beta lies in R_L, i.e. its support is inside the Levi set.
  bool contains_root(const Root& beta) const { return (beta.support() & ~mask_) == 0; }

  auto operator<=>(const ParabolicSubset&) const = default;

 private:
  std::uint32_t mask_ = 0;
  int rank_ = 0;
};

// A Weyl group element stored as its action on the root lattice: column j is w(alpha_j).
// Instances are produced by WeylGroup, which also maintains the cached length.
class WeylElement {
 public:
  int rank() const { return rank_; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }
  Root image(int j) const;  // w(alpha_j), j 1-based
  Root apply(const Root& beta) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rank_ == b.rank_ && a.cols_ == b.cols_;
  }
  // Length first, so sorted containers list elements bottom-up.
  friend std::strong_ordering operator<=>(const WeylElement& a, const WeylElement& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.cols_ <=> b.cols_;
  }

  std::size_t hash() const;

 private:
  friend class WeylGroup;
  std::int8_t& at(int row, int col) { return cols_[col * kMaxRank + row]; }
  std::int8_t at(int row, int col) const { return cols_[col * kMaxRank + row]; }

  std::array<std::int8_t, kMaxRank * kMaxRank> cols_{};
  std::uint8_t rank_ = 0;
  std::uint16_t length_ = 0;
};

// Interval enumeration refuses elements longer than this. Default 20, overridable
// through the NASH_MAX_INTERVAL_LENGTH environment variable.
int default_interval_length_limit();

class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  int rank() const { return rs_->rank(); }

  WeylElement identity() const;
  WeylElement simple_reflection(int i) const;
  WeylElement from_word(const std::vector<int>& word) const;
  WeylElement multiply(const WeylElement& u, const WeylElement& v) const;
  WeylElement inverse(const WeylElement& w) const;
  WeylElement right_multiply(const WeylElement& w, int i) const;  // w s_i
  WeylElement left_multiply(int i, const WeylElement& w) const;   // s_i w
  WeylElement reflection_from_root(const Root& alpha) const;

  bool is_right_descent(const WeylElement& w, int i) const { return w.image(i).is_negative(); }
  // Lexicographically first reduced word (1-based letters).
  std::vector<int> reduced_word(const WeylElement& w) const;
  std::string word_string(const WeylElement& w) const;  // "s1s3s2", or "e"

  // LInv(w) = w(R^-) cap R^+, sorted.
  std::vector<Root> left_inversions(const WeylElement& w) const;
  // LInv^P(w) = w(R^- \ R_L^-) cap R^+, sorted.
  std::vector<Root> left_inversions_P(const WeylElement& w, const ParabolicSubset& P) const;

  bool bruhat_leq(WeylElement v, WeylElement w) const;

  bool is_min_coset_rep(const WeylElement& w, const ParabolicSubset& P) const;
  WeylElement min_coset_rep(WeylElement w, const ParabolicSubset& P) const;
  WeylElement max_coset_rep(WeylElement w, const ParabolicSubset& P) const;
  WeylElement longest_element(const ParabolicSubset& P) const;  // w_0 of W_P

  // [e, w] from subwords of one reduced word, sorted. Throws nash::Error when
  // length(w) exceeds max_length.
  std::vector<WeylElement> lower_interval(const WeylElement& w, int max_length = default_interval_length_limit()) const;
  std::vector<WeylElement> interval_min_reps(const WeylElement& w, const ParabolicSubset& P,
                                             int max_length = default_interval_length_limit()) const;

  // Whole group (or W^P) by breadth-first search; throws if more than `limit` elements.
  std::vector<WeylElement> elements(std::size_t limit = 1'000'000) const;
  std::vector<WeylElement> min_coset_reps(const ParabolicSubset& P, std::size_t limit = 1'000'000) const;

 private:
  int compute_length(const WeylElement& w) const;

  const RootSystem* rs_;
};

// "1,3,2", "1 3 2", "" or "e" for the empty word.
std::vector<int> parse_index_list(const std::string& text);

}  // namespace nash

template <>
struct std::hash<nash::WeylElement> {
  std::size_t operator()(const nash::WeylElement& w) const { return w.hash(); }
};
