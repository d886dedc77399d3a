#pragma once

// Brute-force reference implementations used only by the tests. They avoid the
// library's algorithms (descent recursion, chain DP, coset projections) so that
// agreement means something.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "nash/grassmann.hpp"
#include "nash/weyl.hpp"

namespace oracle {

// All products of subwords of `word`, as a set of group elements.
inline std::set<nash::WeylElement> subword_products(const nash::WeylGroup& W, const std::vector<int>& word) {
  std::set<nash::WeylElement> out;
  const std::size_t L = word.size();
  for (std::uint32_t mask = 0; mask < (1u << L); ++mask) {
    nash::WeylElement x = W.identity();
    for (std::size_t i = 0; i < L; ++i)
      if ((mask >> i) & 1u) x = W.multiply(x, W.simple_reflection(word[i]));
    out.insert(x);
  }
  return out;
}

// Rank matrix r_w(p, q) = #{j <= q : w(j) <= p}, indices 1..n.
inline int rank_entry(const std::vector<int>& w, int p, int q) {
  int r = 0;
  for (int j = 0; j < q; ++j) r += w[j] <= p;
  return r;
}

// u <= w in Bruhat order on S_n by the tableau/rank-matrix criterion.
inline bool perm_bruhat_leq(const std::vector<int>& u, const std::vector<int>& w) {
  const int n = static_cast<int>(u.size());
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q)
      if (rank_entry(u, p, q) < rank_entry(w, p, q)) return false;
  return true;
}

inline std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// All subsets of {1..n} (bitmask) of size k.
inline std::vector<std::uint32_t> subsets_of_size(int n, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (__builtin_popcount(s) == k) out.push_back(s);
  return out;
}

// Chains X_1 ⊆ ... ⊆ X_m, |X_i| = sizes[i], X_i ⊆ bounds[i], by explicit enumeration.
inline std::uint64_t enumerate_chains(int n, const std::vector<std::uint32_t>& bounds, const std::vector<int>& sizes) {
  std::uint64_t count = 0;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t prev) {
    if (i == sizes.size()) {
      ++count;
      return;
    }
    for (auto s : subsets_of_size(n, sizes[i]))
      if ((s & prev) == prev && (s & ~bounds[i]) == 0) rec(i + 1, s);
  };
  rec(0, 0);
  return count;
}

inline std::uint32_t prefix(int p) { return p >= 32 ? ~0u : ((1u << p) - 1u); }

// 3412 pattern containment.
inline bool contains_3412(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (w[c] < w[d] && w[d] < w[a] && w[a] < w[b]) return true;
  return false;
}

}  // namespace oracle
