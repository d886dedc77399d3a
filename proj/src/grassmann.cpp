#include "nash/grassmann.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "nash/error.hpp"

namespace nash {

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : oneline_) {
    if (v < 1 || v > n || seen[v]) throw Error("not a permutation of 1.." + std::to_string(n) + ": " + to_string());
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  const bool separated = text.find_first_of(", ") != std::string::npos;
  std::vector<int> v;
  if (separated) {
    v = parse_index_list(text);
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw Error("cannot parse permutation '" + text + "'");
      v.push_back(ch - '0');
    }
  }
  if (v.empty()) throw Error("empty permutation");
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(oneline_.size());
  for (int i = 1; i <= size(); ++i) inv[(*this)(i) - 1] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw Error("composing permutations of different sizes");
  std::vector<int> out(u.oneline_.size());
  for (int i = 1; i <= u.size(); ++i) out[i - 1] = u(v(i));
  return Permutation(std::move(out));
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i) {
    if ((*this)(i) > (*this)(i + 1)) d.push_back(i);
  }
  return d;
}

bool Permutation::is_grassmannian(int k) const {
  const auto d = descents();
  return d.empty() || (d.size() == 1 && d.front() == k);
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) inv += oneline_[i] > oneline_[j];
  }
  return inv;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < oneline_.size(); ++i) s += (i ? "," : "") + std::to_string(oneline_[i]);
  return s;
}

WeylElement perm_to_weyl(const WeylGroup& W, const Permutation& p) {
  const CartanType& ct = W.root_system().cartan_type();
  if (ct.family != Family::A || ct.rank != p.size() - 1) {
    throw Error("permutation of size " + std::to_string(p.size()) + " does not match Weyl group " + ct.name());
  }
  // Bubble sort by right descents: p = x s_i with x shorter.
  std::vector<int> v = p.oneline();
  std::vector<int> word;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return W.from_word(word);
}

Permutation weyl_to_perm(const WeylElement& w) {
  // Column j is w(alpha_j) = e_{w(j)} - e_{w(j+1)}.
  const int n = w.rank() + 1;
  std::vector<int> v(n, 0);
  for (int j = 1; j < n; ++j) {
    const Root c = w.image(j);
    int first = -1;
    int last = -1;
    for (int i = 0; i < w.rank(); ++i) {
      if (c[i] != 0) {
        if (first < 0) first = i + 1;
        last = i + 1;
      }
    }
    if (first < 0) throw Error("not a type A Weyl element");
    const int a = c.is_positive() ? first : last + 1;
    const int b = c.is_positive() ? last + 1 : first;
    if ((v[j - 1] != 0 && v[j - 1] != a) || (v[j] != 0 && v[j] != b)) throw Error("not a type A Weyl element");
    v[j - 1] = a;
    v[j] = b;
  }
  return Permutation(std::move(v));
}

int rank_number(const Permutation& w, int i, int q) {
  int r = 0;
  for (int j = 1; j <= q; ++j) r += w(j) <= i;
  return r;
}

std::vector<CoessBox> coessential_set(const Permutation& w) {
  const int n = w.size();
  const Permutation inv = w.inverse();
  std::vector<CoessBox> out;
  for (int p = 1; p < n; ++p) {
    for (int q = 1; q < n; ++q) {
      if (inv(p) <= q && q < inv(p + 1) && w(q) <= p && p < w(q + 1)) out.push_back({p, q, rank_number(w, p, q)});
    }
  }
  return out;
}

namespace {

Permutation sort_blocks(const Permutation& w, const ParabolicSubset& P, bool descending) {
  if (P.rank() != w.size() - 1) throw Error("parabolic rank does not match permutation size");
  std::vector<int> v = w.oneline();
  std::size_t start = 0;
  for (int j = 1; j <= w.size(); ++j) {
    if (j < w.size() && P.contains(j)) continue;
    auto first = v.begin() + static_cast<std::ptrdiff_t>(start);
    auto last = v.begin() + j;
    if (descending) {
      std::sort(first, last, std::greater<>());
    } else {
      std::sort(first, last);
    }
    start = static_cast<std::size_t>(j);
  }
  return Permutation(std::move(v));
}

void require_grassmannian(const Permutation& w, int k, int n) {
  if (w.size() != n) throw Error("permutation size " + std::to_string(w.size()) + " does not match n = " + std::to_string(n));
  if (k < 1 || k >= n) throw Error("k must satisfy 1 <= k < n");
  if (!w.is_grassmannian(k)) throw Error(w.to_string() + " is not Grassmannian with descent at " + std::to_string(k));
}

}  // namespace

Permutation min_coset_rep(const Permutation& w, const ParabolicSubset& P) { return sort_blocks(w, P, false); }

Permutation max_coset_rep(const Permutation& w, const ParabolicSubset& P) { return sort_blocks(w, P, true); }

ParabolicSubset grassmannian_parabolic(int k, int n) { return ParabolicSubset::maximal(n - 1, k); }

std::vector<Permutation> grassmannian_permutations(int k, int n) {
  if (k < 1 || k >= n) throw Error("k must satisfy 1 <= k < n");
  std::vector<Permutation> out;
  // Walk k-subsets of 1..n via a selection mask.
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> head;
    std::vector<int> tail;
    for (int i = 0; i < n; ++i) (pick[i] ? head : tail).push_back(i + 1);
    head.insert(head.end(), tail.begin(), tail.end());
    out.emplace_back(std::move(head));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

PartitionShape partition_of(const Permutation& w, int k, int n) {
  require_grassmannian(w, k, n);
  PartitionShape lambda;
  lambda.parts.assign(k, 0);
  for (int i = 1; i <= k; ++i) lambda.parts[k - i] = w(i) - i;
  return lambda;
}

std::vector<int> inner_corners(const PartitionShape& lambda, int k, int n) {
  if (static_cast<int>(lambda.parts.size()) != k) throw Error("partition must have exactly k parts");
  std::vector<int> out;
  if (lambda.parts[0] < n - k) out.push_back(0);
  for (int c = 1; c < k; ++c) {
    if (lambda.parts[c - 1] > lambda.parts[c]) out.push_back(c);
  }
  return out;
}

std::vector<CoessBox> corner_boxes(const PartitionShape& lambda, int k, int n) {
  std::vector<CoessBox> out;
  for (int c : inner_corners(lambda, k, n)) out.push_back({k - c + lambda.parts[c], k, k - c});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> grassmannian_delta_w(const Permutation& w, int k) {
  std::vector<int> out;
  for (int j = 1; j < w.size(); ++j) {
    if (j != k && w(j + 1) == w(j) + 1) out.push_back(j);
  }
  return out;
}

std::vector<CoessBox> coess_nash_formula(const Permutation& w, int k, int n) {
  require_grassmannian(w, k, n);
  if (w.is_identity()) throw Error("the Nash coessential formula needs a non-identity permutation");
  const Permutation inv = w.inverse();
  std::vector<int> ps;
  for (const CoessBox& b : coessential_set(max_coset_rep(w, grassmannian_parabolic(k, n)))) ps.push_back(b.p);
  std::sort(ps.begin(), ps.end());
  const int m = static_cast<int>(ps.size());

  std::set<CoessBox> out;
  const int a_last = w(k) == n ? m : m - 1;
  for (int i = 1; i <= a_last; ++i) {
    const int p = ps[i - 1];
    const int r = inv(p);
    out.insert({p, r, r});
  }
  const int b_first = w(k + 1) == 1 ? 1 : 2;
  for (int i = b_first; i <= m; ++i) {
    const int p = ps[i - 1];
    const int r = inv(p);
    out.insert({p, k + p - r, p});
  }
  return {out.begin(), out.end()};
}

bool defined_by_inclusions(const Permutation& w) {
  const auto boxes = coessential_set(w);
  return std::all_of(boxes.begin(), boxes.end(), [](const CoessBox& b) { return b.r == std::min(b.p, b.q); });
}

bool is_covexillary(const Permutation& w) {
  const auto boxes = coessential_set(w);
  for (const CoessBox& a : boxes) {
    for (const CoessBox& b : boxes) {
      if (a.p < b.p && a.q > b.q) return false;
    }
  }
  return true;
}

std::vector<CoessBox> inclusion_boxes(const Permutation& w) {
  std::vector<CoessBox> out;
  for (const CoessBox& b : coessential_set(w)) {
    if (b.r == std::min(b.p, b.q)) out.push_back(b);
  }
  return out;
}

SmoothnessVerdict nash_smoothness(const Permutation& w, int k, int n) {
  require_grassmannian(w, k, n);
  SmoothnessVerdict v;
  for (const CoessBox& b : coessential_set(max_coset_rep(w, grassmannian_parabolic(k, n)))) {
    if (b.r != std::min(b.p, b.q)) ++v.non_inclusion_boxes;
  }
  v.by_count = v.non_inclusion_boxes <= 1;
  const Permutation vq = max_coset_rep(w, ParabolicSubset::from_levi(n - 1, grassmannian_delta_w(w, k)));
  v.by_gr = defined_by_inclusions(vq) && is_covexillary(vq);
  v.smooth = v.by_count;
  return v;
}

bool nash_blowup_smooth(const Permutation& w, int k, int n) {
  const SmoothnessVerdict v = nash_smoothness(w, k, n);
  if (v.by_count != v.by_gr) {
    throw InvariantViolation("smoothness routes disagree for " + w.to_string() + ": box count says " +
                             (v.by_count ? "smooth" : "singular") + ", covexillary test says " +
                             (v.by_gr ? "smooth" : "singular"));
  }
  return v.smooth;
}

std::string ChainCondition::text() const {
  return "F_" + std::to_string(lower) + " ⊆ E_" + std::to_string(p) + " ⊆ F_" + std::to_string(upper);
}

ConfigDescription config_description(const Permutation& w, int k, int n) {
  require_grassmannian(w, k, n);
  ConfigDescription d;
  d.k = k;
  d.n = n;
  d.w = w;
  d.lambda = partition_of(w, k, n);
  d.corners = inner_corners(d.lambda, k, n);
  d.coess = coessential_set(max_coset_rep(w, grassmannian_parabolic(k, n)));
  d.delta_w = grassmannian_delta_w(w, k);
  for (int j = 1; j < n; ++j) {
    if (!std::binary_search(d.delta_w.begin(), d.delta_w.end(), j)) d.flag_steps.push_back(j);
  }
  d.smoothness = nash_smoothness(w, k, n);
  if (w.is_identity()) return d;

  d.top_degenerate = w(k) < n;
  d.bottom_degenerate = w(k + 1) > 1;
  const int m = static_cast<int>(d.coess.size());
  std::set<int> steps{k};
  for (int i = 0; i < m; ++i) {
    const CoessBox& b = d.coess[i];
    ChainCondition c{b.r, b.p, k + b.p - b.r};
    c.lower_essential = !(i == m - 1 && d.top_degenerate);
    c.upper_essential = !(i == 0 && d.bottom_degenerate);
    steps.insert(c.lower);
    steps.insert(c.upper);
    d.conditions.push_back(c);
  }
  if (std::vector<int>(steps.begin(), steps.end()) != d.flag_steps) {
    throw InvariantViolation("flag steps from the chain conditions do not match the complement of Delta_w for " +
                             w.to_string());
  }
  return d;
}

}  // namespace nash
