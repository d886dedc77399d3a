#include "nash/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <set>
#include <unordered_set>

#include "nash/error.hpp"

namespace nash {

ParabolicSubset::ParabolicSubset(int rank, std::uint32_t levi_mask) : mask_(levi_mask), rank_(rank) {
  if (rank < 0 || rank > kMaxRank) throw Error("parabolic rank out of range");
  const std::uint32_t full = rank == 32 ? ~0u : ((1u << rank) - 1u);
  if ((levi_mask & ~full) != 0) throw Error("Levi index out of range 1.." + std::to_string(rank));
}

ParabolicSubset ParabolicSubset::from_levi(int rank, const std::vector<int>& levi) {
  std::uint32_t mask = 0;
  for (int i : levi) {
    if (i < 1 || i > rank) throw Error("Levi index " + std::to_string(i) + " out of range 1.." + std::to_string(rank));
    mask |= 1u << (i - 1);
  }
  return {rank, mask};
}

ParabolicSubset ParabolicSubset::maximal(int rank, int omitted) {
  if (omitted < 1 || omitted > rank) throw Error("omitted index " + std::to_string(omitted) + " out of range");
  return {rank, ((1u << rank) - 1u) & ~(1u << (omitted - 1))};
}

std::vector<int> ParabolicSubset::levi() const {
  std::vector<int> out;
  for (int i = 1; i <= rank_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> ParabolicSubset::omitted() const {
  std::vector<int> out;
  for (int i = 1; i <= rank_; ++i) {
    if (!contains(i)) out.push_back(i);
  }
  return out;
}

Root WeylElement::image(int j) const {
  Root r(rank_);
  for (int i = 0; i < rank_; ++i) r.set(i, at(i, j - 1));
  return r;
}

Root WeylElement::apply(const Root& beta) const {
  Root r(rank_);
  for (int i = 0; i < rank_; ++i) {
    int sum = 0;
    for (int j = 0; j < rank_; ++j) sum += at(i, j) * beta[j];
    r.set(i, sum);
  }
  return r;
}

std::size_t WeylElement::hash() const {
  // FNV-1a over the used block of the matrix.
  std::size_t h = 1469598103934665603ull;
  for (int j = 0; j < rank_; ++j) {
    for (int i = 0; i < rank_; ++i) {
      h ^= static_cast<std::uint8_t>(at(i, j));
      h *= 1099511628211ull;
    }
  }
  return h;
}

int default_interval_length_limit() {
  if (const char* env = std::getenv("NASH_MAX_INTERVAL_LENGTH")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
  }
  return 20;
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs) {}

int WeylGroup::compute_length(const WeylElement& w) const {
  int len = 0;
  for (const Root& beta : rs_->positive_roots()) {
    if (w.apply(beta).is_negative()) ++len;
  }
  return len;
}

WeylElement WeylGroup::identity() const {
  WeylElement e;
  e.rank_ = static_cast<std::uint8_t>(rank());
  for (int i = 0; i < std::min(rank(), kMaxRank); ++i) e.at(i, i) = 1;
  return e;
}

WeylElement WeylGroup::simple_reflection(int i) const {
  if (i < 1 || i > rank()) throw Error("simple index " + std::to_string(i) + " out of range 1.." + std::to_string(rank()));
  return right_multiply(identity(), i);
}

WeylElement WeylGroup::right_multiply(const WeylElement& w, int i) const {
  if (i < 1 || i > rank()) throw Error("simple index " + std::to_string(i) + " out of range 1.." + std::to_string(rank()));
  // (w s_i)(alpha_j) = w(alpha_j) - a[i][j] w(alpha_i)
  WeylElement r = w;
  const int n = rank();
  for (int j = 0; j < n; ++j) {
    const int a = rs_->cartan(i, j + 1);
    if (a == 0) continue;
    for (int row = 0; row < n; ++row) r.at(row, j) = static_cast<std::int8_t>(w.at(row, j) - a * w.at(row, i - 1));
  }
  r.length_ = static_cast<std::uint16_t>(w.image(i).is_positive() ? w.length_ + 1 : w.length_ - 1);
  return r;
}

WeylElement WeylGroup::left_multiply(int i, const WeylElement& w) const {
  if (i < 1 || i > rank()) throw Error("simple index " + std::to_string(i) + " out of range 1.." + std::to_string(rank()));
  WeylElement r = w;
  const int n = rank();
  for (int j = 0; j < n; ++j) {
    const int p = rs_->simple_pairing(w.image(j + 1), i);
    r.at(i - 1, j) = static_cast<std::int8_t>(w.at(i - 1, j) - p);
  }
  r.length_ = static_cast<std::uint16_t>(compute_length(r));
  return r;
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const {
  WeylElement w = identity();
  for (int i : word) w = right_multiply(w, i);
  return w;
}

WeylElement WeylGroup::multiply(const WeylElement& u, const WeylElement& v) const {
  if (u.rank_ != v.rank_ || u.rank_ != rank()) throw Error("multiplying elements of different Weyl groups");
  WeylElement r;
  r.rank_ = u.rank_;
  const int n = rank();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      int sum = 0;
      for (int k = 0; k < n; ++k) sum += u.at(i, k) * v.at(k, j);
      r.at(i, j) = static_cast<std::int8_t>(sum);
    }
  }
  r.length_ = static_cast<std::uint16_t>(compute_length(r));
  return r;
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  // Stripping right descents of w = s_a1 ... s_ak yields ak, ..., a1, which is w^{-1} read left to right.
  WeylElement v = w;
  WeylElement inv = identity();
  while (!v.is_identity()) {
    int i = 1;
    while (!is_right_descent(v, i)) ++i;
    v = right_multiply(v, i);
    inv = right_multiply(inv, i);
  }
  return inv;
}

WeylElement WeylGroup::reflection_from_root(const Root& alpha) const {
  if (!rs_->is_root(alpha)) throw Error(alpha.to_string() + " is not a root");
  WeylElement r;
  r.rank_ = static_cast<std::uint8_t>(rank());
  for (int j = 1; j <= rank(); ++j) {
    const Root img = rs_->reflect(alpha, rs_->simple_root(j));
    for (int i = 0; i < rank(); ++i) r.at(i, j - 1) = static_cast<std::int8_t>(img[i]);
  }
  r.length_ = static_cast<std::uint16_t>(compute_length(r));
  return r;
}

std::vector<int> WeylGroup::reduced_word(const WeylElement& w) const {
  // Left descents of w are right descents of w^{-1}; peel the smallest each time.
  WeylElement v = inverse(w);
  std::vector<int> word;
  while (!v.is_identity()) {
    int i = 1;
    while (!is_right_descent(v, i)) ++i;
    word.push_back(i);
    v = right_multiply(v, i);
  }
  return word;
}

std::string WeylGroup::word_string(const WeylElement& w) const {
  if (w.is_identity()) return "e";
  std::string s;
  for (int i : reduced_word(w)) s += "s" + std::to_string(i);
  return s;
}

std::vector<Root> WeylGroup::left_inversions(const WeylElement& w) const {
  std::vector<Root> out;
  for (const Root& beta : rs_->positive_roots()) {
    const Root img = w.apply(beta);
    if (img.is_negative()) out.push_back(-img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Root> WeylGroup::left_inversions_P(const WeylElement& w, const ParabolicSubset& P) const {
  std::vector<Root> out;
  for (const Root& beta : rs_->positive_roots()) {
    if (P.contains_root(beta)) continue;
    const Root img = w.apply(beta);
    if (img.is_negative()) out.push_back(-img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool WeylGroup::bruhat_leq(WeylElement v, WeylElement w) const {
  // For a right descent s of w: v <= w iff min(v, vs) <= ws.
  while (true) {
    if (v.is_identity()) return true;
    if (v.length() > w.length()) return false;
    if (v.length() == w.length()) return v == w;
    int i = 1;
    while (!is_right_descent(w, i)) ++i;
    w = right_multiply(w, i);
    if (is_right_descent(v, i)) v = right_multiply(v, i);
  }
}

bool WeylGroup::is_min_coset_rep(const WeylElement& w, const ParabolicSubset& P) const {
  for (int i : P.levi()) {
    if (is_right_descent(w, i)) return false;
  }
  return true;
}

WeylElement WeylGroup::min_coset_rep(WeylElement w, const ParabolicSubset& P) const {
  const auto levi = P.levi();
  for (bool changed = true; changed;) {
    changed = false;
    for (int i : levi) {
      if (is_right_descent(w, i)) {
        w = right_multiply(w, i);
        changed = true;
      }
    }
  }
  return w;
}

WeylElement WeylGroup::max_coset_rep(WeylElement w, const ParabolicSubset& P) const {
  const auto levi = P.levi();
  for (bool changed = true; changed;) {
    changed = false;
    for (int i : levi) {
      if (!is_right_descent(w, i)) {
        w = right_multiply(w, i);
        changed = true;
      }
    }
  }
  return w;
}

WeylElement WeylGroup::longest_element(const ParabolicSubset& P) const { return max_coset_rep(identity(), P); }

std::vector<WeylElement> WeylGroup::lower_interval(const WeylElement& w, int max_length) const {
  if (w.length() > max_length) {
    throw Error("interval enumeration refused: length " + std::to_string(w.length()) + " exceeds limit " +
                std::to_string(max_length) + " (set NASH_MAX_INTERVAL_LENGTH to raise it)");
  }
  std::unordered_set<WeylElement> seen{identity()};
  std::vector<WeylElement> items{identity()};
  for (int letter : reduced_word(w)) {
    const std::size_t count = items.size();
    for (std::size_t k = 0; k < count; ++k) {
      WeylElement x = right_multiply(items[k], letter);
      if (seen.insert(x).second) items.push_back(x);
    }
  }
  std::sort(items.begin(), items.end());
  return items;
}

std::vector<WeylElement> WeylGroup::interval_min_reps(const WeylElement& w, const ParabolicSubset& P,
                                                      int max_length) const {
  // For v in W^P, v <= w iff v <= (min rep of wW_P), and the min rep is much shorter.
  std::vector<WeylElement> out;
  for (auto& v : lower_interval(min_coset_rep(w, P), max_length)) {
    if (is_min_coset_rep(v, P)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<WeylElement> WeylGroup::elements(std::size_t limit) const {
  return min_coset_reps(ParabolicSubset::borel(rank()), limit);
}

std::vector<WeylElement> WeylGroup::min_coset_reps(const ParabolicSubset& P, std::size_t limit) const {
  // W^P is closed under deleting a left descent, so grow it by left multiplication.
  std::unordered_set<WeylElement> seen{identity()};
  std::vector<WeylElement> items{identity()};
  for (std::size_t k = 0; k < items.size(); ++k) {
    for (int i = 1; i <= rank(); ++i) {
      WeylElement x = left_multiply(i, items[k]);
      if (x.length() <= items[k].length() || !is_min_coset_rep(x, P)) continue;
      if (seen.insert(x).second) {
        items.push_back(x);
        if (items.size() > limit) throw Error("Weyl group enumeration exceeds " + std::to_string(limit) + " elements");
      }
    }
  }
  std::sort(items.begin(), items.end());
  return items;
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::string trimmed;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
  }
  if (trimmed.empty() || trimmed == "e") return out;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  while (pos < n) {
    while (pos < n && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
    if (pos == n) break;
    std::size_t end = pos;
    while (end < n && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos || end - pos > 4) throw Error("cannot parse index list '" + text + "'");
    out.push_back(std::stoi(text.substr(pos, end - pos)));
    pos = end;
    if (pos < n && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ',') {
      throw Error("cannot parse index list '" + text + "'");
    }
  }
  return out;
}

}  // namespace nash
