#include "nash/peterson.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "nash/error.hpp"

namespace nash {

namespace {

std::atomic<std::size_t> g_alpha_minimal_calls{0};

bool contains_sorted(const std::vector<Root>& sorted, const Root& r) {
  return std::binary_search(sorted.begin(), sorted.end(), r);
}

std::vector<Root> block_of(const Root& beta, const Root& alpha, const std::vector<Root>& ambient) {
  std::vector<Root> block;
  for (const Root& x : ambient) {
    if ((x - beta).multiple_of(alpha)) block.push_back(x);
  }
  return block;
}

std::string state_string(const WeylGroup& W, const PetersonState& s) {
  std::string out = "(" + W.word_string(s.z) + ", {";
  for (std::size_t i = 0; i < s.M.size(); ++i) out += (i ? ", " : "") + s.M[i].to_string();
  return out + "})";
}

}  // namespace

std::size_t TranslationGraph::count_at(const WeylElement& z) const {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [&](const auto& s) { return s.z == z; }));
}

std::vector<WeylElement> TranslationGraph::distinct_z() const {
  std::set<WeylElement> zs;
  for (const auto& s : nodes) zs.insert(s.z);
  return {zs.begin(), zs.end()};
}

std::vector<Root> ambient_set(const WeylGroup& W, const WeylElement& z, const ParabolicSubset& P) {
  std::vector<Root> out;
  for (const Root& a : W.root_system().positive_roots()) {
    if (P.contains_root(a)) continue;
    out.push_back(z.apply(-a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Root>> alpha_strings(const WeylGroup& W, const WeylElement& z, const ParabolicSubset& P,
                                             const Root& alpha) {
  if (!alpha.is_positive() || !W.root_system().is_root(alpha)) throw Error(alpha.to_string() + " is not a positive root");
  const auto ambient = ambient_set(W, z, P);
  std::vector<std::vector<Root>> blocks;
  std::vector<bool> used(ambient.size(), false);
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    if (used[i]) continue;
    std::vector<Root> block;
    for (std::size_t j = i; j < ambient.size(); ++j) {
      if (!used[j] && (ambient[j] - ambient[i]).multiple_of(alpha)) {
        used[j] = true;
        block.push_back(ambient[j]);
      }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Root alpha_minimal(const std::vector<Root>& block, const Root& alpha, const std::vector<Root>& ambient) {
  g_alpha_minimal_calls.fetch_add(1, std::memory_order_relaxed);
  if (block.empty()) throw Error("alpha_minimal of an empty block");
  const Root* found = nullptr;
  for (const Root& mu : block) {
    if (!contains_sorted(ambient, mu)) throw Error(mu.to_string() + " is not in the ambient set");
    if (contains_sorted(ambient, mu - alpha)) continue;
    if (found) {
      throw InvariantViolation("alpha-minimal element not unique for alpha = " + alpha.to_string() + ": both " +
                               found->to_string() + " and " + mu.to_string());
    }
    found = &mu;
  }
  if (!found) throw InvariantViolation("alpha-string without an alpha-minimal element for alpha = " + alpha.to_string());
  return *found;
}

std::size_t alpha_minimal_calls() { return g_alpha_minimal_calls.load(); }

std::vector<Root> sigma_shift(const WeylGroup& W, const WeylElement& z, const ParabolicSubset& P,
                              const std::vector<Root>& M, const Root& alpha) {
  const auto ambient = ambient_set(W, z, P);
  std::set<Root> out;
  std::set<Root> done;
  for (const Root& beta : M) {
    if (!contains_sorted(ambient, beta)) {
      throw Error(beta.to_string() + " is outside the ambient set of " + W.word_string(z));
    }
    if (done.contains(beta)) continue;
    const auto block = block_of(beta, alpha, ambient);
    int in_m = 0;
    for (const Root& x : block) {
      done.insert(x);
      if (std::find(M.begin(), M.end(), x) != M.end()) ++in_m;
    }
    // The M-part of the string slides down so that it starts at mu.
    const Root mu = alpha_minimal(block, alpha, ambient);
    for (int k = 0; k < in_m; ++k) {
      Root shifted = mu + k * alpha;
      if (std::find(block.begin(), block.end(), shifted) == block.end()) {
        throw InvariantViolation("alpha-string of " + beta.to_string() + " is not contiguous above " + mu.to_string());
      }
      out.insert(shifted);
    }
  }
  if (out.size() != M.size()) throw InvariantViolation("sigma shift changed the size of M");
  return {out.begin(), out.end()};
}

PetersonState tau(const WeylGroup& W, const ParabolicSubset& P, const PetersonState& state, const Root& gamma) {
  const auto linv = W.left_inversions(state.z);
  if (!std::binary_search(linv.begin(), linv.end(), gamma)) {
    throw Error(gamma.to_string() + " is not a left inversion of " + W.word_string(state.z));
  }
  const RootSystem& rs = W.root_system();
  const WeylElement r = W.reflection_from_root(gamma);
  PetersonState next;
  next.z = W.min_coset_rep(W.multiply(r, state.z), P);
  for (const Root& beta : sigma_shift(W, state.z, P, state.M, gamma)) next.M.push_back(rs.reflect(gamma, beta));
  std::sort(next.M.begin(), next.M.end());

  const auto ambient = ambient_set(W, next.z, P);
  for (const Root& beta : next.M) {
    if (!contains_sorted(ambient, beta)) {
      throw InvariantViolation("translate " + state_string(W, next) + " leaves the ambient set");
    }
  }
  if (next.M.size() != state.M.size()) throw InvariantViolation("translation changed |M|");
  return next;
}

TranslationGraph eventual_translates(const WeylGroup& W, const WeylElement& w, const ParabolicSubset& P) {
  if (!W.is_min_coset_rep(w, P)) throw Error(W.word_string(w) + " is not a minimal coset representative");
  TranslationGraph g;
  std::map<PetersonState, std::size_t> index;
  PetersonState start{w, W.left_inversions(w)};
  index.emplace(start, 0);
  g.nodes.push_back(std::move(start));
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const PetersonState src = g.nodes[k];
    for (const Root& gamma : W.left_inversions(src.z)) {
      PetersonState dst = tau(W, P, src, gamma);
      if (dst.z.length() >= src.z.length()) {
        throw InvariantViolation("translation did not decrease length at " + state_string(W, src));
      }
      auto [it, inserted] = index.emplace(dst, g.nodes.size());
      if (inserted) g.nodes.push_back(std::move(dst));
      g.edges.push_back({k, gamma, it->second});
    }
  }
  return g;
}

PetersonState theorem2_map(const SchubertDatum& d, const WeylElement& z) {
  const WeylGroup& W = d.group();
  const ParabolicSubset Q = nash_parabolic(d);
  if (!W.is_min_coset_rep(z, Q)) throw Error(W.word_string(z) + " is not a minimal coset representative for Q");
  if (!W.bruhat_leq(z, d.element())) throw Error(W.word_string(z) + " is not below w in Bruhat order");
  PetersonState s;
  s.z = W.min_coset_rep(z, d.parabolic());
  for (const Root& beta : nash_E(d)) s.M.push_back(z.apply(beta));
  std::sort(s.M.begin(), s.M.end());
  return s;
}

Theorem2Report verify_theorem2(const SchubertDatum& d) {
  const WeylGroup& W = d.group();
  Theorem2Report rep;

  if (W.left_inversions(d.element()) != W.left_inversions_P(d.element(), d.parabolic())) {
    rep.problems.push_back("LInv^P(w) differs from LInv(w) although w is a minimal representative");
  }

  const auto fixed = nash_fixed_points(d);
  rep.fixed_points = fixed.size();
  std::map<PetersonState, WeylElement> image;
  for (const WeylElement& z : fixed) {
    auto s = theorem2_map(d, z);
    auto [it, inserted] = image.emplace(s, z);
    if (!inserted) {
      rep.problems.push_back("not injective: " + W.word_string(it->second) + " and " + W.word_string(z) + " both map to " +
                             state_string(W, s));
    }
  }

  const auto graph = eventual_translates(W, d.element(), d.parabolic());
  rep.translates = graph.nodes.size();
  std::set<PetersonState> nodes(graph.nodes.begin(), graph.nodes.end());
  for (const auto& s : graph.nodes) {
    if (!image.contains(s)) rep.problems.push_back("translate " + state_string(W, s) + " is not in the image");
  }
  for (const auto& [s, z] : image) {
    if (!nodes.contains(s)) {
      rep.problems.push_back("image " + state_string(W, s) + " of " + W.word_string(z) + " is not an eventual translate");
    }
  }
  rep.passed = rep.problems.empty();
  return rep;
}

std::vector<WeylElement> ck_singular_points(const WeylGroup& W, const WeylElement& w, const ParabolicSubset& P) {
  const auto graph = eventual_translates(W, w, P);
  std::map<WeylElement, std::size_t> per_z;
  for (const auto& s : graph.nodes) ++per_z[s.z];
  std::vector<WeylElement> multi;
  for (const auto& [z, count] : per_z) {
    if (count >= 2) multi.push_back(z);
  }
  std::vector<WeylElement> out;
  for (const WeylElement& u : W.interval_min_reps(w, P)) {
    if (std::any_of(multi.begin(), multi.end(), [&](const WeylElement& v) { return W.bruhat_leq(u, v); })) {
      out.push_back(u);
    }
  }
  return out;
}

std::string reflection_label(const Root& alpha) {
  std::vector<int> idx;
  for (int i = 0; i < alpha.rank(); ++i) {
    if (alpha[i] != 0) idx.push_back(i + 1);
  }
  if (idx.size() == 1) return "r_" + std::to_string(idx.front());
  std::string s = "r_{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "}";
}

}  // namespace nash
