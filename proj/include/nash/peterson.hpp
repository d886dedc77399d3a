#pragma once

// Combinatorial Peterson translation on X_w^P for an arbitrary standard parabolic P.
//
// A state (z, M) pairs a minimal coset representative z in W^P with a set of
// roots M inside the ambient set z(R^- \ R_L^-). Translating along gamma in LInv(z)
// shifts every gamma-string of M down to its gamma-minimal element, reflects by
// r_gamma and replaces r_gamma z by its minimal coset representative.

#include <atomic>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "nash/nashcore.hpp"
#include "nash/weyl.hpp"

namespace nash {

struct PetersonState {
  WeylElement z;
  std::vector<Root> M;  // sorted

  auto operator<=>(const PetersonState&) const = default;
};

struct TranslationEdge {
  std::size_t source = 0;
  Root label;
  std::size_t target = 0;
};

// Nodes are in breadth-first discovery order; nodes[root] is (w, LInv(w)).
struct TranslationGraph {
  std::vector<PetersonState> nodes;
  std::vector<TranslationEdge> edges;
  std::size_t root = 0;

  // Number of distinct states whose z-component equals z.
  std::size_t count_at(const WeylElement& z) const;
  std::vector<WeylElement> distinct_z() const;
};

// z(R^- \ R_L^-), sorted.
std::vector<Root> ambient_set(const WeylGroup& W, const WeylElement& z, const ParabolicSubset& P);

// Classes of z(R^- \ R_L^-) under beta ~ beta' iff beta - beta' is an integer multiple of alpha.
std::vector<std::vector<Root>> alpha_strings(const WeylGroup& W, const WeylElement& z, const ParabolicSubset& P,
                                             const Root& alpha);

// The unique mu in block with mu - alpha outside ambient (ambient sorted).
// Throws InvariantViolation when there is no such element or more than one.
Root alpha_minimal(const std::vector<Root>& block, const Root& alpha, const std::vector<Root>& ambient);

// Number of alpha_minimal evaluations so far in this process.
std::size_t alpha_minimal_calls();

std::vector<Root> sigma_shift(const WeylGroup& W, const WeylElement& z, const ParabolicSubset& P,
                              const std::vector<Root>& M, const Root& alpha);

// Throws nash::Error if gamma is not in LInv(state.z).
PetersonState tau(const WeylGroup& W, const ParabolicSubset& P, const PetersonState& state, const Root& gamma);

// Requires w in W^P.
TranslationGraph eventual_translates(const WeylGroup& W, const WeylElement& w, const ParabolicSubset& P);

// T(z) = (min rep of zW_P, z(E)) with E = w^{-1}(LInv(w)); requires z in W^Q and z <= w.
PetersonState theorem2_map(const SchubertDatum& d, const WeylElement& z);

struct Theorem2Report {
  bool passed = false;
  std::size_t fixed_points = 0;
  std::size_t translates = 0;
  std::vector<std::string> problems;  // empty when passed
};

// Checks that T is injective and that its image is exactly the eventual-translate set.
Theorem2Report verify_theorem2(const SchubertDatum& d);

// Singular fixed points by the Carrell-Kuttler criterion: u is singular iff some
// v >= u in W^P carries two different eventual translates.
std::vector<WeylElement> ck_singular_points(const WeylGroup& W, const WeylElement& w, const ParabolicSubset& P);

// "r_{1,2,3}" from the simple-root support of alpha.
std::string reflection_label(const Root& alpha);

}  // namespace nash
