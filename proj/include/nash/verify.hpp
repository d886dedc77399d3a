#pragma once

// Exhaustive property sweeps. Each sweep fans independent items out over a small
// worker pool and collects failures instead of stopping at the first one.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "nash/rootsystem.hpp"
#include "nash/zelevinsky.hpp"

namespace nash {

struct SweepBounds {
  int max_rank_a = 5;    // A_1..A_n
  int max_rank_bc = 3;   // B_2..B_n and C_2..C_n
  bool include_d4 = true;
  int coess_max_n = 8;   // Nash coessential formula, Gr(k,n) with n <= this
  int fiber_max_n = 7;   // Grassmannian fiber-product check
  int conjecture_max_n = 6;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct CheckResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  bool passed() const { return failures.empty(); }
};

// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

// (type, omitted index) for every cominuscule maximal parabolic within the bounds.
struct CominusculeCase {
  CartanType type;
  int omitted = 0;
};
std::vector<CominusculeCase> cominuscule_cases(const SweepBounds& b);

CheckResult check_theorem2(const SweepBounds& b);
CheckResult check_singular_locus(const SweepBounds& b);
CheckResult check_coess_nash(const SweepBounds& b);
CheckResult check_grassmann_fiberproduct(const SweepBounds& b);

// Mismatching reports are returned through `counterexamples` when non-null.
CheckResult check_conjecture(const SweepBounds& b, std::vector<ConjectureReport>* counterexamples = nullptr);

// Translate sets have constant |M| and alpha-minimal elements stayed unique
// over every cominuscule datum and every standard parabolic of A_1..A_4, B_2, B_3, C_3, D_4.
CheckResult check_translate_invariants(const SweepBounds& b);

}  // namespace nash
