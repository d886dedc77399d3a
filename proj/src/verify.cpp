#include "nash/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "nash/error.hpp"
#include "nash/grassmann.hpp"
#include "nash/nashcore.hpp"
#include "nash/peterson.hpp"

namespace nash {

namespace {

using Clock = std::chrono::steady_clock;

// Thread-safe failure sink.
class Collector {
 public:
  void fail(std::string msg) {
    std::lock_guard lock(mu_);
    failures_.push_back(std::move(msg));
  }
  void count(std::size_t k = 1) { checked_ += k; }
  CheckResult finish(std::string name, Clock::time_point start) {
    CheckResult r;
    r.name = std::move(name);
    r.checked = checked_.load();
    std::sort(failures_.begin(), failures_.end());
    r.failures = std::move(failures_);
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
  }

 private:
  std::mutex mu_;
  std::vector<std::string> failures_;
  std::atomic<std::size_t> checked_{0};
};

std::string datum_name(const RootSystem& rs, const ParabolicSubset& P, const WeylGroup& W, const WeylElement& w) {
  std::string levi;
  for (int i : P.levi()) levi += (levi.empty() ? "" : ",") + std::to_string(i);
  return rs.cartan_type().name() + " levi {" + levi + "} w=" + W.word_string(w);
}

// Every (root system, cominuscule P, w in W^P) in the bounds, flattened so the
// pool can balance the work.
struct Item {
  const RootSystem* rs;
  ParabolicSubset P;
  WeylElement w;
};

struct CominusculeSweep {
  std::vector<std::unique_ptr<RootSystem>> systems;
  std::vector<Item> items;
};

CominusculeSweep cominuscule_items(const SweepBounds& b) {
  CominusculeSweep s;
  std::map<CartanType, const RootSystem*> built;
  for (const auto& c : cominuscule_cases(b)) {
    if (!built.count(c.type)) {
      s.systems.push_back(std::make_unique<RootSystem>(RootSystem::build(c.type)));
      built[c.type] = s.systems.back().get();
    }
    const RootSystem* rs = built[c.type];
    WeylGroup W(*rs);
    auto P = ParabolicSubset::maximal(rs->rank(), c.omitted);
    for (const auto& w : W.min_coset_reps(P)) s.items.push_back({rs, P, w});
  }
  return s;
}

std::vector<ParabolicSubset> all_parabolics(int rank) {
  std::vector<ParabolicSubset> out;
  for (std::uint32_t m = 0; m < (1u << rank); ++m) out.emplace_back(rank, m);
  return out;
}

}  // namespace

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<CominusculeCase> cominuscule_cases(const SweepBounds& b) {
  std::vector<CartanType> types;
  for (int n = 1; n <= b.max_rank_a; ++n) types.push_back({Family::A, n});
  for (int n = 2; n <= b.max_rank_bc; ++n) types.push_back({Family::B, n});
  for (int n = 2; n <= b.max_rank_bc; ++n) types.push_back({Family::C, n});
  if (b.include_d4) types.push_back({Family::D, 4});
  std::vector<CominusculeCase> out;
  for (const auto& t : types)
    for (int i : RootSystem::build(t).cominuscule_simples()) out.push_back({t, i});
  return out;
}

CheckResult check_theorem2(const SweepBounds& b) {
  auto start = Clock::now();
  auto sweep = cominuscule_items(b);
  Collector col;
  parallel_for(sweep.items.size(), b.threads, [&](std::size_t i) {
    const auto& it = sweep.items[i];
    WeylGroup W(*it.rs);
    std::string name = datum_name(*it.rs, it.P, W, it.w);
    try {
      SchubertDatum d(W, it.P, it.w);
      auto rep = verify_theorem2(d);
      if (!rep.passed)
        for (const auto& p : rep.problems) col.fail(name + ": " + p);
    } catch (const std::exception& e) {
      col.fail(name + ": " + e.what());
    }
    col.count();
  });
  return col.finish("theorem2", start);
}

CheckResult check_singular_locus(const SweepBounds& b) {
  auto start = Clock::now();
  auto sweep = cominuscule_items(b);
  Collector col;
  parallel_for(sweep.items.size(), b.threads, [&](std::size_t i) {
    const auto& it = sweep.items[i];
    WeylGroup W(*it.rs);
    std::string name = datum_name(*it.rs, it.P, W, it.w);
    try {
      SchubertDatum d(W, it.P, it.w);
      auto a = singular_fixed_points(d);
      auto c = ck_singular_points(W, it.w, it.P);
      std::sort(a.begin(), a.end());
      std::sort(c.begin(), c.end());
      if (a != c)
        col.fail(name + ": fiber criterion gives " + std::to_string(a.size()) + " singular points, Carrell-Kuttler " +
                 std::to_string(c.size()));
    } catch (const std::exception& e) {
      col.fail(name + ": " + e.what());
    }
    col.count();
  });
  return col.finish("singular_locus", start);
}

CheckResult check_coess_nash(const SweepBounds& b) {
  auto start = Clock::now();
  struct Job {
    int k, n;
    Permutation w;
  };
  std::vector<Job> jobs;
  for (int n = 2; n <= b.coess_max_n; ++n)
    for (int k = 1; k < n; ++k)
      for (auto& w : grassmannian_permutations(k, n))
        if (!w.is_identity()) jobs.push_back({k, n, w});
  Collector col;
  parallel_for(jobs.size(), b.threads, [&](std::size_t i) {
    const auto& j = jobs[i];
    std::string name = "Gr(" + std::to_string(j.k) + "," + std::to_string(j.n) + ") w=" + j.w.to_string();
    try {
      auto formula = coess_nash_formula(j.w, j.k, j.n);
      auto Q = ParabolicSubset::from_levi(j.n - 1, grassmannian_delta_w(j.w, j.k));
      auto direct = coessential_set(max_coset_rep(j.w, Q));
      std::sort(formula.begin(), formula.end());
      std::sort(direct.begin(), direct.end());
      if (formula != direct) col.fail(name + ": formula and direct Coess(v_Q(w)) differ");
    } catch (const std::exception& e) {
      col.fail(name + ": " + e.what());
    }
    col.count();
  });
  return col.finish("coess_nash", start);
}

CheckResult check_grassmann_fiberproduct(const SweepBounds& b) {
  auto start = Clock::now();
  struct Job {
    int k, n;
    Permutation w;
  };
  std::vector<Job> jobs;
  for (int n = 2; n <= b.fiber_max_n; ++n)
    for (int k = 1; k < n; ++k)
      for (auto& w : grassmannian_permutations(k, n)) jobs.push_back({k, n, w});
  std::vector<std::unique_ptr<RootSystem>> systems(b.fiber_max_n + 1);
  for (int n = 2; n <= b.fiber_max_n; ++n)
    systems[n] = std::make_unique<RootSystem>(RootSystem::build({Family::A, n - 1}));
  Collector col;
  parallel_for(jobs.size(), b.threads, [&](std::size_t i) {
    const auto& j = jobs[i];
    std::string name = "Gr(" + std::to_string(j.k) + "," + std::to_string(j.n) + ") w=" + j.w.to_string();
    try {
      WeylGroup W(*systems[j.n]);
      auto P = grassmannian_parabolic(j.k, j.n);
      WeylElement we = perm_to_weyl(W, j.w);
      SchubertDatum sd(W, P, we);
      auto graph = eventual_translates(W, we, P);
      auto cd = CovexillaryDatum::from_grassmannian(j.w, j.k);
      for (const auto& fp : schubert_fixed_points(cd)) {
        WeylElement v = perm_to_weyl(W, fp.v);
        auto prod = fiberproduct_count(fp.flag, cd);
        auto fiber = nash_fiber(v, sd).size();
        auto pet = graph.count_at(v);
        if (prod != fiber || fiber != pet)
          col.fail(name + " v=" + fp.v.to_string() + ": fiber product " + std::to_string(prod) + ", Nash fiber " +
                   std::to_string(fiber) + ", translates " + std::to_string(pet));
        col.count();
      }
    } catch (const std::exception& e) {
      col.fail(name + ": " + e.what());
    }
  });
  return col.finish("grassmann_fiberproduct", start);
}

CheckResult check_conjecture(const SweepBounds& b, std::vector<ConjectureReport>* counterexamples) {
  auto start = Clock::now();
  std::vector<Permutation> perms;
  for (int n = 2; n <= b.conjecture_max_n; ++n)
    for (auto& w : covexillary_permutations(n)) perms.push_back(w);
  Collector col;
  std::vector<ConjectureReport> bad(perms.size());
  std::vector<char> is_bad(perms.size(), 0);
  parallel_for(perms.size(), b.threads, [&](std::size_t i) {
    try {
      auto rep = conjecture_check(perms[i]);
      if (rep.mismatches) {
        std::string msg = "w=" + perms[i].to_string() + ":";
        for (const auto& p : rep.points)
          if (!p.match)
            msg += " v=" + p.v.to_string() + " (fiber product " + std::to_string(p.product) + ", translates " +
                   std::to_string(p.peterson_count) + ")";
        col.fail(msg);
        bad[i] = std::move(rep);
        is_bad[i] = 1;
      }
    } catch (const std::exception& e) {
      col.fail("w=" + perms[i].to_string() + ": " + e.what());
    }
    col.count();
  });
  if (counterexamples)
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (is_bad[i]) counterexamples->push_back(std::move(bad[i]));
  return col.finish("conjecture", start);
}

CheckResult check_translate_invariants(const SweepBounds& b) {
  auto start = Clock::now();
  std::vector<CartanType> types;
  for (int n = 1; n <= std::min(b.max_rank_a, 4); ++n) types.push_back({Family::A, n});
  for (int n = 2; n <= b.max_rank_bc; ++n) types.push_back({Family::B, n});
  for (int n = 2; n <= b.max_rank_bc; ++n) types.push_back({Family::C, n});
  if (b.include_d4) types.push_back({Family::D, 4});
  std::vector<std::unique_ptr<RootSystem>> systems;
  std::vector<Item> items;
  for (const auto& t : types) {
    systems.push_back(std::make_unique<RootSystem>(RootSystem::build(t)));
    WeylGroup W(*systems.back());
    for (const auto& P : all_parabolics(t.rank))
      for (const auto& w : W.min_coset_reps(P)) items.push_back({systems.back().get(), P, w});
  }
  Collector col;
  parallel_for(items.size(), b.threads, [&](std::size_t i) {
    const auto& it = items[i];
    WeylGroup W(*it.rs);
    try {
      auto g = eventual_translates(W, it.w, it.P);
      const std::size_t size = g.nodes[g.root].M.size();
      for (const auto& s : g.nodes)
        if (s.M.size() != size) {
          col.fail(datum_name(*it.rs, it.P, W, it.w) + ": |M| changes along a path");
          break;
        }
    } catch (const std::exception& e) {
      col.fail(datum_name(*it.rs, it.P, W, it.w) + ": " + e.what());
    }
    col.count();
  });
  return col.finish("translate_invariants", start);
}

}  // namespace nash
