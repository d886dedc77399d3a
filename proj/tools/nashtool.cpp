// nashtool: command-line front end for the Nash blow-up library.
//
//   nashtool nash       --type A3 --levi 1,3 --word 1,3,2
//   nashtool peterson   --type A3 --levi 1,3 --word 1,3,2 --format dot
//   nashtool grassmann  --n 8 --k 3 --perm 2,5,7,1,3,4,6,8
//   nashtool conjecture --perm 5,2,3,4,1 | --max-n 6
//   nashtool verify
//
// Exit codes: 0 ok, 1 check failure or invariant violation, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nash/error.hpp"
#include "nash/grassmann.hpp"
#include "nash/nashcore.hpp"
#include "nash/peterson.hpp"
#include "nash/report.hpp"
#include "nash/verify.hpp"
#include "nash/zelevinsky.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string type;
  int rank = 0;
  std::string levi;
  std::string word;
  std::string perm;
  int n = 0;
  int k = 0;
  int max_n = 0;
  std::string format = "text";
  std::string output;
  nash::SweepBounds bounds;
  bool with_conjecture = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

nash::CartanType cartan_of(const RunConfig& cfg) {
  if (cfg.type.empty()) throw UsageError("--type is required");
  std::string t = cfg.type;
  if (cfg.rank > 0) t += std::to_string(cfg.rank);
  return nash::CartanType::parse(t);
}

// Writes to --output when given, stdout otherwise.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw UsageError("cannot open " + cfg.output + " for writing");
  out << text;
}

std::string dump(const nash::json& j) { return j.dump(2) + "\n"; }

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (cfg.format == a) return;
  throw UsageError("--format " + cfg.format + " is not available for this command");
}

int cmd_nash(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  auto rs = nash::RootSystem::build(cartan_of(cfg));
  nash::WeylGroup W(rs);
  auto P = nash::ParabolicSubset::from_levi(rs.rank(), nash::parse_index_list(cfg.levi));
  nash::SchubertDatum d(W, P, W.from_word(nash::parse_index_list(cfg.word)));
  auto data = nash::nash_data(d);
  emit(cfg, cfg.format == "json" ? dump(nash::nash_json(d, data)) : nash::nash_text(d, data));
  return kOk;
}

int cmd_peterson(const RunConfig& cfg) {
  auto rs = nash::RootSystem::build(cartan_of(cfg));
  nash::WeylGroup W(rs);
  auto P = nash::ParabolicSubset::from_levi(rs.rank(), nash::parse_index_list(cfg.levi));
  auto w = W.from_word(nash::parse_index_list(cfg.word));
  auto g = nash::eventual_translates(W, w, P);
  // The v column needs a cominuscule datum; other parabolics only get (v~, N).
  std::optional<nash::SchubertDatum> d;
  try {
    d.emplace(W, P, w);
  } catch (const nash::Error&) {
  }
  const nash::SchubertDatum* dp = d ? &*d : nullptr;
  if (cfg.format == "dot")
    emit(cfg, nash::peterson_dot(W, g));
  else if (cfg.format == "json")
    emit(cfg, dump(nash::peterson_json(W, P, g, dp)));
  else
    emit(cfg, nash::peterson_text(W, g, dp));
  return kOk;
}

int cmd_grassmann(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  if (cfg.perm.empty()) throw UsageError("--perm is required");
  auto w = nash::Permutation::parse(cfg.perm);
  int n = cfg.n ? cfg.n : w.size();
  if (n != w.size()) throw UsageError("--n " + std::to_string(n) + " does not match the permutation size");
  int k = cfg.k;
  if (k == 0) {
    auto des = w.descents();
    if (des.size() != 1) throw UsageError("--k is required unless the permutation has exactly one descent");
    k = des.front();
  }
  auto c = nash::config_description(w, k, n);
  emit(cfg, cfg.format == "json" ? dump(nash::grassmann_json(c)) : nash::grassmann_text(c));
  return kOk;
}

int cmd_conjecture(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  if (cfg.perm.empty() == (cfg.max_n == 0)) throw UsageError("give exactly one of --perm or --max-n");
  if (!cfg.perm.empty()) {
    auto rep = nash::conjecture_check(nash::Permutation::parse(cfg.perm));
    emit(cfg, cfg.format == "json" ? dump(nash::conjecture_json(rep)) : nash::conjecture_text(rep));
    return rep.mismatches ? kFailed : kOk;
  }
  auto b = cfg.bounds;
  b.conjecture_max_n = cfg.max_n;
  std::vector<nash::ConjectureReport> bad;
  auto res = nash::check_conjecture(b, &bad);
  if (cfg.format == "json") {
    nash::json j;
    j["max_n"] = cfg.max_n;
    j["seed"] = "minimal coset representative";
    j["checked"] = res.checked;
    j["counterexamples"] = nash::json::array();
    for (const auto& r : bad) j["counterexamples"].push_back(nash::conjecture_json(r));
    j["errors"] = nash::json::array();
    if (res.failures.size() > bad.size())
      for (const auto& f : res.failures)
        if (f.find("fiber product") == std::string::npos) j["errors"].push_back(f);
    emit(cfg, dump(j));
  } else {
    std::string out = "covexillary permutations checked: " + std::to_string(res.checked) + "\n";
    out += "counterexamples: " + std::to_string(bad.size()) + "\n";
    for (const auto& r : bad) out += nash::conjecture_text(r);
    for (const auto& f : res.failures)
      if (f.find("fiber product") == std::string::npos) out += "error: " + f + "\n";
    emit(cfg, out);
  }
  return res.passed() ? kOk : kFailed;
}

int cmd_verify(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  std::vector<nash::CheckResult> results{
      nash::check_theorem2(cfg.bounds), nash::check_singular_locus(cfg.bounds), nash::check_coess_nash(cfg.bounds),
      nash::check_grassmann_fiberproduct(cfg.bounds), nash::check_translate_invariants(cfg.bounds)};
  if (cfg.with_conjecture) results.push_back(nash::check_conjecture(cfg.bounds));
  bool ok = true;
  if (cfg.format == "json") {
    nash::json j = nash::json::array();
    for (const auto& r : results)
      j.push_back({{"check", r.name}, {"passed", r.passed()}, {"checked", r.checked}, {"failures", r.failures}});
    emit(cfg, dump(j));
  } else {
    std::string out;
    for (const auto& r : results) {
      out += (r.passed() ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.checked) + " checked)\n";
      for (const auto& f : r.failures) out += "  " + f + "\n";
    }
    emit(cfg, out);
  }
  for (const auto& r : results) ok = ok && r.passed();
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash blow-ups of cominuscule Schubert varieties"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Cartan type, e.g. A3 or A (with --rank)")->required();
    sub->add_option("--rank", cfg.rank, "rank, when --type is only a letter")->check(CLI::Range(1, 12));
    sub->add_option("--levi", cfg.levi, "simple indices inside the Levi, e.g. 1,3")->required();
    sub->add_option("--word", cfg.word, "word for w in simple reflections, e.g. 1,3,2 (empty or e for identity)")
        ->required();
  };
  auto add_output = [&](CLI::App* sub, const std::string& formats) {
    sub->add_option("--format", cfg.format, formats)->capture_default_str();
    sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
  };

  auto* nash_cmd = app.add_subcommand("nash", "Delta_w, Q, fixed points and fibers of the Nash blow-up");
  add_group(nash_cmd);
  add_output(nash_cmd, "text|json");

  auto* pet_cmd = app.add_subcommand("peterson", "eventual Peterson translates and their graph");
  add_group(pet_cmd);
  add_output(pet_cmd, "text|json|dot");

  auto* gr_cmd = app.add_subcommand("grassmann", "Grassmannian permutation data and Nash smoothness");
  gr_cmd->add_option("--perm", cfg.perm, "one-line notation, e.g. 2,5,7,1,3,4,6,8")->required();
  gr_cmd->add_option("--n", cfg.n, "ambient dimension")->check(CLI::Range(1, 20));
  gr_cmd->add_option("--k", cfg.k, "descent position")->check(CLI::Range(1, 19));
  add_output(gr_cmd, "text|json");

  auto* conj_cmd = app.add_subcommand("conjecture", "compare fiber-product and Peterson counts for covexillary w");
  conj_cmd->add_option("--perm", cfg.perm, "a single covexillary permutation");
  conj_cmd->add_option("--max-n", cfg.max_n, "sweep all covexillary w in S_n for n up to this")
      ->check(CLI::Range(1, 8));
  conj_cmd->add_option("--threads", cfg.bounds.threads, "worker threads (0: all cores)");
  add_output(conj_cmd, "text|json");

  auto* ver_cmd = app.add_subcommand("verify", "exhaustive property checks");
  ver_cmd->add_option("--max-rank-a", cfg.bounds.max_rank_a, "A_n sweep bound")->check(CLI::Range(1, 7));
  ver_cmd->add_option("--max-rank-bc", cfg.bounds.max_rank_bc, "B_n / C_n sweep bound")->check(CLI::Range(2, 5));
  ver_cmd->add_flag("!--no-d4", cfg.bounds.include_d4, "skip D4");
  ver_cmd->add_option("--coess-max-n", cfg.bounds.coess_max_n, "Nash coessential formula bound")->check(CLI::Range(2, 12));
  ver_cmd->add_option("--fiber-max-n", cfg.bounds.fiber_max_n, "Grassmannian fiber-product bound")
      ->check(CLI::Range(2, 9));
  ver_cmd->add_flag("--with-conjecture", cfg.with_conjecture, "also run the covexillary conjecture sweep");
  ver_cmd->add_option("--conjecture-max-n", cfg.bounds.conjecture_max_n, "conjecture sweep bound")
      ->check(CLI::Range(1, 8));
  ver_cmd->add_option("--threads", cfg.bounds.threads, "worker threads (0: all cores)");
  add_output(ver_cmd, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*nash_cmd) return cmd_nash(cfg);
    if (*pet_cmd) return cmd_peterson(cfg);
    if (*gr_cmd) return cmd_grassmann(cfg);
    if (*conj_cmd) return cmd_conjecture(cfg);
    if (*ver_cmd) return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nash::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kFailed;
  } catch (const nash::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
