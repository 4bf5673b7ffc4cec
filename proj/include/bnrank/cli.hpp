#pragma once

// Command-line front end. `run_cli` is the whole program minus main(), so it
// can be driven from tests.
//
// Exit codes: 0 success / verified, 1 verification mismatch, 2 invalid
// arguments, 3 budget exhausted (bounds emitted).

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bnrank/a_plus.hpp"
#include "bnrank/errors.hpp"
#include "bnrank/ranks.hpp"
#include "bnrank/report.hpp"
#include "bnrank/search.hpp"
#include "bnrank/table_io.hpp"
#include "bnrank/verify.hpp"

namespace bnrank {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitBudget = 3 };

// Environment variable overriding the default wall-clock budget (seconds).
inline constexpr const char* kBudgetEnv = "BNRANK_BUDGET";
inline constexpr double kDefaultBudgetSeconds = 60.0;
inline constexpr std::uint64_t kDefaultNodeLimit = 100'000'000;

struct CommandConfig {
  std::string subcommand;
  int n = 0;
  double budget_seconds = kDefaultBudgetSeconds;
  std::uint64_t node_limit = kDefaultNodeLimit;
  std::string out_path;
  std::string format = "text";
  std::string which;
  bool strata_caps = false;
  bool verbose = false;

  SearchBudget budget() const {
    return {std::chrono::milliseconds(static_cast<std::int64_t>(budget_seconds * 1000.0)), node_limit};
  }
};

namespace detail {

inline double default_budget_seconds() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      double v = std::stod(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultBudgetSeconds;
}

inline void require_table_n(int n) {
  if (n > kMaxTableN) {
    throw InvalidParameter("the Cayley table of A+(B_" + std::to_string(n)
                           + ") is too large; this command supports n <= " + std::to_string(kMaxTableN));
  }
}

inline std::string count_breakdown(int n) {
  std::ostringstream out;
  if (n == 1) {
    out << "3 = |{xi(0), xi(1,1), ns(1,1;[1])}|\n";
    out << "constants: 2\n1-support maps: 1\n";
    return out.str();
  }
  const BigInt nn = BigInt(n) * n;
  const BigInt f = big_factorial(n);
  const BigInt total = (f + 1) * nn + nn * nn + 1;
  out << total << " = (" << n << "!+1)·" << nn << " + " << nn * nn << " + 1\n";
  out << "constants: " << nn + 1 << "\n";
  out << "singleton-support maps: " << nn * nn << "\n";
  out << "n-support maps: " << f * nn << "\n";
  return out.str();
}

inline int rank_exit(const RankValue& v) { return v.exact() ? kExitOk : kExitBudget; }

}  // namespace detail

inline int execute(const CommandConfig& cfg, std::ostream& out) {
  const int n = cfg.n;
  const bool json = cfg.format == "json";
  const auto budget = cfg.budget();

  if (cfg.subcommand == "count") {
    if (json) {
      const BigInt nn = BigInt(n) * n;
      nlohmann::json j;
      j["n"] = n;
      if (n == 1) {
        j["total"] = 3;
      } else {
        j["total"] = big_to_json((big_factorial(n) + 1) * nn + nn * nn + 1);
        j["constants"] = big_to_json(nn + 1);
        j["singleton"] = big_to_json(nn * nn);
        j["nsupport"] = big_to_json(big_factorial(n) * nn);
      }
      out << j.dump(2) << "\n";
    } else {
      out << detail::count_breakdown(n);
    }
    return kExitOk;
  }

  if (cfg.subcommand == "rank" && cfg.which == "formulas") {
    const auto r = rank_formulas(n);
    out << (json ? rank_report_json(r, nullptr).dump(2) + "\n" : rank_report_text(r, nullptr));
    return kExitOk;
  }

  if (cfg.subcommand == "verify" && n > kMaxTableN) {
    const auto v = verify_all(n, budget);
    out << (json ? verification_json(v, nullptr).dump(2) + "\n" : verification_text(v));
    return v.all_passed() ? kExitBudget : kExitMismatch;
  }

  detail::require_table_n(n);
  const auto a = a_plus_semigroup(n);

  if (cfg.subcommand == "build") {
    const auto text = export_table(a, cfg.format == "csv" ? TableFormat::Csv : TableFormat::Json);
    if (cfg.out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.out_path, std::ios::binary);
      if (!f) throw InvalidParameter("cannot open " + cfg.out_path);
      f << text;
      out << "wrote " << a.size() << "x" << a.size() << " table to " << cfg.out_path << "\n";
    }
    return kExitOk;
  }

  if (cfg.subcommand == "greens") {
    const auto r = greens_classes(a, Side::Right);
    const auto l = greens_classes(a, Side::Left);
    std::size_t nsupp = 0;
    bool match = true;
    std::size_t expected = factorial(n) * static_cast<std::size_t>(n);
    if (n >= 2) {
      nsupp = nsupport_r_class_count(n, a);
      match = nsupp == expected && greens_match_projections(n, a, Side::Right)
              && greens_match_projections(n, a, Side::Left);
    }
    if (json) {
      nlohmann::json j{{"n", n}, {"r_classes", r.classes.size()}, {"l_classes", l.classes.size()}};
      if (n >= 2) {
        j["nsupport_r_classes"] = nsupp;
        j["expected_nsupport_r_classes"] = expected;
        j["characterization_matches"] = match;
      }
      out << j.dump(2) << "\n";
    } else {
      out << "R-classes: " << r.classes.size() << "\n";
      out << "L-classes: " << l.classes.size() << "\n";
      if (n >= 2) {
        out << "n-support R-classes: " << nsupp << " (expected (n!)n = " << expected << ")\n";
        out << "support/projection characterization: " << (match ? "matches" : "MISMATCH") << "\n";
      }
    }
    return match ? kExitOk : kExitMismatch;
  }

  auto emit_rank = [&](int k, const RankValue& v) {
    RankReport r;
    r.n = n;
    r[k] = v;
    out << (json ? rank_report_json(r, &a).dump(2) + "\n" : rank_report_text(r, &a));
    return detail::rank_exit(v);
  };

  if (cfg.subcommand == "rank") {
    if (cfg.which == "r1") {
      auto v = from_outcome(small_rank(a, budget), Provenance::ExactSearch);
      return emit_rank(1, v);
    }
    if (cfg.which == "r2") {
      auto o = n <= 2 ? lower_rank_exact(a, budget) : a_plus_lower_rank(n, a, budget);
      return emit_rank(2, from_outcome(o, n <= 2 ? Provenance::ExactSearch : Provenance::Witness));
    }
    if (cfg.which == "r3") {
      if (n == 1) return emit_rank(3, from_outcome(intermediate_rank_search(a, budget), Provenance::ExactSearch));
      auto check = intermediate_rank_verify(n, a, budget);
      auto v = RankValue::exact_value(check.value, Provenance::Witness);
      v.witness = check.witness;
      return emit_rank(3, v);
    }
    if (cfg.which == "r4") return emit_rank(4, a_plus_upper_rank(n, a, budget, cfg.strata_caps));
    if (cfg.which == "r5") {
      return emit_rank(5, from_outcome(large_rank_exact(a, static_cast<std::size_t>(n), budget),
                                       Provenance::ExactSearch));
    }
    throw InvalidParameter("unknown rank '" + cfg.which + "'");
  }

  if (cfg.subcommand == "search-r4") {
    const auto v = a_plus_upper_rank(n, a, budget, cfg.strata_caps);
    if (json) {
      RankReport r;
      r.n = n;
      r[4] = v;
      out << rank_report_json(r, &a).dump(2) << "\n";
    } else {
      if (v.exact()) {
        out << "r4 = " << v.lower << " (exhaustive search complete)\n";
      } else {
        out << "r4 in [" << v.lower << ", " << v.upper << "] (budget exhausted)\n";
      }
      if (v.witness) {
        out << "independent set of size " << v.witness->size() << ":";
        for (const auto& l : a.labels_of(*v.witness)) out << " " << l;
        out << "\n";
      }
    }
    return detail::rank_exit(v);
  }

  if (cfg.subcommand == "prime") {
    BudgetMeter meter(budget);
    bool exhausted = false;
    const auto p = smallest_prime_subset(a, static_cast<std::size_t>(n), meter, exhausted);
    if (json) {
      nlohmann::json j{{"n", n}};
      if (p) {
        j["prime_subset"] = a.labels_of(*p);
        j["r5"] = a.size() - p->size() + 1;
      } else {
        j["prime_subset"] = nullptr;
      }
      out << j.dump(2) << "\n";
    } else if (p) {
      out << "smallest prime subset (size " << p->size() << "):";
      for (const auto& l : a.labels_of(*p)) out << " " << l;
      out << "\nr5 = " << a.size() - p->size() + 1 << "\n";
    } else {
      out << "no proper prime subset of size <= " << n << (exhausted ? " found before the budget ran out" : "")
          << "\n";
    }
    return p ? kExitOk : kExitBudget;
  }

  if (cfg.subcommand == "verify") {
    const auto v = verify_all(n, budget);
    out << (json ? verification_json(v, &a).dump(2) + "\n" : verification_text(v));
    if (!v.all_passed()) return kExitMismatch;
    return v.budget_exhausted ? kExitBudget : kExitOk;
  }

  throw InvalidParameter("unknown subcommand '" + cfg.subcommand + "'");
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rank computations for the additive semigroup A+(B_n)", "bnrank"};
  app.require_subcommand(1, 1);
  CommandConfig cfg;
  cfg.budget_seconds = detail::default_budget_seconds();

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Degree n of the Brandt semigroup B_n")->required()->check(CLI::PositiveNumber);
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget_seconds, "Wall-clock budget in seconds")
        ->check(CLI::PositiveNumber);
    sub->add_option("--nodes", cfg.node_limit, "Search node limit")->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(choices));
  };

  auto* build = app.add_subcommand("build", "Emit the Cayley table of A+(B_n)");
  add_n(build);
  build->add_option("--out", cfg.out_path, "Output file (default: stdout)");
  cfg.format = "json";
  add_format(build, {"json", "csv"});

  auto* count = app.add_subcommand("count", "Element count and its breakdown by support");
  add_n(count);
  add_format(count, {"text", "json"});

  auto* greens = app.add_subcommand("greens", "Green's R and L classes");
  add_n(greens);
  add_format(greens, {"text", "json"});

  auto* rank = app.add_subcommand("rank", "Compute one rank, or print the closed forms");
  add_n(rank);
  rank->add_option("--which", cfg.which, "Rank to compute")
      ->required()
      ->check(CLI::IsMember({"r1", "r2", "r3", "r4", "r5", "formulas"}));
  add_budget(rank);
  rank->add_flag("--strata-caps", cfg.strata_caps, "Cap independent-set strata (r4)");
  add_format(rank, {"text", "json"});

  auto* search = app.add_subcommand("search-r4", "Branch and bound for the upper rank r4");
  add_n(search);
  add_budget(search);
  search->add_flag("--strata-caps", cfg.strata_caps, "Cap independent-set strata by support");
  add_format(search, {"text", "json"});

  auto* prime = app.add_subcommand("prime", "Smallest proper prime subset");
  add_n(prime);
  add_budget(prime);
  add_format(prime, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "Run every structural and rank check");
  add_n(verify);
  add_budget(verify);
  add_format(verify, {"text", "json"});

  app.add_flag("-v,--verbose", cfg.verbose, "Report timings on stderr");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.subcommand != "build" && cfg.format == "json" && !app.get_subcommands().front()->count("--format")) {
    cfg.format = "text";
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const int code = execute(cfg, out);
    if (cfg.verbose) {
      err << "elapsed " << std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count()
          << " ms\n";
    }
    return code;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TheoremMismatch& e) {
    err << "mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}

}  // namespace bnrank
