#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "wcoset/branching.hpp"
#include "wcoset/verify.hpp"

using namespace wcoset;

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidFamilyRank:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::UnsupportedParams:
      return 2;
    default:
      return 1;
  }
}

Weight parse_checked_weight(const RootSystem& rs, const std::string& text, const char* name) {
  const Weight w = parse_weight(text);
  if (static_cast<int>(w.size()) != rs.rank())
    fail(ErrorKind::InvalidArgument,
         std::string(name) + " needs " + std::to_string(rs.rank()) + " labels for " + rs.name());
  return w;
}

Weight parse_level_dominant(const RootSystem& rs, const std::string& text, int level,
                            const char* name) {
  const Weight w = parse_checked_weight(rs, text, name);
  if (!is_integral(w) || !is_dominant(w) || rs.level_of(w) > level)
    fail(ErrorKind::InvalidArgument,
         std::string(name) + " must be dominant integral of level <= " + std::to_string(level));
  return w;
}

struct BudgetFlags {
  int max_rank = -1, max_level = -1, max_order = -1;
  Budget resolve() const {
    Budget b = budget_from_env(Budget{});
    if (max_rank >= 0) b.max_rank = max_rank;
    if (max_level >= 0) b.max_level = max_level;
    if (max_order >= 0) b.max_order = max_order;
    return b;
  }
  void attach(CLI::App* cmd) {
    cmd->add_option("--budget-rank", max_rank, "override the rank budget");
    cmd->add_option("--budget-level", max_level, "override the level budget");
    cmd->add_option("--budget-order", max_order, "override the order budget");
  }
};

std::string character_csv(const GradedCharacter& x) {
  std::ostringstream out;
  out << "offset,grade,weight,coefficient\n";
  for (int g = 0; g <= x.order(); ++g)
    for (const auto& [w, c] : x.grade(g))
      out << to_string(x.offset()) << ',' << g << ",\"" << to_string(w) << "\"," << to_string(c)
          << '\n';
  return out.str();
}

std::string character_text(const GradedCharacter& x) {
  std::ostringstream out;
  out << "offset " << to_string(x.offset()) << ", order " << x.order() << '\n';
  for (int g = 0; g <= x.order(); ++g) {
    if (x.grade(g).empty()) continue;
    out << g << ':';
    for (const auto& [w, c] : x.grade(g)) out << ' ' << to_string(w) << " " << to_string(c);
    out << '\n';
  }
  return out.str();
}

std::string series_csv(const QSeries& s) {
  std::ostringstream out;
  out << "offset,grade,coefficient\n";
  for (int g = 0; g <= s.order(); ++g)
    out << to_string(s.offset()) << ',' << g << ',' << to_string(s.at(g)) << '\n';
  return out.str();
}

std::string series_text(const QSeries& s) {
  std::ostringstream out;
  out << "offset " << to_string(s.offset()) << ", coefficients";
  for (int g = 0; g <= s.order(); ++g) out << ' ' << to_string(s.at(g));
  out << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coset and W-algebra character toolkit"};
  app.require_subcommand(1);

  // ---- char ----
  auto* chr = app.add_subcommand("char", "print one module character");
  std::string chr_algebra = "A1", chr_kind = "integrable", chr_weight = "0";
  std::string chr_level = "0", chr_kappa = "1", chr_rule = "heisenberg", chr_rule_level = "0";
  std::string chr_format = "json";
  int chr_order = 8;
  BudgetFlags chr_budget;
  chr->add_option("--algebra", chr_algebra, "simply-laced algebra name, e.g. A2, D4, E6")
      ->required();
  chr->add_option("--kind", chr_kind, "integrable | frenkel-kac | weyl | fock | w-verma")
      ->check(CLI::IsMember({"integrable", "frenkel-kac", "weyl", "fock", "w-verma"}));
  chr->add_option("--level", chr_level, "level (integer for integrable, rational otherwise)");
  chr->add_option("--weight", chr_weight, "comma-separated Dynkin labels")->required();
  chr->add_option("--order", chr_order, "number of grades above the lowest energy");
  chr->add_option("--kappa", chr_kappa, "Fock two-point normalization");
  chr->add_option("--offset-rule", chr_rule, "fock offset: heisenberg | sugawara | w-shifted")
      ->check(CLI::IsMember({"heisenberg", "sugawara", "w-shifted"}));
  chr->add_option("--rule-level", chr_rule_level, "level parameter for non-default offset rules");
  chr->add_option("--format", chr_format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  chr_budget.attach(chr);

  // ---- branch ----
  auto* branch = app.add_subcommand("branch", "branching multiplicity tables");
  auto* gko = branch->add_subcommand("gko", "diagonal coset branching of L_k x L_1");
  std::string gko_algebra = "A1", gko_mu = "0", gko_nu = "0", gko_format = "json";
  int gko_k = 1, gko_order = 10;
  BudgetFlags gko_budget;
  gko->add_option("--algebra", gko_algebra, "simply-laced algebra name")->required();
  gko->add_option("--k", gko_k, "integer level of the first factor")->required();
  gko->add_option("--mu", gko_mu, "highest weight of the level-k factor")->required();
  gko->add_option("--nu", gko_nu, "highest weight of the level-1 factor")->required();
  gko->add_option("--order", gko_order, "grades to compute");
  gko->add_option("--format", gko_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  gko_budget.attach(gko);
  branch->require_subcommand(1);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"gko", "main1", "levelrank-a", "levelrank-d-cc", "ks-cc", "unitarity",
                             "heisenberg", "ffduality-cc", "coset-cc", "frenkel-kac", "generic"}));
  std::string v_algebra = "A1", v_format = "text";
  int v_k = 1, v_n = 2, v_m = 2, v_order = 8, v_samples = 100, v_pmax = 12;
  std::uint64_t v_seed = 1;
  bool v_timing = false;
  BudgetFlags v_budget;
  verify->add_option("--algebra", v_algebra, "algebra for per-algebra suites");
  verify->add_option("--k", v_k, "integer level for branching suites");
  verify->add_option("--n", v_n, "level parameter for level-rank and chain suites");
  verify->add_option("--m", v_m, "rank parameter for level-rank and chain suites");
  verify->add_option("--order", v_order, "grades to compare");
  verify->add_option("--seed", v_seed, "seed for sampled identities");
  verify->add_option("--samples", v_samples, "number of samples");
  verify->add_option("--pmax", v_pmax, "bound on minimal-series parameters");
  verify->add_option("--format", v_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timing", v_timing, "include wall-clock millis in the report");
  v_budget.attach(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (chr->parsed()) {
      const Budget budget = chr_budget.resolve();
      const RootSystem rs = parse_algebra(chr_algebra);
      const Weight w = parse_checked_weight(rs, chr_weight, "--weight");
      const auto emit = [&](const GradedCharacter& x) {
        if (chr_format == "json")
          std::cout << x.serialize() << '\n';
        else if (chr_format == "csv")
          std::cout << character_csv(x);
        else
          std::cout << character_text(x);
      };
      if (chr_kind == "integrable") {
        const Rat level = parse_rat(chr_level);
        if (!is_integer(level) || level < 0)
          fail(ErrorKind::InvalidArgument, "integrable characters need an integer level >= 0");
        const int m = static_cast<int>(numerator(level));
        enforce_budget(budget, rs.rank(), m, chr_order);
        emit(integrable_character(rs, m, parse_level_dominant(rs, chr_weight, m, "--weight"),
                                  chr_order));
      } else if (chr_kind == "frenkel-kac") {
        enforce_budget(budget, rs.rank(), 1, chr_order);
        emit(frenkel_kac_level1_character(rs, parse_level_dominant(rs, chr_weight, 1, "--weight"),
                                          chr_order));
      } else if (chr_kind == "weyl") {
        enforce_budget(budget, rs.rank(), 0, chr_order);
        emit(weyl_module_character(rs, parse_rat(chr_level), w, chr_order));
      } else if (chr_kind == "fock") {
        enforce_budget(budget, rs.rank(), 0, chr_order);
        const FockOffsetRule rule = chr_rule == "heisenberg" ? FockOffsetRule::Heisenberg
                                    : chr_rule == "sugawara" ? FockOffsetRule::Sugawara
                                                             : FockOffsetRule::WShifted;
        emit(fock_character(rs, parse_rat(chr_kappa), w, chr_order, rule,
                            parse_rat(chr_rule_level)));
      } else {  // w-verma
        enforce_budget(budget, rs.rank(), 0, chr_order);
        const QSeries s = verma_w_character(rs, parse_rat(chr_level), w, chr_order);
        if (chr_format == "json")
          std::cout << s.serialize() << '\n';
        else if (chr_format == "csv")
          std::cout << series_csv(s);
        else
          std::cout << series_text(s);
      }
      return 0;
    }

    if (gko->parsed()) {
      const Budget budget = gko_budget.resolve();
      const RootSystem rs = parse_algebra(gko_algebra);
      if (gko_k < 0) fail(ErrorKind::InvalidArgument, "--k must be a nonnegative integer");
      enforce_budget(budget, rs.rank(), gko_k + 1, gko_order);
      const Weight mu = parse_level_dominant(rs, gko_mu, gko_k, "--mu");
      const Weight nu = parse_level_dominant(rs, gko_nu, 1, "--nu");
      const BranchingTable tb = gko_branching(rs, gko_k, mu, nu, gko_order);
      if (gko_format == "csv")
        std::cout << tb.serialize_csv();
      else
        std::cout << tb.serialize() << '\n';
      return 0;
    }

    // verify
    const Budget budget = v_budget.resolve();
    const auto started = std::chrono::steady_clock::now();
    Report report;
    if (suite == "gko") {
      report = verify_gko(parse_algebra(v_algebra), v_k, v_order, budget);
    } else if (suite == "main1") {
      report = verify_main1_vacuum(parse_algebra(v_algebra), v_k, v_order, budget);
    } else if (suite == "levelrank-a") {
      report = verify_levelrank_A(v_n, v_m, v_order, budget);
    } else if (suite == "levelrank-d-cc") {
      report = verify_levelrank_D_cc(v_n, v_m);
    } else if (suite == "ks-cc") {
      report = verify_ks_cc(v_n, v_m);
    } else if (suite == "unitarity") {
      report = verify_unitarity(parse_algebra(v_algebra), Int(v_pmax));
    } else if (suite == "heisenberg") {
      report = verify_heisenberg_identity(parse_algebra(v_algebra), v_seed, v_samples);
    } else if (suite == "ffduality-cc") {
      report = verify_ffduality_cc(parse_algebra(v_algebra), v_seed, v_samples);
    } else if (suite == "coset-cc") {
      report = verify_coset_cc_identity(parse_algebra(v_algebra), v_seed, v_samples, Int(v_pmax));
    } else if (suite == "frenkel-kac") {
      report = verify_frenkel_kac(parse_algebra(v_algebra), v_order, budget);
    } else {  // generic
      report = verify_generic_decomposition(v_seed, v_order, budget);
    }
    report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - started)
                        .count();
    if (v_format == "json")
      std::cout << report.serialize(v_timing) << '\n';
    else
      std::cout << report.text();
    return report.pass ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error [" << error_kind_name(e.kind) << "]: " << e.what() << '\n';
    return exit_code_for(e.kind);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
