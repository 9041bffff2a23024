#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wcoset/branching.hpp"

namespace wcoset {

// Desk-scale guard rails for character-level suites; central-charge suites are
// plain rational arithmetic and ignore them. Overridable from the CLI and the
// WCOSET_BUDGET environment variable (JSON).
struct Budget {
  int max_rank = 4;
  int max_level = 3;
  int max_order = 10;
};
Budget budget_from_env(Budget base);
void enforce_budget(const Budget& b, int rank, int level, int order);

struct Check {
  std::string desc;
  std::string anchor;  // stable identity name of the fact being checked
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::map<std::string, std::string> inputs;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  bool pass = true;
  long long millis = 0;

  void add(std::string desc, std::string anchor, std::string expected, std::string actual);
  void add_bool(std::string desc, std::string anchor, bool ok);
  std::string serialize(bool with_millis) const;
  std::string text() const;
};

// Branching suites.
Report verify_gko(const RootSystem& rs, int k, int order, const Budget& b);
Report verify_main1_vacuum(const RootSystem& rs, int k, int order, const Budget& b);

// Coset realizations of the A-series W-algebras; central charges always, full
// characters for small (n, m) when order > 0.
Report verify_levelrank_A(int n, int m, int order, const Budget& b);
Report verify_levelrank_D_cc(int n, int m);
Report verify_ks_cc(int n_max, int m_max);

// Exact rational identities, one algebra at a time.
Report verify_unitarity(const RootSystem& rs, const Int& pmax);
Report verify_heisenberg_identity(const RootSystem& rs, std::uint64_t seed, int samples);
Report verify_ffduality_cc(const RootSystem& rs, std::uint64_t seed, int samples);
Report verify_coset_cc_identity(const RootSystem& rs, std::uint64_t seed, int samples,
                                const Int& pmax);

// Character cross-checks.
Report verify_frenkel_kac(const RootSystem& rs, int order, const Budget& b);
Report verify_generic_decomposition(std::uint64_t seed, int order, const Budget& b);

}  // namespace wcoset
