#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "wcoset/affchar.hpp"

namespace wcoset {

// A family of candidate modules for the peeling engine. Labels are reused as
// weights (the extremal weight identifies the label; distinct labels always
// have distinct extremal weights).
struct ModuleFamily {
  std::string id;
  // Label whose extremal weight is w, if any.
  std::function<std::optional<Weight>(const Weight& w)> find;
  // Lowest conformal weight of the labelled module.
  std::function<Rat(const Weight& label)> offset;
  // Character through q^order above that offset.
  std::function<GradedCharacter(const Weight& label, int order)> character;
  // Partial order used to pick extremal terms: true iff a <= b in the
  // family's positivity cone. Equality must return true.
  std::function<bool(const Weight& a, const Weight& b)> leq;
};

ModuleFamily integrable_family(const RootSystem& rs, int level);
// Fock modules of every momentum at fixed kappa; order is trivial (columns
// never interact).
ModuleFamily fock_family(const RootSystem& rs, const Rat& kappa);

struct BranchingTable {
  std::string family;
  int order = 0;
  std::map<std::string, std::string> inputs;
  std::map<Weight, QSeries> entries;  // label -> multiplicity series

  std::string serialize() const;
  std::string serialize_csv() const;
};

// Greedy grade-by-grade peeling of `total` into family members. Exact; throws
// NegativeMultiplicity / UnrecognizedExtremal / UnboundedDenominator when the
// input is not a nonnegative combination of family characters on the grid.
BranchingTable decompose(const GradedCharacter& total, const ModuleFamily& family);

// GKO branching of L_k(mu) (x) L_1(nu) into level k+1 integrables. Checks the
// selection rule and the predicted lowest exponents w_h(ell, mu-(ell+h)lambda)
// and throws DimensionMismatch if either fails.
BranchingTable gko_branching(const RootSystem& rs, int k, const Weight& mu, const Weight& nu,
                             int order);

// Peel free-boson Fock modules off a character graded by charge columns.
BranchingTable heisenberg_coset_decompose(const GradedCharacter& total, const RootSystem& charge_rs,
                                          const Rat& kappa);

// Branch an sl_{m+1} character to sl_m + charge: first m-1 Dynkin labels kept,
// charge = sum_j j x_j (integral for integral weights). Output rank is m.
GradedCharacter restrict_typeA(const GradedCharacter& x, int m);
std::vector<std::vector<Rat>> restrict_typeA_matrix(int m);

// Exact check of the level-k Weyl-module decomposition against Verma
// multiplicity series at a generic rational level. Returns true when the
// identity holds through the requested order; otherwise fills `out` with the
// first failing grade/weight and both coefficients.
struct GenericCheckResult {
  bool holds = true;
  bool dominated = true;  // free-field side >= module side coefficientwise
  Mismatch mismatch;      // valid when !holds
  int lambda_terms = 0;   // number of contributing highest weights
};
GenericCheckResult generic_decomposition_check(const RootSystem& rs, const Rat& k,
                                               const Weight& mu, const Weight& nu, int order);

}  // namespace wcoset
