#pragma once

#include <optional>

#include "wcoset/finite_char.hpp"
#include "wcoset/gseries.hpp"
#include "wcoset/root_system.hpp"

namespace wcoset {

// ---- level maps and exact conformal data -------------------------------
//
// Levels are exact rationals throughout; every formula below refuses its
// poles eagerly (PoleLevel / CriticalLevel) instead of returning garbage.

// Coset level map: ell + h = (k+h)/(k+h+1), with h the dual Coxeter number.
Rat ell_of(const RootSystem& rs, const Rat& k);

// k + h = p/q in lowest terms with p >= h (else NotAdmissible); returns the
// minimal-series pair (p, p+q) for the W-algebra at ell_of(k).
struct MinimalSeriesParams {
  Int p, q;
};
MinimalSeriesParams minimal_series_params(const RootSystem& rs, const Rat& k);

Rat sugawara_cc(const RootSystem& rs, const Rat& k);   // k dim g / (k+h)
Rat coset_cc(const RootSystem& rs, const Rat& k);      // c of the GKO coset at level k
Rat w_cc(const RootSystem& rs, const Rat& ell);        // c of W_ell(g)
Rat minimal_cc(const RootSystem& rs, const Int& p, const Int& q);  // (p,q) minimal series
Rat growth(const RootSystem& rs, const Int& p, const Int& q);      // effective growth rate
Rat langlands_dual_level(const RootSystem& rs, const Rat& k);      // (k+h)(k'+h) = 1

Rat sugawara_h(const RootSystem& rs, const Rat& k, const Weight& lambda);
// Lowest conformal weight of the W-module with central character chi_lambda:
// (|lambda+rho|^2 - |rho|^2) / (2(ell+h)) - (lambda|rho).
Rat w_h(const RootSystem& rs, const Rat& ell, const Weight& lambda);

// ---- characters ---------------------------------------------------------

// Integrable irreducible character of level m >= 0, highest weight lambda in
// P^m_+, through q^order relative to the Sugawara offset sugawara_h(m,lambda).
// Weyl-Kac numerator over root-lattice translations; the finite Weyl
// denominator is cancelled exactly, the affine part is inverted geometrically.
GradedCharacter integrable_character(const RootSystem& rs, int m, const Weight& lambda, int order);

// Same module at level 1 via the lattice Fock realization; independent of the
// Weyl-Kac route, used to cross-check it.
GradedCharacter frenkel_kac_level1_character(const RootSystem& rs, const Weight& nu, int order);

enum class FockOffsetRule { Heisenberg, Sugawara, WShifted };

// Rank r free-boson Fock module with momentum lambda: single weight column,
// coefficients p_r(n). kappa scales the two-point normalization; the offset
// rule picks |lambda|^2/(2 kappa), sugawara_h(level,.), or w_h(level,.),
// where `level` is read from the rule parameter.
GradedCharacter fock_character(const RootSystem& rs, const Rat& kappa, const Weight& lambda,
                               int order, FockOffsetRule rule, const Rat& rule_level = Rat(0));

// Character of the Weyl module V_k(lambda) (free over the negative modes):
// finite character at the bottom times the full loop-denominator inverse.
GradedCharacter weyl_module_character(const RootSystem& rs, const Rat& k, const Weight& lambda,
                                      int order);

// Verma character of the principal W-algebra: q^{w_h} prod (1-q^j)^{-rank}.
QSeries verma_w_character(const RootSystem& rs, const Rat& ell, const Weight& lambda, int order);

// Shared memo for integrable characters (pure cache, thread-safe).
const GradedCharacter& integrable_character_cached(const RootSystem& rs, int m,
                                                   const Weight& lambda, int order);

// prod_{n>=1} [(1-q^n)^{rank} prod_{alpha in Delta} (1-q^n z^alpha)]^{-1}
// applied in place to a numerator; exposed for reuse by module code.
void apply_loop_denominator_inverse(const RootSystem& rs, GradedCharacter& x);

}  // namespace wcoset
