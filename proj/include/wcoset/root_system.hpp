#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wcoset/weight.hpp"

namespace wcoset {

enum class Series : char { A = 'A', D = 'D', E = 'E' };

// Simply-laced root system data, long roots normalized to (alpha|alpha) = 2.
// Weights live in the fundamental-weight basis throughout, so the invariant
// form on weights is the inverse Cartan matrix. Weyl groups are never stored;
// everything orbit-like goes through simple reflections.
class RootSystem {
 public:
  RootSystem(Series s, int rank);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, static_cast<char>(series_)) + std::to_string(rank_); }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<Rat>>& inverse_cartan() const { return inv_cartan_; }

  // Positive roots in weight coordinates, ordered by height.
  const std::vector<Weight>& positive_roots() const { return pos_roots_; }
  // Same roots in simple-root integer coordinates.
  const std::vector<std::vector<int>>& positive_root_coords() const { return pos_root_coords_; }
  size_t num_positive_roots() const { return pos_roots_.size(); }

  const Weight& simple_root(int i) const { return simple_roots_[static_cast<size_t>(i)]; }
  const Weight& highest_root() const { return pos_roots_.back(); }
  // Root-basis coefficients of the highest root (= comarks, simply laced).
  const std::vector<int>& marks() const { return marks_; }

  int dual_coxeter() const { return dual_coxeter_; }
  int coxeter() const { return dual_coxeter_; }  // equal in the simply-laced case
  Int dimension() const { return dimension_; }   // rank + number of roots
  const Weight& rho() const { return rho_; }

  // Invariant bilinear form (lambda|mu) = lambda^T C^{-1} mu.
  Rat inner(const Weight& a, const Weight& b) const;
  Rat norm2(const Weight& a) const { return inner(a, a); }

  // <lambda, alpha_i^vee> is just the i-th coordinate; kept for readability.
  Rat pairing_with_coroot(const Weight& w, int i) const { return w[static_cast<size_t>(i)]; }

  Weight reflect(const Weight& w, int i) const;  // simple reflection s_i

  // Writes w in the simple-root basis. Integrality of the result is the
  // root-lattice test.
  std::vector<Rat> root_coordinates(const Weight& w) const;
  Weight from_root_coordinates(const std::vector<Rat>& c) const;

  bool in_root_lattice(const Weight& w) const;  // throws NonIntegralWeight off P
  // lambda - mu in the nonnegative integer span of simple roots.
  bool root_cone_leq(const Weight& mu, const Weight& lambda) const;

  // Dominant representative of the Weyl orbit; det tracks the sign of the
  // reducing word. Works for arbitrary rational coordinates.
  std::pair<Weight, int> dominize(const Weight& w) const;

  // Full Weyl orbit of a dominant weight (BFS over simple reflections).
  std::vector<Weight> orbit(const Weight& dominant) const;

  // All dominant integral weights with (lambda|theta) <= m.
  std::vector<Weight> dominant_weights_of_level(int m) const;
  Rat level_of(const Weight& w) const;  // (w|theta)

  // Gram matrix of the simple roots (= Cartan matrix, as exact rationals).
  std::vector<std::vector<Rat>> root_gram() const;

 private:
  Series series_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rat>> inv_cartan_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> pos_roots_;
  std::vector<std::vector<int>> pos_root_coords_;
  std::vector<int> marks_;
  int dual_coxeter_ = 0;
  Int dimension_ = 0;
  Weight rho_;

  void build_cartan();
  void build_roots();
};

RootSystem parse_algebra(const std::string& name);  // "A1", "D4", "E8", ...

}  // namespace wcoset
