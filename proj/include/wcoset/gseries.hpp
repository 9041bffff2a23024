#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wcoset/weight.hpp"

namespace wcoset {

/* Truncated q-series with big-integer coefficients. Exponents are
   offset + g for integer grades g in [0, order]; everything above order is
   unknown, not zero. */
class QSeries {
 public:
  QSeries() = default;
  QSeries(Rat offset, int order) : offset_(std::move(offset)), coeff_(static_cast<size_t>(order) + 1) {}

  const Rat& offset() const { return offset_; }
  int order() const { return static_cast<int>(coeff_.size()) - 1; }

  const Int& at(int g) const { return coeff_[static_cast<size_t>(g)]; }
  Int& at(int g) { return coeff_[static_cast<size_t>(g)]; }
  const std::vector<Int>& coeffs() const { return coeff_; }

  bool is_zero() const;
  // Drops leading zero grades so offset() points at the first nonzero
  // coefficient; order shrinks accordingly. No-op on the zero series.
  QSeries normalized() const;

  QSeries shifted(const Rat& dq) const;  // exponent shift, grades untouched

  std::string serialize() const;  // rank-0 character schema
  static QSeries deserialize(const std::string& json_text);

  friend QSeries add(const QSeries& a, const QSeries& b);
  friend QSeries mul(const QSeries& a, const QSeries& b);
  friend bool equal_through_common_order(const QSeries& a, const QSeries& b);

 private:
  Rat offset_ = 0;
  std::vector<Int> coeff_{Int(0)};
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
bool equal_through_common_order(const QSeries& a, const QSeries& b);

// prod_{j>=1} (1-q^j)^{-colors} through q^order.
QSeries colored_partition_series(int colors, int order);

/* Formal character truncated at a fixed total grade: offset + grade for
   grade in [0, order], each grade a sparse weight -> multiplicity map.
   Immutable by convention outside construction code; ops return new values. */
class GradedCharacter {
 public:
  GradedCharacter() = default;
  GradedCharacter(int rank, Rat offset, int order)
      : rank_(rank), offset_(std::move(offset)), grades_(static_cast<size_t>(order) + 1) {}

  int rank() const { return rank_; }
  const Rat& offset() const { return offset_; }
  int order() const { return static_cast<int>(grades_.size()) - 1; }

  const std::map<Weight, Int>& grade(int g) const { return grades_[static_cast<size_t>(g)]; }
  std::map<Weight, Int>& grade_mut(int g) { return grades_[static_cast<size_t>(g)]; }

  void set(int g, const Weight& w, Int c);
  void accumulate(int g, const Weight& w, const Int& c);  // drops entries hitting 0
  Int coefficient(int g, const Weight& w) const;

  bool all_nonnegative() const;
  size_t term_count() const;

  std::string serialize() const;
  static GradedCharacter deserialize(const std::string& json_text);

 private:
  int rank_ = 0;
  Rat offset_ = 0;
  std::vector<std::map<Weight, Int>> grades_{1};
};

GradedCharacter add(const GradedCharacter& a, const GradedCharacter& b);
GradedCharacter mul(const GradedCharacter& a, const GradedCharacter& b);
GradedCharacter scale(const Int& c, const GradedCharacter& a);

// Multiply by a pure q-series (rank preserved, offsets add).
GradedCharacter mul(const GradedCharacter& a, const QSeries& s);

// Forget weights: coefficient at grade g becomes the total multiplicity.
QSeries specialize(const GradedCharacter& a);

// Apply a rational linear map (rows = target coordinates) to every weight.
GradedCharacter map_weights(const GradedCharacter& a,
                            const std::vector<std::vector<Rat>>& matrix);

bool equal_through_common_order(const GradedCharacter& a, const GradedCharacter& b);

// In-place multiplication by 1/(1 - q^dg z^dw): Y[g][w] += Y[g-dg][w-dw],
// ascending grades. The workhorse behind every denominator inversion.
void geometric_inverse_factor(GradedCharacter& y, int dg, const Weight& dw);

// First (grade, weight, lhs, rhs) where the two characters disagree, if any,
// scanning grades then weights in canonical order through the common reliable
// order.
struct Mismatch {
  int grade = 0;
  Weight weight;
  Int lhs, rhs;
};
bool first_mismatch(const GradedCharacter& a, const GradedCharacter& b, Mismatch* out);

}  // namespace wcoset
