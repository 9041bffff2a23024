#pragma once

#include <vector>

#include "wcoset/rat.hpp"

namespace wcoset {

// Weights are coordinate vectors in the fundamental-weight basis (Dynkin
// labels), rational entries. Rank 0 is legal (pure q-series bookkeeping).
using Weight = std::vector<Rat>;

inline Weight add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) fail(ErrorKind::RankMismatch, "weight rank mismatch in add");
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Weight sub(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) fail(ErrorKind::RankMismatch, "weight rank mismatch in sub");
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Weight scale(const Rat& c, const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Weight negate(const Weight& a) { return scale(Rat(-1), a); }

inline Weight zero_weight(int rank) { return Weight(static_cast<size_t>(rank), Rat(0)); }

inline bool is_zero(const Weight& a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

inline bool is_integral(const Weight& a) {
  for (const auto& c : a)
    if (!is_integer(c)) return false;
  return true;
}

inline bool is_dominant(const Weight& a) {
  for (const auto& c : a)
    if (c < 0) return false;
  return true;
}

std::string to_string(const Weight& w);
Weight parse_weight(const std::string& s);  // comma-separated rationals

}  // namespace wcoset
