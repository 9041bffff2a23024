#include "wcoset/gseries.hpp"

#include <nlohmann/json.hpp>

namespace wcoset {

using Json = nlohmann::ordered_json;

namespace {

// offsets must sit on one integer grid to share grades
Int grid_gap(const Rat& a, const Rat& b) {
  const Rat d = a - b;
  if (!is_integer(d)) fail(ErrorKind::GridMismatch, "offsets differ by a non-integer");
  return numerator(d);
}

int checked_int(const Int& x) {
  if (x > 1000000000 || x < -1000000000) fail(ErrorKind::Internal, "grade out of range");
  return static_cast<int>(x);
}

}  // namespace

bool QSeries::is_zero() const {
  for (const auto& c : coeff_)
    if (c != 0) return false;
  return true;
}

QSeries QSeries::normalized() const {
  size_t g0 = 0;
  while (g0 < coeff_.size() && coeff_[g0] == 0) ++g0;
  if (g0 == 0 || g0 == coeff_.size()) return *this;
  QSeries out(offset_ + Int(g0), static_cast<int>(coeff_.size() - g0) - 1);
  for (size_t g = g0; g < coeff_.size(); ++g) out.coeff_[g - g0] = coeff_[g];
  return out;
}

QSeries QSeries::shifted(const Rat& dq) const {
  QSeries out = *this;
  out.offset_ += dq;
  return out;
}

QSeries add(const QSeries& a, const QSeries& b) {
  const Int gap = grid_gap(b.offset_, a.offset_);
  const Rat off = gap >= 0 ? a.offset_ : b.offset_;
  // reliable through the smaller top exponent
  const Rat top = std::min(a.offset_ + a.order(), b.offset_ + b.order());
  const Int n = numerator(top - off);
  if (n < 0) fail(ErrorKind::OrderUnderflow, "no reliable grades after alignment");
  QSeries out(off, checked_int(n));
  for (int g = 0; g <= out.order(); ++g) {
    const Rat e = off + g;
    Int c(0);
    const Rat ia = e - a.offset_, ib = e - b.offset_;
    if (ia >= 0 && ia <= a.order()) c += a.at(checked_int(numerator(ia)));
    if (ib >= 0 && ib <= b.order()) c += b.at(checked_int(numerator(ib)));
    out.at(g) = c;
  }
  return out;
}

QSeries mul(const QSeries& a, const QSeries& b) {
  QSeries out(a.offset_ + b.offset_, std::min(a.order(), b.order()));
  for (int ga = 0; ga <= std::min(a.order(), out.order()); ++ga) {
    if (a.at(ga) == 0) continue;
    for (int gb = 0; ga + gb <= out.order() && gb <= b.order(); ++gb) {
      if (b.at(gb) == 0) continue;
      out.at(ga + gb) += a.at(ga) * b.at(gb);
    }
  }
  return out;
}

bool equal_through_common_order(const QSeries& a, const QSeries& b) {
  const Rat top = std::min(a.offset() + a.order(), b.offset() + b.order());
  std::map<Rat, Int> terms;
  for (int g = 0; g <= a.order(); ++g)
    if (a.at(g) != 0 && a.offset() + g <= top) terms[a.offset() + g] += a.at(g);
  for (int g = 0; g <= b.order(); ++g)
    if (b.at(g) != 0 && b.offset() + g <= top) terms[b.offset() + g] -= b.at(g);
  for (const auto& [e, c] : terms)
    if (c != 0) return false;
  return true;
}

QSeries colored_partition_series(int colors, int order) {
  if (colors < 0 || order < 0) fail(ErrorKind::InvalidArgument, "bad partition series parameters");
  QSeries out(Rat(0), order);
  out.at(0) = 1;
  for (int j = 1; j <= order; ++j)
    for (int rep = 0; rep < colors; ++rep)
      for (int g = j; g <= order; ++g) out.at(g) += out.at(g - j);
  return out;
}

void GradedCharacter::set(int g, const Weight& w, Int c) {
  auto& slice = grades_[static_cast<size_t>(g)];
  if (c == 0)
    slice.erase(w);
  else
    slice[w] = std::move(c);
}

void GradedCharacter::accumulate(int g, const Weight& w, const Int& c) {
  if (c == 0) return;
  auto& slice = grades_[static_cast<size_t>(g)];
  auto it = slice.find(w);
  if (it == slice.end()) {
    slice.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) slice.erase(it);
}

Int GradedCharacter::coefficient(int g, const Weight& w) const {
  if (g < 0 || g > order()) return 0;
  const auto& slice = grades_[static_cast<size_t>(g)];
  auto it = slice.find(w);
  return it == slice.end() ? Int(0) : it->second;
}

bool GradedCharacter::all_nonnegative() const {
  for (const auto& slice : grades_)
    for (const auto& [w, c] : slice)
      if (c < 0) return false;
  return true;
}

size_t GradedCharacter::term_count() const {
  size_t n = 0;
  for (const auto& slice : grades_) n += slice.size();
  return n;
}

GradedCharacter add(const GradedCharacter& a, const GradedCharacter& b) {
  if (a.rank() != b.rank()) fail(ErrorKind::RankMismatch, "add: rank mismatch");
  const Int gap = grid_gap(b.offset(), a.offset());
  const Rat off = gap >= 0 ? a.offset() : b.offset();
  const Rat top = std::min(a.offset() + a.order(), b.offset() + b.order());
  const Int n = numerator(top - off);
  if (n < 0) fail(ErrorKind::OrderUnderflow, "add: no reliable grades after alignment");
  GradedCharacter out(a.rank(), off, checked_int(n));
  const int sa = checked_int(numerator(a.offset() - off));
  const int sb = checked_int(numerator(b.offset() - off));
  for (int g = 0; g <= a.order() && sa + g <= out.order(); ++g)
    for (const auto& [w, c] : a.grade(g)) out.accumulate(sa + g, w, c);
  for (int g = 0; g <= b.order() && sb + g <= out.order(); ++g)
    for (const auto& [w, c] : b.grade(g)) out.accumulate(sb + g, w, c);
  return out;
}

GradedCharacter mul(const GradedCharacter& a, const GradedCharacter& b) {
  if (a.rank() != b.rank()) fail(ErrorKind::RankMismatch, "mul: rank mismatch");
  GradedCharacter out(a.rank(), a.offset() + b.offset(), std::min(a.order(), b.order()));
  for (int ga = 0; ga <= std::min(a.order(), out.order()); ++ga) {
    for (const auto& [wa, ca] : a.grade(ga)) {
      for (int gb = 0; ga + gb <= out.order() && gb <= b.order(); ++gb) {
        for (const auto& [wb, cb] : b.grade(gb)) out.accumulate(ga + gb, add(wa, wb), ca * cb);
      }
    }
  }
  return out;
}

GradedCharacter scale(const Int& c, const GradedCharacter& a) {
  GradedCharacter out(a.rank(), a.offset(), a.order());
  if (c == 0) return out;
  for (int g = 0; g <= a.order(); ++g)
    for (const auto& [w, x] : a.grade(g)) out.set(g, w, c * x);
  return out;
}

GradedCharacter mul(const GradedCharacter& a, const QSeries& s) {
  GradedCharacter out(a.rank(), a.offset() + s.offset(), std::min(a.order(), s.order()));
  for (int gs = 0; gs <= std::min(s.order(), out.order()); ++gs) {
    if (s.at(gs) == 0) continue;
    for (int ga = 0; ga + gs <= out.order() && ga <= a.order(); ++ga)
      for (const auto& [w, c] : a.grade(ga)) out.accumulate(ga + gs, w, c * s.at(gs));
  }
  return out;
}

QSeries specialize(const GradedCharacter& a) {
  QSeries out(a.offset(), a.order());
  for (int g = 0; g <= a.order(); ++g) {
    Int t(0);
    for (const auto& [w, c] : a.grade(g)) t += c;
    out.at(g) = t;
  }
  return out;
}

GradedCharacter map_weights(const GradedCharacter& a,
                            const std::vector<std::vector<Rat>>& matrix) {
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != a.rank())
      fail(ErrorKind::RankMismatch, "map_weights: matrix width != rank");
  GradedCharacter out(static_cast<int>(matrix.size()), a.offset(), a.order());
  for (int g = 0; g <= a.order(); ++g) {
    for (const auto& [w, c] : a.grade(g)) {
      Weight t(matrix.size(), Rat(0));
      for (size_t i = 0; i < matrix.size(); ++i)
        for (size_t j = 0; j < w.size(); ++j)
          if (w[j] != 0) t[i] += matrix[i][j] * w[j];
      out.accumulate(g, t, c);
    }
  }
  return out;
}

bool equal_through_common_order(const GradedCharacter& a, const GradedCharacter& b) {
  return !first_mismatch(a, b, nullptr);
}

void geometric_inverse_factor(GradedCharacter& y, int dg, const Weight& dw) {
  if (dg <= 0) fail(ErrorKind::UnboundedDenominator, "geometric factor needs positive grade step");
  for (int g = dg; g <= y.order(); ++g) {
    const auto& src = y.grade(g - dg);
    for (const auto& [w, c] : src) y.accumulate(g, add(w, dw), c);
  }
}

bool first_mismatch(const GradedCharacter& a, const GradedCharacter& b, Mismatch* out) {
  if (a.rank() != b.rank()) fail(ErrorKind::RankMismatch, "compare: rank mismatch");
  const Int gap = grid_gap(b.offset(), a.offset());
  const Rat off = gap >= 0 ? a.offset() : b.offset();
  const Rat top = std::min(a.offset() + a.order(), b.offset() + b.order());
  const int sa = checked_int(numerator(a.offset() - off));
  const int sb = checked_int(numerator(b.offset() - off));
  const Int span = numerator(top - off);
  for (Int gi(0); gi <= span; ++gi) {
    const int g = checked_int(gi);
    std::map<Weight, Int> diff;
    if (g - sa >= 0 && g - sa <= a.order())
      for (const auto& [w, c] : a.grade(g - sa)) diff[w] += c;
    if (g - sb >= 0 && g - sb <= b.order())
      for (const auto& [w, c] : b.grade(g - sb)) diff[w] -= c;
    for (const auto& [w, c] : diff) {
      if (c == 0) continue;
      if (out) {
        out->grade = g;
        out->weight = w;
        out->lhs = (g - sa >= 0 && g - sa <= a.order()) ? a.coefficient(g - sa, w) : Int(0);
        out->rhs = (g - sb >= 0 && g - sb <= b.order()) ? b.coefficient(g - sb, w) : Int(0);
      }
      return true;
    }
  }
  return false;
}

// ---- serialization ------------------------------------------------------

namespace {

Json character_terms(const GradedCharacter& x) {
  Json terms = Json::array();
  for (int g = 0; g <= x.order(); ++g) {
    for (const auto& [w, c] : x.grade(g)) {
      Json coords = Json::array();
      for (const auto& v : w) coords.push_back(to_string(v));
      terms.push_back(Json::array({g, coords, to_string(c)}));
    }
  }
  return terms;
}

}  // namespace

std::string GradedCharacter::serialize() const {
  Json j;
  j["offset"] = to_string(offset_);
  j["order"] = order();
  j["terms"] = character_terms(*this);
  return j.dump();
}

GradedCharacter GradedCharacter::deserialize(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.contains("offset") || !j.contains("order") || !j.contains("terms"))
    fail(ErrorKind::InvalidArgument, "malformed character JSON");
  const Rat off = parse_rat(j["offset"].get<std::string>());
  const int order = j["order"].get<int>();
  if (order < 0) fail(ErrorKind::InvalidArgument, "negative order");
  int rank = -1;
  GradedCharacter out(0, off, order);
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 3) fail(ErrorKind::InvalidArgument, "malformed term");
    const int g = t[0].get<int>();
    if (g < 0 || g > order) fail(ErrorKind::InvalidArgument, "term grade out of range");
    Weight w;
    for (const auto& v : t[1]) w.push_back(parse_rat(v.get<std::string>()));
    if (rank < 0) {
      rank = static_cast<int>(w.size());
      out = GradedCharacter(rank, off, order);
    } else if (static_cast<int>(w.size()) != rank) {
      fail(ErrorKind::RankMismatch, "mixed ranks in term list");
    }
    out.accumulate(g, w, parse_int(t[2].get<std::string>()));
  }
  return out;
}

std::string QSeries::serialize() const {
  Json j;
  j["offset"] = to_string(offset_);
  j["order"] = order();
  Json terms = Json::array();
  for (int g = 0; g <= order(); ++g) {
    if (coeff_[static_cast<size_t>(g)] == 0) continue;
    terms.push_back(Json::array({g, Json::array(), to_string(coeff_[static_cast<size_t>(g)])}));
  }
  j["terms"] = terms;
  return j.dump();
}

QSeries QSeries::deserialize(const std::string& text) {
  const GradedCharacter c = GradedCharacter::deserialize(text);
  if (c.rank() != 0) fail(ErrorKind::RankMismatch, "q-series JSON must have empty coords");
  QSeries out(c.offset(), c.order());
  for (int g = 0; g <= c.order(); ++g) out.at(g) = c.coefficient(g, Weight{});
  return out;
}

}  // namespace wcoset
