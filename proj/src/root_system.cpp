#include "wcoset/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace wcoset {

namespace {

// Exact inverse of a small integer matrix by Gauss-Jordan over the rationals.
std::vector<std::vector<Rat>> invert(const std::vector<std::vector<int>>& m) {
  const size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) fail(ErrorKind::Internal, "singular Cartan matrix");
    std::swap(a[piv], a[col]);
    const Rat d = a[col][col];
    for (auto& x : a[col]) x /= d;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rat f = a[row][col];
      for (size_t j = 0; j < 2 * n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

RootSystem::RootSystem(Series s, int rank) : series_(s), rank_(rank) {
  switch (s) {
    case Series::A:
      if (rank < 1) fail(ErrorKind::InvalidFamilyRank, "A series needs rank >= 1");
      break;
    case Series::D:
      if (rank < 4) fail(ErrorKind::InvalidFamilyRank, "D series needs rank >= 4");
      break;
    case Series::E:
      if (rank < 6 || rank > 8) fail(ErrorKind::InvalidFamilyRank, "E series needs rank 6..8");
      break;
  }
  build_cartan();
  inv_cartan_ = invert(cartan_);
  rho_ = Weight(static_cast<size_t>(rank_), Rat(1));
  build_roots();
  // dim g = r(h+1) in the simply-laced case; cheap sanity stop on bad tables.
  if (dimension_ != Int(rank_) * (dual_coxeter_ + 1))
    fail(ErrorKind::Internal, "dimension / dual Coxeter mismatch for " + name());
}

void RootSystem::build_cartan() {
  const size_t n = static_cast<size_t>(rank_);
  cartan_.assign(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto bond = [&](int i, int j) {
    cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)] = -1;
    cartan_[static_cast<size_t>(j)][static_cast<size_t>(i)] = -1;
  };
  switch (series_) {
    case Series::A:
      for (int i = 0; i + 1 < rank_; ++i) bond(i, i + 1);
      break;
    case Series::D:
      // chain 1..r-2, with r-1 and r both attached to r-2
      for (int i = 0; i + 1 < rank_ - 1; ++i) bond(i, i + 1);
      bond(rank_ - 3, rank_ - 1);
      break;
    case Series::E:
      // chain 1-3-4-5-..., node 2 attached to node 4 (1-based labels)
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < rank_; ++i) bond(i, i + 1);
      break;
  }
}

void RootSystem::build_roots() {
  const size_t n = static_cast<size_t>(rank_);
  simple_roots_.assign(n, Weight());
  for (size_t j = 0; j < n; ++j) {
    Weight a(n);
    for (size_t i = 0; i < n; ++i) a[i] = cartan_[i][j];
    simple_roots_[j] = a;
  }

  // Height-graded closure: beta + alpha_i is a root iff the alpha_i-string
  // below beta is long enough (q - <beta, alpha_i^vee> > 0).
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> layer;
  for (size_t j = 0; j < n; ++j) {
    std::vector<int> c(n, 0);
    c[j] = 1;
    seen.insert(c);
    layer.push_back(c);
  }
  std::vector<std::vector<int>> all(layer);
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : layer) {
      for (size_t i = 0; i < n; ++i) {
        // p = <beta, alpha_i^vee> in weight coordinates
        long long p = 0;
        for (size_t j = 0; j < n; ++j) p += static_cast<long long>(cartan_[i][j]) * c[j];
        long long q = 0;
        std::vector<int> down = c;
        for (;;) {
          down[i] -= 1;
          bool nonneg = true, nonzero = false;
          for (size_t j = 0; j < n; ++j) {
            if (down[j] < 0) nonneg = false;
            if (down[j] > 0) nonzero = true;
          }
          if (!nonneg || !nonzero || !seen.count(down)) break;
          ++q;
        }
        if (q - p <= 0) continue;
        std::vector<int> up = c;
        up[i] += 1;
        if (seen.insert(up).second) {
          next.push_back(up);
          all.push_back(up);
        }
      }
    }
    layer.swap(next);
  }

  auto height = [](const std::vector<int>& c) {
    long long h = 0;
    for (int x : c) h += x;
    return h;
  };
  std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    const auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });

  pos_root_coords_ = all;
  pos_roots_.clear();
  for (const auto& c : all) {
    Weight w(n, Rat(0));
    for (size_t j = 0; j < n; ++j)
      for (size_t i = 0; i < n; ++i) w[i] += Rat(cartan_[i][j]) * c[j];
    pos_roots_.push_back(w);
  }
  marks_ = pos_root_coords_.back();
  dual_coxeter_ = static_cast<int>(height(marks_)) + 1;
  dimension_ = Int(rank_) + 2 * Int(pos_roots_.size());
}

Rat RootSystem::inner(const Weight& a, const Weight& b) const {
  if (static_cast<int>(a.size()) != rank_ || static_cast<int>(b.size()) != rank_)
    fail(ErrorKind::RankMismatch, "inner: weight rank mismatch");
  Rat out(0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Rat row(0);
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) row += inv_cartan_[i][j] * b[j];
    out += a[i] * row;
  }
  return out;
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  const size_t n = static_cast<size_t>(rank_);
  Weight r = w;
  const Rat c = w[static_cast<size_t>(i)];
  if (c == 0) return r;
  for (size_t j = 0; j < n; ++j) r[j] -= c * cartan_[j][static_cast<size_t>(i)];
  return r;
}

std::vector<Rat> RootSystem::root_coordinates(const Weight& w) const {
  const size_t n = static_cast<size_t>(rank_);
  std::vector<Rat> c(n, Rat(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (w[j] != 0) c[i] += inv_cartan_[i][j] * w[j];
  return c;
}

Weight RootSystem::from_root_coordinates(const std::vector<Rat>& c) const {
  const size_t n = static_cast<size_t>(rank_);
  Weight w(n, Rat(0));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) w[i] += Rat(cartan_[i][j]) * c[j];
  return w;
}

bool RootSystem::in_root_lattice(const Weight& w) const {
  if (!is_integral(w)) fail(ErrorKind::NonIntegralWeight, "in_root_lattice: weight not integral");
  for (const auto& c : root_coordinates(w))
    if (!is_integer(c)) return false;
  return true;
}

bool RootSystem::root_cone_leq(const Weight& mu, const Weight& lambda) const {
  for (const auto& c : root_coordinates(sub(lambda, mu)))
    if (!is_integer(c) || c < 0) return false;
  return true;
}

std::pair<Weight, int> RootSystem::dominize(const Weight& w) const {
  Weight x = w;
  int det = 1;
  const size_t n = static_cast<size_t>(rank_);
  for (;;) {
    size_t i = 0;
    while (i < n && x[i] >= 0) ++i;
    if (i == n) return {x, det};
    x = reflect(x, static_cast<int>(i));
    det = -det;
  }
}

std::vector<Weight> RootSystem::orbit(const Weight& dominant) const {
  std::set<Weight> seen{dominant};
  std::vector<Weight> out{dominant}, layer{dominant};
  while (!layer.empty()) {
    std::vector<Weight> next;
    for (const auto& w : layer)
      for (int i = 0; i < rank_; ++i) {
        Weight r = reflect(w, i);
        if (seen.insert(r).second) {
          next.push_back(r);
          out.push_back(r);
        }
      }
    layer.swap(next);
  }
  return out;
}

Rat RootSystem::level_of(const Weight& w) const {
  Rat lv(0);
  for (size_t i = 0; i < w.size(); ++i) lv += w[i] * marks_[i];
  return lv;
}

std::vector<Weight> RootSystem::dominant_weights_of_level(int m) const {
  if (m < 0) fail(ErrorKind::InvalidArgument, "negative level");
  std::vector<Weight> out;
  Weight cur(static_cast<size_t>(rank_), Rat(0));
  // lexicographic recursion over nonnegative labels with sum of marks <= m
  auto rec = [&](auto&& self, int pos, int room) -> void {
    if (pos == rank_) {
      out.push_back(cur);
      return;
    }
    const int mark = marks_[static_cast<size_t>(pos)];
    for (int x = 0; x * mark <= room; ++x) {
      cur[static_cast<size_t>(pos)] = x;
      self(self, pos + 1, room - x * mark);
    }
    cur[static_cast<size_t>(pos)] = 0;
  };
  rec(rec, 0, m);
  return out;
}

std::vector<std::vector<Rat>> RootSystem::root_gram() const {
  const size_t n = static_cast<size_t>(rank_);
  std::vector<std::vector<Rat>> g(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g[i][j] = cartan_[i][j];
  return g;
}

RootSystem parse_algebra(const std::string& name) {
  if (name.size() < 2) fail(ErrorKind::InvalidArgument, "bad algebra name '" + name + "'");
  const char s = name[0];
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      fail(ErrorKind::InvalidArgument, "bad algebra rank in '" + name + "'");
  const int rank = std::stoi(name.substr(1));
  switch (s) {
    case 'A':
    case 'a':
      return RootSystem(Series::A, rank);
    case 'D':
    case 'd':
      return RootSystem(Series::D, rank);
    case 'E':
    case 'e':
      return RootSystem(Series::E, rank);
    default:
      fail(ErrorKind::InvalidArgument, "unknown series '" + std::string(1, s) + "' (simply-laced only)");
  }
}

}  // namespace wcoset
