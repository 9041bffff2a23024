#include "wcoset/lattice.hpp"

namespace wcoset {

namespace {

struct Ldlt {
  std::vector<std::vector<Rat>> l;  // unit lower triangular
  std::vector<Rat> d;               // positive diagonal
};

Ldlt factor(const std::vector<std::vector<Rat>>& g) {
  const size_t n = g.size();
  Ldlt f;
  f.l.assign(n, std::vector<Rat>(n, Rat(0)));
  f.d.assign(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    f.l[i][i] = 1;
    for (size_t j = 0; j <= i; ++j) {
      Rat s = g[i][j];
      for (size_t k = 0; k < j; ++k) s -= f.l[i][k] * f.l[j][k] * f.d[k];
      if (i == j) {
        if (s <= 0) fail(ErrorKind::ZeroNorm, "Gram matrix not positive definite");
        f.d[i] = s;
      } else {
        f.l[i][j] = s / f.d[j];
      }
    }
  }
  return f;
}

}  // namespace

std::vector<std::vector<Int>> enumerate_lattice(const std::vector<std::vector<Rat>>& G,
                                                const std::vector<Rat>& center, const Rat& bound) {
  const size_t n = G.size();
  std::vector<std::vector<Int>> out;
  if (bound < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  const Ldlt f = factor(G);

  // y = x + center, Q(y) = sum_i d_i u_i^2 with u_i = y_i + sum_{j>i} L[j][i] y_j,
  // so coordinates are chosen from the last index down. Every level subtracts
  // its exact contribution; the sqrt only widens the candidate window.
  std::vector<Int> x(n, Int(0));
  std::vector<Rat> y(n, Rat(0));
  auto go = [&](auto&& self, int i, const Rat& room) -> void {
    if (i < 0) {
      out.push_back(x);
      return;
    }
    const size_t si = static_cast<size_t>(i);
    Rat tail(0);
    for (size_t j = si + 1; j < n; ++j) tail += f.l[j][si] * y[j];
    const Rat mid = center[si] + tail;
    const Rat radius = sqrt_upper(room / f.d[si]);
    const Int lo = ceil_rat(-radius - mid), hi = floor_rat(radius - mid);
    for (Int v = lo; v <= hi; ++v) {
      const Rat u = Rat(v) + mid;
      const Rat used = f.d[si] * u * u;
      if (used > room) continue;
      x[si] = v;
      y[si] = Rat(v) + center[si];
      self(self, i - 1, room - used);
    }
  };
  go(go, static_cast<int>(n) - 1, bound);
  return out;
}

}  // namespace wcoset
