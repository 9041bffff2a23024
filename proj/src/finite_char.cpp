#include "wcoset/finite_char.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace wcoset {

namespace {

void require_dominant_integral(const RootSystem& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != rs.rank())
    fail(ErrorKind::RankMismatch, "weight rank != algebra rank");
  if (!is_integral(lambda)) fail(ErrorKind::NonIntegralWeight, "weight must be integral");
  if (!is_dominant(lambda)) fail(ErrorKind::NotDominant, "weight must be dominant");
}

}  // namespace

std::map<Weight, Int> dominant_multiplicities(const RootSystem& rs, const Weight& lambda) {
  require_dominant_integral(rs, lambda);

  // dominant weights <= lambda, collected top-down by subtracting positive roots
  std::set<Weight> dom{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    for (const auto& a : rs.positive_roots()) {
      Weight nu = sub(mu, a);
      if (!is_dominant(nu)) continue;
      if (dom.insert(nu).second) queue.push_back(nu);
    }
  }

  // Freudenthal, in order of increasing depth lambda - mu
  std::vector<Weight> order(dom.begin(), dom.end());
  auto depth = [&](const Weight& mu) {
    Rat d(0);
    for (const auto& c : rs.root_coordinates(sub(lambda, mu))) d += c;
    return d;
  };
  std::sort(order.begin(), order.end(),
            [&](const Weight& a, const Weight& b) { return depth(a) < depth(b); });

  std::map<Weight, Int> mult;
  const Weight lr = add(lambda, rs.rho());
  const Rat lr2 = rs.norm2(lr);
  for (const auto& mu : order) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rat rhs(0);
    for (const auto& a : rs.positive_roots()) {
      Weight nu = add(mu, a);
      for (;;) {
        // every weight of E_lambda satisfies lambda - nu in Q+
        if (!rs.root_cone_leq(nu, lambda)) break;
        auto [d, det] = rs.dominize(nu);
        (void)det;
        auto it = mult.find(d);
        if (it != mult.end() && it->second != 0) rhs += Rat(it->second) * rs.inner(nu, a);
        nu = add(nu, a);
      }
    }
    const Rat denom = lr2 - rs.norm2(add(mu, rs.rho()));
    if (denom <= 0) fail(ErrorKind::Internal, "Freudenthal denominator not positive");
    const Rat m = 2 * rhs / denom;
    if (!is_integer(m)) fail(ErrorKind::Internal, "Freudenthal produced a non-integer");
    mult[mu] = numerator(m);
  }
  return mult;
}

std::map<Weight, Int> finite_character_capped(const RootSystem& rs, const Weight& lambda,
                                              const Rat& cap2) {
  std::map<Weight, Int> out;
  for (const auto& [mu, m] : dominant_multiplicities(rs, lambda)) {
    if (m == 0) continue;
    if (cap2 >= 0 && rs.norm2(mu) > cap2) continue;
    for (const auto& w : rs.orbit(mu)) out[w] = m;
  }
  return out;
}

std::map<Weight, Int> finite_character(const RootSystem& rs, const Weight& lambda) {
  return finite_character_capped(rs, lambda, Rat(-1));
}

Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  require_dominant_integral(rs, lambda);
  const Weight lr = add(lambda, rs.rho());
  Rat dim(1);
  for (const auto& a : rs.positive_roots()) dim *= rs.inner(lr, a) / rs.inner(rs.rho(), a);
  if (!is_integer(dim)) fail(ErrorKind::Internal, "Weyl dimension not integral");
  return numerator(dim);
}

}  // namespace wcoset
