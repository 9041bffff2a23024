#include "wcoset/affchar.hpp"

#include <mutex>
#include <tuple>

#include "wcoset/lattice.hpp"

namespace wcoset {

namespace {

Rat shifted_level(const RootSystem& rs, const Rat& k) {
  const Rat t = k + rs.dual_coxeter();
  if (t == 0) fail(ErrorKind::CriticalLevel, "critical level k = -h for " + rs.name());
  return t;
}

void require_weight_rank(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.size()) != rs.rank())
    fail(ErrorKind::RankMismatch, "weight rank != algebra rank");
}

void require_level_dominant(const RootSystem& rs, int m, const Weight& lambda) {
  require_weight_rank(rs, lambda);
  if (!is_integral(lambda) || !is_dominant(lambda))
    fail(ErrorKind::NotDominant, "highest weight must be dominant integral");
  if (rs.level_of(lambda) > m)
    fail(ErrorKind::NotLevelDominant, "weight level exceeds " + std::to_string(m));
}

}  // namespace

Rat ell_of(const RootSystem& rs, const Rat& k) {
  const Rat t = shifted_level(rs, k);
  if (t + 1 == 0) fail(ErrorKind::PoleLevel, "level map pole at k+h+1 = 0");
  return t / (t + 1) - rs.dual_coxeter();
}

MinimalSeriesParams minimal_series_params(const RootSystem& rs, const Rat& k) {
  const Rat t = shifted_level(rs, k);
  if (t <= 0) fail(ErrorKind::NotAdmissible, "k+h must be positive");
  const Int p = numerator(t), q = denominator(t);
  if (p < rs.dual_coxeter())
    fail(ErrorKind::NotAdmissible, "k+h = p/q needs p >= h = " + std::to_string(rs.dual_coxeter()));
  return {p, p + q};
}

Rat sugawara_cc(const RootSystem& rs, const Rat& k) {
  return k * Rat(rs.dimension()) / shifted_level(rs, k);
}

Rat coset_cc(const RootSystem& rs, const Rat& k) {
  const Rat t = shifted_level(rs, k);
  if (t + 1 == 0) fail(ErrorKind::PoleLevel, "coset central charge pole at k+h+1 = 0");
  const int h = rs.dual_coxeter();
  return k * (k + 2 * h + 1) * rs.rank() / (t * (t + 1));
}

Rat w_cc(const RootSystem& rs, const Rat& ell) {
  const Rat t = shifted_level(rs, ell);
  const int h = rs.dual_coxeter();
  return -Rat(rs.rank()) * ((h + 1) * t - h) * (h * t - (h + 1)) / t;
}

Rat minimal_cc(const RootSystem& rs, const Int& p, const Int& q) {
  const int h = rs.dual_coxeter();
  if (p < h || q < h) fail(ErrorKind::NotAdmissible, "minimal series needs p, q >= h");
  if (gcd(p, q) != 1) fail(ErrorKind::NotAdmissible, "minimal series needs coprime p, q");
  const Rat rp(p), rq(q);
  return -Rat(rs.rank()) * ((h + 1) * rp - h * rq) * (h * rp - (h + 1) * rq) / (rp * rq);
}

Rat growth(const RootSystem& rs, const Int& p, const Int& q) {
  const int h = rs.dual_coxeter();
  if (p < h || q < h) fail(ErrorKind::NotAdmissible, "growth needs p, q >= h");
  if (gcd(p, q) != 1) fail(ErrorKind::NotAdmissible, "growth needs coprime p, q");
  return Rat(rs.rank()) - Rat(h) * Rat(rs.dimension()) / (Rat(p) * Rat(q));
}

Rat langlands_dual_level(const RootSystem& rs, const Rat& k) {
  return 1 / shifted_level(rs, k) - rs.dual_coxeter();
}

Rat sugawara_h(const RootSystem& rs, const Rat& k, const Weight& lambda) {
  require_weight_rank(rs, lambda);
  const Rat t = shifted_level(rs, k);
  return rs.inner(lambda, add(lambda, scale(Rat(2), rs.rho()))) / (2 * t);
}

Rat w_h(const RootSystem& rs, const Rat& ell, const Weight& lambda) {
  require_weight_rank(rs, lambda);
  const Rat t = shifted_level(rs, ell);
  const Weight lr = add(lambda, rs.rho());
  return (rs.norm2(lr) - rs.norm2(rs.rho())) / (2 * t) - rs.inner(lambda, rs.rho());
}

void apply_loop_denominator_inverse(const RootSystem& rs, GradedCharacter& x) {
  const Weight zero = zero_weight(rs.rank());
  for (int n = 1; n <= x.order(); ++n) {
    for (int rep = 0; rep < rs.rank(); ++rep) geometric_inverse_factor(x, n, zero);
    for (const auto& a : rs.positive_roots()) {
      geometric_inverse_factor(x, n, a);
      geometric_inverse_factor(x, n, negate(a));
    }
  }
}

GradedCharacter integrable_character(const RootSystem& rs, int m, const Weight& lambda,
                                     int order) {
  if (m < 0) fail(ErrorKind::NotLevelDominant, "integrable level must be >= 0");
  if (order < 0) fail(ErrorKind::InvalidArgument, "negative order");
  require_level_dominant(rs, m, lambda);

  const int M = m + rs.dual_coxeter();
  const Weight lr = add(lambda, rs.rho());
  const Rat a2 = rs.norm2(lr);
  const Rat h_off = sugawara_h(rs, Rat(m), lambda);
  // every weight at depth <= order satisfies |nu|^2 <= 2m(h+depth)
  const Rat w2cap = 2 * Rat(m) * (h_off + order);

  GradedCharacter num(rs.rank(), h_off, order);

  // |gamma|^2 window certified by E(gamma) >= M|gamma|^2/2 - |lambda+rho||gamma|
  const Rat bound = (4 * a2 + 4 * Rat(M) * order) / (Rat(M) * M);
  std::map<Weight, std::map<Weight, Int>> mult_cache;  // dominant mu -> Freudenthal table
  std::map<Weight, std::vector<Weight>> orbit_cache;

  for (const auto& c : enumerate_lattice(rs.root_gram(), std::vector<Rat>(rs.rank(), Rat(0)),
                                         bound)) {
    std::vector<Rat> cr(c.size());
    for (size_t i = 0; i < c.size(); ++i) cr[i] = c[i];
    const Weight gamma = rs.from_root_coordinates(cr);
    const Rat energy = Rat(M) * rs.norm2(gamma) / 2 + rs.inner(lr, gamma);
    if (!is_integer(energy)) fail(ErrorKind::Internal, "non-integral translation energy");
    if (energy > order) continue;
    if (energy < 0 || (energy == 0 && !is_zero(gamma)))
      fail(ErrorKind::Internal, "translation energy not positive");
    const int e = static_cast<int>(numerator(energy));

    const Weight sigma = add(lr, scale(Rat(M), gamma));
    auto [dom, det] = rs.dominize(sigma);
    bool singular = false;
    for (const auto& x : dom)
      if (x == 0) singular = true;
    if (singular) continue;
    const Weight mu = sub(dom, rs.rho());

    // weights that can still reach the output window from energy e
    const Rat cap2 = 2 * w2cap + 4 * Rat(order - e) * (order - e);
    auto it = mult_cache.find(mu);
    if (it == mult_cache.end()) it = mult_cache.emplace(mu, dominant_multiplicities(rs, mu)).first;
    for (const auto& [d, cnt] : it->second) {
      if (cnt == 0 || rs.norm2(d) > cap2) continue;
      auto ot = orbit_cache.find(d);
      if (ot == orbit_cache.end()) ot = orbit_cache.emplace(d, rs.orbit(d)).first;
      const Int signed_cnt = det > 0 ? cnt : -cnt;
      for (const auto& w : ot->second) num.accumulate(e, w, signed_cnt);
    }
  }

  apply_loop_denominator_inverse(rs, num);

  // The enumeration window certifies every coefficient inside the unitarity
  // bound |nu|^2 <= 2m(h+g); outside it the pruning leaves uncancelled
  // numerator debris, which is deleted here rather than computed.
  for (int g = 0; g <= order; ++g) {
    const Rat cap = 2 * Rat(m) * (h_off + g);
    auto& slice = num.grade_mut(g);
    for (auto it = slice.begin(); it != slice.end();) {
      if (rs.norm2(it->first) > cap)
        it = slice.erase(it);
      else
        ++it;
    }
  }
  return num;
}

GradedCharacter frenkel_kac_level1_character(const RootSystem& rs, const Weight& nu, int order) {
  if (order < 0) fail(ErrorKind::InvalidArgument, "negative order");
  require_level_dominant(rs, 1, nu);

  const Rat off = rs.norm2(nu) / 2;
  GradedCharacter out(rs.rank(), off, order);
  const QSeries parts = colored_partition_series(rs.rank(), order);

  const Rat bound = rs.norm2(nu) + 2 * order;
  for (const auto& c : enumerate_lattice(rs.root_gram(), rs.root_coordinates(nu), bound)) {
    std::vector<Rat> cr(c.size());
    for (size_t i = 0; i < c.size(); ++i) cr[i] = c[i];
    const Weight x = add(nu, rs.from_root_coordinates(cr));
    const Rat rel = rs.norm2(x) / 2 - off;
    if (!is_integer(rel) || rel < 0) fail(ErrorKind::Internal, "momentum off the character grid");
    const Int e0 = numerator(rel);
    if (e0 > order) continue;
    const int e = static_cast<int>(e0);
    for (int j = 0; e + j <= order; ++j) out.accumulate(e + j, x, parts.at(j));
  }
  return out;
}

GradedCharacter fock_character(const RootSystem& rs, const Rat& kappa, const Weight& lambda,
                               int order, FockOffsetRule rule, const Rat& rule_level) {
  require_weight_rank(rs, lambda);
  if (order < 0) fail(ErrorKind::InvalidArgument, "negative order");
  if (kappa <= 0) fail(ErrorKind::ZeroNorm, "Fock normalization must be positive");
  Rat off;
  switch (rule) {
    case FockOffsetRule::Heisenberg:
      off = rs.norm2(lambda) / (2 * kappa);
      break;
    case FockOffsetRule::Sugawara:
      off = sugawara_h(rs, rule_level, lambda);
      break;
    case FockOffsetRule::WShifted:
      off = w_h(rs, rule_level, lambda);
      break;
  }
  GradedCharacter out(rs.rank(), off, order);
  const QSeries parts = colored_partition_series(rs.rank(), order);
  for (int j = 0; j <= order; ++j) out.set(j, lambda, parts.at(j));
  return out;
}

GradedCharacter weyl_module_character(const RootSystem& rs, const Rat& k, const Weight& lambda,
                                      int order) {
  if (order < 0) fail(ErrorKind::InvalidArgument, "negative order");
  require_weight_rank(rs, lambda);
  if (!is_integral(lambda) || !is_dominant(lambda))
    fail(ErrorKind::NotDominant, "Weyl module weight must be dominant integral");
  GradedCharacter out(rs.rank(), sugawara_h(rs, k, lambda), order);
  for (const auto& [w, c] : finite_character(rs, lambda)) out.set(0, w, c);
  apply_loop_denominator_inverse(rs, out);
  return out;
}

QSeries verma_w_character(const RootSystem& rs, const Rat& ell, const Weight& lambda, int order) {
  QSeries parts = colored_partition_series(rs.rank(), order);
  return parts.shifted(w_h(rs, ell, lambda));
}

const GradedCharacter& integrable_character_cached(const RootSystem& rs, int m,
                                                   const Weight& lambda, int order) {
  using Key = std::tuple<std::string, int, Weight, int>;
  static std::map<Key, GradedCharacter> cache;
  static std::mutex lock;
  const Key key{rs.name(), m, lambda, order};
  std::scoped_lock guard(lock);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, integrable_character(rs, m, lambda, order)).first;
  return it->second;
}

}  // namespace wcoset
