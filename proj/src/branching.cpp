#include "wcoset/branching.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace wcoset {

using Json = nlohmann::ordered_json;

ModuleFamily integrable_family(const RootSystem& rs, int level) {
  if (level < 0) fail(ErrorKind::NotLevelDominant, "family level must be >= 0");
  ModuleFamily f;
  f.id = rs.name() + " level " + std::to_string(level);
  f.find = [rs, level](const Weight& w) -> std::optional<Weight> {
    if (static_cast<int>(w.size()) != rs.rank()) return std::nullopt;
    if (!is_integral(w) || !is_dominant(w)) return std::nullopt;
    if (rs.level_of(w) > level) return std::nullopt;
    return w;
  };
  f.offset = [rs, level](const Weight& label) { return sugawara_h(rs, Rat(level), label); };
  f.character = [rs, level](const Weight& label, int order) {
    return integrable_character_cached(rs, level, label, order);
  };
  f.leq = [rs](const Weight& a, const Weight& b) { return rs.root_cone_leq(a, b); };
  return f;
}

ModuleFamily fock_family(const RootSystem& rs, const Rat& kappa) {
  if (kappa <= 0) fail(ErrorKind::ZeroNorm, "Fock normalization must be positive");
  ModuleFamily f;
  f.id = "fock rank " + std::to_string(rs.rank());
  f.find = [rs](const Weight& w) -> std::optional<Weight> {
    if (static_cast<int>(w.size()) != rs.rank()) return std::nullopt;
    return w;
  };
  f.offset = [rs, kappa](const Weight& label) { return rs.norm2(label) / (2 * kappa); };
  f.character = [rs, kappa](const Weight& label, int order) {
    return fock_character(rs, kappa, label, order, FockOffsetRule::Heisenberg);
  };
  f.leq = [](const Weight& a, const Weight& b) { return a == b; };
  return f;
}

BranchingTable decompose(const GradedCharacter& total, const ModuleFamily& family) {
  const int order = total.order();
  const Rat t0 = total.offset();
  GradedCharacter residual = total;

  struct RawEntry {
    int first_grade = 0;
    std::vector<Int> coeffs;  // indexed by grade - first_grade
  };
  std::map<Weight, RawEntry> raw;

  for (int g = 0; g <= order; ++g) {
    for (;;) {
      const auto& slice = residual.grade(g);
      if (slice.empty()) break;

      // a maximal remaining weight in the family's order must head a module
      const Weight* top = nullptr;
      for (const auto& [w, c] : slice) {
        bool maximal = true;
        for (const auto& [w2, c2] : slice) {
          if (&w2 == &w) continue;
          if (w2 != w && family.leq(w, w2)) {
            maximal = false;
            break;
          }
        }
        if (maximal) {
          top = &w;
          break;
        }
      }
      if (!top) fail(ErrorKind::Internal, "no maximal weight in a nonempty slice");

      const auto label = family.find(*top);
      if (!label)
        fail(ErrorKind::UnrecognizedExtremal,
             "extremal term " + to_string(*top) + " at grade " + std::to_string(g) +
                 " matches no module in family " + family.id);
      const Int mult = residual.coefficient(g, *top);
      if (mult < 0)
        fail(ErrorKind::NegativeMultiplicity,
             "negative multiplicity " + to_string(mult) + " for " + to_string(*label) +
                 " at grade " + std::to_string(g));

      auto& entry = raw[*label];
      if (entry.coeffs.empty()) entry.first_grade = g;
      const size_t idx = static_cast<size_t>(g - entry.first_grade);
      if (entry.coeffs.size() <= idx) entry.coeffs.resize(idx + 1, Int(0));
      entry.coeffs[idx] += mult;

      const GradedCharacter ch = family.character(*label, order);
      for (int gg = 0; g + gg <= order && gg <= ch.order(); ++gg)
        for (const auto& [w, c] : ch.grade(gg)) residual.accumulate(g + gg, w, -mult * c);
    }
  }

  BranchingTable table;
  table.family = family.id;
  table.order = order;
  for (auto& [label, entry] : raw) {
    QSeries s(t0 + entry.first_grade - family.offset(label), order - entry.first_grade);
    for (size_t i = 0; i < entry.coeffs.size(); ++i) s.at(static_cast<int>(i)) = entry.coeffs[i];
    table.entries.emplace(label, std::move(s));
  }
  return table;
}

BranchingTable gko_branching(const RootSystem& rs, int k, const Weight& mu, const Weight& nu,
                             int order) {
  if (k < 0) fail(ErrorKind::NotLevelDominant, "branching needs integer level k >= 0");
  const auto check_weight = [&](const Weight& w, int lv) {
    if (static_cast<int>(w.size()) != rs.rank()) fail(ErrorKind::RankMismatch, "weight rank");
    if (!is_integral(w) || !is_dominant(w)) fail(ErrorKind::NotDominant, "weight not dominant integral");
    if (rs.level_of(w) > lv) fail(ErrorKind::NotLevelDominant, "weight level too large");
  };
  check_weight(mu, k);
  check_weight(nu, 1);

  const GradedCharacter total = mul(integrable_character_cached(rs, k, mu, order),
                                    integrable_character_cached(rs, 1, nu, order));
  BranchingTable table = decompose(total, integrable_family(rs, k + 1));
  table.inputs = {{"algebra", rs.name()},
                  {"k", std::to_string(k)},
                  {"mu", to_string(mu)},
                  {"nu", to_string(nu)}};

  // selection rule: exactly the level-(k+1) dominants with lambda-mu-nu in the
  // root lattice may appear, and each of those must appear with the lowest
  // exponent w_h(ell, mu - (ell+h)lambda)
  const Rat ell = ell_of(rs, Rat(k));
  const Rat t = ell + rs.dual_coxeter();
  const Weight mu_nu = add(mu, nu);
  for (const auto& lambda : rs.dominant_weights_of_level(k + 1)) {
    const bool allowed = rs.in_root_lattice(sub(lambda, mu_nu));
    const auto it = table.entries.find(lambda);
    if (!allowed) {
      if (it != table.entries.end())
        fail(ErrorKind::DimensionMismatch,
             "selection rule violated: " + to_string(lambda) + " appears");
      continue;
    }
    if (it == table.entries.end())
      fail(ErrorKind::DimensionMismatch,
           "selection rule violated: " + to_string(lambda) + " missing");
    const Rat expect = w_h(rs, ell, sub(mu, scale(t, lambda)));
    if (it->second.offset() != expect)
      fail(ErrorKind::DimensionMismatch,
           "branching offset for " + to_string(lambda) + " is " + to_string(it->second.offset()) +
               ", predicted " + to_string(expect));
  }
  return table;
}

BranchingTable heisenberg_coset_decompose(const GradedCharacter& total,
                                          const RootSystem& charge_rs, const Rat& kappa) {
  if (total.rank() != charge_rs.rank())
    fail(ErrorKind::RankMismatch, "charge grading rank mismatch");
  BranchingTable table = decompose(total, fock_family(charge_rs, kappa));
  table.inputs = {{"kappa", to_string(kappa)}};
  return table;
}

std::vector<std::vector<Rat>> restrict_typeA_matrix(int m) {
  if (m < 1) fail(ErrorKind::InvalidFamilyRank, "type A restriction needs m >= 1");
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i + 1 < m; ++i) {
    std::vector<Rat> row(static_cast<size_t>(m), Rat(0));
    row[static_cast<size_t>(i)] = 1;
    rows.push_back(row);
  }
  std::vector<Rat> charge(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) charge[static_cast<size_t>(j)] = j + 1;
  rows.push_back(charge);
  return rows;
}

GradedCharacter restrict_typeA(const GradedCharacter& x, int m) {
  if (x.rank() != m)
    fail(ErrorKind::DimensionMismatch, "type A restriction: character rank must equal m");
  return map_weights(x, restrict_typeA_matrix(m));
}

GenericCheckResult generic_decomposition_check(const RootSystem& rs, const Rat& k,
                                               const Weight& mu, const Weight& nu, int order) {
  const Rat tk = k + rs.dual_coxeter();
  if (tk <= 0) fail(ErrorKind::UnsupportedParams, "generic check needs k + h > 0");
  if (denominator(tk) == 1) fail(ErrorKind::UnsupportedParams, "generic check needs non-integral k+h");
  const Rat ell = ell_of(rs, k);
  const Rat t = ell + rs.dual_coxeter();

  const GradedCharacter lhs = mul(weyl_module_character(rs, k, mu, order),
                                  integrable_character_cached(rs, 1, nu, order));
  const Rat t0 = lhs.offset();

  // Certified cutoff: gap(lambda) >= (t/2)s^2 - B s - t0 with s = |lambda|,
  // B = |mu| + (1-t)|rho|, so all contributing lambda have
  // s <= (B + sqrt(B^2 + 2t(t0+order)))/t and level <= sqrt(2) s.
  const Rat b_up = sqrt_upper(rs.norm2(mu)) + (1 - t) * sqrt_upper(rs.norm2(rs.rho()));
  const Rat s_max = (b_up + sqrt_upper(b_up * b_up + 2 * t * (t0 + order))) / t;
  const Int level_max = ceil_rat(sqrt_upper(Rat(2)) * s_max);

  GradedCharacter numerator_sum(rs.rank(), t0, order);
  int terms = 0;
  const Weight mu_nu = add(mu, nu);
  for (const auto& lambda :
       rs.dominant_weights_of_level(static_cast<int>(level_max))) {
    if (!rs.in_root_lattice(sub(lambda, mu_nu))) continue;
    const Rat gap = sugawara_h(rs, k + 1, lambda) + w_h(rs, ell, sub(mu, scale(t, lambda))) - t0;
    if (gap > order) continue;
    if (!is_integer(gap) || gap < 0)
      fail(ErrorKind::Internal, "decomposition grade gap not a nonnegative integer");
    const int g = static_cast<int>(numerator(gap));
    ++terms;
    for (const auto& [w, c] : finite_character(rs, lambda)) numerator_sum.accumulate(g, w, c);
  }

  apply_loop_denominator_inverse(rs, numerator_sum);
  const GradedCharacter rhs =
      mul(numerator_sum, colored_partition_series(rs.rank(), order));

  GenericCheckResult res;
  res.lambda_terms = terms;
  res.holds = !first_mismatch(lhs, rhs, &res.mismatch);
  res.dominated = true;
  for (int g = 0; g <= order && res.dominated; ++g) {
    std::map<Weight, Int> diff = rhs.grade(g);
    for (const auto& [w, c] : lhs.grade(g)) diff[w] -= c;
    for (const auto& [w, c] : diff)
      if (c < 0) {
        res.dominated = false;
        break;
      }
  }
  return res;
}

// ---- serialization ------------------------------------------------------

std::string BranchingTable::serialize() const {
  Json j;
  Json in = Json::object();
  for (const auto& [key, val] : inputs) in[key] = val;
  j["inputs"] = in;
  j["family"] = family;
  j["order"] = order;
  Json entries_json = Json::array();
  for (const auto& [label, series] : entries) {
    Json e;
    Json coords = Json::array();
    for (const auto& c : label) coords.push_back(to_string(c));
    e["label"] = coords;
    e["offset"] = to_string(series.offset());
    Json coeffs = Json::array();
    for (int g = 0; g <= series.order(); ++g) coeffs.push_back(to_string(series.at(g)));
    e["coeffs"] = coeffs;
    entries_json.push_back(e);
  }
  j["entries"] = entries_json;
  return j.dump();
}

std::string BranchingTable::serialize_csv() const {
  std::ostringstream out;
  out << "label,offset,grade,coefficient\n";
  for (const auto& [label, series] : entries) {
    std::string ls = to_string(label);
    for (int g = 0; g <= series.order(); ++g)
      out << '"' << ls << "\"," << to_string(series.offset()) << ',' << g << ','
          << to_string(series.at(g)) << '\n';
  }
  return out.str();
}

}  // namespace wcoset
