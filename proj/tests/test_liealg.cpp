#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>

#include "wcoset/finite_char.hpp"
#include "wcoset/root_system.hpp"

using namespace wcoset;

namespace {

template <class F>
std::optional<ErrorKind> kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("algebra names parse and reject") {
  CHECK(parse_algebra("A1").rank() == 1);
  CHECK(parse_algebra("D4").name() == "D4");
  CHECK(parse_algebra("E8").series() == Series::E);
  CHECK(kind_of([] { parse_algebra("B2"); }).has_value());
  CHECK(kind_of([] { parse_algebra("A0"); }).has_value());
  CHECK(kind_of([] { parse_algebra("D3"); }) == ErrorKind::InvalidFamilyRank);
  CHECK(kind_of([] { parse_algebra("E9"); }) == ErrorKind::InvalidFamilyRank);
  CHECK(kind_of([] { parse_algebra("A1x"); }).has_value());
  CHECK(kind_of([] { parse_algebra(""); }).has_value());
}

TEST_CASE("cartan data") {
  const RootSystem a2(Series::A, 2);
  CHECK(a2.cartan() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(a2.inner(Weight{1, 0}, Weight{0, 1}) == Rat(1, 3));
  CHECK(a2.inner(Weight{1, 0}, Weight{1, 0}) == Rat(2, 3));
  CHECK(a2.simple_root(0) == Weight{2, -1});
  const auto gram = a2.root_gram();
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) CHECK(gram[i][j] == a2.cartan()[i][j]);
}

TEST_CASE("root counts, coxeter numbers, dimensions") {
  struct Row {
    const char* name;
    size_t roots;
    int h;
    int dim;
  };
  const Row rows[] = {{"A1", 1, 2, 3},   {"A2", 3, 3, 8},    {"A3", 6, 4, 15},
                      {"D4", 12, 6, 28}, {"D5", 20, 8, 45},  {"E6", 36, 12, 78},
                      {"E7", 63, 18, 133}, {"E8", 120, 30, 248}};
  for (const Row& r : rows) {
    const RootSystem rs = parse_algebra(r.name);
    CAPTURE(r.name);
    CHECK(rs.num_positive_roots() == r.roots);
    CHECK(rs.dual_coxeter() == r.h);
    CHECK(rs.dimension() == r.dim);
    CHECK(rs.level_of(rs.highest_root()) == 2);
    CHECK(rs.norm2(rs.highest_root()) == 2);
    // strange formula |rho|^2 = h dim / 12
    CHECK(rs.norm2(rs.rho()) == Rat(Int(r.h) * r.dim, 12));
    // adjoint dimension from the Weyl formula
    CHECK(weyl_dimension(rs, rs.highest_root()) == rs.dimension());
    // highest root sits at the marks in the root basis
    const auto coords = rs.root_coordinates(rs.highest_root());
    for (int i = 0; i < rs.rank(); ++i) CHECK(coords[static_cast<size_t>(i)] == rs.marks()[static_cast<size_t>(i)]);
  }
}

TEST_CASE("marks") {
  CHECK(parse_algebra("A2").marks() == std::vector<int>{1, 1});
  CHECK(parse_algebra("D4").marks() == std::vector<int>{1, 2, 1, 1});
  CHECK(parse_algebra("E8").marks() == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("reflections and dominization") {
  const RootSystem d4(Series::D, 4);
  const Weight rho = d4.rho();
  for (int i = 0; i < 4; ++i) {
    const Weight s = d4.reflect(rho, i);
    CHECK(s == sub(rho, d4.simple_root(i)));
    CHECK(d4.reflect(s, i) == rho);
    const auto [dom, det] = d4.dominize(s);
    CHECK(dom == rho);
    CHECK(det == -1);
  }
  CHECK(d4.dominize(rho) == std::pair<Weight, int>{rho, 1});
}

TEST_CASE("orbits") {
  const RootSystem a2(Series::A, 2);
  CHECK(a2.orbit(Weight{1, 0}).size() == 3);
  CHECK(a2.orbit(a2.rho()).size() == 6);
  CHECK(a2.orbit(zero_weight(2)).size() == 1);
  CHECK(parse_algebra("A3").orbit(Weight{1, 0, 0}).size() == 4);
  CHECK(parse_algebra("D4").orbit(Weight{1, 0, 0, 0}).size() == 8);
  // every orbit element dominizes back with a consistent sign
  for (const Weight& w : a2.orbit(a2.rho())) {
    const auto [dom, det] = a2.dominize(w);
    CHECK(dom == a2.rho());
    CHECK((det == 1 || det == -1));
  }
}

TEST_CASE("root lattice membership and cone order") {
  const RootSystem a1(Series::A, 1);
  CHECK(a1.in_root_lattice(Weight{2}));
  CHECK(!a1.in_root_lattice(Weight{1}));
  const RootSystem a2(Series::A, 2);
  CHECK(a2.in_root_lattice(Weight{1, 1}));
  CHECK(!a2.in_root_lattice(Weight{1, 0}));
  CHECK(a2.root_cone_leq(Weight{3, 0}, Weight{2, 2}));
  CHECK(a2.root_cone_leq(Weight{0, 0}, Weight{1, 1}));
  CHECK(!a2.root_cone_leq(Weight{2, 2}, Weight{3, 0}));
  CHECK(a2.root_cone_leq(Weight{1, 1}, Weight{1, 1}));
  CHECK(kind_of([&] { a1.in_root_lattice(Weight{Rat(1, 2)}); }) == ErrorKind::NonIntegralWeight);
}

TEST_CASE("dominant weights by level") {
  CHECK(parse_algebra("A1").dominant_weights_of_level(1).size() == 2);
  CHECK(parse_algebra("A1").dominant_weights_of_level(2).size() == 3);
  CHECK(parse_algebra("A2").dominant_weights_of_level(1).size() == 3);
  CHECK(parse_algebra("A3").dominant_weights_of_level(1).size() == 4);
  CHECK(parse_algebra("D4").dominant_weights_of_level(1).size() == 4);
  CHECK(parse_algebra("E6").dominant_weights_of_level(1).size() == 3);
  CHECK(parse_algebra("E7").dominant_weights_of_level(1).size() == 2);
  CHECK(parse_algebra("E8").dominant_weights_of_level(1).size() == 1);
  for (const Weight& w : parse_algebra("D4").dominant_weights_of_level(2)) {
    CHECK(is_dominant(w));
    CHECK(parse_algebra("D4").level_of(w) <= 2);
  }
}

TEST_CASE("freudenthal multiplicities") {
  const RootSystem a2(Series::A, 2);
  const auto adj = dominant_multiplicities(a2, Weight{1, 1});
  CHECK(adj.at(Weight{1, 1}) == 1);
  CHECK(adj.at(Weight{0, 0}) == 2);
  const auto m27 = dominant_multiplicities(a2, Weight{2, 2});
  CHECK(m27.at(Weight{2, 2}) == 1);
  CHECK(m27.at(Weight{3, 0}) == 1);
  CHECK(m27.at(Weight{0, 3}) == 1);
  CHECK(m27.at(Weight{1, 1}) == 2);
  CHECK(m27.at(Weight{0, 0}) == 3);
  const RootSystem a1(Series::A, 1);
  const auto m5 = dominant_multiplicities(a1, Weight{4});
  CHECK(m5.size() == 3);
  for (const auto& [w, m] : m5) CHECK(m == 1);
}

TEST_CASE("character mass equals weyl dimension") {
  for (const char* name : {"A1", "A2", "A3", "D4"}) {
    const RootSystem rs = parse_algebra(name);
    for (const Weight& lam : rs.dominant_weights_of_level(2)) {
      Int mass = 0;
      for (const auto& [w, m] : finite_character(rs, lam)) mass += m;
      CAPTURE(name);
      CHECK(mass == weyl_dimension(rs, lam));
    }
  }
}

TEST_CASE("capped character is an exact norm filter") {
  const RootSystem a2(Series::A, 2);
  const auto full = finite_character(a2, Weight{2, 2});
  const Rat cap(4, 3);
  const auto capped = finite_character_capped(a2, Weight{2, 2}, cap);
  for (const auto& [w, m] : full) {
    if (a2.norm2(w) <= cap) {
      REQUIRE(capped.count(w) == 1);
      CHECK(capped.at(w) == m);
    } else {
      CHECK(capped.count(w) == 0);
    }
  }
}

TEST_CASE("weight parsing round trips") {
  CHECK(parse_weight("1,0,-2") == Weight{1, 0, -2});
  CHECK(parse_weight("1/2") == Weight{Rat(1, 2)});
  CHECK(to_string(Weight{1, Rat(-5, 4)}) == "(1,-5/4)");
  CHECK(kind_of([] { parse_weight("1,,2"); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { parse_rat("5/0"); }) == ErrorKind::InvalidArgument);
  CHECK(parse_rat("-5/4") == Rat(-5, 4));
  CHECK(to_string(Rat(-5, 4)) == "-5/4");
}

TEST_CASE("integer square roots") {
  for (long long n : {0LL, 1LL, 2LL, 3LL, 4LL, 99LL, 100LL, 101LL, 123456789LL}) {
    const Int r = isqrt_floor(Int(n));
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  for (const Rat& x : {Rat(2), Rat(1, 2), Rat(49, 4), Rat(123, 7)}) {
    const Rat u = sqrt_upper(x);
    CHECK(u * u >= x);
  }
}

TEST_CASE("deterministic rng") {
  Rng a{42}, b{42};
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c{7};
  for (int i = 0; i < 200; ++i) {
    const long long v = c.range(-3, 5);
    CHECK(v >= -3);
    CHECK(v <= 5);
  }
}
