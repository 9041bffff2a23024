#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <optional>

#include "wcoset/verify.hpp"

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

void expect_pass(const Report& r) {
  CHECK(r.pass);
  CHECK(!r.checks.empty());
  for (const Check& c : r.checks) {
    CAPTURE(c.desc);
    CAPTURE(c.expected);
    CAPTURE(c.actual);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("gko suite") {
  const Budget b;
  expect_pass(verify_gko(parse_algebra("A1"), 1, 6, b));
  expect_pass(verify_gko(parse_algebra("A1"), 0, 5, b));
}

TEST_CASE("vacuum structure suite") {
  const Budget b;
  expect_pass(verify_main1_vacuum(parse_algebra("A1"), 1, 6, b));
}

TEST_CASE("level-rank suites") {
  const Budget b;
  expect_pass(verify_levelrank_A(2, 1, 8, b));
  expect_pass(verify_levelrank_A(3, 1, 6, b));
  expect_pass(verify_levelrank_A(2, 2, 6, b));
  expect_pass(verify_levelrank_A(4, 3, 0, b));  // charge-free: central charges only
  expect_pass(verify_levelrank_D_cc(8, 4));
  expect_pass(verify_levelrank_D_cc(8, 8));
  CHECK(kind_of([&] { verify_levelrank_D_cc(6, 4); }) == ErrorKind::UnsupportedParams);
  CHECK(kind_of([&] { verify_levelrank_D_cc(9, 4); }) == ErrorKind::UnsupportedParams);
}

TEST_CASE("chain central charge suite") {
  expect_pass(verify_ks_cc(3, 3));
  expect_pass(verify_ks_cc(5, 5));
  CHECK(kind_of([] { verify_ks_cc(3, 1); }) == ErrorKind::UnsupportedParams);
}

TEST_CASE("unitarity boundary") {
  expect_pass(verify_unitarity(parse_algebra("A1"), Int(10)));
  expect_pass(verify_unitarity(parse_algebra("A2"), Int(12)));
  expect_pass(verify_unitarity(parse_algebra("D4"), Int(12)));
  CHECK(kind_of([] { verify_unitarity(parse_algebra("A1"), Int(2)); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("sampled rational identities") {
  expect_pass(verify_heisenberg_identity(parse_algebra("A1"), 11, 50));
  expect_pass(verify_heisenberg_identity(parse_algebra("D4"), 12, 25));
  expect_pass(verify_ffduality_cc(parse_algebra("A2"), 13, 40));
  expect_pass(verify_ffduality_cc(parse_algebra("E6"), 14, 20));
  expect_pass(verify_coset_cc_identity(parse_algebra("A1"), 15, 30, Int(10)));
  expect_pass(verify_coset_cc_identity(parse_algebra("A3"), 16, 20, Int(8)));
}

TEST_CASE("lattice route suite") {
  const Budget b;
  expect_pass(verify_frenkel_kac(parse_algebra("A1"), 6, b));
  expect_pass(verify_frenkel_kac(parse_algebra("A2"), 5, b));
}

TEST_CASE("generic decomposition suite") {
  const Budget b;
  const Report r = verify_generic_decomposition(5, 5, b);
  expect_pass(r);
  CHECK(r.seed == 5);
}

TEST_CASE("budgets") {
  const Budget b;
  CHECK(kind_of([&] { verify_gko(parse_algebra("D4"), 3, 10, b); }) ==
        ErrorKind::BudgetExceeded);  // level k+1 = 4 > 3
  CHECK(kind_of([&] { verify_gko(parse_algebra("D5"), 1, 6, b); }) == ErrorKind::BudgetExceeded);
  CHECK(kind_of([&] { verify_frenkel_kac(parse_algebra("A1"), 11, b); }) ==
        ErrorKind::BudgetExceeded);
  CHECK(kind_of([&] { enforce_budget(b, 4, 3, 10); }) == std::nullopt);

  setenv("WCOSET_BUDGET", "{\"max_rank\":2,\"max_level\":9,\"max_order\":40}", 1);
  const Budget env = budget_from_env(Budget{});
  CHECK(env.max_rank == 2);
  CHECK(env.max_level == 9);
  CHECK(env.max_order == 40);
  setenv("WCOSET_BUDGET", "{\"max_rank\":\"nope\"}", 1);
  CHECK(kind_of([] { budget_from_env(Budget{}); }) == ErrorKind::InvalidArgument);
  setenv("WCOSET_BUDGET", "not json", 1);
  CHECK(kind_of([] { budget_from_env(Budget{}); }) == ErrorKind::InvalidArgument);
  unsetenv("WCOSET_BUDGET");
  const Budget plain = budget_from_env(Budget{});
  CHECK(plain.max_rank == 4);
}

TEST_CASE("reports are deterministic and well formed") {
  const Report a = verify_unitarity(parse_algebra("A1"), Int(8));
  const Report b = verify_unitarity(parse_algebra("A1"), Int(8));
  CHECK(a.serialize(false) == b.serialize(false));
  CHECK(a.suite == "unitarity");
  const std::string text = a.text();
  CHECK(text.find("unitarity") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
  // wall time is pinned to zero unless requested, keeping output reproducible
  CHECK(a.serialize(false).find("\"millis\": 0") != std::string::npos);

  Report r;
  r.suite = "demo";
  r.add("two equals two", "toy", "2", "2");
  r.add("two equals three", "toy", "2", "3");
  CHECK(!r.pass);
  CHECK(r.checks[0].pass);
  CHECK(!r.checks[1].pass);
  CHECK(r.text().find("FAIL") != std::string::npos);
}
