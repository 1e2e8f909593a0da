#include <doctest.h>

#include <omp.h>

#include <set>

#include "hilbert/error.hpp"
#include "hilbert/lemma_suite.hpp"

using namespace hilbert;
namespace ls = hilbert::lemma_suite;

TEST_CASE("registry names are unique") {
  std::set<std::string> names;
  for (const auto& c : ls::registry()) {
    CHECK(names.insert(c.name).second);
    CHECK(!c.statement.empty());
    CHECK(c.body);
  }
  CHECK(names.count("one_dim_loewner_order") == 1);
  CHECK(names.size() >= 40);
}

TEST_CASE("one-dimensional Loewner check passes at max_dim 1") {
  const auto rep = ls::run_checks(42, 1, 10, std::vector<std::string>{"one_dim_loewner_order"});
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].pass == 10);
  CHECK(rep.checks[0].fail == 0);
}

TEST_CASE("the full suite passes and is reproducible") {
  const auto rep = ls::run_checks(42, 6, 50);
  for (const auto& c : rep.checks) {
    INFO(c.name);
    CHECK(c.fail == 0);
    CHECK(c.pass == 50);
    CHECK(!c.first_fail_seed);
  }
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  const auto parallel = ls::run_checks(42, 6, 50);
  omp_set_num_threads(saved);
  const auto serial = ls::run_checks(42, 6, 50, std::nullopt, {}, ls::Execution::Serial);
  CHECK(rep == parallel);
  CHECK(rep == serial);
  CHECK(ls::report_to_json(rep).dump() == ls::report_to_json(serial).dump());
}

TEST_CASE("filters and argument errors") {
  const auto rep = ls::run_checks(1, 4, 3, std::vector<std::string>{"orthomodular", "double_adj"});
  REQUIRE(rep.checks.size() == 2);
  // registry order, not filter order
  CHECK(rep.checks[0].name == "double_adj");
  CHECK_THROWS_AS(ls::run_checks(1, 4, 3, std::vector<std::string>{"no_such_lemma"}), Error);
  CHECK_THROWS_AS(ls::run_checks(1, 0, 3), Error);
  CHECK_THROWS_AS(ls::run_checks(1, 4, 0), Error);
}

TEST_CASE("a failing check reports a replayable seed") {
  // too strict a tolerance makes residual-based checks fail
  Tolerance harsh{1e-300, 1e-300, 1e-300};
  const auto rep = ls::run_checks(3, 6, 20, std::vector<std::string>{"cinner_add_right"}, harsh);
  REQUIRE(rep.checks.size() == 1);
  const auto& c = rep.checks[0];
  REQUIRE(c.fail > 0);
  CHECK(c.pass + c.fail == 20);
  REQUIRE(c.first_fail_seed);
  const auto again = ls::replay("cinner_add_right", *c.first_fail_seed, 6, harsh);
  CHECK_FALSE(again.pass);
  CHECK_FALSE(rep.all_passed());
}

TEST_CASE("json report schema") {
  const auto rep = ls::run_checks(9, 3, 2, std::vector<std::string>{"double_adj"});
  const auto j = ls::report_to_json(rep);
  REQUIRE(j.contains("checks"));
  const auto& c = j["checks"][0];
  CHECK(c["name"] == "double_adj");
  CHECK(c["pass"] == 2);
  CHECK(c["fail"] == 0);
  CHECK(c["max_residual"].is_number());
  CHECK(c["first_fail_seed"].is_null());
}
