#include <doctest.h>

#include "arbor/error.hpp"
#include "arbor/random.hpp"
#include "arbor/selftest.hpp"

using namespace arbor;

TEST_CASE("seeded streams") {
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 3));
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.below(7);
    CHECK(x == b.below(7));
    CHECK(x < 7);
  }
  Rng c(6);
  for (int i = 0; i < 100; ++i) {
    const auto v = c.between(-3, 3);
    CHECK((v >= -3 && v <= 3));
  }
}

TEST_CASE("small selftest is deterministic and passes") {
  RunConfig cfg;
  cfg.seed = 1;
  cfg.size_bound = 5;
  cfg.sample_count = 10;
  auto first = run_selftest(cfg);
  auto second = run_selftest(cfg);
  CHECK(first.render() == second.render());
  CHECK(first.passed());
  CHECK(first.suites.size() == suite_names().size());
  for (const auto& s : first.suites) CHECK(s.cases > 0);
  CHECK(first.render().find("total: ") != std::string::npos);
}

TEST_CASE("config errors") {
  RunConfig cfg;
  cfg.size_bound = 0;
  CHECK_THROWS_AS(run_selftest(cfg), InvalidArgument);
  cfg.size_bound = 11;
  CHECK_THROWS_AS(run_selftest(cfg), InvalidArgument);
  RunConfig s;
  s.sample_count = 0;
  CHECK_THROWS_AS(run_selftest(s), InvalidArgument);
  CHECK_THROWS_AS(run_suite("nope", RunConfig{}), InvalidArgument);
}

TEST_CASE("reproducers") {
  RunConfig cfg;
  cfg.seed = 9;
  cfg.sample_count = 3;
  CHECK(reproducer(cfg, "tz") == "arbor selftest --seed 9 --samples 3 --suite tz");
}
