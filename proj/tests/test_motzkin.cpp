#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "motzseg/errors.hpp"
#include "motzseg/motzkin.hpp"

using namespace motzseg;

TEST_CASE("path literals in all three forms") {
  CHECK(parse_path("heights:0") == MotzkinPath());
  CHECK(parse_path("steps:UFD") == MotzkinPath({0, 1, 1, 0}));
  CHECK(parse_path("0,1,0") == MotzkinPath({0, 1, 0}));
  CHECK(parse_path("steps:") == MotzkinPath());
  CHECK(parse_path(" heights: 0 , 1 , 0 ") == MotzkinPath({0, 1, 0}));
  CHECK(parse_path("steps:ufd") == MotzkinPath({0, 1, 1, 0}));
}

TEST_CASE("path parse errors") {
  CHECK_THROWS_AS(parse_path("heights:0,1,2,1"), parse_error);  // ends high
  CHECK_THROWS_AS(parse_path("heights:1,0"), parse_error);      // starts high
  CHECK_THROWS_AS(parse_path("heights:0,2,0"), parse_error);    // big step
  CHECK_THROWS_AS(parse_path("heights:"), parse_error);
  CHECK_THROWS_AS(parse_path("heights:0,"), parse_error);
  CHECK_THROWS_AS(parse_path("steps:D"), parse_error);   // dips below zero
  CHECK_THROWS_AS(parse_path("steps:U"), parse_error);   // ends high
  CHECK_THROWS_AS(parse_path("steps:UXD"), parse_error); // unknown step
  CHECK_THROWS_AS(parse_path(""), parse_error);
  CHECK_THROWS_AS(MotzkinPath({0, 1}), std::invalid_argument);
}

TEST_CASE("canonical serialization and the step codec") {
  const MotzkinPath g({0, 0, 1, 0});
  CHECK(to_string(g) == "heights:0,0,1,0");
  CHECK(to_steps(g) == "FUD");
  CHECK(parse_path(to_string(g)) == g);
  CHECK(parse_path("steps:" + to_steps(g)) == g);
  CHECK(to_steps(MotzkinPath()) == "");
}

TEST_CASE("concatenation of paths") {
  const MotzkinPath flat({0, 0});
  const MotzkinPath bump({0, 1, 0});
  CHECK(concat_paths(MotzkinPath(), bump) == bump);
  CHECK(concat_paths(bump, MotzkinPath()) == bump);
  CHECK(concat_paths(flat, bump) == MotzkinPath({0, 0, 1, 0}));
  const MotzkinPath tall({0, 1, 2, 1, 2, 1, 0});
  CHECK(concat_paths(concat_paths(flat, bump), tall) ==
        MotzkinPath({0, 0, 1, 0, 1, 2, 1, 2, 1, 0}));
}

TEST_CASE("suspension of paths") {
  CHECK(suspend_path(MotzkinPath()) == MotzkinPath({0, 1, 0}));
  CHECK(suspend_path(MotzkinPath({0, 0})) == MotzkinPath({0, 1, 1, 0}));
  CHECK(suspend_path(MotzkinPath({0, 1, 0, 1, 0})) ==
        MotzkinPath({0, 1, 2, 1, 2, 1, 0}));
}

TEST_CASE("path factorization at interior zeros") {
  CHECK(factorize_path(MotzkinPath()).empty());
  const auto factors =
      factorize_path(MotzkinPath({0, 0, 1, 0, 1, 2, 1, 2, 1, 0}));
  REQUIRE(factors.size() == 3);
  CHECK(factors[0] == MotzkinPath({0, 0}));
  CHECK(factors[1] == MotzkinPath({0, 1, 0}));
  CHECK(factors[2] == MotzkinPath({0, 1, 2, 1, 2, 1, 0}));
  const auto single = factorize_path(MotzkinPath({0, 1, 1, 0}));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == MotzkinPath({0, 1, 1, 0}));
}

TEST_CASE("path desuspension") {
  CHECK(desuspend_path(MotzkinPath({0, 1, 0})) == MotzkinPath());
  CHECK(desuspend_path(MotzkinPath({0, 1, 2, 1, 2, 1, 0})) ==
        MotzkinPath({0, 1, 0, 1, 0}));
  CHECK_THROWS_AS(desuspend_path(MotzkinPath({0, 0, 1, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(desuspend_path(MotzkinPath({0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(desuspend_path(MotzkinPath()), std::invalid_argument);
}

TEST_CASE("primitive paths avoid interior zeros") {
  CHECK(is_primitive_path(MotzkinPath({0, 0})));
  CHECK(is_primitive_path(MotzkinPath({0, 1, 0})));
  CHECK_FALSE(is_primitive_path(MotzkinPath({0, 0, 0})));
  CHECK_FALSE(is_primitive_path(MotzkinPath()));
}

TEST_CASE("enumeration in lexicographic order") {
  {
    const auto paths = enumerate_paths(0);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0] == MotzkinPath());
  }
  {
    const auto paths = enumerate_paths(2);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0] == MotzkinPath({0, 0, 0}));
    CHECK(paths[1] == MotzkinPath({0, 1, 0}));
  }
  {
    const auto paths = enumerate_paths(4);
    REQUIRE(paths.size() == 9);
    CHECK(std::is_sorted(paths.begin(), paths.end()));
    CHECK(paths.front() == MotzkinPath({0, 0, 0, 0, 0}));
    CHECK(paths.back() == MotzkinPath({0, 1, 2, 1, 0}));
    const std::set<MotzkinPath> unique(paths.begin(), paths.end());
    CHECK(unique.size() == paths.size());
  }
  CHECK_THROWS_AS(enumerate_paths(-1), std::invalid_argument);
}

TEST_CASE("Motzkin numbers from the recurrence") {
  CHECK(motzkin_number(0) == 1);
  CHECK(motzkin_number(1) == 1);
  CHECK(motzkin_number(4) == 9);
  CHECK(motzkin_number(10) == 2188);
  for (int n = 0; n <= 14; ++n) {
    CHECK(static_cast<std::int64_t>(enumerate_paths(n).size()) ==
          motzkin_number(n));
  }
  CHECK_THROWS_AS(motzkin_number(-1), std::invalid_argument);
  CHECK_THROWS_AS(motzkin_number(1000), std::overflow_error);
}

TEST_CASE("free monoid structure") {
  for (int n = 0; n <= 7; ++n) {
    for (const MotzkinPath& g : enumerate_paths(n)) {
      const auto factors = factorize_path(g);
      MotzkinPath joined;
      for (const MotzkinPath& f : factors) {
        CHECK(is_primitive_path(f));
        if (f.length() >= 2) {
          CHECK(suspend_path(desuspend_path(f)) == f);
        }
        joined = concat_paths(joined, f);
      }
      CHECK(joined == g);
      CHECK(factorize_path(joined) == factors);
    }
  }
}

TEST_CASE("suspension image is exactly the long primitives") {
  for (int n = 2; n <= 8; ++n) {
    std::set<MotzkinPath> suspensions;
    for (const MotzkinPath& g : enumerate_paths(n - 2)) {
      suspensions.insert(suspend_path(g));
    }
    CHECK(suspensions.size() ==
          static_cast<std::size_t>(motzkin_number(n - 2)));  // injectivity
    for (const MotzkinPath& g : enumerate_paths(n)) {
      CHECK(is_primitive_path(g) == (suspensions.count(g) == 1));
    }
  }
}
