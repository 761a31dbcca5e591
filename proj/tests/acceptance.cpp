// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each body returns an empty string on success or a diagnostic on failure;
// criteria with a time budget fail when they exceed it.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "motzseg/correspondence.hpp"
#include "motzseg/monoid.hpp"
#include "motzseg/motzkin.hpp"
#include "motzseg/multisegment.hpp"

using namespace motzseg;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, double budget_seconds,
               const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string diagnostic;
  try {
    diagnostic = body();
  } catch (const std::exception& e) {
    diagnostic = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (diagnostic.empty() && budget_seconds > 0 && elapsed >= budget_seconds) {
    diagnostic = "exceeded the " + std::to_string(budget_seconds) +
                 " s budget";
  }
  const bool pass = diagnostic.empty();
  if (!pass) ++failures;
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), elapsed, pass ? "" : " -- ", diagnostic.c_str());
}

Multisegment ms(const std::string& literal) {
  return parse_multisegment(literal);
}

MotzkinPath random_path(std::mt19937_64& rng, int length) {
  std::vector<int> heights(static_cast<std::size_t>(length) + 1, 0);
  for (int i = 0; i < length; ++i) {
    std::vector<int> options;
    for (int delta = -1; delta <= 1; ++delta) {
      const int next = heights[static_cast<std::size_t>(i)] + delta;
      if (next >= 0 && next <= length - i - 1) options.push_back(next);
    }
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    heights[static_cast<std::size_t>(i) + 1] = options[pick(rng)];
  }
  return MotzkinPath(std::move(heights));
}

std::vector<std::vector<Multisegment>> flat_universe(int max_n) {
  std::vector<std::vector<Multisegment>> flat;
  for (int n = 0; n <= max_n; ++n) {
    std::vector<Multisegment> level;
    for (const Multisegment& m : all_weight_valid(n)) {
      if (is_flat(m)) level.push_back(m);
    }
    flat.push_back(std::move(level));
  }
  return flat;
}

}  // namespace

int main() {
  criterion(1, "path counts match the recurrence", 10.0, [] {
    const std::vector<std::int64_t> pinned = {1,   1,   2,   4,    9,   21,
                                              51,  127, 323, 835,  2188};
    for (int n = 0; n <= 10; ++n) {
      const auto paths = enumerate_paths(n);
      if (static_cast<std::int64_t>(paths.size()) !=
          pinned[static_cast<std::size_t>(n)]) {
        return "enumeration at n=" + std::to_string(n) + " gave " +
               std::to_string(paths.size());
      }
      if (motzkin_number(n) != pinned[static_cast<std::size_t>(n)]) {
        return "recurrence at n=" + std::to_string(n) + " gave " +
               std::to_string(motzkin_number(n));
      }
    }
    return std::string();
  });

  criterion(2, "excessive multisegments are Motzkin-counted", 60.0, [] {
    for (int n = 0; n <= 10; ++n) {
      const auto entries = enumerate_excessive(n);
      if (static_cast<std::int64_t>(entries.size()) != motzkin_number(n)) {
        return "count mismatch at n=" + std::to_string(n);
      }
      std::set<Multisegment> images;
      for (const auto& e : entries) {
        if (!is_excessive(e.multisegment)) {
          return "non-excessive image " + to_string(e.multisegment);
        }
        images.insert(e.multisegment);
      }
      if (images.size() != entries.size()) {
        return "duplicate images at n=" + std::to_string(n);
      }
    }
    return std::string();
  });

  criterion(3, "brute-force oracle equality through length 5", 300.0, [] {
    const std::vector<std::size_t> sizes = {1, 1, 2, 4, 9, 21};
    for (int n = 0; n <= 5; ++n) {
      const auto oracle = brute_force_excessive(n);
      if (oracle.size() != sizes[static_cast<std::size_t>(n)]) {
        return "oracle size at n=" + std::to_string(n) + " is " +
               std::to_string(oracle.size());
      }
      std::set<Multisegment> images;
      for (const auto& e : enumerate_excessive(n)) {
        images.insert(e.multisegment);
      }
      if (oracle != images) {
        return "oracle set differs at n=" + std::to_string(n);
      }
    }
    return std::string();
  });

  criterion(4, "both constructions of the map agree", 0.0, [] {
    for (int n = 0; n <= 10; ++n) {
      for (const MotzkinPath& g : enumerate_paths(n)) {
        if (fr(g) != fr_recursive(g)) {
          return "mismatch at " + to_string(g);
        }
      }
    }
    return std::string();
  });

  criterion(5, "the map and its inverse round trip", 0.0, [] {
    for (int n = 0; n <= 10; ++n) {
      for (const auto& e : enumerate_excessive(n)) {
        if (fr_inverse(e.multisegment) != e.path) {
          return "inverse failed at " + to_string(e.path);
        }
        if (fr(fr_inverse(e.multisegment)) != e.multisegment) {
          return "forward round trip failed at " + to_string(e.multisegment);
        }
      }
    }
    return std::string();
  });

  criterion(6, "fixture identities hold exactly", 0.0, [] {
    const Multisegment m3 = ms("n=3: 1-1,1-2,1-3*2,2-3,3-3");
    const Multisegment n4 = ms("n=4: 1-1*2,1-3,1-4*2,2-3,2-4,4-4*2");
    if (to_string(concat(m3, n4)) !=
        "n=7: 1-1,1-2,1-6,1-7*5,2-4,3-4,5-6,5-7,7-7*2") {
      return std::string("left-right concatenation fixture failed");
    }
    if (to_string(concat(n4, m3)) !=
        "n=7: 1-1*2,1-3,1-7*5,2-3,2-7,4-5,4-6,6-7,7-7") {
      return std::string("right-left concatenation fixture failed");
    }
    if (to_string(suspend(n4)) !=
        "n=6: 1-1,1-2*2,1-4,1-5,1-6*2,2-6,3-4,3-6,5-6*2,6-6") {
      return std::string("suspension fixture failed");
    }
    const Multisegment a = ms("n=2: 1-1*3,2-2*3");
    const Multisegment b = ms("n=4: 1-1*5,2-3*3,2-4*2,4-4*3");
    const Multisegment b_prime = ms("n=4: 1-1*3,1-3*2,2-3*3,4-4*5");
    const Multisegment c =
        ms("n=6: 1-1*3,1-3*2,1-6*2,2-3*3,4-5*3,4-6*2,6-6*3");
    if (concat(a, b) != c || concat(b_prime, a) != c) {
      return std::string("the two primitive decompositions fixture failed");
    }
    const Multisegment worked =
        ms("n=9: 1-2,1-5,1-8,1-9*7,3-4,5-9,6-7,8-9,9-9");
    if (to_string(fr_inverse(worked)) != "heights:0,0,1,0,1,2,1,2,1,0") {
      return std::string("worked-example inversion failed");
    }
    if (factorize(worked).split_columns != std::vector<int>{1, 3}) {
      return std::string("worked-example split columns failed");
    }
    const auto profiles = column_profiles(worked);
    if (!profiles[5].full || profiles[5].special_full) {
      return std::string("worked-example sixth column profile failed");
    }
    return std::string();
  });

  criterion(7, "homomorphism holds on 1000 seeded random pairs", 0.0, [] {
    std::mt19937_64 rng(20260810);
    for (int i = 0; i < 1000; ++i) {
      std::uniform_int_distribution<int> total_dist(0, 12);
      const int total = total_dist(rng);
      std::uniform_int_distribution<int> split_dist(0, total);
      const int p = split_dist(rng);
      const MotzkinPath g = random_path(rng, p);
      const MotzkinPath h = random_path(rng, total - p);
      if (fr(concat_paths(g, h)) != concat(fr(g), fr(h))) {
        return "seam case failed for " + to_string(g) + " and " + to_string(h);
      }
      if (fr(suspend_path(g)) != suspend(fr(g))) {
        return "suspension case failed for " + to_string(g);
      }
    }
    return std::string();
  });

  criterion(8, "structural inverses hold", 0.0, [] {
    const auto flat = flat_universe(5);
    for (int n = 0; n <= 4; ++n) {
      for (const Multisegment& m : flat[static_cast<std::size_t>(n)]) {
        if (desuspend(suspend(m)) != m) {
          return "desuspension failed on " + to_string(m);
        }
      }
    }
    // larger random flat elements, grown by class-preserving operations
    std::mt19937_64 rng(987654321);
    std::vector<Multisegment> seeds;
    for (int n = 1; n <= 4; ++n) {
      for (const Multisegment& m : flat[static_cast<std::size_t>(n)]) {
        seeds.push_back(m);
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 1000; ++i) {
      Multisegment m = seeds[pick(rng)];
      while (m.length() < 5) {
        m = coin(rng) == 0 ? suspend(m) : concat(m, seeds[pick(rng)]);
      }
      if (desuspend(suspend(m)) != m) {
        return "desuspension failed on " + to_string(m);
      }
    }
    for (int total = 2; total <= 5; ++total) {
      for (int p = 1; p < total; ++p) {
        const int q = total - p;
        for (const Multisegment& a : flat[static_cast<std::size_t>(p)]) {
          for (const Multisegment& b : flat[static_cast<std::size_t>(q)]) {
            const Multisegment c = concat(a, b);
            if (left_restrict(c, p) != a || right_restrict(c, q) != b) {
              return "restriction failed on " + to_string(a) + " with " +
                     to_string(b);
            }
          }
        }
      }
    }
    return std::string();
  });

  criterion(9, "suspension markers characterize suspensions", 0.0, [] {
    const auto flat = flat_universe(5);
    for (int n = 2; n <= 5; ++n) {
      std::set<Multisegment> suspensions;
      for (const Multisegment& m : flat[static_cast<std::size_t>(n - 2)]) {
        suspensions.insert(suspend(m));
      }
      for (const Multisegment& m : flat[static_cast<std::size_t>(n)]) {
        const bool markers = m.contains(Segment(1, n - 1)) &&
                             m.contains(Segment(2, n));
        if (markers != (suspensions.count(m) == 1)) {
          return "marker characterization failed on " + to_string(m);
        }
      }
    }
    return std::string();
  });

  if (failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
