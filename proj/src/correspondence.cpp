#include "motzseg/correspondence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace motzseg {

namespace {

RankTuple fr_rank(const MotzkinPath& g) {
  const int n = g.length();
  RankTuple r(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      // direct scan over i <= k <= l <= m <= j; n stays small enough that
      // nothing smarter is warranted
      int best = 0;
      for (int k = i; k <= j; ++k) {
        for (int l = k; l <= j; ++l) {
          const int rise = g.height(l) + g.height(l - 1) - g.height(k - 1);
          for (int m = l; m <= j; ++m) {
            best = std::max(best, rise - g.height(m));
          }
        }
      }
      r.set(i, j, n + 1 - best);
    }
  }
  return r;
}

Multisegment unit_multisegment() {
  return Multisegment(1, {Segment(1, 1), Segment(1, 1)});
}

}  // namespace

Multisegment fr(const MotzkinPath& g) {
  try {
    return from_rank_tuple(fr_rank(g));
  } catch (const rank_error& e) {
    throw std::logic_error(
        std::string("rank formula produced an invalid tuple for ") +
        to_string(g) + ": " + e.what());
  }
}

Multisegment fr_recursive(const MotzkinPath& g) {
  Multisegment image;
  for (const MotzkinPath& factor : factorize_path(g)) {
    const Multisegment piece =
        factor.length() == 1
            ? unit_multisegment()
            : suspend(fr_recursive(desuspend_path(factor)));
    image = concat(image, piece);
  }
  return image;
}

namespace {

// Recursion body; the input was validated excessive at entry, and the class
// is closed under restriction and desuspension.
MotzkinPath fr_inverse_unchecked(const Multisegment& m) {
  const int n = m.length();
  if (n == 0) return MotzkinPath();
  if (n == 1) return MotzkinPath({0, 0});
  const auto seams = special_full_columns(m);
  if (!seams.empty()) {
    const int p = seams.front();
    return concat_paths(fr_inverse_unchecked(left_restrict(m, p)),
                        fr_inverse_unchecked(right_restrict(m, n - p)));
  }
  if (!m.contains(Segment(1, n - 1)) || !m.contains(Segment(2, n))) {
    throw std::logic_error(
        "primitive excessive multisegment lacks suspension markers: " +
        to_string(m));
  }
  return suspend_path(fr_inverse_unchecked(desuspend(m)));
}

}  // namespace

MotzkinPath fr_inverse(const Multisegment& m) {
  require_flat(m);
  const auto triples = find_linked_triples(m);
  if (!triples.empty()) throw linked_triple_error(triples.front());
  return fr_inverse_unchecked(m);
}

std::vector<ExcessiveEntry> enumerate_excessive(int n) {
  std::vector<ExcessiveEntry> out;
  for (MotzkinPath& g : enumerate_paths(n)) {
    Multisegment image = fr(g);
    RankTuple rank = rank_tuple(image);
    out.push_back({std::move(g), std::move(image), std::move(rank)});
  }
  return out;
}

namespace {

void check_universe_cap(int n, bool allow_length_six) {
  const int cap = allow_length_six ? 6 : 5;
  if (n < 0 || n > cap) {
    throw std::invalid_argument(
        "brute-force universe supports lengths 0.." + std::to_string(cap) +
        ", got " + std::to_string(n));
  }
}

}  // namespace

std::vector<Multisegment> all_weight_valid(int n, bool allow_length_six) {
  check_universe_cap(n, allow_length_six);
  if (n == 0) return {Multisegment()};

  // one row per cut mask: an interval partition of [1, n]
  std::vector<std::vector<Segment>> rows;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<Segment> row;
    int start = 1;
    for (int k = 1; k < n; ++k) {
      if (mask & (1u << (k - 1))) {
        row.emplace_back(start, k);
        start = k + 1;
      }
    }
    row.emplace_back(start, n);
    rows.push_back(std::move(row));
  }

  std::set<Multisegment> seen;
  std::vector<Segment> stack;
  // multisets of n+1 rows, indices nondecreasing
  auto choose = [&](auto&& self, std::size_t first, int remaining) -> void {
    if (remaining == 0) {
      seen.insert(Multisegment(n, stack));
      return;
    }
    for (std::size_t idx = first; idx < rows.size(); ++idx) {
      stack.insert(stack.end(), rows[idx].begin(), rows[idx].end());
      self(self, idx, remaining - 1);
      stack.erase(stack.end() - static_cast<std::ptrdiff_t>(rows[idx].size()),
                  stack.end());
    }
  };
  choose(choose, 0, n + 1);
  return {seen.begin(), seen.end()};
}

std::set<Multisegment> brute_force_excessive(int n, bool allow_length_six) {
  check_universe_cap(n, allow_length_six);
  std::set<Multisegment> out;
  for (const Multisegment& m : all_weight_valid(n, allow_length_six)) {
    if (is_excessive(m)) out.insert(m);
  }
  return out;
}

VerificationReport verify_correspondence(int n) {
  VerificationReport report;
  report.n = n;
  const auto paths = enumerate_paths(n);

  std::vector<Multisegment> images;
  images.reserve(paths.size());

  int construction_mismatches = 0;
  int not_excessive = 0;
  int round_trip_failures = 0;
  std::string first_failure;
  for (const MotzkinPath& g : paths) {
    Multisegment image = fr(g);
    if (image != fr_recursive(g)) {
      ++construction_mismatches;
      if (first_failure.empty()) first_failure = to_string(g);
    }
    if (!is_excessive(image)) {
      ++not_excessive;
      if (first_failure.empty()) first_failure = to_string(g);
    }
    if (fr_inverse(image) != g) {
      ++round_trip_failures;
      if (first_failure.empty()) first_failure = to_string(g);
    }
    images.push_back(std::move(image));
  }

  const auto paths_checked = std::to_string(paths.size()) + " paths";
  report.checks.push_back(
      {"rank formula agrees with the recursive construction",
       construction_mismatches == 0,
       construction_mismatches == 0
           ? paths_checked
           : std::to_string(construction_mismatches) + " mismatches, first " +
                 first_failure});
  report.checks.push_back(
      {"every image is flat and excessive", not_excessive == 0,
       not_excessive == 0 ? paths_checked
                          : std::to_string(not_excessive) +
                                " non-excessive images, first " +
                                first_failure});
  report.checks.push_back(
      {"inverse recovers every path", round_trip_failures == 0,
       round_trip_failures == 0 ? paths_checked
                                : std::to_string(round_trip_failures) +
                                      " failures, first " + first_failure});

  const std::set<Multisegment> image_set(images.begin(), images.end());
  report.checks.push_back(
      {"images are pairwise distinct", image_set.size() == images.size(),
       std::to_string(image_set.size()) + " distinct of " +
           std::to_string(images.size())});

  const std::int64_t expected = motzkin_number(n);
  report.checks.push_back(
      {"count matches the Motzkin number",
       static_cast<std::int64_t>(images.size()) == expected,
       std::to_string(images.size()) + " vs " + std::to_string(expected)});

  if (n <= 5) {
    const auto oracle = brute_force_excessive(n);
    report.checks.push_back(
        {"image set equals the brute-force universe", oracle == image_set,
         std::to_string(oracle.size()) + " oracle elements"});
  } else {
    report.checks.push_back({"image set equals the brute-force universe",
                             true, "skipped, length exceeds the oracle cap"});
  }
  return report;
}

}  // namespace motzseg
