#include "motzseg/selftest.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace motzseg {

namespace {

// All sampling flows through one engine so a seed fixes the whole report.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  MotzkinPath path(int length) {
    std::vector<int> heights(static_cast<std::size_t>(length) + 1, 0);
    for (int i = 0; i < length; ++i) {
      std::vector<int> options;
      for (int delta = -1; delta <= 1; ++delta) {
        const int next = heights[static_cast<std::size_t>(i)] + delta;
        if (next >= 0 && next <= length - i - 1) options.push_back(next);
      }
      heights[static_cast<std::size_t>(i) + 1] =
          options[static_cast<std::size_t>(
              uniform(0, static_cast<int>(options.size()) - 1))];
    }
    return MotzkinPath(std::move(heights));
  }

  // n+1 random interval partitions of [1, n], glued into one multiset.
  Multisegment weight_valid(int n) {
    if (n == 0) return Multisegment();
    std::vector<Segment> segments;
    for (int row = 0; row < n + 1; ++row) {
      int start = 1;
      for (int k = 1; k < n; ++k) {
        if (uniform(0, 1) == 1) {
          segments.emplace_back(start, k);
          start = k + 1;
        }
      }
      segments.emplace_back(start, n);
    }
    return Multisegment(n, std::move(segments));
  }

  // Random flat multisegment of length >= min_length, grown from small
  // seeds by the operations that preserve the class. Reaches non-excessive
  // elements whenever the seed pool has them.
  Multisegment flat(int min_length, int max_length,
                    const std::vector<Multisegment>& seed_pool) {
    Multisegment m = seed_pool[static_cast<std::size_t>(
        uniform(0, static_cast<int>(seed_pool.size()) - 1))];
    while (m.length() < min_length) {
      if (m.length() + 2 <= max_length && uniform(0, 1) == 0) {
        m = suspend(m);
      } else {
        const Multisegment& other = seed_pool[static_cast<std::size_t>(
            uniform(0, static_cast<int>(seed_pool.size()) - 1))];
        if (m.length() + other.length() > max_length) continue;
        m = uniform(0, 1) == 0 ? concat(m, other) : concat(other, m);
      }
    }
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

struct Universe {
  // index n -> every element of the class at length n
  std::vector<std::vector<Multisegment>> weight_valid;
  std::vector<std::vector<Multisegment>> flat;
};

Universe build_universe(int max_n, bool allow_six) {
  Universe u;
  for (int n = 0; n <= max_n; ++n) {
    u.weight_valid.push_back(all_weight_valid(n, allow_six));
    std::vector<Multisegment> flat_n;
    for (const Multisegment& m : u.weight_valid.back()) {
      if (is_flat(m)) flat_n.push_back(m);
    }
    u.flat.push_back(std::move(flat_n));
  }
  return u;
}

class Suite {
 public:
  Suite(const SelftestOptions& opt)
      : opt_(opt),
        sampler_(opt.seed),
        universe_(build_universe(std::min(opt.oracle_max, 5), false)) {
    // flat seeds for random generation: everything exhaustive up to 4
    for (const auto& level : universe_.flat) {
      for (const Multisegment& m : level) {
        if (m.length() >= 1 && m.length() <= 4) seeds_.push_back(m);
      }
    }
    if (seeds_.empty()) {
      seeds_.push_back(Multisegment(1, {Segment(1, 1), Segment(1, 1)}));
    }
  }

  std::vector<CheckResult> run() {
    core_checks();
    monoid_checks();
    path_checks();
    correspondence_checks();
    return results_;
  }

 private:
  int universe_cap() const {
    return static_cast<int>(universe_.weight_valid.size()) - 1;
  }

  void record(const std::string& name, bool pass, const std::string& detail) {
    results_.push_back({name, pass, detail});
  }

  // pass/fail with a counterexample slot; keeps the check bodies terse
  struct Tally {
    long cases = 0;
    long failures = 0;
    std::string first;

    void count(bool ok, const std::string& what) {
      ++cases;
      if (!ok) {
        ++failures;
        if (first.empty()) first = what;
      }
    }

    std::string detail() const {
      if (failures == 0) return std::to_string(cases) + " cases";
      return std::to_string(failures) + " of " + std::to_string(cases) +
             " failed, first: " + first;
    }
  };

  void core_checks() {
    // codec round trips
    {
      Tally t;
      for (int n = 0; n <= universe_cap(); ++n) {
        for (const Multisegment& m : universe_.weight_valid[n]) {
          t.count(parse_multisegment(to_string(m)) == m, to_string(m));
        }
      }
      for (int i = 0; i < opt_.samples; ++i) {
        const Multisegment m = sampler_.weight_valid(sampler_.uniform(0, 9));
        t.count(parse_multisegment(to_string(m)) == m, to_string(m));
      }
      record("multisegment codec round trip", t.failures == 0, t.detail());
    }
    {
      Tally t;
      for (int n = 0; n <= std::min(opt_.n_max, 8); ++n) {
        for (const MotzkinPath& g : enumerate_paths(n)) {
          t.count(parse_path(to_string(g)) == g &&
                      parse_path("steps:" + to_steps(g)) == g,
                  to_string(g));
        }
      }
      record("path codec round trip", t.failures == 0, t.detail());
    }

    // boundary flow: copies ending at k match the missing crossings and the
    // copies starting at k+1
    {
      Tally t;
      auto check = [&](const Multisegment& m) {
        const int n = m.length();
        const auto profiles = column_profiles(m);
        for (const ColumnProfile& p : profiles) {
          int ending = 0;
          int starting = 0;
          for (const Segment& s : m.segments()) {
            if (s.end() == p.column) ++ending;
            if (s.start() == p.column + 1) ++starting;
          }
          t.count(ending == (n + 1) - p.crossings && starting == ending,
                  to_string(m) + " column " + std::to_string(p.column));
        }
      };
      for (int n = 0; n <= universe_cap(); ++n) {
        for (const Multisegment& m : universe_.weight_valid[n]) check(m);
      }
      for (int i = 0; i < opt_.samples; ++i) {
        check(sampler_.weight_valid(sampler_.uniform(2, 9)));
      }
      record("column crossings balance the boundary counts", t.failures == 0,
             t.detail());
    }

    // linked-pair basics over every segment pair in a small box
    {
      Tally t;
      const int box = 8;
      for (int a1 = 1; a1 <= box; ++a1)
        for (int a2 = a1; a2 <= box; ++a2)
          for (int b1 = 1; b1 <= box; ++b1)
            for (int b2 = b1; b2 <= box; ++b2) {
              const Segment a(a1, a2), b(b1, b2);
              const bool ok =
                  (!linked(a, b) || quasi_linked(a, b)) &&
                  (!linked(a, b) || (!a.contains(b) && !b.contains(a)));
              t.count(ok, to_string(a) + " vs " + to_string(b));
            }
      record("linked pairs are quasi-linked and never nested", t.failures == 0,
             t.detail());
    }

    // special full columns carry an inclusion chain
    {
      Tally t;
      auto check = [&](const Multisegment& m) {
        for (const ColumnProfile& p : column_profiles(m)) {
          if (!p.special_full) continue;
          std::vector<Segment> across;
          for (const auto& [seg, mult] : m.grouped()) {
            if (seg.contains_column(p.column)) across.push_back(seg);
          }
          bool chain = true;
          for (std::size_t i = 0; i < across.size() && chain; ++i)
            for (std::size_t j = i + 1; j < across.size(); ++j)
              if (!across[i].contains(across[j]) &&
                  !across[j].contains(across[i])) {
                chain = false;
                break;
              }
          t.count(chain, to_string(m) + " column " + std::to_string(p.column));
        }
      };
      for (int n = 0; n <= universe_cap(); ++n) {
        for (const Multisegment& m : universe_.weight_valid[n]) check(m);
      }
      record("special full columns form inclusion chains", t.failures == 0,
             t.detail());
    }

    // rank tuple round trip
    {
      Tally t;
      for (int n = 0; n <= universe_cap(); ++n) {
        for (const Multisegment& m : universe_.weight_valid[n]) {
          t.count(from_rank_tuple(rank_tuple(m)) == m, to_string(m));
        }
      }
      for (int i = 0; i < opt_.samples; ++i) {
        const Multisegment m = sampler_.weight_valid(sampler_.uniform(0, 9));
        t.count(from_rank_tuple(rank_tuple(m)) == m, to_string(m));
      }
      record("rank tuple reconstruction inverts rank tuple", t.failures == 0,
             t.detail());
    }

    // row decomposition shape
    {
      Tally t;
      auto check = [&](const Multisegment& m) {
        if (m.length() == 0) return;
        const auto rows = row_decomposition(m);
        bool ok = rows.size() == static_cast<std::size_t>(m.length()) + 1;
        std::vector<Segment> all;
        for (const auto& row : rows) {
          int pos = 1;
          for (const Segment& s : row) {
            if (s.start() != pos) ok = false;
            pos = s.end() + 1;
            all.push_back(s);
          }
          if (pos != m.length() + 1) ok = false;
        }
        std::sort(all.begin(), all.end());
        ok = ok && all == m.segments();
        t.count(ok, to_string(m));
      };
      for (int n = 0; n <= universe_cap(); ++n) {
        for (const Multisegment& m : universe_.weight_valid[n]) check(m);
      }
      for (int i = 0; i < opt_.samples; ++i) {
        check(sampler_.weight_valid(sampler_.uniform(1, 9)));
      }
      record("row decomposition covers and recombines", t.failures == 0,
             t.detail());
    }
  }

  void monoid_checks() {
    // identity and associativity
    {
      Tally t;
      const Multisegment empty;
      for (int i = 0; i < opt_.samples; ++i) {
        const Multisegment a = sampler_.weight_valid(sampler_.uniform(0, 5));
        const Multisegment b = sampler_.weight_valid(sampler_.uniform(0, 5));
        const Multisegment c = sampler_.weight_valid(sampler_.uniform(0, 5));
        const bool ok = concat(empty, a) == a && concat(a, empty) == a &&
                        concat(concat(a, b), c) == concat(a, concat(b, c));
        t.count(ok, to_string(a) + " | " + to_string(b) + " | " + to_string(c));
      }
      record("concatenation is associative with the empty identity",
             t.failures == 0, t.detail());
    }

    // grading and the seam column
    {
      Tally t;
      for (int i = 0; i < opt_.samples; ++i) {
        const Multisegment a = sampler_.weight_valid(sampler_.uniform(1, 5));
        const Multisegment b = sampler_.weight_valid(sampler_.uniform(1, 5));
        const Multisegment ab = concat(a, b);
        const Multisegment s = suspend(a);
        bool ok = ab.length() == a.length() + b.length() &&
                  s.length() == a.length() + 2;
        const auto seams = special_full_columns(ab);
        ok = ok && std::find(seams.begin(), seams.end(), a.length()) !=
                       seams.end();
        t.count(ok, to_string(a) + " | " + to_string(b));
      }
      record("lengths add and the seam is special full", t.failures == 0,
             t.detail());
    }

    // bijection between flat pairs and seam-marked flat elements
    {
      Tally t;
      const int cap = std::min(5, universe_cap());
      for (int total = 2; total <= cap; ++total) {
        for (int p = 1; p < total; ++p) {
          const int q = total - p;
          std::set<Multisegment> images;
          for (const Multisegment& a : universe_.flat[p]) {
            for (const Multisegment& b : universe_.flat[q]) {
              const Multisegment ab = concat(a, b);
              images.insert(ab);
              const bool flat_image = is_flat(ab);
              const bool recovers = left_restrict(ab, p) == a &&
                                    right_restrict(ab, q) == b;
              t.count(flat_image && recovers,
                      to_string(a) + " | " + to_string(b));
            }
          }
          t.count(images.size() == universe_.flat[p].size() *
                                       universe_.flat[q].size(),
                  "injectivity at p=" + std::to_string(p) +
                      " q=" + std::to_string(q));
          long seam_marked = 0;
          for (const Multisegment& m : universe_.flat[total]) {
            const auto seams = special_full_columns(m);
            if (std::find(seams.begin(), seams.end(), p) == seams.end()) {
              continue;
            }
            ++seam_marked;
            t.count(images.count(m) == 1 &&
                        concat(left_restrict(m, p),
                               right_restrict(m, total - p)) == m,
                    "surjectivity gap at " + to_string(m));
          }
          t.count(seam_marked == static_cast<long>(images.size()),
                  "seam class size at p=" + std::to_string(p) +
                      " q=" + std::to_string(q));
        }
      }
      record("flat concatenation is a bijection onto the seam class",
             t.failures == 0, t.detail());
    }

    // suspensions are primitive, and stay flat exactly when the input is
    {
      Tally t;
      for (int n = 0; n <= std::min(4, universe_cap()); ++n) {
        for (const Multisegment& m : universe_.weight_valid[n]) {
          const Multisegment s = suspend(m);
          t.count(special_full_columns(s).empty(), to_string(m));
          t.count(is_flat(s) == is_flat(m), to_string(m));
          t.count(is_excessive(s) == is_excessive(m), to_string(m));
        }
      }
      for (int i = 0; i < opt_.samples; ++i) {
        const Multisegment m = sampler_.weight_valid(sampler_.uniform(0, 8));
        const Multisegment s = suspend(m);
        t.count(special_full_columns(s).empty() && is_flat(s) == is_flat(m) &&
                    is_excessive(s) == is_excessive(m),
                to_string(m));
      }
      record("suspension is primitive and preserves the class predicates",
             t.failures == 0, t.detail());
    }

    // excessive concatenations need both factors excessive
    {
      Tally t;
      const int cap = std::min(3, universe_cap());
      for (int p = 0; p <= cap; ++p) {
        for (int q = 0; q <= cap; ++q) {
          for (const Multisegment& a : universe_.weight_valid[p]) {
            for (const Multisegment& b : universe_.weight_valid[q]) {
              t.count(is_excessive(concat(a, b)) ==
                          (is_excessive(a) && is_excessive(b)),
                      to_string(a) + " | " + to_string(b));
            }
          }
        }
      }
      record("a concatenation is excessive iff both factors are",
             t.failures == 0, t.detail());
    }

    // desuspension inverts suspension
    {
      Tally t;
      for (int n = 0; n <= std::min(4, universe_cap()); ++n) {
        for (const Multisegment& m : universe_.flat[n]) {
          t.count(desuspend(suspend(m)) == m, to_string(m));
        }
      }
      for (int i = 0; i < opt_.samples; ++i) {
        const Multisegment m = sampler_.flat(5, 12, seeds_);
        t.count(desuspend(suspend(m)) == m, to_string(m));
      }
      record("desuspension inverts suspension", t.failures == 0, t.detail());
    }

    // marker characterization: within the flat class, suspensions are
    // exactly the elements carrying [1,n-1] and [2,n]
    {
      Tally t;
      for (int n = 2; n <= std::min(5, universe_cap()); ++n) {
        std::set<Multisegment> suspensions;
        for (const Multisegment& m : universe_.flat[n - 2]) {
          suspensions.insert(suspend(m));
        }
        for (const Multisegment& m : universe_.flat[n]) {
          t.count(is_suspension(m) == (suspensions.count(m) == 1),
                  to_string(m));
        }
      }
      record("suspension markers characterize suspensions", t.failures == 0,
             t.detail());
    }

    // the two-sided double restriction agrees (desuspension route choice)
    {
      Tally t;
      for (int n = 3; n <= universe_cap(); ++n) {
        for (const Multisegment& m : universe_.flat[n]) {
          t.count(right_restrict(left_restrict(m, n - 1), n - 2) ==
                      left_restrict(right_restrict(m, n - 1), n - 2),
                  to_string(m));
        }
      }
      record("double restrictions commute", t.failures == 0, t.detail());
    }

    // seam splits: m recombines from its restrictions at any special full
    // column, and the left part keeps a seam only when an earlier one exists
    {
      Tally t;
      for (int n = 2; n <= universe_cap(); ++n) {
        for (const Multisegment& m : universe_.flat[n]) {
          const auto seams = special_full_columns(m);
          for (const int p : seams) {
            const Multisegment left = left_restrict(m, p);
            t.count(concat(left, right_restrict(m, n - p)) == m,
                    to_string(m) + " at " + std::to_string(p));
            const bool earlier_seam =
                std::any_of(seams.begin(), seams.end(),
                            [p](int other) { return other < p; });
            const bool left_has_seam =
                left.length() >= 1 && !special_full_columns(left).empty();
            t.count(left_has_seam == earlier_seam,
                    to_string(m) + " at " + std::to_string(p));
          }
        }
      }
      record("restrictions split at special full columns", t.failures == 0,
             t.detail());
    }

    // the general weight class is not free
    {
      const Multisegment a = parse_multisegment("n=2: 1-1*3,2-2*3");
      const Multisegment b =
          parse_multisegment("n=4: 1-1*5,2-3*3,2-4*2,4-4*3");
      const Multisegment b_prime =
          parse_multisegment("n=4: 1-1*3,1-3*2,2-3*3,4-4*5");
      const Multisegment c = parse_multisegment(
          "n=6: 1-1*3,1-3*2,1-6*2,2-3*3,4-5*3,4-6*2,6-6*3");
      const bool pass = concat(a, b) == c && concat(b_prime, a) == c;
      record("two primitive decompositions exist outside the flat class",
             pass, pass ? "fixture holds" : "fixture violated");
    }
  }

  void path_checks() {
    const int n_max = std::max(0, opt_.n_max);

    // unique factorization into primitives
    {
      Tally t;
      for (int n = 0; n <= n_max; ++n) {
        for (const MotzkinPath& g : enumerate_paths(n)) {
          const auto factors = factorize_path(g);
          MotzkinPath joined;
          bool primitive = true;
          for (const MotzkinPath& f : factors) {
            primitive = primitive && is_primitive_path(f);
            joined = concat_paths(joined, f);
          }
          bool stable = true;
          if (factors.size() >= 2) {
            stable = factorize_path(joined) == factors;
          }
          t.count(primitive && joined == g && stable, to_string(g));
        }
      }
      record("path factorization is primitive and recombines", t.failures == 0,
             t.detail());
    }

    // suspensions are exactly the primitives of length >= 2
    {
      Tally t;
      for (int n = 2; n <= n_max; ++n) {
        std::set<MotzkinPath> suspensions;
        for (const MotzkinPath& g : enumerate_paths(n - 2)) {
          suspensions.insert(suspend_path(g));
        }
        t.count(suspensions.size() ==
                    static_cast<std::size_t>(motzkin_number(n - 2)),
                "injectivity at n=" + std::to_string(n));
        for (const MotzkinPath& g : enumerate_paths(n)) {
          const bool primitive = is_primitive_path(g);
          t.count(primitive == (suspensions.count(g) == 1), to_string(g));
          if (primitive) {
            t.count(suspend_path(desuspend_path(g)) == g, to_string(g));
          }
        }
      }
      record("path suspension hits exactly the long primitives",
             t.failures == 0, t.detail());
    }

    // counting agrees with the recurrence
    {
      Tally t;
      for (int n = 0; n <= std::max(n_max, 10); ++n) {
        t.count(static_cast<std::int64_t>(enumerate_paths(n).size()) ==
                    motzkin_number(n),
                "n=" + std::to_string(n));
      }
      record("path enumeration matches the recurrence", t.failures == 0,
             t.detail());
    }
  }

  void correspondence_checks() {
    const int n_max = std::max(0, opt_.n_max);

    // both constructions agree; images behave; inverse round trips
    {
      Tally construction, behavior, round_trip;
      for (int n = 0; n <= n_max; ++n) {
        std::set<Multisegment> images;
        for (const MotzkinPath& g : enumerate_paths(n)) {
          const Multisegment image = fr(g);
          construction.count(fr_recursive(g) == image, to_string(g));
          behavior.count(is_excessive(image), to_string(g));
          round_trip.count(fr_inverse(image) == g, to_string(g));
          images.insert(image);
        }
        behavior.count(images.size() ==
                           static_cast<std::size_t>(motzkin_number(n)),
                       "count at n=" + std::to_string(n));
      }
      record("rank formula equals the recursive construction",
             construction.failures == 0, construction.detail());
      record("images are excessive, distinct and Motzkin-counted",
             behavior.failures == 0, behavior.detail());
      record("the inverse recovers every path", round_trip.failures == 0,
             round_trip.detail());
    }

    // homomorphism on random pairs, both operations
    {
      Tally t;
      for (int i = 0; i < opt_.samples; ++i) {
        const int p = sampler_.uniform(0, 8);
        const int q = sampler_.uniform(0, 12 - std::min(p, 12));
        const MotzkinPath g = sampler_.path(p);
        const MotzkinPath h = sampler_.path(q);
        const bool ok =
            fr(concat_paths(g, h)) == concat(fr(g), fr(h)) &&
            fr(suspend_path(g)) == suspend(fr(g));
        t.count(ok, to_string(g) + " | " + to_string(h));
      }
      record("the correspondence is a monoid homomorphism", t.failures == 0,
             t.detail());
    }

    // piecewise rank identities at a seam and under suspension
    {
      Tally t;
      for (int i = 0; i < opt_.samples; ++i) {
        const int p = sampler_.uniform(1, 6);
        const int q = sampler_.uniform(1, 6);
        const MotzkinPath g = sampler_.path(p);
        const MotzkinPath h = sampler_.path(q);
        const RankTuple rg = rank_tuple(fr(g));
        const RankTuple rh = rank_tuple(fr(h));
        const RankTuple rgh = rank_tuple(fr(concat_paths(g, h)));
        bool ok = true;
        for (int a = 1; a <= p + q && ok; ++a) {
          for (int b = a; b <= p + q; ++b) {
            int expected = 0;
            if (b <= p) {
              expected = rg.at(a, b) + q;
            } else if (a > p) {
              expected = rh.at(a - p, b - p) + p;
            } else {
              expected = std::min(rg.at(a, p) + q, rh.at(1, b - p) + p);
            }
            if (rgh.at(a, b) != expected) {
              ok = false;
              break;
            }
          }
        }
        const RankTuple rs = rank_tuple(fr(suspend_path(g)));
        for (int a = 1; a <= p + 2 && ok; ++a) {
          for (int b = a; b <= p + 2; ++b) {
            // corner entries degenerate to the uniform weight p+3
            int expected = 0;
            if (a > 1 && b < p + 2) {
              expected = rg.at(a - 1, b - 1) + 2;
            } else if (a == 1 && b < p + 2) {
              expected = (b == 1 ? p + 3 : rg.at(1, b - 1) + 1);
            } else if (a > 1 && b == p + 2) {
              expected = (a == p + 2 ? p + 3 : rg.at(a - 1, p) + 1);
            } else {
              expected = rg.at(1, p);
            }
            if (rs.at(a, b) != expected) {
              ok = false;
              break;
            }
          }
        }
        t.count(ok, to_string(g) + " | " + to_string(h));
      }
      record("seam and suspension rank identities hold", t.failures == 0,
             t.detail());
    }

    // the brute-force oracle sees the same excessive sets
    {
      Tally t;
      const bool allow_six = opt_.oracle_max >= 6;
      for (int n = 0; n <= opt_.oracle_max; ++n) {
        const auto oracle = brute_force_excessive(n, allow_six);
        std::set<Multisegment> images;
        for (const auto& entry : enumerate_excessive(n)) {
          images.insert(entry.multisegment);
        }
        t.count(oracle == images,
                "n=" + std::to_string(n) + ": " +
                    std::to_string(oracle.size()) + " vs " +
                    std::to_string(images.size()));
      }
      record("enumeration matches the brute-force oracle", t.failures == 0,
             t.detail());
    }
  }

  SelftestOptions opt_;
  Sampler sampler_;
  Universe universe_;
  std::vector<Multisegment> seeds_;
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& opt) {
  if (opt.n_max < 0 || opt.samples < 0) {
    throw std::invalid_argument("selftest caps must be nonnegative");
  }
  if (opt.oracle_max < 0 || opt.oracle_max > 6) {
    throw std::invalid_argument("oracle cap must lie in 0..6");
  }
  Suite suite(opt);
  return suite.run();
}

}  // namespace motzseg
