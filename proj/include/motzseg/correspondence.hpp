#pragma once

#include <set>
#include <string>
#include <vector>

#include "motzseg/monoid.hpp"
#include "motzseg/motzkin.hpp"
#include "motzseg/multisegment.hpp"

namespace motzseg {

/// Fang-Reineke parametrization: the multisegment whose rank tuple is
/// r(i,j) = n+1 - max{ g(l) + g(l-1) - g(m) - g(k-1) : i <= k <= l <= m <= j }.
/// The image is always flat and excessive.
Multisegment fr(const MotzkinPath& g);

/// Same map built the structural way: factor the path, send the flat step
/// to the unit multisegment, send suspensions to suspensions, multiply.
/// Agrees with fr on every input; the two routes check each other.
Multisegment fr_recursive(const MotzkinPath& g);

/// Inverse of fr on its image. Validates that the input is weight-valid
/// (weight_error), flat (cut_error with the offending column) and excessive
/// (linked_triple_error with a witness), then peels seams and suspensions.
MotzkinPath fr_inverse(const Multisegment& m);

struct ExcessiveEntry {
  MotzkinPath path;
  Multisegment multisegment;  // fr(path)
  RankTuple rank;             // rank_tuple(multisegment)
};

/// fr images of enumerate_paths(n), in path order.
std::vector<ExcessiveEntry> enumerate_excessive(int n);

/// Every weight-valid multisegment of length n, built independently of the
/// monoid machinery: all multisets of n+1 rows, each row one of the 2^(n-1)
/// interval partitions of [1, n], deduplicated. Capped at n <= 5 (the n = 6
/// universe has 12.6M candidate multisets) unless allow_length_six is set.
std::vector<Multisegment> all_weight_valid(int n, bool allow_length_six = false);

/// Brute-force oracle for the excessive class: filters all_weight_valid.
std::set<Multisegment> brute_force_excessive(int n, bool allow_length_six = false);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  int n = 0;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Asserts, over all paths of length n: fr agrees with fr_recursive, every
/// image is flat and excessive, fr_inverse recovers the path, images are
/// pairwise distinct and counted by motzkin_number(n). For n <= 5 also
/// compares the image set against the brute-force oracle.
VerificationReport verify_correspondence(int n);

}  // namespace motzseg
