#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace motzseg {

/// Height sequence gamma(0), ..., gamma(n): starts and ends at 0, stays
/// nonnegative, and moves by at most one per step.
class MotzkinPath {
 public:
  MotzkinPath() : heights_(1, 0) {}
  explicit MotzkinPath(std::vector<int> heights);

  /// Number of steps; heights() has length() + 1 entries.
  int length() const noexcept {
    return static_cast<int>(heights_.size()) - 1;
  }
  const std::vector<int>& heights() const noexcept { return heights_; }
  int height(int i) const { return heights_.at(static_cast<std::size_t>(i)); }

  friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;

 private:
  std::vector<int> heights_;
};

/// Accepts `heights:` with comma-separated values, `steps:` with a word
/// over U/F/D, or a bare comma-separated height list.
MotzkinPath parse_path(const std::string& text);

/// Canonical literal `heights:0,1,0`.
std::string to_string(const MotzkinPath& g);

/// Step word over U/F/D; empty for the length-0 path.
std::string to_steps(const MotzkinPath& g);

/// Joins the paths at a shared zero; lengths add.
MotzkinPath concat_paths(const MotzkinPath& a, const MotzkinPath& b);

/// Lifts every height by one and pads a zero at each end; length grows by 2.
MotzkinPath suspend_path(const MotzkinPath& g);

/// Touches zero only at the endpoints (length >= 1).
bool is_primitive_path(const MotzkinPath& g);

/// Inverts suspend_path on primitive paths of length >= 2.
MotzkinPath desuspend_path(const MotzkinPath& g);

/// Splits at every interior zero. Factors are primitive: those of length 1
/// are flat steps and those of length >= 2 are suspensions, so the list is
/// the unique factorization in the free monoid.
std::vector<MotzkinPath> factorize_path(const MotzkinPath& g);

/// All paths of length n, lexicographic by height sequence.
std::vector<MotzkinPath> enumerate_paths(int n);

/// M(0) = 1, M(n+1) = M(n) + sum_{k=0}^{n-1} M(k) M(n-1-k); the recurrence
/// mirrors the first-return factorization. Throws on int64 overflow.
std::int64_t motzkin_number(int n);

}  // namespace motzseg
