#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace motzseg {

/// Closed integer interval [start, end] with 1 <= start <= end.
class Segment {
 public:
  Segment(int start, int end) : start_(start), end_(end) {
    if (start < 1 || end < start) {
      throw std::invalid_argument("segment requires 1 <= start <= end, got [" +
                                  std::to_string(start) + "," +
                                  std::to_string(end) + "]");
    }
  }

  int start() const noexcept { return start_; }
  int end() const noexcept { return end_; }
  int size() const noexcept { return end_ - start_ + 1; }

  bool contains(int point) const noexcept {
    return start_ <= point && point <= end_;
  }
  bool contains(const Segment& other) const noexcept {
    return start_ <= other.start_ && other.end_ <= end_;
  }
  /// Covers both endpoints of column k, the gap between points k and k+1.
  bool contains_column(int k) const noexcept {
    return start_ <= k && k + 1 <= end_;
  }

  friend auto operator<=>(const Segment&, const Segment&) = default;

 private:
  int start_;
  int end_;
};

/// (a, b) is linked when a starts strictly first, b ends strictly last, and
/// the union is again a segment.
inline bool linked(const Segment& a, const Segment& b) noexcept {
  return a.start() < b.start() && b.end() > a.end() &&
         b.start() <= a.end() + 1;
}

/// Linked, or separated by exactly one point.
inline bool quasi_linked(const Segment& a, const Segment& b) noexcept {
  return linked(a, b) || a.end() + 1 == b.start() - 1;
}

/// Literal form "a-b".
inline std::string to_string(const Segment& s) {
  return std::to_string(s.start()) + "-" + std::to_string(s.end());
}

/// Witness of a linked triple: (a,b) linked, (b,c) linked, (a,c) quasi-linked.
struct LinkedTriple {
  Segment a, b, c;

  friend auto operator<=>(const LinkedTriple&, const LinkedTriple&) = default;
};

inline std::string to_string(const LinkedTriple& t) {
  auto bracket = [](const Segment& s) {
    return "[" + std::to_string(s.start()) + "," + std::to_string(s.end()) +
           "]";
  };
  return "(" + bracket(t.a) + "," + bracket(t.b) + "," + bracket(t.c) + ")";
}

}  // namespace motzseg
