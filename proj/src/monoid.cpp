#include "motzseg/monoid.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace motzseg {

Multisegment concat(const Multisegment& a, const Multisegment& b) {
  require_weight_valid(a);
  require_weight_valid(b);
  const int p = a.length();
  const int q = b.length();
  if (p == 0) return b;
  if (q == 0) return a;

  std::vector<Segment> out;
  out.reserve(a.segments().size() + b.segments().size() + 4);
  for (const Segment& s : a.segments()) {
    if (s.end() < p) out.push_back(s);
  }
  for (const Segment& s : b.segments()) {
    if (s.start() > 1) out.emplace_back(s.start() + p, s.end() + p);
  }

  // Seam chain: starts of left copies reaching p (padded with q full ones)
  // against ends of right copies starting at 1 (padded with p full ones),
  // matched shortest to shortest.
  std::vector<int> starts;
  for (const Segment& s : a.segments()) {
    if (s.end() == p) starts.push_back(s.start());
  }
  starts.insert(starts.end(), static_cast<std::size_t>(q), 1);
  std::sort(starts.begin(), starts.end(), std::greater<int>());

  std::vector<int> ends;
  for (const Segment& s : b.segments()) {
    if (s.start() == 1) ends.push_back(s.end());
  }
  ends.insert(ends.end(), static_cast<std::size_t>(p), q);
  std::sort(ends.begin(), ends.end());

  if (starts.size() != static_cast<std::size_t>(p + q + 1) ||
      ends.size() != starts.size()) {
    throw std::logic_error("concat seam has " + std::to_string(starts.size()) +
                           "/" + std::to_string(ends.size()) +
                           " glue candidates, expected " +
                           std::to_string(p + q + 1));
  }
  for (std::size_t k = 0; k < starts.size(); ++k) {
    out.emplace_back(starts[k], ends[k] + p);
  }

  Multisegment result(p + q, std::move(out));
  const auto profiles = column_profiles(result);
  if (!profiles[static_cast<std::size_t>(p - 1)].special_full) {
    throw std::logic_error("concat seam column " + std::to_string(p) +
                           " failed to come out special full");
  }
  return result;
}

Multisegment suspend(const Multisegment& m) {
  require_weight_valid(m);
  const int n = m.length();
  if (n == 0) {
    return Multisegment(
        2, {Segment(1, 1), Segment(1, 2), Segment(1, 2), Segment(2, 2)});
  }
  std::vector<Segment> out;
  out.reserve(m.segments().size() + 4);
  for (const Segment& s : m.segments()) {
    // boundary points stick to the new boundary, inner points shift by one
    const int start = (s.start() == 1) ? 1 : s.start() + 1;
    const int end = (s.end() == n) ? n + 2 : s.end() + 1;
    out.emplace_back(start, end);
  }
  out.emplace_back(1, 1);
  out.emplace_back(2, n + 2);
  out.emplace_back(1, n + 1);
  out.emplace_back(n + 2, n + 2);
  return Multisegment(n + 2, std::move(out));
}

namespace {

void check_restriction_range(const Multisegment& m, int k) {
  if (k < 1 || k > m.length()) {
    throw std::invalid_argument("restriction index " + std::to_string(k) +
                                " outside [1," + std::to_string(m.length()) +
                                "]");
  }
}

// Drops `count` copies of `target`; the flat precondition guarantees enough.
std::vector<Segment> remove_copies(std::vector<Segment> segments,
                                   const Segment& target, int count) {
  for (int i = 0; i < count; ++i) {
    auto it = std::find(segments.begin(), segments.end(), target);
    if (it == segments.end()) {
      throw std::logic_error("restriction found fewer than " +
                             std::to_string(count) + " copies of " +
                             to_string(target) + " to discard");
    }
    segments.erase(it);
  }
  return segments;
}

}  // namespace

Multisegment left_restrict(const Multisegment& m, int k) {
  require_flat(m);
  check_restriction_range(m, k);
  const int n = m.length();
  std::vector<Segment> out;
  for (const Segment& s : m.segments()) {
    if (s.end() <= k) {
      out.push_back(s);
    } else if (s.start() <= k) {
      out.emplace_back(s.start(), k);
    }
  }
  out = remove_copies(std::move(out), Segment(1, k), n - k);
  return Multisegment(k, std::move(out));
}

Multisegment right_restrict(const Multisegment& m, int k) {
  require_flat(m);
  check_restriction_range(m, k);
  const int n = m.length();
  const int shift = n - k;
  std::vector<Segment> out;
  for (const Segment& s : m.segments()) {
    if (s.start() >= shift + 1) {
      out.emplace_back(s.start() - shift, s.end() - shift);
    } else if (s.end() >= shift + 1) {
      out.emplace_back(1, s.end() - shift);
    }
  }
  out = remove_copies(std::move(out), Segment(1, k), n - k);
  return Multisegment(k, std::move(out));
}

bool is_primitive(const Multisegment& m) {
  require_flat(m);
  if (m.length() < 1) {
    throw std::invalid_argument("primitivity is defined for length >= 1");
  }
  return special_full_columns(m).empty();
}

bool is_suspension(const Multisegment& m) {
  const int n = m.length();
  return n >= 2 && is_flat(m) && m.contains(Segment(1, n - 1)) &&
         m.contains(Segment(2, n));
}

Multisegment desuspend(const Multisegment& m) {
  require_flat(m);
  const int n = m.length();
  if (n < 2) {
    throw std::invalid_argument("desuspend requires length >= 2");
  }
  if (!m.contains(Segment(1, n - 1)) || !m.contains(Segment(2, n))) {
    throw suspension_error("not a suspension: markers " +
                           to_string(Segment(1, n - 1)) + " and " +
                           to_string(Segment(2, n)) + " not both present");
  }
  if (n == 2) {
    // both markers present forces the suspension of the identity
    return Multisegment();
  }
  return right_restrict(left_restrict(m, n - 1), n - 2);
}

namespace {

void factorize_into(const Multisegment& m, int offset, Factorization& out) {
  if (m.length() == 0) return;
  const auto seams = special_full_columns(m);
  if (seams.empty()) {
    out.factors.push_back(m);
    return;
  }
  // split at the leftmost seam; the left part is then primitive
  const int p = seams.front();
  out.factors.push_back(left_restrict(m, p));
  out.split_columns.push_back(offset + p);
  factorize_into(right_restrict(m, m.length() - p), offset + p, out);
}

}  // namespace

Factorization factorize(const Multisegment& m) {
  require_flat(m);
  Factorization out;
  factorize_into(m, 0, out);
  return out;
}

}  // namespace motzseg
