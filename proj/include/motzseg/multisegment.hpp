#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "motzseg/errors.hpp"
#include "motzseg/segment.hpp"

namespace motzseg {

/// A multiset of segments over [1, length]. Copies are stored expanded and
/// sorted by (start, end), so equal multisets compare equal and the text
/// serialization is canonical. Values are immutable after construction.
///
/// Membership of the weight-(n+1,...,n+1) class, the flat class (at most one
/// cut per column) and the excessive class is checked by predicates, not by
/// the type: parsing and error reporting need the raw form.
class Multisegment {
 public:
  Multisegment() = default;
  Multisegment(int length, std::vector<Segment> segments);

  int length() const noexcept { return length_; }
  bool empty() const noexcept { return segments_.empty(); }
  /// All copies, sorted ascending by (start, end).
  const std::vector<Segment>& segments() const noexcept { return segments_; }
  /// Total number of copies.
  int size() const noexcept { return static_cast<int>(segments_.size()); }

  int count(const Segment& s) const;
  bool contains(const Segment& s) const { return count(s) > 0; }
  /// Distinct segments with their multiplicities, sorted ascending.
  std::vector<std::pair<Segment, int>> grouped() const;

  friend auto operator<=>(const Multisegment&, const Multisegment&) = default;

 private:
  int length_ = 0;
  std::vector<Segment> segments_;
};

/// Entry k counts the copies whose interval contains the point k.
std::vector<int> weight(const Multisegment& m);

/// Weight equals (n+1, ..., n+1); the empty multisegment qualifies at n = 0.
bool is_weight_valid(const Multisegment& m);

/// Per-column statistics of a weight-valid multisegment.
struct ColumnProfile {
  int column;         // k in [1, n-1]
  int crossings;      // copies containing both k and k+1
  int cuts;           // min(w_k, w_{k+1}) - crossings
  bool full;          // cuts == 0
  bool special_full;  // full, and the crossing segments form an inclusion chain
};

/// Profiles for columns 1 .. n-1. Requires a weight-valid multisegment.
std::vector<ColumnProfile> column_profiles(const Multisegment& m);

/// Columns whose profile is special full, ascending. Requires weight-valid.
std::vector<int> special_full_columns(const Multisegment& m);

/// Weight-valid with at most one cut per column: the combinatorial
/// counterpart of the flat irreducible locus. Restriction maps exist
/// exactly on this class.
bool is_flat(const Multisegment& m);

/// All ordered triples (a, b, c) of distinct segment values with (a,b)
/// linked, (b,c) linked and (a,c) quasi-linked, in lexicographic order.
/// Equal values are never linked, so no witness reuses a physical copy.
std::vector<LinkedTriple> find_linked_triples(const Multisegment& m);

/// Flat and free of linked triples.
bool is_excessive(const Multisegment& m);

/// Upper-triangular matrix r(i, j), 1 <= i <= j <= n, counting for a
/// multisegment the copies that contain both i and j. Entries are
/// validated nonnegative; whether they belong to an actual multisegment is
/// decided by from_rank_tuple.
class RankTuple {
 public:
  explicit RankTuple(int length = 0);
  RankTuple(int length, std::vector<int> upper);

  int length() const noexcept { return length_; }
  int at(int i, int j) const;
  void set(int i, int j, int value);
  /// Row-major upper triangle: row i = 1..n holds entries j = i..n.
  const std::vector<int>& upper() const noexcept { return upper_; }

  friend auto operator<=>(const RankTuple&, const RankTuple&) = default;

 private:
  std::size_t index(int i, int j) const;

  int length_ = 0;
  std::vector<int> upper_;
};

RankTuple rank_tuple(const Multisegment& m);

/// Inverts rank_tuple by inclusion-exclusion: the multiplicity of [i,j] is
/// r(i,j) - r(i-1,j) - r(i,j+1) + r(i-1,j+1) with out-of-range entries read
/// as zero. Throws rank_error when any multiplicity comes out negative.
Multisegment from_rank_tuple(const RankTuple& r);

/// Rows "r(i,i),...,r(i,n)" joined with ';'.
std::string to_string(const RankTuple& r);

/// Grammar: `n=<int>:` then comma-separated `a-b` or `a-b*m` items,
/// whitespace tolerated. `n=0:` is the empty multisegment.
Multisegment parse_multisegment(const std::string& text);

/// Canonical literal: items sorted by (start, end), `*m` only for m >= 2.
std::string to_string(const Multisegment& m);

/// Splits a weight-valid multisegment into exactly n+1 rows, each a set of
/// disjoint segments covering [1, n], whose multiset union is the input.
/// Deterministic: each row is grown greedily, always taking the remaining
/// copy with the largest end at the current position.
std::vector<std::vector<Segment>> row_decomposition(const Multisegment& m);

/// Throws weight_error unless is_weight_valid(m).
void require_weight_valid(const Multisegment& m);

/// Throws weight_error or cut_error unless is_flat(m).
void require_flat(const Multisegment& m);

}  // namespace motzseg
