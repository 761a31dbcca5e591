#include "motzseg/multisegment.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

namespace motzseg {

Multisegment::Multisegment(int length, std::vector<Segment> segments)
    : length_(length), segments_(std::move(segments)) {
  if (length_ < 0) {
    throw std::invalid_argument("multisegment length must be nonnegative");
  }
  for (const Segment& s : segments_) {
    if (s.end() > length_) {
      throw std::invalid_argument("segment " + to_string(s) +
                                  " does not fit in [1," +
                                  std::to_string(length_) + "]");
    }
  }
  std::sort(segments_.begin(), segments_.end());
}

int Multisegment::count(const Segment& s) const {
  auto [lo, hi] = std::equal_range(segments_.begin(), segments_.end(), s);
  return static_cast<int>(hi - lo);
}

std::vector<std::pair<Segment, int>> Multisegment::grouped() const {
  std::vector<std::pair<Segment, int>> out;
  for (const Segment& s : segments_) {
    if (!out.empty() && out.back().first == s) {
      ++out.back().second;
    } else {
      out.emplace_back(s, 1);
    }
  }
  return out;
}

std::vector<int> weight(const Multisegment& m) {
  std::vector<int> w(static_cast<std::size_t>(m.length()), 0);
  for (const Segment& s : m.segments()) {
    for (int k = s.start(); k <= s.end(); ++k) ++w[static_cast<std::size_t>(k - 1)];
  }
  return w;
}

bool is_weight_valid(const Multisegment& m) {
  const int target = m.length() + 1;
  if (m.length() == 0) return m.empty();
  const std::vector<int> w = weight(m);
  return std::all_of(w.begin(), w.end(),
                     [target](int wk) { return wk == target; });
}

namespace {

std::string format_weight(const std::vector<int>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(w[i]);
  }
  return out + ")";
}

}  // namespace

void require_weight_valid(const Multisegment& m) {
  if (is_weight_valid(m)) return;
  const int target = m.length() + 1;
  std::string expected = "(";
  for (int k = 1; k <= m.length(); ++k) {
    if (k > 1) expected += ",";
    expected += std::to_string(target);
  }
  expected += ")";
  throw weight_error("multisegment has weight " + format_weight(weight(m)) +
                     ", expected " + expected);
}

std::vector<ColumnProfile> column_profiles(const Multisegment& m) {
  require_weight_valid(m);
  const int n = m.length();
  std::vector<ColumnProfile> out;
  out.reserve(n > 0 ? static_cast<std::size_t>(n - 1) : 0);
  const auto groups = m.grouped();
  for (int k = 1; k + 1 <= n; ++k) {
    int crossings = 0;
    std::vector<Segment> crossing_values;
    for (const auto& [seg, mult] : groups) {
      if (seg.contains_column(k)) {
        crossings += mult;
        crossing_values.push_back(seg);
      }
    }
    ColumnProfile p;
    p.column = k;
    p.crossings = crossings;
    p.cuts = (n + 1) - crossings;
    p.full = (p.cuts == 0);
    p.special_full = p.full;
    if (p.full) {
      // special means the segments across the column form an inclusion chain
      for (std::size_t i = 0; i < crossing_values.size() && p.special_full; ++i) {
        for (std::size_t j = i + 1; j < crossing_values.size(); ++j) {
          const Segment& a = crossing_values[i];
          const Segment& b = crossing_values[j];
          if (!a.contains(b) && !b.contains(a)) {
            p.special_full = false;
            break;
          }
        }
      }
    }
    out.push_back(p);
  }
  return out;
}

std::vector<int> special_full_columns(const Multisegment& m) {
  std::vector<int> out;
  for (const ColumnProfile& p : column_profiles(m)) {
    if (p.special_full) out.push_back(p.column);
  }
  return out;
}

bool is_flat(const Multisegment& m) {
  if (!is_weight_valid(m)) return false;
  for (const ColumnProfile& p : column_profiles(m)) {
    if (p.cuts > 1) return false;
  }
  return true;
}

void require_flat(const Multisegment& m) {
  require_weight_valid(m);
  for (const ColumnProfile& p : column_profiles(m)) {
    if (p.cuts > 1) throw cut_error(p.column, p.cuts);
  }
}

namespace {

std::vector<Segment> distinct_segments(const Multisegment& m) {
  std::vector<Segment> values;
  for (const auto& group : m.grouped()) values.push_back(group.first);
  return values;
}

}  // namespace

std::vector<LinkedTriple> find_linked_triples(const Multisegment& m) {
  std::vector<LinkedTriple> out;
  const auto values = distinct_segments(m);
  for (const Segment& a : values) {
    for (const Segment& b : values) {
      if (!linked(a, b)) continue;
      for (const Segment& c : values) {
        if (linked(b, c) && quasi_linked(a, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

namespace {

// Early-exit variant used by the predicate.
bool has_linked_triple(const Multisegment& m) {
  const auto values = distinct_segments(m);
  for (const Segment& a : values) {
    for (const Segment& b : values) {
      if (!linked(a, b)) continue;
      for (const Segment& c : values) {
        if (linked(b, c) && quasi_linked(a, c)) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool is_excessive(const Multisegment& m) {
  return is_flat(m) && !has_linked_triple(m);
}

RankTuple::RankTuple(int length) : length_(length) {
  if (length_ < 0) throw std::invalid_argument("rank tuple length must be nonnegative");
  upper_.assign(static_cast<std::size_t>(length_) * (length_ + 1) / 2, 0);
}

RankTuple::RankTuple(int length, std::vector<int> upper)
    : length_(length), upper_(std::move(upper)) {
  if (length_ < 0) throw std::invalid_argument("rank tuple length must be nonnegative");
  const std::size_t expected = static_cast<std::size_t>(length_) * (length_ + 1) / 2;
  if (upper_.size() != expected) {
    throw std::invalid_argument("rank tuple needs " + std::to_string(expected) +
                                " upper-triangular entries, got " +
                                std::to_string(upper_.size()));
  }
  for (int v : upper_) {
    if (v < 0) throw std::invalid_argument("rank tuple entries must be nonnegative");
  }
}

std::size_t RankTuple::index(int i, int j) const {
  if (i < 1 || j < i || j > length_) {
    throw std::out_of_range("rank tuple index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside 1 <= i <= j <= " +
                            std::to_string(length_));
  }
  // row i starts after the i-1 previous rows of lengths n, n-1, ...
  const std::size_t row_offset =
      static_cast<std::size_t>(i - 1) * (2 * length_ - i + 2) / 2;
  return row_offset + static_cast<std::size_t>(j - i);
}

int RankTuple::at(int i, int j) const { return upper_[index(i, j)]; }

void RankTuple::set(int i, int j, int value) {
  if (value < 0) throw std::invalid_argument("rank tuple entries must be nonnegative");
  upper_[index(i, j)] = value;
}

RankTuple rank_tuple(const Multisegment& m) {
  RankTuple r(m.length());
  for (const auto& [seg, mult] : m.grouped()) {
    for (int i = seg.start(); i <= seg.end(); ++i) {
      for (int j = i; j <= seg.end(); ++j) {
        r.set(i, j, r.at(i, j) + mult);
      }
    }
  }
  return r;
}

Multisegment from_rank_tuple(const RankTuple& r) {
  const int n = r.length();
  auto entry = [&](int i, int j) -> int {
    if (i < 1 || j > n || i > j) return 0;
    return r.at(i, j);
  };
  std::vector<Segment> segments;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const int mult =
          entry(i, j) - entry(i - 1, j) - entry(i, j + 1) + entry(i - 1, j + 1);
      if (mult < 0) throw rank_error(i, j);
      segments.insert(segments.end(), static_cast<std::size_t>(mult),
                      Segment(i, j));
    }
  }
  return Multisegment(n, std::move(segments));
}

std::string to_string(const RankTuple& r) {
  std::string out;
  for (int i = 1; i <= r.length(); ++i) {
    if (i > 1) out += ";";
    for (int j = i; j <= r.length(); ++j) {
      if (j > i) out += ",";
      out += std::to_string(r.at(i, j));
    }
  }
  return out;
}

namespace {

// Cursor over a literal; all errors carry a 1-based character position.
class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }

  std::size_t position() {
    skip_ws();
    return pos_ + 1;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& context) {
    if (!consume(c)) {
      throw parse_error(std::string("expected '") + c + "' in " + context,
                        position());
    }
  }

  int integer(const std::string& what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) throw parse_error("malformed " + what, start + 1);
    int value = 0;
    const auto res =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc{}) {
      throw parse_error(what + " out of range", start + 1);
    }
    return value;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Multisegment parse_multisegment(const std::string& text) {
  Scanner s(text);
  s.expect('n', "multisegment literal");
  s.expect('=', "multisegment literal");
  const int n = s.integer("length");
  s.expect(':', "multisegment literal");
  std::vector<Segment> segments;
  if (!s.eof()) {
    for (;;) {
      const std::size_t item_pos = s.position();
      const int a = s.integer("segment start");
      s.expect('-', "segment");
      const int b = s.integer("segment end");
      int mult = 1;
      if (s.consume('*')) {
        const std::size_t mult_pos = s.position();
        mult = s.integer("multiplicity");
        if (mult <= 0) {
          throw parse_error("multiplicity must be positive", mult_pos);
        }
      }
      if (a < 1) throw parse_error("segment start must be at least 1", item_pos);
      if (a > b) {
        throw parse_error("segment start " + std::to_string(a) +
                              " exceeds its end " + std::to_string(b),
                          item_pos);
      }
      if (b > n) {
        throw parse_error("segment end " + std::to_string(b) +
                              " exceeds length " + std::to_string(n),
                          item_pos);
      }
      segments.insert(segments.end(), static_cast<std::size_t>(mult),
                      Segment(a, b));
      if (s.eof()) break;
      s.expect(',', "segment list");
    }
  }
  return Multisegment(n, std::move(segments));
}

std::string to_string(const Multisegment& m) {
  std::string out = "n=" + std::to_string(m.length()) + ":";
  bool first = true;
  for (const auto& [seg, mult] : m.grouped()) {
    out += first ? " " : ",";
    first = false;
    out += to_string(seg);
    if (mult >= 2) out += "*" + std::to_string(mult);
  }
  return out;
}

std::vector<std::vector<Segment>> row_decomposition(const Multisegment& m) {
  require_weight_valid(m);
  const int n = m.length();
  if (n < 1) {
    throw std::invalid_argument("row decomposition requires length >= 1");
  }
  std::multiset<Segment> pool(m.segments().begin(), m.segments().end());
  std::vector<std::vector<Segment>> rows;
  rows.reserve(static_cast<std::size_t>(n) + 1);
  for (int row_index = 0; row_index < n + 1; ++row_index) {
    std::vector<Segment> row;
    int pos = 1;
    while (pos <= n) {
      // Largest end among the remaining copies starting at pos. One always
      // exists: removing a prefix of a row drops the weight left of pos by
      // one, so the copies starting at pos outnumber the cut budget.
      auto it = pool.upper_bound(Segment(pos, n));
      if (it == pool.begin() || std::prev(it)->start() != pos) {
        throw std::logic_error(
            "row decomposition stalled at point " + std::to_string(pos) +
            "; weight-valid input cannot reach this state");
      }
      --it;
      row.push_back(*it);
      pos = it->end() + 1;
      pool.erase(it);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace motzseg
