#include "motzseg/motzkin.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "motzseg/errors.hpp"

namespace motzseg {

namespace {

// Empty string when valid, otherwise a description of the first violation.
std::string height_violation(const std::vector<int>& h) {
  if (h.empty()) return "a path needs at least one height";
  if (h.front() != 0) return "path must start at height 0";
  if (h.back() != 0) return "path must end at height 0";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] < 0) return "height " + std::to_string(h[i]) + " is negative";
    if (i + 1 < h.size() && std::abs(h[i + 1] - h[i]) > 1) {
      return "step from " + std::to_string(h[i]) + " to " +
             std::to_string(h[i + 1]) + " exceeds one unit";
    }
  }
  return {};
}

}  // namespace

MotzkinPath::MotzkinPath(std::vector<int> heights)
    : heights_(std::move(heights)) {
  const std::string violation = height_violation(heights_);
  if (!violation.empty()) throw std::invalid_argument(violation);
}

namespace {

std::vector<int> parse_height_list(const std::string& text, std::size_t pos) {
  std::vector<int> heights;
  bool expect_value = true;
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos >= text.size()) break;
    if (!expect_value) {
      if (text[pos] != ',') {
        throw parse_error("expected ',' between heights", pos + 1);
      }
      ++pos;
      expect_value = true;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start) throw parse_error("malformed height", pos + 1);
    int value = 0;
    if (std::from_chars(text.data() + start, text.data() + pos, value).ec !=
        std::errc{}) {
      throw parse_error("height out of range", start + 1);
    }
    heights.push_back(value);
    expect_value = false;
  }
  if (expect_value) {
    throw parse_error(heights.empty() ? "empty height list"
                                      : "trailing ',' in height list",
                      pos + 1);
  }
  return heights;
}

std::vector<int> parse_step_word(const std::string& text, std::size_t pos) {
  std::vector<int> heights = {0};
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    int delta = 0;
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'U':
        delta = 1;
        break;
      case 'F':
        delta = 0;
        break;
      case 'D':
        delta = -1;
        break;
      default:
        throw parse_error(std::string("unknown step '") + c +
                              "', expected U, F or D",
                          pos + 1);
    }
    const int next = heights.back() + delta;
    if (next < 0) throw parse_error("path dips below height 0", pos + 1);
    heights.push_back(next);
  }
  if (heights.back() != 0) {
    throw parse_error("step word ends at height " +
                          std::to_string(heights.back()) + ", expected 0",
                      pos);
  }
  return heights;
}

}  // namespace

MotzkinPath parse_path(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  std::vector<int> heights;
  if (text.compare(pos, 8, "heights:") == 0) {
    heights = parse_height_list(text, pos + 8);
  } else if (text.compare(pos, 6, "steps:") == 0) {
    heights = parse_step_word(text, pos + 6);
  } else {
    heights = parse_height_list(text, pos);
  }
  const std::string violation = height_violation(heights);
  if (!violation.empty()) throw parse_error(violation, pos + 1);
  return MotzkinPath(std::move(heights));
}

std::string to_string(const MotzkinPath& g) {
  std::string out = "heights:";
  for (std::size_t i = 0; i < g.heights().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(g.heights()[i]);
  }
  return out;
}

std::string to_steps(const MotzkinPath& g) {
  std::string out;
  for (int i = 1; i <= g.length(); ++i) {
    const int delta = g.height(i) - g.height(i - 1);
    out += (delta > 0) ? 'U' : (delta < 0) ? 'D' : 'F';
  }
  return out;
}

MotzkinPath concat_paths(const MotzkinPath& a, const MotzkinPath& b) {
  std::vector<int> heights = a.heights();
  heights.insert(heights.end(), b.heights().begin() + 1, b.heights().end());
  return MotzkinPath(std::move(heights));
}

MotzkinPath suspend_path(const MotzkinPath& g) {
  std::vector<int> heights;
  heights.reserve(g.heights().size() + 2);
  heights.push_back(0);
  for (int h : g.heights()) heights.push_back(h + 1);
  heights.push_back(0);
  return MotzkinPath(std::move(heights));
}

bool is_primitive_path(const MotzkinPath& g) {
  if (g.length() < 1) return false;
  for (int i = 1; i < g.length(); ++i) {
    if (g.height(i) == 0) return false;
  }
  return true;
}

MotzkinPath desuspend_path(const MotzkinPath& g) {
  if (!is_primitive_path(g) || g.length() < 2) {
    throw std::invalid_argument(
        "desuspension needs a primitive path of length >= 2");
  }
  std::vector<int> heights;
  heights.reserve(static_cast<std::size_t>(g.length()) - 1);
  for (int i = 1; i < g.length(); ++i) heights.push_back(g.height(i) - 1);
  return MotzkinPath(std::move(heights));
}

std::vector<MotzkinPath> factorize_path(const MotzkinPath& g) {
  std::vector<MotzkinPath> out;
  int previous_zero = 0;
  for (int i = 1; i <= g.length(); ++i) {
    if (g.height(i) != 0) continue;
    std::vector<int> part(g.heights().begin() + previous_zero,
                          g.heights().begin() + i + 1);
    out.emplace_back(std::move(part));
    previous_zero = i;
  }
  return out;
}

namespace {

void enumerate_from(std::vector<int>& heights, int i, int n,
                    std::vector<MotzkinPath>& out) {
  if (i == n) {
    out.emplace_back(heights);
    return;
  }
  // trying the lower step first yields lexicographic order on heights
  for (int delta = -1; delta <= 1; ++delta) {
    const int next = heights[static_cast<std::size_t>(i)] + delta;
    if (next < 0 || next > n - i - 1) continue;
    heights[static_cast<std::size_t>(i) + 1] = next;
    enumerate_from(heights, i + 1, n, out);
  }
}

}  // namespace

std::vector<MotzkinPath> enumerate_paths(int n) {
  if (n < 0) throw std::invalid_argument("path length must be nonnegative");
  std::vector<MotzkinPath> out;
  std::vector<int> heights(static_cast<std::size_t>(n) + 1, 0);
  enumerate_from(heights, 0, n, out);
  return out;
}

std::int64_t motzkin_number(int n) {
  if (n < 0) throw std::invalid_argument("path length must be nonnegative");
  static thread_local std::vector<std::int64_t> memo = {1};
  while (static_cast<int>(memo.size()) <= n) {
    const int m = static_cast<int>(memo.size()) - 1;  // computing M(m+1)
    std::int64_t value = memo[static_cast<std::size_t>(m)];
    for (int k = 0; k + 1 <= m; ++k) {
      std::int64_t product = 0;
      if (__builtin_mul_overflow(memo[static_cast<std::size_t>(k)],
                                 memo[static_cast<std::size_t>(m - 1 - k)],
                                 &product) ||
          __builtin_add_overflow(value, product, &value)) {
        throw std::overflow_error("Motzkin number overflows 64 bits at n = " +
                                  std::to_string(m + 1));
      }
    }
    memo.push_back(value);
  }
  return memo[static_cast<std::size_t>(n)];
}

}  // namespace motzseg
