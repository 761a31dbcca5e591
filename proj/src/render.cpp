#include "motzseg/render.hpp"

#include <algorithm>

namespace motzseg {

namespace {

void trim_right(std::string& line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
}

}  // namespace

std::string render(const Multisegment& m) {
  if (m.length() == 0) return "(empty)\n";
  std::string out;
  for (const auto& row : row_decomposition(m)) {
    std::string line;
    for (const Segment& s : row) {
      if (!line.empty()) line += ' ';
      line += 'o';
      for (int k = s.start(); k < s.end(); ++k) line += "-o";
    }
    out += line;
    out += '\n';
  }
  return out;
}

std::string render(const MotzkinPath& g) {
  const int n = g.length();
  if (n == 0) return "(empty)\n";

  // step i occupies column i-1; ups and flats sit at the level they leave
  // from, downs at the level they land on
  int levels = 1;
  for (int i = 1; i <= n; ++i) {
    const int from = g.height(i - 1);
    const int to = g.height(i);
    levels = std::max(levels, 1 + std::min(from, to));
  }
  std::vector<std::string> grid(static_cast<std::size_t>(levels),
                                std::string(static_cast<std::size_t>(n), ' '));
  for (int i = 1; i <= n; ++i) {
    const int from = g.height(i - 1);
    const int to = g.height(i);
    const char glyph = (to > from) ? '/' : (to < from) ? '\\' : '_';
    grid[static_cast<std::size_t>(std::min(from, to))]
        [static_cast<std::size_t>(i - 1)] = glyph;
  }

  std::string out;
  for (int level = levels - 1; level >= 0; --level) {
    std::string line = grid[static_cast<std::size_t>(level)];
    trim_right(line);
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace motzseg
