#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "motzseg/segment.hpp"

namespace motzseg {

/// Text that does not match one of the literal grammars. `position` is the
/// 1-based character index of the offending token.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " +
                           std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Base class for violations of the combinatorial contracts.
class domain_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The multisegment does not have weight (n+1, ..., n+1).
class weight_error : public domain_error {
  using domain_error::domain_error;
};

/// A column carries more than one cut, so restriction is undefined.
class cut_error : public domain_error {
 public:
  cut_error(int column, int cuts)
      : domain_error("column " + std::to_string(column) + " has " +
                     std::to_string(cuts) + " cuts, at most one allowed"),
        column_(column),
        cuts_(cuts) {}

  int column() const noexcept { return column_; }
  int cuts() const noexcept { return cuts_; }

 private:
  int column_;
  int cuts_;
};

/// The multisegment has a linked triple, so it is not excessive.
class linked_triple_error : public domain_error {
 public:
  explicit linked_triple_error(const LinkedTriple& witness)
      : domain_error("not excessive: linked triple " + to_string(witness)),
        witness_(witness) {}

  const LinkedTriple& witness() const noexcept { return witness_; }

 private:
  LinkedTriple witness_;
};

/// Suspension markers are missing: the multisegment is not a suspension.
class suspension_error : public domain_error {
  using domain_error::domain_error;
};

/// The entries are not the rank tuple of any multisegment; (i, j) is the
/// first position whose reconstructed multiplicity is negative.
class rank_error : public domain_error {
 public:
  rank_error(int i, int j)
      : domain_error("not a rank tuple of a multisegment: multiplicity of [" +
                     std::to_string(i) + "," + std::to_string(j) +
                     "] is negative"),
        i_(i),
        j_(j) {}

  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }

 private:
  int i_;
  int j_;
};

}  // namespace motzseg
