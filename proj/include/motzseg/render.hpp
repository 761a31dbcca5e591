#pragma once

#include <string>

#include "motzseg/motzkin.hpp"
#include "motzseg/multisegment.hpp"

namespace motzseg {

/// n+1 text rows of `o` vertices joined by `-` inside segments, one row per
/// entry of row_decomposition. Requires a weight-valid multisegment.
std::string render(const Multisegment& m);

/// Slash/underscore/backslash mountain profile, one column per step.
std::string render(const MotzkinPath& g);

}  // namespace motzseg
