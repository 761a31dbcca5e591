#pragma once

#include <vector>

#include "motzseg/multisegment.hpp"

namespace motzseg {

/// Monoid product of two weight-valid multisegments. The pieces of `a`
/// ending before the seam and the pieces of `b` starting after it carry
/// over (shifted); the copies touching the seam are glued shortest to
/// shortest into an inclusion chain, so the seam column p = a.length()
/// comes out special full. The empty multisegment is the identity.
Multisegment concat(const Multisegment& a, const Multisegment& b);

/// Degree-2 embedding of a weight-valid multisegment into a primitive one:
/// boundary points are pushed outward, inner points shift by one, and the
/// four segments [1,1], [2,n+2], [1,n+1], [n+2,n+2] are added. The two
/// long additions are the suspension markers.
Multisegment suspend(const Multisegment& m);

/// First k points of a flat multisegment: copies beyond k are truncated to
/// [start, k] and n-k surplus full copies of [1,k] are discarded.
Multisegment left_restrict(const Multisegment& m, int k);

/// Last k points, mirrored and shifted down to [1, k].
Multisegment right_restrict(const Multisegment& m, int k);

/// No special full column, hence not a nontrivial concatenation.
/// Requires a flat multisegment of length >= 1.
bool is_primitive(const Multisegment& m);

/// Flat, length >= 2, and carrying both suspension markers [1,n-1] and
/// [2,n]; within the flat class this characterizes images of suspend.
bool is_suspension(const Multisegment& m);

/// Inverts suspend via the double restriction to length n-2.
/// Throws suspension_error when the markers are absent.
Multisegment desuspend(const Multisegment& m);

/// Unique decomposition of a flat multisegment into primitive factors,
/// together with the seam columns (absolute positions) that induced the
/// splits. The identity factors into an empty list.
struct Factorization {
  std::vector<Multisegment> factors;
  std::vector<int> split_columns;
};

Factorization factorize(const Multisegment& m);

}  // namespace motzseg
