#pragma once

// Text form of OrbifoldDescriptor.
//
//   # comment (whole lines only; '#' elsewhere is literal, as in sum names)
//   name      = X
//   euler     = 4
//   signature = 0
//   points    = Z2-antipodal, Z2-antipodal
//   b1        = 0            (integer or "unknown")
//   b2+       = 1
//   b2-       = 1
//   h1_order  = 1            (integer, "inf" or "unknown")
//   pi1       = trivial      (trivial | finite(k) | free(a,b,..) | infinite-rf | b1-positive | unknown)
//   pi1_orb   = free(2,2)
//   eta_extra = -1/3         (rational or "unknown")
//   cover     = 2; 2; 0;     (degree; euler; signature; points), repeatable
//
// Keys may appear at most once except cover, and unknown keys are errors.
// When pi1_orb is missing and there are no points, it defaults to pi1.

#include <istream>
#include <string>
#include <string_view>

#include "weyl/orbifold.hpp"

namespace weyl {

/// Throws ParseError (with 1-based line/column) on malformed input and
/// DomainError(InvalidDescriptor) when the parsed values fail validate().
OrbifoldDescriptor parse_descriptor(std::string_view text);
OrbifoldDescriptor read_descriptor_file(const std::string& path);

/// Writes every key; parse_descriptor(render_descriptor(d)) == d.
std::string render_descriptor(const OrbifoldDescriptor& d);

std::string render_points(const std::vector<GroupDescriptor>& points);

}  // namespace weyl
