#pragma once

#include <string>
#include <string_view>

#include "sepsplit/family.hpp"

namespace sepsplit {

// Serialization formats for families.
//   Sets:   line 1 "k=<int>", then one set per line as a comma-separated
//           ascending list of 1-based elements; an empty line is the empty
//           set.
//   Matrix: lines of '0'/'1' of equal length; k = line length, one row per
//           member.
//   Json:   {"k": <int>, "sets": [[...], ...]}.
enum class Format { Sets, Matrix, Json };

// Round trip: parse_family(emit_family(F, f), f) == F for every format.
SetFamily parse_family(std::string_view text, Format format);
std::string emit_family(const SetFamily& family, Format format);

// "sets" / "matrix" / "json" <-> Format; DomainError on unknown names.
Format format_from_name(const std::string& name);
std::string format_name(Format format);

}  // namespace sepsplit
