#pragma once

#include <string>

#include "ucfam/set_family.hpp"

namespace ucfam {

/// Parses the plain-text family format: an optional first content line
/// `ground: <n>`, then one member per nonblank line as strictly ascending
/// positive integers separated by spaces, with `{}` for ∅ and `#` starting a
/// comment. Without a header the ground size is the largest element
/// mentioned. Throws ParseError with a line-numbered message; family-level
/// violations (duplicate member, element beyond the header's ground) are
/// ParseError too.
SetFamily parse_family(const std::string& text);

/// parse_family over a file's contents. Unreadable files are ParseError.
SetFamily read_family_file(const std::string& path);

/// Canonical text form: `ground: <n>` header, members in canonical order,
/// single spaces, trailing newline. parse_family(write_family(F)) == F, and
/// writing a parsed canonical file reproduces it byte for byte.
std::string write_family(const SetFamily& family);

}  // namespace ucfam
