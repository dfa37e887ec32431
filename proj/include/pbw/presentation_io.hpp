#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pbw/structure.hpp"

namespace pbw {

struct PresentationOverrides {
  std::optional<Field> field;
  std::optional<int> bound;
};

/// Parses a presentation document:
///
///   {"field": "Q" | {"Fp": p},
///    "generators": [{"name": "x1", "degree": 1}, ...],
///    "relations": ["x2*x1 - x1*x2 - x3", ...],
///    "comultiplication": {"y": "1#y + y#1 + x#x"},
///    "degree_bound": 6}
///
/// Omitted images are primitive. Every failure is a ParseError positioned
/// in `text` (line and column 1-based) when the position is known.
Presentation parse_presentation(std::string_view text,
                                const PresentationOverrides& overrides = {});

/// Reads and parses a file; I/O failures throw std::runtime_error.
Presentation load_presentation(const std::string& path,
                               const PresentationOverrides& overrides = {});

/// A canonical text form: identical for presentations that differ only in
/// formatting of the source document.
std::string canonical_form(const Presentation& p);

/// 64-bit FNV-1a of canonical_form(), as 16 hex digits.
std::string digest(const Presentation& p);

/// Parses "Q" or "Fp:<p>". Throws std::invalid_argument.
Field parse_field(std::string_view text);

}  // namespace pbw
